#include "bcr/mc.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <thread>

namespace bcr::mc {

namespace {

constexpr double kPi = std::numbers::pi;

// Forward-mode dual number with three partial derivatives.
struct Dual {
  double v = 0;
  std::array<double, 3> d{};
  Dual() = default;
  Dual(double x) : v(x) {}  // NOLINT
};

Dual operator+(Dual a, const Dual& b) {
  a.v += b.v;
  for (int i = 0; i < 3; ++i) a.d[i] += b.d[i];
  return a;
}
Dual operator-(Dual a, const Dual& b) {
  a.v -= b.v;
  for (int i = 0; i < 3; ++i) a.d[i] -= b.d[i];
  return a;
}
Dual operator*(const Dual& a, const Dual& b) {
  Dual r;
  r.v = a.v * b.v;
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
Dual operator/(const Dual& a, const Dual& b) {
  Dual r;
  r.v = a.v / b.v;
  for (int i = 0; i < 3; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / (b.v * b.v);
  return r;
}
Dual chain(const Dual& a, double f, double df) {
  Dual r;
  r.v = f;
  for (int i = 0; i < 3; ++i) r.d[i] = df * a.d[i];
  return r;
}
double value(double x) { return x; }
double value(const Dual& x) { return x.v; }
double sqrt_(double x) { return std::sqrt(x); }
Dual sqrt_(const Dual& x) {
  double s = std::sqrt(x.v);
  return chain(x, s, 0.5 / s);
}
double sin_(double x) { return std::sin(x); }
Dual sin_(const Dual& x) { return chain(x, std::sin(x.v), std::cos(x.v)); }
double cos_(double x) { return std::cos(x); }
Dual cos_(const Dual& x) { return chain(x, std::cos(x.v), -std::sin(x.v)); }

// C^1 ramp: 0 below 0, 1 above 1.
template <class T>
T ramp(const T& s) {
  double x = value(s);
  if (x <= 0) return T(0.0);
  if (x >= 1) return T(1.0);
  return s * s * (T(3.0) - T(2.0) * s);
}

template <class T>
T clip01(const T& s) {
  double x = value(s);
  if (x <= 0) return T(0.0);
  if (x >= 1) return T(1.0);
  return s;
}

// The clasp: a point of A_j is pushed to a small sphere around D_j and lifted out of the plane,
// so that the image of A_j links D_j once.
template <class T>
std::array<T, 5> clasp(const std::array<T, 3>& a, const Eigen::Vector3d& c, const Eigen::Vector3d& p,
                       const WheelGeometry& g) {
  const double e = g.eps, R = g.disk_radius();
  const double h = g.height_ratio * R, kap = g.reach_ratio * R;
  std::array<T, 3> d;
  for (int i = 0; i < 3; ++i) d[i] = a[i] - T(c[i]);
  T r = sqrt_(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  std::array<T, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = d[i] / r;
  T s = (r - T(e / 2)) / T(e / 6);
  T up = ramp(s / T(0.1)) * (T(1.0) - ramp((s - T(0.9)) / T(0.1)));
  T trav = ramp((s - T(0.1)) / T(0.15)) * (T(1.0) - ramp((s - T(0.75)) / T(0.15)));
  T phi = T(2 * kPi) * ramp(clip01((s - T(0.25)) / T(0.5)));
  std::array<T, 5> out;
  for (int i = 0; i < 3; ++i) out[i] = (T(1.0) - trav) * a[i] + trav * (T(p[i]) + T(kap) * v[i]);
  out[3] = T(h) * up * cos_(phi);
  out[4] = T(h) * up * sin_(phi);
  return out;
}

class Plane : public Embedding {
 public:
  explicit Plane(int n) : n_(n) {}
  int n() const override { return n_; }
  std::string name() const override { return "standard plane"; }
  Vec eval(const Vec& x, Mat* J) const override {
    Vec y = Vec::Zero(n_ + 2);
    y.head(n_) = x;
    if (J) {
      *J = Mat::Zero(n_ + 2, n_);
      J->topRows(n_).setIdentity();
    }
    return y;
  }

 private:
  int n_;
};

class Wheel : public Embedding {
 public:
  Wheel(const WheelGeometry& g, std::set<int> unclasped) : g_(g), unclasped_(std::move(unclasped)) {}
  int n() const override { return 3; }
  std::string name() const override { return "wheel k=" + std::to_string(g_.k); }
  Vec eval(const Vec& x, Mat* J) const override {
    for (int j = 1; j <= g_.k; ++j) {
      if (unclasped_.count(j)) continue;
      Eigen::Vector3d c = g_.annulus_center(j);
      double r = (x.head<3>() - c).norm();
      if (r < g_.inner_radius() || r > g_.outer_radius()) continue;
      Eigen::Vector3d p = g_.disk_center(j);
      Vec y(5);
      if (!J) {
        auto o = clasp<double>({x[0], x[1], x[2]}, c, p, g_);
        for (int i = 0; i < 5; ++i) y[i] = o[i];
        return y;
      }
      std::array<Dual, 3> a;
      for (int i = 0; i < 3; ++i) {
        a[i].v = x[i];
        a[i].d[i] = 1;
      }
      auto o = clasp<Dual>(a, c, p, g_);
      J->resize(5, 3);
      for (int i = 0; i < 5; ++i) {
        y[i] = o[i].v;
        for (int k = 0; k < 3; ++k) (*J)(i, k) = o[i].d[k];
      }
      return y;
    }
    return Plane(3).eval(x, J);
  }

 private:
  WheelGeometry g_;
  std::set<int> unclasped_;
};

Vec random_unit(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> nd;
  Vec v(m);
  do {
    for (int i = 0; i < m; ++i) v[i] = nd(rng);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

double uniform(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Appends the rows F^T dX / |X| of one Gauss factor.
void append_rows(Mat& M, int row0, const Vec& X, const Mat& dX) {
  double nx = X.norm();
  Mat F = tangent_frame(X / nx);
  M.middleRows(row0, F.cols()) = F.transpose() * dX / nx;
}

}  // namespace

Eigen::Vector3d WheelGeometry::disk_center(int j) const { return {static_cast<double>(j), 0, 0}; }
Eigen::Vector3d WheelGeometry::annulus_center(int j) const { return {static_cast<double>(j % k + 1), 0, 0}; }

void validate_geometry(const WheelGeometry& g) {
  if (g.k < 2) throw ValidationError("wheel embedding needs k >= 2");
  if (g.k > max_k_wheel()) throw ResourceError("k exceeds the wheel bound");
  if (!(g.eps >= 0.01 && g.eps <= 0.25))
    throw ValidationError("eps must lie in the stable range [0.01, 0.25]");
  if (!(g.height_ratio > 0 && g.height_ratio <= 0.5) || !(g.reach_ratio > 0 && g.reach_ratio < 1))
    throw ValidationError("clasp ratios out of range");
}

std::shared_ptr<const Embedding> standard_plane(int n) {
  if (n < 2) throw ValidationError("source dimension must be at least 2");
  return std::make_shared<Plane>(n);
}

std::shared_ptr<const Embedding> wheel_embedding(const WheelGeometry& g, const std::set<int>& unclasped) {
  validate_geometry(g);
  for (int j : unclasped)
    if (j < 1 || j > g.k) throw ValidationError("crossing index out of range");
  return std::make_shared<Wheel>(g, unclasped);
}

void validate_config(const MCConfig& c) {
  if (c.samples < 1) throw ValidationError("sample count must be positive");
  if (!(c.delta > 0)) throw ValidationError("cutoff delta must be positive");
  if (c.batches < 2) throw ValidationError("at least two batches are needed for an error bar");
  if (c.samples < static_cast<std::uint64_t>(c.batches)) throw ValidationError("fewer samples than batches");
  if (!(c.scale > 0)) throw ValidationError("scale must be positive");
  if (c.threads < 0) throw ValidationError("thread count must be nonnegative");
}

Vec gauss_direction(const Vec& a, const Vec& b) {
  Vec x = b - a;
  double nx = x.norm();
  if (nx == 0) throw ValidationError("coincident points have no Gauss direction");
  return x / nx;
}

Mat tangent_frame(const Vec& u) {
  int m = static_cast<int>(u.size());
  Eigen::HouseholderQR<Mat> qr{Mat(u)};
  Mat Q = qr.householderQ() * Mat::Identity(m, m);
  if (Q.col(0).dot(u) < 0) Q.col(0) = -Q.col(0);
  if (Q.determinant() < 0) Q.col(1) = -Q.col(1);
  return Q.rightCols(m - 1);
}

double sphere_volume(int p) { return 2 * std::pow(kPi, (p + 1) / 2.0) / std::tgamma((p + 1) / 2.0); }

double form_density(const std::vector<Factor>& factors, const Embedding& psi, const std::vector<Vec>& knot,
                    const std::vector<Vec>& ambient) {
  const int n = psi.n();
  const int nk = static_cast<int>(knot.size()), na = static_cast<int>(ambient.size());
  const int dims = nk * n + na * (n + 2);
  int deg = 0;
  for (const auto& f : factors) {
    deg += f.kind == EdgeKind::Theta ? n + 1 : n - 1;
    if (f.from < 0 || f.to < 0 || f.from >= nk + na || f.to >= nk + na || f.from == f.to)
      throw ValidationError("factor references a missing point");
    if (f.kind == EdgeKind::Eta && (f.from >= nk || f.to >= nk))
      throw ValidationError("eta factors join knot points only");
  }
  if (deg != dims)
    throw ValidationError("form degree " + std::to_string(deg) + " does not match configuration dimension " +
                          std::to_string(dims));
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].kind == factors[j].kind &&
          std::minmax(factors[i].from, factors[i].to) == std::minmax(factors[j].from, factors[j].to))
        return 0.0;
  std::vector<Vec> P(nk + na);
  std::vector<Mat> J(nk);
  for (int i = 0; i < nk; ++i) {
    if (knot[i].size() != n) throw ValidationError("knot point has the wrong dimension");
    P[i] = psi.eval(knot[i], &J[i]);
  }
  for (int i = 0; i < na; ++i) {
    if (ambient[i].size() != n + 2) throw ValidationError("ambient point has the wrong dimension");
    P[nk + i] = ambient[i];
  }
  auto col = [&](int point) { return point < nk ? point * n : nk * n + (point - nk) * (n + 2); };
  Mat M(dims, dims);
  int row = 0;
  double vol = 1;
  for (const auto& f : factors) {
    if (f.kind == EdgeKind::Theta) {
      Vec X = P[f.to] - P[f.from];
      if (X.norm() == 0) throw ValidationError("coincident points in a theta factor");
      Mat dX = Mat::Zero(n + 2, dims);
      auto block = [&](int point, double s) {
        if (point < nk) dX.middleCols(col(point), n) += s * J[point];
        else dX.middleCols(col(point), n + 2) += s * Mat::Identity(n + 2, n + 2);
      };
      block(f.to, 1);
      block(f.from, -1);
      append_rows(M, row, X, dX);
      row += n + 1;
      vol *= sphere_volume(n + 1);
    } else {
      Vec X = knot[f.to] - knot[f.from];
      if (X.norm() == 0) throw ValidationError("coincident points in an eta factor");
      Mat dX = Mat::Zero(n, dims);
      dX.middleCols(col(f.to), n) += Mat::Identity(n, n);
      dX.middleCols(col(f.from), n) -= Mat::Identity(n, n);
      append_rows(M, row, X, dX);
      row += n - 1;
      vol *= sphere_volume(n - 1);
    }
  }
  return M.partialPivLu().determinant() / vol;
}

std::vector<Factor> factors_of(const JacobiDiagram& d) {
  if (d.num_internal() != 0) throw ValidationError("form density is implemented for chord diagrams only");
  std::vector<Factor> f;
  for (const Edge& e : d.edges) f.push_back({e.kind, e.src, e.dst});
  return f;
}

double form_density(const JacobiDiagram& d, const Embedding& psi, const std::vector<Vec>& knot) {
  if (static_cast<int>(knot.size()) != d.num_vertices()) throw ValidationError("one knot point per vertex is required");
  return form_density(factors_of(d), psi, knot, {});
}

std::vector<Estimate> run_batches(const MCConfig& cfg, int quantities, const std::function<Sampler()>& make) {
  validate_config(cfg);
  const int B = cfg.batches;
  struct Acc {
    std::vector<double> sum, sq;
    std::uint64_t n = 0, eff = 0;
  };
  std::vector<Acc> acc(B);
  auto work = [&](int b) {
    Acc& a = acc[b];
    a.sum.assign(quantities, 0);
    a.sq.assign(quantities, 0);
    a.n = cfg.samples / B + (static_cast<std::uint64_t>(b) < cfg.samples % B ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(b)};
    std::mt19937_64 rng(seq);
    Sampler f = make();
    std::vector<double> v(quantities);
    for (std::uint64_t i = 0; i < a.n; ++i) {
      std::fill(v.begin(), v.end(), 0.0);
      if (f(rng, v)) ++a.eff;
      for (int q = 0; q < quantities; ++q) {
        a.sum[q] += v[q];
        a.sq[q] += v[q] * v[q];
      }
    }
  };
  int nt = cfg.threads > 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min(nt, B);
  if (nt == 1) {
    for (int b = 0; b < B; ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        try {
          for (int b = t; b < B; b += nt) work(b);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Estimate> out(quantities);
  for (int q = 0; q < quantities; ++q) {
    Estimate& e = out[q];
    double total = 0, sq = 0;
    for (const auto& a : acc) {
      total += a.sum[q];
      sq += a.sq[q];
      e.batch_means.push_back(a.sum[q] / static_cast<double>(a.n));
      e.n_effective += a.eff;
    }
    e.samples = cfg.samples;
    double N = static_cast<double>(cfg.samples);
    e.mean = total / N;
    double ss = 0;
    for (int b = 0; b < B; ++b) {
      double dm = e.batch_means[b] - e.mean;
      ss += static_cast<double>(acc[b].n) * dm * dm;
    }
    e.stderr_ = std::sqrt(ss / ((B - 1) * N));
    // Heavy tails show up as disagreement between the batch and the per-sample error bars.
    double naive = std::sqrt(std::max(0.0, sq / N - e.mean * e.mean) / N);
    e.variance_warning = !std::isfinite(e.mean) || !std::isfinite(e.stderr_) ||
                         (naive > 0 && (e.stderr_ > 3 * naive || e.stderr_ < naive / 3));
  }
  return out;
}

Estimate linking_estimate(const HopfPair& h, const MCConfig& cfg) {
  const double scale = 2 * kPi * sphere_volume(3) / sphere_volume(4);
  auto make = [&]() -> Sampler {
    return [&h, scale, delta = cfg.delta](std::mt19937_64& rng, std::vector<double>& out) {
      double s = 2 * kPi * uniform(rng);
      Vec a = Vec::Zero(5), ta = Vec::Zero(5);
      a << std::cos(s), std::sin(s), 0, 0, 0;
      ta << -std::sin(s), std::cos(s), 0, 0, 0;
      if (h.reverse_circle) ta = -ta;
      Vec z = random_unit(rng, 4);
      Mat Fz = tangent_frame(z);  // 4 x 3
      // The 3-sphere lives in coordinates (x1, x3, x4, x5).
      Mat E = Mat::Zero(5, 4);
      E(0, 0) = 1;
      E(2, 1) = 1;
      E(3, 2) = 1;
      E(4, 3) = 1;
      Vec b = E * z;
      b[0] += 1;
      b[2] += h.separation;
      Vec X = b - a;
      if (X.norm() < delta) return false;
      // Configuration space oriented as S^3 x S^1.
      Mat dX(5, 4);
      dX.leftCols(3) = E * Fz;
      dX.col(3) = -ta;
      Mat M(4, 4);
      append_rows(M, 0, X, dX);
      out[0] = M.determinant() * scale;
      return true;
    };
  };
  return run_batches(cfg, 1, make).front();
}

namespace {

// sin^2 on [0, pi/2] by rejection.
double sample_sin2(std::mt19937_64& rng) {
  while (true) {
    double f = uniform(rng) * kPi / 2;
    double s = std::sin(f);
    if (uniform(rng) < s * s) return f;
  }
}

}  // namespace

Estimate phi_difference_estimate(int k, int j, double eps, const MCConfig& cfg, bool swapped,
                                 const WheelGeometry* geometry) {
  WheelGeometry g = geometry ? *geometry : WheelGeometry{};
  g.k = k;
  g.eps = eps;
  validate_geometry(g);
  if (j < 1 || j > k) throw ValidationError("crossing index out of range");
  auto clasped = wheel_embedding(g, {});
  auto open = wheel_embedding(g, {j});
  const Embedding& first = swapped ? *open : *clasped;
  const Embedding& second = swapped ? *clasped : *open;
  const Eigen::Vector3d c = g.annulus_center(j), p = g.disk_center(j);
  const double R = g.disk_radius(), h = g.height_ratio * R, kap = g.reach_ratio * R;
  const double r1 = g.inner_radius(), r2 = g.outer_radius();
  const double volA = 4.0 / 3 * kPi * (r2 * r2 * r2 - r1 * r1 * r1);
  const double volD = 4.0 / 3 * kPi * R * R * R;
  const double mix = 0.5;
  const double norm = sphere_volume(4) * sphere_volume(2);
  auto make = [&]() -> Sampler {
    return [&](std::mt19937_64& rng, std::vector<double>& out) {
      Vec v = random_unit(rng, 3);
      double r = std::cbrt(r1 * r1 * r1 + uniform(rng) * (r2 * r2 * r2 - r1 * r1 * r1));
      Vec a = c + v * r;
      Vec x0 = p + kap * v;
      Vec d;
      bool near = uniform(rng) < mix;
      if (near) {
        Vec dir = random_unit(rng, 3);
        double rho = h * std::tan(sample_sin2(rng));
        d = x0 + dir * rho;
      } else {
        d = p + R * std::cbrt(uniform(rng)) * random_unit(rng, 3);
      }
      if ((d - p).norm() > R) return true;  // outside D_j: contributes 0
      double rr = (d - x0).norm();
      double gq = 1 / std::pow(rr * rr + h * h, 2) / (kPi * kPi / h);
      double q = (1 - mix) / volD + mix * gq;
      Vec Y = c - a;
      if (Y.norm() < cfg.delta) return false;
      Mat dY = Mat::Zero(3, 6);
      dY.leftCols(3) = -Mat::Identity(3, 3);
      double val[2];
      const Embedding* emb[2] = {&first, &second};
      for (int e = 0; e < 2; ++e) {
        Mat Ja, Jd;
        Vec X = emb[e]->eval(a, &Ja) - emb[e]->eval(d, &Jd);
        if (X.norm() < cfg.delta) return false;
        Mat dX(5, 6);
        dX.leftCols(3) = Ja;
        dX.rightCols(3) = -Jd;
        Mat M(6, 6);
        append_rows(M, 0, X, dX);
        append_rows(M, 4, Y, dY);
        val[e] = M.partialPivLu().determinant() / norm;
      }
      out[0] = (val[0] - val[1]) * volA / q;
      return true;
    };
  };
  return run_batches(cfg, 1, make).front();
}

std::vector<Factor> z2_internal_factors() {
  constexpr auto T = EdgeKind::Theta;
  return {{T, 0, 3}, {T, 1, 3}, {T, 2, 3}, {EdgeKind::Eta, 0, 1}};
}
std::vector<Factor> z2_triangle_factors() {
  constexpr auto T = EdgeKind::Theta;
  constexpr auto H = EdgeKind::Eta;
  return {{T, 0, 2}, {T, 1, 3}, {H, 0, 1}, {H, 1, 2}};
}
std::vector<Factor> z2_wheel_factors() {
  constexpr auto T = EdgeKind::Theta;
  constexpr auto H = EdgeKind::Eta;
  return {{T, 0, 2}, {T, 1, 3}, {H, 0, 1}, {H, 2, 3}};
}

namespace {

// Mixture proposal on R^m: independent Cauchy coordinates or uniform in one of the balls.
struct Proposal {
  int m;
  double scale;
  std::vector<std::pair<Vec, double>> balls;
  double broad = 1.0;

  Vec draw(std::mt19937_64& rng) const {
    double u = uniform(rng);
    if (balls.empty() || u < broad) {
      Vec x(m);
      for (int i = 0; i < m; ++i) x[i] = scale * std::tan(kPi * (uniform(rng) - 0.5));
      return x;
    }
    auto idx = std::min<std::size_t>(balls.size() - 1, static_cast<std::size_t>((u - broad) / (1 - broad) * balls.size()));
    const auto& [c, r] = balls[idx];
    return c + r * std::pow(uniform(rng), 1.0 / m) * random_unit(rng, m);
  }

  double density(const Vec& x) const {
    double cau = 1;
    for (int i = 0; i < m; ++i) cau *= 1 / (kPi * scale * (1 + (x[i] / scale) * (x[i] / scale)));
    if (balls.empty()) return cau;
    double q = broad * cau;
    for (const auto& [c, r] : balls) {
      if ((x - c).norm() > r) continue;
      double vol = std::pow(kPi, m / 2.0) / std::tgamma(m / 2.0 + 1) * std::pow(r, m);
      q += (1 - broad) / balls.size() / vol;
    }
    return q;
  }
};

bool too_close(const std::vector<Factor>& fs, const Embedding& psi, const std::vector<Vec>& knot,
               const std::vector<Vec>& ambient, double delta) {
  int nk = static_cast<int>(knot.size());
  auto P = [&](int i) { return i < nk ? psi.eval(knot[i]) : ambient[i - nk]; };
  for (const auto& f : fs) {
    double d = f.kind == EdgeKind::Theta ? (P(f.to) - P(f.from)).norm() : (knot[f.to] - knot[f.from]).norm();
    if (d < delta) return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Vec, double>> wheel_regions(const WheelGeometry& g) {
  validate_geometry(g);
  std::vector<std::pair<Vec, double>> r;
  for (int i = 1; i <= g.k; ++i) {
    r.push_back({g.annulus_center(i), g.outer_radius()});
    r.push_back({g.disk_center(i), 2 * g.disk_radius()});
  }
  return r;
}

Z2Terms z2_estimate(const Embedding& psi, const MCConfig& cfg, const std::vector<std::pair<Vec, double>>& regions) {
  const int n = psi.n();
  if (n != 3) throw ValidationError("z2 is implemented for n = 3");
  Proposal knotp{n, cfg.scale, regions, regions.empty() ? 1.0 : 0.5};
  std::vector<std::pair<Vec, double>> lifted;
  for (const auto& [c, r] : regions) {
    Vec cc = Vec::Zero(n + 2);
    cc.head(n) = c;
    lifted.push_back({cc, r});
  }
  Proposal ambp{n + 2, cfg.scale, lifted, lifted.empty() ? 1.0 : 0.5};
  const auto fi = z2_internal_factors(), ft = z2_triangle_factors(), fw = z2_wheel_factors();
  auto make = [&]() -> Sampler {
    return [&](std::mt19937_64& rng, std::vector<double>& out) {
      bool all = true;
      {
        std::vector<Vec> x(3);
        double w = 1;
        for (auto& p : x) {
          p = knotp.draw(rng);
          w /= knotp.density(p);
        }
        Vec y = ambp.draw(rng);
        w /= ambp.density(y);
        if (too_close(fi, psi, x, {y}, cfg.delta)) {
          all = false;
        } else {
          double f = form_density(fi, psi, x, {y});
          if (cfg.antithetic) {
            Vec ym = y;
            ym[3] = -ym[3];
            f = too_close(fi, psi, x, {ym}, cfg.delta) ? f / 2 : (f + form_density(fi, psi, x, {ym})) / 2;
          }
          out[1] = 0.5 * f * w;
        }
      }
      for (int t = 0; t < 2; ++t) {
        const auto& fs = t == 0 ? ft : fw;
        std::vector<Vec> x(4);
        double w = 1;
        for (auto& p : x) {
          p = knotp.draw(rng);
          w /= knotp.density(p);
        }
        if (too_close(fs, psi, x, {}, cfg.delta)) {
          all = false;
          continue;
        }
        out[2 + t] = (t == 0 ? -0.5 : 0.25) * form_density(fs, psi, x, {}) * w;
      }
      out[0] = out[1] + out[2] + out[3];
      return all;
    };
  };
  auto e = run_batches(cfg, 4, make);
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace bcr::mc
