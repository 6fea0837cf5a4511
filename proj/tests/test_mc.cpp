#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcr/algebra.hpp"
#include "bcr/errors.hpp"
#include "bcr/mc.hpp"

#include <cmath>
#include <numbers>

using namespace bcr;
using namespace bcr::mc;

namespace {

// A generic smooth embedding R^n -> R^(n+2), Jacobian by central differences.
class Bumpy : public Embedding {
 public:
  explicit Bumpy(int n) : n_(n) {}
  int n() const override { return n_; }
  std::string name() const override { return "bumpy"; }
  Vec eval(const Vec& x, Mat* J) const override {
    Vec y = f(x);
    if (J) {
      J->resize(n_ + 2, n_);
      for (int i = 0; i < n_; ++i) {
        Vec a = x, b = x;
        a[i] += 1e-6;
        b[i] -= 1e-6;
        J->col(i) = (f(a) - f(b)) / 2e-6;
      }
    }
    return y;
  }

 private:
  Vec f(const Vec& x) const {
    Vec y(n_ + 2);
    double s = x.squaredNorm();
    for (int i = 0; i < n_; ++i) y[i] = x[i] + 0.3 * std::sin(x[(i + 1) % n_]);
    y[n_] = std::exp(-s) * std::cos(2 * x[0]);
    y[n_ + 1] = std::exp(-s) * std::sin(x[0] + x[n_ - 1]);
    return y;
  }
  int n_;
};

class Mirrored : public Embedding {
 public:
  explicit Mirrored(const Embedding& e) : e_(e) {}
  int n() const override { return e_.n(); }
  std::string name() const override { return "mirror"; }
  Vec eval(const Vec& x, Mat* J) const override {
    Vec y = e_.eval(x, J);
    y[n() + 1] = -y[n() + 1];
    if (J) J->row(n() + 1) *= -1;
    return y;
  }

 private:
  const Embedding& e_;
};

std::vector<Vec> random_points(std::mt19937_64& rng, int count, int dim, double spread = 1.0) {
  std::normal_distribution<double> nd(0, spread);
  std::vector<Vec> p(count, Vec(dim));
  for (auto& v : p)
    for (int i = 0; i < dim; ++i) v[i] = nd(rng);
  return p;
}

Factor flip(Factor f) { return {f.kind, f.to, f.from}; }

const auto T = EdgeKind::Theta;
const auto H = EdgeKind::Eta;

}  // namespace

TEST_CASE("sphere volumes and frames") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * std::numbers::pi));
  CHECK(sphere_volume(2) == doctest::Approx(4 * std::numbers::pi));
  CHECK(sphere_volume(3) == doctest::Approx(2 * std::numbers::pi * std::numbers::pi));
  CHECK(sphere_volume(4) == doctest::Approx(8 * std::numbers::pi * std::numbers::pi / 3));
  std::mt19937_64 rng(1);
  for (int m = 2; m <= 6; ++m) {
    Vec u = random_points(rng, 1, m)[0];
    u.normalize();
    Mat F = tangent_frame(u);
    Mat full(m, m);
    full.col(0) = u;
    full.rightCols(m - 1) = F;
    CHECK((full.transpose() * full - Mat::Identity(m, m)).norm() < 1e-12);
    CHECK(full.determinant() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(gauss_direction(Vec::Zero(3), Vec::Zero(3)), ValidationError);
}

TEST_CASE("pointwise sign identities") {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 4; ++n) {
    Bumpy psi(n);
    Mirrored mirror(psi);
    std::vector<Factor> wheel = {{T, 0, 1}, {T, 2, 3}, {H, 1, 2}, {H, 3, 0}};
    std::vector<Factor> internal = {{T, 0, 3}, {T, 1, 3}, {T, 2, 3}, {H, 0, 1}};
    // the internal-vertex form has the right degree only for n = 3
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_points(rng, 4, n, 0.7);
      double base = form_density(wheel, psi, x, {});
      if (std::abs(base) < 1e-8) continue;
      double sn = n % 2 ? -1 : 1;
      auto t = wheel;
      t[0] = flip(t[0]);
      CHECK(form_density(t, psi, x, {}) == doctest::Approx(sn * base).epsilon(1e-6));  // (-1)^(n+2)
      auto e = wheel;
      e[2] = flip(e[2]);
      CHECK(form_density(e, psi, x, {}) == doctest::Approx(sn * base).epsilon(1e-6));  // (-1)^n
      auto s = wheel;
      std::swap(s[0], s[1]);
      CHECK(form_density(s, psi, x, {}) == doctest::Approx(-sn * base).epsilon(1e-6));  // (-1)^((n+1)^2)
      auto m = wheel;
      std::swap(m[1], m[2]);
      CHECK(form_density(m, psi, x, {}) == doctest::Approx(-sn * base).epsilon(1e-6));  // (-1)^((n+1)(n-1))
      // mirroring one ambient axis: each theta factor composes with a reflection of S^(n+1)
      CHECK(form_density(wheel, mirror, x, {}) == doctest::Approx(base).epsilon(1e-6));
      if (n == 3) {
        auto y = random_points(rng, 1, 5, 0.7);
        double b = form_density(internal, psi, {x[0], x[1], x[2]}, y);
        Vec my = y[0];
        my[4] = -my[4];
        // three reflected theta factors and one reflected ambient coordinate
        CHECK(form_density(internal, mirror, {x[0], x[1], x[2]}, {my}) == doctest::Approx(b).epsilon(1e-6));
        auto r = internal;
        std::swap(r[0], r[1]);
        CHECK(form_density(r, psi, {x[0], x[1], x[2]}, y) == doctest::Approx(b).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("degenerate diagrams vanish exactly") {
  std::mt19937_64 rng(4);
  auto psi = wheel_embedding({2, 0.1});
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_points(rng, 4, 3, 0.5);
    auto y = random_points(rng, 2, 5, 0.5);
    // Gamma_4: an eta 2-cycle
    CHECK(form_density(degree2_diagram(4), *psi, x) == 0.0);
    // Gamma_5: two knot points, two ambient points, theta 2-cycle between the ambient points
    std::vector<Factor> g5 = {{T, 0, 2}, {T, 1, 3}, {T, 2, 3}, {T, 3, 2}};
    CHECK(form_density(g5, *psi, {x[0], x[1]}, y) == 0.0);
  }
}

TEST_CASE("plane densities vanish for chord terms") {
  std::mt19937_64 rng(5);
  auto plane = standard_plane(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_points(rng, 4, 3);
    CHECK(form_density(z2_wheel_factors(), *plane, x, {}) == 0.0);
    CHECK(form_density(z2_triangle_factors(), *plane, x, {}) == 0.0);
  }
}

TEST_CASE("form degree is checked") {
  auto plane = standard_plane(3);
  std::vector<Vec> x(3, Vec::Zero(3));
  CHECK_THROWS_AS(form_density({{T, 0, 1}}, *plane, x, {}), ValidationError);
  CHECK_THROWS_AS(form_density({{H, 0, 5}}, *plane, x, {}), ValidationError);
}

TEST_CASE("wheel embedding Jacobian matches finite differences") {
  WheelGeometry g{3, 0.2};
  auto psi = wheel_embedding(g);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int j = 1 + trial % 3;
    Vec v = random_points(rng, 1, 3)[0].normalized();
    double r = g.inner_radius() + u(rng) * (g.outer_radius() - g.inner_radius());
    Vec x = g.annulus_center(j) + r * v;
    Mat J;
    psi->eval(x, &J);
    Mat fd(5, 3);
    for (int i = 0; i < 3; ++i) {
      Vec a = x, b = x;
      a[i] += 1e-7;
      b[i] -= 1e-7;
      fd.col(i) = (psi->eval(a) - psi->eval(b)) / 2e-7;
    }
    if ((J - fd).norm() < 1e-4 * (1 + J.norm())) ++tested;
  }
  CHECK(tested >= 195);  // a few samples straddle the C^1 seams of the profile
  // standard outside the annuli
  Vec far(3);
  far << 0.3, 0.7, -2.0;
  Vec img = psi->eval(far);
  CHECK(img.head(3).isApprox(far));
  CHECK(img.tail(2).norm() == 0.0);
}

TEST_CASE("geometry and config validation") {
  CHECK_THROWS_AS(wheel_embedding({2, 0.5}), ValidationError);
  CHECK_THROWS_AS(wheel_embedding({2, 0.1}, {3}), ValidationError);
  MCConfig c;
  c.samples = 0;
  CHECK_THROWS_AS(validate_config(c), ValidationError);
  c = {};
  c.delta = 0;
  CHECK_THROWS_AS(validate_config(c), ValidationError);
  c = {};
  c.batches = 1;
  CHECK_THROWS_AS(validate_config(c), ValidationError);
}

TEST_CASE("estimators are deterministic and independent of the thread count") {
  MCConfig c;
  c.samples = 20000;
  c.threads = 1;
  Estimate a = linking_estimate({}, c);
  c.threads = 3;
  Estimate b = linking_estimate({}, c);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.batch_means == b.batch_means);
  c.seed = 43;
  CHECK(linking_estimate({}, c).mean != a.mean);
}

TEST_CASE("Hopf linking") {
  MCConfig c;
  c.samples = 200000;
  Estimate e = linking_estimate({}, c);
  CHECK(std::abs(e.mean - 1) < 4 * e.stderr_);
  CHECK(e.stderr_ < 0.01);
  HopfPair rev{0, true};
  CHECK(linking_estimate(rev, c).mean == doctest::Approx(-e.mean));
  // pulled apart along x3 the two spheres no longer link
  Estimate apart = linking_estimate({3.0, false}, c);
  CHECK(std::abs(apart.mean) < 4 * apart.stderr_ + 1e-3);
}

TEST_CASE("linking is robust to the cutoff") {
  MCConfig c;
  c.samples = 100000;
  Estimate a = linking_estimate({}, c);
  c.delta /= 2;
  Estimate b = linking_estimate({}, c);
  CHECK(std::abs(a.mean - b.mean) < a.stderr_);
}

TEST_CASE("standard error scales like 1/sqrt(N)") {
  MCConfig c;
  c.samples = 50000;
  double s1 = linking_estimate({}, c).stderr_;
  c.samples = 100000;
  double s2 = linking_estimate({}, c).stderr_;
  CHECK(s2 / s1 == doctest::Approx(1 / std::sqrt(2.0)).epsilon(0.25));
}

TEST_CASE("phi difference") {
  MCConfig c;
  c.samples = 200000;
  Estimate e = phi_difference_estimate(2, 1, 0.1, c);
  CHECK(std::abs(e.mean - 1) < 4 * e.stderr_ + 0.01);
  Estimate s = phi_difference_estimate(2, 1, 0.1, c, true);
  CHECK(s.mean == -e.mean);
  Estimate h = phi_difference_estimate(2, 1, 0.05, c);
  CHECK(std::abs(h.mean - e.mean) < e.stderr_);
  Estimate k3 = phi_difference_estimate(3, 2, 0.1, c);
  CHECK(std::abs(k3.mean - 1) < 4 * k3.stderr_ + 0.01);
  CHECK_THROWS_AS(phi_difference_estimate(2, 3, 0.1, c), ValidationError);
  CHECK_THROWS_AS(phi_difference_estimate(2, 1, 0.3, c), ValidationError);
}

TEST_CASE("z2 on the standard plane") {
  MCConfig c;
  c.samples = 20000;
  Z2Terms z = z2_estimate(*standard_plane(3), c);
  CHECK(std::abs(z.total.mean) <= 2 * z.total.stderr_ + 1e-12);
  CHECK(z.triangle_term.mean == 0.0);
  CHECK(z.wheel_term.mean == 0.0);
  c.antithetic = true;
  Z2Terms a = z2_estimate(*standard_plane(3), c);
  CHECK(std::abs(a.total.mean) <= 2 * a.total.stderr_ + 1e-12);
}
