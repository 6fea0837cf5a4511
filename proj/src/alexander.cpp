#include "bcr/alexander.hpp"
#include "bcr/errors.hpp"

#include <functional>
#include <numeric>

namespace bcr {

int RibbonPresentation::crossing_count() const {
  int n = 0;
  for (const auto& b : bands) n += static_cast<int>(b.piercings.size());
  return n;
}

PresentationReport validate_presentation(const RibbonPresentation& p) {
  PresentationReport r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.violations.push_back(std::move(m));
  };
  if (p.disks < 1) {
    fail("at least one disk is required");
    return r;
  }
  if (p.based < 0 || p.based >= p.disks) fail("based disk out of range");
  auto in_range = [&](int d) { return d >= 0 && d < p.disks; };
  std::vector<int> parent(p.disks);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < p.bands.size(); ++i) {
    const Band& b = p.bands[i];
    std::string tag = "band " + std::to_string(i);
    if (!in_range(b.from) || !in_range(b.to)) {
      fail(tag + " attaches to a missing disk");
      continue;
    }
    if (b.from == b.to) fail(tag + " has both ends on one disk");
    for (const Piercing& q : b.piercings) {
      if (!in_range(q.disk)) fail(tag + " pierces a missing disk");
      if (q.sign != 1 && q.sign != -1) fail(tag + " has a piercing sign other than +1/-1");
    }
    int a = find(b.from), c = find(b.to);
    if (a == c && b.from != b.to) fail(tag + " closes a cycle of bands");
    parent[a] = c;
  }
  if (r.ok) {
    for (int d = 1; d < p.disks; ++d)
      if (find(d) != find(0)) {
        fail("disks and bands do not form a connected tree");
        break;
      }
  }
  return r;
}

static void require_valid(const RibbonPresentation& p) {
  auto r = validate_presentation(p);
  if (!r.ok) throw ValidationError("invalid presentation: " + r.violations.front());
}

GroupPresentation knot_group(const RibbonPresentation& p) {
  require_valid(p);
  GroupPresentation g;
  g.generators = p.disks;
  for (const Band& b : p.bands) {
    // x_b (w x_a w^-1)^-1 = x_b w x_a^-1 w^-1
    Word rel{{b.to, 1}};
    for (const auto& q : b.piercings) rel.push_back({q.disk, q.sign});
    rel.push_back({b.from, -1});
    for (auto it = b.piercings.rbegin(); it != b.piercings.rend(); ++it) rel.push_back({it->disk, -it->sign});
    g.relators.push_back(std::move(rel));
  }
  return g;
}

Laurent fox_derivative(const Word& w, int generator, int generator_count) {
  if (generator < 0 || generator >= generator_count) throw ValidationError("unknown generator");
  Laurent res;
  int pre = 0;
  for (auto [x, e] : w) {
    if (x < 0 || x >= generator_count) throw ValidationError("word uses an unknown generator");
    if (e != 1 && e != -1) throw ValidationError("word exponents must be +1 or -1");
    if (x == generator) res += e == 1 ? t_pow(pre) : -t_pow(pre - 1);
    pre += e;
  }
  return res;
}

std::vector<std::vector<Laurent>> alexander_matrix(const RibbonPresentation& p, int deleted) {
  auto g = knot_group(p);
  if (deleted < 0) deleted = p.based;
  if (deleted >= g.generators) throw ValidationError("deleted column out of range");
  std::vector<std::vector<Laurent>> m;
  for (const Word& w : g.relators) {
    std::vector<Laurent> row;
    for (int x = 0; x < g.generators; ++x)
      if (x != deleted) row.push_back(fox_derivative(w, x, g.generators));
    m.push_back(std::move(row));
  }
  return m;
}

Laurent determinant(std::vector<std::vector<Laurent>> m) {
  // Bareiss fraction-free elimination; every division is exact.
  std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
  int sign = 1;
  Laurent prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return Laurent();
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Laurent alexander_raw(const RibbonPresentation& p, int deleted) { return determinant(alexander_matrix(p, deleted)); }

Laurent normalize_alexander(const Laurent& raw) {
  BigInt v = raw.at_one();
  if (v != 1 && v != -1)
    throw StructuralError("Alexander determinant at t=1 is " + v.str() + ", expected +-1");
  Laurent d = v == 1 ? raw : -raw;
  BigInt m = -d.derivative_at_one();
  return d.shift(static_cast<int>(m));
}

Laurent alexander_polynomial(const RibbonPresentation& p, int deleted) {
  return normalize_alexander(alexander_raw(p, deleted));
}

std::vector<Rational> alpha_series(const Laurent& delta, int order) {
  if (order < 2) throw ValidationError("series order must be at least 2");
  if (delta.at_one() != 1) throw ValidationError("Delta(1) must be 1");
  auto s = substitute_exp(delta, order);
  s[0] = 0;
  return s.log1p().coeffs();
}

std::vector<Rational> alpha_coefficients(const RibbonPresentation& p, int order) {
  return alpha_series(alexander_polynomial(p), order);
}

RibbonPresentation unclasp(const RibbonPresentation& p, const Crossing& c) {
  if (c.band < 0 || c.band >= static_cast<int>(p.bands.size()) || c.piercing < 0 ||
      c.piercing >= static_cast<int>(p.bands[c.band].piercings.size()))
    throw ValidationError("no crossing (" + std::to_string(c.band) + "," + std::to_string(c.piercing) + ")");
  RibbonPresentation r = p;
  auto& ps = r.bands[c.band].piercings;
  ps.erase(ps.begin() + c.piercing);
  return r;
}

RibbonPresentation connected_sum(const RibbonPresentation& p, const RibbonPresentation& q, std::vector<int>* reindex) {
  require_valid(p);
  require_valid(q);
  std::vector<int> map(q.disks);
  int next = p.disks;
  for (int d = 0; d < q.disks; ++d) map[d] = d == q.based ? p.based : next++;
  RibbonPresentation r = p;
  r.disks = next;
  for (Band b : q.bands) {
    b.from = map[b.from];
    b.to = map[b.to];
    for (auto& x : b.piercings) x.disk = map[x.disk];
    r.bands.push_back(std::move(b));
  }
  if (reindex) *reindex = map;
  return r;
}

RibbonPresentation trivial_presentation() { return {}; }

RibbonPresentation wheel_presentation(int k) {
  if (k < 1) throw ValidationError("wheel presentation needs k >= 1");
  if (k > max_k_wheel())
    throw ResourceError("k=" + std::to_string(k) + " exceeds the wheel bound " + std::to_string(max_k_wheel()) +
                        " (set BCRLAB_MAX_K)");
  RibbonPresentation p;
  p.disks = k + 1;
  for (int j = 1; j <= k; ++j) {
    int pierced = (j + k - 2) % k + 1;
    int sign = (k % 2 == 0 && j == k) ? -1 : 1;
    p.bands.push_back({0, j, {{pierced, sign}}});
  }
  return p;
}

}  // namespace bcr
