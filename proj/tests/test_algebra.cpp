#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcr/algebra.hpp"
#include "bcr/errors.hpp"
#include "bcr/json_io.hpp"

#include <random>

using namespace bcr;

namespace {

// Closed-form weight: 0 on Y/L diagrams; otherwise (-1)^(#B vertices) times, per internal vertex,
// +1 when its first listed theta-source lies on the cycle and -1 otherwise.
int local_weight(const JacobiDiagram& d) {
  if (has_yl_subgraph(d).found) return 0;
  auto inc = incidence(d);
  int n = d.num_vertices();
  std::vector<int> next(n);
  for (int v = 0; v < n; ++v)
    next[v] = !inc[v].theta_out.empty() ? d.edges[inc[v].theta_out[0]].dst : d.edges[inc[v].eta_out[0]].dst;
  std::vector<int> seen(n, 0);
  int v = 0;
  while (!seen[v]) {
    seen[v] = 1;
    v = next[v];
  }
  std::vector<bool> on_cycle(n, false);
  int u = v;
  do {
    on_cycle[u] = true;
    u = next[u];
  } while (u != v);
  int w = 1;
  for (int x = 0; x < n; ++x) {
    auto t = vertex_type(d, inc, x);
    if (t == VertexType::B) w = -w;
    if (t == VertexType::I) w *= on_cycle[in_sources(d, x)[0]] ? 1 : -1;
  }
  return w;
}

}  // namespace

TEST_CASE("quotient dimension is one") {
  for (int k = 2; k <= 4; ++k) CHECK(quotient_dimension(k) == 1);
}

TEST_CASE("mixed sign conventions do not give a one-dimensional quotient") {
  CHECK(quotient_dimension(3, {1, -1}) != 1);
  CHECK(quotient_dimension(3, {-1, 1}) != 1);
  CHECK(quotient_dimension(3, {-1, -1}) == 1);
}

TEST_CASE("weights annihilate every relation") {
  for (int k = 2; k <= 4; ++k) {
    const AlgebraData& a = algebra(k);
    CHECK_FALSE(a.relations.empty());
    for (const Relation& r : a.relations) CHECK(weight_on(r.vec) == 0);
  }
}

TEST_CASE("weight table matches the closed-form rule") {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& c : algebra(k).classes.classes) {
      if (c.self_reversing) continue;
      CAPTURE(c.key);
      CHECK(weight_w(c.rep) == local_weight(c.rep));
    }
  }
}

TEST_CASE("weights are invariant under relabelling and odd under orientation reversal") {
  std::mt19937_64 rng(3);
  for (const auto& c : algebra(3).classes.classes) {
    if (c.rep.num_internal() == 0) continue;
    CHECK(weight_antisymmetry_check(c.rep));
    JacobiDiagram r = reverse_vertex_orientation(c.rep);
    CHECK(weight_w(r) == -weight_w(c.rep));
  }
}

TEST_CASE("degree-2 weights") {
  const int expect[] = {1, -1, 1, 1, 1};
  for (int i = 1; i <= 5; ++i) {
    CAPTURE(i);
    CHECK(weight_w(degree2_diagram(i)) == expect[i - 1]);
  }
}

TEST_CASE("chord diagrams weigh (-1)^k2 and are symmetric under cycle reversal") {
  for (int k = 2; k <= 4; ++k)
    for (const auto& c : algebra(k).classes.classes) {
      const JacobiDiagram& d = c.rep;
      if (d.num_internal() != 0 || has_pure_eta_cycle(d)) continue;
      if (has_yl_subgraph(d).found) {
        CHECK(weight_w(d) == 0);
        continue;
      }
      int k2 = cycle_structure(d).k2;
      CHECK(weight_w(d) == (k2 % 2 ? -1 : 1));
      CHECK(weight_w(reverse_cycle(d)) == weight_w(d));
    }
}

TEST_CASE("functionals vanishing on relations are multiples of w") {
  for (int k = 2; k <= 4; ++k) {
    const AlgebraData& a = algebra(k);
    auto ns = a.echelon->nullspace();
    REQUIRE(ns.size() == 1);
    Rational ratio = 0;
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
      Rational w = a.weights.at(a.basis[i]);
      if (ns[0][i] == 0) {
        CHECK(w == 0);
        continue;
      }
      if (ratio == 0) ratio = w / ns[0][i];
      CHECK(w == ratio * ns[0][i]);
    }
  }
}

TEST_CASE("derived relations lie in the relation span") {
  for (int k = 2; k <= 4; ++k)
    for (auto kind : {DerivedKind::IHX, DerivedKind::Y, DerivedKind::L}) {
      CAPTURE(k);
      CHECK(derived_relation_check(k, kind));
    }
  CHECK(derived_instances(4, DerivedKind::IHX).size() == 6);
  CHECK(derived_instances(3, DerivedKind::L).size() == 7);
  CHECK(derived_instances(4, DerivedKind::L).size() == 41);
  // Y diagrams swap their two legs under an orientation-reversing automorphism, so they are already zero.
  PatternSet y;
  for (const auto& p : default_yl_patterns())
    if (p.name == "Y") y.push_back(p);
  int ys = 0;
  for (int k = 2; k <= 4; ++k)
    for (const auto& c : enumerate_connected(k).classes)
      if (has_yl_subgraph(c.rep, y).found) {
        ++ys;
        CHECK(c.self_reversing);
      }
  CHECK(ys > 0);
  CHECK(derived_instances(4, DerivedKind::Y).empty());
}

TEST_CASE("STU relations at degree 3 have three unit terms") {
  auto rels = relation_vectors(3, {RelationKind::STU});
  REQUIRE_FALSE(rels.empty());
  for (const auto& r : rels) {
    CHECK(r.vec.terms.size() == 3);
    for (const auto& [key, c] : r.vec.terms) CHECK(abs(c) == 1);
  }
}

TEST_CASE("relation set JSON round trip") {
  auto rels = relation_vectors(2, {RelationKind::ST, RelationKind::SU, RelationKind::STU, RelationKind::C});
  auto j = io::to_json(rels, 2);
  auto back = io::relations_from_json(io::json::parse(j.dump()), 2);
  REQUIRE(back.size() == rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    CHECK(back[i].kind == rels[i].kind);
    CHECK(back[i].vec == rels[i].vec);
  }
  CHECK(io::relation_config_from_json(io::to_json(RelationConfig{-1, 1})) == RelationConfig{-1, 1});
}

TEST_CASE("z2 combination") {
  // (1/2) sum I w / |Aut|
  std::map<std::string, double> I;
  const double vals[] = {0.3, 0.7, 1.1, 5.0, -2.0};
  double expect = 0;
  for (int i = 1; i <= 5; ++i) {
    auto d = degree2_diagram(i);
    auto f = canonical_form(d);
    // values refer to the canonical representative's orientation
    I[f.key] = vals[i - 1] * f.sign;
    expect += 0.5 * vals[i - 1] * weight_w(d).convert_to<double>() / f.automorphisms;
  }
  CHECK(z_combination(2, I) == doctest::Approx(expect));
  CHECK_THROWS_AS(z_combination(3, I), ValidationError);
}

TEST_CASE("weight errors") {
  JacobiDiagram bad;
  bad.cls = {VertexClass::External};
  CHECK_THROWS_AS(weight_w(bad), ValidationError);
}
