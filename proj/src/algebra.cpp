#include "bcr/algebra.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace bcr {

void DiagramVector::add(const std::string& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void DiagramVector::add(const JacobiDiagram& d, const Rational& c) {
  auto cf = canonical_form(d);
  if (cf.sign == 0) return;
  add(cf.key, c * cf.sign);
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::ST: return "ST";
    case RelationKind::SU: return "SU";
    case RelationKind::STU: return "STU";
    case RelationKind::C: return "C";
  }
  return "?";
}

RelationKind parse_relation_kind(const std::string& s) {
  if (s == "ST") return RelationKind::ST;
  if (s == "SU") return RelationKind::SU;
  if (s == "STU") return RelationKind::STU;
  if (s == "C") return RelationKind::C;
  throw ValidationError("unknown relation kind '" + s + "'");
}

DerivedKind parse_derived_kind(const std::string& s) {
  if (s == "IHX") return DerivedKind::IHX;
  if (s == "Y") return DerivedKind::Y;
  if (s == "L") return DerivedKind::L;
  throw ValidationError("unknown derived relation '" + s + "'");
}

// ---------------------------------------------------------------- echelon

static void make_primitive(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row)
    if (x != 0) g = g == 0 ? BigInt(abs(x)) : BigInt(gcd(g, x));
  if (g > 1)
    for (auto& x : row) x /= g;
}

void IntegerEchelon::reduce(std::vector<BigInt>& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (row[p] == 0) continue;
    BigInt a = rows_[i][p], b = row[p];
    for (int c = 0; c < ncols_; ++c) row[c] = row[c] * a - rows_[i][c] * b;
    make_primitive(row);
  }
}

bool IntegerEchelon::insert(std::vector<BigInt> row) {
  if (static_cast<int>(row.size()) != ncols_) throw std::invalid_argument("row width mismatch");
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
  if (it == row.end()) return false;
  make_primitive(row);
  pivots_.push_back(static_cast<int>(it - row.begin()));
  rows_.push_back(std::move(row));
  return true;
}

bool IntegerEchelon::in_span(std::vector<BigInt> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<std::vector<Rational>> IntegerEchelon::nullspace() const {
  // Rational reduced row echelon form of the stored rows.
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows_) m.emplace_back(r.begin(), r.end());
  std::vector<int> pc;
  int rk = 0;
  for (int c = 0; c < ncols_ && rk < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = rk; i < static_cast<int>(m.size()); ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    Rational inv = 1 / m[rk][c];
    for (auto& x : m[rk]) x *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == rk || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < ncols_; ++j) m[i][j] -= f * m[rk][j];
    }
    pc.push_back(c);
    ++rk;
  }
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (std::find(pc.begin(), pc.end(), f) != pc.end()) continue;
    std::vector<Rational> x(ncols_, Rational(0));
    x[f] = 1;
    for (int i = 0; i < rk; ++i) x[pc[i]] = -m[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------- contraction

namespace {

// Diagram with orientation recorded by source vertices.
struct Raw {
  std::vector<VertexClass> cls;
  std::vector<Edge> edges;
  std::map<int, std::pair<int, int>> osrc;
};

Raw from_diagram(const JacobiDiagram& d) {
  Raw r{d.cls, d.edges, {}};
  for (const auto& [v, es] : d.orientation) r.osrc[v] = {d.edges[es[0]].src, d.edges[es[1]].src};
  return r;
}

std::optional<JacobiDiagram> to_diagram(const Raw& r) {
  JacobiDiagram d{r.cls, r.edges, {}};
  for (const auto& [v, p] : r.osrc) {
    int e1 = -1, e2 = -1;
    for (int i = 0; i < static_cast<int>(r.edges.size()); ++i) {
      const Edge& e = r.edges[i];
      if (e.kind != EdgeKind::Theta || e.dst != v) continue;
      if (e.src == p.first && e1 < 0) e1 = i;
      else if (e.src == p.second && e2 < 0) e2 = i;
    }
    if (e1 < 0 || e2 < 0) return std::nullopt;
    d.orientation[v] = {e1, e2};
  }
  if (!validate(d).ok || !is_connected(d)) return std::nullopt;
  return d;
}

struct Ends {
  std::vector<int> ti, to, hi, ho;
};

struct Contracted {
  std::vector<VertexClass> cls;
  std::vector<Edge> base;
  std::map<int, std::pair<int, int>> bor;
  Ends x;
};

std::optional<Contracted> contract(const Raw& r, int ei) {
  const Edge ce = r.edges[ei];
  int a = ce.src, b = ce.dst;
  int nv = static_cast<int>(r.cls.size());
  std::vector<int> lab(nv, -1);
  Contracted q;
  for (int v = 0; v < nv; ++v) {
    if (v == a || v == b) continue;
    lab[v] = static_cast<int>(q.cls.size());
    q.cls.push_back(r.cls[v]);
  }
  const int X = static_cast<int>(q.cls.size());
  lab[a] = lab[b] = X;
  for (int j = 0; j < static_cast<int>(r.edges.size()); ++j) {
    if (j == ei) continue;
    const Edge& e = r.edges[j];
    int s = lab[e.src], t = lab[e.dst];
    bool th = e.kind == EdgeKind::Theta;
    if (s == X && t == X) return std::nullopt;
    if (s == X) (th ? q.x.to : q.x.ho).push_back(t);
    else if (t == X) (th ? q.x.ti : q.x.hi).push_back(s);
    else q.base.push_back(e.kind == EdgeKind::Theta ? Edge{s, t, EdgeKind::Theta} : Edge{s, t, EdgeKind::Eta});
  }
  for (const auto& [v, p] : r.osrc) {
    if (v == a || v == b) continue;
    q.bor[lab[v]] = {lab[p.first], lab[p.second]};
  }
  if (ce.kind == EdgeKind::Eta) {
    std::vector<int> tin;
    for (const Edge& e : r.edges)
      if (e.kind == EdgeKind::Theta && e.dst == a) tin.push_back(lab[e.src]);
    for (const Edge& e : r.edges)
      if (e.kind == EdgeKind::Theta && e.dst == b) tin.push_back(lab[e.src]);
    q.x.ti = tin;
  } else if (r.cls[a] == VertexClass::Internal && r.cls[b] == VertexClass::External) {
    auto p = r.osrc.at(a);
    q.x.ti = {lab[p.first], lab[p.second]};
  } else if (r.cls[a] == VertexClass::Internal && r.cls[b] == VertexClass::Internal) {
    return std::nullopt;  // IHX face
  }
  return q;
}

struct Term {
  Raw diagram;
  int coeff;
  char tag;  // 'S', 'T', 'U', 'C'
};

enum class Shape { None, E1, E2, E3 };

Shape uncontract(const Contracted& q, const RelationConfig& cfg, std::vector<Term>& out) {
  const int X = static_cast<int>(q.cls.size());
  const auto& [ti, to, hi, ho] = q.x;
  constexpr auto T = EdgeKind::Theta;
  constexpr auto H = EdgeKind::Eta;
  constexpr auto E = VertexClass::External;
  constexpr auto I = VertexClass::Internal;
  auto build = [&](std::vector<VertexClass> extra, std::vector<Edge> e, std::map<int, std::pair<int, int>> o) {
    Raw r;
    r.cls = q.cls;
    r.cls.insert(r.cls.end(), extra.begin(), extra.end());
    r.edges = q.base;
    r.edges.insert(r.edges.end(), e.begin(), e.end());
    r.osrc = std::move(o);
    return r;
  };
  auto fix = [&](int src) {
    auto o = q.bor;
    for (auto& [v, p] : o) {
      if (p.first == X) p.first = src;
      if (p.second == X) p.second = src;
    }
    return o;
  };
  if (ti.size() == 1 && to.size() == 1 && ho.empty()) {
    int v = ti[0], u = to[0];
    {
      int w = X, j = X + 1;
      std::vector<Edge> e{{v, w, T}, {w, j, H}, {j, u, T}};
      for (int p : hi) e.push_back({p, w, H});
      out.push_back({build({E, E}, e, fix(j)), 1, 'T'});
    }
    {
      int w = X, y = X + 1;
      std::vector<Edge> e{{w, y, T}, {v, y, T}, {y, u, T}};
      for (int p : hi) e.push_back({p, w, H});
      auto o = fix(y);
      o[y] = {w, v};
      out.push_back({build({E, I}, e, o), cfg.c_st, 'S'});
    }
    return Shape::E1;
  }
  if (ti.size() == 2 && to.empty() && ho.size() == 1) {
    int u = ti[0], v = ti[1], r = ho[0];
    {
      int y = X, x2 = X + 1;
      std::vector<Edge> e{{u, y, T}, {v, y, T}, {y, x2, T}, {x2, r, H}};
      for (int p : hi) e.push_back({p, x2, H});
      auto o = q.bor;
      o[y] = {u, v};
      out.push_back({build({I, E}, e, o), 1, 'S'});
    }
    struct Opt {
      int a1, a2, c;
      char tag;
    };
    for (auto [a1, a2, c, tag] : {Opt{u, v, cfg.c_t, 'T'}, Opt{v, u, -cfg.c_t, 'U'}}) {
      int w = X, j = X + 1;
      std::vector<Edge> e{{a1, w, T}, {a2, j, T}, {w, j, H}, {j, r, H}};
      for (int p : hi) e.push_back({p, w, H});
      out.push_back({build({E, E}, e, q.bor), c, tag});
    }
    return Shape::E2;
  }
  if (ti.empty() && to.empty() && ho.size() == 1) {
    int r = ho[0];
    int s = X, t = X + 1;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> opts;
    if (hi.empty()) opts = {{{}, {}}};
    else if (hi.size() == 1) opts = {{{hi[0]}, {}}, {{}, {hi[0]}}};
    else opts = {{{hi[0]}, {hi[1]}}, {{hi[1]}, {hi[0]}}};
    for (const auto& [hs, ht] : opts) {
      std::vector<Edge> e{{s, t, T}, {t, r, H}};
      for (int p : hs) e.push_back({p, s, H});
      for (int p : ht) e.push_back({p, t, H});
      out.push_back({build({E, E}, e, q.bor), 1, 'C'});
    }
    return Shape::E3;
  }
  return Shape::None;
}

std::vector<Relation> generate_relations(const Enumeration& en, const RelationConfig& cfg) {
  std::set<std::string> known;
  for (const auto& c : en.classes) known.insert(c.key);
  std::map<std::map<std::string, Rational>, RelationKind> found;
  for (const auto& cls : en.classes) {
    Raw raw = from_diagram(cls.rep);
    for (int ei = 0; ei < static_cast<int>(raw.edges.size()); ++ei) {
      auto q = contract(raw, ei);
      if (!q) continue;
      std::vector<Term> terms;
      Shape shape = uncontract(*q, cfg, terms);
      if (shape == Shape::None) continue;
      DiagramVector vec;
      vec.k = en.k;
      std::set<char> present;
      for (const Term& t : terms) {
        auto d = to_diagram(t.diagram);
        if (!d) continue;
        present.insert(t.tag);
        auto cf = canonical_form(*d);
        if (!known.count(cf.key)) throw StructuralError("relation term outside the enumerated classes");
        if (cf.sign == 0) continue;
        vec.add(cf.key, Rational(t.coeff * cf.sign));
      }
      if (vec.empty()) continue;
      if (vec.terms.begin()->second < 0)
        for (auto& [key, c] : vec.terms) c = -c;
      RelationKind kind = RelationKind::C;
      if (shape == Shape::E1) kind = RelationKind::ST;
      if (shape == Shape::E2)
        kind = present.count('T') && present.count('U') ? RelationKind::STU
               : present.count('U')                    ? RelationKind::SU
                                                       : RelationKind::ST;
      found.emplace(vec.terms, kind);
    }
  }
  std::vector<Relation> out;
  for (const auto& [terms, kind] : found) out.push_back({kind, DiagramVector{en.k, terms}});
  return out;
}

std::unique_ptr<AlgebraData> build_algebra(int k, const RelationConfig& cfg) {
  auto a = std::make_unique<AlgebraData>();
  a->k = k;
  a->config = cfg;
  a->classes = enumerate_connected(k);
  for (const auto& c : a->classes.classes)
    if (!c.self_reversing) {
      a->index[c.key] = static_cast<int>(a->basis.size());
      a->basis.push_back(c.key);
    }
  a->relations = generate_relations(a->classes, cfg);
  a->echelon = std::make_shared<IntegerEchelon>(static_cast<int>(a->basis.size()));
  for (const auto& r : a->relations) a->echelon->insert(dense_row(*a, r.vec));
  a->dimension = static_cast<int>(a->basis.size()) - a->echelon->rank();
  if (a->dimension == 1) {
    auto ns = a->echelon->nullspace().front();
    std::string wheel = canonical_form(wheel_diagram(k)).key;
    Rational scale = 1 / ns[a->index.at(wheel)];
    for (std::size_t i = 0; i < a->basis.size(); ++i) a->weights[a->basis[i]] = ns[i] * scale;
  }
  return a;
}

}  // namespace

const AlgebraData& algebra(int k, const RelationConfig& cfg) {
  static std::mutex mu;
  static std::map<std::pair<int, RelationConfig>, std::unique_ptr<AlgebraData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, cfg}];
  if (!slot) slot = build_algebra(k, cfg);
  return *slot;
}

std::vector<BigInt> dense_row(const AlgebraData& a, const DiagramVector& v) {
  // Common denominator cleared; only used for span questions.
  BigInt den = 1;
  for (const auto& [key, c] : v.terms) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<BigInt> row(a.basis.size(), BigInt(0));
  for (const auto& [key, c] : v.terms) {
    auto it = a.index.find(key);
    if (it == a.index.end()) throw StructuralError("vector term is not a basis class");
    row[it->second] += numerator(c) * (den / denominator(c));
  }
  return row;
}

bool in_relation_span(const AlgebraData& a, const DiagramVector& v) {
  return a.echelon->in_span(dense_row(a, v));
}

std::vector<Relation> relation_vectors(int k, const std::set<RelationKind>& kinds, const RelationConfig& cfg) {
  if (kinds.empty()) return {};
  std::vector<Relation> out;
  for (const auto& r : algebra(k, cfg).relations)
    if (kinds.count(r.kind)) out.push_back(r);
  return out;
}

int quotient_dimension(int k, const RelationConfig& cfg) { return algebra(k, cfg).dimension; }

static bool is_chord(const JacobiDiagram& d) { return d.num_internal() == 0 && !has_pure_eta_cycle(d); }

Rational weight_w(const JacobiDiagram& d, const RelationConfig& cfg) {
  auto rep = validate(d);
  if (!rep.ok) throw ValidationError("invalid diagram: " + rep.violations.front());
  if (has_yl_subgraph(d).found) return 0;
  if (is_chord(d)) return cycle_structure(d).k2 % 2 ? -1 : 1;
  int k = d.degree();
  if (k > max_k_algebra())
    throw ResourceError("weight of a diagram with internal vertices needs the degree-" + std::to_string(k) +
                        " algebra, above the bound " + std::to_string(max_k_algebra()));
  const auto& a = algebra(k, cfg);
  if (a.dimension != 1) throw StructuralError("quotient is not one-dimensional under this relation convention");
  auto cf = canonical_form(d);
  if (cf.sign == 0) return 0;
  auto it = a.weights.find(cf.key);
  if (it == a.weights.end()) throw StructuralError("diagram is not a connected degree-" + std::to_string(k) + " class");
  return it->second * cf.sign;
}

Rational weight_on(const DiagramVector& v, const RelationConfig& cfg) {
  if (v.empty()) return 0;
  const auto& a = algebra(v.k, cfg);
  if (a.dimension != 1) throw StructuralError("quotient is not one-dimensional under this relation convention");
  Rational s = 0;
  for (const auto& [key, c] : v.terms) s += c * a.weights.at(key);
  return s;
}

bool weight_antisymmetry_check(const JacobiDiagram& d, const RelationConfig& cfg) {
  if (d.num_internal() == 0) return true;
  return weight_w(reverse_vertex_orientation(d), cfg) == -weight_w(d, cfg);
}

namespace {

DiagramVector ihx_vector(const JacobiDiagram& d, int ei) {
  Raw r = from_diagram(d);
  const Edge& ce = r.edges[ei];
  int a = ce.src, b = ce.dst;
  auto [pa, qa] = r.osrc.at(a);
  auto ob = r.osrc.at(b);
  int rb = ob.first == a ? ob.second : ob.first;
  int s0 = ob.first == a ? 1 : -1;
  int outb = -1;
  for (const Edge& e : r.edges)
    if (e.kind == EdgeKind::Theta && e.src == b) outb = e.dst;
  std::vector<Edge> base;
  for (int i = 0; i < static_cast<int>(r.edges.size()); ++i) {
    const Edge& e = r.edges[i];
    if (i == ei) continue;
    if (e.kind == EdgeKind::Theta && (e.dst == a || e.dst == b)) continue;
    if (e.src == b) continue;
    base.push_back(e);
  }
  int ins[3] = {pa, qa, rb};
  DiagramVector v;
  v.k = d.degree();
  constexpr auto T = EdgeKind::Theta;
  for (auto [i, j, l] : {std::array<int, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    Raw x{r.cls, base, r.osrc};
    x.edges.insert(x.edges.end(), {{ins[i], a, T}, {ins[j], a, T}, {a, b, T}, {ins[l], b, T}, {b, outb, T}});
    x.osrc[a] = {ins[i], ins[j]};
    x.osrc[b] = {a, ins[l]};
    auto dd = to_diagram(x);
    if (!dd) continue;
    v.add(*dd, Rational(s0));
  }
  return v;
}

}  // namespace

std::vector<DiagramVector> derived_instances(int k, DerivedKind kind) {
  auto en = enumerate_connected(k);
  std::vector<DiagramVector> out;
  for (const auto& c : en.classes) {
    const JacobiDiagram& d = c.rep;
    if (kind == DerivedKind::IHX) {
      for (int ei = 0; ei < static_cast<int>(d.edges.size()); ++ei) {
        const Edge& e = d.edges[ei];
        if (e.kind != EdgeKind::Theta || d.cls[e.src] != VertexClass::Internal ||
            d.cls[e.dst] != VertexClass::Internal)
          continue;
        auto v = ihx_vector(d, ei);
        if (!v.empty()) out.push_back(std::move(v));
      }
      continue;
    }
    if (c.self_reversing) continue;
    PatternSet ps;
    for (const auto& p : default_yl_patterns())
      if (p.name == (kind == DerivedKind::Y ? "Y" : "L")) ps.push_back(p);
    if (!has_yl_subgraph(d, ps).found) continue;
    DiagramVector v;
    v.k = k;
    v.add(c.key, 1);
    out.push_back(std::move(v));
  }
  return out;
}

bool derived_relation_check(int k, DerivedKind kind, const RelationConfig& cfg) {
  const auto& a = algebra(k, cfg);
  for (const auto& v : derived_instances(k, kind))
    if (!in_relation_span(a, v)) return false;
  return true;
}

double z_combination(int k, const std::map<std::string, double>& I_values, const RelationConfig& cfg) {
  const auto& a = algebra(k, cfg);
  std::map<std::string, const EnumeratedClass*> byKey;
  for (const auto& c : a.classes.classes) byKey[c.key] = &c;
  double z = 0;
  for (const auto& [key, I] : I_values) {
    auto bar = key.find('|');
    if (bar == std::string::npos || static_cast<int>(bar) != 2 * k)
      throw ValidationError("class '" + key + "' does not have degree " + std::to_string(k));
    auto it = byKey.find(key);
    if (it == byKey.end()) throw ValidationError("unknown degree-" + std::to_string(k) + " class '" + key + "'");
    if (it->second->self_reversing) continue;
    z += I * static_cast<double>(a.weights.at(key)) / it->second->automorphisms;
  }
  return z / 2;
}

JacobiDiagram degree2_diagram(int index) {
  constexpr auto E = VertexClass::External;
  constexpr auto I = VertexClass::Internal;
  constexpr auto T = EdgeKind::Theta;
  constexpr auto H = EdgeKind::Eta;
  JacobiDiagram d;
  switch (index) {
    case 1:
      d.cls = {E, E, E, I};
      d.edges = {{3, 0, T}, {0, 1, H}, {1, 3, T}, {2, 3, T}};
      d.orientation[3] = {2, 3};
      return d;
    case 2:
      d.cls = {E, E, E, E};
      d.edges = {{0, 1, T}, {2, 3, T}, {3, 1, H}, {1, 2, H}};
      return d;
    case 3: return wheel_diagram(2);
    case 4:
      d.cls = {E, E, E, E};
      d.edges = {{0, 1, T}, {2, 3, T}, {1, 3, H}, {3, 1, H}};
      return d;
    case 5:
      d.cls = {E, E, I, I};
      d.edges = {{0, 2, T}, {1, 3, T}, {2, 3, T}, {3, 2, T}};
      d.orientation[2] = {3, 0};
      d.orientation[3] = {2, 1};
      return d;
  }
  throw ValidationError("degree-2 diagram index must be 1..5");
}

}  // namespace bcr
