#include "bcr/json_io.hpp"
#include "bcr/errors.hpp"

#include <fstream>
#include <limits>

namespace bcr::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int get_int(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) fail(std::string("field \"") + name + "\" must be an integer");
  auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    fail(std::string("field \"") + name + "\" out of range");
  return static_cast<int>(x);
}

const json& get_array(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) fail(std::string("field \"") + name + "\" must be an array");
  return v;
}

EdgeKind parse_kind(const json& j) {
  if (!j.is_string()) fail("edge kind must be a string");
  auto s = j.get<std::string>();
  if (s == "theta") return EdgeKind::Theta;
  if (s == "eta") return EdgeKind::Eta;
  fail("unknown edge kind \"" + s + "\"");
}

const char* kind_name(EdgeKind k) { return k == EdgeKind::Theta ? "theta" : "eta"; }

json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail("expected an integer");
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

json to_json(const JacobiDiagram& d) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < d.num_vertices(); ++v)
    j["vertices"].push_back({{"id", v + 1}, {"class", d.cls[v] == VertexClass::Internal ? "internal" : "external"}});
  j["edges"] = json::array();
  for (const Edge& e : d.edges) j["edges"].push_back({{"src", e.src + 1}, {"dst", e.dst + 1}, {"kind", kind_name(e.kind)}});
  j["orientation"] = json::object();
  for (const auto& [v, o] : d.orientation) j["orientation"][std::to_string(v + 1)] = {o[0], o[1]};
  return j;
}

JacobiDiagram diagram_from_json(const json& j) {
  JacobiDiagram d;
  const json& vs = get_array(j, "vertices");
  d.cls.resize(vs.size());
  std::vector<bool> seen(vs.size(), false);
  for (const json& v : vs) {
    int id = get_int(v, "id");
    if (id < 1 || id > static_cast<int>(vs.size()) || seen[id - 1]) fail("vertex ids must be 1..n without repeats");
    seen[id - 1] = true;
    const json& c = field(v, "class");
    if (c == "external") d.cls[id - 1] = VertexClass::External;
    else if (c == "internal") d.cls[id - 1] = VertexClass::Internal;
    else fail("vertex class must be \"external\" or \"internal\"");
  }
  const int n = d.num_vertices();
  for (const json& e : get_array(j, "edges")) {
    int s = get_int(e, "src"), t = get_int(e, "dst");
    if (s < 1 || s > n || t < 1 || t > n) fail("edge endpoint references a missing vertex");
    d.edges.push_back({s - 1, t - 1, parse_kind(field(e, "kind"))});
  }
  if (j.contains("orientation")) {
    const json& o = j.at("orientation");
    if (!o.is_object()) fail("orientation must be an object");
    for (const auto& [key, val] : o.items()) {
      int v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("orientation key \"" + key + "\" is not a vertex id");
      }
      if (v < 1 || v > n) fail("orientation references a missing vertex");
      if (!val.is_array() || val.size() != 2 || !val[0].is_number_integer() || !val[1].is_number_integer())
        fail("orientation entries are pairs of edge indices");
      int a = val[0].get<int>(), b = val[1].get<int>();
      int m = static_cast<int>(d.edges.size());
      if (a < 0 || a >= m || b < 0 || b >= m) fail("orientation references a missing edge");
      d.orientation[v - 1] = {a, b};
    }
  }
  return d;
}

json to_json(const RibbonPresentation& p) {
  json j;
  j["disks"] = p.disks;
  j["based"] = p.based;
  j["bands"] = json::array();
  for (const Band& b : p.bands) {
    json pj = json::array();
    for (const Piercing& q : b.piercings) pj.push_back({{"disk", q.disk}, {"sign", q.sign}});
    j["bands"].push_back({{"from", b.from}, {"to", b.to}, {"piercings", pj}});
  }
  return j;
}

RibbonPresentation presentation_from_json(const json& j) {
  RibbonPresentation p;
  p.disks = get_int(j, "disks");
  p.based = j.contains("based") ? get_int(j, "based") : 0;
  for (const json& b : get_array(j, "bands")) {
    Band band{get_int(b, "from"), get_int(b, "to"), {}};
    if (b.contains("piercings"))
      for (const json& q : get_array(b, "piercings")) band.piercings.push_back({get_int(q, "disk"), get_int(q, "sign")});
    p.bands.push_back(std::move(band));
  }
  auto rep = validate_presentation(p);
  if (!rep.ok) fail("invalid presentation: " + rep.violations.front());
  return p;
}

json to_json(const MarkedPresentation& mp) {
  json j = to_json(mp.presentation);
  j["marks"] = json::array();
  for (const Crossing& c : mp.marks) j["marks"].push_back({{"band", c.band}, {"piercing", c.piercing}});
  return j;
}

MarkedPresentation marked_from_json(const json& j) {
  MarkedPresentation mp;
  mp.presentation = presentation_from_json(j);
  if (j.contains("marks"))
    for (const json& c : get_array(j, "marks")) mp.marks.push_back({get_int(c, "band"), get_int(c, "piercing")});
  validate_marks(mp);
  return mp;
}

json to_json(const Scheme& s) {
  json j = json::array();
  for (const SchemeTerm& t : s) {
    json tj = to_json(t.presentation);
    tj["sign"] = t.sign;
    j.push_back(tj);
  }
  return j;
}

Scheme scheme_from_json(const json& j) {
  if (!j.is_array()) fail("scheme must be an array of terms");
  Scheme s;
  for (const json& t : j) {
    int sign = get_int(t, "sign");
    if (sign != 1 && sign != -1) fail("term sign must be +1 or -1");
    s.push_back({sign, presentation_from_json(t)});
  }
  return s;
}

json to_json(const Laurent& p) {
  json c = json::array();
  for (const BigInt& x : p.coeffs()) c.push_back(bigint_json(x));
  return {{"lo", p.lo()}, {"coeffs", c}};
}

Laurent laurent_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const json& x : get_array(j, "coeffs")) c.push_back(bigint_from_json(x));
  return Laurent(get_int(j, "lo"), std::move(c));
}

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail("expected a rational");
  return parse_rational(j.get<std::string>());
}

json to_json(const std::vector<Relation>& rels, int k) {
  const AlgebraData& a = algebra(k);
  std::map<std::string, const JacobiDiagram*> rep;
  for (const auto& c : a.classes.classes) rep[c.key] = &c.rep;
  json j = json::array();
  for (const Relation& r : rels) {
    json terms = json::array();
    for (const auto& [key, c] : r.vec.terms)
      terms.push_back({{"diagram", to_json(*rep.at(key))},
                       {"coeff_num", bigint_json(numerator(c))},
                       {"coeff_den", bigint_json(denominator(c))}});
    j.push_back({{"kind", to_string(r.kind)}, {"terms", terms}});
  }
  return j;
}

std::vector<Relation> relations_from_json(const json& j, int k) {
  if (!j.is_array()) fail("relation set must be an array");
  std::vector<Relation> out;
  for (const json& r : j) {
    const json& kind = field(r, "kind");
    if (!kind.is_string()) fail("relation kind must be a string");
    Relation rel{parse_relation_kind(kind.get<std::string>()), DiagramVector{k, {}}};
    for (const json& t : get_array(r, "terms")) {
      BigInt den = bigint_from_json(field(t, "coeff_den"));
      if (den == 0) fail("zero denominator");
      JacobiDiagram d = diagram_from_json(field(t, "diagram"));
      if (d.degree() != k || d.num_vertices() != 2 * k) fail("relation term has the wrong degree");
      rel.vec.add(d, Rational(bigint_from_json(field(t, "coeff_num")), den));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

json to_json(const RelationConfig& c) { return {{"c_st", c.c_st}, {"c_t", c.c_t}}; }

RelationConfig relation_config_from_json(const json& j) {
  RelationConfig c{get_int(j, "c_st"), get_int(j, "c_t")};
  if (std::abs(c.c_st) != 1 || std::abs(c.c_t) != 1) fail("relation signs must be +1 or -1");
  return c;
}

json to_json(const PatternSet& ps) {
  json j = json::array();
  for (const Pattern& p : ps) {
    json vs = json::array(), es = json::array();
    for (const auto& v : p.vertices) vs.push_back(std::string(1, v.type));
    for (const auto& e : p.edges) es.push_back({{"src", e.src + 1}, {"dst", e.dst + 1}, {"kind", kind_name(e.kind)}});
    j.push_back({{"name", p.name}, {"vertices", vs}, {"edges", es}});
  }
  return j;
}

PatternSet patterns_from_json(const json& j) {
  if (!j.is_array()) fail("pattern file must be an array");
  PatternSet ps;
  for (const json& pj : j) {
    Pattern p;
    const json& name = field(pj, "name");
    if (!name.is_string()) fail("pattern name must be a string");
    p.name = name.get<std::string>();
    for (const json& v : get_array(pj, "vertices")) {
      if (!v.is_string() || v.get<std::string>().size() != 1 ||
          std::string("ABCDI*").find(v.get<std::string>()[0]) == std::string::npos)
        fail("pattern vertex types are one of A B C D I *");
      p.vertices.push_back({v.get<std::string>()[0]});
    }
    const int n = static_cast<int>(p.vertices.size());
    for (const json& e : get_array(pj, "edges")) {
      int s = get_int(e, "src"), t = get_int(e, "dst");
      if (s < 1 || s > n || t < 1 || t > n) fail("pattern edge references a missing vertex");
      p.edges.push_back({s - 1, t - 1, parse_kind(field(e, "kind"))});
    }
    ps.push_back(std::move(p));
  }
  return ps;
}

json to_json(const mc::Estimate& e) {
  return {{"mean", e.mean},
          {"stderr", e.stderr_},
          {"batches", e.batch_means},
          {"samples", e.samples},
          {"n_effective", e.n_effective},
          {"variance_warning", e.variance_warning}};
}

json to_json(const mc::MCConfig& c) {
  return {{"samples", c.samples}, {"seed", c.seed},   {"delta", c.delta},          {"batches", c.batches},
          {"threads", c.threads}, {"scale", c.scale}, {"antithetic", c.antithetic}};
}

}  // namespace bcr::io
