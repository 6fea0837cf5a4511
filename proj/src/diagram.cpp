#include "bcr/diagram.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace bcr {

int JacobiDiagram::num_internal() const {
  return static_cast<int>(std::count(cls.begin(), cls.end(), VertexClass::Internal));
}

std::vector<Incidence> incidence(const JacobiDiagram& d) {
  std::vector<Incidence> inc(d.cls.size());
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
    const Edge& e = d.edges[i];
    if (e.src < 0 || e.dst < 0 || e.src >= d.num_vertices() || e.dst >= d.num_vertices()) continue;
    if (e.kind == EdgeKind::Theta) {
      inc[e.src].theta_out.push_back(i);
      inc[e.dst].theta_in.push_back(i);
    } else {
      inc[e.src].eta_out.push_back(i);
      inc[e.dst].eta_in.push_back(i);
    }
  }
  return inc;
}

VertexType vertex_type(const JacobiDiagram& d, const std::vector<Incidence>& inc, int v) {
  const Incidence& a = inc[v];
  if (d.cls[v] == VertexClass::Internal) {
    if (a.theta_in.size() == 2 && a.theta_out.size() == 1 && a.eta_in.empty() && a.eta_out.empty())
      return VertexType::I;
    return VertexType::Other;
  }
  std::size_t hi = a.eta_in.size(), ho = a.eta_out.size();
  if (a.theta_in.size() == 1 && a.theta_out.empty()) {
    if (ho != 1) return VertexType::Other;
    return hi == 0 ? VertexType::A : hi == 1 ? VertexType::B : VertexType::Other;
  }
  if (a.theta_out.size() == 1 && a.theta_in.empty()) {
    if (ho != 0) return VertexType::Other;
    return hi == 0 ? VertexType::C : hi == 1 ? VertexType::D : VertexType::Other;
  }
  return VertexType::Other;
}

ValidationReport validate(const JacobiDiagram& d) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  int n = d.num_vertices();
  if (n == 0 || n % 2 != 0) fail("vertex count " + std::to_string(n) + " is not a positive even number");
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const Edge& e = d.edges[i];
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      fail("edge " + std::to_string(i) + " references a missing vertex");
      continue;
    }
    if (e.src == e.dst) fail("edge " + std::to_string(i) + " is a loop");
  }
  if (!r.ok) return r;
  auto inc = incidence(d);
  for (int v = 0; v < n; ++v) {
    const Incidence& a = inc[v];
    std::string tag = "vertex " + std::to_string(v + 1);
    if (d.cls[v] == VertexClass::Internal) {
      if (!a.eta_in.empty() || !a.eta_out.empty()) fail(tag + ": internal vertex carries an eta-edge");
      if (a.theta_in.size() != 2 || a.theta_out.size() != 1)
        fail(tag + ": internal vertex needs two ingoing and one outgoing theta-edge");
      continue;
    }
    std::size_t nt = a.theta_in.size() + a.theta_out.size();
    if (nt != 1) fail(tag + ": external vertex needs exactly one theta end");
    if (a.eta_in.size() > 1) fail(tag + ": more than one ingoing eta-edge");
    if (a.eta_out.size() > 1) fail(tag + ": more than one outgoing eta-edge");
    if (a.theta_in.size() == 1 && a.eta_out.size() != 1)
      fail(tag + ": theta target without outgoing eta-edge");
    if (a.theta_out.size() == 1 && !a.eta_out.empty())
      fail(tag + ": theta source with outgoing eta-edge");
  }
  std::set<std::pair<int, int>> theta_pairs;
  for (const Edge& e : d.edges)
    if (e.kind == EdgeKind::Theta) theta_pairs.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  for (const Edge& e : d.edges)
    if (e.kind == EdgeKind::Eta && theta_pairs.count({std::min(e.src, e.dst), std::max(e.src, e.dst)}))
      fail("vertices " + std::to_string(e.src + 1) + "," + std::to_string(e.dst + 1) +
           " are joined by both a theta- and an eta-edge");
  for (int v = 0; v < n; ++v) {
    bool internal = d.cls[v] == VertexClass::Internal;
    auto it = d.orientation.find(v);
    if (!internal) {
      if (it != d.orientation.end()) fail("orientation given for external vertex " + std::to_string(v + 1));
      continue;
    }
    if (it == d.orientation.end()) {
      fail("missing orientation at internal vertex " + std::to_string(v + 1));
      continue;
    }
    auto [e1, e2] = it->second;
    std::vector<int> ins = inc[v].theta_in;
    std::sort(ins.begin(), ins.end());
    std::vector<int> got{e1, e2};
    std::sort(got.begin(), got.end());
    if (got != ins) fail("orientation at vertex " + std::to_string(v + 1) + " does not list its ingoing theta-edges");
  }
  for (const auto& [v, _] : d.orientation)
    if (v < 0 || v >= n) fail("orientation references a missing vertex");
  return r;
}

bool is_connected(const JacobiDiagram& d) {
  int n = d.num_vertices();
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : d.edges) parent[find(e.src)] = find(e.dst);
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

bool has_pure_eta_cycle(const JacobiDiagram& d) {
  auto inc = incidence(d);
  int n = d.num_vertices();
  for (int v = 0; v < n; ++v) {
    int u = v;
    for (int step = 0; step < n; ++step) {
      if (inc[u].eta_out.empty()) break;
      u = d.edges[inc[u].eta_out.front()].dst;
      if (u == v) return true;
    }
  }
  return false;
}

std::array<int, 2> in_sources(const JacobiDiagram& d, int v) {
  auto it = d.orientation.find(v);
  if (it == d.orientation.end()) throw StructuralError("vertex has no orientation data");
  return {d.edges[it->second[0]].src, d.edges[it->second[1]].src};
}

namespace {

// Neighbour lists per relation; undirected mode merges in/out.
struct View {
  int n;
  std::vector<int> base;
  std::vector<std::vector<std::vector<int>>> rel;
};

View make_view(const JacobiDiagram& d, bool directed) {
  View g;
  g.n = d.num_vertices();
  int nrel = directed ? 4 : 2;
  g.rel.assign(nrel, std::vector<std::vector<int>>(g.n));
  for (const Edge& e : d.edges) {
    int k = e.kind == EdgeKind::Theta ? 0 : 1;
    if (directed) {
      g.rel[2 * k][e.src].push_back(e.dst);
      g.rel[2 * k + 1][e.dst].push_back(e.src);
    } else {
      g.rel[k][e.src].push_back(e.dst);
      g.rel[k][e.dst].push_back(e.src);
    }
  }
  g.base.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    int code = static_cast<int>(d.cls[v]);
    for (int r = 0; r < nrel; ++r) code = code * 8 + static_cast<int>(g.rel[r][v].size());
    g.base[v] = code;
  }
  return g;
}

std::vector<int> compress(const std::vector<std::vector<int>>& sig) {
  std::vector<std::vector<int>> uniq = sig;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> col(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v)
    col[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
  return col;
}

int count_colours(const std::vector<int>& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

std::vector<int> refine(const View& g, std::vector<int> col) {
  int ncol = count_colours(col);
  while (true) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(col[v]);
      for (std::size_t r = 0; r < g.rel.size(); ++r) {
        std::vector<int> c;
        for (int u : g.rel[r][v]) c.push_back(col[u]);
        std::sort(c.begin(), c.end());
        sig[v].push_back(-1 - static_cast<int>(r));
        sig[v].insert(sig[v].end(), c.begin(), c.end());
      }
    }
    auto next = compress(sig);
    int m = count_colours(next);
    if (m == ncol) return next;
    ncol = m;
    col = std::move(next);
  }
}

struct SearchResult {
  std::vector<int> best_key;
  std::vector<int> best_lab;
  std::vector<int> best_bits;  // minimal orientation bits among best leaves
  int count = 0;
  std::set<int> signs;
};

std::vector<int> leaf_key(const JacobiDiagram& d, const std::vector<int>& lab, bool directed) {
  int n = d.num_vertices();
  std::vector<int> key(n);
  for (int v = 0; v < n; ++v) key[lab[v]] = static_cast<int>(d.cls[v]);
  std::vector<std::array<int, 3>> es;
  es.reserve(d.edges.size());
  for (const Edge& e : d.edges) {
    int s = lab[e.src], t = lab[e.dst];
    if (!directed && s > t) std::swap(s, t);
    es.push_back({s, t, static_cast<int>(e.kind)});
  }
  std::sort(es.begin(), es.end());
  for (auto& a : es) key.insert(key.end(), a.begin(), a.end());
  return key;
}

std::vector<int> orientation_bits(const JacobiDiagram& d, const std::vector<int>& lab) {
  std::vector<std::pair<int, int>> bits;
  for (const auto& [v, es] : d.orientation) {
    int a = lab[d.edges[es[0]].src], b = lab[d.edges[es[1]].src];
    bits.push_back({lab[v], a < b ? 0 : 1});
  }
  std::sort(bits.begin(), bits.end());
  std::vector<int> out;
  for (auto& p : bits) out.push_back(p.second);
  return out;
}

void search(const JacobiDiagram& d, const View& g, const std::vector<int>& col, bool directed, SearchResult& res) {
  int n = g.n;
  int ncol = count_colours(col);
  if (ncol == n) {
    auto key = leaf_key(d, col, directed);
    auto bits = orientation_bits(d, col);
    int sign = 1;
    for (int b : bits)
      if (b) sign = -sign;
    if (res.count == 0 || key < res.best_key) {
      res.best_key = std::move(key);
      res.best_lab = col;
      res.best_bits = bits;
      res.count = 1;
      res.signs = {sign};
    } else if (key == res.best_key) {
      ++res.count;
      res.signs.insert(sign);
      if (bits < res.best_bits) res.best_bits = bits;
    }
    return;
  }
  std::vector<int> size(ncol, 0);
  for (int c : col) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int v = 0; v < n; ++v) {
    if (col[v] != target) continue;
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u) next[u] = 2 * col[u] + (u == v ? 0 : 1);
    std::vector<std::vector<int>> sig(n);
    for (int u = 0; u < n; ++u) sig[u] = {next[u]};
    search(d, g, refine(g, compress(sig)), directed, res);
  }
}

SearchResult run_search(const JacobiDiagram& d, bool directed) {
  View g = make_view(d, directed);
  std::vector<std::vector<int>> sig(g.n);
  for (int v = 0; v < g.n; ++v) sig[v] = {g.base[v]};
  SearchResult res;
  if (g.n == 0) return res;
  search(d, g, refine(g, compress(sig)), directed, res);
  return res;
}

std::string key_string(const std::vector<int>& key, int n) {
  std::ostringstream os;
  for (int v = 0; v < n; ++v) os << (key[v] ? 'I' : 'E');
  os << '|';
  for (std::size_t i = n; i + 2 < key.size(); i += 3) {
    if (i > static_cast<std::size_t>(n)) os << ',';
    os << key[i] + 1 << (key[i + 2] == 0 ? '>' : '~') << key[i + 1] + 1;
  }
  return os.str();
}

}  // namespace

CanonicalForm canonical_form(const JacobiDiagram& d) {
  auto res = run_search(d, true);
  CanonicalForm cf;
  cf.key = key_string(res.best_key, d.num_vertices());
  cf.relabel = res.best_lab;
  cf.automorphisms = res.count;
  cf.sign = res.signs.size() == 2 ? 0 : *res.signs.begin();
  return cf;
}

JacobiDiagram canonical_representative(const JacobiDiagram& d) {
  auto cf = canonical_form(d);
  const auto& lab = cf.relabel;
  JacobiDiagram r;
  int n = d.num_vertices();
  r.cls.resize(n);
  for (int v = 0; v < n; ++v) r.cls[lab[v]] = d.cls[v];
  for (const Edge& e : d.edges) r.edges.push_back({lab[e.src], lab[e.dst], e.kind});
  std::sort(r.edges.begin(), r.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst, a.kind) < std::tie(b.src, b.dst, b.kind);
  });
  for (int v = 0; v < n; ++v) {
    if (r.cls[v] != VertexClass::Internal) continue;
    std::vector<int> ins;
    for (int i = 0; i < static_cast<int>(r.edges.size()); ++i)
      if (r.edges[i].kind == EdgeKind::Theta && r.edges[i].dst == v) ins.push_back(i);
    if (ins.size() == 2) {
      if (r.edges[ins[0]].src > r.edges[ins[1]].src) std::swap(ins[0], ins[1]);
      r.orientation[v] = {ins[0], ins[1]};
    }
  }
  return r;
}

std::string oriented_key(const JacobiDiagram& d) {
  auto res = run_search(d, true);
  std::string s = key_string(res.best_key, d.num_vertices());
  if (!res.best_bits.empty()) {
    s += '|';
    for (int b : res.best_bits) s += b ? '1' : '0';
  }
  return s;
}

bool isomorphic(const JacobiDiagram& a, const JacobiDiagram& b, bool with_orientation) {
  if (a.num_vertices() != b.num_vertices() || a.edges.size() != b.edges.size()) return false;
  if (with_orientation) return oriented_key(a) == oriented_key(b);
  return canonical_form(a).key == canonical_form(b).key;
}

int automorphism_count(const JacobiDiagram& d, bool oriented_edges) {
  return run_search(d, oriented_edges).count;
}

namespace {

bool structurally_admissible(const JacobiDiagram& d) {
  auto inc = incidence(d);
  for (int v = 0; v < d.num_vertices(); ++v)
    if (vertex_type(d, inc, v) == VertexType::Other) return false;
  std::set<std::pair<int, int>> th;
  for (const Edge& e : d.edges) {
    if (e.src == e.dst) return false;
    if (e.kind == EdgeKind::Theta) th.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  }
  for (const Edge& e : d.edges)
    if (e.kind == EdgeKind::Eta && th.count({std::min(e.src, e.dst), std::max(e.src, e.dst)})) return false;
  return true;
}

void default_orientation(JacobiDiagram& d) {
  d.orientation.clear();
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (d.cls[v] != VertexClass::Internal) continue;
    std::vector<int> ins;
    for (int i = 0; i < static_cast<int>(d.edges.size()); ++i)
      if (d.edges[i].kind == EdgeKind::Theta && d.edges[i].dst == v) ins.push_back(i);
    if (ins.size() == 2) d.orientation[v] = {ins[0], ins[1]};
  }
}

}  // namespace

Enumeration enumerate_connected(int k) {
  if (k < 2) throw ValidationError("degree must be at least 2");
  if (k > max_k_algebra())
    throw ResourceError("degree " + std::to_string(k) + " exceeds the enumeration bound " +
                        std::to_string(max_k_algebra()) + " (set BCRLAB_MAX_K)");
  std::map<std::string, EnumeratedClass> found;
  for (int s = 0; s <= k; ++s) {
    int t = k - s;
    int sigma = s + t;
    int q = sigma + t;
    int nv = q + s;
    std::vector<int> outs, ins;
    for (int v = t; v < t + sigma; ++v) outs.push_back(v);
    for (int v = q; v < nv; ++v) outs.push_back(v);
    for (int v = 0; v < t; ++v) ins.push_back(v);
    for (int v = q; v < nv; ++v) {
      ins.push_back(v);
      ins.push_back(v);
    }
    std::vector<int> perm(ins.size());
    std::iota(perm.begin(), perm.end(), 0);
    JacobiDiagram d;
    d.cls.assign(nv, VertexClass::External);
    for (int v = q; v < nv; ++v) d.cls[v] = VertexClass::Internal;
    std::set<std::vector<int>> seen_theta;
    do {
      std::vector<Edge> theta;
      bool loop = false;
      std::vector<int> sig;
      for (std::size_t i = 0; i < outs.size(); ++i) {
        int dst = ins[perm[i]];
        if (dst == outs[i]) loop = true;
        theta.push_back({outs[i], dst, EdgeKind::Theta});
        sig.push_back(dst);
      }
      if (loop || !seen_theta.insert(sig).second) continue;
      // injective eta map from targets 0..t-1 into externals, no fixed points
      std::vector<int> f(t, 0);
      std::function<void(int, std::vector<bool>&)> rec = [&](int i, std::vector<bool>& used) {
        if (i == t) {
          d.edges = theta;
          for (int j = 0; j < t; ++j) d.edges.push_back({j, f[j], EdgeKind::Eta});
          if (!structurally_admissible(d) || !is_connected(d)) return;
          default_orientation(d);
          auto cf = canonical_form(d);
          if (found.count(cf.key)) return;
          EnumeratedClass ec;
          ec.key = cf.key;
          ec.rep = canonical_representative(d);
          ec.self_reversing = cf.sign == 0;
          ec.automorphisms = cf.automorphisms;
          found.emplace(cf.key, std::move(ec));
          return;
        }
        for (int x = 0; x < q; ++x) {
          if (x == i || used[x]) continue;
          used[x] = true;
          f[i] = x;
          rec(i + 1, used);
          used[x] = false;
        }
      };
      std::vector<bool> used(q, false);
      rec(0, used);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Enumeration out;
  out.k = k;
  for (auto& [key, ec] : found) out.classes.push_back(ec);
  out.count_unoriented = static_cast<int>(out.classes.size());
  for (const auto& ec : out.classes) {
    std::vector<int> internals;
    for (int v = 0; v < ec.rep.num_vertices(); ++v)
      if (ec.rep.cls[v] == VertexClass::Internal) internals.push_back(v);
    std::set<std::string> keys;
    for (int mask = 0; mask < (1 << internals.size()); ++mask) {
      JacobiDiagram x = ec.rep;
      for (std::size_t i = 0; i < internals.size(); ++i)
        if (mask >> i & 1) std::swap(x.orientation[internals[i]][0], x.orientation[internals[i]][1]);
      keys.insert(oriented_key(x));
    }
    out.count_oriented += static_cast<int>(keys.size());
  }
  return out;
}

const PatternSet& default_yl_patterns() {
  static const PatternSet p = {
      {"Y", {{'C'}, {'C'}, {'I'}}, {{0, 2, EdgeKind::Theta}, {1, 2, EdgeKind::Theta}}},
      {"L", {{'C'}, {'A'}}, {{0, 1, EdgeKind::Theta}}},
  };
  return p;
}

YLMatch has_yl_subgraph(const JacobiDiagram& d, const PatternSet& patterns) {
  auto inc = incidence(d);
  int n = d.num_vertices();
  std::vector<char> type(n);
  for (int v = 0; v < n; ++v) type[v] = static_cast<char>(vertex_type(d, inc, v));
  std::set<std::tuple<int, int, int>> es;
  for (const Edge& e : d.edges) es.insert({e.src, e.dst, static_cast<int>(e.kind)});
  for (const Pattern& p : patterns) {
    int m = static_cast<int>(p.vertices.size());
    std::vector<int> img(m, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == m) return true;
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        char want = p.vertices[i].type;
        if (want != '*' && want != type[v]) continue;
        img[i] = v;
        bool ok = true;
        for (const PatternEdge& pe : p.edges) {
          if (pe.src > i || pe.dst > i) continue;
          if (!es.count({img[pe.src], img[pe.dst], static_cast<int>(pe.kind)})) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used[v] = true;
        if (rec(i + 1)) return true;
        used[v] = false;
      }
      img[i] = -1;
      return false;
    };
    if (rec(0)) return {true, p.name, img};
  }
  return {};
}

CycleStructure cycle_structure(const JacobiDiagram& d) {
  auto rep = validate(d);
  if (!rep.ok) throw ValidationError("invalid diagram: " + rep.violations.front());
  if (!is_connected(d)) throw StructuralError("diagram is not connected");
  if (has_yl_subgraph(d).found) throw StructuralError("diagram has a Y/L subgraph");
  auto inc = incidence(d);
  auto out_edge = [&](int v) {
    const Incidence& a = inc[v];
    if (!a.theta_out.empty()) return a.theta_out.front();
    if (!a.eta_out.empty()) return a.eta_out.front();
    throw StructuralError("vertex without outgoing edge");
  };
  int n = d.num_vertices();
  std::vector<int> pos(n, -1), walk;
  int v = 0;
  while (pos[v] < 0) {
    pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = d.edges[out_edge(v)].dst;
  }
  CycleStructure cs;
  for (std::size_t i = pos[v]; i < walk.size(); ++i) cs.cycle_edges.push_back(out_edge(walk[i]));
  auto& ce = cs.cycle_edges;
  std::size_t L = ce.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < L; ++i)
    if (d.edges[ce[i]].kind != d.edges[ce[(i + L - 1) % L]].kind) {
      start = i;
      break;
    }
  std::rotate(ce.begin(), ce.begin() + start, ce.end());
  for (int e : ce) {
    EdgeKind k = d.edges[e].kind;
    if (!cs.segments.empty() && cs.segments.back().kind == k)
      ++cs.segments.back().length;
    else
      cs.segments.push_back({k, 1});
  }
  std::set<int> on(ce.begin(), ce.end());
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
    const Edge& e = d.edges[i];
    if (e.kind != EdgeKind::Theta) continue;
    if (d.cls[e.src] != VertexClass::External || d.cls[e.dst] != VertexClass::External) continue;
    (on.count(i) ? cs.on_cycle_chords : cs.off_cycle_chords).push_back(i);
  }
  cs.k1 = static_cast<int>(cs.on_cycle_chords.size());
  cs.k2 = static_cast<int>(cs.off_cycle_chords.size());
  return cs;
}

JacobiDiagram reverse_vertex_orientation(const JacobiDiagram& d, int v, bool* changed) {
  JacobiDiagram r = d;
  if (v < 0 && !r.orientation.empty()) v = r.orientation.begin()->first;
  auto it = r.orientation.find(v);
  if (changed) *changed = it != r.orientation.end();
  if (it != r.orientation.end()) std::swap(it->second[0], it->second[1]);
  return r;
}

JacobiDiagram reverse_cycle(const JacobiDiagram& d) {
  auto cs = cycle_structure(d);
  JacobiDiagram r = d;
  std::set<int> on(cs.cycle_edges.begin(), cs.cycle_edges.end());
  for (int e : cs.cycle_edges) std::swap(r.edges[e].src, r.edges[e].dst);
  // At an internal cycle vertex the old cycle-in edge now leaves; its orientation slot goes to the new cycle-in edge.
  for (auto& [v, es] : r.orientation) {
    for (int slot = 0; slot < 2; ++slot) {
      if (!on.count(es[slot])) continue;
      for (int e : cs.cycle_edges)
        if (r.edges[e].dst == v && r.edges[e].kind == EdgeKind::Theta) es[slot] = e;
    }
  }
  return r;
}

SymmetryResult symmetry_sign(const JacobiDiagram& d, Parity n_parity) {
  auto cs = cycle_structure(d);
  SymmetryResult res;
  res.case_label = cs.cycle_edges.size() % 2 ? 'a' : 'b';
  res.axial_symmetry = isomorphic(reverse_cycle(d), d, false);
  if (n_parity == Parity::Odd && d.degree() % 2 == 1 && res.axial_symmetry)
    res.verdict = SymmetryVerdict::ForcesZero;
  return res;
}

JacobiDiagram wheel_diagram(int k) {
  if (k < 2) throw ValidationError("wheel degree must be at least 2");
  JacobiDiagram d;
  d.cls.assign(2 * k, VertexClass::External);
  for (int i = 0; i < k; ++i) d.edges.push_back({2 * i, 2 * i + 1, EdgeKind::Theta});
  for (int i = 0; i < k; ++i) d.edges.push_back({2 * i + 1, 2 * ((i + 1) % k), EdgeKind::Eta});
  return d;
}

}  // namespace bcr
