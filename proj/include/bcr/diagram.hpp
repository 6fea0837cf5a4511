#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bcr {

enum class VertexClass : std::uint8_t { External = 0, Internal = 1 };
enum class EdgeKind : std::uint8_t { Theta = 0, Eta = 1 };

struct Edge {
  int src = 0;
  int dst = 0;
  EdgeKind kind = EdgeKind::Theta;
  bool operator==(const Edge&) const = default;
};

// Vertices are 0-based here; JSON ids are 1-based.
// orientation[v] lists the two ingoing theta-edge indices of internal vertex v in order.
struct JacobiDiagram {
  std::vector<VertexClass> cls;
  std::vector<Edge> edges;
  std::map<int, std::array<int, 2>> orientation;

  int num_vertices() const { return static_cast<int>(cls.size()); }
  int degree() const { return num_vertices() / 2; }
  int num_internal() const;
  bool operator==(const JacobiDiagram&) const = default;
};

struct Incidence {
  std::vector<int> theta_in, theta_out, eta_in, eta_out;  // edge indices
};

std::vector<Incidence> incidence(const JacobiDiagram& d);

// A: theta-in + eta-out, B: theta-in + eta-in + eta-out, C: theta-out only,
// D: theta-out + eta-in, I: internal.
enum class VertexType : char { A = 'A', B = 'B', C = 'C', D = 'D', I = 'I', Other = '?' };
VertexType vertex_type(const JacobiDiagram& d, const std::vector<Incidence>& inc, int v);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const JacobiDiagram& d);
bool is_connected(const JacobiDiagram& d);
bool has_pure_eta_cycle(const JacobiDiagram& d);

// Source vertices of the two ingoing theta-edges of v, in orientation order.
std::array<int, 2> in_sources(const JacobiDiagram& d, int v);

struct CanonicalForm {
  std::string key;            // isomorphism class ignoring vertex orientation
  std::vector<int> relabel;   // old vertex -> canonical vertex
  int sign = 1;               // orientation relative to the canonical representative; 0 if the class is its own reversal
  int automorphisms = 1;      // |Aut|, edge orientations preserved
};

CanonicalForm canonical_form(const JacobiDiagram& d);
// Relabelled copy with every orientation listing the smaller canonical source first.
JacobiDiagram canonical_representative(const JacobiDiagram& d);
// Key that also distinguishes vertex orientations.
std::string oriented_key(const JacobiDiagram& d);
bool isomorphic(const JacobiDiagram& a, const JacobiDiagram& b, bool with_orientation = true);

int automorphism_count(const JacobiDiagram& d, bool oriented_edges);

struct EnumeratedClass {
  std::string key;
  JacobiDiagram rep;
  bool self_reversing = false;
  int automorphisms = 1;
};

struct Enumeration {
  int k = 0;
  std::vector<EnumeratedClass> classes;  // sorted by key
  int count_unoriented = 0;
  int count_oriented = 0;
};

Enumeration enumerate_connected(int k);

struct PatternVertex {
  char type;  // A B C D I or '*'
};
struct PatternEdge {
  int src, dst;
  EdgeKind kind;
};
struct Pattern {
  std::string name;
  std::vector<PatternVertex> vertices;
  std::vector<PatternEdge> edges;
};
using PatternSet = std::vector<Pattern>;

const PatternSet& default_yl_patterns();

struct YLMatch {
  bool found = false;
  std::string pattern;
  std::vector<int> witness;
};

YLMatch has_yl_subgraph(const JacobiDiagram& d, const PatternSet& patterns = default_yl_patterns());

struct CycleSegment {
  EdgeKind kind;
  int length;
};

struct CycleStructure {
  std::vector<int> cycle_edges;  // in traversal order
  std::vector<CycleSegment> segments;
  std::vector<int> on_cycle_chords;
  std::vector<int> off_cycle_chords;
  int k1 = 0;
  int k2 = 0;
};

CycleStructure cycle_structure(const JacobiDiagram& d);

// Swaps the orientation at v (first internal vertex when v < 0).
JacobiDiagram reverse_vertex_orientation(const JacobiDiagram& d, int v = -1, bool* changed = nullptr);
JacobiDiagram reverse_cycle(const JacobiDiagram& d);

enum class Parity { Odd, Even };
enum class SymmetryVerdict { ForcesZero, NoConclusion };

struct SymmetryResult {
  SymmetryVerdict verdict = SymmetryVerdict::NoConclusion;
  bool axial_symmetry = false;
  char case_label = '-';  // 'a' odd cycle, 'b' even cycle
};

SymmetryResult symmetry_sign(const JacobiDiagram& d, Parity n_parity);

JacobiDiagram wheel_diagram(int k);

}  // namespace bcr
