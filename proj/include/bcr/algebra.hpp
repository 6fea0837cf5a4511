#pragma once

#include "bcr/diagram.hpp"
#include "bcr/exact.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <string>
#include <vector>

namespace bcr {

// Sparse combination of canonical classes; coefficients refer to the canonical representative's orientation.
struct DiagramVector {
  int k = 0;
  std::map<std::string, Rational> terms;

  void add(const std::string& key, const Rational& c);
  // Adds c * d; classes that are their own orientation reversal contribute nothing.
  void add(const JacobiDiagram& d, const Rational& c);
  bool empty() const { return terms.empty(); }
  bool operator==(const DiagramVector&) const = default;
};

enum class RelationKind { ST, SU, STU, C };
std::string to_string(RelationKind k);
RelationKind parse_relation_kind(const std::string& s);

struct Relation {
  RelationKind kind;
  DiagramVector vec;
};

// Signs of the uncontracted terms. c_st multiplies the internal-vertex term of ST,
// c_t the T term of SU/STU; the U term carries -c_t.
struct RelationConfig {
  int c_st = 1;
  int c_t = 1;
  bool operator<(const RelationConfig& o) const { return std::tie(c_st, c_t) < std::tie(o.c_st, o.c_t); }
  bool operator==(const RelationConfig&) const = default;
};

// Fraction-free row echelon over the integers.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(int ncols) : ncols_(ncols) {}
  bool insert(std::vector<BigInt> row);
  bool in_span(std::vector<BigInt> row) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  // Basis of {x : row . x = 0 for all rows}.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  void reduce(std::vector<BigInt>& row) const;
  int ncols_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<int> pivots_;
};

struct AlgebraData {
  int k = 0;
  RelationConfig config;
  Enumeration classes;
  std::vector<std::string> basis;  // classes that are not their own reversal, key order
  std::map<std::string, int> index;
  std::vector<Relation> relations;
  std::shared_ptr<IntegerEchelon> echelon;
  int dimension = 0;
  std::map<std::string, Rational> weights;  // filled when dimension == 1
};

// Cached per (k, config).
const AlgebraData& algebra(int k, const RelationConfig& cfg = {});

std::vector<Relation> relation_vectors(int k, const std::set<RelationKind>& kinds, const RelationConfig& cfg = {});
int quotient_dimension(int k, const RelationConfig& cfg = {});

std::vector<BigInt> dense_row(const AlgebraData& a, const DiagramVector& v);
bool in_relation_span(const AlgebraData& a, const DiagramVector& v);

Rational weight_w(const JacobiDiagram& d, const RelationConfig& cfg = {});
Rational weight_on(const DiagramVector& v, const RelationConfig& cfg = {});
bool weight_antisymmetry_check(const JacobiDiagram& d, const RelationConfig& cfg = {});

enum class DerivedKind { IHX, Y, L };
DerivedKind parse_derived_kind(const std::string& s);
std::vector<DiagramVector> derived_instances(int k, DerivedKind kind);
bool derived_relation_check(int k, DerivedKind kind, const RelationConfig& cfg = {});

// (1/2) sum I(G) w(G) / |Aut G| over degree-k classes; keys are canonical keys.
double z_combination(int k, const std::map<std::string, double>& I_values, const RelationConfig& cfg = {});

// Degree-2 diagrams named by their coefficients in z_2: 1 internal vertex, 2 triangle with a leg,
// 3 wheel, 4 eta 2-cycle, 5 theta 2-cycle.
JacobiDiagram degree2_diagram(int index);

}  // namespace bcr
