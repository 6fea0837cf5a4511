#pragma once

#include "bcr/exact.hpp"
#include "bcr/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bcr {

struct Piercing {
  int disk = 0;
  int sign = 1;
  bool operator==(const Piercing&) const = default;
};

// Piercings are listed in order along the band, starting at `from`.
struct Band {
  int from = 0;
  int to = 0;
  std::vector<Piercing> piercings;
  bool operator==(const Band&) const = default;
};

struct RibbonPresentation {
  int disks = 1;
  int based = 0;
  std::vector<Band> bands;
  int crossing_count() const;
  bool operator==(const RibbonPresentation&) const = default;
};

// A crossing is identified by (band index, position along the band).
struct Crossing {
  int band = 0;
  int piercing = 0;
  bool operator==(const Crossing&) const = default;
  auto operator<=>(const Crossing&) const = default;
};

struct PresentationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

PresentationReport validate_presentation(const RibbonPresentation& p);

// (generator, +1 | -1)
using Word = std::vector<std::pair<int, int>>;

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
};

GroupPresentation knot_group(const RibbonPresentation& p);
Laurent fox_derivative(const Word& w, int generator, int generator_count);

// Relator-by-generator Fox matrix with column `deleted` removed (the based disk when negative).
std::vector<std::vector<Laurent>> alexander_matrix(const RibbonPresentation& p, int deleted = -1);
Laurent determinant(std::vector<std::vector<Laurent>> m);
Laurent alexander_raw(const RibbonPresentation& p, int deleted = -1);
// Multiplies by the unit +-t^m giving value 1 and vanishing derivative at t = 1.
Laurent normalize_alexander(const Laurent& raw);
Laurent alexander_polynomial(const RibbonPresentation& p, int deleted = -1);

constexpr int kDefaultSeriesOrder = 12;

// log Delta(e^h) up to h^order; entry j is alpha_j.
std::vector<Rational> alpha_series(const Laurent& delta, int order = kDefaultSeriesOrder);
std::vector<Rational> alpha_coefficients(const RibbonPresentation& p, int order = kDefaultSeriesOrder);

RibbonPresentation unclasp(const RibbonPresentation& p, const Crossing& c);
// Disks of q other than its based disk are appended; reindex (if given) receives q's disk map.
RibbonPresentation connected_sum(const RibbonPresentation& p, const RibbonPresentation& q,
                                 std::vector<int>* reindex = nullptr);
RibbonPresentation trivial_presentation();
// D_0 based; band B_j joins D_0 to D_j and pierces D_{j-1} (indices mod k).
// Signs are +1 except B_k for even k, which pierces with -1.
RibbonPresentation wheel_presentation(int k);

}  // namespace bcr
