#pragma once

#include "bcr/alexander.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace bcr {

struct MarkedPresentation {
  RibbonPresentation presentation;
  std::vector<Crossing> marks;
};

struct SchemeTerm {
  int sign = 1;
  RibbonPresentation presentation;
};

using Scheme = std::vector<SchemeTerm>;

constexpr int kMaxMarks = 12;

void validate_marks(const MarkedPresentation& mp);
// Term order follows subset bitmasks: bit i set means mark i is unclasped.
Scheme expand(const MarkedPresentation& mp);
// Removes several crossings at once.
RibbonPresentation unclasp_all(const RibbonPresentation& p, std::vector<Crossing> cs);

using RationalInvariant = std::function<Rational(const RibbonPresentation&)>;
using LaurentInvariant = std::function<Laurent(const RibbonPresentation&)>;

Rational evaluate(const RationalInvariant& f, const Scheme& s, int threads = 1);
Laurent evaluate(const LaurentInvariant& f, const Scheme& s, int threads = 1);

RationalInvariant alpha_invariant(int j);

bool is_star_like(const MarkedPresentation& mp);

struct RandomPresentationLimits {
  int max_disks = 6;
  int max_piercings = 3;
};

// Random tree presentation with at least `marks` crossings, and `marks` distinct marked crossings.
MarkedPresentation random_marked_presentation(std::mt19937_64& rng, int marks, const RandomPresentationLimits& lim = {});

struct FiniteTypeReport {
  int k = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, Rational>> nonzero;  // (sample index, value)
};

// Evaluates f on `samples` random (k+1)-schemes.
FiniteTypeReport finite_type_report(const RationalInvariant& f, int k, int samples, std::uint64_t seed);

}  // namespace bcr
