#include "bcr/schemes.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace bcr {

void validate_marks(const MarkedPresentation& mp) {
  auto r = validate_presentation(mp.presentation);
  if (!r.ok) throw ValidationError("invalid presentation: " + r.violations.front());
  if (static_cast<int>(mp.marks.size()) > kMaxMarks)
    throw ResourceError("at most " + std::to_string(kMaxMarks) + " marks are supported");
  std::set<Crossing> seen;
  for (const auto& c : mp.marks) {
    const auto& bands = mp.presentation.bands;
    if (c.band < 0 || c.band >= static_cast<int>(bands.size()) || c.piercing < 0 ||
        c.piercing >= static_cast<int>(bands[c.band].piercings.size()))
      throw ValidationError("mark (" + std::to_string(c.band) + "," + std::to_string(c.piercing) +
                            ") is not a crossing");
    if (!seen.insert(c).second) throw ValidationError("duplicate mark");
  }
}

RibbonPresentation unclasp_all(const RibbonPresentation& p, std::vector<Crossing> cs) {
  std::sort(cs.begin(), cs.end(), [](const Crossing& a, const Crossing& b) { return b < a; });
  RibbonPresentation r = p;
  for (const auto& c : cs) r = unclasp(r, c);
  return r;
}

Scheme expand(const MarkedPresentation& mp) {
  validate_marks(mp);
  std::size_t m = mp.marks.size();
  Scheme s;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Crossing> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) sub.push_back(mp.marks[i]);
    int sign = sub.size() % 2 ? -1 : 1;
    s.push_back({sign, unclasp_all(mp.presentation, sub)});
  }
  return s;
}

template <class T, class F>
static T evaluate_impl(const F& f, const Scheme& s, int threads) {
  std::vector<T> vals(s.size());
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(s.size())));
  if (nt == 1) {
    for (std::size_t i = 0; i < s.size(); ++i) vals[i] = f(s[i].presentation);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < s.size(); i += nt) vals[i] = f(s[i].presentation);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  T sum{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].sign == 1) sum = sum + vals[i];
    else sum = sum - vals[i];
  }
  return sum;
}

Rational evaluate(const RationalInvariant& f, const Scheme& s, int threads) {
  return evaluate_impl<Rational>(f, s, threads);
}

Laurent evaluate(const LaurentInvariant& f, const Scheme& s, int threads) {
  return evaluate_impl<Laurent>(f, s, threads);
}

RationalInvariant alpha_invariant(int j) {
  if (j < 2) throw ValidationError("alpha index must be at least 2");
  return [j](const RibbonPresentation& p) {
    return alpha_coefficients(p, std::max(j, kDefaultSeriesOrder))[j];
  };
}

bool is_star_like(const MarkedPresentation& mp) {
  validate_marks(mp);
  const auto& p = mp.presentation;
  for (const auto& c : mp.marks) {
    int d = p.bands[c.band].piercings[c.piercing].disk;
    if (d == p.based) return false;
    int incident = 0;
    bool to_base = false;
    for (const auto& b : p.bands)
      if (b.from == d || b.to == d) {
        ++incident;
        to_base = b.from == p.based || b.to == p.based;
      }
    if (incident != 1 || !to_base) return false;
  }
  return true;
}

MarkedPresentation random_marked_presentation(std::mt19937_64& rng, int marks, const RandomPresentationLimits& lim) {
  if (marks < 0 || marks > kMaxMarks) throw ValidationError("mark count out of range");
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  while (true) {
    MarkedPresentation mp;
    auto& p = mp.presentation;
    p.disks = uni(2, lim.max_disks);
    for (int d = 1; d < p.disks; ++d) {
      int other = uni(0, d - 1);
      Band b = uni(0, 1) ? Band{other, d, {}} : Band{d, other, {}};
      int np = uni(0, lim.max_piercings);
      for (int i = 0; i < np; ++i) b.piercings.push_back({uni(0, p.disks - 1), uni(0, 1) ? 1 : -1});
      p.bands.push_back(std::move(b));
    }
    std::vector<Crossing> all;
    for (int b = 0; b < static_cast<int>(p.bands.size()); ++b)
      for (int i = 0; i < static_cast<int>(p.bands[b].piercings.size()); ++i) all.push_back({b, i});
    if (static_cast<int>(all.size()) < marks) continue;
    std::shuffle(all.begin(), all.end(), rng);
    mp.marks.assign(all.begin(), all.begin() + marks);
    return mp;
  }
}

FiniteTypeReport finite_type_report(const RationalInvariant& f, int k, int samples, std::uint64_t seed) {
  if (k < 1 || samples < 0) throw ValidationError("finite type report needs k >= 1 and samples >= 0");
  FiniteTypeReport rep;
  rep.k = k;
  rep.samples = samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    auto mp = random_marked_presentation(rng, k + 1);
    Rational v = evaluate(f, expand(mp));
    if (v != 0) rep.nonzero.push_back({i, v});
  }
  return rep;
}

}  // namespace bcr
