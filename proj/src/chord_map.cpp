#include "bcr/chord_map.hpp"
#include "bcr/algebra.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <set>

namespace bcr {

bool is_chord_diagram(const JacobiDiagram& d) { return d.num_internal() == 0 && !has_pure_eta_cycle(d); }

JacobiDiagram chord_diagram_of(const MarkedPresentation& gamma) {
  if (!is_star_like(gamma)) throw ValidationError("singular-disk data must be star-like");
  const auto& p = gamma.presentation;
  std::set<Crossing> marked(gamma.marks.begin(), gamma.marks.end());
  if (static_cast<int>(marked.size()) != p.crossing_count())
    throw ValidationError("every crossing must be marked");
  if (p.disks - 1 != p.crossing_count())
    throw ValidationError("number of non-based disks must equal the number of crossings");
  // Star-like only constrains pierced disks; unpierced branches must also hang off the based disk.
  std::vector<int> band_of(p.disks, -1);
  for (int b = 0; b < static_cast<int>(p.bands.size()); ++b) {
    const Band& band = p.bands[b];
    int other = band.from == p.based ? band.to : band.from;
    if (band.from != p.based && band.to != p.based) throw ValidationError("band not incident to the based disk");
    band_of[other] = b;
  }
  JacobiDiagram d;
  std::vector<int> head(p.disks, -1);
  std::vector<std::vector<int>> label(p.bands.size());
  for (int j = 0; j < p.disks; ++j) {
    if (j == p.based) continue;
    const Band& band = p.bands[band_of[j]];
    std::vector<Piercing> seq = band.piercings;
    if (band.from != p.based) std::reverse(seq.begin(), seq.end());
    int prev = -1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      int u = d.num_vertices();
      d.cls.push_back(VertexClass::External);
      label[band_of[j]].push_back(u);
      if (prev >= 0) d.edges.push_back({prev, u, EdgeKind::Eta});
      prev = u;
    }
    head[j] = d.num_vertices();
    d.cls.push_back(VertexClass::External);
    if (prev >= 0) d.edges.push_back({prev, head[j], EdgeKind::Eta});
  }
  for (int b = 0; b < static_cast<int>(p.bands.size()); ++b) {
    const Band& band = p.bands[b];
    int m = static_cast<int>(band.piercings.size());
    for (int i = 0; i < m; ++i) {
      int pos = band.from == p.based ? i : m - 1 - i;
      int disk = band.piercings[i].disk;
      d.edges.push_back({head[disk], label[b][pos], EdgeKind::Theta});
    }
  }
  auto rep = validate(d);
  if (!rep.ok) throw ValidationError("singular-disk data gives an inadmissible diagram: " + rep.violations.front());
  if (!is_connected(d)) throw ValidationError("singular-disk data gives a disconnected diagram");
  return d;
}

Rational pairing_value(const MarkedPresentation& gamma) {
  JacobiDiagram d = chord_diagram_of(gamma);
  if (gamma.marks.size() % 2) return 0;
  return weight_w(d);
}

}  // namespace bcr
