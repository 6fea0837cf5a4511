// bcrlab: command-line front end. Every command prints one JSON document on stdout
// (or to --out); errors go to stderr as {"error":...,"message":...}.
// Exit status: 0 success, 1 resource bound exceeded, 2 invalid input.

#include "bcr/algebra.hpp"
#include "bcr/alexander.hpp"
#include "bcr/chord_map.hpp"
#include "bcr/errors.hpp"
#include "bcr/json_io.hpp"
#include "bcr/mc.hpp"
#include "bcr/schemes.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace bcr;
using io::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
  std::string out;
  int k = 2;
  std::string diagram, presentation, marked, invariant = "alexander", relation_config, patterns, kinds;
  std::optional<int> wheel;
  int deleted = -1;
  int order = kDefaultSeriesOrder;
  int threads = 0;
  // mc
  int n = 3;
  int j = 1;
  double eps = 0.1;
  std::string samples = "1e6";
  std::uint64_t seed = kDefaultSeed;
  int batches = 40;
  double delta = 1e-6;
  double scale = 1.0;
  double separation = 0.0;
  bool swapped = false, antithetic = false, reverse_circle = false;
  std::string embedding = "plane";
};

void emit(const Options& o, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ValidationError("cannot write " + o.out);
  f << text;
}

RelationConfig relation_config(const Options& o) {
  return o.relation_config.empty() ? RelationConfig{} : io::relation_config_from_json(io::read_file(o.relation_config));
}

RibbonPresentation load_presentation(const Options& o) {
  if (o.wheel && !o.presentation.empty()) throw ValidationError("give either --presentation or --wheel");
  if (o.wheel) return wheel_presentation(*o.wheel);
  if (o.presentation.empty()) throw ValidationError("--presentation or --wheel is required");
  return io::presentation_from_json(io::read_file(o.presentation));
}

MarkedPresentation load_marked(const Options& o) {
  if (o.wheel && !o.marked.empty()) throw ValidationError("give either --marked or --wheel");
  if (o.wheel) {
    MarkedPresentation mp{wheel_presentation(*o.wheel), {}};
    for (int b = 0; b < static_cast<int>(mp.presentation.bands.size()); ++b)
      for (int i = 0; i < static_cast<int>(mp.presentation.bands[b].piercings.size()); ++i) mp.marks.push_back({b, i});
    return mp;
  }
  if (o.marked.empty()) throw ValidationError("--marked or --wheel is required");
  return io::marked_from_json(io::read_file(o.marked));
}

std::uint64_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError("--samples must be a number");
  }
  if (pos != s.size() || !(x >= 1) || x > 1e15 || std::floor(x) != x)
    throw ValidationError("--samples must be a positive integer");
  return static_cast<std::uint64_t>(x);
}

mc::MCConfig mc_config(const Options& o) {
  mc::MCConfig c;
  c.samples = parse_count(o.samples);
  c.seed = o.seed;
  c.batches = o.batches;
  c.threads = o.threads;
  c.delta = o.delta;
  c.scale = o.scale;
  c.antithetic = o.antithetic;
  mc::validate_config(c);
  return c;
}

void cmd_enumerate(const Options& o) {
  Enumeration e = enumerate_connected(o.k);
  json classes = json::array();
  for (const auto& c : e.classes)
    classes.push_back({{"key", c.key},
                       {"diagram", io::to_json(c.rep)},
                       {"automorphisms", c.automorphisms},
                       {"self_reversing", c.self_reversing}});
  emit(o, {{"k", e.k}, {"count", e.count_unoriented}, {"count_oriented", e.count_oriented}, {"classes", classes}});
}

void cmd_weight(const Options& o) {
  RelationConfig cfg = relation_config(o);
  std::optional<PatternSet> ps;
  if (!o.patterns.empty()) ps = io::patterns_from_json(io::read_file(o.patterns));
  auto weight = [&](const JacobiDiagram& d) -> Rational {
    if (ps) {
      auto rep = validate(d);
      if (!rep.ok) throw ValidationError("inadmissible diagram: " + rep.violations.front());
      if (has_yl_subgraph(d, *ps).found) return 0;
    }
    return weight_w(d, cfg);
  };
  if (!o.diagram.empty()) {
    JacobiDiagram d = io::diagram_from_json(io::read_file(o.diagram));
    emit(o, {{"k", d.degree()}, {"key", canonical_form(d).key}, {"weight", io::rational_json(weight(d))}});
    return;
  }
  const AlgebraData& a = algebra(o.k, cfg);
  if (a.dimension != 1)
    throw StructuralError("quotient has dimension " + std::to_string(a.dimension) + "; no unique weight");
  json table = json::array();
  for (const auto& c : a.classes.classes)
    table.push_back({{"key", c.key},
                     {"diagram", io::to_json(c.rep)},
                     {"weight", io::rational_json(c.self_reversing ? Rational(0) : weight(c.rep))}});
  emit(o, {{"k", o.k}, {"config", io::to_json(cfg)}, {"weights", table}});
}

void cmd_quotient_dim(const Options& o) {
  RelationConfig cfg = relation_config(o);
  emit(o, {{"k", o.k}, {"dim", quotient_dimension(o.k, cfg)}});
}

void cmd_relations(const Options& o) {
  std::set<RelationKind> kinds = {RelationKind::ST, RelationKind::SU, RelationKind::STU, RelationKind::C};
  if (!o.kinds.empty()) {
    kinds.clear();
    std::stringstream ss(o.kinds);
    std::string tok;
    while (std::getline(ss, tok, ',')) kinds.insert(parse_relation_kind(tok));
  }
  RelationConfig cfg = relation_config(o);
  if (!(cfg == RelationConfig{})) throw ValidationError("relation export uses the default sign configuration");
  emit(o, io::to_json(relation_vectors(o.k, kinds, cfg), o.k));
}

void cmd_alexander(const Options& o) {
  RibbonPresentation p = load_presentation(o);
  emit(o, {{"alexander", io::to_json(alexander_polynomial(p, o.deleted))},
           {"raw", io::to_json(alexander_raw(p, o.deleted))},
           {"text", alexander_polynomial(p, o.deleted).str()}});
}

void cmd_alpha(const Options& o) {
  if (o.order < 2) throw ValidationError("--order must be at least 2");
  if (o.order > 64) throw ResourceError("--order is capped at 64");
  RibbonPresentation p = load_presentation(o);
  auto a = alpha_coefficients(p, o.order);
  json arr = json::array();
  for (const auto& x : a) arr.push_back(io::rational_json(x));
  emit(o, {{"order", o.order}, {"alpha", arr}});
}

void cmd_scheme_eval(const Options& o) {
  MarkedPresentation mp = load_marked(o);
  Scheme s = expand(mp);
  int threads = o.threads > 0 ? o.threads : 1;
  json value;
  if (o.invariant == "alexander") {
    value = io::to_json(evaluate(LaurentInvariant([](const RibbonPresentation& p) { return alexander_polynomial(p); }),
                                 s, threads));
  } else if (o.invariant.rfind("alpha:", 0) == 0) {
    int j = 0;
    try {
      std::size_t pos = 0;
      j = std::stoi(o.invariant.substr(6), &pos);
      if (pos != o.invariant.size() - 6) throw std::invalid_argument(o.invariant);
    } catch (const std::exception&) {
      throw ValidationError("invariant must be alexander or alpha:j");
    }
    if (j > 64) throw ResourceError("alpha index is capped at 64");
    value = io::rational_json(evaluate(alpha_invariant(j), s, threads));
  } else {
    throw ValidationError("invariant must be alexander or alpha:j");
  }
  emit(o, {{"invariant", o.invariant}, {"terms", s.size()}, {"value", value}});
}

void cmd_scheme_expand(const Options& o) { emit(o, io::to_json(expand(load_marked(o)))); }

void cmd_chordmap(const Options& o) {
  MarkedPresentation mp = load_marked(o);
  JacobiDiagram d = chord_diagram_of(mp);
  emit(o, {{"diagram", io::to_json(d)},
           {"chord_diagram", is_chord_diagram(d)},
           {"pairing_value", io::rational_json(pairing_value(mp))}});
}

void cmd_mc(const Options& o, const std::string& mode) {
  if (o.n != 3) throw ValidationError("only n = 3 is implemented");
  mc::MCConfig cfg = mc_config(o);
  json rep = {{"mode", mode}, {"config", io::to_json(cfg)}, {"n", o.n}};
  if (mode == "linking") {
    mc::HopfPair h{o.separation, o.reverse_circle};
    rep["separation"] = o.separation;
    rep["reverse_circle"] = o.reverse_circle;
    rep["estimate"] = io::to_json(mc::linking_estimate(h, cfg));
  } else if (mode == "phi-diff") {
    rep["k"] = o.k;
    rep["j"] = o.j;
    rep["eps"] = o.eps;
    rep["swapped"] = o.swapped;
    rep["estimate"] = io::to_json(mc::phi_difference_estimate(o.k, o.j, o.eps, cfg, o.swapped));
  } else {
    std::shared_ptr<const mc::Embedding> psi;
    std::vector<std::pair<mc::Vec, double>> regions;
    if (o.embedding == "plane") {
      psi = mc::standard_plane(3);
    } else if (o.embedding == "wheel") {
      mc::WheelGeometry g;
      g.k = o.k;
      g.eps = o.eps;
      psi = mc::wheel_embedding(g);
      regions = mc::wheel_regions(g);
      rep["k"] = o.k;
      rep["eps"] = o.eps;
    } else {
      throw ValidationError("--embedding must be plane or wheel");
    }
    rep["embedding"] = psi->name();
    auto z = mc::z2_estimate(*psi, cfg, regions);
    rep["estimate"] = io::to_json(z.total);
    rep["terms"] = {{"internal", io::to_json(z.internal_term)},
                    {"triangle", io::to_json(z.triangle_term)},
                    {"wheel", io::to_json(z.wheel_term)}};
  }
  emit(o, rep);
}

int report_error(const char* kind, const std::string& msg, int code) {
  std::cerr << json{{"error", kind}, {"message", msg}, {"exit", code}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bcrlab: Jacobi diagrams, ribbon presentations and configuration-space integrals"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "Write the JSON result to this file"); };
  auto cfg_opt = [&](CLI::App* c) {
    c->add_option("--relation-config", o.relation_config, "JSON file {\"c_st\":+-1,\"c_t\":+-1}")->check(CLI::ExistingFile);
  };

  auto* diagrams = app.add_subcommand("diagrams", "Jacobi diagram enumeration and weights");
  diagrams->require_subcommand(1);
  auto* en = diagrams->add_subcommand("enumerate", "Connected degree-k diagrams up to isomorphism");
  en->add_option("--k", o.k, "Degree")->required();
  out_opt(en);
  en->callback([&] { action = [&] { cmd_enumerate(o); }; });
  auto* wt = diagrams->add_subcommand("weight", "Weight of one diagram (--diagram) or the weight table (--k)");
  auto* wd = wt->add_option("--diagram", o.diagram, "Diagram JSON file")->check(CLI::ExistingFile);
  wt->add_option("--k", o.k, "Degree of the weight table")->excludes(wd);
  wt->add_option("--patterns", o.patterns, "Y/L pattern JSON file")->check(CLI::ExistingFile);
  cfg_opt(wt);
  out_opt(wt);
  wt->callback([&] { action = [&] { cmd_weight(o); }; });

  auto* alg = app.add_subcommand("algebra", "Relations and the quotient A_k");
  alg->require_subcommand(1);
  auto* qd = alg->add_subcommand("quotient-dim", "Dimension of A_k");
  qd->add_option("--k", o.k, "Degree")->required();
  cfg_opt(qd);
  out_opt(qd);
  qd->callback([&] { action = [&] { cmd_quotient_dim(o); }; });
  auto* rel = alg->add_subcommand("relations", "Export the relation vectors");
  rel->add_option("--k", o.k, "Degree")->required();
  rel->add_option("--kinds", o.kinds, "Comma-separated subset of ST,SU,STU,C");
  cfg_opt(rel);
  out_opt(rel);
  rel->callback([&] { action = [&] { cmd_relations(o); }; });

  auto pres_opts = [&](CLI::App* c) {
    c->add_option("--presentation", o.presentation, "Presentation JSON file")->check(CLI::ExistingFile);
    c->add_option("--wheel", o.wheel, "Use the built-in wheel presentation W_k");
  };
  auto* alx = app.add_subcommand("alexander", "Normalized Alexander polynomial");
  pres_opts(alx);
  alx->add_option("--deleted", o.deleted, "Generator column to delete (default: based disk)");
  out_opt(alx);
  alx->callback([&] { action = [&] { cmd_alexander(o); }; });
  auto* alp = app.add_subcommand("alpha", "Coefficients of log Delta(e^h)");
  pres_opts(alp);
  alp->add_option("--order", o.order, "Series order")->capture_default_str();
  out_opt(alp);
  alp->callback([&] { action = [&] { cmd_alpha(o); }; });

  auto marked_opts = [&](CLI::App* c) {
    c->add_option("--marked", o.marked, "Marked presentation JSON file")->check(CLI::ExistingFile);
    c->add_option("--wheel", o.wheel, "Use W_k marked at every crossing");
  };
  auto* sch = app.add_subcommand("scheme", "k-schemes");
  sch->require_subcommand(1);
  auto* sev = sch->add_subcommand("eval", "Evaluate an invariant on the expanded scheme");
  marked_opts(sev);
  sev->add_option("--invariant", o.invariant, "alexander | alpha:j")->capture_default_str();
  sev->add_option("--threads", o.threads, "Worker threads");
  out_opt(sev);
  sev->callback([&] { action = [&] { cmd_scheme_eval(o); }; });
  auto* sex = sch->add_subcommand("expand", "Emit the 2^m signed terms");
  marked_opts(sex);
  out_opt(sex);
  sex->callback([&] { action = [&] { cmd_scheme_expand(o); }; });

  auto* cm = app.add_subcommand("chordmap", "Chord diagram of a star-like marked presentation");
  marked_opts(cm);
  out_opt(cm);
  cm->callback([&] { action = [&] { cmd_chordmap(o); }; });

  auto* mcc = app.add_subcommand("mc", "Monte Carlo integrals");
  std::string mode;
  mcc->add_option("mode", mode, "linking | phi-diff | z2")
      ->required()
      ->check(CLI::IsMember({"linking", "phi-diff", "z2"}));
  mcc->add_option("--n", o.n, "Source dimension")->capture_default_str();
  mcc->add_option("--k", o.k, "Wheel degree")->capture_default_str();
  mcc->add_option("--j", o.j, "Crossing index for phi-diff")->capture_default_str();
  mcc->add_option("--eps", o.eps, "Wheel scale")->capture_default_str();
  mcc->add_option("--samples", o.samples, "Sample count (1e6 notation accepted)")->capture_default_str();
  mcc->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  mcc->add_option("--batches", o.batches, "Batch count for error bars")->capture_default_str();
  mcc->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
  mcc->add_option("--delta", o.delta, "Diagonal cutoff")->capture_default_str();
  mcc->add_option("--scale", o.scale, "Scale of the tangent change of variables")->capture_default_str();
  mcc->add_option("--separation", o.separation, "linking: shift of the 3-sphere along x3")->capture_default_str();
  mcc->add_flag("--reverse-circle", o.reverse_circle, "linking: reverse the circle");
  mcc->add_flag("--swapped", o.swapped, "phi-diff: exchange the two embeddings");
  mcc->add_flag("--antithetic", o.antithetic, "z2: average with the mirrored ambient point");
  mcc->add_option("--embedding", o.embedding, "z2: plane | wheel")->capture_default_str();
  out_opt(mcc);
  mcc->callback([&] { action = [&] { cmd_mc(o, mode); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), 2);
  }
  try {
    action();
  } catch (const ValidationError& e) {
    return report_error("validation", e.what(), 2);
  } catch (const StructuralError& e) {
    return report_error("structure", e.what(), 2);
  } catch (const ResourceError& e) {
    return report_error("resource", e.what(), 1);
  } catch (const std::bad_alloc&) {
    return report_error("resource", "out of memory", 1);
  } catch (const std::exception& e) {
    return report_error("validation", e.what(), 2);
  }
  return 0;
}
