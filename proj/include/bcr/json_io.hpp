#pragma once

#include "bcr/algebra.hpp"
#include "bcr/alexander.hpp"
#include "bcr/diagram.hpp"
#include "bcr/mc.hpp"
#include "bcr/schemes.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON forms of the data types. Parsers throw ValidationError on malformed input.
namespace bcr::io {

using json = nlohmann::json;

json read_file(const std::string& path);

// {"vertices":[{"id":1,"class":"external"},...],"edges":[{"src":1,"dst":2,"kind":"theta"},...],
//  "orientation":{"<internal id>":[edge index, edge index]}}; ids are 1-based, edge indices 0-based.
json to_json(const JacobiDiagram& d);
JacobiDiagram diagram_from_json(const json& j);

// {"disks":3,"based":0,"bands":[{"from":0,"to":1,"piercings":[{"disk":2,"sign":1}]}]}
json to_json(const RibbonPresentation& p);
RibbonPresentation presentation_from_json(const json& j);

// Presentation plus "marks":[{"band":0,"piercing":0},...] (0-based).
json to_json(const MarkedPresentation& mp);
MarkedPresentation marked_from_json(const json& j);

// List of presentations, each carrying its "sign".
json to_json(const Scheme& s);
Scheme scheme_from_json(const json& j);

// {"lo":e_min,"coeffs":[...]}; coefficients are integers or decimal strings when large.
json to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json rational_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const json& j);

// [{"kind":"STU","terms":[{"diagram":{...},"coeff_num":1,"coeff_den":1}]}]; diagrams are canonical representatives.
json to_json(const std::vector<Relation>& rels, int k);
std::vector<Relation> relations_from_json(const json& j, int k);

// {"c_st":1,"c_t":1}
json to_json(const RelationConfig& c);
RelationConfig relation_config_from_json(const json& j);

// [{"name":"Y","vertices":["C","C","I"],"edges":[{"src":1,"dst":3,"kind":"theta"}]}]
json to_json(const PatternSet& ps);
PatternSet patterns_from_json(const json& j);

json to_json(const mc::Estimate& e);
json to_json(const mc::MCConfig& c);

}  // namespace bcr::io
