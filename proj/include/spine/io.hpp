#pragma once

// Line-oriented text formats. Every format ignores blank lines and anything
// after '#'. Identifiers are whitespace-free and may not contain ':', ',' or
// '|'. Parse failures raise Error("ParseError") with the line number.
//
// .spoly
//   NAME <name>
//   SHEETS
//     <id> <o|n> <genus> [<arc>:<slot>:<+|->]... [| <arc>:<slot>:<+|->...]...
//   ARCS
//     <id> <B|T> <closed|vertex:port,vertex:port> <trivial|swap> [<sheet>:<circuit>:<position>]...
//   VERTICES
//     <id> <a1> <a2> <b1> <b2>        each port as three digits: free, q-left, q-right slot
//
// .arr
//   NAME <name>
//   FACES
//     <id> <count> [UNBOUNDED]
//   CURVES
//     <id> <source> <edge>...
//   EDGES
//     <id> <curve> <tail|-> <head|-> <left face> <right face>
//   CROSSINGS
//     <id> <edge>:<h|t> x4             counter-clockwise
//   DECOR
//     <curve> <cx> <cy> <r>
//   ASSIGN
//     arc <arc> <edge>
//     vertex <vertex> <crossing>
//
// .plan
//   NAME <result name>
//   BASE <spoly> <arr>                  informational
//   PATCH <id> <o|n> <genus> <boundary count>
//   CIRCLE <id> <image curve> <left|right> seg:<sheet>:<left piece>:<right piece>
//          [cross:<arc>:<from slot>:<to slot>:<crossing> seg:...]...
//   CUT <sheet> KEEP <piece> PIECES <id>:<o|n>:<genus>...
//   DISK <id> <curve> <circle>...
//   COMBINED ... END                    an embedded .arr block
//   WITNESS <boundary count> ... END    an embedded .arr block

#include <string>

#include "spine/born_map.hpp"
#include "spine/polyhedron.hpp"
#include "spine/surgery.hpp"

namespace spine {

SimplePolyhedron parse_spoly(const std::string& text);
std::string emit_spoly(const SimplePolyhedron& p);

// The ASSIGN section of an .arr file is returned through the optional maps.
CurveArrangement parse_arr(const std::string& text,
                           std::map<std::string, std::string>* arc_to_edge = nullptr,
                           std::map<std::string, std::string>* vertex_to_crossing = nullptr);
std::string emit_arr(const CurveArrangement& a,
                     const std::map<std::string, std::string>& arc_to_edge = {},
                     const std::map<std::string, std::string>& vertex_to_crossing = {});

BornMap parse_born_map(const std::string& spoly, const std::string& arr);

SurgeryPlan parse_plan(const std::string& text, const BornMap& base);
std::string emit_plan(const SurgeryPlan& plan, const std::string& base_spoly = "",
                      const std::string& base_arr = "");

// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace spine
