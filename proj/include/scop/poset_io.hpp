#pragma once

#include <string>

#include "scop/poset.hpp"

namespace scop::lattice {

enum class ExportFormat { dot, json };

// Throws InputError for anything other than "dot" or "json".
ExportFormat parse_export_format(const std::string& name);

// DOT: the Hasse diagram, covering edges only, oriented upward (rankdir=BT,
// one edge x -> y per cover y of x). JSON: every element with its canonical
// term string, the id of its orthocomplement, and its upper-cover ids, plus
// the declared zero-meet pairs. Output is byte-stable for a given poset.
std::string export_poset(const OrthoPoset& p, ExportFormat format);

}  // namespace scop::lattice
