#pragma once

// Geometry and construction documents, Hasse-diagram export, and the
// command-line entry point.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "geolat/construction.hpp"
#include "geolat/lattice_core.hpp"

namespace geolat {

// Keys in lexicographic order, two-space indentation, trailing newline.
// nontrivial_flats lists, per rank below the top, the flats with more points
// than their rank; full_flats (optional) lists every flat.
std::string write_geometry(const Geometry& g, bool full_flats = false);

// Throws ParseError (with line and column) for malformed text, bad labels or
// repeated labels; lattice diagnostics surface as the library's own errors.
Geometry read_geometry(std::string_view text);

std::string write_construction(const Construction& c);
Construction read_construction(std::string_view text);

// Directed graph with one node per flat and one edge per cover, drawn bottom
// to top with each rank on its own row.
std::string export_hasse_dot(const Geometry& g);

// Exit status 0 when the command succeeds or the relation holds, 1 when it
// does not hold, 2 for usage, parse and validation errors. "-" as a file
// argument reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace geolat
