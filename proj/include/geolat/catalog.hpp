#pragma once

// Exhaustive catalogs of small rank-3 structures and seeded random
// generators used by the property suites.

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "geolat/construction.hpp"
#include "geolat/lattice_core.hpp"

namespace geolat::catalog {

// One plane per isomorphism class on 3..max_points points labelled A, B, ...
std::vector<Geometry> planes_up_to(std::size_t max_points);

// Rank-3 semimodular lattices with at most max_irreducibles join-irreducible
// elements, each stored as the family of join-irreducible sets below its
// elements. Atoms are labelled A, B, ..., rank-2 elements covering a single
// atom X0, X1, ..., and a join-irreducible top T.
std::vector<Geometry> semimodular_rank3_lattices(std::size_t max_irreducibles);

// Atomistic graded rank-3 lattices on 3..max_points atoms: lines of size ≥ 2
// meeting pairwise in at most one atom, every atom on some line, but not
// every pair of atoms on a line. None of these is semimodular. One per
// isomorphism class; max_points ≤ 6.
std::vector<Geometry> partial_plane_lattices(std::size_t max_points);

// FG3 on A, B, C extended by uniformly chosen modular cuts until it has
// `points` points (at most 8), new points continuing the alphabet.
Geometry random_plane(std::mt19937& rng, std::size_t points);

// Adds `count` points named prefix0, prefix1, ... under random modular cuts,
// keeping `keep` a meet-subgeometry; falls back to a generic point. Cuts are
// enumerated, so the result has at most 9 points.
Geometry random_meet_extension(std::mt19937& rng, const Geometry& g, const Geometry& keep, std::size_t count,
                               std::string_view prefix);

// `steps` principal steps over `base` with uniformly drawn base sets; new
// points are named prefix0, prefix1, ...
Construction random_construction(std::mt19937& rng, const Geometry& base, std::size_t steps, std::string_view prefix);

}  // namespace geolat::catalog
