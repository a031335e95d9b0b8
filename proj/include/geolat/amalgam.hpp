#pragma once

// Amalgamation of planes over a common meet-subgeometry, the obstruction to
// amalgamating along joins only, and the independence gadget.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "geolat/extension.hpp"
#include "geolat/lattice_core.hpp"

namespace geolat {

struct AmalgamStep {
  PointLabel point;
  Geometry host;          // the amalgam before the point is added
  std::vector<Flat> cut;  // flats of host the point is added to
};

struct AmalgamTrace {
  Geometry result;
  std::vector<AmalgamStep> steps;
};

// New points of B are added to A one at a time in label order; each is placed
// on the closures of the B-flats it lies on. Planes only.
Geometry amalgamate_planes(const Geometry& a, const Geometry& b, const Geometry& c);
AmalgamTrace amalgamate_planes_traced(const Geometry& a, const Geometry& b, const Geometry& c);

struct LPrimeReport {
  bool a_has_both_incidences = false;  // P0 on A∨C and on B∨E in the first plane
  bool b_has_both_incidences = false;  // same for P1 in the second plane
  bool shared_part_agrees = false;
  std::size_t candidates = 0;
  std::size_t valid_amalgams = 0;
  std::vector<std::string> lines;

  bool obstruction_confirmed() const {
    return a_has_both_incidences && b_has_both_incidences && shared_part_agrees && valid_amalgams == 0;
  }
};

// Checks the two planes that share ABCDEF but cannot be joined over it, and
// searches every identification of their lines for a common plane.
LPrimeReport verify_lprime_failure();

struct IndependenceGadget {
  Geometry a;
  Geometry b;
  std::vector<Flat> a_lines;  // a_i = P0_i ∨ P1_i
  Flat b_line;                // Q0 ∨ Q1 in b
};

// A is FG3 plus generic P0_i, P1_i for i < n; B adds generic Q0, Q1 and, for
// each i in J, a point R_i on both a_i and Q0 ∨ Q1. n ≤ 4.
IndependenceGadget independence_gadget(int n, const std::set<int>& j);

}  // namespace geolat
