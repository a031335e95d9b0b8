#pragma once

// Named example structures with fixed labels. Structures with a procedural
// description are built through the extension engines and checked against
// their figure description where one exists.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geolat/construction.hpp"
#include "geolat/extension.hpp"
#include "geolat/lattice_core.hpp"

namespace geolat::gallery {

// Boolean algebra on the first n letters, n ≤ 4.
Geometry fg(int n);

Geometry af2();

// Lines ABE, ACF, BCG, ADG, BDF, CDE, EFG.
Geometry fano();

// AF(2) followed by E into AB and CD, F into AC and BD, G into BC, AD and EF.
struct FanoRecipe {
  std::vector<Geometry> stages;  // AF(2), then after E, F and G
  std::vector<ModularCut> cuts;  // cut i lives in stages[i]
};
FanoRecipe fano_recipe();

// Two planes over ABCDEF that put a new point on both A∨C and B∨E.
struct AmalgamationFailure {
  Geometry a;  // lines ABD, ACP0, CDE, BEP0
  Geometry b;  // lines ABD, ACP1, CDE, BEP1, DFP1
  Geometry c;  // the shared subgeometry on A..F
};
AmalgamationFailure amalgamation_failure_pair();

// Stage k ≤ 3 of the chain whose union breaks smoothness. B_k adds blocks
// D_i E_i H_i C_i B_i D_{i+1} over A, B, C; A_k is generated by A, B, C and
// the C_i, B_i.
struct SmoothnessStage {
  Geometry a;
  Geometry b;
  Construction b_construction;           // over FG3, in block order
  std::vector<PointLabel> reverse_order;  // D_{k+1} H_k E_k D_k ... E_0 D_0
};
SmoothnessStage smoothness_stage(int k);

// Points A..F with nontrivial lines BCE and DEF.
Geometry lack_indep_plane();

// Rank 4: FG4 on ABCD, E and F generic, G and H under AEF, I and L under BEF,
// M and N under EF. B is generated by ABCD GHIL MN.
struct CoherenceGadget {
  Geometry a;
  Geometry b;
  Geometry c;
  Construction c_construction;
};
CoherenceGadget coherence_failure_rank4();

// Points A..E with nontrivial lines BCE and ADE.
Geometry meet_subgeo_figure();

struct Item {
  std::vector<std::pair<std::string, Geometry>> parts;

  const Geometry& part(std::string_view name) const;
};

// Names accepted by build, with the argument they take (if any).
struct NameInfo {
  std::string name;
  std::optional<std::string> argument;
};
std::vector<NameInfo> names();

// Throws UnknownName for names outside the catalog or a bad argument.
Item build(std::string_view name, std::optional<int> arg = std::nullopt);

}  // namespace geolat::gallery
