#pragma once

// Finite constructions: a base geometry followed by principal extensions,
// each new point added freely under the join of its base set.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "geolat/lattice_core.hpp"

namespace geolat {

struct ConstructionStep {
  PointLabel point;
  LabelSet base;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct Construction {
  Geometry base;
  std::vector<ConstructionStep> steps;
};

using IndexSet = std::set<std::size_t>;

// Throws InvalidConstruction on the first broken invariant.
void validate_construction(const Construction& c);

Geometry run_construction(const Construction& c);

bool is_closed(const Construction& c, const IndexSet& x);
IndexSet close_indices(const Construction& c, const IndexSet& x0);

// The subsequence at a closed index set; checked against the subgeometry of
// the full result that its points generate.
Geometry restrict_construction(const Construction& c, const IndexSet& x);

// perm[j] is the original index of the step placed at position j. The result
// is checked against the unpermuted run.
Geometry reorder_construction(const Construction& c, const std::vector<std::size_t>& perm);

// Concatenates the two witnesses over the shared base.
Geometry free_amalgam(const Geometry& a, const Geometry& b, const Geometry& c, const Construction& wit_a,
                      const Construction& wit_b);

// A construction of g from a free geometry on rank-many of its points, with
// every step principal; candidate bases are tried in lexicographic order.
std::optional<Construction> in_class_Kn(const Geometry& g);

// Interns geometries and memoizes principal extensions keyed by (geometry,
// generator flat, new point). Extensions are pure, so cached results are the
// same values a fresh computation would return.
class ExtensionCache {
 public:
  std::size_t intern(const Geometry& g);
  const Geometry& get(std::size_t id) const { return geometries_[id]; }
  std::size_t size() const { return geometries_.size(); }

  // Adds p under the join of `base` resolved in geometry `id`.
  std::size_t extend(std::size_t id, const LabelSet& base, const PointLabel& p);

 private:
  std::vector<Geometry> geometries_;
  std::unordered_map<Geometry, std::size_t, GeometryHash> ids_;
  std::map<std::tuple<std::size_t, Mask, PointLabel>, std::size_t> extensions_;
};

}  // namespace geolat
