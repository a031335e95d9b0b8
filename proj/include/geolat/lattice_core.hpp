#pragma once

// Finite geometric lattices stored as their full family of flats.
//
// Points are kept sorted by label; bit i of a Mask is the i-th point in that
// order, so comparing index sequences is the same as comparing label
// sequences lexicographically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geolat/error.hpp"

namespace geolat {

using PointLabel = std::string;
using Mask = std::uint64_t;

inline constexpr int kMaxRank = 4;
inline constexpr std::size_t kMaxPoints = 64;

// Sorted, deduplicated set of point labels.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<PointLabel> labels);
  explicit LabelSet(std::vector<PointLabel> labels);

  // "ABE" -> {A, B, E}; only for single-character labels.
  static LabelSet chars(std::string_view letters);

  const std::vector<PointLabel>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  bool contains(std::string_view label) const;
  bool is_subset_of(const LabelSet& other) const;

  LabelSet united(const LabelSet& other) const;
  LabelSet intersected(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  // Concatenated labels, "0" for the empty set.
  std::string str() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<PointLabel> items_;
};

using Flat = LabelSet;

class Geometry {
 public:
  // The rank-0 geometry on no points.
  Geometry();

  // Listed flats are keyed by rank; every unlisted independent set of size r
  // becomes a free flat of rank r. Validated.
  static Geometry from_nontrivial_flats(int rank, const std::vector<PointLabel>& points,
                                        const std::map<int, std::vector<Flat>>& listed);
  static Geometry from_nontrivial_flats(int rank, const LabelSet& points,
                                        const std::map<int, std::vector<Flat>>& listed) {
    return from_nontrivial_flats(rank, points.items(), listed);
  }

  // Full family, levels[r] = flats of rank r. Validated.
  static Geometry from_flats(const std::vector<PointLabel>& points, const std::vector<std::vector<Flat>>& levels);

  // Structural constructor without lattice validation; points must be sorted
  // and distinct. Used for diagnostics and by trusted internal builders.
  static Geometry from_masks(std::vector<PointLabel> points, std::vector<std::vector<Mask>> levels);

  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t size() const { return points_.size(); }
  const std::vector<PointLabel>& points() const { return points_; }
  LabelSet point_set() const;
  Mask full() const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  Mask mask_of(const LabelSet& labels) const;
  Mask mask_of(std::string_view label) const;
  LabelSet labels_of(Mask mask) const;

  const std::vector<std::vector<Mask>>& levels() const { return levels_; }
  const std::vector<Mask>& level(int r) const { return levels_.at(static_cast<std::size_t>(r)); }
  std::size_t flat_count() const { return lookup_.size(); }

  std::optional<int> rank_if_flat(Mask mask) const;
  bool is_flat(Mask mask) const { return rank_if_flat(mask).has_value(); }
  int rank_of(Mask flat) const;

  // Least flat containing the set (first hit scanning upward by rank).
  Mask closure(Mask set) const;
  int set_rank(Mask set) const;
  Mask meet(Mask x, Mask y) const;
  Mask join(Mask x, Mask y) const;
  bool covers(Mask lower, Mask upper) const;
  bool is_modular_pair(Mask a, Mask b) const;

  std::size_t hash() const { return hash_; }

  friend bool operator==(const Geometry& a, const Geometry& b) {
    return a.hash_ == b.hash_ && a.points_ == b.points_ && a.levels_ == b.levels_;
  }

 private:
  void index();

  std::vector<PointLabel> points_;
  std::vector<std::vector<Mask>> levels_;
  std::vector<std::pair<Mask, int>> lookup_;
  std::size_t hash_ = 0;
};

struct GeometryHash {
  std::size_t operator()(const Geometry& g) const { return g.hash(); }
};

enum class Condition { RankBound, Bounded, Graded, MeetClosed, PointLattice, Semimodular, Simple };

const char* condition_name(Condition c);

struct Violation {
  Condition condition;
  std::string detail;
};

struct LatticeReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Condition c) const;
  std::string str() const;
};

Flat closure(const Geometry& g, const LabelSet& s);
int rank_of(const Geometry& g, const Flat& x);
Flat meet(const Geometry& g, const Flat& x, const Flat& y);
Flat join(const Geometry& g, const Flat& x, const Flat& y);
bool covers(const Geometry& g, const Flat& lower, const Flat& upper);
bool is_modular_pair(const Geometry& g, const Flat& a, const Flat& b);
std::vector<Flat> flats_of_rank(const Geometry& g, int r);

LatticeReport is_geometric_lattice(const Geometry& g);
bool is_semimodular(const Geometry& g);
bool is_relatively_complemented(const Geometry& g);

Geometry subgeometry(const Geometry& g, const LabelSet& n);
Geometry subgeometry(const Geometry& g, Mask n);

// Whether the subgeometry generated by `n` keeps every meet of g:
// cl(x) ∩ cl(y) = cl(x ∩ y) for all flats x, y of the restriction.
bool restriction_preserves_meets(const Geometry& g, Mask n);

bool is_meet_subgeometry(const Geometry& sub, const Geometry& g);

// Re-indexes a mask between two geometries that share the labels involved.
Mask transfer(Mask mask, const Geometry& from, const Geometry& to);

std::optional<std::map<PointLabel, PointLabel>> is_isomorphic(const Geometry& g1, const Geometry& g2,
                                                              bool fix_points);

// Free geometry of rank |labels| (Boolean algebra on the labels).
Geometry free_geometry(const LabelSet& labels);

namespace bits {

inline int count(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
// Inserts a zero bit at position k, shifting higher bits up.
inline Mask insert_zero(Mask m, std::size_t k) {
  const Mask low = (k == 0) ? 0 : (m & (~Mask{0} >> (64 - k)));
  return low | ((m >> k) << (k + 1));
}
// Packs the bits of m selected by sel into the low bits.
Mask compress(Mask m, Mask sel);
// Inverse of compress.
Mask expand(Mask m, Mask sel);

}  // namespace bits

}  // namespace geolat
