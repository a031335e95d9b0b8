#include <algorithm>
#include <functional>
#include <set>

#include "geolat/lattice_core.hpp"

namespace geolat {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::TrivialCut: return "TrivialCut";
    case ErrorKind::NotUpwardClosed: return "NotUpwardClosed";
    case ErrorKind::NotModularClosed: return "NotModularClosed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadBase: return "BadBase";
    case ErrorKind::InvalidConstruction: return "InvalidConstruction";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::InadmissiblePermutation: return "InadmissiblePermutation";
    case ErrorKind::Overlap: return "OverlapError";
    case ErrorKind::WitnessMismatch: return "WitnessMismatch";
    case ErrorKind::NotASubgeometry: return "NotASubgeometry";
    case ErrorKind::BadOrdering: return "BadOrdering";
    case ErrorKind::NotAWitness: return "NotAWitness";
    case ErrorKind::InvalidCanonicalData: return "InvalidCanonicalData";
    case ErrorKind::Rank: return "RankError";
    case ErrorKind::NotStrong: return "NotStrong";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Internal: return "InternalError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Error";
}

// ---- LabelSet ----

LabelSet::LabelSet(std::initializer_list<PointLabel> labels) : LabelSet(std::vector<PointLabel>(labels)) {}

LabelSet::LabelSet(std::vector<PointLabel> labels) : items_(std::move(labels)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

LabelSet LabelSet::chars(std::string_view letters) {
  std::vector<PointLabel> out;
  for (char c : letters) out.emplace_back(1, c);
  return LabelSet(std::move(out));
}

bool LabelSet::contains(std::string_view label) const {
  return std::binary_search(items_.begin(), items_.end(), label,
                            [](const auto& a, const auto& b) { return std::string_view(a) < std::string_view(b); });
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

LabelSet LabelSet::united(const LabelSet& other) const {
  std::vector<PointLabel> out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(), std::back_inserter(out));
  return LabelSet(std::move(out));
}

LabelSet LabelSet::intersected(const LabelSet& other) const {
  std::vector<PointLabel> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
  return LabelSet(std::move(out));
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  std::vector<PointLabel> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out));
  return LabelSet(std::move(out));
}

std::string LabelSet::str() const {
  if (items_.empty()) return "0";
  std::string out;
  for (const auto& l : items_) out += l;
  return out;
}

// ---- bits ----

namespace bits {

Mask compress(Mask m, Mask sel) {
  Mask out = 0;
  std::size_t j = 0;
  while (sel) {
    const Mask low = sel & (~sel + 1);
    if (m & low) out |= bit(j);
    ++j;
    sel &= sel - 1;
  }
  return out;
}

Mask expand(Mask m, Mask sel) {
  Mask out = 0;
  std::size_t j = 0;
  while (sel) {
    const Mask low = sel & (~sel + 1);
    if (m & bit(j)) out |= low;
    ++j;
    sel &= sel - 1;
  }
  return out;
}

}  // namespace bits

// ---- Geometry ----

Geometry::Geometry() : levels_{{0}} { index(); }

Geometry Geometry::from_masks(std::vector<PointLabel> points, std::vector<std::vector<Mask>> levels) {
  if (points.size() > kMaxPoints) {
    throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxPoints) + " points are supported");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].empty()) throw Error(ErrorKind::Validation, "empty point label");
    if (i > 0 && points[i - 1] == points[i]) throw Error(ErrorKind::DuplicateLabel, points[i]);
    if (i > 0 && points[i - 1] > points[i]) throw Error(ErrorKind::Validation, "points must be sorted");
  }
  if (levels.empty()) throw Error(ErrorKind::Validation, "geometry needs at least one level");
  Geometry g;
  g.points_ = std::move(points);
  g.levels_ = std::move(levels);
  for (auto& lvl : g.levels_) {
    std::sort(lvl.begin(), lvl.end());
    lvl.erase(std::unique(lvl.begin(), lvl.end()), lvl.end());
  }
  g.index();
  return g;
}

void Geometry::index() {
  lookup_.clear();
  for (std::size_t r = 0; r < levels_.size(); ++r) {
    for (Mask m : levels_[r]) lookup_.emplace_back(m, static_cast<int>(r));
  }
  std::sort(lookup_.begin(), lookup_.end());
  std::size_t h = std::hash<std::size_t>{}(points_.size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& p : points_) mix(std::hash<std::string>{}(p));
  for (std::size_t r = 0; r < levels_.size(); ++r) {
    mix(r * 1000003u);
    for (Mask m : levels_[r]) mix(std::hash<Mask>{}(m));
  }
  hash_ = h;
}

LabelSet Geometry::point_set() const { return LabelSet(points_); }

Mask Geometry::full() const {
  return points_.size() == 64 ? ~Mask{0} : (bits::bit(points_.size()) - 1);
}

std::optional<std::size_t> Geometry::index_of(std::string_view label) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), label,
                             [](const PointLabel& a, std::string_view b) { return std::string_view(a) < b; });
  if (it == points_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

Mask Geometry::mask_of(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw Error(ErrorKind::UnknownPoint, std::string(label));
  return bits::bit(*i);
}

Mask Geometry::mask_of(const LabelSet& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= mask_of(l);
  return m;
}

LabelSet Geometry::labels_of(Mask mask) const {
  std::vector<PointLabel> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (mask & bits::bit(i)) out.push_back(points_[i]);
  }
  return LabelSet(std::move(out));
}

std::optional<int> Geometry::rank_if_flat(Mask mask) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(mask, -1));
  if (it == lookup_.end() || it->first != mask) return std::nullopt;
  return it->second;
}

int Geometry::rank_of(Mask flat) const {
  auto r = rank_if_flat(flat);
  if (!r) throw Error(ErrorKind::NotAFlat, labels_of(flat).str());
  return *r;
}

Mask Geometry::closure(Mask set) const {
  for (const auto& lvl : levels_) {
    for (Mask f : lvl) {
      if (bits::subset(set, f)) return f;
    }
  }
  throw Error(ErrorKind::UnknownPoint, "set is not contained in the top flat");
}

int Geometry::set_rank(Mask set) const {
  for (std::size_t r = 0; r < levels_.size(); ++r) {
    for (Mask f : levels_[r]) {
      if (bits::subset(set, f)) return static_cast<int>(r);
    }
  }
  throw Error(ErrorKind::UnknownPoint, "set is not contained in the top flat");
}

Mask Geometry::meet(Mask x, Mask y) const {
  rank_of(x);
  rank_of(y);
  return x & y;
}

Mask Geometry::join(Mask x, Mask y) const {
  rank_of(x);
  rank_of(y);
  return closure(x | y);
}

bool Geometry::covers(Mask lower, Mask upper) const {
  const int rl = rank_of(lower);
  const int ru = rank_of(upper);
  return lower != upper && bits::subset(lower, upper) && ru == rl + 1;
}

bool Geometry::is_modular_pair(Mask a, Mask b) const {
  const int ra = rank_of(a);
  const int rb = rank_of(b);
  return set_rank(a | b) + set_rank(a & b) == ra + rb;
}

// ---- constructors with completion ----

namespace {

std::vector<PointLabel> require_labels(const std::vector<PointLabel>& points) {
  if (points.size() > kMaxPoints) {
    throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxPoints) + " points are supported");
  }
  std::vector<PointLabel> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty()) throw Error(ErrorKind::Validation, "empty point label");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw Error(ErrorKind::DuplicateLabel, sorted[i]);
  }
  return sorted;
}

void check_valid(const Geometry& g) {
  const LatticeReport report = is_geometric_lattice(g);
  if (!report.ok()) throw Error(ErrorKind::Validation, report.str());
}

// Calls fn on every k-subset of the first n bits.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(Mask)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= bits::bit(i);
    fn(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Geometry Geometry::from_nontrivial_flats(int rank, const std::vector<PointLabel>& raw_points,
                                         const std::map<int, std::vector<Flat>>& listed) {
  if (rank < 0 || rank > kMaxRank) {
    throw Error(ErrorKind::Validation, "rank must lie in [0, " + std::to_string(kMaxRank) + "]");
  }
  const std::vector<PointLabel> points = require_labels(raw_points);
  Geometry proto;
  proto.points_ = points;
  const std::size_t n = points.size();
  const Mask all = proto.full();

  if (rank == 0) {
    if (n != 0) throw Error(ErrorKind::Validation, "a rank-0 geometry has no points");
    if (!listed.empty()) throw Error(ErrorKind::Validation, "a rank-0 geometry has no listed flats");
    return Geometry();
  }

  std::vector<std::vector<Mask>> levels(static_cast<std::size_t>(rank) + 1);
  levels[0] = {0};
  if (rank == 1) {
    levels[1] = {all};
  } else {
    for (std::size_t i = 0; i < n; ++i) levels[1].push_back(bits::bit(i));
    levels[static_cast<std::size_t>(rank)] = {all};
  }

  for (const auto& [r, flats] : listed) {
    if (r < 2 || r >= rank) {
      throw Error(ErrorKind::Validation, "listed flats must have rank between 2 and " + std::to_string(rank - 1));
    }
    for (const auto& f : flats) {
      const Mask m = proto.mask_of(f);
      if (bits::count(m) < r) {
        throw Error(ErrorKind::Validation, "listed flat " + f.str() + " has fewer than " + std::to_string(r) + " points");
      }
      levels[static_cast<std::size_t>(r)].push_back(m);
    }
  }

  for (int k = 2; k < rank; ++k) {
    const std::vector<Mask> listed_k = levels[static_cast<std::size_t>(k)];
    std::vector<Mask> lower;
    for (int j = 2; j < k; ++j) {
      lower.insert(lower.end(), levels[static_cast<std::size_t>(j)].begin(), levels[static_cast<std::size_t>(j)].end());
    }
    std::set<Mask> added;
    for_each_subset(n, static_cast<std::size_t>(k), [&](Mask s) {
      for (Mask f : lower) {
        if (bits::subset(s, f)) return;  // dependent
      }
      Mask p = s;
      bool grew = true;
      while (grew) {
        grew = false;
        for (Mask line : levels[2]) {
          if (k > 2 && bits::count(line & p) >= 2 && !bits::subset(line, p)) {
            p |= line;
            grew = true;
          }
        }
      }
      for (Mask f : listed_k) {
        if (bits::subset(p, f)) return;
      }
      added.insert(p);
    });
    levels[static_cast<std::size_t>(k)].insert(levels[static_cast<std::size_t>(k)].end(), added.begin(), added.end());
  }

  Geometry g = from_masks(points, std::move(levels));
  check_valid(g);
  return g;
}

Geometry Geometry::from_flats(const std::vector<PointLabel>& raw_points, const std::vector<std::vector<Flat>>& levels) {
  const std::vector<PointLabel> points = require_labels(raw_points);
  if (levels.empty()) throw Error(ErrorKind::Validation, "at least one level is required");
  Geometry proto;
  proto.points_ = points;
  std::vector<std::vector<Mask>> masks;
  for (const auto& lvl : levels) {
    std::vector<Mask> ms;
    for (const auto& f : lvl) ms.push_back(proto.mask_of(f));
    masks.push_back(std::move(ms));
  }
  Geometry g = from_masks(points, std::move(masks));
  check_valid(g);
  return g;
}

Geometry free_geometry(const LabelSet& labels) {
  return Geometry::from_nontrivial_flats(static_cast<int>(labels.size()), labels, {});
}

// ---- label-level wrappers ----

Flat closure(const Geometry& g, const LabelSet& s) { return g.labels_of(g.closure(g.mask_of(s))); }

int rank_of(const Geometry& g, const Flat& x) { return g.rank_of(g.mask_of(x)); }

Flat meet(const Geometry& g, const Flat& x, const Flat& y) {
  return g.labels_of(g.meet(g.mask_of(x), g.mask_of(y)));
}

Flat join(const Geometry& g, const Flat& x, const Flat& y) {
  return g.labels_of(g.join(g.mask_of(x), g.mask_of(y)));
}

bool covers(const Geometry& g, const Flat& lower, const Flat& upper) {
  return g.covers(g.mask_of(lower), g.mask_of(upper));
}

bool is_modular_pair(const Geometry& g, const Flat& a, const Flat& b) {
  return g.is_modular_pair(g.mask_of(a), g.mask_of(b));
}

std::vector<Flat> flats_of_rank(const Geometry& g, int r) {
  std::vector<Flat> out;
  for (Mask m : g.level(r)) out.push_back(g.labels_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

Mask transfer(Mask mask, const Geometry& from, const Geometry& to) {
  Mask out = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (mask & bits::bit(i)) out |= to.mask_of(from.points()[i]);
  }
  return out;
}

}  // namespace geolat
