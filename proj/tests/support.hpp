#pragma once

// Shared fixtures and brute-force oracles for the unit tests. The oracles work
// on plain label sets and never call into the library's closure machinery.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geolat/construction.hpp"
#include "geolat/lattice_core.hpp"

namespace testsupport {

using Labels = std::set<std::string>;

inline Labels labels(const std::string& letters) {
  Labels out;
  for (char c : letters) out.insert(std::string(1, c));
  return out;
}

inline geolat::Geometry plane(const std::string& points, const std::vector<std::string>& lines) {
  std::vector<geolat::Flat> flats;
  for (const auto& l : lines) flats.push_back(geolat::LabelSet::chars(l));
  return geolat::Geometry::from_nontrivial_flats(3, geolat::LabelSet::chars(points),
                                                 {{2, flats}});
}

inline bool contains_all(const Labels& big, const Labels& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All lines of a plane given its point set and nontrivial lines: the listed
// lines plus every uncovered pair.
inline std::set<Labels> oracle_plane_lines(const Labels& points, const std::vector<Labels>& nontrivial) {
  std::set<Labels> lines(nontrivial.begin(), nontrivial.end());
  for (auto a = points.begin(); a != points.end(); ++a) {
    for (auto b = std::next(a); b != points.end(); ++b) {
      bool covered = false;
      for (const auto& l : nontrivial) {
        if (l.count(*a) && l.count(*b)) covered = true;
      }
      if (!covered) lines.insert(Labels{*a, *b});
    }
  }
  return lines;
}

// Closure in a plane from its line list.
inline Labels oracle_plane_closure(const Labels& points, const std::set<Labels>& lines, const Labels& s) {
  if (s.size() <= 1) return s;
  for (const auto& l : lines) {
    if (contains_all(l, s)) return l;
  }
  return points;
}

inline Labels to_labels(const geolat::LabelSet& s) { return Labels(s.begin(), s.end()); }

inline std::set<Labels> flats_as_sets(const geolat::Geometry& g) {
  std::set<Labels> out;
  for (int r = 0; r <= g.rank(); ++r) {
    for (auto m : g.level(r)) out.insert(to_labels(g.labels_of(m)));
  }
  return out;
}

// A construction over FG_rank on A, B, ... with `steps` random bases; new
// points continue the alphabet.
inline geolat::Construction random_construction(std::mt19937& rng, int steps, int rank = 3) {
  const char first = static_cast<char>('A' + rank);
  std::string base_points;
  for (int i = 0; i < rank; ++i) base_points += static_cast<char>('A' + i);
  geolat::Construction c{geolat::free_geometry(geolat::LabelSet::chars(base_points)), {}};
  std::vector<std::string> available;
  for (char ch : base_points) available.push_back(std::string(1, ch));
  for (int i = 0; i < steps; ++i) {
    std::uniform_int_distribution<int> size(2, rank);
    std::vector<std::string> pool = available;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size(rng)));
    const std::string p(1, static_cast<char>(first + i));
    c.steps.push_back({p, geolat::LabelSet(pool)});
    available.push_back(p);
  }
  return c;
}

}  // namespace testsupport
