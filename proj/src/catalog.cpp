#include "geolat/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "geolat/extension.hpp"

namespace geolat::catalog {

namespace {

std::vector<PointLabel> letters(std::size_t n) {
  std::vector<PointLabel> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

// Families of subsets (size ≥ 3) of an m-set meeting pairwise in at most one
// point: the nontrivial lines of every linear space on m points.
void line_families(std::size_t m, const std::vector<Mask>& candidates, std::size_t from, std::vector<Mask>& chosen,
                   std::vector<std::vector<Mask>>& out) {
  out.push_back(chosen);
  for (std::size_t i = from; i < candidates.size(); ++i) {
    bool ok = true;
    for (Mask l : chosen) ok = ok && bits::count(l & candidates[i]) <= 1;
    if (!ok) continue;
    chosen.push_back(candidates[i]);
    line_families(m, candidates, i + 1, chosen, out);
    chosen.pop_back();
  }
}

// All lines (including two-point ones) of linear spaces on m points, one per
// isomorphism class.
std::vector<std::vector<Mask>> linear_spaces(std::size_t m) {
  std::vector<Mask> candidates;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    if (bits::count(s) >= 3) candidates.push_back(s);
  }
  std::vector<std::vector<Mask>> families;
  std::vector<Mask> chosen;
  line_families(m, candidates, 0, chosen, families);

  std::vector<std::vector<Mask>> out;
  std::vector<Geometry> seen;
  for (const auto& nontrivial : families) {
    std::vector<Mask> lines = nontrivial;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const Mask pair = bits::bit(a) | bits::bit(b);
        bool covered = false;
        for (Mask l : nontrivial) covered = covered || bits::subset(pair, l);
        if (!covered) lines.push_back(pair);
      }
    }
    std::sort(lines.begin(), lines.end());
    // Rank-2 view of the linear space for isomorphism testing.
    std::vector<Mask> atoms;
    for (std::size_t a = 0; a < m; ++a) atoms.push_back(bits::bit(a));
    const Geometry shape = Geometry::from_masks(letters(m), {{0}, atoms, lines});
    bool fresh = true;
    for (const auto& g : seen) fresh = fresh && !is_isomorphic(g, shape, false);
    if (!fresh) continue;
    seen.push_back(shape);
    out.push_back(lines);
  }
  return out;
}

}  // namespace

std::vector<Geometry> planes_up_to(std::size_t max_points) {
  std::vector<Geometry> out;
  for (std::size_t m = 3; m <= max_points; ++m) {
    for (const auto& lines : linear_spaces(m)) {
      if (lines.size() < 2) continue;
      std::vector<Flat> nontrivial;
      const Geometry scratch = Geometry::from_masks(letters(m), {{0}});
      for (Mask l : lines) {
        if (bits::count(l) >= 3) nontrivial.push_back(scratch.labels_of(l));
      }
      out.push_back(Geometry::from_nontrivial_flats(3, letters(m), {{2, nontrivial}}));
    }
  }
  return out;
}

std::vector<Geometry> semimodular_rank3_lattices(std::size_t max_irreducibles) {
  std::vector<Geometry> out;
  for (std::size_t m = 1; m <= max_irreducibles; ++m) {
    for (const auto& lines : linear_spaces(m)) {
      // Pendants: nondecreasing lists of atoms, each carrying one rank-2
      // element above that atom alone.
      std::vector<std::vector<std::size_t>> pendant_lists{{}};
      for (std::size_t i = 0; i < pendant_lists.size(); ++i) {
        const auto current = pendant_lists[i];
        if (m + current.size() + 1 > max_irreducibles) continue;
        const std::size_t start = current.empty() ? 0 : current.back();
        for (std::size_t a = start; a < m; ++a) {
          auto next = current;
          next.push_back(a);
          pendant_lists.push_back(next);
        }
      }
      for (const auto& pendants : pendant_lists) {
        const std::size_t rank2 = lines.size() + pendants.size();
        if (rank2 == 0) continue;
        const bool top_irreducible = rank2 == 1;
        if (m + pendants.size() + (top_irreducible ? 1 : 0) > max_irreducibles) continue;

        std::vector<PointLabel> labels = letters(m);
        for (std::size_t i = 0; i < pendants.size(); ++i) labels.push_back("X" + std::to_string(i));
        if (top_irreducible) labels.push_back("T");
        std::vector<PointLabel> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto bit_of = [&](const PointLabel& l) {
          return bits::bit(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), l) - sorted.begin()));
        };
        std::vector<Mask> atoms;
        std::vector<Mask> level2;
        Mask all = 0;
        for (const auto& l : labels) all |= bit_of(l);
        auto lift = [&](Mask atoms_mask) {
          Mask out_mask = 0;
          for (std::size_t a = 0; a < m; ++a) {
            if (atoms_mask & bits::bit(a)) out_mask |= bit_of(labels[a]);
          }
          return out_mask;
        };
        for (std::size_t a = 0; a < m; ++a) atoms.push_back(bit_of(labels[a]));
        for (Mask l : lines) level2.push_back(lift(l));
        for (std::size_t i = 0; i < pendants.size(); ++i) {
          level2.push_back(bit_of(labels[pendants[i]]) | bit_of("X" + std::to_string(i)));
        }
        std::sort(atoms.begin(), atoms.end());
        std::sort(level2.begin(), level2.end());
        const Geometry g = Geometry::from_masks(sorted, {{0}, atoms, level2, {all}});
        bool fresh = true;
        for (const auto& h : out) fresh = fresh && !is_isomorphic(h, g, false);
        if (fresh) out.push_back(g);
      }
    }
  }
  return out;
}

std::vector<Geometry> partial_plane_lattices(std::size_t max_points) {
  if (max_points > 6) throw Error(ErrorKind::TooLarge, "partial planes are enumerated up to 6 points");
  std::vector<Geometry> out;
  for (std::size_t m = 3; m <= max_points; ++m) {
    std::vector<Mask> candidates;
    for (Mask s = 1; s < (Mask{1} << m); ++s) {
      if (bits::count(s) >= 2) candidates.push_back(s);
    }
    // image[p][s] is subset s moved by the p-th relabelling.
    std::vector<std::vector<Mask>> image;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Mask> moved(std::size_t{1} << m, 0);
      for (Mask s = 0; s < (Mask{1} << m); ++s) {
        for (std::size_t i = 0; i < m; ++i) {
          if (s & bits::bit(i)) moved[s] |= bits::bit(perm[i]);
        }
      }
      image.push_back(std::move(moved));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Mask all = (Mask{1} << m) - 1;
    std::set<std::vector<Mask>> seen;
    std::vector<Mask> chosen;
    std::vector<Mask> moved;
    auto visit = [&](auto&& self, std::size_t from) -> void {
      Mask covered = 0;
      std::size_t pairs = 0;
      for (Mask l : chosen) {
        covered |= l;
        pairs += static_cast<std::size_t>(bits::count(l) * (bits::count(l) - 1) / 2);
      }
      if (covered == all && chosen.size() >= 2 && pairs < m * (m - 1) / 2) {
        std::vector<Mask> best;
        for (const auto& table : image) {
          moved.clear();
          for (Mask l : chosen) moved.push_back(table[l]);
          std::sort(moved.begin(), moved.end());
          if (best.empty() || moved < best) best = moved;
        }
        if (seen.insert(best).second) {
          std::vector<Mask> atoms;
          for (std::size_t a = 0; a < m; ++a) atoms.push_back(bits::bit(a));
          out.push_back(Geometry::from_masks(letters(m), {{0}, atoms, best, {all}}));
        }
      }
      for (std::size_t i = from; i < candidates.size(); ++i) {
        bool ok = true;
        for (Mask l : chosen) ok = ok && bits::count(l & candidates[i]) <= 1;
        if (!ok) continue;
        chosen.push_back(candidates[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    visit(visit, 0);
  }
  return out;
}

Geometry random_plane(std::mt19937& rng, std::size_t points) {
  if (points < 3 || points > 8) throw Error(ErrorKind::TooLarge, "random planes have 3 to 8 points");
  Geometry g = free_geometry(LabelSet::chars("ABC"));
  while (g.size() < points) {
    const auto cuts = enumerate_modular_cuts(g);
    const auto& cut = cuts[std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(rng)];
    g = one_point_extension(g, cut, std::string(1, static_cast<char>('A' + g.size())));
  }
  return g;
}

Geometry random_meet_extension(std::mt19937& rng, const Geometry& g, const Geometry& keep, std::size_t count,
                               std::string_view prefix) {
  Geometry out = g;
  for (std::size_t i = 0; i < count; ++i) {
    const PointLabel p = std::string(prefix) + std::to_string(i);
    const auto cuts = enumerate_modular_cuts(out);
    std::optional<Geometry> next;
    for (int attempt = 0; attempt < 8 && !next; ++attempt) {
      const auto& cut = cuts[std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(rng)];
      Geometry candidate = one_point_extension(out, cut, p);
      if (is_meet_subgeometry(keep, candidate)) next = std::move(candidate);
    }
    out = next ? *next : principal_extension(out, out.full(), p);
  }
  return out;
}

Construction random_construction(std::mt19937& rng, const Geometry& base, std::size_t steps, std::string_view prefix) {
  Construction c{base, {}};
  std::vector<PointLabel> available = base.points();
  const int n = base.rank();
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<PointLabel> pool = available;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int size = std::uniform_int_distribution<int>(2, std::max(2, n))(rng);
    pool.resize(std::min(pool.size(), static_cast<std::size_t>(size)));
    const PointLabel p = std::string(prefix) + std::to_string(i);
    c.steps.push_back({p, LabelSet(pool)});
    available.push_back(p);
  }
  return c;
}

}  // namespace geolat::catalog
