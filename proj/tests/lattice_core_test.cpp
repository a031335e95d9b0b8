#include <random>

#include "doctest.h"
#include "geolat/lattice_core.hpp"
#include "support.hpp"

using namespace geolat;
using testsupport::labels;
using testsupport::plane;

namespace {

Geometry fg3() { return free_geometry(LabelSet::chars("ABC")); }
Geometry af2() { return plane("ABCD", {}); }
Geometry fano() { return plane("ABCDEFG", {"ABE", "ACF", "BCG", "ADG", "BDF", "CDE", "EFG"}); }
Geometry meet_figure() { return plane("ABCDE", {"BCE", "ADE"}); }

Flat F(const char* s) { return LabelSet::chars(s); }

std::vector<Geometry> small_gallery() {
  return {fg3(), af2(), fano(), meet_figure(), plane("ABCDEF", {"BCE", "DEF"}), free_geometry(LabelSet::chars("ABCD")),
          Geometry::from_nontrivial_flats(4, LabelSet::chars("ABCDE"), {{3, {F("ABCD")}}})};
}

}  // namespace

TEST_CASE("free completion of planes") {
  const Geometry g = fg3();
  CHECK(g.rank() == 3);
  CHECK(g.flat_count() == 8);
  CHECK(flats_of_rank(g, 2) == std::vector<Flat>{F("AB"), F("AC"), F("BC")});

  const Geometry f = fano();
  CHECK(f.size() == 7);
  CHECK(f.level(2).size() == 7);
  for (Mask l : f.level(2)) CHECK(bits::count(l) == 3);
  for (Mask a : f.level(2)) {
    for (Mask b : f.level(2)) {
      if (a != b) CHECK(bits::count(a & b) == 1);
    }
  }

  const Geometry a = af2();
  CHECK(flats_of_rank(a, 2) == std::vector<Flat>{F("AB"), F("AC"), F("AD"), F("BC"), F("BD"), F("CD")});
}

TEST_CASE("flat families agree with the brute-force line oracle") {
  struct Case {
    std::string points;
    std::vector<std::string> lines;
  };
  const std::vector<Case> cases = {{"ABC", {}}, {"ABCD", {}}, {"ABCDEFG", {"ABE", "ACF", "BCG", "ADG", "BDF", "CDE", "EFG"}},
                                   {"ABCDE", {"BCE", "ADE"}}, {"ABCDEF", {"ABCD"}}};
  for (const auto& c : cases) {
    const Geometry g = plane(c.points, c.lines);
    std::vector<testsupport::Labels> nontrivial;
    for (const auto& l : c.lines) nontrivial.push_back(labels(l));
    const auto pts = labels(c.points);
    const auto lines = testsupport::oracle_plane_lines(pts, nontrivial);
    std::set<testsupport::Labels> expected = lines;
    expected.insert(testsupport::Labels{});
    expected.insert(pts);
    for (const auto& p : pts) expected.insert({p});
    CHECK(testsupport::flats_as_sets(g) == expected);

    // Closure against the oracle on every subset.
    const std::size_t n = pts.size();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const auto got = testsupport::to_labels(g.labels_of(g.closure(s)));
      const auto want = testsupport::oracle_plane_closure(pts, lines, testsupport::to_labels(g.labels_of(s)));
      CHECK(got == want);
    }
  }
}

TEST_CASE("closure, rank, meet, join and covers") {
  const Geometry g = fg3();
  const Geometry f = fano();
  CHECK(closure(g, {}) == Flat{});
  CHECK(closure(f, F("AB")) == F("ABE"));
  CHECK(closure(af2(), F("AB")) == F("AB"));
  CHECK(rank_of(g, {}) == 0);
  CHECK(rank_of(g, F("ABC")) == 3);
  CHECK(rank_of(f, F("ABE")) == 2);
  CHECK(meet(f, F("ABE"), F("ACF")) == F("A"));
  CHECK(join(g, F("A"), F("B")) == F("AB"));
  for (Mask x : f.level(2)) CHECK(f.meet(x, x) == x);
  CHECK(covers(g, F("A"), F("AB")));
  CHECK_FALSE(covers(g, {}, F("AB")));
  CHECK(covers(f, F("ABE"), F("ABCDEFG")));

  CHECK_THROWS_AS(closure(g, F("Z")), Error);
  try {
    rank_of(f, F("AB"));
    FAIL("expected NotAFlat");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFlat);
  }
  try {
    meet(f, F("AB"), F("ABE"));
    FAIL("expected NotAFlat");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFlat);
  }
}

TEST_CASE("construction errors") {
  try {
    Geometry::from_nontrivial_flats(3, std::vector<PointLabel>{"A", "B", "A"}, {});
    FAIL("expected DuplicateLabel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateLabel);
  }
  // Two lines through the same pair.
  try {
    plane("ABCD", {"ABC", "ABD"});
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
  }
  CHECK_THROWS_AS(Geometry::from_nontrivial_flats(5, LabelSet::chars("ABCDE"), {}), Error);
  CHECK_THROWS_AS(Geometry::from_nontrivial_flats(0, LabelSet::chars("A"), {}), Error);
  CHECK(Geometry::from_nontrivial_flats(0, LabelSet{}, {}) == Geometry());
}

TEST_CASE("lattice report") {
  CHECK(is_geometric_lattice(fg3()).ok());
  CHECK(is_geometric_lattice(fano()).ok());

  // Lines ABC and ABD share two points.
  const std::vector<PointLabel> pts{"A", "B", "C", "D"};
  const Mask A = 1, B = 2, C = 4, D = 8;
  const Geometry bad = Geometry::from_masks(pts, {{0}, {A, B, C, D}, {A | B | C, A | B | D, C | D}, {A | B | C | D}});
  const LatticeReport report = is_geometric_lattice(bad);
  CHECK(report.has(Condition::Semimodular));
  CHECK(report.has(Condition::MeetClosed));
  // Hand computation for the two lines: join is the top (rank 3); their
  // intersection {A,B} lies in no flat of rank below 2.
  CHECK(3 + 2 > 2 + 2);
  CHECK(bad.set_rank((A | B | C) | (A | B | D)) == 3);
  CHECK(bad.set_rank((A | B | C) & (A | B | D)) == 2);

  // Chain 0 < A < AB: semimodular but not a point lattice.
  const Geometry chain = Geometry::from_masks({"A", "B"}, {{0}, {A}, {A | B}});
  const LatticeReport cr = is_geometric_lattice(chain);
  CHECK(cr.has(Condition::PointLattice));
  CHECK_FALSE(cr.has(Condition::Semimodular));
  CHECK_FALSE(is_relatively_complemented(chain));
}

TEST_CASE("relative complementation") {
  CHECK(is_relatively_complemented(fg3()));
  CHECK(is_relatively_complemented(fano()));
  CHECK(is_relatively_complemented(meet_figure()));
}

TEST_CASE("modular pairs") {
  const Geometry f = fano();
  for (int r = 0; r <= 3; ++r) {
    for (Mask x : f.level(r)) CHECK(f.is_modular_pair(x, x));
  }
  CHECK(is_modular_pair(f, F("ABE"), F("ACF")));
  CHECK_FALSE(is_modular_pair(af2(), F("AB"), F("CD")));
}

TEST_CASE("submodular rank on every pair of flats") {
  for (const Geometry& g : small_gallery()) {
    REQUIRE(is_geometric_lattice(g).ok());
    std::vector<Mask> all;
    for (const auto& lvl : g.levels()) all.insert(all.end(), lvl.begin(), lvl.end());
    for (Mask a : all) {
      for (Mask b : all) {
        CHECK(g.set_rank(a | b) + g.rank_of(a & b) <= g.rank_of(a) + g.rank_of(b));
        CHECK(g.is_flat(a & b));
      }
    }
  }
}

TEST_CASE("closure axioms on every subset") {
  for (const Geometry& g : small_gallery()) {
    const Mask full = g.full();
    for (Mask s = 0; s <= full; ++s) {
      const Mask c = g.closure(s);
      CHECK(bits::subset(s, c));
      CHECK(g.closure(c) == c);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Mask p = bits::bit(i);
        CHECK(bits::subset(c, g.closure(s | p)));  // monotone
        if (c & p) continue;
        // Exchange: q ∈ cl(S∪p) − cl(S) implies p ∈ cl(S∪q).
        const Mask sp = g.closure(s | p);
        for (std::size_t j = 0; j < g.size(); ++j) {
          const Mask q = bits::bit(j);
          if ((sp & q) && !(c & q)) CHECK((g.closure(s | q) & p) != 0);
        }
      }
    }
  }
}

TEST_CASE("subgeometry") {
  const Geometry fig = meet_figure();
  const Geometry abcd = subgeometry(fig, F("ABCD"));
  CHECK(abcd == af2());
  const Geometry abce = subgeometry(fig, F("ABCE"));
  CHECK(flats_of_rank(abce, 2) == std::vector<Flat>{F("AB"), F("AC"), F("AE"), F("BCE")});
  CHECK(subgeometry(fig, fig.point_set()) == fig);
  CHECK(subgeometry(fig, F("BCE")).rank() == 2);
  CHECK_THROWS_AS(subgeometry(fig, F("AZ")), Error);

  // Nested generation.
  std::mt19937 rng(7);
  for (const Geometry& g : small_gallery()) {
    for (int t = 0; t < 30; ++t) {
      const Mask n = rng() & g.full();
      const Mask m = n & rng();
      const Geometry inner = subgeometry(g, n);
      CHECK(subgeometry(inner, g.labels_of(m)) == subgeometry(g, m));
    }
  }
}

TEST_CASE("meet subgeometries") {
  const Geometry fig = meet_figure();
  CHECK(is_meet_subgeometry(subgeometry(fig, F("ABCE")), fig));
  CHECK_FALSE(is_meet_subgeometry(subgeometry(fig, F("ABCD")), fig));
  CHECK(is_meet_subgeometry(fig, fig));
  CHECK_FALSE(is_meet_subgeometry(af2(), fano()));
  try {
    is_meet_subgeometry(free_geometry(LabelSet::chars("ABE")), fano());
    FAIL("expected NotASubgeometry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubgeometry);
  }
}

TEST_CASE("isomorphism") {
  const Geometry f = fano();
  auto id = is_isomorphic(f, f, true);
  REQUIRE(id);
  CHECK(id->at("A") == "A");
  const Geometry xyz = free_geometry(LabelSet{"X", "Y", "Z"});
  auto m = is_isomorphic(fg3(), xyz, false);
  REQUIRE(m);
  CHECK(m->size() == 3);
  CHECK_FALSE(is_isomorphic(fg3(), xyz, true));
  // Seven points: AF(2) plus three points on fresh lines.
  const Geometry other = plane("ABCDEFG", {"ABE", "CDE", "ACF", "BDF"});
  CHECK_FALSE(is_isomorphic(f, other, false));
  // Relabelled Fano is found.
  const Geometry fano2 = plane("ABCDEFG", {"ABC", "ADE", "AFG", "BDF", "BEG", "CDG", "CEF"});
  auto iso = is_isomorphic(f, fano2, false);
  REQUIRE(iso);
  for (Mask l : f.level(2)) {
    std::vector<PointLabel> image;
    for (const auto& p : f.labels_of(l)) image.push_back(iso->at(p));
    CHECK(fano2.is_flat(fano2.mask_of(LabelSet(image))));
  }
}

TEST_CASE("rank-4 completion") {
  const Geometry fg4 = free_geometry(LabelSet::chars("ABCD"));
  CHECK(fg4.flat_count() == 16);
  // Four coplanar points plus one off the plane.
  const Geometry g = Geometry::from_nontrivial_flats(4, LabelSet::chars("ABCDE"), {{3, {F("ABCD")}}});
  CHECK(g.level(2).size() == 10);
  CHECK(g.level(3).size() == 1 + 6);
  CHECK(closure(g, F("ABC")) == F("ABCD"));
  CHECK(closure(g, F("ABE")) == F("ABE"));
  // A listed line forces its planes to contain it.
  const Geometry h = Geometry::from_nontrivial_flats(4, LabelSet::chars("ABCDE"), {{2, {F("ABC")}}});
  CHECK(closure(h, F("ABD")) == F("ABCD"));
  CHECK(is_geometric_lattice(h).ok());
}
