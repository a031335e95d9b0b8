#include "doctest.h"
#include "geolat/gallery.hpp"
#include "geolat/strong.hpp"
#include "support.hpp"

using namespace geolat;
using testsupport::Labels;
using testsupport::labels;

namespace {

std::set<Labels> nontrivial_lines(const Geometry& g) {
  std::set<Labels> out;
  for (const auto& l : flats_of_rank(g, 2)) {
    if (l.size() >= 3) out.insert(testsupport::to_labels(l));
  }
  return out;
}

Labels named(std::initializer_list<std::string> items) { return Labels(items); }

std::vector<gallery::Item> every_entry() {
  std::vector<gallery::Item> out;
  for (const auto& info : gallery::names()) {
    if (!info.argument) {
      out.push_back(gallery::build(info.name));
    } else if (info.name == "fg") {
      for (int n = 0; n <= 4; ++n) out.push_back(gallery::build(info.name, n));
    } else {
      for (int k = 0; k <= 3; ++k) out.push_back(gallery::build(info.name, k));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("every gallery structure is a geometric lattice and rebuilds identically") {
  const auto first = every_entry();
  const auto second = every_entry();
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    REQUIRE(first[i].parts.size() == second[i].parts.size());
    for (std::size_t j = 0; j < first[i].parts.size(); ++j) {
      const Geometry& g = first[i].parts[j].second;
      CHECK_MESSAGE(is_geometric_lattice(g).ok(), first[i].parts[j].first);
      CHECK(g == second[i].parts[j].second);
      CHECK(g.hash() == second[i].parts[j].second.hash());
    }
  }
}

TEST_CASE("free geometries") {
  for (int n = 0; n <= 4; ++n) CHECK(gallery::fg(n).flat_count() == (std::size_t{1} << n));
  CHECK(gallery::fg(3).flat_count() == 8);
  CHECK_THROWS_AS(gallery::fg(5), Error);
}

TEST_CASE("affine plane and Fano plane") {
  const Geometry af2 = gallery::af2();
  CHECK(af2.size() == 4);
  CHECK(flats_of_rank(af2, 2).size() == 6);
  CHECK(af2.flat_count() == 12);

  const Geometry fano = gallery::fano();
  CHECK(fano.size() == 7);
  const auto lines = nontrivial_lines(fano);
  CHECK(lines == std::set<Labels>{labels("ABE"), labels("ACF"), labels("BCG"), labels("ADG"), labels("BDF"),
                                  labels("CDE"), labels("EFG")});
  for (const auto& l1 : lines) {
    for (const auto& l2 : lines) {
      if (l1 == l2) continue;
      Labels both;
      std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::inserter(both, both.end()));
      CHECK(both.size() == 1);
    }
  }
  CHECK(fano.flat_count() == 16);

  const auto recipe = gallery::fano_recipe();
  REQUIRE(recipe.stages.size() == 4);
  REQUIRE(recipe.cuts.size() == 3);
  CHECK(recipe.stages.front() == af2);
  CHECK(recipe.stages.back() == fano);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_NOTHROW(validate_cut(recipe.stages[i], recipe.cuts[i]));
    CHECK_FALSE(is_principal(recipe.stages[i], recipe.cuts[i]));
  }
}

TEST_CASE("figure planes") {
  const auto pair = gallery::amalgamation_failure_pair();
  CHECK(nontrivial_lines(pair.a) ==
        std::set<Labels>{labels("ABD"), labels("CDE"), named({"A", "C", "P0"}), named({"B", "E", "P0"})});
  CHECK(nontrivial_lines(pair.b) == std::set<Labels>{labels("ABD"), labels("CDE"), named({"A", "C", "P1"}),
                                                     named({"B", "E", "P1"}), named({"D", "F", "P1"})});
  CHECK(pair.c.point_set() == LabelSet::chars("ABCDEF"));
  CHECK(subgeometry(pair.a, pair.c.point_set()) == pair.c);
  CHECK(subgeometry(pair.b, pair.c.point_set()) == pair.c);

  CHECK(nontrivial_lines(gallery::lack_indep_plane()) == std::set<Labels>{labels("BCE"), labels("DEF")});
  CHECK(gallery::lack_indep_plane().size() == 6);
  CHECK(nontrivial_lines(gallery::meet_subgeo_figure()) == std::set<Labels>{labels("ADE"), labels("BCE")});
  CHECK(gallery::meet_subgeo_figure().size() == 5);
}

TEST_CASE("smoothness stages") {
  for (int k = 0; k <= 3; ++k) {
    const auto s = gallery::smoothness_stage(k);
    const auto n = static_cast<std::size_t>(k);
    CHECK(s.b.size() == 4 + 5 * (n + 1));
    std::set<Labels> expected;
    for (int i = 0; i <= k; ++i) {
      const std::string d = "D" + std::to_string(i), e = "E" + std::to_string(i), h = "H" + std::to_string(i),
                        c = "C" + std::to_string(i), b = "B" + std::to_string(i), next = "D" + std::to_string(i + 1);
      expected.insert(named({d, e, next}));
      expected.insert(named({e, h, c}));
      expected.insert(named({h, next, b}));
    }
    CHECK(nontrivial_lines(s.b) == expected);
    CHECK(s.a.size() == 3 + 2 * (n + 1));
    CHECK(subgeometry(s.b, s.a.point_set()) == s.a);
    CHECK(run_construction(s.b_construction) == s.b);
    CHECK(s.reverse_order.front() == "D" + std::to_string(k + 1));
    CHECK(s.reverse_order.back() == "D0");
    if (k <= 2) CHECK(is_witness(s.a, s.b, witness_for_order(s.a, s.b, s.reverse_order)));
  }
  CHECK(gallery::smoothness_stage(2).b.size() == 19);
  CHECK(nontrivial_lines(gallery::smoothness_stage(2).b).size() == 9);
  CHECK_THROWS_AS(gallery::smoothness_stage(4), Error);
}

TEST_CASE("rank-4 coherence gadget") {
  const auto g = gallery::coherence_failure_rank4();
  CHECK(g.c.rank() == 4);
  CHECK(g.c.size() == 12);
  CHECK(g.a == gallery::fg(4));
  CHECK(g.b.point_set() == LabelSet{"A", "B", "C", "D", "G", "H", "I", "L", "M", "N"});
  CHECK(run_construction(g.c_construction) == g.c);
  CHECK(flats_of_rank(g.c, 3).size() > 0);
  CHECK(closure(g.c, LabelSet{"G", "H"}).contains("A") == false);
  CHECK(rank_of(g.c, closure(g.c, LabelSet{"A", "E", "F", "G", "H"})) == 3);
  CHECK(rank_of(g.c, closure(g.c, LabelSet{"E", "F", "M", "N"})) == 2);
}

TEST_CASE("build by name") {
  CHECK(gallery::build("fg", 3).part("main") == gallery::fg(3));
  CHECK(gallery::build("smoothness_stage", 1).part("B") == gallery::smoothness_stage(1).b);
  CHECK(gallery::build("amalgamation_failure_pair").parts.size() == 3);
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of([] { gallery::build("pg3"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { gallery::build("fg"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { gallery::build("af2", 2); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { gallery::build("fg", 7); }) == ErrorKind::UnknownName);
  CHECK_THROWS_AS(gallery::build("af2").part("B"), Error);
}
