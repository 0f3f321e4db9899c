#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vbraid/maps.hpp"

using namespace vbraid;

TEST_CASE("arrow catalog") {
  const auto& cat = arrow_catalog();
  CHECK(cat.size() == 10);
  std::set<std::string> names;
  for (const auto& a : cat) names.insert(format_arrow(a));
  CHECK(names.size() == 10);
  for (const char* a : {"B->VB", "B->S", "VB->WB", "WB->UB", "VB->FV", "WB->FU", "UB->FU",
                        "FV->FU", "FV->S", "FU->S"})
    CHECK(names.count(a) == 1);
  CHECK_FALSE(in_catalog({GroupKind::WB, GroupKind::VB}));
}

TEST_CASE("letterwise images") {
  CHECK(map_generator(sigma_inv(2), {GroupKind::VB, GroupKind::FV}) == flat(2));
  CHECK(map_generator(sigma(2), {GroupKind::WB, GroupKind::FU}) == flat(2));
  CHECK(map_generator(virt(1), {GroupKind::VB, GroupKind::WB}) == virt(1));
  CHECK(map_generator(sigma(1), {GroupKind::B, GroupKind::S}) == virt(1));
  CHECK(map_generator(flat(3), {GroupKind::FU, GroupKind::S}) == virt(3));
  auto w = parse_word("s1 v2 s1^-1", GroupKind::VB, 3);
  CHECK(format_word(map_word(w, {GroupKind::VB, GroupKind::FV})) == "c1 v2 c1");
  CHECK_THROWS_AS(map_word(w, {GroupKind::WB, GroupKind::UB}), Error);
}

TEST_CASE("paths") {
  auto to_s = catalog_paths(GroupKind::B, GroupKind::S);
  REQUIRE(!to_s.empty());
  CHECK(to_s.front().size() == 1);
  for (std::size_t k = 1; k < to_s.size(); ++k) CHECK(to_s[k - 1].size() <= to_s[k].size());
  CHECK(catalog_paths(GroupKind::S, GroupKind::B).empty());
  CHECK(catalog_paths(GroupKind::VB, GroupKind::FU).size() == 3);
  auto w = parse_word("s1 s2", GroupKind::B, 3);
  CHECK(compose_path(w, {}) == w);
  CHECK_THROWS_AS(compose_path(w, {{GroupKind::B, GroupKind::VB}, {GroupKind::FV, GroupKind::S}}),
                  Error);
}

TEST_CASE("every arrow is well defined at n = 4") {
  for (const auto& a : arrow_catalog()) {
    auto rep = check_well_defined(a, 4);
    CHECK_MESSAGE(rep.pass(), format_report(rep));
  }
}

TEST_CASE("a non-arrow is not certified") {
  // The forbidden move does not hold in VB.
  SearchBudget small;
  small.max_states = 5000;
  auto rep = check_well_defined({GroupKind::WB, GroupKind::VB}, 3, small);
  CHECK_FALSE(rep.pass());
  bool saw = false;
  for (const auto& e : rep.entries)
    if (e.id == "F1(1)") saw = !e.certified;
  CHECK(saw);
}

TEST_CASE("paths to S commute on permutations") {
  std::mt19937 rng(77);
  for (auto source : {GroupKind::B, GroupKind::VB, GroupKind::WB, GroupKind::UB, GroupKind::FV,
                      GroupKind::FU}) {
    auto paths = catalog_paths(source, GroupKind::S);
    REQUIRE(!paths.empty());
    for (int t = 0; t < 100; ++t) {
      auto w = random_word(source, 5, rng() % 15, rng);
      const auto expect = support::strand_endpoints(w);
      for (const auto& p : paths) CHECK(support::strand_endpoints(compose_path(w, p)) == expect);
    }
  }
}
