#include <random>
#include <tuple>

#include "doctest.h"
#include "support.hpp"
#include "vbraid/derivations.hpp"

using namespace vbraid;

TEST_CASE("palindrome identity matches the written formula") {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = 1; j < i; ++j) {
        auto [l, r] = palindrome_identity(i, j, n);
        auto [tl, tr] = support::palindrome_text(i, j);
        CHECK(format_word(l) == tl);
        CHECK(format_word(r) == tr);
        CHECK(support::strand_endpoints(l) == support::strand_endpoints(r));
      }
    }
  }
  CHECK_THROWS_AS(palindrome_identity(1, 1, 4), Error);
  CHECK_THROWS_AS(palindrome_identity(4, 1, 4), Error);
}

TEST_CASE("staircase identity matches the written formula") {
  auto [l, r] = staircase_identity(3, 6);
  CHECK(format_word(l) == "v4 v3 v2 v1 v5 v4 v3 v2");
  CHECK(format_word(r) == "v4 v5 v3 v4 v2 v3 v1 v2");
  for (int n = 5; n <= 7; ++n) {
    for (int i = 2; i + 2 <= n - 1; ++i) {
      auto [a, b] = staircase_identity(i, n);
      auto [ta, tb] = support::staircase_text(i);
      CHECK(format_word(a) == ta);
      CHECK(format_word(b) == tb);
      CHECK(support::strand_endpoints(a) == support::strand_endpoints(b));
    }
  }
  CHECK_THROWS_AS(staircase_identity(3, 5), Error);
}

TEST_CASE("identity sweep") {
  auto rep = verify_identities(7);
  CHECK(rep.pass());
  CHECK(rep.checked == 41);
}

TEST_CASE("canonical virtual words") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto w = random_word(GroupKind::S, n, rng() % 12, rng);
    auto c = canonical_virtual_word(permutation_image(w));
    CHECK(permutation_image(c, n) == permutation_image(w));
    CHECK(prove_pure_virtual(w, BraidWord(GroupKind::S, n, c)));
  }
}

TEST_CASE("built-in scripts replay at every admissible size") {
  const std::size_t expected[] = {0, 0, 1, 5, 15, 31};
  for (int n = 2; n <= 6; ++n) {
    auto scripts = builtin_scripts(n);
    CHECK(scripts.size() == expected[n - 1]);
    for (const auto& s : scripts) {
      auto r = verify_script(s);
      CHECK_MESSAGE(r.ok, s.name << ": " << r.failure);
      CHECK(r.reached_target);
      CHECK(free_reduce(BraidWord(s.kind, s.n, r.final_word)) == free_reduce(s.target));
    }
  }
}

TEST_CASE("inadmissible script indices") {
  CHECK_THROWS_AS(mixed_commute_script(2, 3, 5), Error);
  CHECK_THROWS_AS(mixed_commute_script(1, 3, 5), Error);
  CHECK_THROWS_AS(braid_relation_script(1, 5), Error);
  CHECK_THROWS_AS(far_commute_script(2, 3, 5), Error);
  CHECK_THROWS_AS(welded_substitution_script(2), Error);
}

TEST_CASE("welded substitution lands on the stated relation") {
  auto s = welded_substitution_script(3);
  auto expected = support::read_file(support::fixture_path("welded_substitution.txt"));
  expected.erase(expected.find_last_not_of("\n") + 1);
  CHECK(format_word(s.start) + " = " + format_word(s.target) == expected);
  CHECK(verify_script(s).ok);
}

TEST_CASE("golden scripts") {
  for (auto [file, name, n] : {std::tuple{"braid_relation_n4.script", "braid-relation(2)-n4", 4},
                               std::tuple{"welded_substitution_n4.script", "welded-substitution-n4", 4},
                               std::tuple{"far_commute_n5.script", "far-commute(2,4)-n5", 5}}) {
    const auto text = support::read_file(support::fixture_path(file));
    auto golden = parse_script(text);
    CHECK(verify_script(golden).ok);
    bool found = false;
    for (const auto& s : builtin_scripts(n)) {
      if (s.name != name) continue;
      found = true;
      CHECK(format_script(s) == text);
    }
    CHECK(found);
  }
}

TEST_CASE("build_derivation proves conjugated relator instances") {
  auto p = reduced_presentation(GroupKind::VB, 4);
  auto start = expand_word(parse_word("s2 v3 s2 v1", GroupKind::VB, 4));
  auto target = expand_word(parse_word("s2 v3 s2 v1", GroupKind::VB, 4));
  auto d = build_derivation(start, target, p, "self");
  REQUIRE(d.has_value());
  CHECK(verify_script(*d).ok);

  auto a = expand_word(parse_word("s1 s2 s1", GroupKind::VB, 4));
  auto b = expand_word(parse_word("s2 s1 s2", GroupKind::VB, 4));
  auto e = build_derivation(a, b, p, "braid");
  REQUIRE(e.has_value());
  CHECK(verify_script(*e).ok);
}
