#include "doctest.h"
#include "support.hpp"
#include "vbraid/certify.hpp"
#include "vbraid/search.hpp"

using namespace vbraid;

TEST_CASE("bounded search finds a witness that replays") {
  auto rels = RelationSet::named(GroupKind::VB, 3, {"full"});
  auto a = parse_word("v1 s2 v1 s1", GroupKind::VB, 3);
  auto b = parse_word("v2 s1 v2 s1", GroupKind::VB, 3);
  auto r = bounded_equivalence(a, b, rels);
  REQUIRE(r.status == EquivalenceStatus::Equivalent);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.witness->auto_reduce);
  auto rep = verify_script(*r.witness, rels);
  CHECK(rep.ok);
  CHECK(rep.reached_target);
}

TEST_CASE("different permutations are distinct at once") {
  auto rels = RelationSet::named(GroupKind::VB, 3, {"full"});
  auto r = bounded_equivalence(parse_word("v1", GroupKind::VB, 3), parse_word("v2", GroupKind::VB, 3),
                               rels);
  CHECK(r.status == EquivalenceStatus::Distinct);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("budget exhaustion is unknown, not distinct") {
  auto rels = RelationSet::named(GroupKind::VB, 3, {"full"});
  // Same permutation, not equal in VB: the forbidden move.
  auto a = parse_word("v1 s2 s1", GroupKind::VB, 3);
  auto b = parse_word("s2 s1 v2", GroupKind::VB, 3);
  SearchBudget small;
  small.max_states = 2000;
  auto r = bounded_equivalence(a, b, rels, small);
  CHECK(r.status == EquivalenceStatus::Unknown);
  CHECK(r.stats.states_expanded <= 2000 + 64);
}

TEST_CASE("free reduction as explicit steps") {
  std::vector<RewriteStep> steps;
  auto w = parse_word("s1 v2 v2 s1^-1 s2", GroupKind::VB, 3);
  auto r = free_reduce_traced(w.letters(), steps);
  CHECK(format_letters(r) == "s2");
  CHECK(steps.size() == 2);
  RelationSet rels(GroupKind::VB, 3);
  rels.add(full_presentation(GroupKind::VB, 3).relators);
  auto x = w;
  for (const auto& s : steps) x = apply_step(x, s, rels);
  CHECK(format_word(x) == "s2");
}

TEST_CASE("certify_reduction covers every full relator") {
  for (auto k : {GroupKind::VB, GroupKind::FV, GroupKind::WB, GroupKind::UB, GroupKind::FU}) {
    auto rep = certify_reduction(k, 4);
    CHECK_MESSAGE(rep.pass(), format_report(rep));
    CHECK(rep.entries.size() == full_presentation(k, 4).relators.size());
    for (const auto& e : rep.entries) {
      if (e.proof) CHECK(verify_script(*e.proof).ok);
    }
  }
}

TEST_CASE("derived detour relations certify") {
  auto rep = certify_derived(GroupKind::VB, 4);
  CHECK(rep.pass());
  CHECK(relator_family("special-detour(2)") == "special-detour");
  CHECK(relator_family("reduced-braid") == "reduced-braid");
}
