#pragma once

#include <optional>

#include "vbraid/rewrite.hpp"

namespace vbraid {

enum class EquivalenceStatus : std::uint8_t { Equivalent, Distinct, Unknown };

std::string_view to_string(EquivalenceStatus s);

struct SearchBudget {
  std::size_t max_states = 2'000'000;
  // Absolute word-length cap; unset means max(|w1|, |w2|) + extra_length.
  std::optional<std::size_t> max_len;
  std::size_t extra_length = 8;
};

struct SearchStats {
  std::size_t states_expanded = 0;
  std::size_t max_frontier = 0;
  double elapsed_ms = 0;
};

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::Unknown;
  // Present exactly when status is Equivalent; replays with autoreduce=0.
  std::optional<DerivationScript> witness;
  SearchStats stats;
};

// Bidirectional breadth-first search over freely reduced words. Relators with
// an empty side are not used as insertions; cancellation happens by explicit
// free-reduction steps. Expansion order: relator id, direction (L2R first),
// then position.
EquivalenceResult bounded_equivalence(const BraidWord& w1, const BraidWord& w2,
                                      const RelationSet& rels,
                                      const SearchBudget& budget = {});

// Free reduction as explicit cancellation steps (leftmost pair first).
std::vector<Generator> free_reduce_traced(std::vector<Generator> w,
                                          std::vector<RewriteStep>& steps);

}  // namespace vbraid
