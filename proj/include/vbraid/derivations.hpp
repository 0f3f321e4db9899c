#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/presentations.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

// Applies relators to a word and records each application.
class Tracer {
 public:
  Tracer(const RelationSet& rels, std::vector<Generator> word);

  void apply(const std::string& id, Direction dir, std::size_t pos);
  void apply(const RewriteStep& step);

  const std::vector<Generator>& word() const { return word_; }
  const std::vector<RewriteStep>& steps() const { return steps_; }
  const RelationSet& relations() const { return *rels_; }

 private:
  const RelationSet* rels_;
  std::vector<Generator> word_;
  std::vector<RewriteStep> steps_;
};

// Shortest-form word for a permutation: runs (v_k v_{k-1} ... v_j) for
// k = 1..n-1, each possibly empty.
std::vector<Generator> canonical_virtual_word(const Permutation& p);

// Rewrites the pure-virtual segment [begin, end) into canonical form using
// only virt-square, virt-braid and virt-comm steps. Returns the new end.
std::size_t normalize_virtual_segment(Tracer& t, std::size_t begin, std::size_t end,
                                      int n);

// Equality of pure-virtual words, decided on permutations.
bool prove_pure_virtual(const BraidWord& a, const BraidWord& b);

// Builds a replayable proof of start = target over a reduced presentation.
// Both words may use only the first core letter (s1, s1^-1 or c1) and virtual
// letters. Returns nothing when no proof is found: either the words agree
// modulo the virtual and core-commuting relators, or they differ by a single
// application of one of the main relators conjugated by virtual words.
std::optional<DerivationScript> build_derivation(const BraidWord& start,
                                                 const BraidWord& target,
                                                 const Presentation& reduced,
                                                 const std::string& name);

// Built-in families. Each expands both sides of a full relator through the
// core-letter substitution and proves them equal from the reduced relators.
// Throw Error for inadmissible indices.
DerivationScript mixed_commute_script(int i, int j, int n, bool flat = false);
DerivationScript braid_relation_script(int i, int n, bool flat = false);
DerivationScript far_commute_script(int i, int j, int n, bool flat = false);
DerivationScript welded_substitution_script(int n);

// Every admissible instance of every family at exactly n strands.
std::vector<DerivationScript> builtin_scripts(int n);

// v_i ... v_{j+1} v_j v_{j+1} ... v_i = v_j ... v_{i-1} v_i v_{i-1} ... v_j,
// 1 <= j < i <= n-1.
std::pair<BraidWord, BraidWord> palindrome_identity(int i, int j, int n);

// (v4 v3 v2 v1)(v5 v4 v3 v2)...(v_{i+2} v_{i+1} v_i v_{i-1}) =
// (v4 ... v_{i+2})(v3 ... v_{i+1})(v2 ... v_i)(v1 ... v_{i-1}),
// 2 <= i, i+2 <= n-1.
std::pair<BraidWord, BraidWord> staircase_identity(int i, int n);

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Both identity families for every admissible index and 2 <= n <= max_n.
IdentityReport verify_identities(int max_n);

}  // namespace vbraid
