#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/presentations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

enum class Direction : std::uint8_t { LeftToRight, RightToLeft };

std::string_view to_string(Direction d);
Direction flip(Direction d);

struct RewriteStep {
  std::string relator_id;
  Direction direction = Direction::LeftToRight;
  std::size_t position = 0;
  std::string note;

  friend bool operator==(const RewriteStep& a, const RewriteStep& b) {
    return a.relator_id == b.relator_id && a.direction == b.direction &&
           a.position == b.position;
  }
};

// The relators a derivation may cite, looked up by id. Cancellation relators
// for sigma letters (cancel(s<i>): s<i> s<i>^-1 = e, and the mirrored one)
// are always present for kinds with sigma.
class RelationSet {
 public:
  RelationSet(GroupKind kind, int n);

  // Named sets: full, reduced, reduced-single-welded, derived. Throws Error for
  // unknown names.
  static RelationSet named(GroupKind kind, int n,
                           const std::vector<std::string>& names);
  static RelationSet from(const Presentation& p);

  // Relators whose id is already present are skipped.
  void add(const Relator& r);
  void add(const std::vector<Relator>& rs);

  const Relator* find(std::string_view id) const;
  const std::vector<Relator>& relators() const { return relators_; }
  GroupKind kind() const { return kind_; }
  int strands() const { return n_; }

 private:
  GroupKind kind_;
  int n_;
  std::vector<Relator> relators_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

std::vector<Relator> cancellation_relators(GroupKind kind, int n);

class StepError : public Error {
 public:
  using Error::Error;
};

// Letter-level application; throws StepError on unknown id or mismatch.
std::vector<Generator> apply_step(const std::vector<Generator>& letters,
                                  const RewriteStep& step, const RelationSet& rels);

BraidWord apply_step(const BraidWord& w, const RewriteStep& step,
                     const RelationSet& rels, bool auto_reduce = false);

struct DerivationScript {
  std::string name;
  GroupKind kind = GroupKind::VB;
  int n = 1;
  // Empty means every named set for the kind.
  std::vector<std::string> relation_sets;
  BraidWord start{GroupKind::VB, 1};
  std::vector<RewriteStep> steps;
  BraidWord target{GroupKind::VB, 1};
  bool auto_reduce = false;
};

RelationSet relations_for(const DerivationScript& s);

struct StepTrace {
  RewriteStep step;
  std::vector<Generator> before;
  std::vector<Generator> after;
  std::size_t matched_length = 0;
  std::size_t replaced_length = 0;
};

struct ReplayReport {
  bool ok = false;
  std::vector<StepTrace> steps;
  // Index of the failing step, when one failed.
  std::optional<std::size_t> failed_step;
  std::string failure;
  std::vector<Generator> final_word;
  bool reached_target = false;
};

ReplayReport verify_script(const DerivationScript& s);
ReplayReport verify_script(const DerivationScript& s, const RelationSet& rels);

// Per-step words with the matched segment bracketed.
std::string format_replay(const DerivationScript& s, const ReplayReport& r);

std::string format_script(const DerivationScript& s);
DerivationScript parse_script(std::string_view text);

// Steps that undo `steps` when applied to the word they produced.
std::vector<RewriteStep> reversed(const std::vector<RewriteStep>& steps);

}  // namespace vbraid
