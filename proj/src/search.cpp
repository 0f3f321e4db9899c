#include "vbraid/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_map>

namespace vbraid {

std::string_view to_string(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::Equivalent:
      return "Equivalent";
    case EquivalenceStatus::Distinct:
      return "Distinct";
    case EquivalenceStatus::Unknown:
      return "Unknown";
  }
  return "?";
}

std::vector<Generator> free_reduce_traced(std::vector<Generator> w,
                                          std::vector<RewriteStep>& steps) {
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (cancels(w[i], w[i + 1])) {
      steps.push_back({relid::cancel(w[i]), Direction::LeftToRight, i, {}});
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return w;
}

namespace {

using Letters = std::vector<Generator>;

struct Node {
  Letters word;
  long parent;
  std::vector<RewriteStep> steps;  // from parent to this node
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, long> seen;
  std::deque<long> frontier;

  long add(Letters w, long parent, std::vector<RewriteStep> steps, std::string key) {
    long id = static_cast<long>(nodes.size());
    nodes.push_back({std::move(w), parent, std::move(steps)});
    seen.emplace(std::move(key), id);
    frontier.push_back(id);
    return id;
  }

  std::vector<RewriteStep> path(long id) const {
    std::vector<const std::vector<RewriteStep>*> chain;
    for (long k = id; k >= 0; k = nodes[k].parent) chain.push_back(&nodes[k].steps);
    std::vector<RewriteStep> out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      out.insert(out.end(), (*it)->begin(), (*it)->end());
    }
    return out;
  }
};

std::string key_of(const Letters& w) { return format_letters(w); }

}  // namespace

EquivalenceResult bounded_equivalence(const BraidWord& w1, const BraidWord& w2,
                                      const RelationSet& rels,
                                      const SearchBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  EquivalenceResult result;
  auto finish = [&](EquivalenceStatus status) {
    result.status = status;
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
    return result;
  };
  if (w1.kind() != w2.kind() || w1.strands() != w2.strands()) {
    throw Error("bounded_equivalence: kind or strand mismatch");
  }
  if (permutation_image(w1) != permutation_image(w2)) {
    return finish(EquivalenceStatus::Distinct);
  }

  std::vector<RewriteStep> head, tail;
  Letters a = free_reduce_traced(w1.letters(), head);
  Letters b = free_reduce_traced(w2.letters(), tail);

  DerivationScript witness;
  witness.name = "search";
  witness.kind = w1.kind();
  witness.n = w1.strands();
  witness.start = w1;
  witness.target = w2;
  witness.auto_reduce = false;

  auto emit = [&](std::vector<RewriteStep> fwd, const std::vector<RewriteStep>& bwd) {
    witness.steps = head;
    witness.steps.insert(witness.steps.end(), fwd.begin(), fwd.end());
    auto back = reversed(bwd);
    witness.steps.insert(witness.steps.end(), back.begin(), back.end());
    auto tail_back = reversed(tail);
    witness.steps.insert(witness.steps.end(), tail_back.begin(), tail_back.end());
    result.witness = witness;
    return finish(EquivalenceStatus::Equivalent);
  };

  if (a == b) return emit({}, {});

  const std::size_t max_len =
      budget.max_len.value_or(std::max(w1.size(), w2.size()) + budget.extra_length);

  std::vector<const Relator*> rules;
  for (const auto& r : rels.relators()) {
    if (r.lhs.empty() || r.rhs.empty()) continue;
    rules.push_back(&r);
  }
  std::sort(rules.begin(), rules.end(),
            [](const Relator* x, const Relator* y) { return x->id < y->id; });

  Side sides[2];
  sides[0].add(a, -1, {}, key_of(a));
  sides[1].add(b, -1, {}, key_of(b));

  while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
    int s = 0;
    if (sides[0].frontier.empty() ||
        (!sides[1].frontier.empty() &&
         sides[1].frontier.size() < sides[0].frontier.size())) {
      s = 1;
    }
    Side& me = sides[s];
    Side& other = sides[1 - s];
    // One full layer of this side.
    std::size_t layer = me.frontier.size();
    for (std::size_t l = 0; l < layer; ++l) {
      if (result.stats.states_expanded >= budget.max_states) {
        return finish(EquivalenceStatus::Unknown);
      }
      long id = me.frontier.front();
      me.frontier.pop_front();
      ++result.stats.states_expanded;
      const Letters cur = me.nodes[id].word;
      for (const Relator* r : rules) {
        for (Direction d : {Direction::LeftToRight, Direction::RightToLeft}) {
          const Letters& from = d == Direction::LeftToRight ? r->lhs.letters()
                                                             : r->rhs.letters();
          const Letters& to = d == Direction::LeftToRight ? r->rhs.letters()
                                                           : r->lhs.letters();
          if (from.size() > cur.size()) continue;
          if (cur.size() - from.size() + to.size() > max_len + 2) continue;
          for (std::size_t pos = 0; pos + from.size() <= cur.size(); ++pos) {
            if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<long>(pos))) {
              continue;
            }
            Letters next(cur.begin(), cur.begin() + static_cast<long>(pos));
            next.insert(next.end(), to.begin(), to.end());
            next.insert(next.end(), cur.begin() + static_cast<long>(pos + from.size()),
                        cur.end());
            std::vector<RewriteStep> steps{{r->id, d, pos, {}}};
            next = free_reduce_traced(std::move(next), steps);
            if (next.size() > max_len) continue;
            std::string key = key_of(next);
            if (me.seen.count(key)) continue;
            long nid = me.add(std::move(next), id, std::move(steps), key);
            auto hit = other.seen.find(key);
            if (hit != other.seen.end()) {
              auto mine = me.path(nid);
              auto theirs = other.path(hit->second);
              return s == 0 ? emit(mine, theirs) : emit(theirs, mine);
            }
          }
        }
      }
      result.stats.max_frontier =
          std::max(result.stats.max_frontier, sides[0].frontier.size() + sides[1].frontier.size());
    }
  }
  return finish(EquivalenceStatus::Unknown);
}

}  // namespace vbraid
