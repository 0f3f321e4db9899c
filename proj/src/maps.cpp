#include "vbraid/maps.hpp"

#include <deque>

#include "vbraid/derivations.hpp"
#include "vbraid/presentations.hpp"

namespace vbraid {

std::string format_arrow(const GroupArrow& a) {
  return std::string(to_string(a.source)) + "->" + std::string(to_string(a.target));
}

const std::vector<GroupArrow>& arrow_catalog() {
  using K = GroupKind;
  static const std::vector<GroupArrow> arrows{
      {K::B, K::VB},  {K::B, K::S},   {K::VB, K::WB}, {K::WB, K::UB}, {K::VB, K::FV},
      {K::WB, K::FU}, {K::UB, K::FU}, {K::FV, K::FU}, {K::FV, K::S},  {K::FU, K::S},
  };
  return arrows;
}

bool in_catalog(const GroupArrow& a) {
  for (const auto& x : arrow_catalog()) {
    if (x == a) return true;
  }
  return false;
}

Generator map_generator(Generator g, const GroupArrow& a) {
  if (a.target == GroupKind::S) return virt(g.index);
  if (is_flat_kind(a.target) && !is_flat_kind(a.source) &&
      (g.family == Family::Sigma || g.family == Family::SigmaInv)) {
    return flat(g.index);
  }
  return g;
}

BraidWord map_word(const BraidWord& w, const GroupArrow& a) {
  if (w.kind() != a.source) {
    throw Error("map " + format_arrow(a) + ": word has kind " +
                std::string(to_string(w.kind())));
  }
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto g : w.letters()) out.push_back(map_generator(g, a));
  return BraidWord(a.target, w.strands(), std::move(out));
}

BraidWord compose_path(const BraidWord& w, const std::vector<GroupArrow>& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i - 1].target != path[i].source) {
      throw Error("path does not chain: " + format_arrow(path[i - 1]) + " then " +
                  format_arrow(path[i]));
    }
  }
  BraidWord cur = w;
  for (const auto& a : path) cur = map_word(cur, a);
  return cur;
}

std::vector<std::vector<GroupArrow>> catalog_paths(GroupKind source, GroupKind target) {
  std::vector<std::vector<GroupArrow>> out;
  std::deque<std::vector<GroupArrow>> queue{{}};
  while (!queue.empty()) {
    auto path = std::move(queue.front());
    queue.pop_front();
    const GroupKind at = path.empty() ? source : path.back().target;
    if (at == target && !path.empty()) {
      out.push_back(path);
      continue;
    }
    for (const auto& a : arrow_catalog()) {
      if (a.source != at) continue;
      auto next = path;
      next.push_back(a);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

bool member(const BraidWord& l, const BraidWord& r, const Presentation& p) {
  const BraidWord il = inverse(l), ir = inverse(r);
  for (const auto& rel : p.relators) {
    if ((rel.lhs == l && rel.rhs == r) || (rel.lhs == r && rel.rhs == l)) return true;
    if ((rel.lhs == il && rel.rhs == ir) || (rel.lhs == ir && rel.rhs == il)) return true;
  }
  return false;
}

bool only_virtual(const BraidWord& w) {
  for (auto g : w.letters()) {
    if (g.family != Family::Virtual) return false;
  }
  return true;
}

}  // namespace

CertificationReport check_well_defined(const GroupArrow& a, int n, const SearchBudget& budget) {
  CertificationReport report{"arrow " + format_arrow(a) + " n=" + std::to_string(n), {}};
  const Presentation source = full_presentation(a.source, n);
  const Presentation target = full_presentation(a.target, n);
  std::optional<Presentation> reduced;
  std::optional<RelationSet> reduced_rels;
  if (has_reduced_presentation(a.target)) {
    reduced = reduced_presentation(a.target, n);
    reduced_rels = RelationSet::from(*reduced);
  }
  const RelationSet target_rels = RelationSet::named(a.target, n, {"full"});

  for (const auto& rel : source.relators) {
    CertifiedRelator e{rel.id, "UNCERTIFIED", false, 0, std::nullopt};
    const BraidWord l = map_word(rel.lhs, a), r = map_word(rel.rhs, a);
    auto done = [&](std::string mechanism) {
      e.mechanism = std::move(mechanism);
      e.certified = true;
    };
    if (free_reduce(l) == free_reduce(r)) {
      done("free-reduction");
    } else if (a.target == GroupKind::S) {
      if (permutation_image(l) == permutation_image(r)) {
        done("permutation");
      } else {
        e.mechanism = "refuted";
      }
    } else if (member(l, r, target)) {
      done("target-relator");
    } else if (only_virtual(l) && only_virtual(r) && prove_pure_virtual(l, r)) {
      done("pure-virtual");
    } else {
      if (reduced) {
        auto script = build_derivation(expand_word(l), expand_word(r), *reduced,
                                       format_arrow(a) + ":" + rel.id);
        if (script && verify_script(*script, *reduced_rels).ok) {
          done("reduced-script");
          e.steps = script->steps.size();
          e.proof = std::move(script);
        }
      }
      if (!e.certified) {
        auto found = bounded_equivalence(l, r, target_rels, budget);
        if (found.status == EquivalenceStatus::Equivalent && found.witness) {
          found.witness->relation_sets = {"full"};
          if (verify_script(*found.witness, target_rels).ok) {
            done("bounded-search");
            e.steps = found.witness->steps.size();
            e.proof = std::move(found.witness);
          }
        }
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace vbraid
