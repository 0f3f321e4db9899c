#include "vbraid/certify.hpp"

#include <map>
#include <sstream>

#include "vbraid/derivations.hpp"

namespace vbraid {

bool CertificationReport::pass() const { return uncertified() == 0; }

std::size_t CertificationReport::uncertified() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.certified ? 0 : 1;
  return k;
}

std::string relator_family(const std::string& id) { return id.substr(0, id.find('(')); }

namespace {

bool pure_virtual(const BraidWord& w) {
  for (auto g : w.letters()) {
    if (g.family != Family::Virtual) return false;
  }
  return true;
}

std::string script_label(const std::string& family) {
  static const std::map<std::string, std::string> labels{
      {"mixed-comm", "mixed-commute"},
      {"braid", "braid-relation"},
      {"braid-comm", "far-commute"},
      {"special-detour", "detour"},
      {"F1", "welded"},
      {"F2", "unrestricted"},
      {"flat-mixed-comm", "flat-mixed-commute"},
      {"flat-braid", "flat-braid-relation"},
      {"flat-comm", "flat-far-commute"},
      {"flat-detour", "flat-detour"},
      {"flat-forbidden", "flat-forbidden"},
  };
  auto it = labels.find(family);
  if (it != labels.end()) return it->second;
  if (family.find("detour") != std::string::npos) return "derived-detour";
  return family;
}

CertifiedRelator certify_one(const Relator& rel, const Presentation& reduced,
                             const RelationSet& reduced_rels,
                             const SearchBudget& budget) {
  CertifiedRelator out{rel.id, "UNCERTIFIED", false, 0, std::nullopt};
  const BraidWord l = expand_word(rel.lhs);
  const BraidWord r = expand_word(rel.rhs);
  if (l == r) {
    out.mechanism = "free-reduction";
    out.certified = true;
    return out;
  }
  if (pure_virtual(l) && pure_virtual(r)) {
    if (prove_pure_virtual(l, r)) {
      out.mechanism = "pure-virtual";
      out.certified = true;
    }
    return out;
  }
  const std::string label = script_label(relator_family(rel.id));
  if (auto script = build_derivation(l, r, reduced, label + ":" + rel.id)) {
    auto replay = verify_script(*script, reduced_rels);
    if (replay.ok) {
      out.mechanism = "script:" + label;
      out.certified = true;
      out.steps = script->steps.size();
      out.proof = std::move(*script);
      return out;
    }
  }
  auto found = bounded_equivalence(l, r, reduced_rels, budget);
  if (found.status == EquivalenceStatus::Equivalent && found.witness) {
    found.witness->relation_sets = {"reduced"};
    if (verify_script(*found.witness, reduced_rels).ok) {
      out.mechanism = "bounded-search";
      out.certified = true;
      out.steps = found.witness->steps.size();
      out.proof = std::move(found.witness);
    }
  }
  return out;
}

CertificationReport certify_list(const std::vector<Relator>& rels, GroupKind kind,
                                 int n, const SearchBudget& budget,
                                 const std::string& subject) {
  if (!has_reduced_presentation(kind)) {
    throw Error("no reduced presentation for " + std::string(to_string(kind)));
  }
  const Presentation reduced = reduced_presentation(kind, n);
  const RelationSet reduced_rels = RelationSet::from(reduced);
  CertificationReport report{subject, {}};
  for (const auto& rel : rels) {
    report.entries.push_back(certify_one(rel, reduced, reduced_rels, budget));
  }
  return report;
}

}  // namespace

CertificationReport certify_reduction(GroupKind kind, int n, const SearchBudget& budget) {
  return certify_list(full_presentation(kind, n).relators, kind, n, budget,
                      "reduction " + std::string(to_string(kind)) + " n=" +
                          std::to_string(n));
}

CertificationReport certify_derived(GroupKind kind, int n, const SearchBudget& budget) {
  return certify_list(derived_relations(kind, n), kind, n, budget,
                      "derived " + std::string(to_string(kind)) + " n=" +
                          std::to_string(n));
}

std::string format_report(const CertificationReport& r) {
  std::ostringstream os;
  os << r.subject << '\n';
  for (const auto& e : r.entries) {
    os << "  " << e.id << ": " << e.mechanism;
    if (e.steps) os << " (" << e.steps << " steps)";
    os << '\n';
  }
  os << (r.pass() ? "PASS" : "FAIL") << ": " << r.entries.size() - r.uncertified()
     << "/" << r.entries.size() << " certified\n";
  return os.str();
}

}  // namespace vbraid
