#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vbraid/presentations.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/search.hpp"

namespace vbraid {

struct CertifiedRelator {
  std::string id;
  // free-reduction, pure-virtual, script:<family>, bounded-search, or
  // UNCERTIFIED.
  std::string mechanism;
  bool certified = false;
  std::size_t steps = 0;
  std::optional<DerivationScript> proof;
};

struct CertificationReport {
  std::string subject;
  std::vector<CertifiedRelator> entries;

  bool pass() const;
  std::size_t uncertified() const;
};

// Family label for a relator id: the part before the first '('.
std::string relator_family(const std::string& id);

// Every full-presentation relator of the kind, expanded through the core
// substitution and proved from the reduced presentation.
CertificationReport certify_reduction(GroupKind kind, int n,
                                      const SearchBudget& budget = {});

// The derived detour relations, certified the same way.
CertificationReport certify_derived(GroupKind kind, int n,
                                    const SearchBudget& budget = {});

std::string format_report(const CertificationReport& r);

}  // namespace vbraid
