#pragma once

#include <vector>

#include "vbraid/certify.hpp"
#include "vbraid/search.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

// A generator-level homomorphism between two of the groups. sigma letters
// (either sign) become c entering a flat kind; every letter becomes v_i
// entering S; otherwise letters are kept.
struct GroupArrow {
  GroupKind source;
  GroupKind target;
  friend bool operator==(const GroupArrow&, const GroupArrow&) = default;
};

std::string format_arrow(const GroupArrow& a);

// The ten arrows of the lattice.
const std::vector<GroupArrow>& arrow_catalog();
bool in_catalog(const GroupArrow& a);

Generator map_generator(Generator g, const GroupArrow& a);

// Throws Error when w's kind is not the arrow's source. Words mapped into S
// come back as words in v letters; compare them with permutation_image.
BraidWord map_word(const BraidWord& w, const GroupArrow& a);

// Throws Error when consecutive arrows do not chain. An empty path returns w.
BraidWord compose_path(const BraidWord& w, const std::vector<GroupArrow>& path);

// Every catalog path from source to target, shortest first.
std::vector<std::vector<GroupArrow>> catalog_paths(GroupKind source, GroupKind target);

// Each full-presentation relator of the source, mapped and certified equal in
// the target. Mechanisms: free-reduction, permutation (target S, decided
// exactly; a mismatch is reported as refuted), target-relator, pure-virtual,
// reduced-script, bounded-search, else UNCERTIFIED.
CertificationReport check_well_defined(const GroupArrow& a, int n,
                                       const SearchBudget& budget = {});

}  // namespace vbraid
