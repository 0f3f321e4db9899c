#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/words.hpp"

namespace vbraid {

struct Relator {
  std::string id;
  BraidWord lhs;
  BraidWord rhs;
};

enum class Flavor : std::uint8_t { Full, Reduced, ReducedSingleWelded };

std::string_view to_string(Flavor flavor);

struct Presentation {
  GroupKind kind;
  int n;
  Flavor flavor;
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  const Relator* find(std::string_view id) const;
};

Presentation full_presentation(GroupKind kind, int n);

// Throws Error for kinds without a reduced form, or single-welded with a kind
// other than WB.
Presentation reduced_presentation(GroupKind kind, int n,
                                  Flavor flavor = Flavor::Reduced);

bool has_reduced_presentation(GroupKind kind);

// The three detour variants that follow from the special detour relation,
// with sigma inverse forms. Not part of any presentation.
std::vector<Relator> derived_relations(GroupKind kind, int n);

// sigma_t (c_t for flat kinds) written over the first core letter and the
// virtual generators.
BraidWord expand_sigma(int t, int n, GroupKind kind);

// Letterwise expand_sigma, then free reduction.
BraidWord expand_word(const BraidWord& w);

// v_t written over v1 and the braiding generators (WB).
BraidWord expand_v_welded(int t, int n);

struct SymmetricCheck {
  bool pass = true;
  std::vector<std::string> violators;
};

SymmetricCheck relator_symmetric_check(const Presentation& p);

// `generator <token>` and `relator <id>: <lhs> = <rhs>` lines behind a
// `presentation <kind> <n> <flavor>` header.
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

// Relator ids shared between the presentation builders and the provers.
namespace relid {
std::string virt_square(int i);
std::string virt_braid(int i);
std::string virt_comm(int i, int j);
std::string flat_square(int i);
std::string cancel(Generator g);
std::string core_comm(bool flat, int j);
}  // namespace relid

}  // namespace vbraid
