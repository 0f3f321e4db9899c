#pragma once

#include <optional>
#include <vector>

#include "vbraid/diagrams.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

// How pulled strands pass the rest of a classical diagram.
enum class Routing : std::uint8_t { Over, Under };

// Event origin: index of the input event an output event or letter came from;
// empty for material introduced by the algorithm.
using Origins = std::vector<std::optional<std::size_t>>;

struct RotatedDiagram {
  MorseDiagram diagram;
  Origins origin;  // per output event
};

struct BraidingResult {
  BraidWord word;
  Origins origin;  // per letter
};

// Replaces every crossing with an upward strand by a block of cups, caps and
// the same crossing (same kind and sign) with both strands downward.
RotatedDiagram rotate_crossings_tracked(const MorseDiagram& d);
MorseDiagram rotate_crossings(const MorseDiagram& d);

// Requires every crossing to be downward. Each up-arc is removed and its two
// ends pulled out to a new rightmost strand pair. Origins are relative to
// `origin` when given, else to d's own events.
BraidingResult braid_up_arcs_tracked(const MorseDiagram& d, Routing routing = Routing::Over,
                                     const Origins* origin = nullptr);
BraidWord braid_up_arcs(const MorseDiagram& d, Routing routing = Routing::Over);

// Throws Error when the diagram is invalid or has a crossing kind the
// category does not admit. The word's kind is kind_for(category).
BraidingResult to_braid_tracked(const MorseDiagram& d, Category category,
                                Routing routing = Routing::Over);
BraidWord to_braid(const MorseDiagram& d, Category category,
                   Routing routing = Routing::Over);

}  // namespace vbraid
