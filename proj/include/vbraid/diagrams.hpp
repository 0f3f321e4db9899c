#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vbraid/words.hpp"

namespace vbraid {

// Which leg of a new pair of strands points up.
enum class Chirality : std::uint8_t { LeftUp, RightUp };
enum class CrossingKind : std::uint8_t { Classical, Virtual, Flat };

// Birth of two adjacent strands at slots p, p+1 (read top to bottom).
struct Cup {
  int position = 1;
  Chirality chirality = Chirality::LeftUp;
  friend bool operator==(const Cup&, const Cup&) = default;
};

// Slots p and p+1 join and end.
struct Cap {
  int position = 1;
  friend bool operator==(const Cap&, const Cap&) = default;
};

// Strands in slots p and p+1 exchange places. sign is +1 or -1 for classical
// crossings and 0 otherwise.
struct Cross {
  int position = 1;
  CrossingKind kind = CrossingKind::Virtual;
  int sign = 0;
  friend bool operator==(const Cross&, const Cross&) = default;
};

using MorseEvent = std::variant<Cup, Cap, Cross>;

enum class Category : std::uint8_t {
  Virtual,
  Flat,
  Welded,
  Unrestricted,
  FlatUnrestricted,
  Classical
};

std::string_view to_string(Category c);
Category parse_category(std::string_view text);
bool allows(Category c, CrossingKind k);
Category category_for(GroupKind kind);
GroupKind kind_for(Category c);

struct MorseDiagram {
  Category category = Category::Virtual;
  std::vector<MorseEvent> events;
  friend bool operator==(const MorseDiagram&, const MorseDiagram&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::optional<std::size_t> event;  // first offending event, if any
  std::string message;
};

ValidationReport validate(const MorseDiagram& d);

enum class Orientation : std::uint8_t { Down, Up };

// Strand orientation at every level; level k sits above event k, so level 0
// and the last level are empty for a closed diagram.
struct Layout {
  std::vector<std::vector<Orientation>> orient;

  int width(std::size_t level) const { return static_cast<int>(orient[level].size()); }
  Orientation at(std::size_t level, int slot) const { return orient[level][slot - 1]; }
};

// Throws Error on an invalid diagram.
Layout layout(const MorseDiagram& d);

// Crossing geometry: strand A runs from top slot p to bottom slot p+1, strand
// B from top slot p+1 to bottom slot p.
struct CrossingGeometry {
  Orientation a;
  Orientation b;
  bool a_over;  // meaningful for classical crossings only
};

CrossingGeometry crossing_geometry(const MorseDiagram& d, const Layout& l,
                                   std::size_t event);

// Sign of the cross product of the travel directions of A and B (x right,
// y up); a classical crossing has sign +1 exactly when the over strand's
// direction turns counterclockwise onto the under strand's.
int orientation_sign(Orientation a, Orientation b);

MorseDiagram closure(const BraidWord& w);

struct ComponentMap {
  int count = 0;
  std::vector<std::vector<int>> label;  // label[level][slot-1], 0-based ids
};

ComponentMap components(const MorseDiagram& d);

// One pass of a component through a crossing.
struct Passage {
  std::size_t event;
  bool a_strand;
  Orientation orientation;
};

struct Traversal {
  ComponentMap map;
  std::vector<std::vector<Passage>> passages;  // per component, in travel order
};

Traversal traverse(const MorseDiagram& d);

enum class Pass : std::uint8_t { Over, Under, Flat };

struct GaussRecord {
  int label = 1;
  Pass pass = Pass::Over;
  int sign = 1;
  friend bool operator==(const GaussRecord&, const GaussRecord&) = default;
};

struct GaussCode {
  std::vector<std::vector<GaussRecord>> components;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Classical crossings as o/u records, flat crossings as f records; virtual
// crossings are omitted. Labels follow first encounter.
GaussCode gauss_code(const MorseDiagram& d);

// Records like o1+ u2- f3+, components separated by '/', an empty component
// written as '.'.
GaussCode parse_gauss(std::string_view text);
std::string format_gauss(const GaussCode& g);
std::size_t crossing_count(const GaussCode& g);

// Equal up to relabeling, rotation within components and component order.
bool gauss_equivalent(const GaussCode& a, const GaussCode& b);

struct InvariantReport {
  int component_count = 0;
  std::vector<std::vector<int>> lk;       // lk[over][under]
  std::vector<std::vector<int>> vparity;  // virtual crossings between components, mod 2
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport invariants(const MorseDiagram& d);

// Equal after some renumbering of components.
bool same_up_to_relabeling(const InvariantReport& a, const InvariantReport& b);

std::string render_ascii(const MorseDiagram& d);
std::string render_svg(const MorseDiagram& d);

std::string format_event(const MorseEvent& e);
std::string format_diagram(const MorseDiagram& d);
MorseDiagram parse_diagram(std::string_view text);

}  // namespace vbraid
