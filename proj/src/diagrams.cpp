#include "vbraid/diagrams.hpp"

#include <sstream>

namespace vbraid {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Virtual:
      return "virtual";
    case Category::Flat:
      return "flat";
    case Category::Welded:
      return "welded";
    case Category::Unrestricted:
      return "unrestricted";
    case Category::FlatUnrestricted:
      return "flat-unrestricted";
    case Category::Classical:
      return "classical";
  }
  return "?";
}

Category parse_category(std::string_view text) {
  for (auto c : {Category::Virtual, Category::Flat, Category::Welded,
                 Category::Unrestricted, Category::FlatUnrestricted,
                 Category::Classical}) {
    if (text == to_string(c)) return c;
  }
  throw ParseError("unknown category '" + std::string(text) + "'");
}

bool allows(Category c, CrossingKind k) {
  switch (c) {
    case Category::Classical:
      return k == CrossingKind::Classical;
    case Category::Flat:
    case Category::FlatUnrestricted:
      return k != CrossingKind::Classical;
    default:
      return k != CrossingKind::Flat;
  }
}

Category category_for(GroupKind kind) {
  switch (kind) {
    case GroupKind::B:
      return Category::Classical;
    case GroupKind::S:
    case GroupKind::VB:
      return Category::Virtual;
    case GroupKind::WB:
      return Category::Welded;
    case GroupKind::UB:
      return Category::Unrestricted;
    case GroupKind::FV:
      return Category::Flat;
    case GroupKind::FU:
      return Category::FlatUnrestricted;
  }
  return Category::Virtual;
}

GroupKind kind_for(Category c) {
  switch (c) {
    case Category::Virtual:
      return GroupKind::VB;
    case Category::Flat:
      return GroupKind::FV;
    case Category::Welded:
      return GroupKind::WB;
    case Category::Unrestricted:
      return GroupKind::UB;
    case Category::FlatUnrestricted:
      return GroupKind::FU;
    case Category::Classical:
      return GroupKind::B;
  }
  return GroupKind::VB;
}

namespace {

struct Violation {
  std::size_t event;
  std::string message;
};

// Builds the layout, or reports the first problem.
std::optional<Violation> build_layout(const MorseDiagram& d, Layout& out) {
  out.orient.assign(1, {});
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    auto cur = out.orient.back();
    const int w = static_cast<int>(cur.size());
    auto bad = [&](std::string msg) {
      return Violation{k, format_event(d.events[k]) + ": " + std::move(msg)};
    };
    if (const auto* cup = std::get_if<Cup>(&d.events[k])) {
      int p = cup->position;
      if (p < 1 || p > w + 1) return bad("position outside width " + std::to_string(w));
      auto left = cup->chirality == Chirality::LeftUp ? Orientation::Up : Orientation::Down;
      auto right = left == Orientation::Up ? Orientation::Down : Orientation::Up;
      cur.insert(cur.begin() + (p - 1), {left, right});
    } else if (const auto* cap = std::get_if<Cap>(&d.events[k])) {
      int p = cap->position;
      if (p < 1 || p + 1 > w) return bad("position outside width " + std::to_string(w));
      if (cur[p - 1] == cur[p]) return bad("cap joins two strands of the same orientation");
      cur.erase(cur.begin() + (p - 1), cur.begin() + (p + 1));
    } else {
      const auto& x = std::get<Cross>(d.events[k]);
      int p = x.position;
      if (p < 1 || p + 1 > w) return bad("position outside width " + std::to_string(w));
      if (!allows(d.category, x.kind)) {
        return bad("crossing kind not allowed in category " +
                   std::string(to_string(d.category)));
      }
      if (x.kind == CrossingKind::Classical && x.sign != 1 && x.sign != -1) {
        return bad("classical crossing needs sign +1 or -1");
      }
      if (x.kind != CrossingKind::Classical && x.sign != 0) {
        return bad("only classical crossings carry a sign");
      }
      std::swap(cur[p - 1], cur[p]);
    }
    out.orient.push_back(std::move(cur));
  }
  if (!out.orient.back().empty()) {
    return Violation{d.events.empty() ? 0 : d.events.size() - 1,
                     "final width " + std::to_string(out.orient.back().size()) + " != 0"};
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const MorseDiagram& d) {
  Layout l;
  if (auto v = build_layout(d, l)) return {false, v->event, v->message};
  return {};
}

Layout layout(const MorseDiagram& d) {
  Layout l;
  if (auto v = build_layout(d, l)) {
    throw Error("invalid diagram at event " + std::to_string(v->event) + ": " + v->message);
  }
  return l;
}

int orientation_sign(Orientation a, Orientation b) {
  // A travels along (1,-1) going down; B along (-1,-1).
  const int ax = a == Orientation::Down ? 1 : -1, ay = -ax;
  const int bx = b == Orientation::Down ? -1 : 1, by = bx;
  const int z = ax * by - ay * bx;
  return z > 0 ? 1 : -1;
}

CrossingGeometry crossing_geometry(const MorseDiagram& d, const Layout& l,
                                   std::size_t event) {
  const auto& x = std::get<Cross>(d.events[event]);
  CrossingGeometry g{l.at(event, x.position), l.at(event, x.position + 1), false};
  if (x.kind == CrossingKind::Classical) g.a_over = x.sign == orientation_sign(g.a, g.b);
  return g;
}

MorseDiagram closure(const BraidWord& w) {
  MorseDiagram d{category_for(w.kind()), {}};
  const int n = w.strands();
  for (int i = 1; i <= n; ++i) d.events.push_back(Cup{i, Chirality::RightUp});
  for (auto g : w.letters()) {
    switch (g.family) {
      case Family::Sigma:
        d.events.push_back(Cross{g.index, CrossingKind::Classical, 1});
        break;
      case Family::SigmaInv:
        d.events.push_back(Cross{g.index, CrossingKind::Classical, -1});
        break;
      case Family::Virtual:
        d.events.push_back(Cross{g.index, CrossingKind::Virtual, 0});
        break;
      case Family::Flat:
        d.events.push_back(Cross{g.index, CrossingKind::Flat, 0});
        break;
    }
  }
  for (int i = n; i >= 1; --i) d.events.push_back(Cap{i});
  return d;
}

namespace {

struct Node {
  std::size_t level;
  int slot;
};

// One step along the orientation; fills `through` when a crossing is passed.
Node advance(const MorseDiagram& d, const Layout& l, Node at,
             std::optional<Passage>& through) {
  through.reset();
  const int s = at.slot;
  if (l.at(at.level, s) == Orientation::Down) {
    const auto& e = d.events[at.level];
    if (const auto* cup = std::get_if<Cup>(&e)) {
      return {at.level + 1, s < cup->position ? s : s + 2};
    }
    if (const auto* cap = std::get_if<Cap>(&e)) {
      int p = cap->position;
      if (s == p) return {at.level, p + 1};
      if (s == p + 1) return {at.level, p};
      return {at.level + 1, s < p ? s : s - 2};
    }
    int p = std::get<Cross>(e).position;
    if (s == p) {
      through = Passage{at.level, true, Orientation::Down};
      return {at.level + 1, p + 1};
    }
    if (s == p + 1) {
      through = Passage{at.level, false, Orientation::Down};
      return {at.level + 1, p};
    }
    return {at.level + 1, s};
  }
  const std::size_t ev = at.level - 1;
  const auto& e = d.events[ev];
  if (const auto* cup = std::get_if<Cup>(&e)) {
    int p = cup->position;
    if (s == p) return {at.level, p + 1};
    if (s == p + 1) return {at.level, p};
    return {ev, s < p ? s : s - 2};
  }
  if (const auto* cap = std::get_if<Cap>(&e)) {
    return {ev, s < cap->position ? s : s + 2};
  }
  int p = std::get<Cross>(e).position;
  if (s == p) {
    through = Passage{ev, false, Orientation::Up};
    return {ev, p + 1};
  }
  if (s == p + 1) {
    through = Passage{ev, true, Orientation::Up};
    return {ev, p};
  }
  return {ev, s};
}

}  // namespace

Traversal traverse(const MorseDiagram& d) {
  const Layout l = layout(d);
  Traversal t;
  t.map.label.resize(l.orient.size());
  for (std::size_t k = 0; k < l.orient.size(); ++k) {
    t.map.label[k].assign(l.orient[k].size(), -1);
  }
  for (std::size_t k = 0; k < l.orient.size(); ++k) {
    for (int s = 1; s <= l.width(k); ++s) {
      if (t.map.label[k][s - 1] >= 0) continue;
      const int id = t.map.count++;
      t.passages.emplace_back();
      Node at{k, s};
      std::optional<Passage> through;
      do {
        t.map.label[at.level][at.slot - 1] = id;
        at = advance(d, l, at, through);
        if (through) t.passages[id].push_back(*through);
      } while (at.level != k || at.slot != s);
    }
  }
  return t;
}

ComponentMap components(const MorseDiagram& d) { return traverse(d).map; }

InvariantReport invariants(const MorseDiagram& d) {
  const Layout l = layout(d);
  const ComponentMap m = traverse(d).map;
  InvariantReport r;
  r.component_count = m.count;
  r.lk.assign(m.count, std::vector<int>(m.count, 0));
  r.vparity.assign(m.count, std::vector<int>(m.count, 0));
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const auto* x = std::get_if<Cross>(&d.events[k]);
    if (!x) continue;
    const int a = m.label[k][x->position - 1];
    const int b = m.label[k][x->position];
    if (a == b) continue;
    if (x->kind == CrossingKind::Classical) {
      auto g = crossing_geometry(d, l, k);
      if (g.a_over) {
        r.lk[a][b] += x->sign;
      } else {
        r.lk[b][a] += x->sign;
      }
    } else if (x->kind == CrossingKind::Virtual) {
      r.vparity[a][b] ^= 1;
      r.vparity[b][a] ^= 1;
    }
  }
  return r;
}

namespace {

bool relabel(const InvariantReport& a, const InvariantReport& b, std::vector<int>& pi,
             std::vector<bool>& used, int i) {
  const int n = a.component_count;
  if (i == n) return true;
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    pi[i] = j;
    bool ok = true;
    for (int k = 0; k <= i && ok; ++k) {
      ok = a.lk[i][k] == b.lk[j][pi[k]] && a.lk[k][i] == b.lk[pi[k]][j] &&
           a.vparity[i][k] == b.vparity[j][pi[k]];
    }
    if (!ok) continue;
    used[j] = true;
    if (relabel(a, b, pi, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool same_up_to_relabeling(const InvariantReport& a, const InvariantReport& b) {
  if (a.component_count != b.component_count) return false;
  std::vector<int> pi(a.component_count, -1);
  std::vector<bool> used(a.component_count, false);
  return relabel(a, b, pi, used, 0);
}

std::string format_event(const MorseEvent& e) {
  if (const auto* cup = std::get_if<Cup>(&e)) {
    return std::string("cup ") + (cup->chirality == Chirality::LeftUp ? "L " : "R ") +
           std::to_string(cup->position);
  }
  if (const auto* cap = std::get_if<Cap>(&e)) return "cap " + std::to_string(cap->position);
  const auto& x = std::get<Cross>(e);
  std::string head;
  switch (x.kind) {
    case CrossingKind::Classical:
      head = x.sign > 0 ? "x+" : "x-";
      break;
    case CrossingKind::Virtual:
      head = "v";
      break;
    case CrossingKind::Flat:
      head = "f";
      break;
  }
  return head + " " + std::to_string(x.position);
}

std::string format_diagram(const MorseDiagram& d) {
  std::string out = "category " + std::string(to_string(d.category)) + "\n";
  for (const auto& e : d.events) out += format_event(e) + "\n";
  return out;
}

MorseDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Category> category;
  std::vector<MorseEvent> events;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) {
      return ParseError("diagram line " + std::to_string(lineno) + ": " + msg);
    };
    auto number = [&](const std::string& t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        throw fail("bad position '" + t + "'");
      }
      if (used != t.size() || v < 1) throw fail("bad position '" + t + "'");
      return v;
    };
    const std::string& head = tok[0];
    if (head == "category") {
      if (tok.size() != 2) throw fail("expected 'category <name>'");
      if (category) throw fail("duplicate category header");
      category = parse_category(tok[1]);
      continue;
    }
    if (!category) throw fail("missing 'category' header");
    if (head == "cup") {
      if (tok.size() != 3 || (tok[1] != "L" && tok[1] != "R")) {
        throw fail("expected 'cup L|R <p>'");
      }
      events.push_back(
          Cup{number(tok[2]), tok[1] == "L" ? Chirality::LeftUp : Chirality::RightUp});
      continue;
    }
    if (tok.size() != 2) throw fail("expected '<event> <p>'");
    const int p = number(tok[1]);
    if (head == "cap") {
      events.push_back(Cap{p});
    } else if (head == "x+") {
      events.push_back(Cross{p, CrossingKind::Classical, 1});
    } else if (head == "x-") {
      events.push_back(Cross{p, CrossingKind::Classical, -1});
    } else if (head == "v") {
      events.push_back(Cross{p, CrossingKind::Virtual, 0});
    } else if (head == "f") {
      events.push_back(Cross{p, CrossingKind::Flat, 0});
    } else {
      throw fail("unknown event '" + head + "'");
    }
  }
  if (!category) throw ParseError("diagram: missing 'category' header");
  return MorseDiagram{*category, std::move(events)};
}

}  // namespace vbraid
