#include "vbraid/braiding.hpp"

#include <algorithm>

namespace vbraid {

RotatedDiagram rotate_crossings_tracked(const MorseDiagram& d) {
  const Layout l = layout(d);
  RotatedDiagram out{MorseDiagram{d.category, {}}, {}};
  auto emit = [&](MorseEvent e, std::optional<std::size_t> from) {
    out.diagram.events.push_back(e);
    out.origin.push_back(from);
  };
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const auto* x = std::get_if<Cross>(&d.events[k]);
    if (!x) {
      emit(d.events[k], k);
      continue;
    }
    const int p = x->position;
    const auto a = l.at(k, p), b = l.at(k, p + 1);
    Cross c = *x;
    if (a == Orientation::Down && b == Orientation::Down) {
      emit(c, k);
    } else if (a == Orientation::Down) {
      // Quarter turn: B becomes the strand from the upper left.
      emit(Cup{p, Chirality::LeftUp}, std::nullopt);
      c.position = p + 1;
      emit(c, k);
      emit(Cap{p + 2}, std::nullopt);
    } else if (b == Orientation::Down) {
      // Quarter turn the other way: A becomes the strand from the upper right.
      emit(Cup{p + 2, Chirality::RightUp}, std::nullopt);
      c.position = p + 1;
      emit(c, k);
      emit(Cap{p}, std::nullopt);
    } else {
      // Half turn; both strands keep their roles.
      emit(Cup{p, Chirality::LeftUp}, std::nullopt);
      emit(Cup{p + 1, Chirality::LeftUp}, std::nullopt);
      c.position = p + 2;
      emit(c, k);
      emit(Cap{p + 3}, std::nullopt);
      emit(Cap{p + 2}, std::nullopt);
    }
  }
  return out;
}

MorseDiagram rotate_crossings(const MorseDiagram& d) {
  return rotate_crossings_tracked(d).diagram;
}

namespace {

struct UpArc {
  std::size_t cup;  // event where the arc turns down (top)
  std::size_t cap;  // event where it starts (bottom)
  int cut_slot;
  std::size_t cut_level;
  std::vector<int> slots;  // slot at levels cap, cap-1, ..., cup+1
  int height = 0;

  int slot_at(std::size_t level) const { return slots[cap - level]; }
};

int down_index(const Layout& l, std::size_t level, int slot) {
  int k = 0;
  for (int s = 1; s <= slot; ++s) k += l.at(level, s) == Orientation::Down ? 1 : 0;
  return k;
}

int down_count(const Layout& l, std::size_t level) {
  return down_index(l, level, l.width(level));
}

std::vector<UpArc> find_up_arcs(const MorseDiagram& d, const Layout& l) {
  std::vector<UpArc> arcs;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const auto* cap = std::get_if<Cap>(&d.events[k]);
    if (!cap) continue;
    int slot = l.at(k, cap->position) == Orientation::Up ? cap->position : cap->position + 1;
    // Walk upward; levels run from k down to the level just below the cup.
    std::vector<int> slots;
    std::size_t level = k;
    for (;;) {
      slots.push_back(slot);
      if (level == 0) throw Error("up-arc runs off the top of the diagram");
      const auto& e = d.events[level - 1];
      if (const auto* cup = std::get_if<Cup>(&e)) {
        if (slot == cup->position || slot == cup->position + 1) break;
        slot = slot < cup->position ? slot : slot - 2;
      } else if (const auto* above = std::get_if<Cap>(&e)) {
        slot = slot < above->position ? slot : slot + 2;
      } else {
        int p = std::get<Cross>(e).position;
        if (slot == p || slot == p + 1) {
          throw Error("residual non-free up-arc through crossing at event " +
                      std::to_string(level - 1));
        }
      }
      --level;
    }
    UpArc arc{level - 1, k, 0, 0, std::move(slots)};
    // Levels occupied: arc.cup+1 .. arc.cap; slots[] is stored bottom first.
    const std::size_t first = arc.cup + 1;
    const std::size_t count = arc.cap - arc.cup;
    arc.cut_level = first + count / 2;
    arc.cut_slot = arc.slot_at(arc.cut_level);
    arcs.push_back(std::move(arc));
  }
  std::stable_sort(arcs.begin(), arcs.end(), [](const UpArc& x, const UpArc& y) {
    if (x.cut_slot != y.cut_slot) return x.cut_slot > y.cut_slot;
    return x.cut_level < y.cut_level;
  });
  return arcs;
}

// Stacking order for classical routing. Each pulled arc lives in its own
// layer; an arc lying to the right of another on a shared level goes lower,
// so no pulled arc has to pass a higher arc's endpoint. Non-crossing monotone
// arcs give an acyclic relation here.
void assign_heights(std::vector<UpArc>& arcs) {
  const std::size_t n = arcs.size();
  std::vector<std::vector<std::size_t>> above(n);  // above[k]: arcs that must sit over k
  std::vector<int> pending(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const std::size_t lo = std::max(arcs[j].cup, arcs[k].cup) + 1;
      const std::size_t hi = std::min(arcs[j].cap, arcs[k].cap);
      if (lo > hi) continue;
      const bool k_right = arcs[k].slot_at(lo) > arcs[j].slot_at(lo);
      const std::size_t low = k_right ? k : j, high = k_right ? j : k;
      above[low].push_back(high);
      ++pending[high];
    }
  }
  // Kahn's algorithm, lowest rank first among the ready arcs.
  std::vector<bool> done(n, false);
  for (int h = 0; h < static_cast<int>(n); ++h) {
    std::size_t pick = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!done[r] && pending[r] == 0) {
        pick = r;
        break;
      }
    }
    if (pick == n) throw Error("up-arcs admit no stacking order");
    done[pick] = true;
    arcs[pick].height = h;
    for (auto up : above[pick]) --pending[up];
  }
}

}  // namespace

BraidingResult braid_up_arcs_tracked(const MorseDiagram& d, Routing routing,
                                     const Origins* origin) {
  const Layout l = layout(d);
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const auto* x = std::get_if<Cross>(&d.events[k]);
    if (x && (l.at(k, x->position) == Orientation::Up ||
              l.at(k, x->position + 1) == Orientation::Up)) {
      throw Error("residual non-free up-arc: crossing at event " + std::to_string(k) +
                  " is not downward");
    }
  }
  std::vector<UpArc> arcs = find_up_arcs(d, l);
  assign_heights(arcs);
  std::vector<int> arc_at_cup(d.events.size(), -1), arc_at_cap(d.events.size(), -1);
  for (std::size_t r = 0; r < arcs.size(); ++r) {
    arc_at_cup[arcs[r].cup] = static_cast<int>(r);
    arc_at_cap[arcs[r].cap] = static_cast<int>(r);
  }

  const bool classical = d.category == Category::Classical;
  std::vector<Generator> letters;
  Origins from;
  auto source = [&](std::size_t k) -> std::optional<std::size_t> {
    return origin ? (*origin)[k] : std::optional<std::size_t>(k);
  };
  // Ranks of the pulled columns currently present, left to right.
  std::vector<int> active(arcs.size());
  for (std::size_t r = 0; r < arcs.size(); ++r) active[r] = static_cast<int>(r);
  auto column = [&](int r) {
    return static_cast<int>(std::lower_bound(active.begin(), active.end(), r) - active.begin());
  };
  // Letter i for pulled arc r passing the strand at `other_pos` (the first
  // `downs` positions are diagram strands, the rest columns).
  auto pulled = [&](int i, int r, bool moving_left, int downs, int other_pos) {
    Generator g = virt(i);
    if (classical) {
      bool over = other_pos <= downs ||
                  arcs[r].height > arcs[active[other_pos - downs - 1]].height;
      if (routing == Routing::Under) over = !over;
      // Moving left the pulled strand starts top right; for two downward
      // strands that one is over exactly at a positive crossing.
      g = over == moving_left ? sigma(i) : sigma_inv(i);
    }
    letters.push_back(g);
    from.push_back(std::nullopt);
  };

  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const int downs = down_count(l, k);
    const auto& e = d.events[k];
    if (const auto* cup = std::get_if<Cup>(&e)) {
      const int r = arc_at_cup[k];
      const int leg = l.at(k + 1, cup->position) == Orientation::Down ? cup->position
                                                                        : cup->position + 1;
      const int q = down_index(l, k + 1, leg);
      const int from_pos = downs + column(r) + 1;
      for (int i = from_pos - 1; i >= q; --i) pulled(i, r, true, downs, i);
      active.erase(active.begin() + column(r));
    } else if (const auto* cap = std::get_if<Cap>(&e)) {
      const int r = arc_at_cap[k];
      const int leg = l.at(k, cap->position) == Orientation::Down ? cap->position
                                                                   : cap->position + 1;
      const int q = down_index(l, k, leg);
      active.insert(active.begin() + column(r), r);
      const int to_pos = downs - 1 + column(r) + 1;
      // Positions counted before the move: the strand passed is at i + 1.
      for (int i = q; i < to_pos; ++i) pulled(i, r, false, downs, i + 1);
    } else {
      const auto& x = std::get<Cross>(e);
      const int i = down_index(l, k, x.position);
      switch (x.kind) {
        case CrossingKind::Classical:
          letters.push_back(x.sign > 0 ? sigma(i) : sigma_inv(i));
          break;
        case CrossingKind::Virtual:
          letters.push_back(virt(i));
          break;
        case CrossingKind::Flat:
          letters.push_back(flat(i));
          break;
      }
      from.push_back(source(k));
    }
  }
  return {BraidWord(kind_for(d.category), static_cast<int>(arcs.size()), std::move(letters)),
          std::move(from)};
}

BraidWord braid_up_arcs(const MorseDiagram& d, Routing routing) {
  return braid_up_arcs_tracked(d, routing).word;
}

BraidingResult to_braid_tracked(const MorseDiagram& d, Category category, Routing routing) {
  MorseDiagram as = d;
  as.category = category;
  auto report = validate(as);
  if (!report.valid) {
    throw Error("cannot braid in category " + std::string(to_string(category)) + ": " +
                report.message);
  }
  RotatedDiagram rotated = rotate_crossings_tracked(as);
  return braid_up_arcs_tracked(rotated.diagram, routing, &rotated.origin);
}

BraidWord to_braid(const MorseDiagram& d, Category category, Routing routing) {
  return to_braid_tracked(d, category, routing).word;
}

}  // namespace vbraid
