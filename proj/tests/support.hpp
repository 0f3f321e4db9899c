#pragma once
// Helpers shared by the unit tests and the acceptance runner. The oracles here
// deliberately avoid the library's own algorithms.
#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vbraid/diagrams.hpp"
#include "vbraid/words.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(VBRAID_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline vbraid::MorseDiagram load_diagram(const std::string& name) {
  return vbraid::parse_diagram(read_file(fixture_path(name)));
}

// final_pos[x-1] = position where the strand entering at x leaves, found by
// following each strand through the letters one at a time.
inline std::vector<int> strand_endpoints(const vbraid::BraidWord& w) {
  std::vector<int> final_pos;
  for (int x = 1; x <= w.strands(); ++x) {
    int pos = x;
    for (const auto& g : w.letters()) {
      if (pos == g.index) pos = g.index + 1;
      else if (pos == g.index + 1) pos = g.index;
    }
    final_pos.push_back(pos);
  }
  return final_pos;
}

inline int count_cycles(const std::vector<int>& images) {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images[x] - 1)) seen[x] = true;
  }
  return cycles;
}

// Words as plain token strings, built straight from the written formulas.
inline std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out.empty() ? "e" : out;
}

inline std::string v(int i) { return "v" + std::to_string(i); }

// v_i v_{i-1} .. v_{j+1} v_j v_{j+1} .. v_i  versus  v_j .. v_i .. v_j
inline std::pair<std::string, std::string> palindrome_text(int i, int j) {
  std::vector<std::string> l, r;
  for (int k = i; k > j; --k) l.push_back(v(k));
  for (int k = j; k <= i; ++k) l.push_back(v(k));
  for (int k = j; k < i; ++k) r.push_back(v(k));
  for (int k = i; k >= j; --k) r.push_back(v(k));
  return {join(l), join(r)};
}

// Blocks (v_{k+3} v_{k+2} v_{k+1} v_k) for k = 1..i-1, against descending
// starts 4,3,2,1 each running up by i-2.
inline std::pair<std::string, std::string> staircase_text(int i) {
  std::vector<std::string> l, r;
  for (int k = 1; k <= i - 1; ++k)
    for (int t = 3; t >= 0; --t) l.push_back(v(k + t));
  for (int start = 4; start >= 1; --start)
    for (int k = start; k <= start + i - 2; ++k) r.push_back(v(k));
  return {join(l), join(r)};
}

// Canonical text of a Gauss code: minimum over component orders and
// rotations of the first-encounter relabeled rendering. Brute force, so
// only for small codes.
inline std::string canonical_gauss(const vbraid::GaussCode& g) {
  using vbraid::GaussRecord;
  std::vector<std::size_t> order(g.components.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::string best;
  bool have = false;
  auto render = [&](const std::vector<std::vector<GaussRecord>>& comps) {
    std::map<int, int> relabel;
    std::string s;
    for (const auto& c : comps) {
      s += '/';
      for (const auto& r : c) {
        auto it = relabel.emplace(r.label, static_cast<int>(relabel.size()) + 1).first;
        s += r.pass == vbraid::Pass::Over ? 'o' : r.pass == vbraid::Pass::Under ? 'u' : 'f';
        s += std::to_string(it->second);
        s += r.sign > 0 ? '+' : '-';
      }
    }
    return s;
  };
  std::sort(order.begin(), order.end());
  do {
    std::vector<std::size_t> rot(order.size(), 0);
    for (;;) {
      std::vector<std::vector<GaussRecord>> comps;
      for (std::size_t k = 0; k < order.size(); ++k) {
        auto c = g.components[order[k]];
        std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rot[k]), c.end());
        comps.push_back(std::move(c));
      }
      auto s = render(comps);
      if (!have || s < best) best = s, have = true;
      std::size_t k = 0;
      for (; k < rot.size(); ++k) {
        const auto len = g.components[order[k]].size();
        if (++rot[k] < std::max<std::size_t>(len, 1)) break;
        rot[k] = 0;
      }
      if (k == rot.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Gauss code rebuilt from a traversal keeping only the crossings selected by
// `keep` (an event predicate). Signs and over/under come from the geometry.
template <class Keep>
vbraid::GaussCode restricted_gauss(const vbraid::MorseDiagram& d, Keep keep) {
  using namespace vbraid;
  const Layout l = layout(d);
  const Traversal t = traverse(d);
  GaussCode out;
  for (const auto& comp : t.passages) {
    std::vector<GaussRecord> recs;
    for (const auto& p : comp) {
      const auto& x = std::get<Cross>(d.events[p.event]);
      if (x.kind == CrossingKind::Virtual || !keep(p.event)) continue;
      const auto geo = crossing_geometry(d, l, p.event);
      GaussRecord r;
      r.label = static_cast<int>(p.event) + 1;
      if (x.kind == CrossingKind::Flat) {
        const int s = orientation_sign(geo.a, geo.b);
        r.pass = Pass::Flat;
        r.sign = p.a_strand ? s : -s;
      } else {
        r.pass = p.a_strand == geo.a_over ? Pass::Over : Pass::Under;
        r.sign = x.sign;
      }
      recs.push_back(r);
    }
    out.components.push_back(std::move(recs));
  }
  return out;
}

// Random closed Morse diagram of the category: cups, caps and crossings at
// random, then caps until empty. Widths stay at most max_width.
inline vbraid::MorseDiagram random_diagram(std::mt19937& rng, vbraid::Category cat, int steps,
                                           int max_width) {
  using namespace vbraid;
  MorseDiagram d{cat, {}};
  std::vector<Orientation> o;
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto capable = [&] {
    std::vector<int> at;
    for (std::size_t p = 1; p < o.size(); ++p)
      if (o[p - 1] != o[p]) at.push_back(static_cast<int>(p));
    return at;
  };
  auto cap = [&] {
    auto at = capable();
    const int p = at[pick(at.size())];
    d.events.push_back(Cap{p});
    o.erase(o.begin() + p - 1, o.begin() + p + 1);
  };
  const bool flat_cat = cat == Category::Flat || cat == Category::FlatUnrestricted;
  for (int s = 0; s < steps; ++s) {
    const int w = static_cast<int>(o.size());
    const auto r = pick(3);
    if (w < 2 || (r == 0 && w + 2 <= max_width)) {
      const int p = 1 + static_cast<int>(pick(static_cast<std::size_t>(w) + 1));
      const auto ch = pick(2) ? Chirality::LeftUp : Chirality::RightUp;
      d.events.push_back(Cup{p, ch});
      const auto left = ch == Chirality::LeftUp ? Orientation::Up : Orientation::Down;
      const auto right = left == Orientation::Up ? Orientation::Down : Orientation::Up;
      o.insert(o.begin() + p - 1, {left, right});
    } else if (r == 1) {
      cap();
    } else {
      const int p = 1 + static_cast<int>(pick(static_cast<std::size_t>(w) - 1));
      const bool real = cat == Category::Classical || pick(3) != 0;
      Cross x{p, CrossingKind::Virtual, 0};
      if (real && flat_cat) x.kind = CrossingKind::Flat;
      if (real && !flat_cat) x = Cross{p, CrossingKind::Classical, pick(2) ? 1 : -1};
      d.events.push_back(x);
      std::swap(o[p - 1], o[p]);
    }
  }
  while (!o.empty()) cap();
  return d;
}

inline std::size_t count_crossings(const vbraid::MorseDiagram& d, vbraid::CrossingKind k) {
  std::size_t c = 0;
  for (const auto& e : d.events)
    if (const auto* x = std::get_if<vbraid::Cross>(&e); x && x->kind == k) ++c;
  return c;
}

// Tag balance for the SVG output: every opened element is closed in order.
inline bool xml_balanced(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t at = 0;
  while ((at = text.find('<', at)) != std::string::npos) {
    const auto end = text.find('>', at);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(at + 1, end - at - 1);
    at = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    if (tag[0] == '/') {
      const auto name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }
    stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
  }
  return stack.empty();
}

}  // namespace support
