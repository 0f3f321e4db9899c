#include <algorithm>
#include <map>

#include "vbraid/diagrams.hpp"

namespace vbraid {

GaussCode gauss_code(const MorseDiagram& d) {
  const Layout l = layout(d);
  const Traversal t = traverse(d);
  GaussCode g;
  std::map<std::size_t, int> labels;  // event -> label
  for (const auto& comp : t.passages) {
    auto& out = g.components.emplace_back();
    for (const auto& p : comp) {
      const auto& x = std::get<Cross>(d.events[p.event]);
      if (x.kind == CrossingKind::Virtual) continue;
      auto it = labels.emplace(p.event, static_cast<int>(labels.size()) + 1).first;
      const auto geo = crossing_geometry(d, l, p.event);
      GaussRecord r{it->second, Pass::Flat, x.sign};
      if (x.kind == CrossingKind::Classical) {
        r.pass = p.a_strand == geo.a_over ? Pass::Over : Pass::Under;
      } else {
        // A flat crossing has no over strand; record which side the other
        // strand comes from instead.
        int s = orientation_sign(geo.a, geo.b);
        r.sign = p.a_strand ? s : -s;
      }
      out.push_back(r);
    }
  }
  return g;
}

std::size_t crossing_count(const GaussCode& g) {
  std::size_t n = 0;
  for (const auto& c : g.components) n += c.size();
  return n / 2;
}

std::string format_gauss(const GaussCode& g) {
  std::string out;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (c) out += '/';
    if (g.components[c].empty()) out += '.';
    for (const auto& r : g.components[c]) {
      out += r.pass == Pass::Over ? 'o' : r.pass == Pass::Under ? 'u' : 'f';
      out += std::to_string(r.label);
      out += r.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

GaussCode parse_gauss(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += ch;
  }
  GaussCode g;
  if (s.empty()) return g;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    return ParseError("gauss code at offset " + std::to_string(i) + ": " + msg);
  };
  g.components.emplace_back();
  bool dot = false;
  while (i < s.size()) {
    char ch = s[i];
    if (ch == '/') {
      g.components.emplace_back();
      dot = false;
      ++i;
      continue;
    }
    if (ch == '.') {
      if (!g.components.back().empty() || dot) throw fail("'.' must stand alone");
      dot = true;
      ++i;
      continue;
    }
    if (dot) throw fail("'.' must stand alone");
    GaussRecord r;
    if (ch == 'o') {
      r.pass = Pass::Over;
    } else if (ch == 'u') {
      r.pass = Pass::Under;
    } else if (ch == 'f') {
      r.pass = Pass::Flat;
    } else {
      throw fail(std::string("expected o, u or f, found '") + ch + "'");
    }
    std::size_t j = ++i;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
    if (j == i || j - i > 9) throw fail("expected a crossing label");
    r.label = std::stoi(s.substr(i, j - i));
    if (r.label < 1) throw fail("labels start at 1");
    i = j;
    if (i >= s.size() || (s[i] != '+' && s[i] != '-')) throw fail("expected '+' or '-'");
    r.sign = s[i] == '+' ? 1 : -1;
    ++i;
    g.components.back().push_back(r);
  }
  // Pairing checks.
  std::map<int, std::vector<GaussRecord>> seen;
  bool any_flat = false, any_classical = false;
  for (const auto& c : g.components) {
    for (const auto& r : c) {
      seen[r.label].push_back(r);
      (r.pass == Pass::Flat ? any_flat : any_classical) = true;
    }
  }
  if (any_flat && any_classical) throw ParseError("gauss code mixes flat and classical records");
  for (const auto& [label, recs] : seen) {
    const std::string name = "crossing " + std::to_string(label);
    if (recs.size() != 2) {
      throw ParseError(name + " appears " + std::to_string(recs.size()) + " times");
    }
    if (recs[0].pass == Pass::Flat) {
      if (recs[0].sign == recs[1].sign) throw ParseError(name + ": flat records need opposite signs");
    } else {
      if (recs[0].pass == recs[1].pass) throw ParseError(name + ": needs one o and one u");
      if (recs[0].sign != recs[1].sign) throw ParseError(name + ": sign mismatch");
    }
  }
  return g;
}

namespace {

struct Matcher {
  const GaussCode& a;
  const GaussCode& b;
  std::vector<bool> used;
  std::map<int, int> fwd, back;

  bool bind(int x, int y) {
    auto f = fwd.find(x);
    auto r = back.find(y);
    if (f != fwd.end() || r != back.end()) {
      return f != fwd.end() && r != back.end() && f->second == y && r->second == x;
    }
    fwd[x] = y;
    back[y] = x;
    return true;
  }

  bool run(std::size_t ci) {
    if (ci == a.components.size()) return true;
    const auto& ca = a.components[ci];
    const std::size_t len = ca.size();
    for (std::size_t j = 0; j < b.components.size(); ++j) {
      if (used[j] || b.components[j].size() != len) continue;
      const auto& cb = b.components[j];
      for (std::size_t rot = 0; rot < std::max<std::size_t>(len, 1); ++rot) {
        auto saved_f = fwd;
        auto saved_b = back;
        bool ok = true;
        for (std::size_t k = 0; k < len && ok; ++k) {
          const auto& x = ca[k];
          const auto& y = cb[(k + rot) % len];
          ok = x.pass == y.pass && x.sign == y.sign && bind(x.label, y.label);
        }
        if (ok) {
          used[j] = true;
          if (run(ci + 1)) return true;
          used[j] = false;
        }
        fwd = std::move(saved_f);
        back = std::move(saved_b);
      }
    }
    return false;
  }
};

}  // namespace

bool gauss_equivalent(const GaussCode& a, const GaussCode& b) {
  if (a.components.size() != b.components.size()) return false;
  if (crossing_count(a) != crossing_count(b)) return false;
  Matcher m{a, b, std::vector<bool>(b.components.size(), false), {}, {}};
  return m.run(0);
}

}  // namespace vbraid
