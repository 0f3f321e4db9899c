#include <algorithm>
#include <sstream>

#include "vbraid/diagrams.hpp"

namespace vbraid {

namespace {

int max_width(const Layout& l) {
  int w = 0;
  for (std::size_t k = 0; k < l.orient.size(); ++k) w = std::max(w, l.width(k));
  return w;
}

char strand_glyph(Orientation o) { return o == Orientation::Down ? '|' : ':'; }

}  // namespace

// One text row per event. '|' is a downward strand, ':' an upward one; cups
// are drawn ".-.", caps "'-'"; crossings sit between their two slots: O
// virtual, X flat, '\' when the strand from the upper left is over, '/' when
// the one from the upper right is.
std::string render_ascii(const MorseDiagram& d) {
  const Layout l = layout(d);
  const int w = max_width(l);
  const std::size_t cols = w > 0 ? static_cast<std::size_t>(2 * w - 1) : 0;
  std::ostringstream os;
  os << "category " << to_string(d.category) << '\n';
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    std::string row(cols, ' ');
    auto col = [](int slot) { return static_cast<std::size_t>(2 * (slot - 1)); };
    const auto& e = d.events[k];
    if (const auto* cup = std::get_if<Cup>(&e)) {
      for (int s = 1; s <= l.width(k + 1); ++s) row[col(s)] = strand_glyph(l.at(k + 1, s));
      row[col(cup->position)] = '.';
      row[col(cup->position) + 1] = '-';
      row[col(cup->position + 1)] = '.';
    } else if (const auto* cap = std::get_if<Cap>(&e)) {
      for (int s = 1; s <= l.width(k); ++s) row[col(s)] = strand_glyph(l.at(k, s));
      row[col(cap->position)] = '\'';
      row[col(cap->position) + 1] = '-';
      row[col(cap->position + 1)] = '\'';
    } else {
      const auto& x = std::get<Cross>(e);
      for (int s = 1; s <= l.width(k); ++s) row[col(s)] = strand_glyph(l.at(k, s));
      row[col(x.position)] = ' ';
      row[col(x.position + 1)] = ' ';
      char glyph = 'O';
      if (x.kind == CrossingKind::Flat) glyph = 'X';
      if (x.kind == CrossingKind::Classical) {
        glyph = crossing_geometry(d, l, k).a_over ? '\\' : '/';
      }
      row[col(x.position) + 1] = glyph;
    }
    os << row << "   " << format_event(e) << '\n';
  }
  return os.str();
}

namespace {

constexpr int kStep = 40;
constexpr int kMargin = 20;

int sx(int slot) { return kMargin + kStep * slot; }
int sy(std::size_t level) { return kMargin + kStep * static_cast<int>(level); }

const char* stroke(Orientation o) { return o == Orientation::Down ? "#1f3b73" : "#b0413e"; }

void line(std::ostream& os, int x1, int y1, int x2, int y2, Orientation o) {
  os << "  <path d=\"M " << x1 << ' ' << y1 << " L " << x2 << ' ' << y2
     << "\" stroke=\"" << stroke(o) << "\"/>\n";
}

}  // namespace

std::string render_svg(const MorseDiagram& d) {
  const Layout l = layout(d);
  const int w = max_width(l);
  const int width = 2 * kMargin + kStep * (w + 1);
  const int height = 2 * kMargin + kStep * static_cast<int>(d.events.size());
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<g fill=\"none\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const int y0 = sy(k), y1 = sy(k + 1);
    const auto& e = d.events[k];
    int skip = 0, shift = 0;
    if (const auto* cup = std::get_if<Cup>(&e)) {
      const int p = cup->position;
      const Orientation o = l.at(k + 1, p);
      os << "  <path d=\"M " << sx(p) << ' ' << y1 << " C " << sx(p) << ' ' << y0 << ", "
         << sx(p + 1) << ' ' << y0 << ", " << sx(p + 1) << ' ' << y1 << "\" stroke=\""
         << stroke(o) << "\"/>\n";
      for (int s = 1; s <= l.width(k); ++s) {
        const int t = s < p ? s : s + 2;
        line(os, sx(s), y0, sx(t), y1, l.at(k, s));
      }
      continue;
    }
    if (const auto* cap = std::get_if<Cap>(&e)) {
      const int p = cap->position;
      os << "  <path d=\"M " << sx(p) << ' ' << y0 << " C " << sx(p) << ' ' << y1 << ", "
         << sx(p + 1) << ' ' << y1 << ", " << sx(p + 1) << ' ' << y0 << "\" stroke=\""
         << stroke(l.at(k, p)) << "\"/>\n";
      skip = p;
      shift = 2;
    } else {
      const auto& x = std::get<Cross>(e);
      const int p = x.position;
      const auto g = crossing_geometry(d, l, k);
      const int ax0 = sx(p), ax1 = sx(p + 1);
      const int mx = (ax0 + ax1) / 2, my = (y0 + y1) / 2;
      // Strand A goes top-left to bottom-right, B top-right to bottom-left.
      bool a_broken = x.kind == CrossingKind::Classical && !g.a_over;
      bool b_broken = x.kind == CrossingKind::Classical && g.a_over;
      auto draw = [&](int xa, int xb, Orientation o, bool broken) {
        if (!broken) {
          line(os, xa, y0, xb, y1, o);
          return;
        }
        const int gap = kStep / 6;
        const int dir = xb > xa ? 1 : -1;
        line(os, xa, y0, mx - dir * gap, my - gap, o);
        line(os, mx + dir * gap, my + gap, xb, y1, o);
      };
      draw(ax0, ax1, g.a, a_broken);
      draw(ax1, ax0, g.b, b_broken);
      if (x.kind == CrossingKind::Virtual) {
        os << "  <circle cx=\"" << mx << "\" cy=\"" << my << "\" r=\"" << kStep / 5
           << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
      }
      skip = p;
    }
    for (int s = 1; s <= l.width(k); ++s) {
      if (s == skip || s == skip + 1) continue;
      const int t = s < skip || skip == 0 ? s : s - shift;
      line(os, sx(s), y0, sx(t), y1, l.at(k, s));
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace vbraid
