#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "vbraid/diagrams.hpp"

using namespace vbraid;

namespace {

MorseDiagram closure_of(const char* text, GroupKind kind, int n) {
  return closure(parse_word(text, kind, n));
}

const MorseDiagram kUnknot{Category::Virtual, {Cup{1, Chirality::LeftUp}, Cap{1}}};

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(kUnknot).valid);
  MorseDiagram kink{Category::Virtual,
                    {Cup{1, Chirality::LeftUp}, Cross{1, CrossingKind::Virtual, 0}, Cap{1}}};
  CHECK(validate(kink).valid);

  MorseDiagram open{Category::Virtual, {Cup{1, Chirality::LeftUp}}};
  auto r = validate(open);
  CHECK_FALSE(r.valid);
  CHECK(r.message.find("width") != std::string::npos);

  MorseDiagram same{Category::Virtual, {Cup{1, Chirality::LeftUp}, Cup{3, Chirality::RightUp},
                                        Cap{2}, Cap{1}}};
  // Cap 2 joins two downward legs.
  auto s = validate(same);
  CHECK_FALSE(s.valid);
  REQUIRE(s.event.has_value());
  CHECK(*s.event == 2);

  MorseDiagram flat_in_classical{Category::Classical,
                                 {Cup{1, Chirality::LeftUp}, Cross{1, CrossingKind::Flat, 0}, Cap{1}}};
  CHECK_FALSE(validate(flat_in_classical).valid);
  MorseDiagram unsigned_classical{Category::Virtual,
                                  {Cup{1, Chirality::LeftUp}, Cross{1, CrossingKind::Classical, 0}, Cap{1}}};
  CHECK_FALSE(validate(unsigned_classical).valid);
  MorseDiagram out_of_range{Category::Virtual, {Cup{2, Chirality::LeftUp}, Cap{1}}};
  CHECK_FALSE(validate(out_of_range).valid);
  CHECK_THROWS_AS(layout(open), Error);
}

TEST_CASE("closure examples") {
  auto id2 = closure(BraidWord(GroupKind::VB, 2));
  CHECK(validate(id2).valid);
  CHECK(components(id2).count == 2);
  CHECK(crossing_count(gauss_code(id2)) == 0);

  auto k = closure_of("v1 s1 s1", GroupKind::VB, 2);
  CHECK(components(k).count == 1);
  CHECK(support::count_crossings(k, CrossingKind::Classical) == 2);
  CHECK(support::count_crossings(k, CrossingKind::Virtual) == 1);

  auto hopf = closure_of("s1 s1", GroupKind::B, 2);
  CHECK(components(hopf).count == 2);
  CHECK(crossing_count(gauss_code(hopf)) == 2);

  CHECK(components(closure(BraidWord(GroupKind::VB, 3))).count == 3);
  CHECK(components(kUnknot).count == 1);
}

TEST_CASE("components follow the permutation cycles") {
  std::mt19937 rng(21);
  for (auto kind : kAllKinds) {
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 4);
      auto w = random_word(kind, n, rng() % 13, rng);
      auto d = closure(w);
      CHECK(validate(d).valid);
      CHECK(components(d).count == support::count_cycles(support::strand_endpoints(w)));
    }
  }
}

TEST_CASE("gauss codes") {
  auto k = closure_of("v1 s1 s1", GroupKind::VB, 2);
  CHECK(format_gauss(gauss_code(k)) == "o1+u2+u1+o2+");
  CHECK(format_gauss(parse_gauss("o1+u2+u1+o2+")) == "o1+u2+u1+o2+");
  CHECK(format_gauss(gauss_code(closure_of("v1 v1", GroupKind::VB, 2))) == "./.");

  auto g = parse_gauss("o1+u2+u1+o2+");
  CHECK(g.components.size() == 1);
  CHECK(crossing_count(g) == 2);
  CHECK(crossing_count(parse_gauss("o1+u1+")) == 1);
  CHECK_THROWS_AS(parse_gauss("o1+u1-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("o1+o1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("o1+u2+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("o1+u1+f2+f2-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("f1+f1+"), ParseError);
  CHECK(crossing_count(parse_gauss("f1+/f1-")) == 1);
}

TEST_CASE("gauss equivalence") {
  auto a = parse_gauss("o1+u2+u1+o2+");
  CHECK(gauss_equivalent(a, parse_gauss("u1+o2+o1+u2+")));
  CHECK(gauss_equivalent(a, a));
  CHECK_FALSE(gauss_equivalent(a, parse_gauss("o1+u2+o3+u1+o2+u3+")));
  CHECK_FALSE(gauss_equivalent(parse_gauss("o1+u1+"), parse_gauss("o1-u1-")));
  CHECK_FALSE(gauss_equivalent(parse_gauss("o1+/u1+"), parse_gauss("o1+u1+/.")));
  CHECK(gauss_equivalent(parse_gauss("o1+/u1+"), parse_gauss("u7+/o7+")));
}

TEST_CASE("gauss equivalence agrees with a brute-force canonical form") {
  std::mt19937 rng(8);
  int agree = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    auto a = gauss_code(closure(random_word(GroupKind::VB, n, rng() % 7, rng)));
    auto b = gauss_code(closure(random_word(GroupKind::VB, n, rng() % 7, rng)));
    const bool oracle = support::canonical_gauss(a) == support::canonical_gauss(b);
    CHECK(gauss_equivalent(a, b) == oracle);
    CHECK(gauss_equivalent(a, a));
    agree += oracle ? 1 : 0;
  }
  CHECK(agree > 0);
}

TEST_CASE("invariants") {
  auto vv = invariants(closure_of("v1 v1", GroupKind::VB, 2));
  CHECK(vv.component_count == 2);
  CHECK(vv.lk == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  CHECK(vv.vparity[0][1] == 0);

  auto hopf = invariants(closure_of("s1 s1", GroupKind::B, 2));
  CHECK(hopf.lk[0][1] == 1);
  CHECK(hopf.lk[1][0] == 1);
  auto neg = invariants(closure_of("s1^-1 s1^-1", GroupKind::B, 2));
  CHECK(neg.lk[0][1] == -1);

  auto one = invariants(kUnknot);
  CHECK(one.component_count == 1);
  CHECK(one.lk.size() == 1);

  auto odd = invariants(closure_of("v1 s1", GroupKind::VB, 2));
  CHECK(odd.component_count == 2);
  CHECK(odd.vparity[0][1] == 1);
  auto two = invariants(closure_of("v1 v2 v2 v1 v1 v1", GroupKind::VB, 3));
  CHECK(two.component_count == 3);
}

TEST_CASE("lk is the over-strand count, vparity counts virtual crossings mod 2") {
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto d = support::random_diagram(rng, Category::Virtual, 10, 6);
    auto rep = invariants(d);
    auto comp = components(d);
    const Layout l = layout(d);
    std::vector<std::vector<int>> lk(static_cast<std::size_t>(comp.count),
                                     std::vector<int>(static_cast<std::size_t>(comp.count), 0));
    auto vp = lk;
    for (std::size_t k = 0; k < d.events.size(); ++k) {
      const auto* x = std::get_if<Cross>(&d.events[k]);
      if (!x) continue;
      const int a = comp.label[k][static_cast<std::size_t>(x->position - 1)];
      const int b = comp.label[k][static_cast<std::size_t>(x->position)];
      if (a == b) continue;
      if (x->kind == CrossingKind::Virtual) {
        vp[a][b] ^= 1;
        vp[b][a] ^= 1;
      } else {
        const bool a_over = crossing_geometry(d, l, k).a_over;
        lk[a_over ? a : b][a_over ? b : a] += x->sign;
      }
    }
    CHECK(rep.lk == lk);
    CHECK(rep.vparity == vp);
  }
}

TEST_CASE("rendering") {
  auto v1 = closure_of("v1", GroupKind::VB, 2);
  auto ascii = render_ascii(v1);
  CHECK(std::count(ascii.begin(), ascii.end(), 'O') == 1);
  CHECK(render_ascii(v1) == ascii);

  auto svg = render_svg(closure_of("s1 v2 s2^-1 v1", GroupKind::VB, 3));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(support::xml_balanced(svg));
  CHECK(svg.find("<circle") != std::string::npos);

  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto d = support::random_diagram(rng, Category::Welded, 10, 6);
    CHECK(support::xml_balanced(render_svg(d)));
  }
}

TEST_CASE("golden render") {
  auto d = support::load_diagram("virtual_trefoil.diagram");
  CHECK(render_ascii(d) == support::read_file(support::fixture_path("virtual_trefoil.ascii")));
}

TEST_CASE("diagram text format") {
  auto d = support::load_diagram("classical_trefoil_up.diagram");
  CHECK(d.category == Category::Classical);
  CHECK(parse_diagram(format_diagram(d)) == d);
  CHECK(format_event(Cross{2, CrossingKind::Classical, -1}) == "x- 2");
  CHECK(format_event(Cup{1, Chirality::RightUp}) == "cup R 1");
  CHECK_THROWS_AS(parse_diagram("cup L 1\ncap 1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("category virtual\ncup Q 1\ncap 1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("category virtual\nwiggle 1\n"), ParseError);
  for (auto c : {Category::Virtual, Category::Flat, Category::Welded, Category::Unrestricted,
                 Category::FlatUnrestricted, Category::Classical}) {
    CHECK(parse_category(to_string(c)) == c);
    CHECK(category_for(kind_for(c)) == c);
  }
}

TEST_CASE("relabeling") {
  auto a = invariants(closure_of("s1 s1 v2 v2", GroupKind::VB, 3));
  auto b = invariants(closure_of("v2 v2 s2 s2", GroupKind::VB, 3));
  CHECK(same_up_to_relabeling(a, b));
  auto c = invariants(closure_of("s1^-1 s1^-1", GroupKind::VB, 3));
  CHECK_FALSE(same_up_to_relabeling(a, c));
}
