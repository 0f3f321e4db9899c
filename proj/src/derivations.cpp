#include "vbraid/derivations.hpp"

#include <algorithm>
#include <cstdlib>

namespace vbraid {

Tracer::Tracer(const RelationSet& rels, std::vector<Generator> word)
    : rels_(&rels), word_(std::move(word)) {}

void Tracer::apply(const std::string& id, Direction dir, std::size_t pos) {
  apply(RewriteStep{id, dir, pos, {}});
}

void Tracer::apply(const RewriteStep& step) {
  word_ = vbraid::apply_step(word_, step, *rels_);
  steps_.push_back(step);
}

std::vector<Generator> canonical_virtual_word(const Permutation& p) {
  const int n = p.size();
  Permutation cur = p;
  std::vector<std::vector<Generator>> runs;
  for (int k = n - 1; k >= 1; --k) {
    const int j = cur(k + 1);
    std::vector<Generator> run;
    for (int m = k; m >= j; --m) run.push_back(virt(m));
    cur = cur.then(permutation_image(std::span<const Generator>(run), n).inverse());
    runs.push_back(std::move(run));
  }
  std::vector<Generator> out;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return out;
}

namespace {

std::size_t find_letter(const Tracer& t, std::size_t b, std::size_t e, Generator g) {
  for (std::size_t p = b; p < e; ++p) {
    if (t.word()[p] == g) return p;
  }
  return e;
}

// Normal form of a segment over v_1..v_k: N_{k-1} followed by one run
// v_k v_{k-1} ... v_j.
std::size_t normalize_upto(Tracer& t, std::size_t b, std::size_t e, int k) {
  for (;;) {
    if (k <= 0) return e;
    const Generator vk = virt(k);
    std::size_t p1 = find_letter(t, b, e, vk);
    if (p1 == e) return normalize_upto(t, b, e, k - 1);
    std::size_t p2 = find_letter(t, p1 + 1, e, vk);
    if (p2 == e) {
      // One v_k: normalize what follows it, slide v_k right up to the run of
      // v_{k-1}, then normalize what precedes it.
      std::size_t e2 = normalize_upto(t, p1 + 1, e, k - 1);
      std::size_t q = find_letter(t, p1 + 1, e2, virt(k - 1));
      for (std::size_t x = p1; x + 1 < q; ++x) {
        t.apply(relid::virt_comm(t.word()[x + 1].index, k), Direction::RightToLeft, x);
      }
      std::size_t a_end = normalize_upto(t, b, q - 1, k - 1);
      return e2 - ((q - 1) - a_end);
    }
    // Two or more: bring the first two v_k together and remove one of them.
    std::size_t c_end = normalize_upto(t, p1 + 1, p2, k - 1);
    e -= p2 - c_end;
    std::size_t q = find_letter(t, p1 + 1, c_end, virt(k - 1));
    for (std::size_t x = p1; x + 1 < q; ++x) {
      t.apply(relid::virt_comm(t.word()[x + 1].index, k), Direction::RightToLeft, x);
    }
    if (q == c_end) {
      t.apply(relid::virt_square(k), Direction::LeftToRight, q - 1);
      e -= 2;
      continue;
    }
    for (std::size_t x = c_end; x > q + 1; --x) {
      t.apply(relid::virt_comm(t.word()[x - 1].index, k), Direction::LeftToRight, x - 1);
    }
    t.apply(relid::virt_braid(k - 1), Direction::RightToLeft, q - 1);
  }
}

}  // namespace

std::size_t normalize_virtual_segment(Tracer& t, std::size_t begin, std::size_t end,
                                      int n) {
  return normalize_upto(t, begin, end, n - 1);
}

bool prove_pure_virtual(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error("prove_pure_virtual: strand mismatch");
  for (const auto* w : {&a, &b}) {
    for (auto g : w->letters()) {
      if (g.family != Family::Virtual) {
        throw Error("prove_pure_virtual: non-virtual letter " + format_generator(g));
      }
    }
  }
  return permutation_image(a) == permutation_image(b);
}

namespace {

using Letters = std::vector<Generator>;

Letters concat(std::initializer_list<const Letters*> parts) {
  Letters out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Letters inverse_letters(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

bool is_core(Generator g) { return g.family != Family::Virtual; }

// Split of a permutation p into r after h, where h fixes 1 and 2 and r is the
// coset representative that is increasing on 3..n.
std::pair<Permutation, Permutation> split_coset(const Permutation& p) {
  const int n = p.size();
  std::vector<int> r(static_cast<std::size_t>(n));
  if (n >= 1) r[0] = p(1);
  if (n >= 2) r[1] = p(2);
  int slot = 2;
  for (int v = 1; v <= n; ++v) {
    if (n >= 1 && v == p(1)) continue;
    if (n >= 2 && v == p(2)) continue;
    r[slot++] = v;
  }
  Permutation rep(std::move(r));
  return {rep, p.then(rep.inverse())};
}

int core_code(Generator g) {
  switch (g.family) {
    case Family::Sigma:
      return 1;
    case Family::SigmaInv:
      return -1;
    default:
      return 2;
  }
}

bool codes_cancel(int a, int b) { return (a == 2 && b == 2) || (a != 2 && a == -b); }

// Normal form modulo the virtual relators and core/v_j commutation for j >= 3.
struct CoreForm {
  std::vector<Permutation> segments;
  std::vector<int> cores;
  friend bool operator==(const CoreForm&, const CoreForm&) = default;
};

CoreForm core_form(const Letters& w, int n) {
  CoreForm f;
  Letters seg;
  for (auto g : w) {
    if (is_core(g)) {
      if (g.index != 1) throw Error("core letter other than index 1");
      f.segments.push_back(permutation_image(std::span<const Generator>(seg), n));
      f.cores.push_back(core_code(g));
      seg.clear();
    } else {
      seg.push_back(g);
    }
  }
  f.segments.push_back(permutation_image(std::span<const Generator>(seg), n));
  for (;;) {
    for (std::size_t k = f.cores.size(); k >= 1; --k) {
      auto [rep, rest] = split_coset(f.segments[k]);
      f.segments[k] = rep;
      f.segments[k - 1] = f.segments[k - 1].then(rest);
    }
    bool merged = false;
    for (std::size_t k = 1; k < f.cores.size(); ++k) {
      if (f.segments[k].is_identity() && codes_cancel(f.cores[k - 1], f.cores[k])) {
        f.segments[k - 1] = f.segments[k - 1].then(f.segments[k + 1]);
        f.segments.erase(f.segments.begin() + static_cast<long>(k),
                         f.segments.begin() + static_cast<long>(k) + 2);
        f.cores.erase(f.cores.begin() + static_cast<long>(k) - 1,
                      f.cores.begin() + static_cast<long>(k) + 1);
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }
  return f;
}

std::vector<std::size_t> core_positions(const Letters& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_core(w[i])) out.push_back(i);
  }
  return out;
}

void rewrite_segment(Tracer& t, std::size_t b, std::size_t e, const Letters& target,
                     int n) {
  if (std::equal(t.word().begin() + static_cast<long>(b),
                 t.word().begin() + static_cast<long>(e), target.begin(),
                 target.end())) {
    return;
  }
  normalize_virtual_segment(t, b, e, n);
  Tracer scratch(t.relations(), target);
  normalize_virtual_segment(scratch, 0, target.size(), n);
  for (auto step : reversed(scratch.steps())) {
    step.position += b;
    t.apply(step);
  }
}

// The core letter at c swaps with v_j (j >= 3) at c+1.
void core_past_virtual(Tracer& t, std::size_t c) {
  const Generator core = t.word()[c];
  const int j = t.word()[c + 1].index;
  switch (core.family) {
    case Family::Sigma:
      t.apply(relid::core_comm(false, j), Direction::LeftToRight, c);
      break;
    case Family::Flat:
      t.apply(relid::core_comm(true, j), Direction::LeftToRight, c);
      break;
    case Family::SigmaInv:
      t.apply(relid::cancel(sigma(1)), Direction::RightToLeft, c + 2);
      t.apply(relid::core_comm(false, j), Direction::RightToLeft, c + 1);
      t.apply(relid::cancel(sigma_inv(1)), Direction::LeftToRight, c);
      break;
    default:
      throw std::logic_error("core_past_virtual: not a core letter");
  }
}

void core_normalize(Tracer& t, int n) {
  for (;;) {
    auto cores = core_positions(t.word());
    const std::size_t m = cores.size();
    for (std::size_t k = m; k >= 1; --k) {
      cores = core_positions(t.word());
      std::size_t b = cores[k - 1] + 1;
      std::size_t e = k < m ? cores[k] : t.word().size();
      auto p = permutation_image(
          std::span<const Generator>(t.word()).subspan(b, e - b), n);
      auto [rep, rest] = split_coset(p);
      auto rest_word = canonical_virtual_word(rest);
      auto rep_word = canonical_virtual_word(rep);
      rewrite_segment(t, b, e, concat({&rest_word, &rep_word}), n);
      std::size_t c = b - 1;
      for (std::size_t x = 0; x < rest_word.size(); ++x, ++c) core_past_virtual(t, c);
    }
    cores = core_positions(t.word());
    bool changed = false;
    for (std::size_t k = 0; k + 1 < cores.size(); ++k) {
      if (cores[k + 1] == cores[k] + 1 &&
          cancels(t.word()[cores[k]], t.word()[cores[k + 1]])) {
        t.apply(relid::cancel(t.word()[cores[k]]), Direction::LeftToRight, cores[k]);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  auto cores = core_positions(t.word());
  std::size_t e0 = cores.empty() ? t.word().size() : cores[0];
  auto head = permutation_image(std::span<const Generator>(t.word()).subspan(0, e0), n);
  rewrite_segment(t, 0, e0, canonical_virtual_word(head), n);
}

std::vector<RewriteStep> normal_form_steps(const RelationSet& rels, const Letters& w,
                                           int n) {
  Tracer t(rels, w);
  core_normalize(t, n);
  return t.steps();
}

// Every permutation of n points as a canonical word, shortest first.
std::vector<Letters> virtual_elements(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Letters> out;
  do {
    out.push_back(canonical_virtual_word(Permutation(images)));
  } while (std::next_permutation(images.begin(), images.end()));
  std::stable_sort(out.begin(), out.end(), [](const Letters& a, const Letters& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_main_relator(const Relator& r) {
  return r.id.rfind("reduced-", 0) == 0;
}

// Steps turning the key side `from`, present in inverted form at offset o,
// into the inverted `to`, where the key maps from -> to in direction d.
void inverted_key(Tracer& t, std::size_t o, const Letters& from, const Letters& to,
                  const std::string& id, Direction d) {
  const std::size_t a = from.size();
  for (std::size_t x = 0; x < to.size(); ++x) {
    t.apply(relid::cancel(to[x]), Direction::RightToLeft, o + a + x);
  }
  t.apply(id, flip(d), o + a);
  for (std::size_t k = 0; k < a; ++k) {
    t.apply(relid::cancel(inverse(from[k])), Direction::LeftToRight, o + a - 1 - k);
  }
}

}  // namespace

namespace {

// A step followed by its exact inverse (same relator and position, opposite
// direction) is a no-op; drop such pairs.
std::vector<RewriteStep> cancel_inverse_pairs(const std::vector<RewriteStep>& steps) {
  std::vector<RewriteStep> out;
  for (const auto& s : steps) {
    if (!out.empty() && out.back().relator_id == s.relator_id &&
        out.back().position == s.position && out.back().direction == flip(s.direction)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::optional<DerivationScript> build_derivation(const BraidWord& start,
                                                 const BraidWord& target,
                                                 const Presentation& reduced,
                                                 const std::string& name) {
  if (reduced.flavor != Flavor::Reduced) {
    throw Error("build_derivation needs a reduced presentation");
  }
  const int n = reduced.n;
  for (const auto* w : {&start, &target}) {
    if (w->kind() != reduced.kind || w->strands() != n) {
      throw Error("build_derivation: word does not match the presentation");
    }
    for (auto g : w->letters()) {
      if (is_core(g) && g.index != 1) {
        throw Error("build_derivation: letter " + format_generator(g) +
                    " is outside the reduced alphabet");
      }
    }
  }
  if (permutation_image(start) != permutation_image(target)) return std::nullopt;

  const RelationSet rels = RelationSet::from(reduced);
  DerivationScript script;
  script.name = name;
  script.kind = reduced.kind;
  script.n = n;
  script.relation_sets = {"reduced"};
  script.start = start;
  script.target = target;
  script.auto_reduce = false;

  const auto& sw = start.letters();
  const auto& tw = target.letters();
  const CoreForm fs = core_form(sw, n);
  const CoreForm ft = core_form(tw, n);
  const auto tail = reversed(normal_form_steps(rels, tw, n));

  if (fs == ft) {
    script.steps = normal_form_steps(rels, sw, n);
    script.steps.insert(script.steps.end(), tail.begin(), tail.end());
    script.steps = cancel_inverse_pairs(script.steps);
    return script;
  }

  const auto elements = virtual_elements(n);
  const auto start_perm = permutation_image(start);
  for (const auto& key : reduced.relators) {
    if (!is_main_relator(key)) continue;
    const auto& l = key.lhs.letters();
    const auto& r = key.rhs.letters();
    const Letters il = inverse_letters(l), ir = inverse_letters(r);
    struct Orientation {
      const Letters* p;
      const Letters* q;
      bool inverted;
      Direction d;
    };
    const Orientation orients[] = {{&l, &r, false, Direction::LeftToRight},
                                   {&r, &l, false, Direction::RightToLeft},
                                   {&il, &ir, true, Direction::LeftToRight},
                                   {&ir, &il, true, Direction::RightToLeft}};
    for (const auto& o : orients) {
      const auto p_perm = permutation_image(std::span<const Generator>(*o.p), n);
      for (const auto& dw : elements) {
        const auto d_perm = permutation_image(std::span<const Generator>(dw), n);
        const auto c_perm = start_perm.then(p_perm.then(d_perm).inverse());
        const Letters cw = canonical_virtual_word(c_perm);
        const Letters x = concat({&cw, o.p, &dw});
        if (core_form(x, n) != fs) continue;
        const Letters y = concat({&cw, o.q, &dw});
        if (core_form(y, n) != ft) continue;

        auto head = normal_form_steps(rels, sw, n);
        const auto to_x = reversed(normal_form_steps(rels, x, n));
        Tracer g(rels, x);
        if (o.inverted) {
          // o.p is the inverse of the key side that d maps from.
          const Letters& from = o.d == Direction::LeftToRight ? l : r;
          const Letters& to = o.d == Direction::LeftToRight ? r : l;
          inverted_key(g, cw.size(), from, to, key.id, o.d);
        } else {
          g.apply(key.id, o.d, cw.size());
        }
        const auto from_y = normal_form_steps(rels, g.word(), n);
        const auto& key_steps = g.steps();
        script.steps = head;
        for (const auto* part : {&to_x, &key_steps, &from_y, &tail}) {
          script.steps.insert(script.steps.end(), part->begin(), part->end());
        }
        script.steps = cancel_inverse_pairs(script.steps);
        return script;
      }
    }
  }
  return std::nullopt;
}

namespace {

GroupKind family_kind(bool flat) { return flat ? GroupKind::FV : GroupKind::VB; }

Generator core_letter(bool flat, int i) { return flat ? vbraid::flat(i) : sigma(i); }

DerivationScript expanded_relation(const std::string& name, GroupKind kind, int n,
                                   Letters lhs, Letters rhs) {
  BraidWord start = expand_word(BraidWord(kind, n, std::move(lhs)));
  BraidWord target = expand_word(BraidWord(kind, n, std::move(rhs)));
  auto script = build_derivation(start, target, reduced_presentation(kind, n), name);
  if (!script) throw std::logic_error("no derivation found for " + name);
  return *script;
}

std::string args(int a) { return "(" + std::to_string(a) + ")"; }
std::string args(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
std::string args_n(const std::string& base, int n) {
  return base + "-n" + std::to_string(n);
}

}  // namespace

DerivationScript mixed_commute_script(int i, int j, int n, bool flat) {
  if (i < 2 || i > n - 1 || j < 1 || j > n - 1 || std::abs(i - j) < 2) {
    throw Error("mixed-commute: inadmissible indices");
  }
  std::string name = (flat ? "flat-mixed-commute" : "mixed-commute") + args(i, j);
  return expanded_relation(args_n(name, n), family_kind(flat), n,
                           {core_letter(flat, i), virt(j)},
                           {virt(j), core_letter(flat, i)});
}

DerivationScript braid_relation_script(int i, int n, bool flat) {
  if (i < 2 || i + 1 > n - 1) throw Error("braid-relation: inadmissible index");
  std::string name = (flat ? "flat-braid-relation" : "braid-relation") + args(i);
  auto a = core_letter(flat, i), b = core_letter(flat, i + 1);
  return expanded_relation(args_n(name, n), family_kind(flat), n, {a, b, a}, {b, a, b});
}

DerivationScript far_commute_script(int i, int j, int n, bool flat) {
  if (i < 2 || j < i + 2 || j > n - 1) throw Error("far-commute: inadmissible indices");
  std::string name = (flat ? "flat-far-commute" : "far-commute") + args(i, j);
  auto a = core_letter(flat, i), b = core_letter(flat, j);
  return expanded_relation(args_n(name, n), family_kind(flat), n, {a, b}, {b, a});
}

DerivationScript welded_substitution_script(int n) {
  if (n < 3) throw Error("welded-substitution needs n >= 3");
  return expanded_relation(args_n("welded-substitution", n), GroupKind::WB, n,
                           {virt(1), sigma(2), sigma(1)},
                           {sigma(2), sigma(1), virt(2)});
}

std::vector<DerivationScript> builtin_scripts(int n) {
  std::vector<DerivationScript> out;
  for (bool flat : {false, true}) {
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) out.push_back(mixed_commute_script(i, j, n, flat));
      }
    }
    for (int i = 2; i + 1 <= n - 1; ++i) out.push_back(braid_relation_script(i, n, flat));
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        out.push_back(far_commute_script(i, j, n, flat));
      }
    }
  }
  if (n >= 3) out.push_back(welded_substitution_script(n));
  return out;
}

std::pair<BraidWord, BraidWord> palindrome_identity(int i, int j, int n) {
  if (j < 1 || j >= i || i > n - 1) throw Error("palindrome identity: bad indices");
  Letters l, r;
  for (int k = i; k > j; --k) l.push_back(virt(k));
  l.push_back(virt(j));
  for (int k = j + 1; k <= i; ++k) l.push_back(virt(k));
  for (int k = j; k < i; ++k) r.push_back(virt(k));
  r.push_back(virt(i));
  for (int k = i - 1; k >= j; --k) r.push_back(virt(k));
  return {BraidWord(GroupKind::S, n, l), BraidWord(GroupKind::S, n, r)};
}

std::pair<BraidWord, BraidWord> staircase_identity(int i, int n) {
  if (i < 2 || i + 2 > n - 1) throw Error("staircase identity: bad index");
  Letters l, r;
  for (int k = 1; k <= i - 1; ++k) {
    for (int m = k + 3; m >= k; --m) l.push_back(virt(m));
  }
  for (int top = 4; top >= 1; --top) {
    for (int m = top; m <= top + i - 2; ++m) r.push_back(virt(m));
  }
  return {BraidWord(GroupKind::S, n, l), BraidWord(GroupKind::S, n, r)};
}

IdentityReport verify_identities(int max_n) {
  IdentityReport rep;
  auto check = [&](const std::pair<BraidWord, BraidWord>& w, const std::string& what) {
    ++rep.checked;
    if (!prove_pure_virtual(w.first, w.second)) rep.failures.push_back(what);
  };
  for (int n = 2; n <= max_n; ++n) {
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = 1; j < i; ++j) {
        check(palindrome_identity(i, j, n),
              "palindrome" + args(i, j) + " n=" + std::to_string(n));
      }
    }
    for (int i = 2; i + 2 <= n - 1; ++i) {
      check(staircase_identity(i, n), "staircase" + args(i) + " n=" + std::to_string(n));
    }
  }
  return rep;
}

}  // namespace vbraid
