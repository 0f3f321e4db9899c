#include "vbraid/presentations.hpp"

#include <cstdlib>
#include <sstream>

namespace vbraid {

namespace relid {
std::string virt_square(int i) { return "virt-square(" + std::to_string(i) + ")"; }
std::string virt_braid(int i) { return "virt-braid(" + std::to_string(i) + ")"; }
std::string virt_comm(int i, int j) {
  return "virt-comm(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string flat_square(int i) { return "flat-square(" + std::to_string(i) + ")"; }
std::string cancel(Generator g) {
  switch (g.family) {
    case Family::Virtual:
      return virt_square(g.index);
    case Family::Flat:
      return flat_square(g.index);
    default:
      return "cancel(" + format_generator(g) + ")";
  }
}
std::string core_comm(bool flat, int j) {
  return (flat ? "c1-comm(" : "sigma1-comm(") + std::to_string(j) + ")";
}
}  // namespace relid

namespace {

std::string idx(int i) { return "(" + std::to_string(i) + ")"; }
std::string idx(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

using Letters = std::vector<Generator>;

Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

class Builder {
 public:
  Builder(GroupKind kind, int n) : kind_(kind), n_(n) {}

  void add(std::string id, Letters lhs, Letters rhs) {
    BraidWord l(kind_, n_, std::move(lhs));
    BraidWord r(kind_, n_, std::move(rhs));
    if (permutation_image(l) != permutation_image(r)) {
      throw std::logic_error("relator " + id + " is not permutation-compatible");
    }
    out_.push_back({std::move(id), std::move(l), std::move(r)});
  }

  std::vector<Relator> take() { return std::move(out_); }
  int n() const { return n_; }

 private:
  GroupKind kind_;
  int n_;
  std::vector<Relator> out_;
};

// x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}, x_i x_j = x_j x_i, x_i^2 = 1 for one
// family, named with the given prefix.
void braid_family(Builder& b, Generator (*gen)(int), const std::string& braid,
                  const std::string& comm) {
  for (int i = 1; i + 1 <= b.n() - 1; ++i) {
    b.add(braid + idx(i), {gen(i), gen(i + 1), gen(i)},
          {gen(i + 1), gen(i), gen(i + 1)});
  }
  for (int i = 1; i <= b.n() - 1; ++i) {
    for (int j = i + 2; j <= b.n() - 1; ++j) {
      b.add(comm + idx(i, j), {gen(i), gen(j)}, {gen(j), gen(i)});
    }
  }
}

void squares(Builder& b, Generator (*gen)(int), const std::string& name) {
  for (int i = 1; i <= b.n() - 1; ++i) b.add(name + idx(i), {gen(i), gen(i)}, {});
}

void symmetric_relations(Builder& b) {
  squares(b, virt, "virt-square");
  braid_family(b, virt, "virt-braid", "virt-comm");
}

void mixed_relations(Builder& b, Generator (*core)(int), const std::string& comm,
                     const std::string& detour) {
  for (int i = 1; i <= b.n() - 1; ++i) {
    for (int j = 1; j <= b.n() - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      b.add(comm + idx(i, j), {core(i), virt(j)}, {virt(j), core(i)});
    }
  }
  for (int i = 1; i + 1 <= b.n() - 1; ++i) {
    b.add(detour + idx(i), {virt(i), core(i + 1), virt(i)},
          {virt(i + 1), core(i), virt(i + 1)});
  }
}

Generator sig(int i) { return sigma(i); }
Generator fl(int i) { return flat(i); }

std::vector<Generator> generator_list(Family family, int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back({family, i});
  return out;
}

}  // namespace

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Full:
      return "full";
    case Flavor::Reduced:
      return "reduced";
    case Flavor::ReducedSingleWelded:
      return "reduced-single-welded";
  }
  return "?";
}

const Relator* Presentation::find(std::string_view id) const {
  for (const auto& r : relators) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Presentation full_presentation(GroupKind kind, int n) {
  if (n < 1) throw Error("strand count must be at least 1");
  Builder b(kind, n);
  Presentation p{kind, n, Flavor::Full, {}, {}};
  auto sig_kind = signature(kind);
  if (sig_kind.sigma) {
    auto g = generator_list(Family::Sigma, n);
    p.generators.insert(p.generators.end(), g.begin(), g.end());
  }
  if (sig_kind.flat) {
    auto g = generator_list(Family::Flat, n);
    p.generators.insert(p.generators.end(), g.begin(), g.end());
  }
  if (sig_kind.virt) {
    auto g = generator_list(Family::Virtual, n);
    p.generators.insert(p.generators.end(), g.begin(), g.end());
  }

  switch (kind) {
    case GroupKind::B:
      braid_family(b, sig, "braid", "braid-comm");
      break;
    case GroupKind::S:
      symmetric_relations(b);
      break;
    case GroupKind::VB:
    case GroupKind::WB:
    case GroupKind::UB:
      braid_family(b, sig, "braid", "braid-comm");
      symmetric_relations(b);
      mixed_relations(b, sig, "mixed-comm", "special-detour");
      if (kind != GroupKind::VB) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
          b.add("F1" + idx(i), {virt(i), sigma(i + 1), sigma(i)},
                {sigma(i + 1), sigma(i), virt(i + 1)});
        }
      }
      if (kind == GroupKind::UB) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
          b.add("F2" + idx(i), {sigma(i), sigma(i + 1), virt(i)},
                {virt(i + 1), sigma(i), sigma(i + 1)});
        }
      }
      break;
    case GroupKind::FV:
    case GroupKind::FU:
      squares(b, fl, "flat-square");
      braid_family(b, fl, "flat-braid", "flat-comm");
      symmetric_relations(b);
      mixed_relations(b, fl, "flat-mixed-comm", "flat-detour");
      if (kind == GroupKind::FU) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
          b.add("flat-forbidden" + idx(i), {flat(i), flat(i + 1), virt(i)},
                {virt(i + 1), flat(i), flat(i + 1)});
        }
      }
      break;
  }
  p.relators = b.take();
  return p;
}

bool has_reduced_presentation(GroupKind kind) {
  switch (kind) {
    case GroupKind::VB:
    case GroupKind::FV:
    case GroupKind::WB:
    case GroupKind::UB:
    case GroupKind::FU:
      return true;
    default:
      return false;
  }
}

namespace {

Presentation single_welded(int n) {
  Builder b(GroupKind::WB, n);
  Presentation p{GroupKind::WB, n, Flavor::ReducedSingleWelded, {}, {}};
  if (n >= 2) p.generators.push_back(virt(1));
  auto g = generator_list(Family::Sigma, n);
  p.generators.insert(p.generators.end(), g.begin(), g.end());

  braid_family(b, sig, "braid", "braid-comm");
  if (n >= 2) b.add("virt-square(1)", {virt(1), virt(1)}, {});
  for (int j = 3; j <= n - 1; ++j) {
    b.add("v1-comm" + idx(j), {virt(1), sigma(j)}, {sigma(j), virt(1)});
  }
  if (n >= 3) {
    Letters x = {sigma(1), virt(1), sigma_inv(1)};
    Letters y = {sigma_inv(2), virt(1), sigma(2)};
    b.add("welded-braid", cat({x, y, x}), cat({y, x, y}));
  }
  if (n >= 4) {
    Letters box = {sigma_inv(2), sigma_inv(1), sigma_inv(3), sigma_inv(2), virt(1),
                   sigma(2),     sigma(3),     sigma(1),     sigma(2)};
    b.add("welded-comm", cat({{virt(1)}, box}), cat({box, {virt(1)}}));
  }
  p.relators = b.take();
  return p;
}

}  // namespace

Presentation reduced_presentation(GroupKind kind, int n, Flavor flavor) {
  if (n < 1) throw Error("strand count must be at least 1");
  if (flavor == Flavor::Full) return full_presentation(kind, n);
  if (flavor == Flavor::ReducedSingleWelded) {
    if (kind != GroupKind::WB) {
      throw Error("the single-welded reduced presentation exists only for WB");
    }
    return single_welded(n);
  }
  if (!has_reduced_presentation(kind)) {
    throw Error("no reduced presentation for " + std::string(to_string(kind)));
  }
  const bool flat_kind = is_flat_kind(kind);
  const Generator c1 = flat_kind ? flat(1) : sigma(1);
  Builder b(kind, n);
  Presentation p{kind, n, Flavor::Reduced, {}, {}};
  if (n >= 2) p.generators.push_back(c1);
  auto g = generator_list(Family::Virtual, n);
  p.generators.insert(p.generators.end(), g.begin(), g.end());

  for (int i = 1; i + 1 <= n - 1; ++i) {
    b.add(relid::virt_braid(i), {virt(i), virt(i + 1), virt(i)},
          {virt(i + 1), virt(i), virt(i + 1)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      b.add(relid::virt_comm(i, j), {virt(i), virt(j)}, {virt(j), virt(i)});
    }
  }
  if (flat_kind && n >= 2) b.add(relid::flat_square(1), {c1, c1}, {});
  for (int i = 1; i <= n - 1; ++i) b.add(relid::virt_square(i), {virt(i), virt(i)}, {});
  for (int j = 3; j <= n - 1; ++j) {
    b.add(relid::core_comm(flat_kind, j), {c1, virt(j)}, {virt(j), c1});
  }
  const std::string pre = flat_kind ? "reduced-flat-" : "reduced-";
  if (n >= 3) {
    Letters x = {virt(1), c1, virt(1)};
    Letters y = {virt(2), c1, virt(2)};
    b.add(pre + "braid", cat({x, y, x}), cat({y, x, y}));
    bool welded_like = kind == GroupKind::WB || kind == GroupKind::UB ||
                       kind == GroupKind::FU;
    if (welded_like) {
      Letters box = {virt(2), c1, virt(2), virt(1), c1};
      b.add(pre + "F1", cat({{virt(1)}, box}), cat({box, {virt(2)}}));
    }
    if (kind == GroupKind::UB) {
      Letters box = {c1, virt(1), virt(2), c1, virt(2)};
      b.add(pre + "F2", cat({box, {virt(1)}}), cat({{virt(2)}, box}));
    }
  }
  if (n >= 4) {
    Letters box = {virt(2), virt(3), virt(1), virt(2), c1,
                   virt(2), virt(1), virt(3), virt(2)};
    b.add(pre + "comm", cat({{c1}, box}), cat({box, {c1}}));
  }
  p.relators = b.take();
  return p;
}

std::vector<Relator> derived_relations(GroupKind kind, int n) {
  Builder b(kind, n);
  auto sig_kind = signature(kind);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    if (sig_kind.sigma && sig_kind.virt) {
      for (bool inv : {false, true}) {
        auto s = [inv](int k) { return inv ? sigma_inv(k) : sigma(k); };
        std::string suffix = inv ? "-inv" : "";
        b.add("detour-a" + suffix + idx(i), {virt(i), virt(i + 1), s(i)},
              {s(i + 1), virt(i), virt(i + 1)});
        b.add("detour-b" + suffix + idx(i), {s(i), virt(i + 1), virt(i)},
              {virt(i + 1), virt(i), s(i + 1)});
      }
    }
    if (sig_kind.flat) {
      b.add("flat-detour-a" + idx(i), {virt(i), virt(i + 1), flat(i)},
            {flat(i + 1), virt(i), virt(i + 1)});
      b.add("flat-detour-b" + idx(i), {flat(i), virt(i + 1), virt(i)},
            {virt(i + 1), virt(i), flat(i + 1)});
    }
  }
  return b.take();
}

BraidWord expand_sigma(int t, int n, GroupKind kind) {
  if (!has_reduced_presentation(kind)) {
    throw Error("expand_sigma: kind " + std::string(to_string(kind)) +
                " has no reduced presentation");
  }
  if (t < 1 || t > n - 1) throw Error("expand_sigma: index out of range");
  const Generator core = is_flat_kind(kind) ? flat(1) : sigma(1);
  if (t == 1) return BraidWord(kind, n, {core});
  const int i = t - 1;
  Letters w;
  for (int k = i; k >= 1; --k) w.push_back(virt(k));
  for (int k = i + 1; k >= 2; --k) w.push_back(virt(k));
  w.push_back(core);
  for (int k = 2; k <= i + 1; ++k) w.push_back(virt(k));
  for (int k = 1; k <= i; ++k) w.push_back(virt(k));
  return BraidWord(kind, n, std::move(w));
}

BraidWord expand_word(const BraidWord& w) {
  const int n = w.strands();
  Letters out;
  for (auto g : w.letters()) {
    if (g.family == Family::Virtual || g.index == 1) {
      out.push_back(g);
      continue;
    }
    auto e = expand_sigma(g.index, n, w.kind());
    if (g.family == Family::SigmaInv) e = inverse(e);
    out.insert(out.end(), e.letters().begin(), e.letters().end());
  }
  return BraidWord(w.kind(), n, free_reduce(std::span<const Generator>(out)));
}

BraidWord expand_v_welded(int t, int n) {
  if (t < 1 || t > n - 1) throw Error("expand_v_welded: index out of range");
  if (t == 1) return BraidWord(GroupKind::WB, n, {virt(1)});
  Letters w;
  for (int k = t - 1; k >= 1; --k) w.push_back(sigma_inv(k));
  for (int k = t; k >= 2; --k) w.push_back(sigma_inv(k));
  w.push_back(virt(1));
  for (int k = 2; k <= t; ++k) w.push_back(sigma(k));
  for (int k = 1; k <= t - 1; ++k) w.push_back(sigma(k));
  return BraidWord(GroupKind::WB, n, std::move(w));
}

SymmetricCheck relator_symmetric_check(const Presentation& p) {
  SymmetricCheck out;
  for (const auto& r : p.relators) {
    if (permutation_image(r.lhs) != permutation_image(r.rhs)) {
      out.pass = false;
      out.violators.push_back(r.id);
    }
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "presentation " << to_string(p.kind) << ' ' << p.n << ' '
     << to_string(p.flavor) << '\n';
  for (auto g : p.generators) os << "generator " << format_generator(g) << '\n';
  for (const auto& r : p.relators) {
    os << "relator " << r.id << ": " << format_word(r.lhs) << " = "
       << format_word(r.rhs) << '\n';
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<Presentation> p;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "presentation") {
      std::string kind, flavor;
      int n = 0;
      if (!(ls >> kind >> n >> flavor)) fail("bad header");
      Flavor f = Flavor::Full;
      if (flavor == "reduced") {
        f = Flavor::Reduced;
      } else if (flavor == "reduced-single-welded") {
        f = Flavor::ReducedSingleWelded;
      } else if (flavor != "full") {
        fail("unknown flavor '" + flavor + "'");
      }
      p = Presentation{parse_group_kind(kind), n, f, {}, {}};
      continue;
    }
    if (!p) fail("missing presentation header");
    if (head == "generator") {
      std::string tok;
      ls >> tok;
      auto w = parse_word(tok, p->kind, p->n);
      if (w.size() != 1) fail("bad generator '" + tok + "'");
      p->generators.push_back(w[0]);
    } else if (head == "relator") {
      auto colon = line.find(": ");
      auto eq = line.find(" = ");
      if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
        fail("bad relator line");
      }
      std::string id = line.substr(8, colon - 8);
      const auto lhs_text = line.substr(colon + 2, eq - colon - 2);
      const auto rhs_text = line.substr(eq + 3);
      // The identity is written "e"; a blank side is a typo.
      if (lhs_text.find_first_not_of(" \t") == std::string::npos ||
          rhs_text.find_first_not_of(" \t") == std::string::npos) {
        fail("empty side in relator '" + id + "'");
      }
      auto lhs = parse_word(lhs_text, p->kind, p->n);
      auto rhs = parse_word(rhs_text, p->kind, p->n);
      p->relators.push_back({id, lhs, rhs});
    } else {
      fail("unknown line '" + head + "'");
    }
  }
  if (!p) throw ParseError("empty presentation");
  return *p;
}

}  // namespace vbraid
