#include "vbraid/words.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace vbraid {

namespace {

constexpr std::array<std::string_view, 7> kKindNames{"B",  "S",  "VB", "FV",
                                                     "WB", "UB", "FU"};

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Sigma:
    case Family::SigmaInv:
      return "sigma";
    case Family::Virtual:
      return "v";
    case Family::Flat:
      return "c";
  }
  return "?";
}

void check_letter(GroupKind kind, int n, Generator g) {
  if (!allows(kind, g.family)) {
    throw Error("generator " + format_generator(g) + " (family " +
                std::string(family_name(g.family)) + ") is not in the " +
                std::string(to_string(kind)) + " signature");
  }
  if (g.index < 1 || g.index > n - 1) {
    throw Error("generator " + format_generator(g) +
                " index out of range 1.." + std::to_string(n - 1));
  }
}

Generator parse_token(std::string_view tok) {
  if (tok.empty()) throw ParseError("empty token");
  Family family;
  switch (tok[0]) {
    case 's':
      family = Family::Sigma;
      break;
    case 'v':
      family = Family::Virtual;
      break;
    case 'c':
      family = Family::Flat;
      break;
    default:
      throw ParseError("unknown token '" + std::string(tok) + "'");
  }
  auto rest = tok.substr(1);
  int index = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc() || ptr == rest.data()) {
    throw ParseError("unknown token '" + std::string(tok) + "'");
  }
  std::string_view tail(ptr, rest.data() + rest.size() - ptr);
  if (tail == "^-1") {
    if (family != Family::Sigma) {
      throw ParseError("only s letters take ^-1: '" + std::string(tok) + "'");
    }
    family = Family::SigmaInv;
  } else if (!tail.empty()) {
    throw ParseError("unknown token '" + std::string(tok) + "'");
  }
  return {family, index};
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

GroupKind parse_group_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<GroupKind>(i);
  }
  throw ParseError("unknown group kind '" + std::string(text) + "'");
}

KindSignature signature(GroupKind kind) {
  switch (kind) {
    case GroupKind::B:
      return {true, false, false};
    case GroupKind::S:
      return {false, true, false};
    case GroupKind::VB:
    case GroupKind::WB:
    case GroupKind::UB:
      return {true, true, false};
    case GroupKind::FV:
    case GroupKind::FU:
      return {false, true, true};
  }
  return {};
}

bool allows(GroupKind kind, Family family) {
  auto sig = signature(kind);
  switch (family) {
    case Family::Sigma:
    case Family::SigmaInv:
      return sig.sigma;
    case Family::Virtual:
      return sig.virt;
    case Family::Flat:
      return sig.flat;
  }
  return false;
}

bool is_flat_kind(GroupKind kind) {
  return kind == GroupKind::FV || kind == GroupKind::FU;
}

Generator inverse(Generator g) {
  if (g.family == Family::Sigma) return {Family::SigmaInv, g.index};
  if (g.family == Family::SigmaInv) return {Family::Sigma, g.index};
  return g;
}

bool cancels(Generator a, Generator b) { return inverse(a) == b; }

std::string format_generator(Generator g) {
  std::string idx = std::to_string(g.index);
  switch (g.family) {
    case Family::Sigma:
      return "s" + idx;
    case Family::SigmaInv:
      return "s" + idx + "^-1";
    case Family::Virtual:
      return "v" + idx;
    case Family::Flat:
      return "c" + idx;
  }
  return "?";
}

BraidWord::BraidWord(GroupKind kind, int n, std::vector<Generator> letters)
    : kind_(kind), n_(n), letters_(std::move(letters)) {
  if (n < 0) throw Error("strand count must be non-negative");
  for (auto g : letters_) check_letter(kind_, n_, g);
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x]) throw Error("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(int n, int i) {
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error("permutation size mismatch");
  Permutation r(size());
  for (int x = 1; x <= size(); ++x) r.images_[x - 1] = next((*this)(x));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (int x = 1; x <= size(); ++x) r.images_[(*this)(x) - 1] = x;
  return r;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= size(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size() + 1, false);
  int cycles = 0;
  for (int x = 1; x <= size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (int y = x; !seen[y]; y = (*this)(y)) seen[y] = true;
  }
  return cycles;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int x = 1; x <= size(); ++x) {
    if (x > 1) out += ' ';
    out += std::to_string((*this)(x));
  }
  return out + "]";
}

BraidWord parse_word(std::string_view text, GroupKind kind, int n) {
  std::vector<Generator> letters;
  std::size_t i = 0;
  auto blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    while (i < text.size() && blank(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !blank(text[j])) ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      if (tok != "e") letters.push_back(parse_token(tok));
    }
    i = j;
  }
  try {
    return BraidWord(kind, n, std::move(letters));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string format_letters(std::span<const Generator> letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += format_generator(letters[i]);
  }
  return out;
}

std::string format_word(const BraidWord& w) { return format_letters(w.letters()); }

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.kind() != b.kind() || a.strands() != b.strands()) {
    throw Error("compose: kind or strand count mismatch");
  }
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.kind(), a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Generator> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(inverse(*it));
  }
  return BraidWord(w.kind(), w.strands(), std::move(letters));
}

std::vector<Generator> free_reduce(std::span<const Generator> letters) {
  std::vector<Generator> stack;
  stack.reserve(letters.size());
  for (auto g : letters) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return stack;
}

BraidWord free_reduce(const BraidWord& w) {
  return BraidWord(w.kind(), w.strands(), free_reduce(std::span(w.letters())));
}

Permutation permutation_image(std::span<const Generator> letters, int n) {
  std::vector<int> where(static_cast<std::size_t>(n));
  std::iota(where.begin(), where.end(), 1);
  // where[k] = the point currently sitting at position k+1; a letter of index
  // i swaps positions i and i+1.
  for (auto g : letters) std::swap(where[g.index - 1], where[g.index]);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) images[where[pos - 1] - 1] = pos;
  return Permutation(std::move(images));
}

Permutation permutation_image(const BraidWord& w) {
  return permutation_image(std::span(w.letters()), w.strands());
}

BraidWord random_word(GroupKind kind, int n, std::size_t length, std::mt19937& rng) {
  if (n < 2) throw Error("random_word needs at least 2 strands");
  std::vector<Family> families;
  for (auto f : {Family::Sigma, Family::SigmaInv, Family::Virtual, Family::Flat}) {
    if (allows(kind, f)) families.push_back(f);
  }
  std::uniform_int_distribution<std::size_t> fam(0, families.size() - 1);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::vector<Generator> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    Family f = families[fam(rng)];
    letters.push_back({f, idx(rng)});
  }
  return BraidWord(kind, n, std::move(letters));
}

}  // namespace vbraid
