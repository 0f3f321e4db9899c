#pragma once

#include <array>
#include <compare>
#include <random>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, scripts, diagrams, Gauss codes).
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class GroupKind : std::uint8_t { B, S, VB, FV, WB, UB, FU };

inline constexpr std::array<GroupKind, 7> kAllKinds{
    GroupKind::B,  GroupKind::S,  GroupKind::VB, GroupKind::FV,
    GroupKind::WB, GroupKind::UB, GroupKind::FU};

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

enum class Family : std::uint8_t { Sigma, SigmaInv, Virtual, Flat };

// Which letter families a kind admits. v and c are always involutions.
struct KindSignature {
  bool sigma = false;
  bool virt = false;
  bool flat = false;
};

KindSignature signature(GroupKind kind);
bool allows(GroupKind kind, Family family);
bool is_flat_kind(GroupKind kind);

struct Generator {
  Family family = Family::Virtual;
  int index = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator sigma(int i) { return {Family::Sigma, i}; }
inline Generator sigma_inv(int i) { return {Family::SigmaInv, i}; }
inline Generator virt(int i) { return {Family::Virtual, i}; }
inline Generator flat(int i) { return {Family::Flat, i}; }

Generator inverse(Generator g);
// True when a followed by b freely cancels.
bool cancels(Generator a, Generator b);
std::string format_generator(Generator g);

class BraidWord {
 public:
  // Throws Error when a letter is out of range or not allowed by the kind.
  BraidWord(GroupKind kind, int n, std::vector<Generator> letters = {});

  GroupKind kind() const { return kind_; }
  int strands() const { return n_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  GroupKind kind_;
  int n_;
  std::vector<Generator> letters_;
};

// A bijection of {1..n}. Composition follows word order: a.then(b) applies a
// first.
class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

BraidWord parse_word(std::string_view text, GroupKind kind, int n);
std::string format_word(const BraidWord& w);
std::string format_letters(std::span<const Generator> letters);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
std::vector<Generator> free_reduce(std::span<const Generator> letters);

Permutation permutation_image(const BraidWord& w);
Permutation permutation_image(std::span<const Generator> letters, int n);

// Uniform over the letters the kind admits on n strands (n >= 2).
BraidWord random_word(GroupKind kind, int n, std::size_t length, std::mt19937& rng);

}  // namespace vbraid
