#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schutz {

/// Letters are dense indices 0..size-1 into an Alphabet.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// A finite alphabet. Display names are metadata only; every algorithm works
/// on letter indices.
class Alphabet {
 public:
  /// Letters named "0", "1", ..., "size-1".
  explicit Alphabet(std::size_t size);
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  bool contains(Letter a) const { return a < names_.size(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A non-erasing endomorphism of the free monoid A*.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);
  /// Default letter names.
  explicit Substitution(std::vector<Word> images);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }
  std::size_t max_image_length() const;

  /// One application; callers wanting φⁿ use apply_substitution.
  Word apply(std::span<const Letter> w) const;

  bool operator==(const Substitution& other) const { return images_ == other.images_; }

 private:
  void validate() const;

  Alphabet alphabet_;
  std::vector<Word> images_;
};

/// φⁿ(w); n = 0 returns w.
Word apply_substitution(const Substitution& s, std::span<const Letter> w, unsigned n);

/// Composite a ↦ outer(inner(a)).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// φᵏ for k ≥ 1.
Substitution power(const Substitution& s, unsigned k);

/// Number of (possibly overlapping) occurrences of z in w. Throws on empty z.
std::size_t count_occurrences(std::span<const Letter> w, std::span<const Letter> z);

/// Positions i with w[i, i+|z|) == z, overlapping occurrences included.
std::vector<std::size_t> occurrences(std::span<const Letter> w, std::span<const Letter> z);

bool starts_with(std::span<const Letter> w, std::span<const Letter> prefix);
bool ends_with(std::span<const Letter> w, std::span<const Letter> suffix);

struct SignedLetter {
  Letter letter = 0;
  int exponent = 1;  // +1 or -1

  SignedLetter inverse() const { return {letter, -exponent}; }
  bool operator==(const SignedLetter&) const = default;
};

/// An element of the free group F(A), always stored freely reduced.
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces its argument.
  explicit GroupWord(std::span<const SignedLetter> raw);
  /// The positive word w viewed in F(A).
  static GroupWord positive(std::span<const Letter> w);

  std::span<const SignedLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord& operator*=(const GroupWord& rhs);
  friend GroupWord operator*(GroupWord lhs, const GroupWord& rhs) { return lhs *= rhs; }

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<SignedLetter> letters_;
};

GroupWord reduce_group_word(std::span<const SignedLetter> raw);

/// Sum of the exponents of letter a in w.
long long exponent_sum(const GroupWord& w, Letter a);

/// An endomorphism of the free group F(A), images stored reduced.
class FreeGroupEndo {
 public:
  FreeGroupEndo(Alphabet alphabet, std::vector<GroupWord> images);
  explicit FreeGroupEndo(std::vector<GroupWord> images);
  /// The substitution viewed as an endomorphism of F(A).
  explicit FreeGroupEndo(const Substitution& s);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return images_.size(); }
  const GroupWord& image(Letter a) const { return images_.at(a); }
  const std::vector<GroupWord>& images() const { return images_; }

  GroupWord apply(const GroupWord& w) const;

  bool operator==(const FreeGroupEndo& other) const { return images_ == other.images_; }

 private:
  void validate() const;

  Alphabet alphabet_;
  std::vector<GroupWord> images_;
};

/// The n-fold image φⁿ(w).
GroupWord apply_endomorphism(const FreeGroupEndo& e, const GroupWord& w, unsigned n);

/// Composite a ↦ outer(inner(a)).
FreeGroupEndo compose(const FreeGroupEndo& outer, const FreeGroupEndo& inner);

}  // namespace schutz
