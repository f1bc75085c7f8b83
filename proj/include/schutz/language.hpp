#pragma once

#include "schutz/word.hpp"

#include <optional>
#include <set>

namespace schutz {

/// All factors of L(φ) of length 1..max_length.
class FactorSet {
 public:
  FactorSet(std::size_t max_length, std::vector<std::set<Word>> by_length);

  std::size_t max_length() const { return max_length_; }
  /// Length-n factors in lexicographic order, 1 ≤ n ≤ max_length.
  const std::set<Word>& of_length(std::size_t n) const;
  bool contains(std::span<const Letter> w) const;
  std::size_t size() const;

 private:
  std::size_t max_length_;
  std::vector<std::set<Word>> by_length_;  // index n-1 holds length n
};

bool is_primitive_substitution(const Substitution& s);

/// Throws PreconditionError unless s is primitive.
FactorSet factors_up_to(const Substitution& s, std::size_t n);

/// p(n), the number of length-n factors.
std::size_t complexity(const Substitution& s, std::size_t n);

/// w ∈ L(φ); the empty word is a member.
bool in_language(const Substitution& s, std::span<const Letter> w);

struct Periodicity {
  enum class Kind { Periodic, Aperiodic, Unknown };
  Kind kind = Kind::Unknown;
  /// Lexicographically least rotation of the minimal period; Periodic only.
  Word period;
  std::size_t bound = 0;
  /// Smallest n with p(n) ≤ n; Periodic only.
  std::size_t witness_length = 0;
};

/// |A|·L² + L with L the longest image.
std::size_t default_periodicity_bound(const Substitution& s);

/// Morse–Hedlund scan of p(1..bound). With the default bound the scan is
/// decisive; a user-supplied lower bound may yield Unknown.
Periodicity classify_periodicity(const Substitution& s, std::optional<std::size_t> bound = std::nullopt);

const char* to_string(Periodicity::Kind k);

struct StructuralFlags {
  bool proper = false;
  /// Least k ≥ 1 with every φᵏ(c) sharing first and last letters.
  std::optional<unsigned> proper_power;
  std::optional<Letter> proper_first, proper_last;
  std::optional<std::size_t> constant_length;
};

StructuralFlags structural_flags(const Substitution& s);

}  // namespace schutz
