#pragma once

#include "schutz/finite_group.hpp"
#include "schutz/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schutz {

/// A map A → H, one group element per letter.
using Tuple = std::vector<FiniteGroup::Element>;

/// Image of w under the homomorphism F(A) → H extending t.
FiniteGroup::Element evaluate(const FiniteGroup& h, const Tuple& t, const GroupWord& w);
FiniteGroup::Element evaluate(const FiniteGroup& h, const Tuple& t, std::span<const Letter> w);

/// a ↦ t̂(e(a)). Right action: action_step(compose(e1, e2), t) equals
/// action_step(e2, action_step(e1, t)).
Tuple action_step(const FreeGroupEndo& e, const Tuple& t, const FiniteGroup& h);

struct QuotientCertificate {
  Tuple tuple;
  unsigned period = 1;
  /// witnesses[i] is a positive word over A whose value under the tuple is
  /// the i-th standard generator of H.
  std::vector<Word> witnesses;
};

/// t^{eᵏ} = t and {t(a)} generates H, through the witness words when present
/// and by closure otherwise.
bool certificate_check(const FreeGroupEndo& e, const QuotientCertificate& c, const FiniteGroup& h);

struct SearchBudget {
  /// Total action steps allowed outside exhaustive mode.
  std::uint64_t max_steps = std::uint64_t{1} << 22;
  /// Exhaustive when |H|^|A| is at most this.
  std::uint64_t exhaustive_threshold = std::uint64_t{1} << 24;
  /// Fail instead of sampling when the exhaustive range is exceeded.
  bool require_exhaustive = false;
  /// Seed for tuple sampling in groups too large to enumerate.
  std::uint64_t rng_seed = 0x5eed;
};

struct QuotientResult {
  enum class Kind { Found, NotFound, Exhausted };
  Kind kind = Kind::NotFound;
  std::optional<QuotientCertificate> certificate;
  bool exhaustive = false;
  std::uint64_t tuples_visited = 0;
  std::uint64_t cycles_examined = 0;
  std::uint64_t steps = 0;
};

const char* to_string(QuotientResult::Kind k);

/// Searches periodic points of t ↦ t^e that generate H. Exhausted is a proof
/// that none exists; NotFound only reports the budget.
QuotientResult quotient_search(const FreeGroupEndo& e, const FiniteGroup& h, const SearchBudget& budget = {});

}  // namespace schutz
