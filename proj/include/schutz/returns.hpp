#pragma once

#include "schutz/matrix.hpp"
#include "schutz/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schutz {

/// uv ∈ L(φ), φⁿ(u) ends with u, φⁿ(v) starts with v, n least.
struct Connection {
  Word u;
  Word v;
  unsigned order = 0;

  bool operator==(const Connection&) const = default;
};

/// Least n ≥ 1 with φⁿ(u) ∈ A*u and φⁿ(v) ∈ vA*, or nothing. Does not test
/// uv ∈ L(φ).
std::optional<unsigned> connection_order(const Substitution& s, std::span<const Letter> u,
                                         std::span<const Letter> v);

/// All connections with 1 ≤ |u|, |v| ≤ max_word_len, sorted by |u|+|v|, then u,
/// then v. Throws PreconditionError on non-primitive input.
std::vector<Connection> find_connections(const Substitution& s, std::size_t max_word_len);

/// Throws PreconditionError unless c is a connection of s with its exact order.
void validate_connection(const Substitution& s, const Connection& c);

/// The right-infinite limit of ψᵏ(v) where ψ(v) = v·t with t non-empty,
/// produced letter by letter as v · t · ψ(t) · ψ²(t) · ... in memory
/// proportional to the recursion depth.
class RayStream {
 public:
  RayStream(Substitution psi, Word v);

  Letter next();
  std::uint64_t emitted() const { return emitted_; }

 private:
  struct Frame {
    const Word* word;
    std::size_t index;
    unsigned depth;
  };

  void start_block();

  Substitution psi_;
  Word v_;
  Word tail_;
  std::size_t v_index_ = 0;
  unsigned block_depth_ = 0;
  std::vector<Frame> stack_;
  std::uint64_t emitted_ = 0;
};

struct ReturnData {
  Connection connection;
  /// Indexed by the derived alphabet, in leftmost-occurrence order.
  std::vector<Word> returns;
  /// φⁿ∘θ = θ∘derived with θ(i) = returns[i].
  Substitution derived;
  /// Letters of u·x streamed to confirm the ordering; 0 when skipped.
  std::uint64_t streamed_letters = 0;
  bool stream_confirmed = false;
};

/// Letters of the ray stream examined when confirming return-word order.
/// Overridden by the environment variable SCHUTZ_RAY_LIMIT.
std::uint64_t ray_stream_limit();

/// Return words of a connection in leftmost-occurrence order, with the
/// derived substitution found by closing r ↦ φⁿ(r) over its decompositions.
ReturnData return_words(const Substitution& s, const Connection& c);

/// return_words plus post-hoc checks: the conjugacy identity on every derived
/// letter and primitivity of the derived substitution.
ReturnData return_substitution(const Substitution& s, const Connection& c);

/// θ applied to a word over the derived alphabet.
Word theta_apply(const ReturnData& rd, std::span<const Letter> w);

/// |A| × |returns| incidence matrix of θ.
IntMatrix theta_incidence(const ReturnData& rd, std::size_t alphabet_size);

/// The decomposition of w over the return words, cut at occurrences of uv in
/// u·w·v; nothing if a piece is not a return word or w does not split.
std::optional<Word> decompose_over_returns(const ReturnData& rd, std::span<const Letter> w);

}  // namespace schutz
