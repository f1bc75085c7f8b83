#pragma once

// Independent reference implementations used to check the library.

#include "schutz/matrix.hpp"
#include "schutz/returns.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using schutz::BigInt;
using schutz::IntMatrix;
using schutz::Letter;
using schutz::Substitution;
using schutz::Word;

using Rng = std::mt19937_64;

/// Cofactor expansion along the first row.
BigInt laplace_det(const std::vector<std::vector<BigInt>>& m);
/// det(t·I − M) by cofactor expansion.
BigInt char_poly_at(const IntMatrix& m, long t);
/// Gaussian elimination over Z/p with machine integers.
std::size_t rank_mod_p_int64(const IntMatrix& m, std::int64_t p);
/// Plain product of int64 matrices.
std::vector<std::vector<std::int64_t>> to_int64(const IntMatrix& m);

/// Incidence counts taken directly from the images.
IntMatrix count_matrix(const Substitution& s);

/// Return words to (u, v) read off a long word of the language: pieces
/// between consecutive occurrences of uv, shifted by |u|.
std::set<Word> scanned_returns(const Substitution& s, const Word& u, const Word& v, std::size_t min_length);

/// Every word over `words` of at most max_factors factors has a single
/// factorisation.
bool unique_factorisation(const std::vector<Word>& words, std::size_t max_factors);

IntMatrix random_matrix(Rng& rng, std::size_t d, long lo, long hi);
/// Random substitution; images of length 1..max_len over k letters.
Substitution random_substitution(Rng& rng, std::size_t k, std::size_t max_len);
std::vector<BigInt> primes_up_to(long n);

}  // namespace oracle
