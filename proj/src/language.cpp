#include "schutz/language.hpp"

#include "schutz/error.hpp"
#include "schutz/matrix.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace schutz {

FactorSet::FactorSet(std::size_t max_length, std::vector<std::set<Word>> by_length)
    : max_length_(max_length), by_length_(std::move(by_length)) {
  if (by_length_.size() != max_length_) throw InvariantError("FactorSet: one set per length expected");
}

const std::set<Word>& FactorSet::of_length(std::size_t n) const {
  if (n == 0 || n > max_length_) throw PreconditionError("FactorSet: length out of range");
  return by_length_[n - 1];
}

bool FactorSet::contains(std::span<const Letter> w) const {
  if (w.empty()) return true;
  if (w.size() > max_length_) throw PreconditionError("FactorSet: word longer than the enumerated range");
  return by_length_[w.size() - 1].count(Word(w.begin(), w.end())) > 0;
}

std::size_t FactorSet::size() const {
  std::size_t total = 0;
  for (const auto& s : by_length_) total += s.size();
  return total;
}

bool is_primitive_substitution(const Substitution& s) { return is_primitive_matrix(incidence_matrix(s)); }

namespace {

void insert_windows(std::set<Word>& into, std::span<const Letter> w, std::size_t n, std::deque<Word>* fresh) {
  if (w.size() < n) return;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    auto [it, added] = into.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                                    w.begin() + static_cast<std::ptrdiff_t>(i + n));
    if (added && fresh) fresh->push_back(*it);
  }
}

// Length-n factors of L(φ). Seeded with φᵏ(0) for the least k reaching
// length n, then closed under w ↦ length-n factors of φ(w). Every length-n
// factor of φʲ⁺¹(0) lies inside φ(y) for a length-n factor y of φʲ(0), so
// the closure contains all of them, and primitivity makes those all of L(φ).
std::set<Word> factors_of_length(const Substitution& s, std::size_t n) {
  Word seed{0};
  while (seed.size() < n) seed = s.apply(seed);
  std::set<Word> found;
  std::deque<Word> fresh;
  insert_windows(found, seed, n, &fresh);
  while (!fresh.empty()) {
    Word w = std::move(fresh.front());
    fresh.pop_front();
    insert_windows(found, s.apply(w), n, &fresh);
  }
  return found;
}

// A word of L(φ) containing every factor of length ≤ n: φʲ(0) holds every
// length-2 factor cd, and once every |φᵏ(c)| ≥ n−1 each length-n factor sits
// inside some φᵏ(cd).
Word covering_word(const Substitution& s, std::size_t n) {
  const std::set<Word> pairs = factors_of_length(s, 2);
  Word w{0};
  const auto holds_all_pairs = [&](const Word& x) {
    std::set<Word> seen;
    for (std::size_t i = 0; i + 2 <= x.size(); ++i) seen.insert({x[i], x[i + 1]});
    return seen.size() == pairs.size();
  };
  while (!holds_all_pairs(w)) w = s.apply(w);
  Substitution grown = s;
  const auto shortest = [](const Substitution& t) {
    std::size_t m = SIZE_MAX;
    for (const Word& x : t.images()) m = std::min(m, x.size());
    return m;
  };
  while (shortest(grown) + 1 < n) grown = compose(s, grown);
  return grown.apply(w);
}

// p(1..n) as distinct-factor counts of one covering word, via a suffix
// automaton: a state of length len with suffix link of length lk stands for
// one factor of each length in (lk, len].
std::vector<std::size_t> complexity_profile(const Substitution& s, std::size_t n) {
  const Word text = covering_word(s, n);
  const std::size_t k = s.size();
  std::vector<std::int64_t> len{0}, link{-1};
  std::vector<std::int64_t> next(k, -1);
  std::int64_t last = 0;
  const auto add_state = [&](std::int64_t l, std::int64_t lk) {
    len.push_back(l);
    link.push_back(lk);
    next.insert(next.end(), k, -1);
    return static_cast<std::int64_t>(len.size() - 1);
  };
  for (Letter c : text) {
    const std::int64_t cur = add_state(len[last] + 1, 0);
    std::int64_t p = last;
    while (p != -1 && next[p * k + c] == -1) {
      next[p * k + c] = cur;
      p = link[p];
    }
    if (p != -1) {
      const std::int64_t q = next[p * k + c];
      if (len[p] + 1 == len[q]) {
        link[cur] = q;
      } else {
        const std::int64_t clone = add_state(len[p] + 1, link[q]);
        std::copy_n(next.begin() + q * k, k, next.begin() + clone * k);
        while (p != -1 && next[p * k + c] == q) {
          next[p * k + c] = clone;
          p = link[p];
        }
        link[q] = link[cur] = clone;
      }
    }
    last = cur;
  }
  std::vector<std::int64_t> diff(n + 2, 0);
  for (std::size_t v = 1; v < len.size(); ++v) {
    const auto lo = static_cast<std::size_t>(len[link[v]] + 1);
    const auto hi = std::min(static_cast<std::size_t>(len[v]), n);
    if (lo > hi) continue;
    ++diff[lo];
    --diff[hi + 1];
  }
  std::vector<std::size_t> profile(n + 1, 0);
  std::int64_t acc = 0;
  for (std::size_t m = 1; m <= n; ++m) profile[m] = static_cast<std::size_t>(acc += diff[m]);
  return profile;
}

bool contains_window(const Word& text, std::span<const Letter> w) {
  return std::search(text.begin(), text.end(), std::boyer_moore_horspool_searcher(w.begin(), w.end())) != text.end();
}

}  // namespace

FactorSet factors_up_to(const Substitution& s, std::size_t n) {
  if (n == 0) throw PreconditionError("factors_up_to: length must be positive");
  if (!is_primitive_substitution(s)) throw PreconditionError("factors_up_to: substitution is not primitive");
  std::vector<std::set<Word>> by_length(n);
  by_length[n - 1] = factors_of_length(s, n);
  for (const Word& w : by_length[n - 1])
    for (std::size_t len = 1; len < n; ++len) insert_windows(by_length[len - 1], w, len, nullptr);
  return FactorSet(n, std::move(by_length));
}

std::size_t complexity(const Substitution& s, std::size_t n) {
  if (!is_primitive_substitution(s)) throw PreconditionError("complexity: substitution is not primitive");
  if (n == 0) return 1;
  return factors_of_length(s, n).size();
}

bool in_language(const Substitution& s, std::span<const Letter> w) {
  if (!is_primitive_substitution(s)) throw PreconditionError("in_language: substitution is not primitive");
  if (w.empty()) return true;
  for (Letter a : w)
    if (!s.alphabet().contains(a)) return false;
  return contains_window(covering_word(s, w.size()), w);
}

std::size_t default_periodicity_bound(const Substitution& s) {
  const std::size_t l = s.max_image_length();
  return s.size() * l * l + l;
}

namespace {

// A periodic minimal shift with least period u has φ(u) conjugate to uᵐ, so
// M·|u| = m·|u| with |u| a positive count vector: the Perron root is an
// integer m ≤ max |φ(a)|. Without such a root the input is aperiodic.
bool has_integer_perron_candidate(const Substitution& s) {
  const IntPoly chi = char_poly(incidence_matrix(s));
  for (std::size_t m = 1; m <= s.max_image_length(); ++m)
    if (chi(BigInt(m)) == 0) return true;
  return false;
}

}  // namespace

Periodicity classify_periodicity(const Substitution& s, std::optional<std::size_t> bound) {
  if (!is_primitive_substitution(s)) throw PreconditionError("classify_periodicity: substitution is not primitive");
  const std::size_t decisive = default_periodicity_bound(s);
  Periodicity result;
  result.bound = bound.value_or(decisive);
  if (result.bound == 0) throw PreconditionError("classify_periodicity: bound must be positive");
  if (!has_integer_perron_candidate(s)) {
    result.kind = Periodicity::Kind::Aperiodic;
    return result;
  }
  // Doubling keeps the covering word short when a periodic witness is small.
  for (std::size_t scan = std::min<std::size_t>(result.bound, 16);; scan = std::min(2 * scan, result.bound)) {
    const std::vector<std::size_t> profile = complexity_profile(s, scan);
    for (std::size_t n = 1; n <= scan; ++n) {
      const std::size_t pn = profile[n];
      if (pn > n) continue;
      // p(n) ≤ n forces p(j) = p(j+1) for some j < n (or |A| = 1), after
      // which p is constant and equal to the least period.
      result.kind = Periodicity::Kind::Periodic;
      result.witness_length = n;
      result.period = *factors_of_length(s, pn).begin();
      return result;
    }
    if (scan == result.bound) break;
  }
  result.kind = result.bound >= decisive ? Periodicity::Kind::Aperiodic : Periodicity::Kind::Unknown;
  return result;
}

const char* to_string(Periodicity::Kind k) {
  switch (k) {
    case Periodicity::Kind::Periodic: return "periodic";
    case Periodicity::Kind::Aperiodic: return "aperiodic";
    case Periodicity::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

StructuralFlags structural_flags(const Substitution& s) {
  StructuralFlags flags;
  const std::size_t n = s.size();
  std::vector<Letter> first(n), last(n);
  for (Letter c = 0; c < n; ++c) {
    first[c] = s.image(c).front();
    last[c] = s.image(c).back();
  }
  // first letter of φᵏ(c) is firstᵏ(c); both maps become constant within |A|
  // steps if they ever do.
  std::vector<Letter> f(n), l(n);
  for (Letter c = 0; c < n; ++c) f[c] = l[c] = c;
  const auto constant = [](const std::vector<Letter>& m) {
    return std::all_of(m.begin(), m.end(), [&](Letter x) { return x == m.front(); });
  };
  for (unsigned k = 1; k <= 2 * n; ++k) {
    for (Letter c = 0; c < n; ++c) {
      f[c] = first[f[c]];
      l[c] = last[l[c]];
    }
    if (constant(f) && constant(l)) {
      flags.proper = true;
      flags.proper_power = k;
      flags.proper_first = f.front();
      flags.proper_last = l.front();
      break;
    }
  }
  const std::size_t len0 = s.image(0).size();
  if (std::all_of(s.images().begin(), s.images().end(), [&](const Word& w) { return w.size() == len0; }))
    flags.constant_length = len0;
  return flags;
}

}  // namespace schutz
