#include "schutz/quotient.hpp"

#include "schutz/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace schutz {

FiniteGroup::Element evaluate(const FiniteGroup& h, const Tuple& t, const GroupWord& w) {
  FiniteGroup::Element acc = h.identity();
  for (const SignedLetter& x : w.letters()) {
    const FiniteGroup::Element g = t.at(x.letter);
    acc = h.multiply(acc, x.exponent > 0 ? g : h.inverse(g));
  }
  return acc;
}

FiniteGroup::Element evaluate(const FiniteGroup& h, const Tuple& t, std::span<const Letter> w) {
  FiniteGroup::Element acc = h.identity();
  for (Letter a : w) acc = h.multiply(acc, t.at(a));
  return acc;
}

Tuple action_step(const FreeGroupEndo& e, const Tuple& t, const FiniteGroup& h) {
  if (t.size() != e.size()) throw PreconditionError("action_step: tuple and alphabet sizes differ");
  Tuple out(t.size());
  for (Letter a = 0; a < e.size(); ++a) out[a] = evaluate(h, t, e.image(a));
  return out;
}

namespace {

Tuple iterate_action(const FreeGroupEndo& e, Tuple t, unsigned k, const FiniteGroup& h) {
  for (unsigned i = 0; i < k; ++i) t = action_step(e, t, h);
  return t;
}

// Witness words for the standard generators, or nothing if t does not
// generate h.
std::optional<std::vector<Word>> generation_witnesses(const FiniteGroup& h, const Tuple& t) {
  const Closure c = generated_subgroup(h, t);
  if (c.elements.size() != h.order()) return std::nullopt;
  std::vector<Word> words;
  for (FiniteGroup::Element g : h.standard_generators()) {
    const auto w = c.word_for(g);
    words.emplace_back(w.begin(), w.end());
  }
  return words;
}

}  // namespace

bool certificate_check(const FreeGroupEndo& e, const QuotientCertificate& c, const FiniteGroup& h) {
  if (c.tuple.size() != e.size() || c.period == 0) return false;
  if (iterate_action(e, c.tuple, c.period, h) != c.tuple) return false;
  const std::vector<FiniteGroup::Element> gens = h.standard_generators();
  if (!c.witnesses.empty()) {
    if (c.witnesses.size() != gens.size()) return false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Letter a : c.witnesses[i])
        if (a >= e.size()) return false;
      if (evaluate(h, c.tuple, c.witnesses[i]) != gens[i]) return false;
    }
    return true;
  }
  if (gens.empty()) return true;
  return generates(h, c.tuple);
}

const char* to_string(QuotientResult::Kind k) {
  switch (k) {
    case QuotientResult::Kind::Found: return "found";
    case QuotientResult::Kind::NotFound: return "not found";
    case QuotientResult::Kind::Exhausted: return "exhausted";
  }
  return "not found";
}

namespace {

// Elements ranked by decreasing order, ties by id; tuples are mixed-radix
// numbers over ranks with letter 0 most significant.
struct RankedElements {
  std::vector<FiniteGroup::Element> by_rank;
  std::unordered_map<FiniteGroup::Element, std::uint64_t> rank;

  explicit RankedElements(const FiniteGroup& h) {
    std::vector<std::pair<std::uint64_t, FiniteGroup::Element>> keyed;
    for (FiniteGroup::Element x : h.elements()) keyed.emplace_back(h.element_order(x), x);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [ord, x] : keyed) {
      rank.emplace(x, by_rank.size());
      by_rank.push_back(x);
    }
  }

  std::uint64_t encode(const Tuple& t) const {
    std::uint64_t idx = 0;
    for (FiniteGroup::Element x : t) idx = idx * by_rank.size() + rank.at(x);
    return idx;
  }

  Tuple decode(std::uint64_t idx, std::size_t letters) const {
    Tuple t(letters);
    for (std::size_t i = letters; i-- > 0;) {
      t[i] = by_rank[idx % by_rank.size()];
      idx /= by_rank.size();
    }
    return t;
  }
};

// |H|^|A| when it does not exceed cap, else nothing.
std::optional<std::uint64_t> tuple_count(std::uint64_t order, std::size_t letters, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < letters; ++i) {
    if (order != 0 && n > cap / order) return std::nullopt;
    n *= order;
  }
  if (n > cap) return std::nullopt;
  return n;
}

QuotientResult exhaustive_search(const FreeGroupEndo& e, const FiniteGroup& h, std::uint64_t total) {
  QuotientResult res;
  res.exhaustive = true;
  const RankedElements ranked(h);
  const std::size_t letters = e.size();
  // 0 unvisited, 1 on the current path, 2 settled.
  std::vector<std::uint8_t> colour(total, 0);
  std::vector<std::uint64_t> path;
  const auto step = [&](std::uint64_t idx) {
    ++res.steps;
    return ranked.encode(action_step(e, ranked.decode(idx, letters), h));
  };
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (colour[seed] != 0) continue;
    path.clear();
    std::uint64_t cur = seed;
    while (colour[cur] == 0) {
      colour[cur] = 1;
      path.push_back(cur);
      cur = step(cur);
    }
    if (colour[cur] == 1) {
      // A new cycle through cur. Its members generate the same subgroup.
      ++res.cycles_examined;
      unsigned period = 1;
      for (std::uint64_t x = step(cur); x != cur; x = step(x)) ++period;
      const Tuple t = ranked.decode(cur, letters);
      if (auto witnesses = generation_witnesses(h, t)) {
        res.kind = QuotientResult::Kind::Found;
        res.certificate = QuotientCertificate{t, period, std::move(*witnesses)};
        res.tuples_visited = static_cast<std::uint64_t>(
            std::count_if(colour.begin(), colour.end(), [](std::uint8_t c) { return c != 0; }));
        return res;
      }
    }
    for (std::uint64_t x : path) colour[x] = 2;
  }
  res.kind = QuotientResult::Kind::Exhausted;
  res.tuples_visited = total;
  return res;
}

QuotientResult sampled_search(const FreeGroupEndo& e, const FiniteGroup& h, const SearchBudget& budget) {
  QuotientResult res;
  const std::size_t letters = e.size();
  std::optional<RankedElements> ranked;
  if (h.enumerable()) ranked.emplace(h);
  std::mt19937_64 rng(budget.rng_seed);
  std::vector<std::uint64_t> digits(letters, 0);
  bool digits_done = false;
  std::set<Tuple> cycles_seen;

  const auto next_seed = [&]() -> std::optional<Tuple> {
    if (ranked) {
      if (digits_done) return std::nullopt;
      Tuple t(letters);
      for (std::size_t i = 0; i < letters; ++i) t[i] = ranked->by_rank[digits[i]];
      std::size_t i = letters;
      while (i-- > 0) {
        if (++digits[i] < ranked->by_rank.size()) break;
        digits[i] = 0;
        if (i == 0) digits_done = true;
      }
      return t;
    }
    Tuple t(letters);
    for (auto& x : t) x = h.random_element(rng);
    return t;
  };
  const auto f = [&](const Tuple& t) {
    ++res.steps;
    return action_step(e, t, h);
  };

  while (res.steps < budget.max_steps) {
    auto seed = next_seed();
    if (!seed) break;
    ++res.tuples_visited;
    // Brent: finds the cycle length and a point on the cycle.
    std::uint64_t power = 1, lambda = 1;
    Tuple tortoise = *seed, hare = f(*seed);
    while (tortoise != hare && res.steps < budget.max_steps) {
      if (power == lambda) {
        tortoise = hare;
        power *= 2;
        lambda = 0;
      }
      hare = f(hare);
      ++lambda;
    }
    if (tortoise != hare) break;
    // Canonical representative: least tuple on the cycle.
    Tuple least = hare;
    for (Tuple x = f(hare); x != hare; x = f(x)) least = std::min(least, x);
    if (!cycles_seen.insert(least).second) continue;
    ++res.cycles_examined;
    if (!h.enumerable()) continue;
    if (auto witnesses = generation_witnesses(h, least)) {
      res.kind = QuotientResult::Kind::Found;
      res.certificate = QuotientCertificate{least, static_cast<unsigned>(lambda), std::move(*witnesses)};
      return res;
    }
  }
  res.kind = QuotientResult::Kind::NotFound;
  return res;
}

}  // namespace

QuotientResult quotient_search(const FreeGroupEndo& e, const FiniteGroup& h, const SearchBudget& budget) {
  const auto total = h.enumerable() ? tuple_count(h.order(), e.size(), budget.exhaustive_threshold) : std::nullopt;
  if (total) return exhaustive_search(e, h, *total);
  if (budget.require_exhaustive)
    throw PreconditionError("exhaustive search needs |H|^|A| <= " + std::to_string(budget.exhaustive_threshold));
  return sampled_search(e, h, budget);
}

}  // namespace schutz
