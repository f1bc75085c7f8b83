#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "schutz/error.hpp"
#include "schutz/language.hpp"
#include "schutz/returns.hpp"

#include <algorithm>
#include <map>

using namespace schutz;
using helpers::W;

namespace {

Connection connection_of(const Substitution& s, const Word& u, const Word& v) {
  const auto n = connection_order(s, u, v);
  REQUIRE(n.has_value());
  return {u, v, *n};
}

bool contains_connection(const std::vector<Connection>& cs, const Word& u, const Word& v, unsigned order) {
  return std::any_of(cs.begin(), cs.end(), [&](const Connection& c) { return c.u == u && c.v == v && c.order == order; });
}

// Distinct return words in order of first appearance in u·φ^{nl}(v).
std::vector<Word> naive_returns(const Substitution& s, const Connection& c, unsigned l) {
  Word w = c.u;
  const Word tail = apply_substitution(s, c.v, c.order * l);
  w.insert(w.end(), tail.begin(), tail.end());
  Word uv = c.u;
  uv.insert(uv.end(), c.v.begin(), c.v.end());
  const std::vector<std::size_t> hits = occurrences(w, uv);
  std::vector<Word> out;
  for (std::size_t k = 0; k + 1 < hits.size(); ++k) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(hits[k] + c.u.size()),
           w.begin() + static_cast<std::ptrdiff_t>(hits[k + 1] + c.u.size()));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

// All words over the derived alphabet of length ≤ max_len.
std::vector<Word> derived_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out, layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Letter a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(x);
        out.push_back(x);
      }
    layer = std::move(next);
  }
  return out;
}

void check_return_data(const Substitution& s, const ReturnData& rd) {
  const Substitution psi = power(s, rd.connection.order);
  const std::size_t r = rd.returns.size();
  // Conjugacy identity on every derived word of length ≤ 3.
  for (const Word& w : derived_words(r, r > 6 ? 2 : 3))
    CHECK(apply_substitution(psi, theta_apply(rd, w), 1) == theta_apply(rd, rd.derived.apply(w)));
  // Matrix intertwining.
  const IntMatrix mt = theta_incidence(rd, s.size());
  CHECK(IntMatrix(incidence_matrix(psi) * mt) == IntMatrix(mt * incidence_matrix(rd.derived)));
  // Each return word r has exactly two occurrences of uv in u·r·v, at both ends.
  Word uv = rd.connection.u;
  uv.insert(uv.end(), rd.connection.v.begin(), rd.connection.v.end());
  for (const Word& ret : rd.returns) {
    Word urv = rd.connection.u;
    urv.insert(urv.end(), ret.begin(), ret.end());
    urv.insert(urv.end(), rd.connection.v.begin(), rd.connection.v.end());
    CHECK(in_language(s, urv));
    CHECK(occurrences(urv, uv) == std::vector<std::size_t>{0, ret.size()});
  }
  CHECK(is_primitive_substitution(rd.derived));
  CHECK(rd.stream_confirmed);
}

}  // namespace

TEST_SUITE("returns") {
  TEST_CASE("find_connections") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    CHECK(contains_connection(find_connections(tau, 1), W("0"), W("1"), 2));
    const Substitution ted = parse_substitution(helpers::tedious_text());
    CHECK(contains_connection(find_connections(ted, 1), W("2"), W("3"), 12));
    const Substitution neg = parse_substitution(helpers::negative_text());
    CHECK(contains_connection(find_connections(neg, 1), W("0"), W("1"), 1));
    const auto all = find_connections(tau, 2);
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(all[i - 1].u.size() + all[i - 1].v.size() <= all[i].u.size() + all[i].v.size());
    for (const Connection& c : all) CHECK_NOTHROW(validate_connection(tau, c));
    CHECK_THROWS_AS(find_connections(Substitution({W("01"), W("1")}), 1), PreconditionError);
  }

  TEST_CASE("invalid connections are rejected") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    CHECK_THROWS_AS(validate_connection(tau, {W("000"), W("1"), 1}), PreconditionError);
    CHECK_THROWS_AS(validate_connection(tau, {W("0"), W("1"), 1}), PreconditionError);
    CHECK_THROWS_AS(return_words(tau, {W("0"), W("1"), 3}), PreconditionError);
  }

  TEST_CASE("return words of the examples") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    CHECK(return_words(tau, connection_of(tau, W("0"), W("1"))).returns.size() == 4);
    const Substitution neg = parse_substitution(helpers::negative_text());
    CHECK(return_words(neg, connection_of(neg, W("0"), W("1"))).returns.size() == 2);
    const Substitution ted = parse_substitution(helpers::tedious_text());
    const ReturnData rd = return_words(ted, connection_of(ted, W("2"), W("3")));
    CHECK(rd.returns.size() == 12);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const Word& w : rd.returns) {
      lo = std::min(lo, w.size());
      hi = std::max(hi, w.size());
    }
    CHECK(lo == 4);
    CHECK(hi == 274);
  }

  TEST_CASE("return substitutions of the examples") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    const ReturnData morse = return_substitution(tau, connection_of(tau, W("0"), W("1")));
    CHECK(morse.derived.images() == std::vector<Word>{W("0123"), W("013"), W("02123"), W("0213")});
    const Substitution neg = parse_substitution(helpers::negative_text());
    const ReturnData negative = return_substitution(neg, connection_of(neg, W("0"), W("1")));
    CHECK(negative.derived.images() == std::vector<Word>{W("0011"), W("01")});
    const Substitution weak = parse_substitution(helpers::weaktest_text());
    const Connection wc = connection_of(weak, W("0"), W("0"));
    CHECK(wc.order == 2);
    const ReturnData weaktest = return_substitution(weak, wc);
    CHECK(weaktest.derived.images() ==
          std::vector<Word>{W("0012100"), W("0012101221012100"), W("0012101222221012100")});
    // The derived substitution round-trips through the text format.
    CHECK(parse_substitution(format_substitution(weaktest.derived)) == weaktest.derived);
  }

  TEST_CASE("naive scanner agrees for l = 1, 2, 3") {
    const std::vector<Substitution> inputs = {
        parse_substitution(helpers::morse_text()), parse_substitution(helpers::negative_text()),
        parse_substitution(helpers::weaktest_text()), parse_substitution(helpers::cyclo_text()),
        helpers::almeida(2, 1), helpers::almeida(1, 3)};
    for (const Substitution& s : inputs) {
      for (const Connection& c : find_connections(s, 1)) {
        const ReturnData rd = return_words(s, c);
        std::vector<Word> last;
        for (unsigned l = 1; l <= 3; ++l) {
          Word probe = c.v;
          if (apply_substitution(s, probe, c.order * l).size() > 3'000'000) break;
          last = naive_returns(s, c, l);
          REQUIRE(last.size() <= rd.returns.size());
          CHECK(std::equal(last.begin(), last.end(), rd.returns.begin()));
        }
        CHECK(last.size() == rd.returns.size());
        // The set is also what a long word of the language shows.
        std::set<Word> scanned = oracle::scanned_returns(s, c.u, c.v, 400000);
        CHECK(scanned == std::set<Word>(rd.returns.begin(), rd.returns.end()));
      }
    }
  }

  TEST_CASE("return-substitution invariants") {
    const std::vector<Substitution> inputs = {
        parse_substitution(helpers::morse_text()), parse_substitution(helpers::negative_text()),
        parse_substitution(helpers::weaktest_text()), parse_substitution(helpers::cyclo_text()),
        helpers::almeida(0, 2), helpers::almeida(4, 1)};
    for (const Substitution& s : inputs)
      for (const Connection& c : find_connections(s, 2)) check_return_data(s, return_substitution(s, c));
    const Substitution ted = parse_substitution(helpers::tedious_text());
    check_return_data(ted, return_substitution(ted, connection_of(ted, W("2"), W("3"))));
  }

  TEST_CASE("return words form a code") {
    const std::vector<Substitution> inputs = {
        parse_substitution(helpers::morse_text()), parse_substitution(helpers::negative_text()),
        parse_substitution(helpers::weaktest_text()), parse_substitution(helpers::cyclo_text())};
    for (const Substitution& s : inputs) {
      for (const Connection& c : find_connections(s, 1)) {
        const ReturnData rd = return_words(s, c);
        std::size_t longest = 0;
        for (const Word& w : rd.returns) longest = std::max(longest, w.size());
        std::size_t shortest = SIZE_MAX;
        for (const Word& w : rd.returns) shortest = std::min(shortest, w.size());
        // Sequences of total length ≤ 2·longest use at most this many factors.
        const std::size_t factors = std::min<std::size_t>(2 * longest / shortest, 6);
        CHECK(oracle::unique_factorisation(rd.returns, factors));
        // Decomposition over the returns inverts θ.
        const Word sample = theta_apply(rd, W("0"));
        CHECK(decompose_over_returns(rd, sample) == std::optional<Word>(W("0")));
      }
    }
  }

  TEST_CASE("shared middle letters give equal return polynomials") {
    const std::vector<Substitution> inputs = {
        parse_substitution(helpers::morse_text()), parse_substitution(helpers::negative_text()),
        parse_substitution(helpers::cyclo_text()), parse_substitution(helpers::weaktest_text())};
    for (const Substitution& s : inputs) {
      std::map<std::pair<Letter, Letter>, IntPoly> seen;
      for (const Connection& c : find_connections(s, 2)) {
        const ReturnData rd = return_substitution(s, c);
        const IntPoly rev = reciprocal(char_poly(incidence_matrix(rd.derived)));
        const auto key = std::make_pair(c.u.back(), c.v.front());
        const auto [it, fresh] = seen.emplace(key, rev);
        if (!fresh) CHECK(with_positive_leading(it->second) == with_positive_leading(rev));
      }
    }
  }

  TEST_CASE("ray stream") {
    // ψ = τ², v = 1: the ray is the fixed point of ψ starting with 1.
    const Substitution tau = parse_substitution(helpers::morse_text());
    const Substitution psi = power(tau, 2);
    RayStream ray(psi, W("1"));
    const Word expected = apply_substitution(psi, W("1"), 4);
    Word got;
    for (std::size_t i = 0; i < expected.size(); ++i) got.push_back(ray.next());
    CHECK(got == expected);
    CHECK(ray.emitted() == expected.size());
  }
}
