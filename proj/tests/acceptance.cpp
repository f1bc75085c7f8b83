// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "helpers.hpp"
#include "oracles.hpp"

#include "schutz/analysis.hpp"
#include "schutz/cyclotomic.hpp"
#include "schutz/quotient.hpp"

#include <sys/resource.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace schutz;
using helpers::W;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitMorse = 1.0;
constexpr double kLimitNegative = 1.0;
constexpr double kLimitWeak = 1.0;
constexpr double kLimitTedious = 300.0;
constexpr double kLimitCyclo = 1.0;
constexpr double kLimitAlmeida = 5.0;
constexpr double kLimitPerfect = 120.0;
constexpr long kMemoryLimitKiB = 2L * 1024 * 1024;

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream out;
      out << what << ": got " << show(got) << ", want " << show(want);
      failures.push_back(out.str());
    }
  }

  static std::string show(const IntPoly& p) { return to_string(p); }
  static std::string show(const BigInt& b) { return b.str(); }
  static std::string show(const std::vector<Word>& ws) {
    std::string out;
    for (const Word& w : ws) {
      if (!out.empty()) out += ",";
      for (Letter a : w) out += std::to_string(a);
    }
    return out;
  }
  static std::string show(const std::map<BigInt, std::size_t>& m) {
    std::string out = "{";
    for (const auto& [p, r] : m) out += (out.size() > 1 ? "," : "") + p.str() + "->" + std::to_string(r);
    return out + "}";
  }
  template <typename T>
  static std::string show(const T& x) {
    std::ostringstream out;
    out << x;
    return out.str();
  }
};

std::vector<std::pair<Substitution, ReturnData>> g_return_data;

IntPoly lin(long c0, long c1) { return IntPoly{BigInt(c0), BigInt(c1)}; }

IntPoly power_of(const IntPoly& p, unsigned k) {
  IntPoly r{BigInt(1)};
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

Connection connection_of(const Substitution& s, const Word& u, const Word& v, Outcome& out) {
  const auto n = connection_order(s, u, v);
  out.expect(n.has_value(), "connection expected");
  return {u, v, n.value_or(1)};
}

ConnectionAnalysis analyze(const Substitution& s, const Connection& c) {
  ConnectionAnalysis ca = analyze_connection(s, c);
  g_return_data.emplace_back(s, ca.returns);
  return ca;
}

using BigMap = std::map<BigInt, std::size_t>;

void morse(Outcome& out) {
  const Substitution tau = parse_substitution(helpers::morse_text());
  const Connection c = connection_of(tau, W("0"), W("1"), out);
  out.equal(c.order, 2u, "order of (0,1)");
  const ConnectionAnalysis ca = analyze(tau, c);
  out.equal(ca.returns.derived.images(), std::vector<Word>{W("0123"), W("013"), W("02123"), W("0213")},
            "return substitution");
  out.equal(ca.return_rev, IntPoly{1, -5, 4}, "return reciprocal");
  out.equal(ca.return_rev, lin(-1, 4) * lin(-1, 1), "factored return reciprocal");
  out.equal(ca.xi.xi1, lin(-1, 1), "xi1");
  out.equal(ca.xi.xi2, IntPoly{1}, "xi2");
  out.equal(ca.m, 1L, "m");
  out.equal(m_phi(tau, ca), 1L, "m (prime-wise check)");
  const PronilDescriptor d = pronil_descriptor(ca.returns);
  out.equal(d.generic_rank, 2u, "generic rank");
  out.equal(d.overrides, BigMap{{BigInt(2), 1}}, "overrides");
  const FreenessReport f = freeness_report(tau, c);
  out.expect(f.not_absolutely_free, "not absolutely free");
  out.expect(f.not_relatively_free, "not relatively free");
  out.equal(f.relative_witness.value_or(BigInt(0)), BigInt(2), "relative witness");
}

void negative(Outcome& out) {
  const Substitution s = parse_substitution(helpers::negative_text());
  const Connection c = connection_of(s, W("0"), W("1"), out);
  out.equal(c.order, 1u, "order of (0,1)");
  const ConnectionAnalysis ca = analyze(s, c);
  out.equal(ca.returns.derived.images(), std::vector<Word>{W("0011"), W("01")}, "return substitution");
  // The reciprocal keeps constant term 1, so 3x−1 appears as −3x+1.
  out.equal(with_positive_leading(ca.return_rev), lin(-1, 3), "return reciprocal up to sign");
  if (ca.return_rev != lin(-1, 3)) out.notes.push_back("return reciprocal is " + to_string(ca.return_rev));
  out.equal(ca.xi.xi1, IntPoly{1}, "xi1");
  out.equal(ca.xi.xi2, lin(-1, 1), "xi2");
  out.equal(ca.m, -1L, "m");
  const PronilDescriptor d = pronil_descriptor(ca.returns);
  out.equal(d.generic_rank, 1u, "generic rank");
  out.equal(d.overrides, BigMap{{BigInt(3), 0}}, "overrides");
  out.equal(classification(d), std::string("free pro-G_{nil,π} of rank 1, π = primes ≠ 3"), "classification");
}

void weaktest(Outcome& out) {
  const Substitution s = parse_substitution(helpers::weaktest_text());
  const Connection c = connection_of(s, W("0"), W("0"), out);
  const ConnectionAnalysis ca = analyze(s, c);
  out.equal(ca.returns.derived.images(),
            std::vector<Word>{W("0012100"), W("0012101221012100"), W("0012101222221012100")},
            "return substitution");
  const IntPoly expected = IntPoly{-1} * lin(-1, 1) * IntPoly{1, -16, 36};
  out.equal(with_positive_leading(ca.return_rev), with_positive_leading(expected), "return reciprocal up to sign");
  const FreenessReport f = freeness_report(s);
  out.expect(f.weak_test, "weak test fires");
  if (f.weak_witness) {
    out.equal(f.weak_witness->first, BigInt(2), "p1");
    out.equal(f.weak_witness->second, BigInt(3), "p2");
  }
  const PronilDescriptor d = pronil_descriptor(ca.returns);
  out.equal(d.generic_rank, 3u, "generic rank");
  out.equal(d.overrides, BigMap{{BigInt(2), 1}, {BigInt(3), 2}}, "overrides");
}

void tedious(Outcome& out) {
  const Substitution s = parse_substitution(helpers::tedious_text());
  const Connection c = connection_of(s, W("2"), W("3"), out);
  out.equal(c.order, 12u, "order of (2,3)");
  const ConnectionAnalysis ca = analyze(s, c);
  const ReturnData& rd = ca.returns;
  out.equal(rd.returns.size(), 12u, "return word count");
  std::size_t lo = SIZE_MAX, hi = 0, ilo = SIZE_MAX, ihi = 0;
  for (const Word& w : rd.returns) lo = std::min(lo, w.size()), hi = std::max(hi, w.size());
  for (const Word& w : rd.derived.images()) ilo = std::min(ilo, w.size()), ihi = std::max(ihi, w.size());
  out.equal(lo, 4u, "shortest return word");
  out.equal(hi, 274u, "longest return word");
  out.equal(ilo, 821u, "shortest image");
  out.equal(ihi, 97913u, "longest image");
  const IntPoly head = power_of(lin(-1, 1), 6) * lin(-1, 4096);
  const IntPoly stated = head * IntPoly{BigInt(-1), BigInt(-5) * 256, BigInt(-11) * 65536, BigInt(1) << 26};
  out.equal(ca.return_rev, stated, "return reciprocal as stated");
  // Independent of the stated value: ξ₁, ξ₂ are cyclotomic, so the leading
  // coefficient is ±pdet(φ¹²) = ±8¹².
  const BigInt pdet12 = pseudodeterminant(matrix_power(incidence_matrix(s), 12));
  out.equal(abs(ca.return_rev.leading()), abs(pdet12), "leading coefficient equals |pdet(phi^12)|");
  const IntPoly forced = head * IntPoly{BigInt(-1), BigInt(-5) * 256, BigInt(-11) * 65536, BigInt(1) << 24};
  if (ca.return_rev == forced) out.notes.push_back("computed cubic factor has leading coefficient 2^24");
  out.equal(ca.xi.xi1, power_of(lin(-1, 1), 6), "xi1");
  out.equal(ca.xi.xi2, IntPoly{1}, "xi2");
  out.equal(ca.m, 6L, "m");
  const PronilDescriptor d = pronil_descriptor(rd);
  out.equal(d.generic_rank, 10u, "generic rank");
  out.equal(d.overrides, BigMap{{BigInt(2), 6}}, "overrides");
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  out.expect(usage.ru_maxrss < kMemoryLimitKiB, "peak memory " + std::to_string(usage.ru_maxrss) + " KiB");
  out.notes.push_back("peak RSS " + std::to_string(usage.ru_maxrss / 1024) + " MiB, " +
                      std::to_string(rd.streamed_letters) + " letters streamed");
}

void cyclo(Outcome& out) {
  const Substitution s = parse_substitution(helpers::cyclo_text());
  const ConnectionAnalysis a = analyze(s, connection_of(s, W("1"), W("0"), out));
  const ConnectionAnalysis b = analyze(s, connection_of(s, W("0"), W("1"), out));
  out.equal(a.returns.connection.order, 1u, "order of (1,0)");
  out.equal(b.returns.connection.order, 2u, "order of (0,1)");
  out.equal(a.returns.derived.images(), std::vector<Word>{W("01"), W("002"), W("0012")}, "return substitution (1,0)");
  out.equal(b.returns.derived.images(),
            std::vector<Word>{W("011202312"), W("0112312"), W("012"), W("0112311202312")},
            "return substitution (0,1)");
  out.equal(a.xi.xi1, lin(1, 1), "xi1 at (1,0)");
  out.equal(a.xi.xi2, lin(-1, 1), "xi2 at (1,0)");
  out.equal(b.xi.xi1, IntPoly{1}, "xi1 at (0,1)");
  out.equal(b.xi.xi2, IntPoly{1}, "xi2 at (0,1)");
  out.equal(a.m, 0L, "m at (1,0)");
  out.equal(b.m, 0L, "m at (0,1)");
  for (const ConnectionAnalysis* ca : {&a, &b}) {
    const PronilDescriptor d = pronil_descriptor(ca->returns);
    out.equal(classification(d), std::string("free pronilpotent of rank 3"), "classification");
  }
}

void almeida(Outcome& out) {
  for (unsigned k = 0; k <= 4; ++k) {
    for (unsigned l = 1; l <= 4; ++l) {
      const Substitution s = helpers::almeida(k, l);
      const std::string tag = "k=" + std::to_string(k) + ",l=" + std::to_string(l) + ": ";
      const IntPoly rev = reciprocal(char_poly(incidence_matrix(s)));
      const IntPoly want{BigInt(1), -BigInt(k + 1), BigInt(static_cast<long>(k) - static_cast<long>(l))};
      out.equal(rev, want, tag + "reciprocal");
      const bool periodic = classify_periodicity(s).kind == Periodicity::Kind::Periodic;
      out.equal(periodic, k == l, tag + "periodic");
      if (periodic) continue;
      const StructuralFlags flags = structural_flags(s);
      out.expect(flags.proper, tag + "proper");
      // Descriptor through whichever route presents the group; both routes
      // are compared with the rank oracle.
      const ConnectionAnalysis ca = analyze(s, default_connection(s));
      const PronilDescriptor via_returns = pronil_descriptor(ca.returns);
      const PronilDescriptor direct = pronil_descriptor(incidence_matrix(s), PresentationRoute::ProperSubstitution);
      out.equal(via_returns.generic_rank, direct.generic_rank, tag + "generic rank across routes");
      out.equal(via_returns.overrides, direct.overrides, tag + "overrides across routes");
      const IntMatrix m2 = matrix_power(incidence_matrix(s), 2);
      for (const auto& [p, r] : direct.overrides)
        out.equal(r, oracle::rank_mod_p_int64(m2, p.convert_to<long>()), tag + "rank oracle at " + p.str());
      if (k == 1 && l == 3) {
        out.equal(direct.generic_rank, 2u, tag + "generic rank");
        out.equal(direct.overrides, BigMap{{BigInt(2), 0}}, tag + "overrides");
        out.equal(classification(direct), std::string("free pro-G_{nil,π} of rank 2, π = primes ≠ 2"),
                  tag + "classification");
      }
    }
  }
}

void perfect(Outcome& out) {
  const FreeGroupEndo psi = parse_endomorphism(helpers::psi_text());
  out.expect(is_nilpotent(incidence_matrix(psi)), "M_psi nilpotent");
  out.expect(perfectness_test(psi), "perfect");
  const SL2Group f4(2);
  const GF2n::Elem g = f4.field().generator();
  const auto u = f4.matrix(1, 1, 1, 0), v = f4.matrix(0, 1, 1, g);
  const auto w = SL2Group::pack(g, 1, 0, 1), winv = f4.matinv(w);
  const Tuple twice = action_step(psi, action_step(psi, {u, v}, f4), f4);
  out.equal(twice[0], f4.matmul(f4.matmul(w, u), winv), "u under psi^2");
  out.equal(twice[1], f4.matmul(f4.matmul(w, v), winv), "v under psi^2");
  unsigned order_w = 1;
  for (auto x = w; x != f4.identity(); x = f4.matmul(x, w)) ++order_w;
  out.expect(certificate_check(psi, {{u, v}, 2 * order_w, {}}, f4), "displayed certificate");
  SearchBudget exhaustive;
  exhaustive.require_exhaustive = true;
  for (unsigned n : {2u, 3u}) {
    const SL2Group h(n);
    const QuotientResult r = quotient_search(psi, h, exhaustive);
    out.equal(h.order(), n == 2 ? 60u : 504u, "order of SL2(2^" + std::to_string(n) + ")");
    out.expect(r.kind == QuotientResult::Kind::Found && r.certificate && certificate_check(psi, *r.certificate, h),
               "SL2(2^" + std::to_string(n) + ") is a quotient");
    if (r.certificate) out.notes.push_back("SL2(2^" + std::to_string(n) + ") period " + std::to_string(r.certificate->period));
  }
  const QuotientResult c2 = quotient_search(psi, CyclicGroup(2), exhaustive);
  out.expect(c2.kind == QuotientResult::Kind::Exhausted && c2.exhaustive, "cyclic group of order 2 excluded");
}

void properties(Outcome& out) {
  oracle::Rng rng(0xac8);
  const auto primes = oracle::primes_up_to(97);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 6);
    const IntMatrix m = oracle::random_matrix(rng, d, -9, 9);
    const IntMatrix md = matrix_power(m, static_cast<unsigned>(d));
    for (const BigInt& p : primes)
      if (dimension_p(m, p) != oracle::rank_mod_p_int64(reduce_mod_p(md, p), p.convert_to<long>())) ++mismatches;
  }
  out.equal(mismatches, 0u, "dimension formula mismatches");

  std::size_t functor_fail = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Substitution f = oracle::random_substitution(rng, 3, 4), g = oracle::random_substitution(rng, 3, 4);
    if (incidence_matrix(compose(f, g)) != IntMatrix(incidence_matrix(f) * incidence_matrix(g))) ++functor_fail;
  }
  out.equal(functor_fail, 0u, "functoriality failures");

  std::size_t conj_fail = 0;
  for (const auto& [s, rd] : g_return_data) {
    const Substitution psi = power(s, rd.connection.order);
    for (Letter i = 0; i < rd.derived.size(); ++i)
      if (psi.apply(rd.returns[i]) != theta_apply(rd, rd.derived.image(i))) ++conj_fail;
  }
  out.equal(conj_fail, 0u, "theta conjugacy failures");
  out.notes.push_back(std::to_string(g_return_data.size()) + " return substitutions checked");

  std::size_t rev_fail = 0, pdet_fail = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + static_cast<std::size_t>(trial % 5), -9, 9);
    const IntPoly chi = char_poly(m);
    const IntPoly rev = reciprocal(chi);
    // rev∘rev is the identity on polynomials with non-zero constant term.
    if (reciprocal(reciprocal(rev)) != rev) ++rev_fail;
    if (chi.coefficient(0) != 0 && reciprocal(rev) != chi) ++rev_fail;
    const BigInt p = abs(pseudodeterminant(m));
    BigInt acc = 1;
    for (unsigned n = 1; n <= 4; ++n) {
      acc *= p;
      if (abs(pseudodeterminant(matrix_power(m, n))) != acc) ++pdet_fail;
    }
  }
  out.equal(rev_fail, 0u, "reciprocal involution failures");
  out.equal(pdet_fail, 0u, "pdet power failures");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"Thue-Morse end-to-end", kLimitMorse, morse},
      {"negative m", kLimitNegative, negative},
      {"weak test", kLimitWeak, weaktest},
      {"stress case (2,3)", kLimitTedious, tedious},
      {"cyclotomic pairs", kLimitCyclo, cyclo},
      {"parametric sweep", kLimitAlmeida, almeida},
      {"perfect example", kLimitPerfect, perfect},
      {"property suites", 0, properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit > 0 && seconds >= criteria[i].limit)
      out.failures.push_back("runtime " + std::to_string(seconds) + " s over " + std::to_string(criteria[i].limit) + " s");
    const bool ok = out.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " AC" << i + 1 << " " << criteria[i].name << " (" << seconds << " s";
    if (criteria[i].limit > 0) std::cout << ", limit " << criteria[i].limit << " s";
    std::cout << ")\n";
    for (const std::string& f : out.failures) std::cout << "    failed: " << f << "\n";
    for (const std::string& n : out.notes) std::cout << "    note: " << n << "\n";
  }
  return failed;
}
