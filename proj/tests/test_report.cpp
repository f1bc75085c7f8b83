#include "doctest.h"
#include "helpers.hpp"

#include "schutz/error.hpp"
#include "schutz/report.hpp"

using namespace schutz;
using helpers::W;

namespace {

IntPoly poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j.at("coefficients")) c.emplace_back(x.get<std::string>());
  return IntPoly(c);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("analyze report for Thue–Morse") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    const AnalysisReport r = build_report(tau);
    const std::string text = render_report(r);
    CHECK(text.size() > 0);
    CHECK(text.ends_with("verdict: not relatively free (witness p=2)\n"));
    REQUIRE(r.descriptor.has_value());
    CHECK(r.descriptor->route == PresentationRoute::ReturnSubstitution);
    CHECK(r.prime_reductions.count(BigInt(2)) == 1);
  }

  TEST_CASE("JSON re-validates against the input") {
    for (const char* text : {helpers::morse_text(), helpers::negative_text(), helpers::weaktest_text(),
                             helpers::cyclo_text()}) {
      const Substitution s = parse_substitution(text);
      const Json j = Json::parse(to_json(build_report(s)).dump());
      const Substitution echoed = parse_substitution(j.at("input").get<std::string>());
      CHECK(echoed == s);
      CHECK(poly_from_json(j.at("char_poly")) == char_poly(incidence_matrix(echoed)));
      const Json& chosen = j.at("chosen");
      const Substitution derived = parse_substitution(chosen.at("returns").at("return_substitution").get<std::string>());
      const IntPoly rev = reciprocal(char_poly(incidence_matrix(derived)));
      CHECK(poly_from_json(chosen.at("return_reciprocal")) == rev);
      const Json& d = j.at("descriptor");
      const IntMatrix presented = d.at("route") == "return substitution" ? incidence_matrix(derived)
                                                                         : incidence_matrix(echoed);
      CHECK(d.at("generic_rank").get<std::size_t>() == reciprocal_degree(reciprocal(char_poly(presented))));
      for (const auto& [p, rank] : d.at("overrides").items())
        CHECK(rank.get<std::size_t>() == dimension_p(presented, BigInt(p)));
      CHECK(j.at("classification") == d.at("classification"));
      CHECK(chosen.at("m").get<long>() ==
            static_cast<long>(reciprocal_degree(rev)) -
                static_cast<long>(reciprocal_degree(reciprocal(char_poly(incidence_matrix(echoed))))));
    }
  }

  TEST_CASE("returns round-trip through the text format") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    const ConnectionAnalysis ca = analyze_connection(tau, {W("0"), W("1"), 2});
    const Substitution again = parse_substitution(format_substitution(ca.returns.derived));
    CHECK(reciprocal(char_poly(incidence_matrix(again))) == ca.return_rev);
    CHECK(pronil_descriptor(ca.returns).overrides == pronil_descriptor(incidence_matrix(again), PresentationRoute::ReturnSubstitution).overrides);
  }

  TEST_CASE("periodic input short-circuits") {
    const AnalysisReport r = build_report(helpers::almeida(2, 2));
    CHECK(r.periodicity.kind == Periodicity::Kind::Periodic);
    CHECK_FALSE(r.descriptor.has_value());
    CHECK(to_json(r).at("classification") == "free profinite of rank 1");
    CHECK(render_report(r).find("free profinite of rank 1") != std::string::npos);
    CHECK_THROWS_AS(build_report(Substitution({W("01"), W("1")})), PreconditionError);
  }

  TEST_CASE("chosen connection is validated") {
    const Substitution tau = parse_substitution(helpers::morse_text());
    const AnalysisReport r = build_report(tau, Connection{W("1"), W("0"), 0});
    CHECK(r.chosen->returns.connection.order == 2);
    CHECK_THROWS_AS(build_report(tau, Connection{W("000"), W("1"), 0}), PreconditionError);
  }

  TEST_CASE("certificate JSON") {
    const FreeGroupEndo psi = parse_endomorphism(helpers::psi_text());
    const SL2Group h(2);
    const QuotientResult r = quotient_search(psi, h);
    const Json j = to_json(h, r);
    CHECK(j.at("result") == "found");
    CHECK(j.at("field").at("n") == 2);
    CHECK(j.at("field").at("polynomial") == Json::array({1, 1, 1}));
    const Json& t = j.at("certificate").at("tuple");
    REQUIRE(t.size() == 2);
    Tuple tuple;
    for (const auto& m : t)
      tuple.push_back(h.matrix(m[0][0], m[0][1], m[1][0], m[1][1]));
    CHECK(certificate_check(psi, {tuple, j.at("certificate").at("period").get<unsigned>(), {}}, h));
  }
}
