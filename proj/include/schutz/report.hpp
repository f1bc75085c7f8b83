#pragma once

#include "schutz/analysis.hpp"
#include "schutz/quotient.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schutz {

using Json = nlohmann::ordered_json;

/// Everything `analyze` prints. Optional parts are absent for periodic input.
struct AnalysisReport {
  Substitution input;
  StructuralFlags flags;
  Periodicity periodicity;
  IntPoly char_poly;
  IntPoly reciprocal_char_poly;
  std::size_t max_connection_length = 2;
  std::vector<Connection> connections;
  std::optional<ConnectionAnalysis> chosen;
  std::optional<PronilDescriptor> descriptor;
  /// Presentation's reciprocal polynomial reduced at each override prime.
  std::map<BigInt, ModPoly> prime_reductions;
  std::optional<FreenessReport> freeness;
  std::optional<FlowInvariants> flow;
  double seconds = 0;
};

/// Throws PreconditionError on non-primitive input. A chosen connection is
/// validated and its order recomputed.
AnalysisReport build_report(const Substitution& s, const std::optional<Connection>& connection = std::nullopt,
                            std::size_t max_connection_length = 2);

/// One-line conclusion, e.g. "not relatively free (witness p=2)".
std::string freeness_verdict(const FreenessReport& f);

inline const char* periodic_group() { return "free profinite of rank 1"; }

std::string render_connection(const Alphabet& a, const Connection& c);
std::string render_returns(const Alphabet& a, const ReturnData& rd);
std::string render_descriptor(const PronilDescriptor& d);
std::string render_freeness(const FreenessReport& f);
std::string render_flow(const FlowInvariants& f);
std::string render_certificate(const FiniteGroup& h, const Alphabet& a, const QuotientResult& r);
std::string render_report(const AnalysisReport& r);

Json to_json(const IntPoly& p);
Json to_json(const ModPoly& p);
Json to_json(const Alphabet& a, const Connection& c);
Json to_json(const Alphabet& a, const ReturnData& rd);
Json to_json(const ConnectionAnalysis& ca, const Alphabet& a);
Json to_json(const PronilDescriptor& d);
Json to_json(const FreenessReport& f);
Json to_json(const FlowInvariants& f);
Json to_json(const FiniteGroup& h, const QuotientResult& r);
Json to_json(const AnalysisReport& r);

}  // namespace schutz
