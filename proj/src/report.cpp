#include "schutz/report.hpp"

#include "schutz/error.hpp"
#include "schutz/text_format.hpp"

#include <chrono>
#include <sstream>

namespace schutz {

namespace {

std::string indent(const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  std::string line, out;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

Connection resolve_connection(const Substitution& s, const std::optional<Connection>& c) {
  if (!c) return default_connection(s);
  Connection out = *c;
  const auto order = connection_order(s, out.u, out.v);
  if (!order) throw PreconditionError("not a connection: no power fixes the suffix u and the prefix v");
  out.order = *order;
  validate_connection(s, out);
  return out;
}

}  // namespace

AnalysisReport build_report(const Substitution& s, const std::optional<Connection>& connection,
                            std::size_t max_connection_length) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_primitive_substitution(s)) throw PreconditionError("substitution is not primitive");
  const IntMatrix mphi = incidence_matrix(s);
  AnalysisReport r{s, structural_flags(s), classify_periodicity(s), char_poly(mphi), {}, max_connection_length,
                   {}, {}, {}, {}, {}, {}, 0};
  r.reciprocal_char_poly = reciprocal(r.char_poly);
  if (r.periodicity.kind == Periodicity::Kind::Aperiodic) {
    r.connections = find_connections(s, max_connection_length);
    r.chosen = analyze_connection(s, resolve_connection(s, connection));
    r.descriptor = !connection && r.flags.proper ? pronil_descriptor(mphi, PresentationRoute::ProperSubstitution)
                                                 : pronil_descriptor(r.chosen->returns);
    for (const auto& [p, rank] : r.descriptor->overrides)
      r.prime_reductions.emplace(p, reduce_mod_p(r.descriptor->reciprocal_char_poly, p));
    r.freeness = freeness_report(s, connection ? std::optional<Connection>(r.chosen->returns.connection)
                                               : std::nullopt);
    r.flow = flow_invariants(*r.chosen, s);
  } else if (r.periodicity.kind == Periodicity::Kind::Unknown) {
    throw PreconditionError("periodicity could not be decided within the bound");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string freeness_verdict(const FreenessReport& f) {
  if (f.perfect) return "perfect (trivial pronilpotent quotient)";
  if (f.relative_witness) return "not relatively free (witness p=" + f.relative_witness->str() + ")";
  if (f.weak_witness)
    return "not relatively free (weak test p1=" + f.weak_witness->first.str() + ", p2=" +
           f.weak_witness->second.str() + ")";
  if (f.constant_length) return "not free (constant length " + std::to_string(*f.constant_length) + ")";
  if (f.not_absolutely_free) return "not free (|pdet| = " + abs(f.pdet).str() + ")";
  return "no obstruction to freeness found";
}

std::string render_connection(const Alphabet& a, const Connection& c) {
  return "(" + format_word(a, c.u) + ", " + format_word(a, c.v) + ") of order " + std::to_string(c.order);
}

std::string render_returns(const Alphabet& a, const ReturnData& rd) {
  std::ostringstream out;
  out << "connection " << render_connection(a, rd.connection) << "\n";
  out << "return words (" << rd.returns.size() << "):\n";
  for (std::size_t i = 0; i < rd.returns.size(); ++i)
    out << "  " << rd.derived.alphabet().name(static_cast<Letter>(i)) << " = " << format_word(a, rd.returns[i])
        << "\n";
  out << "return substitution:\n" << indent(format_substitution(rd.derived), "  ");
  out << "ray check: " << (rd.stream_confirmed ? "confirmed" : "not confirmed") << " after "
      << rd.streamed_letters << " letters\n";
  return out.str();
}

std::string render_descriptor(const PronilDescriptor& d) {
  std::ostringstream out;
  out << "presentation: " << to_string(d.route) << "\n";
  out << "reciprocal characteristic polynomial: " << to_string(d.reciprocal_char_poly) << "\n";
  out << "pseudodeterminant: " << d.pseudodeterminant << "\n";
  out << "generic rank: " << d.generic_rank << " (" << render_generic_primes(d) << ")\n";
  for (const auto& [p, r] : d.overrides) out << "rank at p=" << p << ": " << r << "\n";
  out << "maximal pronilpotent quotient: " << render_group(d) << "\n";
  out << "classification: " << classification(d) << "\n";
  out << "pronilpotent quotients: " << quotient_criterion(d) << "\n";
  return out.str();
}

std::string render_freeness(const FreenessReport& f) {
  std::ostringstream out;
  out << "presentation: " << to_string(f.route) << "\n";
  out << "perfect: " << (f.perfect ? "yes" : "no") << "\n";
  out << "absolute test: pdet = " << f.pdet << (f.not_absolutely_free ? ", not free" : ", inconclusive") << "\n";
  out << "relative test: ";
  if (f.relative_witness) out << "not relatively free, witness p=" << *f.relative_witness << "\n";
  else out << "inconclusive\n";
  out << "weak test: ";
  if (f.weak_witness) out << "fires with p1=" << f.weak_witness->first << ", p2=" << f.weak_witness->second << "\n";
  else out << "inconclusive\n";
  out << "constant length: ";
  if (f.constant_length) out << *f.constant_length << ", not free\n";
  else out << "no\n";
  out << "verdict: " << freeness_verdict(f) << "\n";
  return out.str();
}

std::string render_flow(const FlowInvariants& f) {
  std::ostringstream out;
  out << "generic degree: " << f.generic_degree << "\n";
  out << "primes dividing pdet:";
  if (f.pdet_primes.empty()) out << " none";
  for (const BigInt& p : f.pdet_primes) out << " " << p;
  out << "\n";
  for (const auto& [p, d] : f.prime_degrees) out << "degree at p=" << p << ": " << d << "\n";
  return out.str();
}

std::string render_certificate(const FiniteGroup& h, const Alphabet& a, const QuotientResult& r) {
  std::ostringstream out;
  out << "group: " << h.describe() << ", order " << h.order() << "\n";
  out << "search: " << (r.exhaustive ? "exhaustive" : "budgeted") << ", " << r.tuples_visited << " seeds, "
      << r.cycles_examined << " cycles, " << r.steps << " steps\n";
  out << "result: " << to_string(r.kind) << "\n";
  if (r.kind == QuotientResult::Kind::Exhausted) out << "the group is not a continuous quotient\n";
  if (r.kind == QuotientResult::Kind::NotFound) out << "budget exhausted, no conclusion\n";
  if (r.certificate) {
    const QuotientCertificate& c = *r.certificate;
    out << "certificate: period " << c.period << "\n";
    for (Letter x = 0; x < c.tuple.size(); ++x) out << "  t(" << a.name(x) << ") = " << h.format(c.tuple[x]) << "\n";
    const auto gens = h.standard_generators();
    for (std::size_t i = 0; i < c.witnesses.size(); ++i)
      out << "  generator " << h.format(gens[i]) << " = " << (c.witnesses[i].empty() ? "1" : format_word(a, c.witnesses[i]))
          << "\n";
  }
  return out.str();
}

std::string render_report(const AnalysisReport& r) {
  std::ostringstream out;
  const Alphabet& a = r.input.alphabet();
  out << "substitution:\n" << indent(format_substitution(r.input), "  ");
  out << "incidence matrix:\n" << indent(to_string(incidence_matrix(r.input)), "  ");
  out << "characteristic polynomial: " << to_string(r.char_poly) << "\n";
  out << "reciprocal: " << to_string(r.reciprocal_char_poly) << "\n";
  out << "proper: " << (r.flags.proper ? "yes" : "no");
  if (r.flags.proper_power) out << " (power " << *r.flags.proper_power << ")";
  out << "\n";
  out << "constant length: ";
  if (r.flags.constant_length) out << *r.flags.constant_length << "\n";
  else out << "no\n";
  out << "periodicity: " << to_string(r.periodicity.kind) << " (bound " << r.periodicity.bound << ")\n";
  if (r.periodicity.kind == Periodicity::Kind::Periodic) {
    out << "period word: " << format_word(a, r.periodicity.period) << "\n";
    out << "group: " << periodic_group() << "\n";
    return out.str();
  }
  out << "connections with |u|,|v| <= " << r.max_connection_length << ": " << r.connections.size() << "\n";
  for (const Connection& c : r.connections) out << "  " << render_connection(a, c) << "\n";
  if (r.chosen) {
    const ConnectionAnalysis& ca = *r.chosen;
    out << render_returns(a, ca.returns);
    out << "return reciprocal polynomial: " << to_string(ca.return_rev) << "\n";
    out << "power reciprocal polynomial: " << to_string(ca.power_rev) << "\n";
    out << "xi1: " << to_string(ca.xi.xi1) << "\n";
    out << "xi2: " << to_string(ca.xi.xi2) << "\n";
    out << "m: " << ca.m << "\n";
  }
  if (r.descriptor) out << render_descriptor(*r.descriptor);
  for (const auto& [p, f] : r.prime_reductions) out << "reciprocal mod " << p << ": " << to_string(f) << "\n";
  if (r.flow) out << render_flow(*r.flow);
  out << "time: " << r.seconds << " s\n";
  if (r.freeness) out << render_freeness(*r.freeness);
  return out.str();
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"text", to_string(p)}, {"coefficients", coeffs}};
}

Json to_json(const ModPoly& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"modulus", p.modulus().str()}, {"text", to_string(p)}, {"coefficients", coeffs}};
}

Json to_json(const Alphabet& a, const Connection& c) {
  return {{"u", format_word(a, c.u)}, {"v", format_word(a, c.v)}, {"order", c.order}};
}

Json to_json(const Alphabet& a, const ReturnData& rd) {
  Json words = Json::array();
  for (const Word& w : rd.returns) words.push_back(format_word(a, w));
  Json lengths = Json::array();
  for (const Word& w : rd.derived.images()) lengths.push_back(w.size());
  return {{"connection", to_json(a, rd.connection)},
          {"return_words", words},
          {"return_substitution", format_substitution(rd.derived)},
          {"image_lengths", lengths},
          {"streamed_letters", rd.streamed_letters},
          {"stream_confirmed", rd.stream_confirmed}};
}

Json to_json(const ConnectionAnalysis& ca, const Alphabet& a) {
  return {{"returns", to_json(a, ca.returns)},
          {"return_char_poly", to_json(ca.return_char_poly)},
          {"return_reciprocal", to_json(ca.return_rev)},
          {"power_reciprocal", to_json(ca.power_rev)},
          {"xi1", to_json(ca.xi.xi1)},
          {"xi2", to_json(ca.xi.xi2)},
          {"m", ca.m}};
}

Json to_json(const PronilDescriptor& d) {
  Json overrides = Json::object();
  for (const auto& [p, r] : d.overrides) overrides[p.str()] = r;
  return {{"route", to_string(d.route)},
          {"generic_rank", d.generic_rank},
          {"overrides", overrides},
          {"pseudodeterminant", d.pseudodeterminant.str()},
          {"reciprocal_char_poly", to_json(d.reciprocal_char_poly)},
          {"group", render_group(d)},
          {"classification", classification(d)},
          {"quotient_criterion", quotient_criterion(d)}};
}

Json to_json(const FreenessReport& f) {
  Json j = {{"route", to_string(f.route)},
            {"perfect", f.perfect},
            {"pdet", f.pdet.str()},
            {"not_absolutely_free", f.not_absolutely_free},
            {"not_relatively_free", f.not_relatively_free},
            {"relative_witness", nullptr},
            {"weak_test", f.weak_test},
            {"weak_witness", nullptr},
            {"constant_length", nullptr},
            {"verdict", freeness_verdict(f)}};
  if (f.relative_witness) j["relative_witness"] = f.relative_witness->str();
  if (f.weak_witness) j["weak_witness"] = {f.weak_witness->first.str(), f.weak_witness->second.str()};
  if (f.constant_length) j["constant_length"] = *f.constant_length;
  return j;
}

Json to_json(const FlowInvariants& f) {
  Json degrees = Json::object();
  for (const auto& [p, d] : f.prime_degrees) degrees[p.str()] = d;
  Json primes = Json::array();
  for (const BigInt& p : f.pdet_primes) primes.push_back(p.str());
  return {{"generic_degree", f.generic_degree}, {"prime_degrees", degrees}, {"pdet_primes", primes}};
}

Json to_json(const FiniteGroup& h, const QuotientResult& r) {
  Json j = {{"group", h.describe()},
            {"order", h.order()},
            {"result", to_string(r.kind)},
            {"exhaustive", r.exhaustive},
            {"tuples_visited", r.tuples_visited},
            {"cycles_examined", r.cycles_examined},
            {"steps", r.steps},
            {"certificate", nullptr}};
  const auto* sl2 = dynamic_cast<const SL2Group*>(&h);
  if (sl2) j["field"] = {{"n", sl2->field().degree()}, {"polynomial", GF2n::conway_polynomial(sl2->field().degree())}};
  if (r.certificate) {
    Json tuple = Json::array();
    for (FiniteGroup::Element x : r.certificate->tuple) {
      if (sl2)
        tuple.push_back({{SL2Group::entry(x, 0, 0), SL2Group::entry(x, 0, 1)},
                         {SL2Group::entry(x, 1, 0), SL2Group::entry(x, 1, 1)}});
      else
        tuple.push_back(h.format(x));
    }
    Json witnesses = Json::array();
    for (const Word& w : r.certificate->witnesses) witnesses.push_back(w);
    j["certificate"] = {{"tuple", tuple}, {"period", r.certificate->period}, {"witnesses", witnesses}};
  }
  return j;
}

Json to_json(const AnalysisReport& r) {
  const Alphabet& a = r.input.alphabet();
  Json flags = {{"proper", r.flags.proper},
                {"proper_power", nullptr},
                {"constant_length", nullptr}};
  if (r.flags.proper_power) flags["proper_power"] = *r.flags.proper_power;
  if (r.flags.constant_length) flags["constant_length"] = *r.flags.constant_length;
  Json periodicity = {{"kind", to_string(r.periodicity.kind)}, {"bound", r.periodicity.bound}};
  if (r.periodicity.kind == Periodicity::Kind::Periodic) periodicity["period"] = format_word(a, r.periodicity.period);
  Json j = {{"input", format_substitution(r.input)},
            {"flags", flags},
            {"periodicity", periodicity},
            {"char_poly", to_json(r.char_poly)},
            {"reciprocal_char_poly", to_json(r.reciprocal_char_poly)},
            {"pseudodeterminant", pseudodeterminant(incidence_matrix(r.input)).str()}};
  if (r.periodicity.kind == Periodicity::Kind::Periodic) {
    j["classification"] = periodic_group();
  } else {
    Json conns = Json::array();
    for (const Connection& c : r.connections) conns.push_back(to_json(a, c));
    j["max_connection_length"] = r.max_connection_length;
    j["connections"] = conns;
    if (r.chosen) j["chosen"] = to_json(*r.chosen, a);
    if (r.descriptor) {
      j["descriptor"] = to_json(*r.descriptor);
      j["classification"] = classification(*r.descriptor);
    }
    Json reductions = Json::object();
    for (const auto& [p, f] : r.prime_reductions) reductions[p.str()] = to_json(f);
    j["prime_reductions"] = reductions;
    if (r.freeness) j["freeness"] = to_json(*r.freeness);
    if (r.flow) j["flow_invariants"] = to_json(*r.flow);
  }
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace schutz
