#include "schutz/analysis.hpp"

#include "schutz/error.hpp"


namespace schutz {

std::size_t dimension_p(const IntMatrix& m, const BigInt& p) {
  if (!is_prime(p)) throw PreconditionError("dimension_p: " + p.str() + " is not prime");
  const std::size_t deg = reciprocal_degree(reduce_mod_p(char_poly(m), p));
  // The stable image of M over Z/pZ complements the generalised 0-eigenspace.
  const std::size_t rank = rank_mod_p(power_mod_p(m, static_cast<unsigned>(m.rows()), p), p);
  if (deg != rank)
    throw InvariantError("dimension_p: reciprocal degree " + std::to_string(deg) + " disagrees with rank " +
                         std::to_string(rank) + " at p = " + p.str());
  return deg;
}

std::size_t dimension_p(const Substitution& s, const BigInt& p) { return dimension_p(incidence_matrix(s), p); }
std::size_t dimension_p(const FreeGroupEndo& e, const BigInt& p) { return dimension_p(incidence_matrix(e), p); }

const char* to_string(PresentationRoute r) {
  switch (r) {
    case PresentationRoute::Endomorphism: return "endomorphism";
    case PresentationRoute::ProperSubstitution: return "proper substitution";
    case PresentationRoute::ReturnSubstitution: return "return substitution";
  }
  return "endomorphism";
}

std::size_t PronilDescriptor::rank(const BigInt& p) const {
  auto it = overrides.find(p);
  return it == overrides.end() ? generic_rank : it->second;
}

bool PronilDescriptor::relatively_free() const {
  for (const auto& [p, r] : overrides)
    if (r != 0) return false;
  return true;
}

PronilDescriptor pronil_descriptor(const IntMatrix& m, PresentationRoute route) {
  PronilDescriptor d;
  d.route = route;
  d.reciprocal_char_poly = reciprocal(char_poly(m));
  d.generic_rank = reciprocal_degree(d.reciprocal_char_poly);
  d.pseudodeterminant = pseudodeterminant(m);
  // The degree drops exactly at primes dividing the leading coefficient.
  for (const BigInt& p : prime_divisors(d.pseudodeterminant)) {
    const std::size_t r = dimension_p(m, p);
    if (r >= d.generic_rank) throw InvariantError("pronil_descriptor: no degree drop at a prime dividing pdet");
    d.overrides.emplace(p, r);
  }
  return d;
}

PronilDescriptor pronil_descriptor(const FreeGroupEndo& e) {
  return pronil_descriptor(incidence_matrix(e), PresentationRoute::Endomorphism);
}

PronilDescriptor pronil_descriptor(const Substitution& s) {
  require_primitive_aperiodic(s);
  if (!structural_flags(s).proper)
    throw PreconditionError("pronil_descriptor: substitution is not proper; use a return substitution");
  return pronil_descriptor(incidence_matrix(s), PresentationRoute::ProperSubstitution);
}

PronilDescriptor pronil_descriptor(const ReturnData& rd) {
  return pronil_descriptor(incidence_matrix(rd.derived), PresentationRoute::ReturnSubstitution);
}

namespace {

std::string join_primes(const std::map<BigInt, std::size_t>& m) {
  std::string out;
  for (const auto& [p, r] : m) out += (out.empty() ? "" : ", ") + p.str();
  return out;
}

std::string generators(std::size_t r) {
  if (r == 0) return "trivial";
  if (r == 1) return "cyclic";
  return std::to_string(r) + "-generated";
}

}  // namespace

std::string render_generic_primes(const PronilDescriptor& d) {
  if (d.overrides.empty()) return "all primes";
  return "primes ≠ " + join_primes(d.overrides);
}

std::string render_group(const PronilDescriptor& d) {
  std::vector<std::string> parts;
  for (const auto& [p, r] : d.overrides) {
    if (r == 1) parts.push_back("Z_" + p.str());
    else if (r > 1) parts.push_back("F_" + p.str() + "(" + std::to_string(r) + ")");
  }
  if (d.generic_rank > 0) {
    const std::string rank = "(" + std::to_string(d.generic_rank) + ")";
    parts.push_back(d.overrides.empty() ? "F_nil" + rank : "F_{nil,π}" + rank);
  }
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " × ") + s;
  return out;
}

std::string quotient_criterion(const PronilDescriptor& d) {
  std::string out;
  for (const auto& [p, r] : d.overrides) out += p.str() + "-Sylow " + generators(r) + "; ";
  out += (d.overrides.empty() ? "every Sylow " : "other Sylow ") + generators(d.generic_rank);
  return out;
}

std::string classification(const PronilDescriptor& d) {
  const std::string rank = std::to_string(d.generic_rank);
  if (d.generic_rank == 0) return "trivial";
  if (d.free_pronilpotent()) return "free pronilpotent of rank " + rank;
  if (d.relatively_free()) return "free pro-G_{nil,π} of rank " + rank + ", π = " + render_generic_primes(d);
  return "not relatively free as pronilpotent group";
}

bool perfectness_test(const FreeGroupEndo& e) { return is_nilpotent(incidence_matrix(e)); }
bool perfectness_test(const Substitution& s) { return is_nilpotent(incidence_matrix(s)); }

void require_primitive_aperiodic(const Substitution& s) {
  if (!is_primitive_substitution(s)) throw PreconditionError("substitution is not primitive");
  const Periodicity per = classify_periodicity(s);
  if (per.kind != Periodicity::Kind::Aperiodic) throw PreconditionError("substitution is periodic");
}

ConnectionAnalysis analyze_connection(const Substitution& s, const Connection& c) {
  require_primitive_aperiodic(s);
  ConnectionAnalysis ca{return_substitution(s, c), {}, {}, {}, {}, 0};
  ca.power_rev = reciprocal(char_poly(matrix_power(incidence_matrix(s), c.order)));
  ca.return_char_poly = char_poly(incidence_matrix(ca.returns.derived));
  ca.return_rev = reciprocal(ca.return_char_poly);
  ca.xi = xi_pair(ca.power_rev, ca.return_rev);
  ca.m = m_phi(s, ca);
  return ca;
}

long m_phi(const Substitution& s, const ConnectionAnalysis& ca) {
  const IntMatrix mphi = incidence_matrix(s);
  const IntMatrix mret = incidence_matrix(ca.returns.derived);
  const long m = static_cast<long>(reciprocal_degree(ca.return_rev)) -
                 static_cast<long>(reciprocal_degree(reciprocal(char_poly(mphi))));
  if (ca.xi.xi1.degree() - ca.xi.xi2.degree() != m)
    throw InvariantError("m_phi: degree difference of the cyclotomic pair disagrees");
  std::vector<BigInt> primes = prime_divisors(pseudodeterminant(mphi));
  for (const BigInt& p : prime_divisors(pseudodeterminant(mret))) primes.push_back(p);
  for (const BigInt& p : primes) {
    const long diff = static_cast<long>(dimension_p(mret, p)) - static_cast<long>(dimension_p(mphi, p));
    if (diff != m) throw InvariantError("m_phi: prime-wise degree difference disagrees at p = " + p.str());
  }
  return m;
}

long m_phi(const Substitution& s, const Connection& c) { return analyze_connection(s, c).m; }

Connection default_connection(const Substitution& s) {
  for (std::size_t len = 1; len <= 4; ++len) {
    auto found = find_connections(s, len);
    if (!found.empty()) return found.front();
  }
  throw PreconditionError("no connection with |u|, |v| <= 4");
}

FreenessReport freeness_report(const Substitution& s, const std::optional<Connection>& c) {
  require_primitive_aperiodic(s);
  FreenessReport rep;
  const IntMatrix mphi = incidence_matrix(s);
  const PronilDescriptor direct = pronil_descriptor(mphi, PresentationRoute::ProperSubstitution);

  PronilDescriptor presentation;
  if (!c && structural_flags(s).proper) {
    presentation = direct;
  } else {
    const ReturnData rd = return_substitution(s, c ? *c : default_connection(s));
    presentation = pronil_descriptor(rd);
  }
  rep.route = presentation.route;
  rep.perfect = presentation.generic_rank == 0;

  rep.pdet = direct.pseudodeterminant;
  rep.not_absolutely_free = abs(rep.pdet) != 1;

  for (const auto& [p, r] : presentation.overrides) {
    if (r > 0 && r < presentation.generic_rank) {
      rep.not_relatively_free = true;
      rep.relative_witness = p;
      break;
    }
  }

  for (const auto& [p1, r1] : direct.overrides) {
    for (const auto& [p2, r2] : direct.overrides) {
      if (r1 < r2 && r2 < direct.generic_rank) {
        rep.weak_test = true;
        rep.weak_witness = {p1, p2};
        break;
      }
    }
    if (rep.weak_test) break;
  }

  rep.constant_length = structural_flags(s).constant_length;
  return rep;
}

FlowInvariants flow_invariants(const ConnectionAnalysis& ca, const Substitution& s) {
  FlowInvariants fi;
  const PronilDescriptor d = pronil_descriptor(ca.returns);
  fi.generic_degree = d.generic_rank;
  fi.prime_degrees = d.overrides;
  fi.pdet_primes = prime_divisors(pseudodeterminant(incidence_matrix(s)));
  std::vector<BigInt> ret_primes;
  for (const auto& [p, r] : d.overrides) ret_primes.push_back(p);
  if (ret_primes != fi.pdet_primes)
    throw InvariantError("flow_invariants: pdet primes of φ and of its return substitution differ");
  return fi;
}

FlowInvariants flow_invariants(const Substitution& s, const Connection& c) {
  return flow_invariants(analyze_connection(s, c), s);
}

}  // namespace schutz
