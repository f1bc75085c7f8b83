#pragma once

#include "schutz/cyclotomic.hpp"
#include "schutz/language.hpp"
#include "schutz/matrix.hpp"
#include "schutz/returns.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schutz {

/// deg of the reciprocal of χ mod p; cross-checked against rank(M_p^d).
/// Throws PreconditionError if p is not prime.
std::size_t dimension_p(const IntMatrix& m, const BigInt& p);
std::size_t dimension_p(const Substitution& s, const BigInt& p);
std::size_t dimension_p(const FreeGroupEndo& e, const BigInt& p);

enum class PresentationRoute {
  Endomorphism,        // a free-group endomorphism given directly
  ProperSubstitution,  // a proper substitution presents its own group
  ReturnSubstitution,
};

const char* to_string(PresentationRoute r);

/// Mod-p ranks of the pronilpotent quotient: generic_rank at every prime
/// except the finitely many overrides, all of which divide pdet.
struct PronilDescriptor {
  std::size_t generic_rank = 0;
  std::map<BigInt, std::size_t> overrides;
  BigInt pseudodeterminant = 1;
  IntPoly reciprocal_char_poly;
  PresentationRoute route = PresentationRoute::Endomorphism;

  std::size_t rank(const BigInt& p) const;
  bool free_pronilpotent() const { return overrides.empty(); }
  /// Every override is 0: free for the nilpotent groups supported on the
  /// remaining primes.
  bool relatively_free() const;
};

PronilDescriptor pronil_descriptor(const IntMatrix& m, PresentationRoute route);
PronilDescriptor pronil_descriptor(const FreeGroupEndo& e);
/// Requires a primitive, aperiodic, proper substitution.
PronilDescriptor pronil_descriptor(const Substitution& s);
PronilDescriptor pronil_descriptor(const ReturnData& rd);

/// Product decomposition, e.g. "Z_2 × F_3(2) × F_{nil,π}(3)".
std::string render_group(const PronilDescriptor& d);
/// The set π of primes carrying the generic rank, e.g. "primes ≠ 2, 3".
std::string render_generic_primes(const PronilDescriptor& d);
/// Which pronilpotent groups are quotients, prime by prime.
std::string quotient_criterion(const PronilDescriptor& d);
/// "free pronilpotent of rank d", "free pro-G_{nil,π} of rank d, π = ..."
/// or "not relatively free as pronilpotent group".
std::string classification(const PronilDescriptor& d);

/// The incidence matrix is nilpotent.
bool perfectness_test(const FreeGroupEndo& e);
bool perfectness_test(const Substitution& s);

/// Derived data for one connection.
struct ConnectionAnalysis {
  ReturnData returns;
  IntPoly power_rev;   // reciprocal of χ for φⁿ
  IntPoly return_char_poly;
  IntPoly return_rev;
  XiPair xi;
  long m = 0;
};

/// Requires s primitive and aperiodic.
ConnectionAnalysis analyze_connection(const Substitution& s, const Connection& c);

/// deg χ_ret^rev − deg χ_φ^rev, verified at every prime dividing either
/// pseudodeterminant and against deg ξ₁ − deg ξ₂.
long m_phi(const Substitution& s, const Connection& c);
long m_phi(const Substitution& s, const ConnectionAnalysis& ca);

/// The first connection of find_connections with the smallest word length
/// that has one.
Connection default_connection(const Substitution& s);

struct FreenessReport {
  bool perfect = false;
  PresentationRoute route = PresentationRoute::ReturnSubstitution;

  bool not_absolutely_free = false;
  BigInt pdet = 1;  // of φ itself

  bool not_relatively_free = false;
  std::optional<BigInt> relative_witness;  // 0 < deg_p < generic on the presentation

  bool weak_test = false;
  std::optional<std::pair<BigInt, BigInt>> weak_witness;  // deg_p1 < deg_p2 < generic on φ

  std::optional<std::size_t> constant_length;  // established when present
};

/// Requires s primitive and aperiodic. The relative test runs on the return
/// substitution of c, or on s itself when c is absent and s is proper, or
/// on the default connection otherwise.
FreenessReport freeness_report(const Substitution& s, const std::optional<Connection>& c = std::nullopt);

struct FlowInvariants {
  std::size_t generic_degree = 0;
  /// deg of the reciprocal mod p for every prime dividing the presentation's pdet.
  std::map<BigInt, std::size_t> prime_degrees;
  std::vector<BigInt> pdet_primes;  // primes dividing pdet(φ)
};

FlowInvariants flow_invariants(const Substitution& s, const Connection& c);
FlowInvariants flow_invariants(const ConnectionAnalysis& ca, const Substitution& s);

/// Throws PreconditionError unless s is primitive and aperiodic.
void require_primitive_aperiodic(const Substitution& s);

}  // namespace schutz
