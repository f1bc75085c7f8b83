#include "schutz/polynomial.hpp"

#include "schutz/error.hpp"

namespace schutz {

IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("reciprocal of the zero polynomial");
  std::vector<BigInt> c(p.coefficients().rbegin(), p.coefficients().rend());
  return IntPoly(std::move(c));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const BigInt& a : p.coefficients()) {
    g = gcd(g, a);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly with_positive_leading(const IntPoly& p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  std::vector<BigInt> v = p.coefficients();
  for (auto& a : v) a /= c;
  return with_positive_leading(IntPoly(std::move(v)));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  const BigInt& lc = b.leading();
  if (lc != 1 && lc != -1) throw PreconditionError("divmod_monic: divisor leading coefficient must be +-1");
  if (a.degree() < b.degree()) return {IntPoly(), a};
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db, BigInt(0));
  for (std::size_t i = r.size(); i-- > db;) {
    BigInt t = r[i] * lc;  // lc = lc^-1
    q[i - db] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw InvariantError("divide_exact: divisor does not divide dividend");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lc = bc.back();
  std::vector<BigInt> q(r.size() - db, BigInt(0));
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (r[i] % lc != 0) throw InvariantError("divide_exact: inexact coefficient division");
    BigInt t = r[i] / lc;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) throw InvariantError("divide_exact: non-zero remainder");
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lc = bc.back();
  // Exactly deg a - deg b + 1 scalings by lc(b), including steps where the
  // current top coefficient is already zero.
  for (std::size_t i = r.size(); i-- > db;) {
    BigInt t = r[i];
    for (auto& x : r) x *= lc;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  IntPoly a = primitive_part(a_in), b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  BigInt g = 1, h = 1;
  while (true) {
    const unsigned delta = static_cast<unsigned>(a.degree() - b.degree());
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly::constant(BigInt(1));
    BigInt divisor = g * pow(h, delta);
    std::vector<BigInt> rc = r.coefficients();
    for (auto& x : rc) x /= divisor;
    a = std::move(b);
    b = IntPoly(std::move(rc));
    g = a.leading();
    if (delta > 0) h = pow(g, delta) / pow(h, delta - 1);
  }
  return primitive_part(b);
}

namespace {

std::string render(const std::vector<BigInt>& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const BigInt& a = c[k];
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (out.empty())
      out += a < 0 ? "-" : "";
    else
      out += a < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& p) { return render(p.coefficients()); }

ModPoly::ModPoly(BigInt p, std::vector<BigInt> coefficients) : p_(std::move(p)) {
  for (auto& a : coefficients) a = mod_floor(a, p_);
  poly_ = IntPoly(std::move(coefficients));
}

ModPoly reduce_mod_p(const IntPoly& f, const BigInt& p) {
  if (!is_prime(p)) throw PreconditionError("reduce_mod_p: " + p.str() + " is not prime");
  return ModPoly(p, f.coefficients());
}

ModPoly reciprocal(const ModPoly& f) {
  if (f.is_zero()) throw PreconditionError("reciprocal of the zero polynomial");
  return ModPoly(f.modulus(), reciprocal(f.lift()).coefficients());
}

std::string to_string(const ModPoly& p) { return render(p.coefficients()) + " (mod " + p.modulus().str() + ")"; }

}  // namespace schutz
