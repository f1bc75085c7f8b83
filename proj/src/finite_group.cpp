#include "schutz/finite_group.hpp"

#include "schutz/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace schutz {

FiniteGroup::Element FiniteGroup::power(Element a, std::uint64_t k) const {
  Element result = identity();
  while (k > 0) {
    if (k & 1u) result = multiply(result, a);
    k >>= 1;
    if (k > 0) a = multiply(a, a);
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Element a) const {
  const Element e = identity();
  Element x = a;
  for (std::uint64_t k = 1;; ++k) {
    if (x == e) return k;
    x = multiply(x, a);
    if (k > order()) throw InvariantError("element order exceeds the group order");
  }
}

// SL2 ---------------------------------------------------------------------

SL2Group::SL2Group(unsigned n) : field_(n) {}

FiniteGroup::Element SL2Group::pack(GF2n::Elem a, GF2n::Elem b, GF2n::Elem c, GF2n::Elem d) {
  return Element{a} << 48 | Element{b} << 32 | Element{c} << 16 | Element{d};
}

GF2n::Elem SL2Group::entry(Element m, unsigned row, unsigned col) {
  const unsigned shift = 48 - 16 * (2 * row + col);
  return static_cast<GF2n::Elem>(m >> shift & 0xffffu);
}

FiniteGroup::Element SL2Group::matrix(GF2n::Elem a, GF2n::Elem b, GF2n::Elem c, GF2n::Elem d) const {
  for (GF2n::Elem x : {a, b, c, d})
    if (x >= field_.size()) throw PreconditionError("SL2: entry outside the field");
  const Element m = pack(a, b, c, d);
  if (determinant(m) != 1) throw PreconditionError("SL2: matrix does not have determinant 1");
  return m;
}

GF2n::Elem SL2Group::determinant(Element m) const {
  return GF2n::add(field_.mul(entry(m, 0, 0), entry(m, 1, 1)), field_.mul(entry(m, 0, 1), entry(m, 1, 0)));
}

FiniteGroup::Element SL2Group::matmul(Element x, Element y) const {
  const auto& f = field_;
  const GF2n::Elem a = entry(x, 0, 0), b = entry(x, 0, 1), c = entry(x, 1, 0), d = entry(x, 1, 1);
  const GF2n::Elem p = entry(y, 0, 0), q = entry(y, 0, 1), r = entry(y, 1, 0), s = entry(y, 1, 1);
  return pack(GF2n::add(f.mul(a, p), f.mul(b, r)), GF2n::add(f.mul(a, q), f.mul(b, s)),
              GF2n::add(f.mul(c, p), f.mul(d, r)), GF2n::add(f.mul(c, q), f.mul(d, s)));
}

FiniteGroup::Element SL2Group::matinv(Element x) const {
  const GF2n::Elem det = determinant(x);
  if (det == 0) throw PreconditionError("SL2: singular matrix");
  const GF2n::Elem k = field_.inv(det);
  // Characteristic 2: the adjugate of [[a,b],[c,d]] is [[d,b],[c,a]].
  return pack(field_.mul(k, entry(x, 1, 1)), field_.mul(k, entry(x, 0, 1)), field_.mul(k, entry(x, 1, 0)),
              field_.mul(k, entry(x, 0, 0)));
}

FiniteGroup::Element SL2Group::inverse(Element a) const {
  return pack(entry(a, 1, 1), entry(a, 0, 1), entry(a, 1, 0), entry(a, 0, 0));
}

std::uint64_t SL2Group::order() const {
  const std::uint64_t q = field_.size();
  return q * (q * q - 1);
}

std::vector<FiniteGroup::Element> SL2Group::elements() const {
  if (!enumerable()) throw PreconditionError("SL2: group too large to enumerate");
  const GF2n::Elem q = field_.size();
  std::vector<Element> out;
  out.reserve(order());
  for (GF2n::Elem a = 0; a < q; ++a)
    for (GF2n::Elem b = 0; b < q; ++b)
      for (GF2n::Elem c = 0; c < q; ++c) {
        if (a != 0) {
          out.push_back(pack(a, b, c, field_.mul(GF2n::add(1, field_.mul(b, c)), field_.inv(a))));
        } else if (b != 0 && c == field_.inv(b)) {
          for (GF2n::Elem d = 0; d < q; ++d) out.push_back(pack(0, b, c, d));
        }
      }
  return out;
}

FiniteGroup::Element SL2Group::random_element(std::mt19937_64& rng) const {
  const std::uint64_t q = field_.size();
  std::uniform_int_distribution<std::uint64_t> pick(0, order() - 1);
  std::uint64_t idx = pick(rng);
  if (idx < (q - 1) * q * q) {
    const auto a = static_cast<GF2n::Elem>(1 + idx / (q * q));
    const auto b = static_cast<GF2n::Elem>(idx / q % q);
    const auto c = static_cast<GF2n::Elem>(idx % q);
    return pack(a, b, c, field_.mul(GF2n::add(1, field_.mul(b, c)), field_.inv(a)));
  }
  idx -= (q - 1) * q * q;
  const auto b = static_cast<GF2n::Elem>(1 + idx / q);
  const auto d = static_cast<GF2n::Elem>(idx % q);
  return pack(0, b, field_.inv(b), d);
}

std::vector<FiniteGroup::Element> SL2Group::standard_generators() const {
  const GF2n::Elem g = field_.generator();
  return {pack(1, 1, 0, 1), pack(1, 0, 1, 1), pack(g, 0, 0, field_.inv(g))};
}

std::string SL2Group::describe() const {
  std::string poly;
  const auto coeffs = GF2n::conway_polynomial(field_.degree());
  for (int c : coeffs) poly += std::to_string(c);
  return "SL2(GF(2^" + std::to_string(field_.degree()) + ")), Conway polynomial coefficients ascending " + poly;
}

std::string SL2Group::format(Element a) const {
  std::ostringstream out;
  out << "[[" << entry(a, 0, 0) << "," << entry(a, 0, 1) << "],[" << entry(a, 1, 0) << "," << entry(a, 1, 1)
      << "]]";
  return out.str();
}

// Permutations --------------------------------------------------------------

std::size_t PermutationGroup::PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree) {
  if (degree_ == 0) throw PreconditionError("permutation group needs at least one point");
  for (const Perm& p : generators) {
    if (p.size() != degree_) throw PreconditionError("generator has the wrong degree");
    std::vector<bool> hit(degree_, false);
    for (std::uint32_t x : p) {
      if (x >= degree_ || hit[x]) throw PreconditionError("generator is not a permutation");
      hit[x] = true;
    }
  }
  Perm id(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) id[i] = i;
  elements_.push_back(id);
  index_.emplace(id, 0);
  const auto compose = [](const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const Perm& g : generators) {
      Perm y = compose(elements_[i], g);
      if (index_.count(y)) continue;
      if (elements_.size() >= enumeration_limit()) throw PreconditionError("permutation group too large");
      index_.emplace(y, elements_.size());
      elements_.push_back(std::move(y));
    }
  }
  for (const Perm& g : generators) generators_.push_back(index_.at(g));
  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    Perm inv(degree_);
    for (std::uint32_t x = 0; x < degree_; ++x) inv[elements_[i][x]] = x;
    inverses_[i] = index_.at(inv);
  }
}

PermutationGroup PermutationGroup::parse(std::string_view spec) {
  std::vector<std::vector<std::vector<std::uint32_t>>> gens;  // generator -> cycles -> points
  std::size_t degree = 1;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < spec.size() && (spec[i] == ' ' || spec[i] == '\t')) ++i;
  };
  while (true) {
    skip_space();
    std::vector<std::vector<std::uint32_t>> cycles;
    if (i >= spec.size() || spec[i] != '(') throw ParseError("permutation: expected '(' at offset " + std::to_string(i));
    while (i < spec.size() && spec[i] == '(') {
      ++i;
      std::vector<std::uint32_t> cycle;
      while (true) {
        skip_space();
        if (i >= spec.size()) throw ParseError("permutation: unterminated cycle");
        if (spec[i] == ')') {
          ++i;
          break;
        }
        std::uint32_t point = 0;
        auto [ptr, ec] = std::from_chars(spec.data() + i, spec.data() + spec.size(), point);
        if (ec != std::errc() || point == 0) throw ParseError("permutation: points are positive integers");
        i = static_cast<std::size_t>(ptr - spec.data());
        if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end())
          throw ParseError("permutation: repeated point in a cycle");
        cycle.push_back(point - 1);
        degree = std::max<std::size_t>(degree, point);
        if (i < spec.size() && spec[i] == ',') ++i;
      }
      cycles.push_back(std::move(cycle));
      skip_space();
    }
    gens.push_back(std::move(cycles));
    skip_space();
    if (i == spec.size()) break;
    if (spec[i] != ',') throw ParseError("permutation: expected ',' between generators");
    ++i;
  }
  std::vector<Perm> perms;
  for (const auto& cycles : gens) {
    Perm p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
    // Cycles compose left to right, each applied after the previous one.
    for (const auto& cycle : cycles) {
      Perm c(degree);
      for (std::uint32_t x = 0; x < degree; ++x) c[x] = x;
      for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      for (std::uint32_t x = 0; x < degree; ++x) p[x] = c[p[x]];
    }
    perms.push_back(std::move(p));
  }
  return PermutationGroup(degree, std::move(perms));
}

std::optional<FiniteGroup::Element> PermutationGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup::Element PermutationGroup::multiply(Element a, Element b) const {
  const Perm& x = elements_.at(a);
  const Perm& y = elements_.at(b);
  Perm r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[i] = y[x[i]];
  return index_.at(r);
}

FiniteGroup::Element PermutationGroup::inverse(Element a) const { return inverses_.at(a); }

std::vector<FiniteGroup::Element> PermutationGroup::elements() const {
  std::vector<Element> out(elements_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

FiniteGroup::Element PermutationGroup::random_element(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<Element>(0, elements_.size() - 1)(rng);
}

std::string PermutationGroup::describe() const {
  std::string gens;
  for (Element g : generators_) gens += (gens.empty() ? "" : ",") + format(g);
  return "permutation group of order " + std::to_string(order()) + " on " + std::to_string(degree_) +
         " points generated by " + (gens.empty() ? "()" : gens);
}

std::string PermutationGroup::format(Element a) const {
  const Perm& p = elements_.at(a);
  std::vector<bool> done(degree_, false);
  std::string out;
  for (std::uint32_t x = 0; x < degree_; ++x) {
    if (done[x] || p[x] == x) continue;
    out += "(";
    for (std::uint32_t y = x; !done[y]; y = p[y]) {
      done[y] = true;
      out += (y == x ? "" : " ") + std::to_string(y + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Cyclic ------------------------------------------------------------------

CyclicGroup::CyclicGroup(std::uint64_t m) : m_(m) {
  if (m_ == 0) throw PreconditionError("cyclic group order must be positive");
}

std::vector<FiniteGroup::Element> CyclicGroup::elements() const {
  if (!enumerable()) throw PreconditionError("cyclic group too large to enumerate");
  std::vector<Element> out(m_);
  for (std::uint64_t i = 0; i < m_; ++i) out[i] = i;
  return out;
}

FiniteGroup::Element CyclicGroup::random_element(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<Element>(0, m_ - 1)(rng);
}

std::vector<FiniteGroup::Element> CyclicGroup::standard_generators() const {
  if (m_ == 1) return {};
  return {1};
}

std::string CyclicGroup::describe() const { return "cyclic group of order " + std::to_string(m_); }

// Parsing and closure -----------------------------------------------------

std::unique_ptr<FiniteGroup> parse_group_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec must look like sl2:n, perm:..., or cyclic:m");
  const std::string_view kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  const auto number = [&]() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) throw ParseError("group spec: expected a number");
    return v;
  };
  if (kind == "sl2") {
    const std::uint64_t n = number();
    if (n < 1 || n > 12) throw PreconditionError("sl2:n requires 1 <= n <= 12");
    return std::make_unique<SL2Group>(static_cast<unsigned>(n));
  }
  if (kind == "cyclic") return std::make_unique<CyclicGroup>(number());
  if (kind == "perm") return std::make_unique<PermutationGroup>(PermutationGroup::parse(arg));
  throw ParseError("unknown group kind '" + std::string(kind) + "'");
}

std::vector<std::uint32_t> Closure::word_for(FiniteGroup::Element a) const {
  std::vector<std::uint32_t> word;
  if (a == identity) return word;
  while (true) {
    const Step& s = steps.at(a);
    word.push_back(s.generator);
    if (s.root) break;
    a = s.previous;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Closure generated_subgroup(const FiniteGroup& g, std::span<const FiniteGroup::Element> gens) {
  if (!g.enumerable()) throw PreconditionError("group too large for closure");
  Closure c;
  c.identity = g.identity();
  c.elements.push_back(c.identity);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const FiniteGroup::Element x = c.elements[i];
    for (std::uint32_t k = 0; k < gens.size(); ++k) {
      const FiniteGroup::Element y = g.multiply(x, gens[k]);
      if (y == c.identity || c.steps.count(y)) continue;
      c.steps.emplace(y, Closure::Step{x, k, x == c.identity});
      c.elements.push_back(y);
    }
  }
  return c;
}

bool generates(const FiniteGroup& g, std::span<const FiniteGroup::Element> gens) {
  return generated_subgroup(g, gens).elements.size() == g.order();
}

}  // namespace schutz
