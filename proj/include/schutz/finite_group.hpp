#pragma once

#include "schutz/gf2n.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace schutz {

/// A finite group with elements encoded as opaque 64-bit ids.
class FiniteGroup {
 public:
  using Element = std::uint64_t;

  virtual ~FiniteGroup() = default;

  virtual Element identity() const = 0;
  virtual Element multiply(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
  virtual std::uint64_t order() const = 0;
  /// Every element; only for groups with order() ≤ enumeration_limit().
  virtual std::vector<Element> elements() const = 0;
  virtual Element random_element(std::mt19937_64& rng) const = 0;
  /// A fixed generating set.
  virtual std::vector<Element> standard_generators() const = 0;
  virtual std::string describe() const = 0;
  virtual std::string format(Element a) const = 0;

  static constexpr std::uint64_t enumeration_limit() { return std::uint64_t{1} << 22; }
  bool enumerable() const { return order() <= enumeration_limit(); }

  Element power(Element a, std::uint64_t k) const;
  std::uint64_t element_order(Element a) const;
};

/// SL₂(GF(2ⁿ)); an element packs its entries a, b, c, d of [[a, b], [c, d]]
/// into 16-bit fields, a in the most significant one.
class SL2Group final : public FiniteGroup {
 public:
  explicit SL2Group(unsigned n);

  static Element pack(GF2n::Elem a, GF2n::Elem b, GF2n::Elem c, GF2n::Elem d);
  static GF2n::Elem entry(Element m, unsigned row, unsigned col);

  const GF2n& field() const { return field_; }
  /// Packs a 2×2 matrix; throws unless it has determinant 1.
  Element matrix(GF2n::Elem a, GF2n::Elem b, GF2n::Elem c, GF2n::Elem d) const;
  /// Determinant of any packed 2×2 matrix.
  GF2n::Elem determinant(Element m) const;
  /// Matrix product of packed 2×2 matrices, invertible or not.
  Element matmul(Element x, Element y) const;
  /// Inverse of a packed matrix with non-zero determinant.
  Element matinv(Element x) const;

  Element identity() const override { return pack(1, 0, 0, 1); }
  Element multiply(Element a, Element b) const override { return matmul(a, b); }
  Element inverse(Element a) const override;
  std::uint64_t order() const override;
  std::vector<Element> elements() const override;
  Element random_element(std::mt19937_64& rng) const override;
  /// E₁₂(1), E₂₁(1) and diag(g, g⁻¹).
  std::vector<Element> standard_generators() const override;
  std::string describe() const override;
  std::string format(Element a) const override;

 private:
  GF2n field_;
};

/// A permutation group on points 1..degree given by generators; the product
/// a·b applies a first.
class PermutationGroup final : public FiniteGroup {
 public:
  using Perm = std::vector<std::uint32_t>;  // 0-based images

  PermutationGroup(std::size_t degree, std::vector<Perm> generators);
  /// Generators in cycle notation separated by commas, e.g. "(1 2 3),(1 2)".
  static PermutationGroup parse(std::string_view spec);

  const Perm& permutation(Element a) const { return elements_.at(a); }
  std::optional<Element> find(const Perm& p) const;

  Element identity() const override { return 0; }
  Element multiply(Element a, Element b) const override;
  Element inverse(Element a) const override;
  std::uint64_t order() const override { return elements_.size(); }
  std::vector<Element> elements() const override;
  Element random_element(std::mt19937_64& rng) const override;
  std::vector<Element> standard_generators() const override { return generators_; }
  std::string describe() const override;
  std::string format(Element a) const override;

 private:
  struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
  };

  std::size_t degree_;
  std::vector<Perm> elements_;  // id = index, identity first
  std::unordered_map<Perm, Element, PermHash> index_;
  std::vector<Element> generators_;
  std::vector<Element> inverses_;
};

/// Z/mZ written additively.
class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(std::uint64_t m);

  Element identity() const override { return 0; }
  Element multiply(Element a, Element b) const override { return (a + b) % m_; }
  Element inverse(Element a) const override { return (m_ - a) % m_; }
  std::uint64_t order() const override { return m_; }
  std::vector<Element> elements() const override;
  Element random_element(std::mt19937_64& rng) const override;
  std::vector<Element> standard_generators() const override;
  std::string describe() const override;
  std::string format(Element a) const override { return std::to_string(a); }

 private:
  std::uint64_t m_;
};

/// "sl2:n", "perm:<cycles>,<cycles>,..." or "cyclic:m".
std::unique_ptr<FiniteGroup> parse_group_spec(std::string_view spec);

/// Closure of gens under multiplication. Each element records its BFS
/// predecessor, so shortest positive words over the generator indices can
/// be read back. Throws if the group is not enumerable.
struct Closure {
  struct Step {
    FiniteGroup::Element previous = 0;
    std::uint32_t generator = 0;
    bool root = false;  // the element is generators[generator] itself
  };

  std::vector<FiniteGroup::Element> elements;
  std::unordered_map<FiniteGroup::Element, Step> steps;

  bool contains(FiniteGroup::Element a) const { return a == identity || steps.count(a) > 0; }
  /// Word w with gens[w₀]·gens[w₁]·… = a; empty for the identity.
  std::vector<std::uint32_t> word_for(FiniteGroup::Element a) const;

  FiniteGroup::Element identity = 0;
};
Closure generated_subgroup(const FiniteGroup& g, std::span<const FiniteGroup::Element> gens);

/// gens generate the whole group. Throws if the group is not enumerable.
bool generates(const FiniteGroup& g, std::span<const FiniteGroup::Element> gens);

}  // namespace schutz
