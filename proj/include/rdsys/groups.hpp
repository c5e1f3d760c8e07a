#pragma once

// Materialized finite groups. Elements are indices 0..order-1 with the
// identity at 0; the multiplication table is stored densely.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rdsys/ff.hpp"

namespace rdsys {

using Elem = std::uint32_t;

/// Upper bound on materialized table size (order^2 entries).
inline constexpr std::uint32_t kMaxGroupOrder = 4096;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a group was built; enough to rebuild it deterministically.
struct GroupSpec {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<GroupPtr> factors;
  /// Central products: pairs (z1, theta(z1)) in factor indices.
  std::vector<std::pair<Elem, Elem>> amalgamation;

  std::int64_t parameter(const std::string& name) const;
};

class FiniteGroup {
 public:
  FiniteGroup(GroupSpec spec, std::uint32_t order, std::vector<Elem> table,
              std::vector<std::string> labels);

  std::uint32_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  /// h g h^-1
  Elem conjugate(Elem g, Elem h) const { return mul(mul(h, g), inv(h)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  std::uint32_t element_order(Elem a) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;
  /// element order -> number of elements of that order
  std::map<std::uint32_t, std::uint32_t> order_statistics() const;

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const GroupSpec& spec() const { return spec_; }
  const std::vector<Elem>& table() const { return table_; }

 private:
  GroupSpec spec_;
  std::uint32_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
};

/// Materializes a table from a composition law. Index 0 must be the identity.
GroupPtr make_group(GroupSpec spec, std::uint32_t order, const std::function<Elem(Elem, Elem)>& law,
                    const std::function<std::string(Elem)>& label);

/// Group axioms: exhaustive associativity up to order 512, 10^5 fixed-seed
/// samples above. Throws GroupError with a witness.
void audit_group(const FiniteGroup& g);

GroupPtr cyclic(std::uint32_t n);
GroupPtr elementary_abelian(std::uint32_t p, std::uint32_t k);
/// (F_q^dim, +), index sum_i v_i q^i.
GroupPtr additive_group(const FieldPtr& field, std::uint32_t dim);
/// Triples (x, y, z) in F_q^r x F_q^r x F_q, (x,y,z)(a,b,c) = (x+a, y+b, z+c+<x,b>).
GroupPtr heisenberg(const FieldPtr& field, std::uint32_t r);
/// Pairs (a, b) = x^a y^b, (a,b)(c,d) = (a+c+p*b*c mod p^2, b+d mod p).
GroupPtr extraspecial_mp3(std::uint32_t p);
/// a^i b^j, index i + 4j, with a^4 = e, b^2 = a^2, b a b^-1 = a^-1.
GroupPtr quaternion8();
/// Index i1 + |G1| * i2.
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);

struct HeisenbergCoords {
  std::vector<Field::Value> x;
  std::vector<Field::Value> y;
  Field::Value z = 0;
};
Elem heisenberg_encode(std::uint32_t q, const HeisenbergCoords& c);
HeisenbergCoords heisenberg_decode(std::uint32_t q, std::uint32_t r, Elem e);

inline Elem mp3_element(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return (a % (p * p)) + p * p * (b % p);
}
inline Elem q8_element(std::uint32_t i, std::uint32_t j) { return (i % 4) + 4 * (j % 2); }

class Subgroup {
 public:
  /// Throws GroupError if the set is not closed or misses the identity.
  Subgroup(GroupPtr group, std::vector<Elem> elements);

  const GroupPtr& group() const { return group_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
  bool contains(Elem g) const { return member_[g]; }
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  GroupPtr group_;
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> seeds);
Subgroup center(const GroupPtr& g);
bool is_normal(const Subgroup& h);
/// Every subgroup, for groups of order at most 256.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

struct TransversalCheck {
  bool left = false;   // meets every gH exactly once
  bool right = false;  // meets every Hg exactly once
};
TransversalCheck is_transversal(const Subgroup& h, std::span<const Elem> x);

class Automorphism {
 public:
  /// Verifies bijectivity and the homomorphism law on all pairs.
  static Automorphism from_permutation(GroupPtr g, std::vector<Elem> images);

  const GroupPtr& group() const { return group_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem operator()(Elem g) const { return images_[g]; }
  /// (*this)(other(g))
  Automorphism after(const Automorphism& other) const;
  Automorphism inverse() const;
  Automorphism power(std::int64_t k) const;
  std::uint64_t order() const;
  bool is_identity() const;
  std::vector<Elem> apply(std::span<const Elem> set) const;  // sorted image
  bool operator==(const Automorphism& o) const { return images_ == o.images_; }

 private:
  Automorphism(GroupPtr g, std::vector<Elem> images) : group_(std::move(g)), images_(std::move(images)) {}
  GroupPtr group_;
  std::vector<Elem> images_;
};

/// Extends generator -> image assignments to a map on the whole group and
/// checks it is an automorphism. Throws GroupError otherwise.
Automorphism automorphism_from_images(const GroupPtr& g, std::span<const Elem> generators,
                                      std::span<const Elem> images);

/// Orbits of <gens> on the group, each sorted, ordered by least element.
std::vector<std::vector<Elem>> orbits(const FiniteGroup& g, std::span<const Automorphism> gens);

/// All elements of <gens> (throws past `limit`).
std::vector<Automorphism> generate_automorphism_group(std::span<const Automorphism> gens,
                                                      std::size_t limit = 100000);

/// Injective homomorphism source -> target.
struct Embedding {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem g) const { return map[g]; }
  std::vector<Elem> image_of(std::span<const Elem> set) const;  // sorted
  Subgroup image() const;
};
Embedding make_embedding(GroupPtr source, GroupPtr target, std::vector<Elem> map);

struct CentralProduct {
  GroupPtr group;
  Embedding first;
  Embedding second;
  Subgroup amalgamated;  // image of Z1 (= image of Z2)
};

/// (G1 x G2)/{(z, theta(z)^-1)}. theta maps Z1 -> Z2 as (z1, z2) pairs; when
/// omitted both Z must be cyclic of equal order and their least-index
/// generators are matched.
CentralProduct central_product(const GroupPtr& g1, const GroupPtr& g2, const Subgroup& z1,
                               const Subgroup& z2,
                               std::optional<std::vector<std::pair<Elem, Elem>>> theta = std::nullopt);

std::vector<Elem> set_inverse(const FiniteGroup& g, std::span<const Elem> x);  // sorted
std::vector<Elem> sorted_unique(std::vector<Elem> v);

}  // namespace rdsys
