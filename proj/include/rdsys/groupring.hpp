#pragma once

// Exact integer group ring Z[G] with dense, overflow-checked coefficients.

#include <cstdint>
#include <span>
#include <vector>

#include "rdsys/groups.hpp"

namespace rdsys {

class GroupRingElement {
 public:
  /// The zero element.
  explicit GroupRingElement(GroupPtr group);
  GroupRingElement(GroupPtr group, std::vector<std::int64_t> coefficients);

  /// Sum of the listed elements (0/1 vector). Throws std::out_of_range.
  static GroupRingElement indicator(const GroupPtr& group, std::span<const Elem> set);
  static GroupRingElement identity(const GroupPtr& group);
  static GroupRingElement whole(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t operator[](Elem g) const { return coeffs_[g]; }
  std::int64_t sum() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(std::int64_t c) const;
  /// g -> g^-1 on coefficients.
  GroupRingElement involution() const;
  bool operator==(const GroupRingElement& o) const;

  /// Elements with coefficient exactly `value`, sorted.
  std::vector<Elem> level_set(std::int64_t value) const;
  /// Distinct coefficient values, ascending.
  std::vector<std::int64_t> distinct_values() const;

 private:
  void require_same_group(const GroupRingElement& o) const;

  GroupPtr group_;
  std::vector<std::int64_t> coeffs_;
};

inline GroupRingElement operator*(std::int64_t c, const GroupRingElement& a) { return a.scaled(c); }

/// (a, b) = sum_g a_g b_g
std::int64_t scalar(const GroupRingElement& a, const GroupRingElement& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace rdsys
