#pragma once

// Schur rings: partitions into basic sets, structure constants, cyclotomic
// partitions and the Latin-square-type amorphic fusions over F_n^2.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rdsys/groupring.hpp"
#include "rdsys/groups.hpp"

namespace rdsys {

class SringError : public std::runtime_error {
 public:
  enum class Kind { NotPartition, IdentityClass, InverseClass, Closure };

  SringError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

  // Closure witnesses: classes X, Y and two elements of one class Z with
  // different representation counts.
  std::size_t x = 0, y = 0;
  Elem z1 = 0, z2 = 0;
  std::int64_t count1 = 0, count2 = 0;

 private:
  Kind kind_;
};

class SchurPartition {
 public:
  /// Classes are sorted internally; throws SringError(NotPartition / IdentityClass).
  SchurPartition(GroupPtr group, std::vector<std::vector<Elem>> classes);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }
  std::size_t class_of(Elem g) const { return class_of_[g]; }
  std::size_t identity_class() const { return identity_class_; }

 private:
  GroupPtr group_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_of_;
  std::size_t identity_class_ = 0;
};

struct StructureConstants {
  std::size_t rank = 0;
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> tensor;  // c[x][y][z] at (x*rank + y)*rank + z

  std::int64_t at(std::size_t x, std::size_t y, std::size_t z) const { return tensor[(x * rank + y) * rank + z]; }
};

/// Checks the S-ring axioms and returns c^Z_{XY}; throws SringError.
StructureConstants verify_sring(const SchurPartition& partition);

/// Orbit partition of <gens>; asserted to be an S-ring.
SchurPartition cyclotomic(const GroupPtr& group, std::span<const Automorphism> gens);

struct AmorphicLatin {
  FieldPtr field;
  GroupPtr group;  // additive_group(field, 2), point (a, b) at index a + n*b
  std::uint32_t t = 0;
  /// Lines through the origin in slope order infinity, 0, 1, ..., n-1.
  std::vector<std::vector<Elem>> lines;
  /// labeling[i] = class label h in [0, t) of line i; label 0 is the identity of H.
  std::vector<std::uint32_t> labeling;
  /// sets[h] = union of L_i^# over lines with label h.
  std::vector<std::vector<Elem>> sets;
};

/// First n/t+1 lines get label 0, then consecutive blocks of n/t.
std::vector<std::uint32_t> default_line_labeling(std::uint32_t n, std::uint32_t t);

/// Throws std::invalid_argument when t does not divide n or the labeling has
/// wrong cell sizes.
AmorphicLatin amorphic_latin(const FieldPtr& field, std::uint32_t t,
                             std::optional<std::vector<std::uint32_t>> labeling = std::nullopt);

struct AmorphVerdict {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Exact check of the two Latin-square product relations for every ordered
/// pair of sets, with k_h = |X_h|/(n-1) and |G| = n^2.
AmorphVerdict check_amorph_relations(const GroupPtr& group, const std::vector<std::vector<Elem>>& sets);

}  // namespace rdsys
