#pragma once

// Relative difference sets and partial difference sets, verified by exact
// group-ring arithmetic.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdsys/groupring.hpp"
#include "rdsys/groups.hpp"

namespace rdsys {

class RdsError : public std::runtime_error {
 public:
  enum class Kind { EquationFails, LambdaNotPositive, Precondition, LemmaViolation, Collision };

  RdsError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

  /// For EquationFails: the first element whose coefficient is wrong.
  std::optional<Elem> witness;
  std::int64_t expected = 0;
  std::int64_t actual = 0;

 private:
  Kind kind_;
};

struct RdsCertificate {
  GroupPtr group;
  std::vector<Elem> set;
  std::vector<Elem> forbidden;  // elements of N
  std::int64_t m = 0, n = 0, k = 0, lambda = 0;
  bool semiregular = false;
  bool reversible = false;
  bool icommuting = false;
  bool forbidden_normal = false;
  /// X^(-1) is an RDS with the same parameters (forbidden subgroup may differ).
  bool symmetric = false;
  /// Symmetric but not i-commuting: no such example is known, so it is
  /// surfaced instead of rejected.
  bool notable = false;
};

/// X must be duplicate-free and N a proper subgroup. Throws RdsError.
RdsCertificate verify_rds(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n);

/// Every N with verify_rds(G, X, N) passing. Since N^# must be exactly the
/// zero set of X X^(-1) off the identity, there is at most one.
std::vector<Subgroup> find_forbidden(const GroupPtr& g, std::span<const Elem> x);

/// Evaluates both XX^(-1) = X^(-1)X and XN = NX and throws
/// RdsError(LemmaViolation) if they disagree.
bool is_icommuting(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n);

struct RdsProduct {
  std::vector<Elem> set;
  RdsCertificate certificate;
};

/// X1 X2 for semiregular RDSs in two proper subgroups G1, G2 of G = G1 G2
/// sharing the forbidden subgroup N = G1 ∩ G2. X1 must be i-commuting.
/// X1, X2 are given in source indices of the embeddings.
RdsProduct rds_product(const Embedding& e1, const Embedding& e2, std::span<const Elem> x1,
                       std::span<const Elem> x2);

struct PdsCertificate {
  GroupPtr group;
  std::vector<Elem> set;
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool reversible = false;
};

/// S must be nonempty, identity-free and duplicate-free. Throws RdsError.
PdsCertificate verify_pds(const GroupPtr& g, std::span<const Elem> s);

/// S = X^# ∪ N^# for a reversible semiregular (n^2, n, n^2, n)-RDS, verified as
/// an (n^3, n^2+n-2, n-2, n+2)-PDS.
PdsCertificate rds_to_pds(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n);

/// Right translates Xg, each sorted, duplicates collapsed, in order of g.
std::vector<std::vector<Elem>> dev(const GroupPtr& g, std::span<const Elem> x);

}  // namespace rdsys
