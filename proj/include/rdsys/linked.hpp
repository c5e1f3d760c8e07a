#pragma once

// Closed linked systems of relative difference sets: verification, the
// (mu, nu) branches, the associated group on S ∪ {∞}, and products.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdsys/groups.hpp"
#include "rdsys/rds.hpp"

namespace rdsys {

class LinkedError : public std::runtime_error {
 public:
  enum class Kind {
    TooFewMembers,
    DuplicateMember,
    MemberNotRds,
    ParameterMismatch,
    InverseNotInFamily,
    ProductNotTwoValued,
    LevelSetNotMember,
    LevelSetAmbiguous,
    ParameterBranchMismatch,
    NonIntegralBranch,
    AssociativityFails,
    CharacteristicMismatch,
    NotAutomorphism,
    Precondition,
  };

  LinkedError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

  /// Member indices involved (alpha, beta), and a group element where relevant.
  std::optional<std::size_t> alpha, beta;
  std::optional<Elem> element;

 private:
  Kind kind_;
};

struct LinkedParameters {
  std::int64_t m = 0, n = 0, k = 0, lambda = 0, s = 0, mu = 0, nu = 0;
  bool operator==(const LinkedParameters&) const = default;
  std::string to_string() const;  // "(m,n,k,lambda,s,mu,nu)"
};

struct MuNu {
  std::int64_t mu = 0, nu = 0;
  bool operator==(const MuNu&) const = default;
};

/// The two sign branches of mu = (k^2 ± (mn-k)R)/(mn), nu = k(k ∓ R)/(mn),
/// R^2 = k(mn-k)/(m(n-1)); only nonnegative integral ones, sorted by mu.
/// Throws LinkedError(NonIntegralBranch) when none survives.
std::vector<MuNu> munu_branches(std::int64_t m, std::int64_t n, std::int64_t k);

inline constexpr int kNoPsi = -1;

struct LinkedCertificate {
  GroupPtr group;
  std::vector<Elem> forbidden;
  std::vector<std::vector<Elem>> sets;
  LinkedParameters params;
  /// X_alpha^(-1) = X_chi[alpha]
  std::vector<std::size_t> chi;
  /// psi[alpha][beta], kNoPsi exactly when beta = chi(alpha)
  std::vector<std::vector<int>> psi;
  std::vector<RdsCertificate> members;
};

/// Recovers chi, psi, mu, nu from the exact products and cross-checks (mu, nu)
/// against munu_branches. Throws LinkedError.
LinkedCertificate verify_linked(const GroupPtr& g, const Subgroup& n, const std::vector<std::vector<Elem>>& family);

struct AssociatedGroup {
  /// Carrier element 0 is ∞ (the identity); index alpha is stored at alpha+1.
  GroupPtr group;
  std::string kind;  // "cyclic", "elementary abelian", "abelian", "nonabelian"
  std::string name;  // e.g. "C4", "C2^2", "C2 x C4", "order 8, exponent 4"
  std::vector<std::uint64_t> invariant_factors;  // abelian only, each dividing the next
};

/// Builds the operation table on S ∪ {∞} and checks associativity
/// exhaustively (LinkedError::AssociativityFails with the triple).
AssociatedGroup associated_group(std::size_t s, const std::vector<std::size_t>& chi,
                                 const std::vector<std::vector<int>>& psi);

/// Invariant factors and a printable class for any group table.
AssociatedGroup recognize(const GroupPtr& g);

struct LinkedProduct {
  LinkedCertificate certificate;
  /// mu1 mu2 + (n-1) nu1 nu2 and mu1 nu2 + mu2 nu1 + (n-2) nu1 nu2
  MuNu predicted;
  bool matches_recurrence = false;
  bool characteristic_preserved = false;
};

/// {X_alpha Y_f(alpha)} inside a central product. f is given on the carrier
/// of the associated group (0 = ∞) and must fix ∞ and be an automorphism.
LinkedProduct linked_product(const CentralProduct& cp, const LinkedCertificate& l1, const LinkedCertificate& l2,
                             const std::vector<std::size_t>& f);

/// The identity on a carrier of size s+1.
std::vector<std::size_t> identity_carrier_map(std::size_t s);

}  // namespace rdsys
