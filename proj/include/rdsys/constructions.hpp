#pragma once

// Explicit constructions: Heisenberg linked systems, the extraspecial group
// M_{p^3} and its difference sets, the quaternion system, the amorphic-ring
// systems over H x G, and the exponent-p^2 assembly.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdsys/ff.hpp"
#include "rdsys/groups.hpp"
#include "rdsys/linked.hpp"
#include "rdsys/rds.hpp"
#include "rdsys/schur.hpp"

namespace rdsys {

// ---------------------------------------------------------------- Heisenberg

/// (alpha, beta) standing for [[alpha, beta], [eps*beta, alpha]].
using MatrixPair = std::pair<Field::Value, Field::Value>;

/// phi(M) on the 3-dimensional Heisenberg group over f, built pointwise from
/// the defining formula and verified as an automorphism.
Automorphism heisenberg_phi(const GroupPtr& g, const Field& f, Field::Value eps, MatrixPair m);

struct HeisenbergSystem {
  FieldPtr field;
  GroupPtr group;
  Field::Value eps = 0;
  Field::Value delta = 0;  // (16 eps)^{-1}
  /// Generator of the cyclic group M(eps) and its image in Aut(G).
  MatrixPair generator;
  Automorphism phi_generator;
  Subgroup center;
  std::vector<std::vector<Elem>> y;  // Y_i, i in canonical field order
  std::vector<std::vector<Elem>> x;  // X_i = Y_i ∪ {e}
  LinkedCertificate certificate;
  /// Extracted psi(i, j) equals (ij + delta)/(i + j) on every pair j != -i.
  bool psi_matches_formula = false;
};

/// eps defaults to least_nonsquare(F). Throws std::invalid_argument for even q.
HeisenbergSystem heisenberg_system(const FieldPtr& f, std::optional<Field::Value> eps = std::nullopt);

struct ProductStep {
  MuNu predicted;  // product recurrence
  MuNu realized;
  bool matches_recurrence = false;
};

struct IteratedSystem {
  GroupPtr group;
  Subgroup center;
  LinkedCertificate certificate;
  std::vector<ProductStep> steps;
  /// Closed form stated for the r-fold system, and whether the computed
  /// (mu, nu) agrees with it and with the iterated recurrence.
  MuNu closed_form;
  bool matches_closed_form = false;
  bool matches_recurrence = true;
};

/// r-fold central product of the 3-dimensional system with itself, built by
/// linked_product with the carrier map f (identity by default, given on the
/// associated group's carrier with 0 = ∞). Centers are identified by z -> z.
IteratedSystem heisenberg_system_2r(const FieldPtr& f, std::uint32_t r,
                                    const std::optional<std::vector<std::size_t>>& carrier_map = std::nullopt);

/// (q^{2r-1} - q^r + q^{r-1}, q^{2r-1} + q^{r-1})
MuNu heisenberg_closed_form(std::int64_t q, std::uint32_t r);

// ---------------------------------------------------------- M_{p^3} and Q_8

/// Least primitive root modulo p^2, raised to the p-th power mod p^2.
std::uint32_t mp3_xi(std::uint32_t p);

struct ExtraspecialSystem {
  std::uint32_t p = 0;
  GroupPtr group;
  std::uint32_t xi = 0;
  Automorphism sigma, tau;
  std::vector<Automorphism> sigma_i;  // x -> x y^i, y -> y
  std::vector<Automorphism> k_group;  // all of <sigma, tau>
  SchurPartition partition;           // orbits of <sigma, tau>
  Subgroup y_sub, z_sub;              // <y>, <z> with z = x^p
  std::vector<std::vector<Elem>> x;   // X_i = X_0 y^i
  std::vector<std::vector<Elem>> y;   // Y_i = X_i ∪ Y, forbidden Z
  std::vector<std::vector<Elem>> z;   // Z_i = X_i ∪ Z, forbidden Y
  std::vector<RdsCertificate> y_certs, z_certs;
  std::vector<PdsCertificate> s_certs;  // S_i = X_i ∪ Y^# ∪ Z^#
};

/// Throws std::invalid_argument for p = 2 or p not prime; std::logic_error if
/// any structural assertion fails.
ExtraspecialSystem extraspecial_rds(std::uint32_t p);

/// {X_1, X_2} in Q_8 with X_1 = {e, a, b, ba}.
LinkedCertificate q8_system();
/// r-fold central product over the centers, via linked_product with the
/// carrier map f (identity by default).
IteratedSystem q8_system_2r(std::uint32_t r,
                            const std::optional<std::vector<std::size_t>>& carrier_map = std::nullopt);
/// (2^{2r-1} - 2^r + 2^{r-1}, 2^{2r-1} + 2^{r-1})
MuNu q8_closed_form(std::uint32_t r);

// ------------------------------------------------- amorphic-ring systems

struct EndoSpace {
  std::uint32_t p = 0, j = 0, i = 0;
  /// elements[v] is multiplication by the element v of F_{p^j} (v < p^i) on
  /// coefficient vectors; elements[0] = 0.
  std::vector<FieldMatrix> elements;
};

/// Span of multiplication by 1, t, ..., t^{i-1} in the regular representation
/// of F_{p^j}. Throws std::invalid_argument if i > j or i = 0.
EndoSpace endo_space(std::uint32_t p, std::uint32_t j, std::uint32_t i);

struct DpsSystem {
  FieldPtr field;  // F_n
  std::uint32_t t = 0;
  GroupPtr h_group;  // C_p^j
  AmorphicLatin amorphic;
  GroupPtr group;    // H x G, index h + t*g
  Subgroup h_sub;    // H inside H x G
  EndoSpace s;
  /// Y_f for f = s.elements[1..]: family member a is f = a + 1.
  std::vector<std::vector<Elem>> y;
  LinkedCertificate certificate;
  /// Products of all pairs, including inverse pairs, matched exactly.
  bool product_identity_holds = false;
};

/// S must be additively closed with every nonzero element invertible and at
/// least two nonzero elements; t = p^j must divide n. Throws
/// std::invalid_argument on bad input.
DpsSystem dps_system(const FieldPtr& n_field, std::uint32_t t, const EndoSpace& s,
                     std::optional<std::vector<std::uint32_t>> labeling = std::nullopt);

// -------------------------------------------------- exponent p^2 assembly

struct ExponentP2Rds {
  GroupPtr group;
  std::uint64_t exponent = 0;
  RdsCertificate certificate;
};

/// M_{p^3} carrying Y_0, centrally multiplied with r-1 copies of the
/// 3-dimensional Heisenberg group carrying X_0.
ExponentP2Rds exponent_p2_rds(std::uint32_t p, std::uint32_t r);

}  // namespace rdsys
