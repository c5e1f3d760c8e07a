#pragma once

// Cayley graphs of difference sets as distance-regular antipodal covers,
// and the Thas-Somma graphs they are compared against.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdsys/ff.hpp"
#include "rdsys/groups.hpp"
#include "rdsys/rds.hpp"

namespace rdsys {

struct Graph {
  std::uint32_t vertices = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists

  std::size_t edge_count() const;
};

class DrgError : public std::runtime_error {
 public:
  enum class Kind { Precondition, Disconnected, WrongDiameter, NotDistanceRegular, NotAntipodal };

  DrgError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

  std::uint32_t u = 0, v = 0;  // witness pair where relevant
  int diameter = -1;

 private:
  Kind kind_;
};

struct IntersectionArray {
  std::int64_t b0 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0, c3 = 0;

  bool operator==(const IntersectionArray&) const = default;
  std::string to_string() const;  // "{b0,b1,b2;c1,c2,c3}"
};

struct DrgCertificate {
  IntersectionArray array;
  /// Classes of the relation "equal or at distance 3", each sorted, ordered by
  /// least vertex.
  std::vector<std::vector<std::uint32_t>> antipodal_classes;
};

/// u ~ v iff v u^-1 in S. S must be inverse-closed and identity-free.
Graph cayley_graph(const GroupPtr& g, std::span<const Elem> s);

/// BFS from every vertex. Requires a connected diameter-3 distance-regular
/// antipodal graph; throws DrgError naming the first failure.
DrgCertificate certify_drg(const Graph& graph);

/// Cayley graph of S, certified.
DrgCertificate cayley_drg_check(const GroupPtr& g, std::span<const Elem> s);

/// {n lambda - 1, (n-1) lambda, 1; 1, lambda, n lambda - 1}
IntersectionArray cover_array(std::int64_t n, std::int64_t lambda);

struct CoverRoundTrip {
  RdsCertificate rds;
  DrgCertificate drg;
  /// (r, n, c2) read off the graph: r = number of classes, n = class size.
  std::int64_t cover_r = 0, cover_n = 0, cover_c2 = 0;
  /// The RDS rebuilt from the graph: {e} ∪ neighbors of e, forbidden = class of e.
  RdsCertificate rebuilt;
};

/// Reversible semiregular RDS -> Cayley graph of X^# -> cover parameters ->
/// rebuilt RDS. Throws if any step disagrees: array vs the cover template,
/// antipodal classes vs right cosets Nu, rebuilt parameters vs the original.
CoverRoundTrip rds_cover_round_trip(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n);

/// [[0, I], [-I, 0]] of size 2r.
FieldMatrix standard_symplectic(const Field& f, std::uint32_t r);

/// Vertices F^{2r} x F, vertex (a, alpha) at index sum a_i q^i + q^{2r} alpha;
/// (a, alpha) ~ (b, beta) iff a != b and a^T B b = alpha - beta.
/// B must be alternating and nondegenerate (std::invalid_argument otherwise).
Graph thas_somma(const FieldPtr& f, std::uint32_t r, const FieldMatrix& b);

std::string to_adjlist(const Graph& graph);
std::string to_dimacs(const Graph& graph);

}  // namespace rdsys
