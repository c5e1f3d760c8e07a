#include <doctest.h>

#include <algorithm>
#include <optional>

#include "rdsys/constructions.hpp"
#include "rdsys/rds.hpp"

using namespace rdsys;

namespace {

// Counts x y^-1 = g over X x X directly from the table.
std::vector<std::int64_t> difference_counts(const FiniteGroup& g, const std::vector<Elem>& x) {
  std::vector<std::int64_t> d(g.order(), 0);
  for (Elem a : x)
    for (Elem b : x) ++d[g.mul(a, g.inv(b))];
  return d;
}

// lambda if X is an RDS relative to N by direct counting, otherwise nullopt.
std::optional<std::int64_t> brute_rds_lambda(const FiniteGroup& g, const std::vector<Elem>& x, const Subgroup& n) {
  const auto d = difference_counts(g, x);
  if (d[0] != static_cast<std::int64_t>(x.size())) return std::nullopt;
  std::optional<std::int64_t> lambda;
  for (Elem a = 1; a < g.order(); ++a) {
    if (n.contains(a)) {
      if (d[a] != 0) return std::nullopt;
    } else if (!lambda) {
      lambda = d[a];
    } else if (*lambda != d[a]) {
      return std::nullopt;
    }
  }
  if (!lambda || *lambda <= 0) return std::nullopt;
  return lambda;
}

std::vector<Elem> q8_x1(const GroupPtr& g) {
  const Elem a = q8_element(1, 0), b = q8_element(0, 1);
  return sorted_unique({0, a, b, g->mul(b, a)});
}

void check_identity(const RdsCertificate& c) { CHECK(c.k * (c.k - 1) == c.lambda * c.n * (c.m - 1)); }

}  // namespace

TEST_CASE("quaternion set X1 is a semiregular i-commuting RDS") {
  auto g = quaternion8();
  const auto x = q8_x1(g);
  const auto z = center(g);
  const auto c = verify_rds(g, x, z);
  CHECK(c.m == 4);
  CHECK(c.n == 2);
  CHECK(c.k == 4);
  CHECK(c.lambda == 2);
  CHECK(c.semiregular);
  CHECK(c.icommuting);
  CHECK_FALSE(c.reversible);
  CHECK(c.symmetric);
  CHECK(brute_rds_lambda(*g, x, z) == 2);
  check_identity(c);
}

TEST_CASE("X = {e} has lambda 0") {
  auto g = quaternion8();
  const std::vector<Elem> e{0};
  try {
    verify_rds(g, e, center(g));
    FAIL("expected LambdaNotPositive");
  } catch (const RdsError& err) {
    CHECK(err.kind() == RdsError::Kind::LambdaNotPositive);
  }
}

TEST_CASE("preconditions") {
  auto g = quaternion8();
  const auto z = center(g);
  const std::vector<Elem> dup{0, 1, 1};
  const std::vector<Elem> out_of_range{0, 8};
  for (const auto& bad : {dup, out_of_range, std::vector<Elem>{}}) {
    try {
      verify_rds(g, bad, z);
      FAIL("expected a precondition error");
    } catch (const RdsError& err) {
      CHECK(err.kind() == RdsError::Kind::Precondition);
    }
  }
  std::vector<Elem> all(8);
  for (Elem i = 0; i < 8; ++i) all[i] = i;
  CHECK_THROWS_AS(verify_rds(g, q8_x1(g), Subgroup(g, all)), RdsError);
}

TEST_CASE("Heisenberg X0 is a reversible (9,3,9,3)-RDS") {
  const auto h = heisenberg_system(field_make(3, 1));
  const auto c = verify_rds(h.group, h.x[0], h.center);
  CHECK(c.m == 9);
  CHECK(c.n == 3);
  CHECK(c.k == 9);
  CHECK(c.lambda == 3);
  CHECK(c.reversible);
  CHECK(brute_rds_lambda(*h.group, h.x[0], h.center) == 3);
}

TEST_CASE("find_forbidden agrees with a scan over all subgroups") {
  struct Case {
    GroupPtr g;
    std::vector<Elem> x;
  };
  std::vector<Case> cases;
  auto q8 = quaternion8();
  cases.push_back({q8, q8_x1(q8)});
  cases.push_back({q8, set_inverse(*q8, q8_x1(q8))});
  const auto h = heisenberg_system(field_make(3, 1));
  for (const auto& x : h.x) cases.push_back({h.group, x});
  const auto ex = extraspecial_rds(3);
  for (const auto& x : ex.y) cases.push_back({ex.group, x});
  for (const auto& x : ex.z) cases.push_back({ex.group, x});
  std::vector<Elem> whole(8);
  for (Elem i = 0; i < 8; ++i) whole[i] = i;
  cases.push_back({q8, whole});
  cases.push_back({q8, {0, 1, 2}});

  for (const auto& [g, x] : cases) {
    std::vector<std::vector<Elem>> scan;
    for (const auto& n : all_subgroups(g)) {
      if (n.size() == g->order()) continue;
      if (brute_rds_lambda(*g, x, n)) scan.push_back(n.elements());
    }
    std::vector<std::vector<Elem>> found;
    for (const auto& n : find_forbidden(g, x)) found.push_back(n.elements());
    CHECK(found == scan);
  }
  CHECK(find_forbidden(q8, q8_x1(q8)).front() == center(q8));
  // G itself is the trivial (8,1,8,8) difference set relative to {e}.
  const auto trivial = find_forbidden(q8, whole);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().size() == 1);
  // Z_0 in M_27 has the nonnormal forbidden subgroup Y.
  const auto nz = find_forbidden(ex.group, ex.z[0]);
  REQUIRE(nz.size() == 1);
  CHECK(nz.front() == ex.y_sub);
  CHECK_FALSE(is_normal(nz.front()));
}

TEST_CASE("i-commuting: normal N, reversible X, and the nonnormal case") {
  auto q8 = quaternion8();
  CHECK(is_icommuting(q8, q8_x1(q8), center(q8)));
  const auto ex = extraspecial_rds(3);
  for (const auto& z : ex.z) {
    CHECK(z == set_inverse(*ex.group, z));
    CHECK(is_icommuting(ex.group, z, ex.y_sub));
  }
  for (const auto& y : ex.y) CHECK(is_icommuting(ex.group, y, ex.z_sub));
}

TEST_CASE("the dual i-commuting criteria agree on every certificate produced here") {
  std::vector<RdsCertificate> certs;
  auto q8 = quaternion8();
  certs.push_back(verify_rds(q8, q8_x1(q8), center(q8)));
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto h = heisenberg_system(field_make(q, 1));
    for (const auto& m : h.certificate.members) certs.push_back(m);
  }
  for (std::uint32_t p : {3u, 5u}) {
    const auto ex = extraspecial_rds(p);
    certs.insert(certs.end(), ex.y_certs.begin(), ex.y_certs.end());
    certs.insert(certs.end(), ex.z_certs.begin(), ex.z_certs.end());
  }
  for (const auto& c : certs) {
    check_identity(c);
    const Subgroup n(c.group, c.forbidden);
    CHECK_NOTHROW(is_icommuting(c.group, c.set, n));
    // Independent evaluation of both criteria from the table.
    const auto& g = *c.group;
    std::vector<std::int64_t> a(g.order(), 0), b(g.order(), 0), xn(g.order(), 0), nx(g.order(), 0);
    for (Elem x : c.set)
      for (Elem y : c.set) {
        ++a[g.mul(x, g.inv(y))];
        ++b[g.mul(g.inv(x), y)];
      }
    for (Elem x : c.set)
      for (Elem m : c.forbidden) {
        ++xn[g.mul(x, m)];
        ++nx[g.mul(m, x)];
      }
    CHECK((a == b) == (xn == nx));
    CHECK(c.icommuting == (a == b));
  }
}

TEST_CASE("products of RDSs in central products") {
  auto q8 = quaternion8();
  auto z = center(q8);
  auto cp = central_product(q8, q8, z, z);
  const auto x1 = q8_x1(q8);
  const auto pr = rds_product(cp.first, cp.second, x1, x1);
  CHECK(pr.certificate.m == 16);
  CHECK(pr.certificate.n == 2);
  CHECK(pr.certificate.k == 16);
  CHECK(pr.certificate.lambda == 8);
  CHECK(brute_rds_lambda(*cp.group, pr.set, cp.amalgamated) == 8);

  const auto ex = extraspecial_rds(3);
  const auto h = heisenberg_system(field_make(3, 1));
  auto mh = central_product(ex.group, h.group, ex.z_sub, h.center);
  const auto pr2 = rds_product(mh.first, mh.second, ex.y[0], h.x[0]);
  CHECK(pr2.certificate.m == 81);
  CHECK(pr2.certificate.n == 3);
  CHECK(pr2.certificate.k == 81);
  CHECK(pr2.certificate.lambda == 27);
  CHECK(mh.group->exponent() == 9);
  check_identity(pr2.certificate);

  // G2 = N is not a proper subgroup situation.
  auto zz = make_embedding(cyclic(2), cp.group, cp.amalgamated.elements());
  CHECK_THROWS_AS(rds_product(cp.first, zz, x1, std::vector<Elem>{0}), RdsError);
}

TEST_CASE("partial difference sets") {
  const auto h3 = heisenberg_system(field_make(3, 1));
  const auto p3 = rds_to_pds(h3.group, h3.x[0], h3.center);
  CHECK(std::vector<std::int64_t>{p3.v, p3.k, p3.lambda, p3.mu} == std::vector<std::int64_t>{27, 10, 1, 5});
  const auto ex = extraspecial_rds(3);
  const auto pm = rds_to_pds(ex.group, ex.y[0], ex.z_sub);
  CHECK(std::vector<std::int64_t>{pm.v, pm.k, pm.lambda, pm.mu} == std::vector<std::int64_t>{27, 10, 1, 5});
  const auto h5 = heisenberg_system(field_make(5, 1));
  const auto p5 = rds_to_pds(h5.group, h5.x[0], h5.center);
  CHECK(std::vector<std::int64_t>{p5.v, p5.k, p5.lambda, p5.mu} == std::vector<std::int64_t>{125, 28, 3, 7});

  // Direct count of differences inside S for the q = 3 set.
  const auto d = difference_counts(*h3.group, p3.set);
  std::vector<bool> in_s(27, false);
  for (Elem a : p3.set) in_s[a] = true;
  for (Elem a = 1; a < 27; ++a) CHECK(d[a] == (in_s[a] ? 1 : 5));

  auto q8 = quaternion8();
  CHECK_THROWS_AS(verify_pds(q8, std::vector<Elem>{0, 1}), RdsError);
  CHECK_THROWS_AS(rds_to_pds(q8, q8_x1(q8), center(q8)), RdsError);
}

TEST_CASE("single-element perturbations produce a concrete witness") {
  auto q8 = quaternion8();
  auto x = q8_x1(q8);
  const auto z = center(q8);
  x[1] = q8_element(2, 0);  // a -> a^2, which lies in N
  x = sorted_unique(x);
  try {
    verify_rds(q8, x, z);
    FAIL("perturbed set verified");
  } catch (const RdsError& err) {
    CHECK(err.kind() == RdsError::Kind::EquationFails);
    REQUIRE(err.witness.has_value());
    const auto d = difference_counts(*q8, x);
    CHECK(d[*err.witness] == err.actual);
    CHECK(err.actual != err.expected);
  }
}

TEST_CASE("development of an RDS") {
  auto q8 = quaternion8();
  const auto blocks = dev(q8, q8_x1(q8));
  CHECK(blocks.size() == 8);
  for (const auto& b : blocks) CHECK(b.size() == 4);
  CHECK(blocks.front() == q8_x1(q8));
}
