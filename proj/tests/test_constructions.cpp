#include <doctest.h>

#include <algorithm>
#include <set>

#include "rdsys/constructions.hpp"
#include "rdsys/groupring.hpp"

using namespace rdsys;

namespace {

// psi(i, j) read off the product X_i X_j: the member equal to one of the two
// level sets of the coefficient vector. -1 when no member matches.
int extracted_psi(const FiniteGroup& g, const std::vector<std::vector<Elem>>& family, std::size_t i, std::size_t j) {
  std::vector<std::int64_t> c(g.order(), 0);
  for (Elem a : family[i])
    for (Elem b : family[j]) ++c[g.mul(a, b)];
  for (auto v : std::set<std::int64_t>(c.begin(), c.end())) {
    std::vector<Elem> level;
    for (Elem e = 0; e < g.order(); ++e)
      if (c[e] == v) level.push_back(e);
    auto it = std::find(family.begin(), family.end(), level);
    if (it != family.end()) return static_cast<int>(it - family.begin());
  }
  return -1;
}

std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

std::int64_t inverse_by_search(std::int64_t a, std::int64_t q) {
  for (std::int64_t d = 1; d < q; ++d)
    if (mod(a * d, q) == 1) return d;
  return -1;
}

}  // namespace

TEST_CASE("psi on the 3-dimensional Heisenberg system at q = 3") {
  const auto h = heisenberg_system(field_make(3, 1));
  CHECK(h.eps == 2);
  CHECK(h.delta == 2);
  CHECK(h.psi_matches_formula);
  CHECK(h.certificate.psi[1][1] == 0);
  CHECK(h.certificate.psi[0][1] == 2);
  CHECK(h.certificate.params.to_string() == "(9,3,9,3,3,1,4)");
  // At q = 3, eps / 16 and (16 eps)^{-1} coincide.
  CHECK(mod(h.eps * inverse_by_search(16 % 3, 3), 3) == h.delta);
}

TEST_CASE("psi(i, j) = (ij + delta)/(i + j) with delta = (16 eps)^{-1}, checked by direct products") {
  for (std::int64_t q : {3, 5, 7}) {
    const auto h = heisenberg_system(field_make(static_cast<std::uint32_t>(q), 1));
    const std::int64_t eps = h.eps;
    const std::int64_t delta = inverse_by_search(mod(16 * eps, q), q);
    CHECK(static_cast<std::int64_t>(h.delta) == delta);
    CHECK(h.psi_matches_formula);
    bool literal_ok = true;
    const std::int64_t literal = mod(eps * inverse_by_search(16 % q, q), q);
    for (std::int64_t i = 0; i < q; ++i)
      for (std::int64_t j = 0; j < q; ++j) {
        if (mod(i + j, q) == 0) continue;
        const std::int64_t want = mod((i * j + delta) * inverse_by_search(mod(i + j, q), q), q);
        CHECK(extracted_psi(*h.group, h.x, i, j) == want);
        CHECK(h.certificate.psi[i][j] == want);
        literal_ok = literal_ok && mod((i * j + literal) * inverse_by_search(mod(i + j, q), q), q) == want;
      }
    // The eps/16 reading only survives at q = 3.
    CHECK(literal_ok == (q == 3));
  }
}

TEST_CASE("Heisenberg over F_9 and a non-default eps") {
  const auto f9 = field_make(3, 2);
  const auto h9 = heisenberg_system(f9);
  CHECK(h9.psi_matches_formula);
  CHECK(h9.certificate.params.to_string() == "(81,9,81,9,9,1,10)");
  const auto& f = *f9;
  CHECK(f.mul(h9.delta, f.mul(f.from_int(16), h9.eps)) == 1);

  const auto f7 = field_make(7, 1);
  std::vector<Field::Value> nonsquares;
  for (Field::Value v = 1; v < 7; ++v)
    if (!f7->is_square(v)) nonsquares.push_back(v);
  for (auto eps : nonsquares) {
    const auto h = heisenberg_system(f7, eps);
    CHECK(h.eps == eps);
    CHECK(h.psi_matches_formula);
  }
  CHECK_THROWS_AS(heisenberg_system(f7, Field::Value{2}), std::invalid_argument);  // 2 = 3^2 mod 7
  CHECK_THROWS_AS(heisenberg_system(field_make(2, 2)), std::invalid_argument);
}

TEST_CASE("phi(M) respects the matrix group and fixes nothing off the identity orbit") {
  const auto fp = field_make(5, 1);
  const auto h = heisenberg_system(fp);
  const auto id = heisenberg_phi(h.group, *fp, h.eps, {1, 0});
  CHECK(id.is_identity());
  CHECK(h.phi_generator.order() == 24);
  // Orbits of <phi>: {e}, Z^#, and the q sets Y_i.
  for (const auto& y : h.y) CHECK(y.size() == 24);
  std::set<Elem> seen;
  for (const auto& y : h.y) seen.insert(y.begin(), y.end());
  CHECK(seen.size() == 5 * 24);
  for (Elem z : h.center.elements()) CHECK_FALSE(seen.count(z));
}

TEST_CASE("iterated Heisenberg and quaternion systems follow the recurrence") {
  const auto f3 = field_make(3, 1);
  const auto one = heisenberg_system_2r(f3, 1);
  CHECK(one.certificate.params.to_string() == "(9,3,9,3,3,1,4)");
  CHECK(one.matches_closed_form);

  const auto two = heisenberg_system_2r(f3, 2);
  CHECK(two.certificate.params.to_string() == "(81,3,81,27,3,33,24)");
  CHECK(two.matches_recurrence);
  // The closed form (21, 30) is the other sign branch.
  CHECK(two.closed_form == MuNu{21, 30});
  CHECK_FALSE(two.matches_closed_form);
  REQUIRE(two.steps.size() == 1);
  CHECK(two.steps[0].predicted == MuNu{33, 24});

  const auto q1 = q8_system_2r(1);
  CHECK(q1.certificate.params.to_string() == "(4,2,4,2,2,1,3)");
  const auto q2 = q8_system_2r(2);
  CHECK(q2.certificate.params.to_string() == "(16,2,16,8,2,10,6)");
  CHECK(q8_closed_form(2) == MuNu{6, 10});
  CHECK_FALSE(q2.matches_closed_form);
  CHECK(q2.matches_recurrence);

  CHECK_THROWS_AS(heisenberg_system_2r(f3, 0), std::invalid_argument);
  CHECK_THROWS_AS(q8_system_2r(6), std::invalid_argument);
}

TEST_CASE("the difference sets of M_27") {
  const auto ex = extraspecial_rds(3);
  CHECK(ex.xi == 8);
  CHECK(ex.sigma.order() == 3);
  CHECK(ex.tau.order() == 2);
  CHECK(ex.k_group.size() == 6);
  const auto& g = *ex.group;

  // X_0 = {(alpha + 3 gamma, beta)} with gamma = alpha beta / 2 mod 3, alpha in {1, 8}.
  std::vector<Elem> x0;
  for (std::uint32_t alpha : {1u, 8u})
    for (std::uint32_t beta = 0; beta < 3; ++beta)
      x0.push_back(mp3_element(3, alpha + 3 * ((alpha % 3) * beta * 2 % 3), beta));
  std::sort(x0.begin(), x0.end());
  CHECK(ex.x[0] == x0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ex.sigma_i[i].apply(x0) == ex.x[i]);

  CHECK_FALSE(is_normal(ex.y_sub));
  CHECK(is_normal(ex.z_sub));
  CHECK(ex.z_sub == center(ex.group));
  for (const auto& c : ex.y_certs) {
    CHECK(c.m == 9);
    CHECK(c.lambda == 3);
    CHECK(c.reversible);
  }
  for (const auto& s : ex.s_certs) {
    CHECK(s.v == 27);
    CHECK(s.k == 10);
    CHECK(s.lambda == 1);
    CHECK(s.mu == 5);
  }

  // Y_0 Y_0^(-1) = 9e + 3(G - Z) in the group ring.
  const auto y0 = GroupRingElement::indicator(ex.group, ex.y[0]);
  const auto rhs = 9 * GroupRingElement::identity(ex.group) +
                   3 * (GroupRingElement::whole(ex.group) - GroupRingElement::indicator(ex.group, ex.z_sub.elements()));
  CHECK(y0 * y0.involution() == rhs);
  CHECK(g.order() == 27);

  CHECK(extraspecial_rds(5).xi == 7);
  CHECK_THROWS_AS(extraspecial_rds(2), std::invalid_argument);
  CHECK_THROWS_AS(extraspecial_rds(9), std::invalid_argument);
}

TEST_CASE("endomorphism spaces") {
  const auto s = endo_space(2, 2, 2);
  REQUIRE(s.elements.size() == 4);
  const auto f2 = field_make(2, 1);
  CHECK(s.elements[0] == FieldMatrix(2, 2));
  CHECK(s.elements[1] == identity_matrix(2));
  // Multiplication by t on F_4 = F_2[t]/(t^2 + t + 1) is the companion matrix.
  FieldMatrix a(2, 2);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 1;
  CHECK(s.elements[2] == a);
  CHECK(s.elements[3] == mat_add(*f2, identity_matrix(2), a));
  CHECK(mat_mul(*f2, a, a) == s.elements[3]);

  const auto s3 = endo_space(3, 1, 1);
  CHECK(s3.elements.size() == 3);
  CHECK(s3.elements[2].at(0, 0) == 2);
  CHECK_THROWS_AS(endo_space(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(endo_space(2, 2, 0), std::invalid_argument);
}

TEST_CASE("linked systems from amorphic rings") {
  const auto d4 = dps_system(field_make(2, 2), 4, endo_space(2, 2, 2));
  CHECK(d4.certificate.params.to_string() == "(16,4,16,4,3,7,3)");
  CHECK(d4.product_identity_holds);
  CHECK(d4.group->order() == 64);

  const auto d3 = dps_system(field_make(3, 1), 3, endo_space(3, 1, 1));
  CHECK(d3.certificate.params.to_string() == "(9,3,9,3,2,5,2)");
  CHECK(d3.product_identity_holds);

  const auto d9 = dps_system(field_make(3, 2), 3, endo_space(3, 1, 1));
  CHECK(d9.certificate.params.to_string() == "(81,3,81,27,2,33,24)");

  // Only the zero map and the identity: a single nonzero element.
  CHECK_THROWS_AS(dps_system(field_make(2, 2), 2, endo_space(2, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(dps_system(field_make(2, 2), 8, endo_space(2, 3, 2)), std::invalid_argument);
}

TEST_CASE("RDS in groups of exponent p^2") {
  const auto r1 = exponent_p2_rds(3, 1);
  CHECK(r1.certificate.m == 9);
  CHECK(r1.certificate.n == 3);
  CHECK(r1.certificate.k == 9);
  CHECK(r1.certificate.lambda == 3);
  CHECK(r1.exponent == 9);

  const auto r2 = exponent_p2_rds(3, 2);
  CHECK(r2.group->order() == 243);
  CHECK(r2.certificate.m == 81);
  CHECK(r2.certificate.lambda == 27);
  CHECK(r2.exponent == 9);
  CHECK(r2.certificate.k * (r2.certificate.k - 1) ==
        r2.certificate.lambda * r2.certificate.n * (r2.certificate.m - 1));

  CHECK_THROWS_AS(exponent_p2_rds(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(exponent_p2_rds(3, 0), std::invalid_argument);
}
