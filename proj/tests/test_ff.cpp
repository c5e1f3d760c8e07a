#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "rdsys/ff.hpp"

using namespace rdsys;

namespace {

// Schoolbook product of coefficient vectors reduced by the monic modulus.
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t r = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > r;) {
    const auto c = prod[d];
    if (!c) continue;
    for (std::size_t k = 0; k <= r; ++k) prod[d - r + k] = (prod[d - r + k] + (p - c) * modulus[k]) % p;
  }
  return {prod.begin(), prod.begin() + r};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2},
                                                                        {3, 2}, {2, 3}, {5, 2}, {3, 3}};

}  // namespace

TEST_CASE("prime and extension fields have the expected orders and moduli") {
  auto f3 = field_make(3, 1);
  CHECK(f3->order() == 3);
  CHECK(f3->modulus() == std::vector<std::uint32_t>{0, 1});
  auto f9 = field_make(3, 2);
  CHECK(f9->order() == 9);
  int invertible = 0;
  for (Field::Value a = 1; a < 9; ++a) invertible += f9->mul(a, f9->inv(a)) == 1;
  CHECK(invertible == 8);
  auto f4 = field_make(2, 2);
  CHECK(f4->multiplicative_order(f4->primitive_element()) == 3);
  for (Field::Value a = 1; a < 4; ++a) CHECK(3 % f4->multiplicative_order(a) == 0);
}

TEST_CASE("field_make rejects bad input") {
  CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(field_make(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(field_make(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(field_make(3, 1)->inv(0), std::domain_error);
}

TEST_CASE("prime fields agree with integer arithmetic mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto f = field_make(p, 1);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f->add(a, b) == (a + b) % p);
        CHECK(f->mul(a, b) == (a * b) % p);
        CHECK(f->sub(a, b) == (a + p - b) % p);
      }
    CHECK(f->from_int(-1) == p - 1);
  }
}

TEST_CASE("extension multiplication matches polynomial arithmetic modulo the modulus") {
  for (auto [p, r] : kSmallFields) {
    if (r == 1) continue;
    auto f = field_make(p, r);
    CHECK(is_irreducible(f->modulus(), p));
    for (Field::Value a = 0; a < f->order(); ++a) {
      CHECK(f->from_coefficients(f->coefficients(a)) == a);
      for (Field::Value b = 0; b < f->order(); ++b) {
        const auto want = poly_mul_mod(f->coefficients(a), f->coefficients(b), f->modulus(), p);
        CHECK(f->coefficients(f->mul(a, b)) == want);
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, r] : kSmallFields) {
    auto f = field_make(p, r);
    const auto q = f->order();
    bool ok = true;
    for (Field::Value a = 0; a < q; ++a) {
      ok = ok && f->add(a, f->neg(a)) == 0;
      if (a) ok = ok && f->mul(a, f->inv(a)) == 1;
      for (Field::Value b = 0; b < q; ++b)
        for (Field::Value c = 0; c < q; ++c) {
          ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
          ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
          ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
        }
    }
    CHECK_MESSAGE(ok, f->name());
    CHECK(f->multiplicative_order(f->primitive_element()) == q - 1);
  }
}

TEST_CASE("irreducibility test") {
  const std::vector<std::uint32_t> x2p1{1, 0, 1};
  CHECK(is_irreducible(x2p1, 3));
  CHECK_FALSE(is_irreducible(x2p1, 5));  // 2^2 + 1 = 0 mod 5
  CHECK_FALSE(is_irreducible(x2p1, 2));  // (x+1)^2
  const std::vector<std::uint32_t> x3px1{1, 1, 0, 1};
  CHECK(is_irreducible(x3px1, 2));
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
  CHECK(prime_power_decompose(7) == std::pair<std::uint32_t, std::uint32_t>{7, 1});
  CHECK(prime_power_decompose(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
  CHECK_THROWS_AS(prime_power_decompose(12), std::invalid_argument);
  CHECK_THROWS_AS(prime_power_decompose(1), std::invalid_argument);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(15));
}

TEST_CASE("least nonsquare against the enumerated squares") {
  CHECK(least_nonsquare(*field_make(3, 1)) == 2);
  CHECK(least_nonsquare(*field_make(5, 1)) == 2);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {7, 1}, {5, 2}, {3, 3}}) {
    auto f = field_make(p, r);
    std::set<Field::Value> squares;
    for (Field::Value u = 0; u < f->order(); ++u) squares.insert(f->mul(u, u));
    CHECK(squares.size() == (f->order() + 1) / 2);
    Field::Value first = 0;
    while (squares.count(first)) ++first;
    CHECK(least_nonsquare(*f) == first);
    for (Field::Value a = 0; a < f->order(); ++a) CHECK(f->is_square(a) == (squares.count(a) == 1));
  }
}

TEST_CASE("Pell solutions match exhaustive enumeration") {
  auto f3 = field_make(3, 1);
  using P = std::pair<Field::Value, Field::Value>;
  CHECK(pell_solutions(*f3, 2, 1) == std::vector<P>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(pell_solutions(*f3, 2, 0) == std::vector<P>{{0, 0}});
  CHECK(pell_solutions(*field_make(5, 1), 2, 1).size() == 6);

  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    auto f = field_make(p, r);
    const auto eps = least_nonsquare(*f);
    for (Field::Value c = 0; c < f->order(); ++c) {
      std::vector<P> brute;
      for (Field::Value u = 0; u < f->order(); ++u)
        for (Field::Value v = 0; v < f->order(); ++v)
          if (f->sub(f->mul(u, u), f->mul(eps, f->mul(v, v))) == c) brute.emplace_back(u, v);
      CHECK(pell_solutions(*f, eps, c) == brute);
      CHECK(brute.size() == (c ? f->order() + 1 : 1));
    }
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion and is multiplicative") {
  auto f = field_make(5, 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Field::Value> d(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    FieldMatrix a(3, 3), b(3, 3);
    for (auto& x : a.data) x = d(rng);
    for (auto& x : b.data) x = d(rng);
    std::array<int, 3> perm{0, 1, 2};
    Field::Value leibniz = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j];
      Field::Value term = 1;
      for (int i = 0; i < 3; ++i) term = f->mul(term, a.at(i, perm[i]));
      leibniz = inversions % 2 ? f->sub(leibniz, term) : f->add(leibniz, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(determinant(*f, a) == leibniz);
    CHECK(determinant(*f, mat_mul(*f, a, b)) == f->mul(determinant(*f, a), determinant(*f, b)));
  }
  CHECK(determinant(*f, identity_matrix(4)) == 1);
}

TEST_CASE("matrix helpers") {
  auto f = field_make(3, 1);
  FieldMatrix a(2, 2);
  a.data = {1, 2, 0, 1};
  const std::vector<Field::Value> v{1, 1};
  CHECK(mat_apply(*f, a, v) == std::vector<Field::Value>{0, 1});
  CHECK(mat_add(*f, a, mat_neg(*f, a)) == FieldMatrix(2, 2));
  CHECK(mat_mul(*f, a, identity_matrix(2)) == a);
}
