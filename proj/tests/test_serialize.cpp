#include <doctest.h>

#include "rdsys/constructions.hpp"
#include "rdsys/serialize.hpp"

using namespace rdsys;

namespace {

void check_round_trip(const GroupPtr& g) {
  const auto j = group_to_json(*g);
  const auto back = group_from_json(Json::parse(j.dump()));
  CHECK(back->order() == g->order());
  CHECK(back->table() == g->table());
  CHECK(group_to_json(*back) == j);
}

}  // namespace

TEST_CASE("fields round-trip and reject a foreign modulus") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 2}, {2, 3}, {5, 1}}) {
    const auto f = field_make(p, r);
    const auto back = field_from_json(field_to_json(*f));
    CHECK(back->order() == f->order());
    CHECK(back->modulus() == f->modulus());
  }
  auto j = field_to_json(*field_make(3, 2));
  j["modulus"] = std::vector<std::uint32_t>{2, 2, 1};  // x^2 + 2x + 2, irreducible but not the chosen one
  CHECK_THROWS_AS(field_from_json(j), std::invalid_argument);
}

TEST_CASE("every group family round-trips") {
  check_round_trip(cyclic(12));
  check_round_trip(elementary_abelian(2, 3));
  check_round_trip(additive_group(field_make(3, 2), 2));
  check_round_trip(heisenberg(field_make(3, 1), 1));
  check_round_trip(heisenberg(field_make(3, 1), 2));
  check_round_trip(quaternion8());
  check_round_trip(extraspecial_mp3(3));
  check_round_trip(direct_product(cyclic(2), quaternion8()));

  auto q8 = quaternion8();
  check_round_trip(central_product(q8, q8, center(q8), center(q8)).group);
  const auto ex = extraspecial_rds(3);
  const auto h = heisenberg_system(field_make(3, 1));
  check_round_trip(central_product(ex.group, h.group, ex.z_sub, h.center).group);

  // A group with no named constructor travels as an explicit table.
  const auto a = associated_group(3, h.certificate.chi, h.certificate.psi);
  const auto j = group_to_json(*a.group);
  CHECK(j.contains("table"));
  check_round_trip(a.group);
}

TEST_CASE("tampered or malformed groups are rejected") {
  auto j = group_to_json(*quaternion8());
  j["digest"] = "0000000000000000";
  CHECK_THROWS_AS(group_from_json(j), std::invalid_argument);

  auto k = group_to_json(*cyclic(5));
  k["order"] = 6;
  CHECK_THROWS_AS(group_from_json(k), std::invalid_argument);

  CHECK_THROWS_AS(group_from_json(Json{{"family", "cyclic"}}), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(Json::array()), std::invalid_argument);

  const auto h = heisenberg_system(field_make(3, 1));
  auto t = group_to_json(*associated_group(3, h.certificate.chi, h.certificate.psi).group);
  auto table = t["table"].get<std::vector<Elem>>();
  std::swap(table[5], table[6]);
  t["table"] = table;
  t.erase("digest");
  CHECK_THROWS_AS(group_from_json(t), std::invalid_argument);
}

TEST_CASE("subsets accept both encodings") {
  auto g = quaternion8();
  const std::vector<Elem> s{0, 1, 4};
  const auto j = subset_to_json(*g, s);
  CHECK(j["labels"].size() == 3);
  CHECK(subset_from_json(j) == s);
  CHECK(subset_from_json(Json::parse("[0, 1, 4]")) == s);
}

TEST_CASE("certificate encodings carry the parameters") {
  const auto h = heisenberg_system(field_make(3, 1));
  const auto lj = to_json(h.certificate);
  CHECK(lj["mu"] == 1);
  CHECK(lj["nu"] == 4);
  CHECK(lj["s"] == 3);
  CHECK(lj["associated_group"]["class"] == "C4");
  CHECK(lj["psi"][0][0].is_null());  // chi(0) = 0
  CHECK(lj["psi"][0][1] == 2);
  const auto rj = to_json(h.certificate.members[0]);
  CHECK(rj["lambda"] == 3);
  CHECK(rj["flags"]["reversible"] == true);

  const auto q8 = q8_system();
  const auto qj = to_json(q8);
  CHECK(qj["psi"][0][1].is_null());
  CHECK(qj["associated_group"]["class"] == "C3");

  const auto text = dump_stable(lj);
  CHECK(text.back() == '\n');
  CHECK(dump_stable(Json::parse(text)) == text);
}
