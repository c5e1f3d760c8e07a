#include "rdsys/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace rdsys {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("group_from_json: " + what);
}

std::uint32_t uint_param(const Json& params, const char* name) {
  expect(params.contains(name) && params[name].is_number_unsigned(), std::string("missing parameter ") + name);
  return params[name].get<std::uint32_t>();
}

GroupPtr explicit_group(const Json& j, const std::string& family) {
  expect(j.contains("table") && j["table"].is_array(), "explicit group without a table");
  const auto order = j.at("order").get<std::uint32_t>();
  expect(order > 0 && order <= kMaxGroupOrder, "order out of range");
  auto table = j["table"].get<std::vector<Elem>>();
  expect(table.size() == std::size_t(order) * order, "table has the wrong size");
  for (Elem e : table) expect(e < order, "table entry out of range");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  GroupSpec spec{family, {}, {}, {}};
  if (j.contains("parameters"))
    for (const auto& [k, v] : j["parameters"].items()) spec.parameters.emplace_back(k, v.get<std::int64_t>());
  GroupPtr g;
  try {
    g = std::make_shared<const FiniteGroup>(std::move(spec), order, std::move(table), std::move(labels));
    audit_group(*g);
  } catch (const GroupError& e) {
    throw std::invalid_argument(std::string("group_from_json: ") + e.what());
  }
  return g;
}

}  // namespace

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"r", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  auto f = field_make(j.at("p").get<std::uint32_t>(), j.at("r").get<std::uint32_t>());
  if (j.contains("modulus") && j["modulus"].get<std::vector<std::uint32_t>>() != f->modulus())
    throw std::invalid_argument("field_from_json: modulus differs from the canonical one");
  return f;
}

std::string table_digest(const FiniteGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Elem e : g.table()) {
    for (int i = 0; i < 4; ++i) {
      h ^= (e >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json group_to_json(const FiniteGroup& g) {
  const auto& spec = g.spec();
  Json j{{"family", spec.family}, {"order", g.order()}, {"digest", table_digest(g)}};
  Json params = Json::object();
  for (const auto& [k, v] : spec.parameters) params[k] = v;
  j["parameters"] = params;
  if (!spec.factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : spec.factors) factors.push_back(group_to_json(*f));
    j["factors"] = factors;
  }
  if (spec.family == "central_product") {
    Json am = Json::array();
    for (auto [a, b] : spec.amalgamation) am.push_back({a, b});
    j["amalgamation"] = am;
  }
  static const std::vector<std::string> constructible{
      "cyclic",      "elementary_abelian", "additive",       "heisenberg",
      "quaternion8", "extraspecial_mp3",   "direct_product", "central_product"};
  if (std::find(constructible.begin(), constructible.end(), spec.family) == constructible.end()) {
    j["table"] = g.table();
    j["labels"] = g.labels();
  }
  return j;
}

GroupPtr group_from_json(const Json& j) {
  expect(j.is_object() && j.contains("family") && j.contains("order"), "expected {family, order, ...}");
  const auto family = j["family"].get<std::string>();
  const Json params = j.value("parameters", Json::object());
  GroupPtr g;
  try {
    if (family == "cyclic") {
      g = cyclic(uint_param(params, "n"));
    } else if (family == "elementary_abelian") {
      g = elementary_abelian(uint_param(params, "p"), uint_param(params, "k"));
    } else if (family == "additive") {
      g = additive_group(field_make(uint_param(params, "p"), uint_param(params, "field_degree")),
                         uint_param(params, "dim"));
    } else if (family == "heisenberg") {
      g = heisenberg(field_make(uint_param(params, "p"), uint_param(params, "field_degree")), uint_param(params, "r"));
    } else if (family == "quaternion8") {
      g = quaternion8();
    } else if (family == "extraspecial_mp3") {
      g = extraspecial_mp3(uint_param(params, "p"));
    } else if (family == "direct_product" || family == "central_product") {
      expect(j.contains("factors") && j["factors"].size() == 2, family + " needs two factors");
      auto g1 = group_from_json(j["factors"][0]);
      auto g2 = group_from_json(j["factors"][1]);
      if (family == "direct_product") {
        g = direct_product(g1, g2);
      } else {
        expect(j.contains("amalgamation") && j["amalgamation"].is_array(), "central product without amalgamation");
        std::vector<std::pair<Elem, Elem>> theta;
        std::vector<Elem> z1, z2;
        for (const auto& pr : j["amalgamation"]) {
          const auto a = pr.at(0).get<Elem>(), b = pr.at(1).get<Elem>();
          expect(a < g1->order() && b < g2->order(), "amalgamation index out of range");
          theta.emplace_back(a, b);
          z1.push_back(a);
          z2.push_back(b);
        }
        g = central_product(g1, g2, Subgroup(g1, z1), Subgroup(g2, z2), theta).group;
      }
    } else {
      return explicit_group(j, family);
    }
  } catch (const GroupError& e) {
    throw std::invalid_argument(std::string("group_from_json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("group_from_json: ") + e.what());
  }
  expect(g->order() == j["order"].get<std::uint32_t>(), "rebuilt order differs from the recorded order");
  if (j.contains("digest"))
    expect(table_digest(*g) == j["digest"].get<std::string>(), "rebuilt table differs from the recorded digest");
  return g;
}

Json subset_to_json(const FiniteGroup& g, std::span<const Elem> set) {
  Json labels = Json::array();
  for (Elem a : set) labels.push_back(g.label(a));
  return Json{{"indices", std::vector<Elem>(set.begin(), set.end())}, {"labels", labels}};
}

std::vector<Elem> subset_from_json(const Json& j) {
  if (j.is_array()) return j.get<std::vector<Elem>>();
  if (j.is_object() && j.contains("indices")) return j["indices"].get<std::vector<Elem>>();
  throw std::invalid_argument("subset_from_json: expected an index array or {indices: [...]}");
}

Json to_json(const RdsCertificate& c) {
  return Json{{"group", group_to_json(*c.group)},
              {"set", subset_to_json(*c.group, c.set)},
              {"N", subset_to_json(*c.group, c.forbidden)},
              {"m", c.m},
              {"n", c.n},
              {"k", c.k},
              {"lambda", c.lambda},
              {"flags",
               {{"semiregular", c.semiregular},
                {"reversible", c.reversible},
                {"i_commuting", c.icommuting},
                {"forbidden_normal", c.forbidden_normal},
                {"symmetric", c.symmetric},
                {"notable", c.notable}}}};
}

Json to_json(const PdsCertificate& c) {
  return Json{{"group", group_to_json(*c.group)},
              {"set", subset_to_json(*c.group, c.set)},
              {"v", c.v},
              {"k", c.k},
              {"lambda", c.lambda},
              {"mu", c.mu},
              {"flags", {{"reversible", c.reversible}}}};
}

Json to_json(const LinkedCertificate& c) {
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back(subset_to_json(*c.group, s));
  Json psi = Json::array();
  for (const auto& row : c.psi) {
    Json r = Json::array();
    for (int v : row) r.push_back(v == kNoPsi ? Json(nullptr) : Json(v));
    psi.push_back(r);
  }
  const auto assoc = associated_group(c.sets.size(), c.chi, c.psi);
  return Json{{"group", group_to_json(*c.group)},
              {"N", subset_to_json(*c.group, c.forbidden)},
              {"sets", sets},
              {"m", c.params.m},
              {"n", c.params.n},
              {"k", c.params.k},
              {"lambda", c.params.lambda},
              {"s", c.params.s},
              {"mu", c.params.mu},
              {"nu", c.params.nu},
              {"chi", c.chi},
              {"psi", psi},
              {"associated_group", {{"order", assoc.group->order()}, {"class", assoc.name}, {"kind", assoc.kind}}}};
}

Json to_json(const SchurPartition& p, const StructureConstants& c) {
  Json classes = Json::array();
  for (const auto& cl : p.classes()) classes.push_back(cl);
  Json cube = Json::array();
  for (std::size_t x = 0; x < c.rank; ++x) {
    Json plane = Json::array();
    for (std::size_t y = 0; y < c.rank; ++y) {
      Json row = Json::array();
      for (std::size_t z = 0; z < c.rank; ++z) row.push_back(c.at(x, y, z));
      plane.push_back(row);
    }
    cube.push_back(plane);
  }
  return Json{{"group", group_to_json(*p.group())},
              {"rank", c.rank},
              {"classes", classes},
              {"class_sizes", c.sizes},
              {"structure_constants", cube}};
}

Json to_json(const IntersectionArray& a) {
  return Json{{"b", {a.b0, a.b1, a.b2}}, {"c", {a.c1, a.c2, a.c3}}, {"text", a.to_string()}};
}

Json to_json(const DrgCertificate& c) {
  return Json{{"intersection_array", to_json(c.array)}, {"antipodal_classes", c.antipodal_classes}};
}

Json to_json(const Graph& g) {
  return Json{{"vertices", g.vertices}, {"edges", g.edge_count()}, {"adjacency", g.adj}};
}

Json blocks_to_json(const std::vector<std::vector<Elem>>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back(b);
  return j;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rdsys
