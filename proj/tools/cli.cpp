#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdsys/constructions.hpp"
#include "rdsys/cover.hpp"
#include "rdsys/serialize.hpp"

namespace rdsys {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* kind_name(RdsError::Kind k) {
  switch (k) {
    case RdsError::Kind::EquationFails: return "EquationFails";
    case RdsError::Kind::LambdaNotPositive: return "LambdaNotPositive";
    case RdsError::Kind::Precondition: return "Precondition";
    case RdsError::Kind::LemmaViolation: return "LemmaViolation";
    case RdsError::Kind::Collision: return "Collision";
  }
  return "?";
}

const char* kind_name(LinkedError::Kind k) {
  using K = LinkedError::Kind;
  switch (k) {
    case K::TooFewMembers: return "TooFewMembers";
    case K::DuplicateMember: return "DuplicateMember";
    case K::MemberNotRds: return "MemberNotRds";
    case K::ParameterMismatch: return "ParameterMismatch";
    case K::InverseNotInFamily: return "InverseNotInFamily";
    case K::ProductNotTwoValued: return "ProductNotTwoValued";
    case K::LevelSetNotMember: return "LevelSetNotMember";
    case K::LevelSetAmbiguous: return "LevelSetAmbiguous";
    case K::ParameterBranchMismatch: return "ParameterBranchMismatch";
    case K::NonIntegralBranch: return "NonIntegralBranch";
    case K::AssociativityFails: return "AssociativityFails";
    case K::CharacteristicMismatch: return "CharacteristicMismatch";
    case K::NotAutomorphism: return "NotAutomorphism";
    case K::Precondition: return "Precondition";
  }
  return "?";
}

const char* kind_name(SringError::Kind k) {
  switch (k) {
    case SringError::Kind::NotPartition: return "NotPartition";
    case SringError::Kind::IdentityClass: return "IdentityClass";
    case SringError::Kind::InverseClass: return "InverseClass";
    case SringError::Kind::Closure: return "Closure";
  }
  return "?";
}

const char* kind_name(DrgError::Kind k) {
  switch (k) {
    case DrgError::Kind::Precondition: return "Precondition";
    case DrgError::Kind::Disconnected: return "Disconnected";
    case DrgError::Kind::WrongDiameter: return "WrongDiameter";
    case DrgError::Kind::NotDistanceRegular: return "NotDistanceRegular";
    case DrgError::Kind::NotAntipodal: return "NotAntipodal";
  }
  return "?";
}

/// Failure description with whatever witness the error carries.
Json failure_json(const std::exception& e) {
  Json j{{"message", e.what()}};
  if (auto* r = dynamic_cast<const RdsError*>(&e)) {
    j["error"] = kind_name(r->kind());
    if (r->witness) j["witness"] = {{"element", *r->witness}, {"expected", r->expected}, {"actual", r->actual}};
  } else if (auto* l = dynamic_cast<const LinkedError*>(&e)) {
    j["error"] = kind_name(l->kind());
    Json w = Json::object();
    if (l->alpha) w["alpha"] = *l->alpha;
    if (l->beta) w["beta"] = *l->beta;
    if (l->element) w["element"] = *l->element;
    if (!w.empty()) j["witness"] = w;
  } else if (auto* s = dynamic_cast<const SringError*>(&e)) {
    j["error"] = kind_name(s->kind());
    if (s->kind() == SringError::Kind::Closure)
      j["witness"] = {{"x", s->x}, {"y", s->y}, {"z1", s->z1}, {"z2", s->z2}, {"count1", s->count1},
                      {"count2", s->count2}};
  } else if (auto* d = dynamic_cast<const DrgError*>(&e)) {
    j["error"] = kind_name(d->kind());
    j["witness"] = {{"u", d->u}, {"v", d->v}, {"diameter", d->diameter}};
  } else if (dynamic_cast<const GroupError*>(&e)) {
    j["error"] = "GroupError";
  } else if (dynamic_cast<const std::invalid_argument*>(&e)) {
    j["error"] = "InvalidArgument";
  } else {
    j["error"] = "Failure";
  }
  return j;
}

Json rds_summary(const RdsCertificate& c) {
  return Json{{"kind", "rds"},
              {"parameters", {c.m, c.n, c.k, c.lambda}},
              {"semiregular", c.semiregular},
              {"reversible", c.reversible},
              {"i_commuting", c.icommuting},
              {"verified", true}};
}

Json pds_summary(const PdsCertificate& c) {
  return Json{{"kind", "pds"}, {"parameters", {c.v, c.k, c.lambda, c.mu}}, {"verified", true}};
}

Json linked_summary(const LinkedCertificate& c) {
  const auto a = associated_group(c.sets.size(), c.chi, c.psi);
  return Json{{"kind", "linked"},
              {"parameters", c.params.to_string()},
              {"chi", c.chi},
              {"associated_group", a.name},
              {"members", c.members.size()},
              {"verified", true}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

std::pair<std::uint32_t, std::uint32_t> decompose_or_usage(std::uint32_t q) {
  try {
    return prime_power_decompose(q);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::to_string(q) + " is not a prime power");
  }
}

std::uint32_t as_prime_power_field(std::uint32_t q, FieldPtr& f) {
  const auto [p, r] = decompose_or_usage(q);
  f = field_make(p, r);
  return p;
}

// ------------------------------------------------------------------ bundles

Json subsets_json(const FiniteGroup& g, const std::vector<std::vector<Elem>>& sets) {
  Json j = Json::array();
  for (const auto& s : sets) j.push_back(subset_to_json(g, s));
  return j;
}

struct Outcome {
  Json bundle;
  Json certificates = Json::array();
  Json discrepancies = Json::array();
};

Outcome bundle_heisenberg(std::uint32_t q, std::optional<std::uint32_t> eps) {
  FieldPtr f;
  as_prime_power_field(q, f);
  if (eps && *eps >= q) throw UsageError("--eps must be a field element below q");
  const auto h = heisenberg_system(f, eps ? std::optional<Field::Value>(*eps) : std::nullopt);
  const auto pds = rds_to_pds(h.group, h.x[0], h.center);

  std::vector<std::vector<Elem>> partition{{0}};
  std::vector<Elem> zsharp;
  for (Elem z : h.center.elements())
    if (z) zsharp.push_back(z);
  partition.push_back(zsharp);
  for (const auto& y : h.y) partition.push_back(y);
  const SchurPartition sp(h.group, partition);
  verify_sring(sp);

  // The literal reading eps * 16^-1 of the nonsquare, checked for the report.
  const Field& fl = *f;
  const auto literal = fl.mul(h.eps, fl.inv(fl.from_int(16)));
  bool literal_ok = true;
  for (Field::Value i = 0; i < q; ++i)
    for (Field::Value j = 0; j < q; ++j)
      if (j != fl.neg(i))
        literal_ok = literal_ok &&
                     h.certificate.psi[i][j] == static_cast<int>(fl.div(fl.add(fl.mul(i, j), literal), fl.add(i, j)));

  Outcome o;
  o.bundle = {{"construction", "heisenberg"},
              {"parameters", {{"q", q}}},
              {"provenance",
               {{"field", field_to_json(*f)},
                {"eps", h.eps},
                {"delta", h.delta},
                {"delta_rule", "(16 eps)^-1"},
                {"generator", {h.generator.first, h.generator.second}}}},
              {"group", group_to_json(*h.group)},
              {"forbidden", subset_to_json(*h.group, h.center.elements())},
              {"sets", subsets_json(*h.group, h.x)},
              {"partition", partition},
              {"certificate", to_json(h.certificate)},
              {"pds", to_json(pds)}};
  o.certificates.push_back(linked_summary(h.certificate));
  o.certificates.push_back(pds_summary(pds));
  o.certificates.push_back({{"kind", "sring"}, {"rank", sp.rank()}, {"verified", true}});
  o.certificates.push_back({{"kind", "psi_formula"},
                            {"delta", h.delta},
                            {"verified", h.psi_matches_formula}});
  if (!literal_ok)
    o.discrepancies.push_back({{"flag", "psi_delta_literal"},
                               {"detail", "psi(i,j) = (ij + eps/16)/(i+j) fails; (ij + (16 eps)^-1)/(i+j) is what holds"},
                               {"eps_over_16", literal},
                               {"delta", h.delta}});
  return o;
}

Outcome bundle_iterated(const std::string& name, const IteratedSystem& s, Json params,
                        const std::optional<std::vector<std::size_t>>& f) {
  const auto& c = s.certificate;
  const MuNu realized{c.params.mu, c.params.nu};
  const auto branches = munu_branches(c.params.m, c.params.n, c.params.k);
  bool in_branches = false;
  Json bj = Json::array();
  for (const auto& b : branches) {
    bj.push_back({b.mu, b.nu});
    in_branches = in_branches || b == realized;
  }
  Json steps = Json::array();
  for (const auto& st : s.steps)
    steps.push_back({{"predicted", {st.predicted.mu, st.predicted.nu}},
                     {"realized", {st.realized.mu, st.realized.nu}},
                     {"matches_recurrence", st.matches_recurrence}});
  Outcome o;
  Json carrier = f ? Json(*f) : Json(identity_carrier_map(c.sets.size()));
  o.bundle = {{"construction", name},
              {"parameters", params},
              {"provenance", {{"carrier_map", carrier}, {"center_identification", "z -> z"}}},
              {"group", group_to_json(*s.group)},
              {"forbidden", subset_to_json(*s.group, s.center.elements())},
              {"sets", subsets_json(*s.group, c.sets)},
              {"certificate", to_json(c)},
              {"branch",
               {{"realized", {realized.mu, realized.nu}},
                {"branches", bj},
                {"closed_form", {s.closed_form.mu, s.closed_form.nu}},
                {"matches_closed_form", s.matches_closed_form},
                {"matches_recurrence", s.matches_recurrence},
                {"steps", steps}}}};
  o.certificates.push_back(linked_summary(c));
  o.certificates.push_back({{"kind", "branch"}, {"realized", {realized.mu, realized.nu}}, {"verified", in_branches}});
  if (!s.matches_closed_form)
    o.discrepancies.push_back({{"flag", "closed_form_mismatch"},
                               {"realized", {realized.mu, realized.nu}},
                               {"closed_form", {s.closed_form.mu, s.closed_form.nu}}});
  if (!s.matches_recurrence) o.discrepancies.push_back({{"flag", "recurrence_mismatch"}, {"steps", steps}});
  return o;
}

Outcome bundle_extraspecial(std::uint32_t p) {
  const auto ex = extraspecial_rds(p);
  const auto& g = *ex.group;
  Json ycerts = Json::array(), zcerts = Json::array(), scerts = Json::array();
  Outcome o;
  for (const auto& c : ex.y_certs) {
    ycerts.push_back(to_json(c));
    o.certificates.push_back(rds_summary(c));
  }
  for (const auto& c : ex.z_certs) {
    zcerts.push_back(to_json(c));
    o.certificates.push_back(rds_summary(c));
  }
  std::vector<std::vector<Elem>> s_sets;
  for (const auto& c : ex.s_certs) {
    scerts.push_back(to_json(c));
    s_sets.push_back(c.set);
    o.certificates.push_back(pds_summary(c));
  }
  verify_sring(ex.partition);
  o.certificates.push_back({{"kind", "sring"}, {"rank", ex.partition.rank()}, {"verified", true}});
  o.bundle = {{"construction", "extraspecial"},
              {"parameters", {{"p", p}}},
              {"provenance", {{"xi", ex.xi}, {"primitive_root_rule", "least primitive root mod p^2, to the p-th power"}}},
              {"group", group_to_json(g)},
              {"forbidden", subset_to_json(g, ex.z_sub.elements())},
              {"sets", subsets_json(g, ex.y)},
              {"alt_forbidden", subset_to_json(g, ex.y_sub.elements())},
              {"alt_sets", subsets_json(g, ex.z)},
              {"x_sets", subsets_json(g, ex.x)},
              {"pds_sets", subsets_json(g, s_sets)},
              {"partition", ex.partition.classes()},
              {"y_normal", is_normal(ex.y_sub)},
              {"certificates", {{"Y", ycerts}, {"Z", zcerts}, {"S", scerts}}}};
  return o;
}

Outcome bundle_q8() {
  const auto c = q8_system();
  Outcome o;
  o.bundle = {{"construction", "q8"},
              {"parameters", Json::object()},
              {"provenance", {{"X1", "{e, a, b, ba}"}}},
              {"group", group_to_json(*c.group)},
              {"forbidden", subset_to_json(*c.group, c.forbidden)},
              {"sets", subsets_json(*c.group, c.sets)},
              {"certificate", to_json(c)}};
  o.certificates.push_back(linked_summary(c));
  return o;
}

Outcome bundle_dps(std::uint32_t n, std::uint32_t t, std::uint32_t s,
                   const std::optional<std::vector<std::uint32_t>>& labeling) {
  FieldPtr f;
  const auto p = as_prime_power_field(n, f);
  const auto [tp, j] = decompose_or_usage(t);
  const auto [sp, i] = decompose_or_usage(s);
  if (tp != p || sp != p) throw UsageError("n, t and s must be powers of the same prime");
  const auto d = dps_system(f, t, endo_space(p, j, i), labeling);
  Outcome o;
  o.bundle = {{"construction", "dps"},
              {"parameters", {{"n", n}, {"t", t}, {"s", s}}},
              {"provenance",
               {{"field", field_to_json(*f)},
                {"labeling", d.amorphic.labeling},
                {"endo_space", {{"p", p}, {"j", j}, {"i", i}}}}},
              {"group", group_to_json(*d.group)},
              {"forbidden", subset_to_json(*d.group, d.h_sub.elements())},
              {"sets", subsets_json(*d.group, d.y)},
              {"certificate", to_json(d.certificate)},
              {"product_identity_holds", d.product_identity_holds}};
  o.certificates.push_back(linked_summary(d.certificate));
  o.certificates.push_back(
      {{"kind", "product_identity"}, {"verified", d.product_identity_holds}});
  return o;
}

Outcome bundle_thm12(std::uint32_t p, std::uint32_t r) {
  const auto t = exponent_p2_rds(p, r);
  Outcome o;
  o.bundle = {{"construction", "thm12"},
              {"parameters", {{"p", p}, {"r", r}}},
              {"provenance", {{"xi", mp3_xi(p)}, {"factor_order", "M_{p^3} first, then r-1 Heisenberg factors"}}},
              {"group", group_to_json(*t.group)},
              {"exponent", t.exponent},
              {"forbidden", subset_to_json(*t.group, t.certificate.forbidden)},
              {"sets", subsets_json(*t.group, {t.certificate.set})},
              {"certificate", to_json(t.certificate)}};
  o.certificates.push_back(rds_summary(t.certificate));
  o.certificates.push_back({{"kind", "exponent"}, {"value", t.exponent}, {"verified", t.exponent == std::uint64_t(p) * p}});
  return o;
}

// ------------------------------------------------------------- input files

GroupPtr load_group(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && !j.contains("family") && j.contains("group")) j = j["group"];
  return group_from_json(j);
}

std::vector<std::vector<Elem>> sets_from(const Json& j, const std::string& key) {
  if (j.is_object() && !j.contains(key)) throw UsageError("sets file has no \"" + key + "\" entry");
  const Json& arr = j.is_object() ? j[key] : j;
  if (!arr.is_array()) throw UsageError("sets file must hold an array of sets or an object with \"" + key + "\"");
  if (!arr.empty() && arr[0].is_number()) return {subset_from_json(arr)};
  std::vector<std::vector<Elem>> out;
  for (const auto& s : arr) out.push_back(subset_from_json(s));
  return out;
}

void check_indices(const FiniteGroup& g, const std::vector<std::vector<Elem>>& sets) {
  for (const auto& s : sets)
    for (Elem a : s)
      if (a >= g.order()) throw UsageError("set element " + std::to_string(a) + " outside the group");
}

std::size_t pick_set(const Json& bundle, std::optional<std::size_t> index) {
  const auto count = bundle.at("sets").size();
  const std::size_t i = index.value_or(0);
  if (i >= count) throw UsageError("--set " + std::to_string(i) + " but the bundle has " + std::to_string(count));
  return i;
}

std::string dev_text(const std::vector<std::vector<Elem>>& blocks) {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << b << ':';
    for (Elem a : blocks[b]) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative difference sets, linked systems and their certificates"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a construction, verify it and write a JSON bundle");
  construct->require_subcommand(1);
  std::string out_path;
  std::uint32_t q = 0, p = 0, r = 0, n = 0, t = 0, s = 0, eps = 0;
  std::vector<std::size_t> carrier;
  std::vector<std::uint32_t> labeling;

  auto* c_heis = construct->add_subcommand("heisenberg", "Linked system in the Heisenberg group of order q^3");
  c_heis->add_option("--q", q, "odd prime power")->required();
  auto* eps_opt = c_heis->add_option("--eps", eps, "nonsquare of F_q (default: least nonsquare)");
  auto* c_heis2r = construct->add_subcommand("heisenberg2r", "r-fold central product of Heisenberg systems");
  c_heis2r->add_option("--q", q, "odd prime power")->required();
  c_heis2r->add_option("--r", r, "number of factors")->required();
  auto* f_heis = c_heis2r->add_option("--f", carrier, "automorphism of the associated group on its carrier, 0 = infinity")
                     ->delimiter(',');
  auto* c_ex = construct->add_subcommand("extraspecial", "Difference sets in M_{p^3}");
  c_ex->add_option("--p", p, "odd prime")->required();
  auto* c_q8 = construct->add_subcommand("q8", "Linked system in Q_8");
  auto* c_q82r = construct->add_subcommand("q8-2r", "r-fold central product of Q_8 systems");
  c_q82r->add_option("--r", r, "number of factors")->required();
  auto* f_q8 = c_q82r->add_option("--f", carrier, "automorphism of the associated group on its carrier")->delimiter(',');
  auto* c_dps = construct->add_subcommand("dps", "Linked system over H x F_n^2 from an amorphic ring");
  c_dps->add_option("--n", n, "field order")->required();
  c_dps->add_option("--t", t, "order of H, a power of the characteristic dividing n")->required();
  c_dps->add_option("--s", s, "size of the endomorphism set S")->required();
  auto* lab_opt = c_dps->add_option("--labeling", labeling, "label in [0,t) for each line, slope order inf,0,1,...")
                      ->delimiter(',');
  auto* c_thm = construct->add_subcommand("thm12", "Semiregular RDS in a group of exponent p^2");
  c_thm->add_option("--p", p, "odd prime")->required();
  c_thm->add_option("--r", r, "number of factors")->required();
  for (auto* sub : {c_heis, c_heis2r, c_ex, c_q8, c_q82r, c_dps, c_thm})
    sub->add_option("--out", out_path, "bundle output path");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify sets read from JSON files");
  std::string verify_kind, group_path, sets_path, forbidden_path;
  verify->add_option("kind", verify_kind, "rds | pds | sring | linked")
      ->required()
      ->check(CLI::IsMember({"rds", "pds", "sring", "linked"}));
  verify->add_option("--group", group_path, "group spec, or a bundle holding one")->required();
  verify->add_option("--sets", sets_path, "set list, or a bundle holding one")->required();
  std::string sets_key = "sets";
  verify->add_option("--key", sets_key, "entry of the sets file holding the sets (default \"sets\")");
  verify->add_option("--forbidden", forbidden_path, "forbidden subgroup (default: from the sets file, else searched)");

  // export
  auto* exp = app.add_subcommand("export", "Export a graph, block design or structure constants from a bundle");
  std::string export_what, bundle_path, format = "json";
  std::size_t set_index = 0;
  exp->add_option("what", export_what, "graph | dev | ctensor")->required()->check(CLI::IsMember({"graph", "dev", "ctensor"}));
  exp->add_option("--bundle", bundle_path, "bundle written by construct")->required();
  auto* set_opt = exp->add_option("--set", set_index, "index into the bundle's sets (default 0)");
  exp->add_option("--format", format, "adjlist | dimacs | json")->check(CLI::IsMember({"adjlist", "dimacs", "json"}));
  std::string export_out;
  exp->add_option("--out", export_out, "output path")->required();

  // resolve-branch
  auto* resolve = app.add_subcommand("resolve-branch", "Decide the (mu, nu) branch of an iterated product by computation");
  std::string target;
  resolve->add_option("--target", target, "heis2r | q8-2r")->required()->check(CLI::IsMember({"heis2r", "q8-2r"}));
  resolve->add_option("--q", q, "odd prime power (heis2r)");
  resolve->add_option("--r", r, "number of factors")->required();
  auto* f_res = resolve->add_option("--f", carrier, "automorphism of the associated group on its carrier")->delimiter(',');
  resolve->add_option("--out", out_path, "bundle output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  Json report{{"command", args}, {"discrepancies", Json::array()}, {"certificates", Json::array()}};
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  auto finish = [&](int code) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = {{"total_ms", ms}};
    report["verified"] = code == 0;
    out << dump_stable(report);
    return code;
  };
  auto record = [&](Outcome& o) {
    for (auto& c : o.certificates) {
      ok = ok && c.value("verified", false);
      report["certificates"].push_back(c);
    }
    for (auto& d : o.discrepancies) report["discrepancies"].push_back(d);
    if (!out_path.empty()) {
      write_file(out_path, dump_stable(o.bundle));
      report["bundle"] = out_path;
    }
  };
  auto optional_carrier = [&](CLI::Option* opt) {
    return opt->count() ? std::optional<std::vector<std::size_t>>(carrier) : std::nullopt;
  };

  try {
    if (construct->parsed()) {
      Outcome o;
      Json inputs;
      if (c_heis->parsed()) {
        inputs = {{"family", "heisenberg"}, {"q", q}};
        o = bundle_heisenberg(q, eps_opt->count() ? std::optional<std::uint32_t>(eps) : std::nullopt);
      } else if (c_heis2r->parsed()) {
        inputs = {{"family", "heisenberg2r"}, {"q", q}, {"r", r}};
        FieldPtr f;
        as_prime_power_field(q, f);
        const auto fc = optional_carrier(f_heis);
        o = bundle_iterated("heisenberg2r", heisenberg_system_2r(f, r, fc), {{"q", q}, {"r", r}}, fc);
      } else if (c_ex->parsed()) {
        inputs = {{"family", "extraspecial"}, {"p", p}};
        o = bundle_extraspecial(p);
      } else if (c_q8->parsed()) {
        inputs = {{"family", "q8"}};
        o = bundle_q8();
      } else if (c_q82r->parsed()) {
        inputs = {{"family", "q8-2r"}, {"r", r}};
        const auto fc = optional_carrier(f_q8);
        o = bundle_iterated("q8-2r", q8_system_2r(r, fc), {{"r", r}}, fc);
      } else if (c_dps->parsed()) {
        inputs = {{"family", "dps"}, {"n", n}, {"t", t}, {"s", s}};
        o = bundle_dps(n, t, s, lab_opt->count() ? std::optional<std::vector<std::uint32_t>>(labeling) : std::nullopt);
      } else if (c_thm->parsed()) {
        inputs = {{"family", "thm12"}, {"p", p}, {"r", r}};
        o = bundle_thm12(p, r);
      }
      report["inputs"] = inputs;
      record(o);
    } else if (verify->parsed()) {
      report["inputs"] = {{"kind", verify_kind}, {"group", group_path}, {"sets", sets_path}};
      const auto g = load_group(group_path);
      const Json sets_json = read_json_file(sets_path);
      const auto sets = sets_from(sets_json, sets_key);
      check_indices(*g, sets);
      std::optional<Subgroup> forbidden;
      if (!forbidden_path.empty()) {
        Json fj = read_json_file(forbidden_path);
        if (fj.is_object() && fj.contains("forbidden")) fj = fj["forbidden"];
        forbidden.emplace(g, subset_from_json(fj));
      } else if (sets_json.is_object()) {
        // "alt_sets" pairs with "alt_forbidden", "sets" with "forbidden".
        const std::string prefix = sets_key.ends_with("sets") ? sets_key.substr(0, sets_key.size() - 4) : "";
        if (sets_json.contains(prefix + "forbidden"))
          forbidden.emplace(g, subset_from_json(sets_json[prefix + "forbidden"]));
      }
      try {
        if (verify_kind == "rds") {
          for (const auto& x : sets) {
            std::optional<Subgroup> nsub = forbidden;
            if (!nsub) {
              auto found = find_forbidden(g, x);
              if (found.empty()) throw RdsError(RdsError::Kind::EquationFails, "no subgroup makes this set an RDS");
              nsub = found.front();
            }
            auto c = verify_rds(g, x, *nsub);
            auto summary = rds_summary(c);
            summary["certificate"] = to_json(c);
            report["certificates"].push_back(summary);
          }
        } else if (verify_kind == "pds") {
          for (const auto& x : sets) {
            auto c = verify_pds(g, x);
            auto summary = pds_summary(c);
            summary["certificate"] = to_json(c);
            report["certificates"].push_back(summary);
          }
        } else if (verify_kind == "sring") {
          const SchurPartition sp(g, sets);
          const auto c = verify_sring(sp);
          report["certificates"].push_back({{"kind", "sring"}, {"rank", sp.rank()}, {"verified", true},
                                            {"ctensor", to_json(sp, c)}});
        } else {
          if (!forbidden) {
            auto found = find_forbidden(g, sets.at(0));
            if (found.empty()) throw RdsError(RdsError::Kind::EquationFails, "first member is not an RDS");
            forbidden = found.front();
          }
          auto c = verify_linked(g, *forbidden, sets);
          auto summary = linked_summary(c);
          summary["certificate"] = to_json(c);
          report["certificates"].push_back(summary);
        }
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        auto f = failure_json(e);
        f["kind"] = verify_kind;
        f["verified"] = false;
        report["certificates"].push_back(f);
        ok = false;
      }
    } else if (exp->parsed()) {
      report["inputs"] = {{"what", export_what}, {"bundle", bundle_path}, {"format", format}};
      const Json bundle = read_json_file(bundle_path);
      const auto g = group_from_json(bundle.at("group"));
      std::string text;
      if (export_what == "graph") {
        const auto i = pick_set(bundle, set_opt->count() ? std::optional<std::size_t>(set_index) : std::nullopt);
        std::vector<Elem> conn;
        for (Elem a : subset_from_json(bundle["sets"][i]))
          if (a != 0) conn.push_back(a);
        check_indices(*g, {conn});
        const Graph graph = cayley_graph(g, conn);
        if (format == "adjlist") text = to_adjlist(graph);
        else if (format == "dimacs") text = to_dimacs(graph);
        else text = dump_stable(to_json(graph));
        Json cert{{"kind", "drg"}, {"vertices", graph.vertices}, {"degree", conn.size()}};
        try {
          const auto d = certify_drg(graph);
          cert["intersection_array"] = d.array.to_string();
          cert["antipodal_classes"] = d.antipodal_classes.size();
          cert["verified"] = true;
        } catch (const DrgError& e) {
          cert.update(failure_json(e));
          cert["verified"] = false;
          ok = false;
        }
        report["certificates"].push_back(cert);
      } else if (export_what == "dev") {
        const auto i = pick_set(bundle, set_opt->count() ? std::optional<std::size_t>(set_index) : std::nullopt);
        const auto x = subset_from_json(bundle["sets"][i]);
        check_indices(*g, {x});
        const auto blocks = dev(g, x);
        if (format == "dimacs") throw UsageError("dev exports as adjlist or json");
        text = format == "adjlist" ? dev_text(blocks) : dump_stable(blocks_to_json(blocks));
        report["certificates"].push_back({{"kind", "dev"}, {"blocks", blocks.size()}, {"verified", true}});
      } else {
        if (!bundle.contains("partition")) throw UsageError("bundle has no partition to take structure constants of");
        if (format != "json") throw UsageError("ctensor exports as json");
        std::vector<std::vector<Elem>> classes;
        for (const auto& c : bundle["partition"]) classes.push_back(c.get<std::vector<Elem>>());
        check_indices(*g, classes);
        try {
          const SchurPartition sp(g, classes);
          const auto c = verify_sring(sp);
          text = dump_stable(to_json(sp, c));
          report["certificates"].push_back({{"kind", "sring"}, {"rank", sp.rank()}, {"verified", true}});
        } catch (const SringError& e) {
          auto f = failure_json(e);
          f["verified"] = false;
          report["certificates"].push_back(f);
          ok = false;
        }
      }
      if (!text.empty()) {
        write_file(export_out, text);
        report["output"] = export_out;
      }
    } else if (resolve->parsed()) {
      report["inputs"] = {{"target", target}, {"q", q}, {"r", r}};
      const auto fc = optional_carrier(f_res);
      Outcome o;
      if (target == "heis2r") {
        if (q == 0) throw UsageError("heis2r needs --q");
        FieldPtr f;
        as_prime_power_field(q, f);
        o = bundle_iterated("heisenberg2r", heisenberg_system_2r(f, r, fc), {{"q", q}, {"r", r}}, fc);
      } else {
        o = bundle_iterated("q8-2r", q8_system_2r(r, fc), {{"r", r}}, fc);
      }
      report["resolution"] = o.bundle["branch"];
      record(o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    report["error"] = {{"error", "Usage"}, {"message", e.what()}};
    return finish(2);
  } catch (const std::exception& e) {
    report["error"] = failure_json(e);
    return finish(1);
  }
  return finish(ok ? 0 : 1);
}

}  // namespace rdsys
