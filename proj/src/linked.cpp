#include "rdsys/linked.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rdsys/groupring.hpp"

namespace rdsys {

namespace {

std::int64_t isqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

LinkedError pair_error(LinkedError::Kind kind, std::string what, std::size_t a, std::size_t b) {
  LinkedError err(kind, std::move(what));
  err.alpha = a;
  err.beta = b;
  return err;
}

}  // namespace

std::string LinkedParameters::to_string() const {
  std::ostringstream os;
  os << '(' << m << ',' << n << ',' << k << ',' << lambda << ',' << s << ',' << mu << ',' << nu << ')';
  return os.str();
}

std::vector<MuNu> munu_branches(std::int64_t m, std::int64_t n, std::int64_t k) {
  using K = LinkedError::Kind;
  if (m <= 0 || n <= 1 || k <= 0 || k > m * n) throw LinkedError(K::NonIntegralBranch, "parameters out of range");
  const std::int64_t mn = m * n;
  const std::int64_t num = k * (mn - k);
  const std::int64_t den = m * (n - 1);
  if (num % den) throw LinkedError(K::NonIntegralBranch, "k(mn-k)/(m(n-1)) is not an integer");
  const std::int64_t root = isqrt_exact(num / den);
  if (root < 0) throw LinkedError(K::NonIntegralBranch, "k(mn-k)/(m(n-1)) is not a perfect square");

  std::vector<MuNu> out;
  for (int sign : {+1, -1}) {
    const std::int64_t mu_num = k * k + sign * (mn - k) * root;
    const std::int64_t nu_num = k * (k - sign * root);
    if (mu_num % mn || nu_num % mn) continue;
    MuNu b{mu_num / mn, nu_num / mn};
    if (b.mu < 0 || b.nu < 0) continue;
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  }
  if (out.empty()) throw LinkedError(K::NonIntegralBranch, "neither sign gives integral (mu, nu)");
  std::sort(out.begin(), out.end(), [](const MuNu& a, const MuNu& b) { return a.mu < b.mu; });
  return out;
}

LinkedCertificate verify_linked(const GroupPtr& g, const Subgroup& n, const std::vector<std::vector<Elem>>& family) {
  using K = LinkedError::Kind;
  const std::size_t s = family.size();
  if (s < 2) throw LinkedError(K::TooFewMembers, "a linked system needs at least two sets");

  LinkedCertificate cert;
  cert.group = g;
  cert.forbidden = n.elements();
  for (const auto& x : family) cert.sets.push_back(sorted_unique(x));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      if (cert.sets[a] == cert.sets[b])
        throw pair_error(K::DuplicateMember, "members " + std::to_string(a) + " and " + std::to_string(b) + " coincide",
                         a, b);

  for (std::size_t a = 0; a < s; ++a) {
    try {
      cert.members.push_back(verify_rds(g, family[a], n));
    } catch (const RdsError& e) {
      LinkedError err(K::MemberNotRds, "member " + std::to_string(a) + ": " + e.what());
      err.alpha = a;
      err.element = e.witness;
      throw err;
    }
    const auto& c0 = cert.members.front();
    const auto& c = cert.members.back();
    if (c.m != c0.m || c.n != c0.n || c.k != c0.k || c.lambda != c0.lambda) {
      LinkedError err(K::ParameterMismatch, "member " + std::to_string(a) + " has different RDS parameters");
      err.alpha = a;
      throw err;
    }
  }
  const auto& c0 = cert.members.front();
  cert.params = {c0.m, c0.n, c0.k, c0.lambda, static_cast<std::int64_t>(s), 0, 0};

  std::map<std::vector<Elem>, std::size_t> index_of;
  for (std::size_t a = 0; a < s; ++a) index_of[cert.sets[a]] = a;
  cert.chi.resize(s);
  for (std::size_t a = 0; a < s; ++a) {
    auto it = index_of.find(set_inverse(*g, cert.sets[a]));
    if (it == index_of.end()) {
      LinkedError err(K::InverseNotInFamily, "inverse of member " + std::to_string(a) + " is not in the family");
      err.alpha = a;
      throw err;
    }
    cert.chi[a] = it->second;
  }

  std::vector<GroupRingElement> ind;
  for (const auto& x : cert.sets) ind.push_back(GroupRingElement::indicator(g, x));

  cert.psi.assign(s, std::vector<int>(s, kNoPsi));
  std::optional<MuNu> seen;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (b == cert.chi[a]) continue;
      const auto prod = ind[a] * ind[b];
      const auto values = prod.distinct_values();
      if (values.size() != 2)
        throw pair_error(K::ProductNotTwoValued,
                         "product of members " + std::to_string(a) + "," + std::to_string(b) + " takes " +
                             std::to_string(values.size()) + " values",
                         a, b);
      std::optional<std::size_t> hit;
      std::int64_t mu = 0, nu = 0;
      for (int which = 0; which < 2; ++which) {
        auto it = index_of.find(prod.level_set(values[which]));
        if (it == index_of.end()) continue;
        if (hit)
          throw pair_error(K::LevelSetAmbiguous, "both level sets of a product are members", a, b);
        hit = it->second;
        mu = values[which];
        nu = values[1 - which];
      }
      if (!hit)
        throw pair_error(K::LevelSetNotMember,
                         "no level set of product " + std::to_string(a) + "," + std::to_string(b) + " is a member",
                         a, b);
      const MuNu here{mu, nu};
      if (seen && !(*seen == here))
        throw pair_error(K::ProductNotTwoValued, "(mu, nu) differs between pairs of members", a, b);
      seen = here;
      cert.psi[a][b] = static_cast<int>(*hit);
    }
  }
  cert.params.mu = seen->mu;
  cert.params.nu = seen->nu;

  const auto& p = cert.params;
  if (p.mu * p.k + p.nu * (p.m * p.n - p.k) != p.k * p.k)
    throw LinkedError(K::ParameterBranchMismatch, "mu k + nu (mn - k) != k^2");
  std::vector<MuNu> branches;
  try {
    branches = munu_branches(p.m, p.n, p.k);
  } catch (const LinkedError& e) {
    throw LinkedError(K::ParameterBranchMismatch, std::string("no closed-form branch: ") + e.what());
  }
  if (std::find(branches.begin(), branches.end(), *seen) == branches.end())
    throw LinkedError(K::ParameterBranchMismatch, "observed (mu, nu) matches neither closed-form branch");
  return cert;
}

AssociatedGroup recognize(const GroupPtr& g) {
  AssociatedGroup out;
  out.group = g;
  const std::uint32_t n = g->order();
  std::uint32_t max_order = 1;
  for (Elem a = 0; a < n; ++a) max_order = std::max(max_order, g->element_order(a));
  if (max_order == n) {
    out.kind = "cyclic";
    out.name = "C" + std::to_string(n);
    out.invariant_factors = {n};
    return out;
  }
  if (!g->is_abelian()) {
    out.kind = "nonabelian";
    out.name = "order " + std::to_string(n) + ", exponent " + std::to_string(g->exponent());
    return out;
  }

  // For each prime p, #{x : x^(p^k) = e} = p^(sum_i min(k, e_i)) determines
  // the exponents e_i of the p-part.
  std::vector<std::vector<std::uint64_t>> parts;
  std::uint32_t rest = n;
  for (std::uint32_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::uint32_t a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    std::vector<std::uint32_t> logs{0};
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= a; ++k) {
      pk *= p;
      std::uint32_t count = 0;
      for (Elem x = 0; x < n; ++x)
        if (g->pow(x, static_cast<std::int64_t>(pk)) == 0) ++count;
      std::uint32_t l = 0;
      while (count > 1) {
        count /= p;
        ++l;
      }
      logs.push_back(l);
    }
    std::vector<std::uint32_t> at_least(a + 2, 0);  // at_least[k] = #{i : e_i >= k}
    for (std::uint32_t k = 1; k <= a; ++k) at_least[k] = logs[k] - logs[k - 1];
    std::vector<std::uint64_t> powers;
    std::uint64_t pe = 1;
    for (std::uint32_t k = 1; k <= a; ++k) {
      pe *= p;
      for (std::uint32_t c = at_least[k + 1]; c < at_least[k]; ++c) powers.push_back(pe);
    }
    std::sort(powers.rbegin(), powers.rend());
    parts.push_back(powers);
  }
  std::size_t len = 0;
  for (const auto& pp : parts) len = std::max(len, pp.size());
  out.invariant_factors.assign(len, 1);
  for (const auto& pp : parts)
    for (std::size_t i = 0; i < pp.size(); ++i) out.invariant_factors[i] *= pp[i];
  std::reverse(out.invariant_factors.begin(), out.invariant_factors.end());

  const auto p0 = out.invariant_factors.front();
  const bool elementary = parts.size() == 1 && std::all_of(out.invariant_factors.begin(), out.invariant_factors.end(),
                                                           [&](std::uint64_t f) { return f == p0; });
  if (elementary) {
    out.kind = "elementary abelian";
    out.name = "C" + std::to_string(p0) + "^" + std::to_string(out.invariant_factors.size());
  } else {
    out.kind = "abelian";
    for (std::size_t i = 0; i < len; ++i)
      out.name += (i ? " x C" : "C") + std::to_string(out.invariant_factors[i]);
  }
  return out;
}

AssociatedGroup associated_group(std::size_t s, const std::vector<std::size_t>& chi,
                                 const std::vector<std::vector<int>>& psi) {
  using K = LinkedError::Kind;
  if (chi.size() != s || psi.size() != s) throw LinkedError(K::Precondition, "chi/psi size mismatch");
  for (std::size_t a = 0; a < s; ++a) {
    if (chi[a] >= s || chi[chi[a]] != a) throw LinkedError(K::Precondition, "chi is not an involution");
    if (psi[a].size() != s) throw LinkedError(K::Precondition, "psi is not square");
    for (std::size_t b = 0; b < s; ++b) {
      const bool diag = b == chi[a];
      if (diag != (psi[a][b] == kNoPsi) || (!diag && (psi[a][b] < 0 || std::size_t(psi[a][b]) >= s)))
        throw LinkedError(K::Precondition, "psi must be defined exactly off the diagonal {(a, chi(a))}");
    }
  }

  const auto order = static_cast<std::uint32_t>(s + 1);
  std::vector<Elem> table(std::size_t(order) * order);
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y) {
      Elem r;
      if (x == 0) r = y;
      else if (y == 0) r = x;
      else if (y - 1 == chi[x - 1]) r = 0;
      else r = static_cast<Elem>(psi[x - 1][y - 1] + 1);
      table[std::size_t(x) * order + y] = r;
    }
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y)
      for (Elem z = 0; z < order; ++z) {
        const Elem l = table[std::size_t(table[std::size_t(x) * order + y]) * order + z];
        const Elem r = table[std::size_t(x) * order + table[std::size_t(y) * order + z]];
        if (l != r) {
          auto name = [](Elem e) { return e == 0 ? std::string("inf") : std::to_string(e - 1); };
          throw LinkedError(K::AssociativityFails,
                            "(" + name(x) + "*" + name(y) + ")*" + name(z) + " != " + name(x) + "*(" + name(y) + "*" +
                                name(z) + ")");
        }
      }
  std::vector<std::string> labels{"inf"};
  for (std::size_t a = 0; a < s; ++a) labels.push_back(std::to_string(a));
  GroupSpec spec{"associated", {{"s", static_cast<std::int64_t>(s)}}, {}, {}};
  return recognize(std::make_shared<const FiniteGroup>(spec, order, std::move(table), std::move(labels)));
}

std::vector<std::size_t> identity_carrier_map(std::size_t s) {
  std::vector<std::size_t> f(s + 1);
  std::iota(f.begin(), f.end(), std::size_t(0));
  return f;
}

LinkedProduct linked_product(const CentralProduct& cp, const LinkedCertificate& l1, const LinkedCertificate& l2,
                             const std::vector<std::size_t>& f) {
  using K = LinkedError::Kind;
  if (l1.group != cp.first.source || l2.group != cp.second.source)
    throw LinkedError(K::Precondition, "systems do not live in the central factors");
  if (l1.chi != l2.chi || l1.psi != l2.psi)
    throw LinkedError(K::CharacteristicMismatch, "the two systems have different (chi, psi)");
  for (const auto* l : {&l1, &l2})
    for (const auto& c : l->members)
      if (!c.semiregular) throw LinkedError(K::Precondition, "members must be semiregular");

  const std::size_t s = l1.sets.size();
  const auto assoc = associated_group(s, l1.chi, l1.psi);
  const auto& sg = *assoc.group;
  if (f.size() != s + 1) throw LinkedError(K::NotAutomorphism, "f must be defined on all of S ∪ {∞}");
  if (f[0] != 0) throw LinkedError(K::NotAutomorphism, "f must fix ∞");
  std::vector<bool> hit(s + 1, false);
  for (auto v : f) {
    if (v > s || hit[v]) throw LinkedError(K::NotAutomorphism, "f is not a bijection");
    hit[v] = true;
  }
  for (Elem x = 0; x <= s; ++x)
    for (Elem y = 0; y <= s; ++y)
      if (f[sg.mul(x, y)] != sg.mul(static_cast<Elem>(f[x]), static_cast<Elem>(f[y])))
        throw LinkedError(K::NotAutomorphism, "f does not respect the associated group operation");

  std::vector<std::vector<Elem>> family;
  for (std::size_t a = 0; a < s; ++a) {
    const std::size_t b = f[a + 1] - 1;
    family.push_back(rds_product(cp.first, cp.second, l1.sets[a], l2.sets[b]).set);
  }

  LinkedProduct out;
  out.certificate = verify_linked(cp.group, cp.amalgamated, family);
  const auto n = l1.params.n;
  const auto &p1 = l1.params, &p2 = l2.params;
  out.predicted = {p1.mu * p2.mu + (n - 1) * p1.nu * p2.nu, p1.mu * p2.nu + p2.mu * p1.nu + (n - 2) * p1.nu * p2.nu};
  out.matches_recurrence = out.predicted == MuNu{out.certificate.params.mu, out.certificate.params.nu};
  out.characteristic_preserved = out.certificate.chi == l1.chi && out.certificate.psi == l1.psi;
  return out;
}

}  // namespace rdsys
