#include "rdsys/rds.hpp"

#include <algorithm>
#include <set>

namespace rdsys {

namespace {

struct CoreParams {
  std::int64_t m, n, k, lambda;
};

std::vector<Elem> checked_set(const GroupPtr& g, std::span<const Elem> x, const char* what) {
  std::vector<Elem> v(x.begin(), x.end());
  for (Elem e : v)
    if (e >= g->order()) throw RdsError(RdsError::Kind::Precondition, std::string(what) + ": element index out of range");
  auto s = sorted_unique(v);
  if (s.size() != v.size()) throw RdsError(RdsError::Kind::Precondition, std::string(what) + ": set has repeated elements");
  return s;
}

// The defining equation only, no flags.
CoreParams check_rds_equation(const GroupPtr& g, const std::vector<Elem>& x, const Subgroup& n) {
  if (n.group() != g) throw RdsError(RdsError::Kind::Precondition, "forbidden subgroup lives in another group");
  if (n.size() == g->order()) throw RdsError(RdsError::Kind::Precondition, "forbidden subgroup must be proper");
  if (x.empty()) throw RdsError(RdsError::Kind::Precondition, "empty set");

  const auto xi = GroupRingElement::indicator(g, x);
  const auto prod = xi * xi.involution();
  const auto k = static_cast<std::int64_t>(x.size());

  Elem off = 0;
  while (n.contains(off)) ++off;
  const std::int64_t lambda = prod[off];

  for (Elem h = 0; h < g->order(); ++h) {
    const std::int64_t want = h == 0 ? k : (n.contains(h) ? 0 : lambda);
    if (prod[h] != want) {
      RdsError err(RdsError::Kind::EquationFails,
                   "X X^(-1) has coefficient " + std::to_string(prod[h]) + " at " + g->label(h) + ", expected " +
                       std::to_string(want));
      err.witness = h;
      err.expected = want;
      err.actual = prod[h];
      throw err;
    }
  }
  if (lambda <= 0) throw RdsError(RdsError::Kind::LambdaNotPositive, "lambda = " + std::to_string(lambda) + " is not positive");

  CoreParams p{g->order() / n.size(), n.size(), k, lambda};
  if (p.k * (p.k - 1) != p.lambda * p.n * (p.m - 1))
    throw RdsError(RdsError::Kind::LemmaViolation, "k(k-1) != lambda n (m-1)");
  return p;
}

// The only possible forbidden subgroup: identity plus the zero set of X X^(-1).
std::optional<Subgroup> zero_set_candidate(const GroupPtr& g, const std::vector<Elem>& x) {
  const auto xi = GroupRingElement::indicator(g, x);
  const auto prod = xi * xi.involution();
  std::vector<Elem> cand{0};
  for (Elem h = 1; h < g->order(); ++h)
    if (prod[h] == 0) cand.push_back(h);
  if (cand.size() == g->order()) return std::nullopt;
  try {
    return Subgroup(g, cand);
  } catch (const GroupError&) {
    return std::nullopt;
  }
}

}  // namespace

RdsCertificate verify_rds(const GroupPtr& g, std::span<const Elem> x_in, const Subgroup& n) {
  const auto x = checked_set(g, x_in, "verify_rds");
  const auto p = check_rds_equation(g, x, n);

  RdsCertificate cert;
  cert.group = g;
  cert.set = x;
  cert.forbidden = n.elements();
  cert.m = p.m;
  cert.n = p.n;
  cert.k = p.k;
  cert.lambda = p.lambda;
  cert.semiregular = p.k == p.m;
  const auto xinv = set_inverse(*g, x);
  cert.reversible = xinv == x;
  cert.icommuting = is_icommuting(g, x, n);
  cert.forbidden_normal = is_normal(n);

  if (auto other = zero_set_candidate(g, xinv)) {
    try {
      const auto q = check_rds_equation(g, xinv, *other);
      cert.symmetric = q.m == p.m && q.n == p.n && q.k == p.k && q.lambda == p.lambda;
    } catch (const RdsError&) {
      cert.symmetric = false;
    }
  }
  cert.notable = cert.symmetric && !cert.icommuting;
  return cert;
}

std::vector<Subgroup> find_forbidden(const GroupPtr& g, std::span<const Elem> x_in) {
  const auto x = checked_set(g, x_in, "find_forbidden");
  if (x.empty()) return {};
  auto cand = zero_set_candidate(g, x);
  if (!cand) return {};
  try {
    check_rds_equation(g, x, *cand);
  } catch (const RdsError&) {
    return {};
  }
  return {*cand};
}

bool is_icommuting(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n) {
  const auto xi = GroupRingElement::indicator(g, x);
  const auto xinv = xi.involution();
  const auto ni = GroupRingElement::indicator(g, n.elements());
  const bool by_definition = xi * xinv == xinv * xi;
  const bool by_subgroup = xi * ni == ni * xi;
  if (by_definition != by_subgroup)
    throw RdsError(RdsError::Kind::LemmaViolation,
                   "XX^(-1) = X^(-1)X and XN = NX disagree for an RDS; the equivalence is falsified");
  return by_definition;
}

RdsProduct rds_product(const Embedding& e1, const Embedding& e2, std::span<const Elem> x1,
                       std::span<const Elem> x2) {
  using K = RdsError::Kind;
  if (e1.target != e2.target) throw RdsError(K::Precondition, "embeddings have different targets");
  const GroupPtr& g = e1.target;
  const std::uint32_t v = g->order();
  if (e1.source->order() >= v || e2.source->order() >= v)
    throw RdsError(K::Precondition, "factors must be proper subgroups");

  const auto img1 = e1.image().elements();
  const auto img2 = e2.image().elements();
  std::vector<bool> hit(v, false);
  for (Elem a : img1)
    for (Elem b : img2) hit[g->mul(a, b)] = true;
  if (std::count(hit.begin(), hit.end(), true) != static_cast<std::ptrdiff_t>(v))
    throw RdsError(K::Precondition, "G is not the product G1 G2");

  std::vector<Elem> meet;
  std::set_intersection(img1.begin(), img1.end(), img2.begin(), img2.end(), std::back_inserter(meet));
  const Subgroup n(g, meet);

  auto preimage = [&](const Embedding& e) {
    std::vector<Elem> pre;
    for (Elem a = 0; a < e.source->order(); ++a)
      if (n.contains(e(a))) pre.push_back(a);
    return Subgroup(e.source, pre);
  };
  const Subgroup n1 = preimage(e1);
  const Subgroup n2 = preimage(e2);

  const auto c1 = verify_rds(e1.source, x1, n1);
  const auto c2 = verify_rds(e2.source, x2, n2);
  if (!c1.semiregular || !c2.semiregular) throw RdsError(K::Precondition, "both factors must be semiregular");
  if (!c1.icommuting) throw RdsError(K::Precondition, "first factor must be i-commuting");

  std::vector<Elem> prod;
  std::vector<bool> seen(v, false);
  for (Elem a : c1.set) {
    for (Elem b : c2.set) {
      const Elem ab = g->mul(e1(a), e2(b));
      if (seen[ab]) throw RdsError(K::Collision, "x1 x2 products collide at " + g->label(ab));
      seen[ab] = true;
      prod.push_back(ab);
    }
  }
  prod = sorted_unique(std::move(prod));

  RdsProduct out{prod, verify_rds(g, prod, n)};
  const auto nn = c1.n;
  const auto& c = out.certificate;
  const auto lam = nn * c1.lambda * c2.lambda;
  if (!(c.semiregular && c.m == nn * lam && c.n == nn && c.k == nn * lam && c.lambda == lam))
    throw RdsError(K::LemmaViolation, "product parameters differ from (n^2 l1 l2, n, n^2 l1 l2, n l1 l2)");
  return out;
}

PdsCertificate verify_pds(const GroupPtr& g, std::span<const Elem> s_in) {
  using K = RdsError::Kind;
  const auto s = checked_set(g, s_in, "verify_pds");
  if (s.empty()) throw RdsError(K::Precondition, "empty set");
  if (s.front() == 0) throw RdsError(K::Precondition, "partial difference set must not contain the identity");

  const auto si = GroupRingElement::indicator(g, s);
  const auto prod = si * si.involution();
  std::vector<bool> in_s(g->order(), false);
  for (Elem x : s) in_s[x] = true;

  PdsCertificate cert;
  cert.group = g;
  cert.set = s;
  cert.v = g->order();
  cert.k = static_cast<std::int64_t>(s.size());
  cert.lambda = prod[s.front()];
  for (Elem h = 1; h < g->order(); ++h) {
    if (!in_s[h]) {
      cert.mu = prod[h];
      break;
    }
  }
  for (Elem h = 0; h < g->order(); ++h) {
    const std::int64_t want = h == 0 ? cert.k : (in_s[h] ? cert.lambda : cert.mu);
    if (prod[h] != want) {
      RdsError err(K::EquationFails, "S S^(-1) has coefficient " + std::to_string(prod[h]) + " at " + g->label(h) +
                                         ", expected " + std::to_string(want));
      err.witness = h;
      err.expected = want;
      err.actual = prod[h];
      throw err;
    }
  }
  cert.reversible = set_inverse(*g, s) == s;
  return cert;
}

PdsCertificate rds_to_pds(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n) {
  using K = RdsError::Kind;
  const auto c = verify_rds(g, x, n);
  if (c.lambda != c.n) throw RdsError(K::Precondition, "lambda must equal n");
  if (!c.reversible) throw RdsError(K::Precondition, "X must be reversible");
  if (!c.semiregular) throw RdsError(K::Precondition, "X must be semiregular");

  std::vector<Elem> s;
  for (Elem a : c.set)
    if (a != 0) s.push_back(a);
  for (Elem a : n.elements())
    if (a != 0) s.push_back(a);
  auto cert = verify_pds(g, sorted_unique(std::move(s)));
  const auto nn = c.n;
  if (cert.v != nn * nn * nn || cert.k != nn * nn + nn - 2 || cert.lambda != nn - 2 || cert.mu != nn + 2)
    throw RdsError(K::LemmaViolation, "derived PDS parameters differ from (n^3, n^2+n-2, n-2, n+2)");
  return cert;
}

std::vector<std::vector<Elem>> dev(const GroupPtr& g, std::span<const Elem> x) {
  std::vector<std::vector<Elem>> blocks;
  std::set<std::vector<Elem>> seen;
  for (Elem h = 0; h < g->order(); ++h) {
    std::vector<Elem> b;
    b.reserve(x.size());
    for (Elem a : x) b.push_back(g->mul(a, h));
    b = sorted_unique(std::move(b));
    if (seen.insert(b).second) blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace rdsys
