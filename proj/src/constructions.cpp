#include "rdsys/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rdsys {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

std::vector<Elem> set_union(std::vector<Elem> a, const std::vector<Elem>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted_unique(std::move(a));
}

std::vector<Elem> right_translate(const FiniteGroup& g, const std::vector<Elem>& x, Elem h) {
  std::vector<Elem> out;
  for (Elem a : x) out.push_back(g.mul(a, h));
  return sorted_unique(std::move(out));
}

std::int64_t ipow(std::int64_t b, std::uint32_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Identifies a base system's center with the running product's center and
// multiplies systems one factor at a time. center_order[c] lists the center
// of each group in matching order (c-th element of one maps to the c-th of
// the other).
IteratedSystem iterate_linked(const GroupPtr& base, const std::vector<Elem>& base_center,
                              const LinkedCertificate& base_cert, std::uint32_t r,
                              const std::optional<std::vector<std::size_t>>& f) {
  const auto carrier_map = f ? *f : identity_carrier_map(base_cert.sets.size());
  IteratedSystem out{base, Subgroup(base, base_center), base_cert, {}, {}, false, true};
  std::vector<Elem> zmap = base_center;
  for (std::uint32_t step = 2; step <= r; ++step) {
    std::vector<std::pair<Elem, Elem>> theta;
    for (std::size_t c = 0; c < zmap.size(); ++c) theta.emplace_back(zmap[c], base_center[c]);
    auto cp = central_product(out.group, base, Subgroup(out.group, zmap), Subgroup(base, base_center), theta);
    auto lp = linked_product(cp, out.certificate, base_cert, carrier_map);
    require(lp.characteristic_preserved, "product system changed its characteristic functions");
    const MuNu realized{lp.certificate.params.mu, lp.certificate.params.nu};
    out.steps.push_back({lp.predicted, realized, lp.matches_recurrence});
    out.matches_recurrence = out.matches_recurrence && lp.matches_recurrence;
    for (auto& z : zmap) z = cp.first(z);
    out.group = cp.group;
    out.certificate = std::move(lp.certificate);
    out.center = Subgroup(out.group, zmap);
  }
  require(center(out.group) == out.center, "forbidden subgroup is not the center of the product");
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Heisenberg

Automorphism heisenberg_phi(const GroupPtr& g, const Field& f, Field::Value eps, MatrixPair m) {
  const auto [alpha, beta] = m;
  const std::uint32_t q = f.order();
  const Field::Value half = f.inv(f.from_int(2));
  std::vector<Elem> images(g->order());
  for (Elem e = 0; e < g->order(); ++e) {
    const auto c = heisenberg_decode(q, 1, e);
    const auto x = c.x[0], y = c.y[0], z = c.z;
    const auto x2 = f.add(f.mul(alpha, x), f.mul(eps, f.mul(beta, y)));
    const auto y2 = f.add(f.mul(beta, x), f.mul(alpha, y));
    const auto quad = f.add(f.mul(half, f.mul(x, x)), f.mul(eps, f.mul(half, f.mul(y, y))));
    const auto det = f.sub(f.mul(alpha, alpha), f.mul(eps, f.mul(beta, beta)));
    auto z2 = f.mul(f.mul(alpha, beta), quad);
    z2 = f.add(z2, f.mul(eps, f.mul(f.mul(beta, beta), f.mul(x, y))));
    z2 = f.add(z2, f.mul(det, z));
    images[e] = heisenberg_encode(q, {{x2}, {y2}, z2});
  }
  return Automorphism::from_permutation(g, std::move(images));
}

HeisenbergSystem heisenberg_system(const FieldPtr& fp, std::optional<Field::Value> eps_in) {
  const Field& f = *fp;
  if (f.characteristic() == 2) throw std::invalid_argument("heisenberg_system: q must be odd");
  const std::uint32_t q = f.order();
  const Field::Value eps = eps_in ? *eps_in : least_nonsquare(f);
  if (eps >= q || eps == 0 || f.is_square(eps)) throw std::invalid_argument("heisenberg_system: eps must be a nonsquare");
  const Field::Value delta = f.inv(f.mul(f.from_int(16), eps));

  auto g = heisenberg(fp, 1);
  auto matmul = [&](MatrixPair a, MatrixPair b) {
    return MatrixPair{f.add(f.mul(a.first, b.first), f.mul(eps, f.mul(a.second, b.second))),
                      f.add(f.mul(a.first, b.second), f.mul(a.second, b.first))};
  };
  std::optional<MatrixPair> gen;
  for (std::uint32_t v = 1; v < q * q && !gen; ++v) {
    const MatrixPair m{v % q, v / q};
    MatrixPair acc = m;
    std::uint32_t order = 1;
    while (acc != MatrixPair{1, 0}) {
      acc = matmul(acc, m);
      ++order;
    }
    if (order == q * q - 1) gen = m;
  }
  require(gen.has_value(), "M(eps) is not cyclic");
  const auto phi = heisenberg_phi(g, f, eps, *gen);
  require(phi.order() == q * q - 1, "phi is not injective on M(eps)");

  const auto z_of = [&](Field::Value z) { return heisenberg_encode(q, {{0}, {0}, z}); };
  std::vector<Elem> zelems;
  for (Field::Value z = 0; z < q; ++z) zelems.push_back(z_of(z));
  Subgroup zsub(g, zelems);
  require(center(g) == zsub, "center is not {(0,0,z)}");

  const std::vector<Automorphism> gens{phi};
  const auto orbs = orbits(*g, gens);
  std::vector<Elem> zsharp(zelems.begin() + 1, zelems.end());
  std::size_t off_center = 0;
  for (const auto& o : orbs) {
    if (o.front() == 0) continue;
    if (zsub.contains(o.front())) {
      require(o == sorted_unique(zsharp), "Z^# is not a single orbit");
    } else {
      require(o.size() == q * q - 1, "an orbit off the center has the wrong size");
      ++off_center;
    }
  }
  require(off_center == q, "wrong number of orbits off the center");

  const Field::Value half = f.inv(f.from_int(2));
  std::vector<std::vector<Elem>> ys, xs;
  for (Field::Value i = 0; i < q; ++i) {
    std::vector<Elem> yi;
    for (Field::Value a = 0; a < q; ++a)
      for (Field::Value b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        const auto det = f.sub(f.mul(a, a), f.mul(eps, f.mul(b, b)));
        const auto gamma = f.add(f.mul(f.mul(a, b), half), f.mul(det, i));
        yi.push_back(heisenberg_encode(q, {{a}, {b}, gamma}));
      }
    yi = sorted_unique(std::move(yi));
    const Elem rep = heisenberg_encode(q, {{1}, {0}, i});
    const auto it = std::find_if(orbs.begin(), orbs.end(), [&](const auto& o) {
      return std::binary_search(o.begin(), o.end(), rep);
    });
    require(it != orbs.end() && *it == yi, "Y_i differs from the orbit of (1,0,i)");
    auto xi = set_union(yi, {0});
    const auto tr = is_transversal(zsub, xi);
    require(tr.left && tr.right, "X_i is not a transversal for the center");
    ys.push_back(std::move(yi));
    xs.push_back(std::move(xi));
  }

  auto cert = verify_linked(g, zsub, xs);
  for (Field::Value i = 0; i < q; ++i) require(cert.chi[i] == f.neg(i), "chi(i) != -i");
  bool psi_ok = true;
  for (Field::Value i = 0; i < q; ++i)
    for (Field::Value j = 0; j < q; ++j) {
      if (j == f.neg(i)) continue;
      const auto want = f.div(f.add(f.mul(i, j), delta), f.add(i, j));
      psi_ok = psi_ok && cert.psi[i][j] == static_cast<int>(want);
    }

  return HeisenbergSystem{fp,  g,   eps, delta, *gen, phi, zsub, std::move(ys), std::move(xs), std::move(cert),
                          psi_ok};
}

MuNu heisenberg_closed_form(std::int64_t q, std::uint32_t r) {
  return {ipow(q, 2 * r - 1) - ipow(q, r) + ipow(q, r - 1), ipow(q, 2 * r - 1) + ipow(q, r - 1)};
}

IteratedSystem heisenberg_system_2r(const FieldPtr& f, std::uint32_t r,
                                    const std::optional<std::vector<std::size_t>>& carrier_map) {
  if (r == 0) throw std::invalid_argument("heisenberg_system_2r: r must be positive");
  std::uint64_t order = f->order();
  for (std::uint32_t i = 0; i < 2 * r; ++i) order *= f->order();
  if (order > kMaxGroupOrder) throw std::invalid_argument("heisenberg_system_2r: group exceeds the table limit");
  const auto base = heisenberg_system(f);
  std::vector<Elem> zs;
  for (Field::Value z = 0; z < f->order(); ++z) zs.push_back(heisenberg_encode(f->order(), {{0}, {0}, z}));
  auto out = iterate_linked(base.group, zs, base.certificate, r, carrier_map);
  out.closed_form = heisenberg_closed_form(f->order(), r);
  out.matches_closed_form = out.closed_form == MuNu{out.certificate.params.mu, out.certificate.params.nu};
  return out;
}

// ---------------------------------------------------------- M_{p^3} and Q_8

std::uint32_t mp3_xi(std::uint32_t p) {
  const std::uint32_t p2 = p * p, phi = p * (p - 1);
  for (std::uint32_t g = 2; g < p2; ++g) {
    if (g % p == 0) continue;
    std::uint32_t acc = 1, order = 0;
    do {
      acc = acc * g % p2;
      ++order;
    } while (acc != 1);
    if (order == phi) {
      std::uint32_t xi = 1;
      for (std::uint32_t k = 0; k < p; ++k) xi = xi * g % p2;
      return xi;
    }
  }
  throw std::logic_error("no primitive root modulo p^2");
}

ExtraspecialSystem extraspecial_rds(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("extraspecial_rds: p must be an odd prime");
  const std::uint32_t p2 = p * p;
  auto g = extraspecial_mp3(p);
  const Elem x = mp3_element(p, 1, 0), y = mp3_element(p, 0, 1), z = g->pow(x, p);
  const std::uint32_t xi = mp3_xi(p);
  const std::uint32_t inv2 = (p + 1) / 2;  // 2^{-1} mod p

  const std::vector<Elem> gens{x, y};
  const Elem sx = g->mul(g->mul(x, y), g->pow(z, (p + 1) / 2));
  const std::vector<Elem> s_img{sx, y};
  const std::vector<Elem> t_img{g->pow(x, xi), y};
  auto sigma = automorphism_from_images(g, gens, s_img);
  auto tau = automorphism_from_images(g, gens, t_img);
  require(sigma.order() == p, "|sigma| != p");
  require(tau.order() == p - 1, "|tau| != p-1");
  require(tau(z) == g->pow(z, xi % p), "tau(z) != z^eta(xi)");
  const std::vector<Automorphism> kgens{sigma, tau};
  auto k_group = generate_automorphism_group(kgens);
  require(k_group.size() == p * (p - 1), "|<sigma, tau>| != p(p-1)");

  std::vector<Elem> ysub, zsub;
  for (std::uint32_t i = 0; i < p; ++i) {
    ysub.push_back(g->pow(y, i));
    zsub.push_back(g->pow(z, i));
  }
  Subgroup ys(g, ysub), zs(g, zsub);

  std::vector<Elem> x0;
  std::uint32_t alpha = 1;
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    for (std::uint32_t beta = 0; beta < p; ++beta) {
      const std::uint32_t gamma = (alpha % p) * beta % p * inv2 % p;
      x0.push_back(mp3_element(p, (alpha + p * gamma) % p2, beta));
    }
    alpha = alpha * xi % p2;
  }
  x0 = sorted_unique(std::move(x0));
  std::vector<std::vector<Elem>> xs;
  for (std::uint32_t i = 0; i < p; ++i) xs.push_back(right_translate(*g, x0, g->pow(y, i)));

  std::vector<std::vector<Elem>> expected;
  for (std::uint32_t i = 0; i < p; ++i) {
    const Elem yi = g->pow(y, i);
    expected.push_back({yi});
    std::vector<Elem> zy;
    for (std::uint32_t c = 1; c < p; ++c) zy.push_back(g->mul(g->pow(z, c), yi));
    expected.push_back(sorted_unique(zy));
    expected.push_back(xs[i]);
  }
  auto orbs = orbits(*g, kgens);
  std::sort(expected.begin(), expected.end());
  auto sorted_orbs = orbs;
  std::sort(sorted_orbs.begin(), sorted_orbs.end());
  require(sorted_orbs == expected, "orbits of <sigma, tau> differ from {y^i}, Z^# y^i, X_i");
  SchurPartition partition(g, orbs);
  verify_sring(partition);

  const auto tau0 = tau.power((p - 1) / 2);
  for (std::uint32_t a = 0; a < p2; ++a) require(tau0(g->pow(x, a)) == g->pow(x, p2 - a), "tau^((p-1)/2) does not invert <x>");
  for (const auto& xi_set : xs) require(set_inverse(*g, xi_set) == xi_set, "X_i is not reversible");

  std::vector<Automorphism> sigma_i;
  for (std::uint32_t i = 0; i < p; ++i) {
    const std::vector<Elem> img{g->mul(x, g->pow(y, i)), y};
    auto si = automorphism_from_images(g, gens, img);
    require(si.apply(x0) == xs[i], "sigma_i(X_0) != X_i");
    require(si.apply(ysub) == ys.elements() && si.apply(zsub) == zs.elements(), "sigma_i moves Y or Z");
    sigma_i.push_back(std::move(si));
  }

  std::vector<std::vector<Elem>> yy, zz;
  std::vector<RdsCertificate> yc, zc;
  std::vector<PdsCertificate> sc;
  const std::int64_t pp = p;
  for (std::uint32_t i = 0; i < p; ++i) {
    yy.push_back(set_union(xs[i], ysub));
    zz.push_back(set_union(xs[i], zsub));
    const auto ty = is_transversal(zs, yy.back());
    const auto tz = is_transversal(ys, zz.back());
    require(ty.left && ty.right && tz.left && tz.right, "Y_i / Z_i are not two-sided transversals");
    yc.push_back(verify_rds(g, yy.back(), zs));
    zc.push_back(verify_rds(g, zz.back(), ys));
    for (const auto* c : {&yc.back(), &zc.back()})
      require(c->m == pp * pp && c->n == pp && c->k == pp * pp && c->lambda == pp && c->reversible && c->semiregular,
              "Y_i / Z_i parameters differ from (p^2, p, p^2, p)");
    std::vector<Elem> s = xs[i];
    for (std::uint32_t c = 1; c < p; ++c) {
      s.push_back(ysub[c]);
      s.push_back(zsub[c]);
    }
    sc.push_back(verify_pds(g, sorted_unique(s)));
    const auto& pc = sc.back();
    require(pc.v == pp * pp * pp && pc.k == pp * pp + pp - 2 && pc.lambda == pp - 2 && pc.mu == pp + 2 && pc.reversible,
            "S_i parameters differ from (p^3, p^2+p-2, p-2, p+2)");
  }

  return ExtraspecialSystem{p,
                            g,
                            xi,
                            sigma,
                            tau,
                            std::move(sigma_i),
                            std::move(k_group),
                            std::move(partition),
                            ys,
                            zs,
                            std::move(xs),
                            std::move(yy),
                            std::move(zz),
                            std::move(yc),
                            std::move(zc),
                            std::move(sc)};
}

LinkedCertificate q8_system() {
  auto g = quaternion8();
  const Elem a = q8_element(1, 0), b = q8_element(0, 1);
  const auto x1 = sorted_unique({0, a, b, g->mul(b, a)});
  const auto x2 = set_inverse(*g, x1);
  return verify_linked(g, center(g), {x1, x2});
}

MuNu q8_closed_form(std::uint32_t r) {
  return {ipow(2, 2 * r - 1) - ipow(2, r) + ipow(2, r - 1), ipow(2, 2 * r - 1) + ipow(2, r - 1)};
}

IteratedSystem q8_system_2r(std::uint32_t r, const std::optional<std::vector<std::size_t>>& carrier_map) {
  if (r == 0) throw std::invalid_argument("q8_system_2r: r must be positive");
  if (ipow(2, 2 * r + 1) > kMaxGroupOrder) throw std::invalid_argument("q8_system_2r: group exceeds the table limit");
  const auto base = q8_system();
  auto out = iterate_linked(base.group, {0, q8_element(2, 0)}, base, r, carrier_map);
  out.closed_form = q8_closed_form(r);
  out.matches_closed_form = out.closed_form == MuNu{out.certificate.params.mu, out.certificate.params.nu};
  return out;
}

// ------------------------------------------------- amorphic-ring systems

EndoSpace endo_space(std::uint32_t p, std::uint32_t j, std::uint32_t i) {
  if (i == 0 || i > j) throw std::invalid_argument("endo_space: need 1 <= i <= j");
  const auto big = field_make(p, j);
  const auto fp = field_make(p, 1);
  EndoSpace out{p, j, i, {}};
  const auto count = static_cast<std::uint32_t>(ipow(p, i));
  for (Field::Value v = 0; v < count; ++v) {
    FieldMatrix m(j, j);
    Field::Value basis = 1;
    for (std::uint32_t c = 0; c < j; ++c) {
      const auto col = big->coefficients(big->mul(v, basis));
      for (std::uint32_t r = 0; r < j; ++r) m.at(r, c) = col[r];
      basis *= p;
    }
    out.elements.push_back(std::move(m));
  }
  for (Field::Value a = 0; a < count; ++a) {
    if (a) require(determinant(*fp, out.elements[a]) != 0, "endo_space: nonzero element is singular");
    for (Field::Value b = 0; b < count; ++b)
      require(mat_add(*fp, out.elements[a], out.elements[b]) == out.elements[big->add(a, b)],
              "endo_space: not additively closed");
  }
  return out;
}

DpsSystem dps_system(const FieldPtr& nf, std::uint32_t t, const EndoSpace& s,
                     std::optional<std::vector<std::uint32_t>> labeling) {
  const std::uint32_t n = nf->order();
  const std::uint32_t p = s.p, j = s.j;
  if (static_cast<std::int64_t>(t) != ipow(p, j)) throw std::invalid_argument("dps_system: t must equal |H| = p^j");
  if (n % t) throw std::invalid_argument("dps_system: t must divide n");
  const std::size_t ssize = s.elements.size();
  if (ssize < 3) throw std::invalid_argument("dps_system: |S| - 1 must be at least 2");

  const auto fp = field_make(p, 1);
  std::map<std::vector<Field::Value>, std::size_t> index_of;
  for (std::size_t a = 0; a < ssize; ++a) {
    const auto& m = s.elements[a];
    if (m.rows != j || m.cols != j) throw std::invalid_argument("dps_system: endomorphism has wrong shape");
    if ((a == 0) != std::all_of(m.data.begin(), m.data.end(), [](auto v) { return v == 0; }))
      throw std::invalid_argument("dps_system: S must list the zero map first and only once");
    if (a && determinant(*fp, m) == 0) throw std::invalid_argument("dps_system: S contains a nonzero non-automorphism");
    index_of[m.data] = a;
  }
  if (index_of.size() != ssize) throw std::invalid_argument("dps_system: S has repeated elements");
  std::vector<std::vector<std::size_t>> plus(ssize, std::vector<std::size_t>(ssize));
  for (std::size_t a = 0; a < ssize; ++a)
    for (std::size_t b = 0; b < ssize; ++b) {
      auto it = index_of.find(mat_add(*fp, s.elements[a], s.elements[b]).data);
      if (it == index_of.end()) throw std::invalid_argument("dps_system: S is not additively closed");
      plus[a][b] = it->second;
    }

  auto amorph = amorphic_latin(nf, t, std::move(labeling));
  auto hg = elementary_abelian(p, j);
  auto group = direct_product(hg, amorph.group);
  std::vector<Elem> hs;
  for (Elem h = 0; h < t; ++h) hs.push_back(h);
  Subgroup hsub(group, hs);

  auto apply = [&](const FieldMatrix& f, Elem h) {
    std::vector<Field::Value> v(j);
    for (auto& d : v) {
      d = h % p;
      h /= p;
    }
    const auto w = mat_apply(*fp, f, v);
    Elem out = 0;
    for (std::size_t k = j; k-- > 0;) out = out * p + w[k];
    return out;
  };

  std::vector<std::vector<Elem>> ys;
  for (std::size_t a = 1; a < ssize; ++a) {
    std::vector<Elem> yf{0};
    for (Elem h = 0; h < t; ++h)
      for (Elem g : amorph.sets[h]) yf.push_back(apply(s.elements[a], h) + t * g);
    yf = sorted_unique(std::move(yf));
    require(yf.size() == std::size_t(n) * n, "|Y_f| != n^2");
    const auto tr = is_transversal(hsub, yf);
    require(tr.left && tr.right, "Y_f is not a transversal for H");
    ys.push_back(std::move(yf));
  }
  for (std::size_t a = 1; a < ssize; ++a) {
    const std::size_t neg = std::find(plus[a].begin(), plus[a].end(), 0) - plus[a].begin();
    require(set_inverse(*group, ys[a - 1]) == ys[neg - 1], "Y_f^(-1) != Y_{-f}");
  }

  auto cert = verify_linked(group, hsub, ys);
  const std::int64_t nn = n, tt = t;
  const LinkedParameters want{nn * nn, tt, nn * nn, nn * nn / tt, static_cast<std::int64_t>(ssize - 1),
                              nn + (nn - 1) * nn / tt, (nn - 1) * nn / tt};
  require(cert.params == want, "parameters differ from (n^2, t, n^2, n^2/t, s-1, n+(n-1)n/t, (n-1)n/t)");
  for (std::size_t a = 1; a < ssize; ++a)
    for (std::size_t b = 1; b < ssize; ++b) {
      const std::size_t sum = plus[a][b];
      if (sum == 0) require(cert.chi[a - 1] == b - 1, "chi(f) != -f");
      else require(cert.psi[a - 1][b - 1] == static_cast<int>(sum - 1), "psi(f1, f2) != f1 + f2");
    }

  // Products of every pair, the inverse pair included, in closed form.
  bool holds = true;
  const auto e = GroupRingElement::identity(group);
  const auto whole = GroupRingElement::whole(group);
  const auto hh = GroupRingElement::indicator(group, hs);
  std::vector<GroupRingElement> ind;
  for (const auto& yf : ys) ind.push_back(GroupRingElement::indicator(group, yf));
  for (std::size_t a = 1; a < ssize; ++a)
    for (std::size_t b = 1; b < ssize; ++b) {
      const auto lhs = ind[a - 1] * ind[b - 1];
      const std::size_t sum = plus[a][b];
      const auto rhs = sum == 0 ? (nn * nn) * e + (nn * nn / tt) * (whole - hh)
                                : nn * ind[sum - 1] + ((nn - 1) * nn / tt) * whole;
      holds = holds && lhs == rhs;
    }
  require(holds, "pairwise products of Y_f differ from the closed form");

  return DpsSystem{nf, t, hg, std::move(amorph), group, hsub, s, std::move(ys), std::move(cert), holds};
}

// -------------------------------------------------- exponent p^2 assembly

ExponentP2Rds exponent_p2_rds(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("exponent_p2_rds: p must be an odd prime");
  if (r == 0) throw std::invalid_argument("exponent_p2_rds: r must be positive");
  if (ipow(p, 2 * r + 1) > kMaxGroupOrder) throw std::invalid_argument("exponent_p2_rds: group exceeds the table limit");

  const auto ex = extraspecial_rds(p);
  GroupPtr g = ex.group;
  std::vector<Elem> set = ex.y[0];
  std::vector<Elem> zmap;  // z^c
  const Elem z = g->pow(mp3_element(p, 1, 0), p);
  for (std::uint32_t c = 0; c < p; ++c) zmap.push_back(g->pow(z, c));
  RdsCertificate cert = ex.y_certs[0];

  if (r > 1) {
    const auto fp = field_make(p, 1);
    const auto heis = heisenberg_system(fp);
    std::vector<Elem> hz;
    for (Field::Value c = 0; c < p; ++c) hz.push_back(heisenberg_encode(p, {{0}, {0}, c}));
    for (std::uint32_t step = 2; step <= r; ++step) {
      std::vector<std::pair<Elem, Elem>> theta;
      for (std::uint32_t c = 0; c < p; ++c) theta.emplace_back(zmap[c], hz[c]);
      auto cp = central_product(g, heis.group, Subgroup(g, zmap), heis.center, theta);
      auto prod = rds_product(cp.first, cp.second, set, heis.x[0]);
      for (auto& e : zmap) e = cp.first(e);
      g = cp.group;
      set = std::move(prod.set);
      cert = std::move(prod.certificate);
    }
  }
  const std::int64_t pp = p;
  const std::int64_t m = ipow(p, 2 * r);
  require(cert.m == m && cert.n == pp && cert.k == m && cert.lambda == m / pp && cert.semiregular,
          "parameters differ from (p^{2r}, p, p^{2r}, p^{2r-1})");
  require(Subgroup(g, zmap) == center(g), "forbidden subgroup is not the center");
  const auto exponent = g->exponent();
  require(exponent == std::uint64_t(p) * p, "ambient group does not have exponent p^2");
  return {g, exponent, std::move(cert)};
}

}  // namespace rdsys
