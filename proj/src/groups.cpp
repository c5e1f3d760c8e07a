#include "rdsys/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

namespace rdsys {

namespace {

std::string join_values(std::span<const Field::Value> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void check_order(std::uint64_t order) {
  if (order == 0 || order > kMaxGroupOrder) {
    throw GroupError("group order " + std::to_string(order) + " outside table limit " +
                     std::to_string(kMaxGroupOrder));
  }
}

}  // namespace

std::int64_t GroupSpec::parameter(const std::string& name) const {
  for (const auto& [k, v] : parameters) {
    if (k == name) return v;
  }
  throw GroupError("group spec has no parameter '" + name + "'");
}

FiniteGroup::FiniteGroup(GroupSpec spec, std::uint32_t order, std::vector<Elem> table,
                         std::vector<std::string> labels)
    : spec_(std::move(spec)), order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  check_order(order_);
  if (table_.size() != std::size_t(order_) * order_) throw GroupError("table size mismatch");
  if (labels_.size() != order_) {
    labels_.resize(order_);
    for (Elem g = 0; g < order_; ++g) labels_[g] = std::to_string(g);
  }
  for (Elem g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) throw GroupError("index 0 is not the identity");
  }
  inverse_.assign(order_, order_);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (table_[std::size_t(a) * order_ + b] >= order_) throw GroupError("table entry out of range");
      if (table_[std::size_t(a) * order_ + b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == order_) throw GroupError("element " + std::to_string(a) + " has no inverse");
  }
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem acc = 0;
  while (k) {
    if (k & 1) acc = mul(acc, a);
    a = mul(a, a);
    k >>= 1;
  }
  return acc;
}

std::uint32_t FiniteGroup::element_order(Elem a) const {
  std::uint32_t n = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (Elem g = 0; g < order_; ++g) e = std::lcm(e, std::uint64_t(element_order(g)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::map<std::uint32_t, std::uint32_t> FiniteGroup::order_statistics() const {
  std::map<std::uint32_t, std::uint32_t> stats;
  for (Elem g = 0; g < order_; ++g) ++stats[element_order(g)];
  return stats;
}

GroupPtr make_group(GroupSpec spec, std::uint32_t order, const std::function<Elem(Elem, Elem)>& law,
                    const std::function<std::string(Elem)>& label) {
  check_order(order);
  std::vector<Elem> table(std::size_t(order) * order);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) table[std::size_t(a) * order + b] = law(a, b);
  std::vector<std::string> labels(order);
  for (Elem g = 0; g < order; ++g) labels[g] = label(g);
  return std::make_shared<const FiniteGroup>(std::move(spec), order, std::move(table), std::move(labels));
}

void audit_group(const FiniteGroup& g) {
  const std::uint32_t v = g.order();
  for (Elem a = 0; a < v; ++a) {
    std::vector<bool> seen(v, false);
    for (Elem b = 0; b < v; ++b) {
      Elem c = g.mul(a, b);
      if (seen[c]) throw GroupError("row " + std::to_string(a) + " is not a permutation");
      seen[c] = true;
    }
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      throw GroupError("inverse law fails at " + std::to_string(a));
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw GroupError("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")");
    }
  };
  if (v <= 512) {
    for (Elem a = 0; a < v; ++a)
      for (Elem b = 0; b < v; ++b)
        for (Elem c = 0; c < v; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> dist(0, v - 1);
    for (int i = 0; i < 100000; ++i) check(dist(rng), dist(rng), dist(rng));
  }
}

GroupPtr cyclic(std::uint32_t n) {
  return make_group({"cyclic", {{"n", n}}, {}, {}}, n, [n](Elem a, Elem b) { return (a + b) % n; },
                    [](Elem a) { return std::to_string(a); });
}

GroupPtr elementary_abelian(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw GroupError("elementary_abelian: p not prime");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    check_order(order);
  }
  auto law = [p, k](Elem a, Elem b) {
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };
  auto label = [p, k](Elem a) {
    std::vector<Field::Value> d(k);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return "(" + join_values(d) + ")";
  };
  return make_group({"elementary_abelian", {{"p", p}, {"k", k}}, {}, {}}, static_cast<std::uint32_t>(order),
                    law, label);
}

GroupPtr additive_group(const FieldPtr& field, std::uint32_t dim) {
  const std::uint32_t q = field->order();
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    order *= q;
    check_order(order);
  }
  auto law = [field, q, dim](Elem a, Elem b) {
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
      out += field->add(a % q, b % q) * scale;
      a /= q;
      b /= q;
      scale *= q;
    }
    return out;
  };
  auto label = [q, dim](Elem a) {
    std::vector<Field::Value> d(dim);
    for (auto& x : d) {
      x = a % q;
      a /= q;
    }
    return "(" + join_values(d) + ")";
  };
  GroupSpec spec{"additive",
                 {{"p", field->characteristic()}, {"field_degree", field->degree()}, {"dim", dim}},
                 {},
                 {}};
  return make_group(std::move(spec), static_cast<std::uint32_t>(order), law, label);
}

Elem heisenberg_encode(std::uint32_t q, const HeisenbergCoords& c) {
  Elem idx = c.z;
  for (std::size_t i = c.y.size(); i-- > 0;) idx = idx * q + c.y[i];
  for (std::size_t i = c.x.size(); i-- > 0;) idx = idx * q + c.x[i];
  return idx;
}

HeisenbergCoords heisenberg_decode(std::uint32_t q, std::uint32_t r, Elem e) {
  HeisenbergCoords c;
  c.x.resize(r);
  c.y.resize(r);
  for (auto& v : c.x) {
    v = e % q;
    e /= q;
  }
  for (auto& v : c.y) {
    v = e % q;
    e /= q;
  }
  c.z = e;
  return c;
}

GroupPtr heisenberg(const FieldPtr& field, std::uint32_t r) {
  if (field->characteristic() == 2) throw GroupError("heisenberg: even q not supported");
  if (r == 0) throw GroupError("heisenberg: r must be positive");
  const std::uint32_t q = field->order();
  std::uint64_t order = q;
  for (std::uint32_t i = 0; i < 2 * r; ++i) {
    order *= q;
    check_order(order);
  }
  auto law = [field, q, r](Elem a, Elem b) {
    auto u = heisenberg_decode(q, r, a);
    auto w = heisenberg_decode(q, r, b);
    HeisenbergCoords out;
    out.x.resize(r);
    out.y.resize(r);
    Field::Value dot = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
      out.x[i] = field->add(u.x[i], w.x[i]);
      out.y[i] = field->add(u.y[i], w.y[i]);
      dot = field->add(dot, field->mul(u.x[i], w.y[i]));
    }
    out.z = field->add(field->add(u.z, w.z), dot);
    return heisenberg_encode(q, out);
  };
  auto label = [q, r](Elem e) {
    auto c = heisenberg_decode(q, r, e);
    if (r == 1) return "(" + std::to_string(c.x[0]) + "," + std::to_string(c.y[0]) + "," + std::to_string(c.z) + ")";
    return "([" + join_values(c.x) + "],[" + join_values(c.y) + "]," + std::to_string(c.z) + ")";
  };
  GroupSpec spec{"heisenberg",
                 {{"p", field->characteristic()}, {"field_degree", field->degree()}, {"r", r}},
                 {},
                 {}};
  return make_group(std::move(spec), static_cast<std::uint32_t>(order), law, label);
}

GroupPtr extraspecial_mp3(std::uint32_t p) {
  if (!is_prime(p)) throw GroupError("extraspecial_mp3: p not prime");
  if (p == 2) throw GroupError("extraspecial_mp3: p must be odd");
  const std::uint32_t p2 = p * p;
  check_order(std::uint64_t(p2) * p);
  auto law = [p, p2](Elem u, Elem w) {
    std::uint32_t a = u % p2, b = u / p2, c = w % p2, d = w / p2;
    return mp3_element(p, (a + c + p * ((b * c) % p)) % p2, (b + d) % p);
  };
  auto label = [p2](Elem u) {
    std::uint32_t a = u % p2, b = u / p2;
    std::string s;
    if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b) s += b == 1 ? "y" : "y^" + std::to_string(b);
    return s.empty() ? std::string("e") : s;
  };
  return make_group({"extraspecial_mp3", {{"p", p}}, {}, {}}, p2 * p, law, label);
}

GroupPtr quaternion8() {
  auto law = [](Elem u, Elem w) {
    std::uint32_t i = u % 4, j = u / 4, k = w % 4, l = w / 4;
    std::uint32_t a = (j ? i + 4 - k : i + k) % 4;
    std::uint32_t b = j + l;
    if (b == 2) {
      a = (a + 2) % 4;
      b = 0;
    }
    return q8_element(a, b);
  };
  auto label = [](Elem u) {
    static const char* names[] = {"e", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"};
    return std::string(names[u]);
  };
  return make_group({"quaternion8", {}, {}, {}}, 8, law, label);
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const std::uint32_t n1 = g1->order(), n2 = g2->order();
  check_order(std::uint64_t(n1) * n2);
  auto law = [g1, g2, n1](Elem a, Elem b) {
    return g1->mul(a % n1, b % n1) + n1 * g2->mul(a / n1, b / n1);
  };
  auto label = [g1, g2, n1](Elem a) { return "(" + g1->label(a % n1) + "|" + g2->label(a / n1) + ")"; };
  return make_group({"direct_product", {}, {g1, g2}, {}}, n1 * n2, law, label);
}

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> elements)
    : group_(std::move(group)), elements_(sorted_unique(std::move(elements))), member_(group_->order(), false) {
  for (Elem g : elements_) {
    if (g >= group_->order()) throw GroupError("subgroup element out of range");
    member_[g] = true;
  }
  if (elements_.empty() || !member_[0]) throw GroupError("subgroup misses the identity");
  for (Elem a : elements_) {
    if (!member_[group_->inv(a)]) throw GroupError("subgroup not closed under inverses");
    for (Elem b : elements_) {
      if (!member_[group_->mul(a, b)]) throw GroupError("subgroup not closed under multiplication");
    }
  }
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> seeds) {
  std::vector<bool> in(g->order(), false);
  std::vector<Elem> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : seeds) {
      Elem x = g->mul(elems[i], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  return Subgroup(g, std::move(elems));
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g->order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g->order() && central; ++b) central = g->mul(a, b) == g->mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.group();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem n : h.elements())
      if (!h.contains(g.conjugate(n, x))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > 256) throw GroupError("all_subgroups: order above 256");
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> cyclics;
  for (Elem a = 0; a < g->order(); ++a) {
    Elem seed[] = {a};
    auto c = subgroup_closure(g, seed).elements();
    if (seen.insert(c).second) cyclics.push_back(c);
  }
  std::vector<std::vector<Elem>> found(cyclics.begin(), cyclics.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclics) {
      if (std::includes(found[i].begin(), found[i].end(), c.begin(), c.end())) continue;
      std::vector<Elem> seeds = found[i];
      seeds.insert(seeds.end(), c.begin(), c.end());
      auto j = subgroup_closure(g, seeds).elements();
      if (seen.insert(j).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  for (auto& s : found) out.emplace_back(g, std::move(s));
  return out;
}

TransversalCheck is_transversal(const Subgroup& h, std::span<const Elem> x) {
  const auto& g = *h.group();
  TransversalCheck result;
  auto uniq = sorted_unique(std::vector<Elem>(x.begin(), x.end()));
  if (uniq.size() != x.size() || std::size_t(h.size()) * x.size() != g.order()) return result;
  std::vector<bool> left(g.order(), false), right(g.order(), false);
  result.left = result.right = true;
  for (Elem a : x) {
    for (Elem n : h.elements()) {
      Elem l = g.mul(a, n), r = g.mul(n, a);
      if (left[l]) result.left = false;
      if (right[r]) result.right = false;
      left[l] = right[r] = true;
    }
  }
  return result;
}

Automorphism Automorphism::from_permutation(GroupPtr g, std::vector<Elem> images) {
  const std::uint32_t v = g->order();
  if (images.size() != v) throw GroupError("automorphism: wrong image count");
  std::vector<bool> seen(v, false);
  for (Elem x : images) {
    if (x >= v || seen[x]) throw GroupError("automorphism: map is not a bijection");
    seen[x] = true;
  }
  for (Elem a = 0; a < v; ++a)
    for (Elem b = 0; b < v; ++b)
      if (images[g->mul(a, b)] != g->mul(images[a], images[b])) {
        throw GroupError("automorphism: homomorphism law fails at (" + g->label(a) + ", " + g->label(b) + ")");
      }
  return Automorphism(std::move(g), std::move(images));
}

Automorphism Automorphism::after(const Automorphism& other) const {
  std::vector<Elem> out(images_.size());
  for (Elem g = 0; g < out.size(); ++g) out[g] = images_[other.images_[g]];
  return Automorphism(group_, std::move(out));
}

Automorphism Automorphism::inverse() const {
  std::vector<Elem> out(images_.size());
  for (Elem g = 0; g < out.size(); ++g) out[images_[g]] = g;
  return Automorphism(group_, std::move(out));
}

Automorphism Automorphism::power(std::int64_t k) const {
  Automorphism base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  std::vector<Elem> id(images_.size());
  std::iota(id.begin(), id.end(), 0);
  Automorphism acc(group_, std::move(id));
  while (k) {
    if (k & 1) acc = acc.after(base);
    base = base.after(base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t Automorphism::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> done(images_.size(), false);
  for (Elem g = 0; g < images_.size(); ++g) {
    if (done[g]) continue;
    std::uint64_t len = 0;
    for (Elem x = g; !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Automorphism::is_identity() const {
  for (Elem g = 0; g < images_.size(); ++g)
    if (images_[g] != g) return false;
  return true;
}

std::vector<Elem> Automorphism::apply(std::span<const Elem> set) const {
  std::vector<Elem> out;
  out.reserve(set.size());
  for (Elem g : set) out.push_back(images_[g]);
  std::sort(out.begin(), out.end());
  return out;
}

Automorphism automorphism_from_images(const GroupPtr& g, std::span<const Elem> generators,
                                      std::span<const Elem> images) {
  if (generators.size() != images.size()) throw GroupError("automorphism_from_images: size mismatch");
  const std::uint32_t v = g->order();
  constexpr Elem unset = ~Elem(0);
  std::vector<Elem> phi(v, unset);
  phi[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Elem y = g->mul(x, generators[i]);
      Elem img = g->mul(phi[x], images[i]);
      if (phi[y] == unset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        throw GroupError("generator images do not define a homomorphism (conflict at " + g->label(y) + ")");
      }
    }
  }
  if (std::find(phi.begin(), phi.end(), unset) != phi.end()) {
    throw GroupError("automorphism_from_images: generators do not generate the group");
  }
  return Automorphism::from_permutation(g, std::move(phi));
}

std::vector<std::vector<Elem>> orbits(const FiniteGroup& g, std::span<const Automorphism> gens) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem start = 0; start < g.order(); ++start) {
    if (done[start]) continue;
    std::vector<Elem> orbit{start};
    done[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& a : gens) {
        Elem y = a(orbit[i]);
        if (!done[y]) {
          done[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Automorphism> generate_automorphism_group(std::span<const Automorphism> gens, std::size_t limit) {
  if (gens.empty()) throw GroupError("generate_automorphism_group: no generators");
  std::set<std::vector<Elem>> seen;
  std::vector<Automorphism> out{gens[0].power(0)};
  seen.insert(out[0].images());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      Automorphism next = s.after(out[i]);
      if (seen.insert(next.images()).second) {
        out.push_back(std::move(next));
        if (out.size() > limit) throw GroupError("automorphism group exceeds limit");
      }
    }
  }
  return out;
}

std::vector<Elem> Embedding::image_of(std::span<const Elem> set) const {
  std::vector<Elem> out;
  out.reserve(set.size());
  for (Elem g : set) out.push_back(map[g]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Embedding::image() const { return Subgroup(target, std::vector<Elem>(map.begin(), map.end())); }

Embedding make_embedding(GroupPtr source, GroupPtr target, std::vector<Elem> map) {
  if (map.size() != source->order()) throw GroupError("embedding: wrong map size");
  std::vector<bool> hit(target->order(), false);
  for (Elem x : map) {
    if (x >= target->order() || hit[x]) throw GroupError("embedding: map is not injective");
    hit[x] = true;
  }
  for (Elem a = 0; a < source->order(); ++a)
    for (Elem b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) throw GroupError("embedding: not a homomorphism");
  return Embedding{std::move(source), std::move(target), std::move(map)};
}

namespace {

std::vector<std::pair<Elem, Elem>> default_theta(const Subgroup& z1, const Subgroup& z2) {
  const auto& g1 = *z1.group();
  const auto& g2 = *z2.group();
  if (z1.size() != z2.size()) throw GroupError("central_product: amalgamated subgroups differ in order");
  auto generator = [](const FiniteGroup& g, const Subgroup& z) {
    for (Elem a : z.elements())
      if (g.element_order(a) == z.size()) return a;
    throw GroupError("central_product: amalgamated subgroup not cyclic; pass theta explicitly");
  };
  Elem a = generator(g1, z1), b = generator(g2, z2);
  std::vector<std::pair<Elem, Elem>> theta;
  for (std::uint32_t k = 0; k < z1.size(); ++k) theta.emplace_back(g1.pow(a, k), g2.pow(b, k));
  return theta;
}

}  // namespace

CentralProduct central_product(const GroupPtr& g1, const GroupPtr& g2, const Subgroup& z1, const Subgroup& z2,
                               std::optional<std::vector<std::pair<Elem, Elem>>> theta_in) {
  if (z1.group() != g1 || z2.group() != g2) throw GroupError("central_product: subgroup/group mismatch");
  auto c1 = center(g1), c2 = center(g2);
  for (Elem z : z1.elements())
    if (!c1.contains(z)) throw GroupError("central_product: Z1 is not central");
  for (Elem z : z2.elements())
    if (!c2.contains(z)) throw GroupError("central_product: Z2 is not central");

  auto theta = theta_in ? std::move(*theta_in) : default_theta(z1, z2);
  std::vector<Elem> tmap(g1->order(), ~Elem(0));
  std::vector<bool> hit(g2->order(), false);
  for (auto [a, b] : theta) {
    if (!z1.contains(a) || !z2.contains(b) || tmap[a] != ~Elem(0) || hit[b])
      throw GroupError("central_product: theta is not a bijection Z1 -> Z2");
    tmap[a] = b;
    hit[b] = true;
  }
  if (theta.size() != z1.size() || z1.size() != z2.size())
    throw GroupError("central_product: theta is not a bijection Z1 -> Z2");
  for (Elem a : z1.elements())
    for (Elem b : z1.elements())
      if (tmap[g1->mul(a, b)] != g2->mul(tmap[a], tmap[b])) throw GroupError("central_product: theta is not a homomorphism");

  const std::uint32_t n1 = g1->order(), n2 = g2->order();
  const std::uint64_t order = std::uint64_t(n1) * n2 / z1.size();
  check_order(order);
  std::vector<Elem> cls(std::size_t(n1) * n2, ~Elem(0));
  std::vector<std::pair<Elem, Elem>> reps;
  for (std::size_t idx = 0; idx < cls.size(); ++idx) {
    if (cls[idx] != ~Elem(0)) continue;
    Elem a = idx % n1, b = static_cast<Elem>(idx / n1);
    Elem id = static_cast<Elem>(reps.size());
    reps.emplace_back(a, b);
    for (Elem z : z1.elements()) {
      Elem a2 = g1->mul(a, z), b2 = g2->mul(b, g2->inv(tmap[z]));
      cls[a2 + std::size_t(n1) * b2] = id;
    }
  }
  auto law = [&](Elem u, Elem w) {
    auto [a1, b1] = reps[u];
    auto [a2, b2] = reps[w];
    return cls[g1->mul(a1, a2) + std::size_t(n1) * g2->mul(b1, b2)];
  };
  auto label = [&](Elem u) {
    auto [a, b] = reps[u];
    return g1->label(a) + "*" + g2->label(b);
  };
  GroupSpec spec{"central_product", {}, {g1, g2}, theta};
  auto group = make_group(std::move(spec), static_cast<std::uint32_t>(order), law, label);

  std::vector<Elem> m1(n1), m2(n2);
  for (Elem a = 0; a < n1; ++a) m1[a] = cls[a];
  for (Elem b = 0; b < n2; ++b) m2[b] = cls[std::size_t(n1) * b];
  Embedding e1 = make_embedding(g1, group, std::move(m1));
  Embedding e2 = make_embedding(g2, group, std::move(m2));
  Subgroup amalgamated(group, e1.image_of(z1.elements()));
  return CentralProduct{group, std::move(e1), std::move(e2), std::move(amalgamated)};
}

std::vector<Elem> set_inverse(const FiniteGroup& g, std::span<const Elem> x) {
  std::vector<Elem> out;
  out.reserve(x.size());
  for (Elem a : x) out.push_back(g.inv(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace rdsys
