#include "rdsys/cover.hpp"

#include <algorithm>
#include <sstream>

namespace rdsys {

std::size_t Graph::edge_count() const {
  std::size_t d = 0;
  for (const auto& a : adj) d += a.size();
  return d / 2;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{' << b0 << ',' << b1 << ',' << b2 << ';' << c1 << ',' << c2 << ',' << c3 << '}';
  return os.str();
}

Graph cayley_graph(const GroupPtr& g, std::span<const Elem> s_in) {
  const auto s = sorted_unique(std::vector<Elem>(s_in.begin(), s_in.end()));
  if (!s.empty() && s.front() == 0) throw DrgError(DrgError::Kind::Precondition, "connection set contains the identity");
  if (set_inverse(*g, s) != s) throw DrgError(DrgError::Kind::Precondition, "connection set is not inverse-closed");
  Graph graph;
  graph.vertices = g->order();
  graph.adj.resize(graph.vertices);
  for (Elem u = 0; u < g->order(); ++u) {
    auto& nb = graph.adj[u];
    for (Elem a : s) nb.push_back(g->mul(a, u));
    std::sort(nb.begin(), nb.end());
  }
  return graph;
}

DrgCertificate certify_drg(const Graph& graph) {
  using K = DrgError::Kind;
  const std::uint32_t v = graph.vertices;
  std::optional<IntersectionArray> array;
  std::vector<int> dist(v);
  std::vector<std::uint32_t> queue;
  queue.reserve(v);

  for (std::uint32_t u = 0; u < v; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    queue.assign(1, u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto w = queue[head];
      for (auto x : graph.adj[w])
        if (dist[x] < 0) {
          dist[x] = dist[w] + 1;
          queue.push_back(x);
        }
    }
    if (queue.size() != v) {
      DrgError err(K::Disconnected, "graph is disconnected");
      err.u = u;
      throw err;
    }
    const int diameter = dist[queue.back()];
    if (diameter != 3) {
      DrgError err(K::WrongDiameter, "diameter " + std::to_string(diameter) + ", expected 3");
      err.u = u;
      err.diameter = diameter;
      throw err;
    }

    std::int64_t b[4] = {0, 0, 0, 0}, c[4] = {0, 0, 0, 0};
    std::vector<bool> seen_layer(4, false);
    for (std::uint32_t w = 0; w < v; ++w) {
      const int i = dist[w];
      std::int64_t up = 0, down = 0;
      for (auto x : graph.adj[w]) {
        if (dist[x] == i + 1) ++up;
        if (dist[x] == i - 1) ++down;
      }
      if (!seen_layer[i]) {
        seen_layer[i] = true;
        b[i] = up;
        c[i] = down;
      } else if (b[i] != up || c[i] != down) {
        DrgError err(K::NotDistanceRegular, "intersection numbers vary at distance " + std::to_string(i) +
                                                " from vertex " + std::to_string(u));
        err.u = u;
        err.v = w;
        throw err;
      }
    }
    const IntersectionArray here{b[0], b[1], b[2], c[1], c[2], c[3]};
    if (!array) {
      array = here;
    } else if (!(*array == here)) {
      DrgError err(K::NotDistanceRegular, "intersection array " + here.to_string() + " at vertex " +
                                              std::to_string(u) + " differs from " + array->to_string());
      err.u = 0;
      err.v = u;
      throw err;
    }
  }

  DrgCertificate cert;
  cert.array = *array;
  std::vector<int> class_of(v, -1);
  for (std::uint32_t u = 0; u < v; ++u) {
    if (class_of[u] >= 0) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    queue.assign(1, u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto w = queue[head];
      for (auto x : graph.adj[w])
        if (dist[x] < 0) {
          dist[x] = dist[w] + 1;
          queue.push_back(x);
        }
    }
    std::vector<std::uint32_t> cls{u};
    for (std::uint32_t w = 0; w < v; ++w)
      if (dist[w] == 3) cls.push_back(w);
    std::sort(cls.begin(), cls.end());
    const int id = static_cast<int>(cert.antipodal_classes.size());
    for (auto w : cls) {
      if (class_of[w] >= 0) {
        DrgError err(K::NotAntipodal, "distance-3 relation is not an equivalence");
        err.u = u;
        err.v = w;
        throw err;
      }
      class_of[w] = id;
    }
    cert.antipodal_classes.push_back(std::move(cls));
  }
  // Every class must be a clique of the distance-3 relation.
  for (const auto& cls : cert.antipodal_classes) {
    const auto size = static_cast<std::int64_t>(cls.size());
    if (size - 1 != cert.array.b0 * cert.array.b1 * cert.array.b2 /
                        (cert.array.c1 * cert.array.c2 * cert.array.c3)) {
      DrgError err(K::NotAntipodal, "antipodal class size disagrees with k_3");
      err.u = cls.front();
      throw err;
    }
  }
  return cert;
}

DrgCertificate cayley_drg_check(const GroupPtr& g, std::span<const Elem> s) {
  return certify_drg(cayley_graph(g, s));
}

IntersectionArray cover_array(std::int64_t n, std::int64_t lambda) {
  return {n * lambda - 1, (n - 1) * lambda, 1, 1, lambda, n * lambda - 1};
}

CoverRoundTrip rds_cover_round_trip(const GroupPtr& g, std::span<const Elem> x, const Subgroup& n) {
  CoverRoundTrip out;
  out.rds = verify_rds(g, x, n);
  if (!out.rds.reversible || !out.rds.semiregular)
    throw DrgError(DrgError::Kind::Precondition, "round trip needs a reversible semiregular RDS");

  std::vector<Elem> s;
  for (Elem a : out.rds.set)
    if (a != 0) s.push_back(a);
  out.drg = cayley_drg_check(g, s);
  const auto expected = cover_array(out.rds.n, out.rds.lambda);
  if (!(out.drg.array == expected))
    throw DrgError(DrgError::Kind::NotDistanceRegular,
                   "array " + out.drg.array.to_string() + " differs from cover template " + expected.to_string());

  std::vector<std::vector<std::uint32_t>> cosets;
  std::vector<bool> covered(g->order(), false);
  for (Elem u = 0; u < g->order(); ++u) {
    if (covered[u]) continue;
    std::vector<std::uint32_t> c;
    for (Elem a : n.elements()) c.push_back(g->mul(a, u));
    std::sort(c.begin(), c.end());
    for (auto w : c) covered[w] = true;
    cosets.push_back(std::move(c));
  }
  if (cosets != out.drg.antipodal_classes)
    throw DrgError(DrgError::Kind::NotAntipodal, "antipodal classes are not the right cosets of N");

  out.cover_r = static_cast<std::int64_t>(out.drg.antipodal_classes.size());
  out.cover_n = static_cast<std::int64_t>(out.drg.antipodal_classes.front().size());
  out.cover_c2 = out.drg.array.c2;

  auto graph = cayley_graph(g, s);
  std::vector<Elem> rebuilt{0};
  rebuilt.insert(rebuilt.end(), graph.adj[0].begin(), graph.adj[0].end());
  std::vector<Elem> class0(out.drg.antipodal_classes.front().begin(), out.drg.antipodal_classes.front().end());
  Subgroup n2(g, class0);
  out.rebuilt = verify_rds(g, sorted_unique(rebuilt), n2);
  if (out.rebuilt.m != out.cover_r || out.rebuilt.n != out.cover_n || out.rebuilt.lambda != out.cover_c2 ||
      out.rebuilt.m != out.rds.m || out.rebuilt.n != out.rds.n || out.rebuilt.lambda != out.rds.lambda)
    throw DrgError(DrgError::Kind::NotDistanceRegular, "rebuilt RDS parameters differ from the cover parameters");
  return out;
}

FieldMatrix standard_symplectic(const Field& f, std::uint32_t r) {
  FieldMatrix b(2 * r, 2 * r);
  for (std::uint32_t i = 0; i < r; ++i) {
    b.at(i, r + i) = f.one();
    b.at(r + i, i) = f.neg(f.one());
  }
  return b;
}

Graph thas_somma(const FieldPtr& fp, std::uint32_t r, const FieldMatrix& b) {
  const Field& f = *fp;
  const std::uint32_t d = 2 * r;
  if (b.rows != d || b.cols != d) throw std::invalid_argument("thas_somma: form must be 2r x 2r");
  for (std::uint32_t i = 0; i < d; ++i) {
    if (b.at(i, i) != 0) throw std::invalid_argument("thas_somma: form is not alternating");
    for (std::uint32_t j = 0; j < d; ++j)
      if (b.at(i, j) != f.neg(b.at(j, i))) throw std::invalid_argument("thas_somma: form is not alternating");
  }
  if (determinant(f, b) == 0) throw std::invalid_argument("thas_somma: form is degenerate");

  const std::uint32_t q = f.order();
  std::uint64_t qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) qd *= q;
  if (qd * q > kMaxGroupOrder) throw std::invalid_argument("thas_somma: graph too large");
  const auto points = static_cast<std::uint32_t>(qd);

  std::vector<std::vector<Field::Value>> coords(points, std::vector<Field::Value>(d));
  for (std::uint32_t a = 0; a < points; ++a) {
    std::uint32_t t = a;
    for (std::uint32_t i = 0; i < d; ++i) {
      coords[a][i] = t % q;
      t /= q;
    }
  }
  std::vector<Field::Value> form(std::size_t(points) * points);
  for (std::uint32_t a = 0; a < points; ++a) {
    for (std::uint32_t c = 0; c < points; ++c) {
      Field::Value s = 0;
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
          s = f.add(s, f.mul(coords[a][i], f.mul(b.at(i, j), coords[c][j])));
      form[std::size_t(a) * points + c] = s;
    }
  }

  Graph graph;
  graph.vertices = points * q;
  graph.adj.resize(graph.vertices);
  for (std::uint32_t a = 0; a < points; ++a)
    for (Field::Value alpha = 0; alpha < q; ++alpha) {
      auto& nb = graph.adj[a + points * alpha];
      for (std::uint32_t c = 0; c < points; ++c) {
        if (c == a) continue;
        // alpha - beta = B(a, c)  =>  beta = alpha - B(a, c)
        const Field::Value beta = f.sub(alpha, form[std::size_t(a) * points + c]);
        nb.push_back(c + points * beta);
      }
      std::sort(nb.begin(), nb.end());
    }
  return graph;
}

std::string to_adjlist(const Graph& graph) {
  std::ostringstream os;
  for (std::uint32_t u = 0; u < graph.vertices; ++u) {
    os << u << ':';
    for (auto w : graph.adj[u]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string to_dimacs(const Graph& graph) {
  std::ostringstream os;
  os << "p edge " << graph.vertices << ' ' << graph.edge_count() << '\n';
  for (std::uint32_t u = 0; u < graph.vertices; ++u)
    for (auto w : graph.adj[u])
      if (u < w) os << "e " << u + 1 << ' ' << w + 1 << '\n';
  return os.str();
}

}  // namespace rdsys
