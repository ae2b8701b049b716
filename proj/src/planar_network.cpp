#include "tnncomb/planar_network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tnn {

namespace {

using Vertex = PlanarNetwork::Vertex;
using Edge = PlanarNetwork::Edge;

std::map<int, int> index_by_id(const PlanarNetwork& g) {
  std::map<int, int> m;
  for (size_t k = 0; k < g.vertices.size(); ++k) m[g.vertices[k].id] = static_cast<int>(k);
  return m;
}

int orient(const Vertex& a, const Vertex& b, const Vertex& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

bool on_segment(const Vertex& a, const Vertex& b, const Vertex& c) {
  // collinear c within the closed box of ab
  if (orient(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// any contact between closed segments pq and rs
bool segments_touch(const Vertex& p, const Vertex& q, const Vertex& r, const Vertex& s) {
  int d1 = orient(r, s, p), d2 = orient(r, s, q);
  int d3 = orient(p, q, r), d4 = orient(p, q, s);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(r, s, p)) return true;
  if (d2 == 0 && on_segment(r, s, q)) return true;
  if (d3 == 0 && on_segment(p, q, r)) return true;
  if (d4 == 0 && on_segment(p, q, s)) return true;
  return false;
}

ValidationResult fail(const std::string& msg) { return ValidationResult{false, msg}; }

}  // namespace

ValidationResult validate(const PlanarNetwork& g) {
  if (g.order < 1) return fail("order must be >= 1");
  if (static_cast<int>(g.sources.size()) != g.order ||
      static_cast<int>(g.sinks.size()) != g.order)
    return fail("source/sink count must equal the order");
  if (g.vertices.empty()) return fail("no vertices");

  std::set<int> ids;
  for (const auto& v : g.vertices)
    if (!ids.insert(v.id).second) return fail("duplicate vertex id");
  for (int s : g.sources)
    if (!ids.count(s)) return fail("unknown source id");
  for (int t : g.sinks)
    if (!ids.count(t)) return fail("unknown sink id");
  {
    std::set<int> b(g.sources.begin(), g.sources.end());
    if (b.size() != g.sources.size()) return fail("repeated source id");
    for (int t : g.sinks)
      if (b.count(t)) return fail("vertex is both source and sink");
    std::set<int> bs(g.sinks.begin(), g.sinks.end());
    if (bs.size() != g.sinks.size()) return fail("repeated sink id");
  }

  auto idx = index_by_id(g);
  std::set<std::pair<int, int>> seen_edges;
  for (const auto& e : g.edges) {
    if (!ids.count(e.from) || !ids.count(e.to)) return fail("edge references unknown vertex");
    if (sgn(e.weight) < 0) return fail("negative weight");
    if (!seen_edges.insert({e.from, e.to}).second) return fail("duplicate edge");
  }

  for (size_t a = 0; a < g.vertices.size(); ++a)
    for (size_t b = a + 1; b < g.vertices.size(); ++b)
      if (g.vertices[a].x == g.vertices[b].x && g.vertices[a].y == g.vertices[b].y)
        return fail("duplicate vertex position");

  {
    std::set<int> src(g.sources.begin(), g.sources.end());
    std::set<int> snk(g.sinks.begin(), g.sinks.end());
    for (const auto& e : g.edges) {
      if (src.count(e.to)) return fail("source in-degree");
      if (snk.count(e.from)) return fail("sink out-degree");
    }
  }

  for (const auto& e : g.edges) {
    const Vertex& a = g.vertices[static_cast<size_t>(idx[e.from])];
    const Vertex& b = g.vertices[static_cast<size_t>(idx[e.to])];
    if (!(a.x < b.x)) return fail("edge x-monotonicity");
  }

  // boundary placement: sources exactly the vertices at minimal x, top-down;
  // sinks exactly the vertices at maximal x, top-down
  Rat minx = g.vertices[0].x, maxx = g.vertices[0].x;
  for (const auto& v : g.vertices) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
  }
  {
    std::set<int> src(g.sources.begin(), g.sources.end());
    std::set<int> snk(g.sinks.begin(), g.sinks.end());
    for (const auto& v : g.vertices) {
      if (v.x == minx && !src.count(v.id)) return fail("non-source vertex on the left boundary");
      if (v.x == maxx && !snk.count(v.id)) return fail("non-sink vertex on the right boundary");
    }
    for (int s : g.sources)
      if (g.vertices[static_cast<size_t>(idx[s])].x != minx)
        return fail("source off the left boundary");
    for (int t : g.sinks)
      if (g.vertices[static_cast<size_t>(idx[t])].x != maxx)
        return fail("sink off the right boundary");
  }
  for (int k = 1; k < g.order; ++k) {
    const Vertex& hi = g.vertices[static_cast<size_t>(idx.at(g.sources[static_cast<size_t>(k - 1)]))];
    const Vertex& lo = g.vertices[static_cast<size_t>(idx.at(g.sources[static_cast<size_t>(k)]))];
    if (!(hi.y > lo.y)) return fail("source ordering (s1 must be on top)");
  }
  for (int k = 1; k < g.order; ++k) {
    const Vertex& hi = g.vertices[static_cast<size_t>(idx.at(g.sinks[static_cast<size_t>(k - 1)]))];
    const Vertex& lo = g.vertices[static_cast<size_t>(idx.at(g.sinks[static_cast<size_t>(k)]))];
    if (!(hi.y > lo.y)) return fail("sink ordering (t1 must be on top)");
  }

  for (size_t a = 0; a < g.edges.size(); ++a)
    for (size_t b = a + 1; b < g.edges.size(); ++b) {
      const Edge& e1 = g.edges[a];
      const Edge& e2 = g.edges[b];
      const Vertex& p = g.vertices[static_cast<size_t>(idx[e1.from])];
      const Vertex& q = g.vertices[static_cast<size_t>(idx[e1.to])];
      const Vertex& r = g.vertices[static_cast<size_t>(idx[e2.from])];
      const Vertex& s = g.vertices[static_cast<size_t>(idx[e2.to])];
      bool share = e1.from == e2.from || e1.from == e2.to || e1.to == e2.from || e1.to == e2.to;
      if (share) continue;  // overlap through a shared endpoint is caught below
      if (segments_touch(p, q, r, s)) return fail("edge crossing");
    }

  // no vertex may sit in the interior of an edge (also rejects collinear
  // overlapping edges that share an endpoint)
  for (const auto& e : g.edges) {
    const Vertex& a = g.vertices[static_cast<size_t>(idx[e.from])];
    const Vertex& b = g.vertices[static_cast<size_t>(idx[e.to])];
    for (const auto& v : g.vertices) {
      if (v.id == e.from || v.id == e.to) continue;
      if (on_segment(a, b, v)) return fail("vertex on edge");
    }
  }

  return ValidationResult{};
}

void require_valid(const PlanarNetwork& g) {
  auto r = validate(g);
  if (!r.ok) throw std::invalid_argument("invalid planar network: " + r.violation);
}

namespace {

// vertex indices in increasing-x order; x strictly increases along edges, so
// this is a topological order
std::vector<int> topo_by_x(const PlanarNetwork& g) {
  std::vector<int> order(g.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.vertices[static_cast<size_t>(a)].x < g.vertices[static_cast<size_t>(b)].x;
  });
  return order;
}

}  // namespace

Matrix weight_matrix(const PlanarNetwork& g, const NetworkLimits& limits) {
  require_valid(g);
  auto idx = index_by_id(g);
  int n = g.order;
  size_t nv = g.vertices.size();

  std::vector<std::vector<std::pair<int, Rat>>> out(nv);  // adjacency by vertex index
  for (const auto& e : g.edges)
    out[static_cast<size_t>(idx[e.from])].push_back({idx[e.to], e.weight});

  std::vector<std::vector<Rat>> wsum(nv, std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  std::vector<std::vector<Int>> count(nv, std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int j = 0; j < n; ++j) {
    int t = idx[g.sinks[static_cast<size_t>(j)]];
    wsum[static_cast<size_t>(t)][static_cast<size_t>(j)] = 1;
    count[static_cast<size_t>(t)][static_cast<size_t>(j)] = 1;
  }

  auto order = topo_by_x(g);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (const auto& [u, w] : out[static_cast<size_t>(v)])
      for (int j = 0; j < n; ++j) {
        wsum[static_cast<size_t>(v)][static_cast<size_t>(j)] +=
            w * wsum[static_cast<size_t>(u)][static_cast<size_t>(j)];
        count[static_cast<size_t>(v)][static_cast<size_t>(j)] +=
            count[static_cast<size_t>(u)][static_cast<size_t>(j)];
      }
  }

  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    int s = idx[g.sources[static_cast<size_t>(i)]];
    for (int j = 0; j < n; ++j) {
      if (count[static_cast<size_t>(s)][static_cast<size_t>(j)] > limits.path_count_cap)
        throw guard_error("path count guard exceeded for source " + std::to_string(i + 1) +
                          ", sink " + std::to_string(j + 1));
      m(i, j) = wsum[static_cast<size_t>(s)][static_cast<size_t>(j)];
    }
  }
  return m;
}

Rat disjoint_family_weight(const PlanarNetwork& g, const IndexSet& I, const IndexSet& J,
                           const NetworkLimits& limits) {
  require_valid(g);
  if (I.size() != J.size()) throw std::invalid_argument("family needs |I| = |J|");
  if (!I.empty() && (I[I.size() - 1] > g.order || J[J.size() - 1] > g.order))
    throw std::invalid_argument("family index out of range");
  if (I.empty()) return Rat(1);

  auto idx = index_by_id(g);
  size_t nv = g.vertices.size();
  std::vector<std::vector<std::pair<int, Rat>>> out(nv);
  for (const auto& e : g.edges)
    out[static_cast<size_t>(idx[e.from])].push_back({idx[e.to], e.weight});

  int k = I.size();
  std::vector<char> used(nv, 0);
  long steps = 0;
  Rat total(0);

  // explicit depth-first enumeration over vertex-disjoint families, the i-th
  // listed source joined to the i-th listed sink
  auto step_guard = [&] {
    if (++steps > limits.family_enum_cap) throw guard_error("family enumeration guard exceeded");
  };

  std::function<void(int, int, int, const Rat&)> extend =
      [&](int pair, int v, int target, const Rat& acc) {
        step_guard();
        if (v == target) {
          if (pair + 1 == k) {
            total += acc;
            return;
          }
          int ns = idx[g.sources[static_cast<size_t>(I[pair + 1] - 1)]];
          int nt = idx[g.sinks[static_cast<size_t>(J[pair + 1] - 1)]];
          if (used[static_cast<size_t>(ns)] || used[static_cast<size_t>(nt)]) return;
          used[static_cast<size_t>(ns)] = 1;
          extend(pair + 1, ns, nt, acc);
          used[static_cast<size_t>(ns)] = 0;
          return;
        }
        for (const auto& [u, w] : out[static_cast<size_t>(v)]) {
          if (used[static_cast<size_t>(u)]) continue;
          used[static_cast<size_t>(u)] = 1;
          extend(pair, u, target, acc * w);
          used[static_cast<size_t>(u)] = 0;
        }
      };

  int s0 = idx[g.sources[static_cast<size_t>(I[0] - 1)]];
  int t0 = idx[g.sinks[static_cast<size_t>(J[0] - 1)]];
  used[static_cast<size_t>(s0)] = 1;
  extend(0, s0, t0, Rat(1));
  return total;
}

namespace {

PlanarNetwork relabel(const PlanarNetwork& g, int base) {
  std::map<int, int> to_new;
  PlanarNetwork h;
  h.order = g.order;
  for (const auto& v : g.vertices) {
    int nid = base + static_cast<int>(to_new.size());
    to_new[v.id] = nid;
    h.vertices.push_back({nid, v.x, v.y});
  }
  for (const auto& e : g.edges) h.edges.push_back({to_new[e.from], to_new[e.to], e.weight});
  for (int s : g.sources) h.sources.push_back(to_new[s]);
  for (int t : g.sinks) h.sinks.push_back(to_new[t]);
  return h;
}

void shift_x(PlanarNetwork& g, const Rat& dx) {
  for (auto& v : g.vertices) v.x += dx;
}

}  // namespace

PlanarNetwork concatenate(const PlanarNetwork& g1, const PlanarNetwork& g2) {
  if (g1.order != g2.order) throw std::invalid_argument("concatenation order mismatch");
  if (g1.vertices.empty() || g2.vertices.empty()) throw std::invalid_argument("empty network");
  int n = g1.order;

  auto idx1 = index_by_id(g1);
  auto idx2 = index_by_id(g2);
  Rat right1 = g1.vertices[0].x;
  for (const auto& v : g1.vertices) right1 = std::max(right1, v.x);
  Rat left2 = g2.vertices[0].x;
  for (const auto& v : g2.vertices) left2 = std::min(left2, v.x);

  bool levels_match = true;
  for (int i = 0; i < n; ++i) {
    const auto& t = g1.vertices[static_cast<size_t>(idx1.at(g1.sinks[static_cast<size_t>(i)]))];
    const auto& s = g2.vertices[static_cast<size_t>(idx2.at(g2.sources[static_cast<size_t>(i)]))];
    if (t.y != s.y) {
      levels_match = false;
      break;
    }
  }

  PlanarNetwork a = relabel(g1, 0);
  PlanarNetwork out;
  out.order = n;
  out.sources = a.sources;
  out.vertices = a.vertices;
  out.edges = a.edges;

  if (levels_match) {
    // identify sink i of g1 with source i of g2
    PlanarNetwork b = relabel(g2, static_cast<int>(a.vertices.size()));
    shift_x(b, right1 - left2);
    std::map<int, int> merge;  // b-source id -> a-sink id
    for (int i = 0; i < n; ++i) merge[b.sources[static_cast<size_t>(i)]] = a.sinks[static_cast<size_t>(i)];
    for (const auto& v : b.vertices)
      if (!merge.count(v.id)) out.vertices.push_back(v);
    for (const auto& e : b.edges) {
      int f = merge.count(e.from) ? merge[e.from] : e.from;
      int t = merge.count(e.to) ? merge[e.to] : e.to;
      out.edges.push_back({f, t, e.weight});
    }
    out.sinks = b.sinks;
  } else {
    // join across a fresh band with weight-1 connectors
    PlanarNetwork b = relabel(g2, static_cast<int>(a.vertices.size()));
    shift_x(b, right1 + 2 - left2);
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    for (int i = 0; i < n; ++i)
      out.edges.push_back({a.sinks[static_cast<size_t>(i)], b.sources[static_cast<size_t>(i)], Rat(1)});
    out.sinks = b.sinks;
  }
  return out;
}

PlanarNetwork elementary_diag_network(const std::vector<Rat>& d) {
  int n = static_cast<int>(d.size());
  if (n < 1) throw std::invalid_argument("diagonal network needs order >= 1");
  for (const auto& x : d)
    if (sgn(x) <= 0) throw std::invalid_argument("diagonal parameters must be positive");
  PlanarNetwork g;
  g.order = n;
  for (int i = 1; i <= n; ++i) {
    g.vertices.push_back({i, Rat(0), Rat(n - i)});
    g.vertices.push_back({n + i, Rat(3), Rat(n - i)});
    g.sources.push_back(i);
    g.sinks.push_back(n + i);
    g.edges.push_back({i, n + i, d[static_cast<size_t>(i - 1)]});
  }
  return g;
}

namespace {

// shared frame for the two slanted elementary networks: straight lines for
// all rows, with the rows j and j+1 broken at interior vertices u, v
PlanarNetwork slant_network(int n, int j, const Rat& c, bool lower) {
  if (n < 2 || j < 1 || j >= n) throw std::invalid_argument("elementary index out of range");
  if (sgn(c) < 0) throw std::invalid_argument("elementary parameter must be nonnegative");
  PlanarNetwork g;
  g.order = n;
  for (int i = 1; i <= n; ++i) {
    g.vertices.push_back({i, Rat(0), Rat(n - i)});
    g.vertices.push_back({n + i, Rat(3), Rat(n - i)});
    g.sources.push_back(i);
    g.sinks.push_back(n + i);
  }
  int u = 2 * n + 1, v = 2 * n + 2;
  Rat yj(n - j), yj1(n - j - 1);
  if (lower) {
    // u on row j+1 at x=1, v on row j at x=2, slant carries weight c upward
    g.vertices.push_back({u, Rat(1), yj1});
    g.vertices.push_back({v, Rat(2), yj});
    g.edges.push_back({j, v, Rat(1)});
    g.edges.push_back({v, n + j, Rat(1)});
    g.edges.push_back({j + 1, u, Rat(1)});
    g.edges.push_back({u, n + j + 1, Rat(1)});
    g.edges.push_back({u, v, c});
  } else {
    // u on row j at x=1, v, on row j+1 at x=2, slant goes downward
    g.vertices.push_back({u, Rat(1), yj});
    g.vertices.push_back({v, Rat(2), yj1});
    g.edges.push_back({j, u, Rat(1)});
    g.edges.push_back({u, n + j, Rat(1)});
    g.edges.push_back({j + 1, v, Rat(1)});
    g.edges.push_back({v, n + j + 1, Rat(1)});
    g.edges.push_back({u, v, c});
  }
  for (int i = 1; i <= n; ++i) {
    if (i == j || i == j + 1) continue;
    g.edges.push_back({i, n + i, Rat(1)});
  }
  return g;
}

}  // namespace

PlanarNetwork elementary_lower_network(int n, int j, const Rat& c) {
  return slant_network(n, j, c, true);
}

PlanarNetwork elementary_upper_network(int n, int j, const Rat& c) {
  return slant_network(n, j, c, false);
}

PlanarNetwork elementary_factor_network(int n, const ElementaryFactor& f) {
  return f.lower ? elementary_lower_network(n, f.j, f.c) : elementary_upper_network(n, f.j, f.c);
}

PlanarNetwork network_from_tnn(const Matrix& m) {
  NevilleFactorization f = neville_factorize(m);
  PlanarNetwork g = elementary_diag_network(f.diag);
  for (auto it = f.lowers.rbegin(); it != f.lowers.rend(); ++it)
    g = concatenate(elementary_factor_network(f.n, *it), g);
  for (const auto& u : f.uppers) g = concatenate(g, elementary_factor_network(f.n, u));
  return g;
}

Matrix vandermonde_matrix(const std::vector<Rat>& xs) {
  int n = static_cast<int>(xs.size());
  if (n < 1) throw std::invalid_argument("vandermonde needs at least one value");
  Matrix v(n, n);
  for (int j = 0; j < n; ++j) {
    Rat p(1);
    for (int i = 0; i < n; ++i) {
      v(i, j) = p;
      p *= xs[static_cast<size_t>(j)];
    }
  }
  return v;
}

std::vector<Matrix> vandermonde_explicit_factors(const std::vector<Rat>& xs) {
  if (xs.size() != 4) throw std::invalid_argument("explicit factorization is for order 4");
  const Rat &x1 = xs[0], &x2 = xs[1], &x3 = xs[2], &x4 = xs[3];
  for (int i = 1; i < 4; ++i)
    if (!(xs[static_cast<size_t>(i - 1)] < xs[static_cast<size_t>(i)]))
      throw std::invalid_argument("values must be strictly increasing");

  auto M = [&](std::vector<std::vector<Rat>> rows) { return Matrix::from_rows(rows); };
  Rat z(0), one(1);
  std::vector<Matrix> f;
  f.push_back(M({{one, z, z, z}, {x1, one, z, z}, {x1 * x1, x1, one, z}, {x1 * x1 * x1, x1 * x1, x1, one}}));
  f.push_back(M({{one, z, z, z}, {z, one, z, z}, {z, x2, one, z}, {z, x2 * x2, x2, one}}));
  f.push_back(M({{one, z, z, z}, {z, one, z, z}, {z, z, one, z}, {z, z, x3, one}}));
  f.push_back(diagonal_matrix({one, x2 - x1, (x3 - x2) * (x3 - x1), (x4 - x3) * (x4 - x2) * (x4 - x1)}));
  f.push_back(M({{one, z, z, z}, {z, one, z, z},
                 {z, z, one, (x4 - x3) * (x4 - x2) / ((x3 - x2) * (x3 - x1))}, {z, z, z, one}}));
  f.push_back(M({{one, z, z, z}, {z, one, (x3 - x2) / (x2 - x1), (x4 - x3) / (x2 - x1)},
                 {z, z, one, (x4 - x3) / (x3 - x2)}, {z, z, z, one}}));
  f.push_back(M({{one, one, one, one}, {z, one, one, one}, {z, z, one, one}, {z, z, z, one}}));
  return f;
}

PlanarNetwork vandermonde_network(const std::vector<Rat>& xs) {
  if (xs.empty()) throw std::invalid_argument("vandermonde needs at least one value");
  if (sgn(xs[0]) < 0) throw std::invalid_argument("values must be nonnegative");
  for (size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i])) throw std::invalid_argument("values must be strictly increasing");
  return network_from_tnn(vandermonde_matrix(xs));
}

std::string network_to_json(const PlanarNetwork& g) {
  nlohmann::json j;
  j["order"] = g.order;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"id", v.id}, {"x", rat_str(v.x)}, {"y", rat_str(v.y)}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"weight", rat_str(e.weight)}});
  j["sources"] = g.sources;
  j["sinks"] = g.sinks;
  return j.dump(2) + "\n";
}

namespace {

Rat json_rat(const nlohmann::json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw std::invalid_argument("rational fields must be strings or integers");
}

}  // namespace

PlanarNetwork network_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PlanarNetwork g;
  g.order = j.at("order").get<int>();
  for (const auto& v : j.at("vertices"))
    g.vertices.push_back({v.at("id").get<int>(), json_rat(v.at("x")), json_rat(v.at("y"))});
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), json_rat(e.at("weight"))});
  g.sources = j.at("sources").get<std::vector<int>>();
  g.sinks = j.at("sinks").get<std::vector<int>>();
  return g;
}

std::string network_to_dot(const PlanarNetwork& g) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=LR;\n";
  std::map<int, std::string> label;
  for (size_t i = 0; i < g.sources.size(); ++i) label[g.sources[i]] = "s" + std::to_string(i + 1);
  for (size_t i = 0; i < g.sinks.size(); ++i) label[g.sinks[i]] = "t" + std::to_string(i + 1);
  for (const auto& v : g.vertices) {
    os << "  v" << v.id;
    if (label.count(v.id))
      os << " [label=\"" << label[v.id] << "\", shape=circle]";
    else
      os << " [label=\"\", shape=point]";
    os << ";\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << rat_str(e.weight) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tnn
