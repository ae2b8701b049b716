#include <doctest.h>

#include <functional>
#include <map>

#include "support/helpers.hpp"
#include "tnncomb/minor_ineq.hpp"
#include "tnncomb/planar_network.hpp"

using namespace tnn;
using namespace tnn::testing;

namespace {

Coloring col(int n, const std::string& text) { return Coloring(n, IndexSet::parse(text)); }

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// total weight of path families (pi_1..pi_n, pi_i from s_i to t_i) in which
// same-color paths are pairwise vertex-disjoint
Rat two_colored_family_weight(const PlanarNetwork& g, const Coloring& coloring) {
  std::map<int, int> idx;
  for (size_t k = 0; k < g.vertices.size(); ++k) idx[g.vertices[k].id] = static_cast<int>(k);
  std::vector<std::vector<std::pair<int, Rat>>> out(g.vertices.size());
  for (const auto& e : g.edges) out[static_cast<size_t>(idx[e.from])].push_back({idx[e.to], e.weight});

  // all paths s_i -> t_i as vertex lists
  auto paths_for = [&](int i) {
    std::vector<std::pair<std::vector<int>, Rat>> paths;
    std::vector<int> cur;
    std::function<void(int, const Rat&)> dfs = [&](int v, const Rat& acc) {
      cur.push_back(v);
      if (v == idx[g.sinks[static_cast<size_t>(i - 1)]]) {
        paths.push_back({cur, acc});
      } else {
        for (const auto& [u, w] : out[static_cast<size_t>(v)]) dfs(u, acc * w);
      }
      cur.pop_back();
    };
    dfs(idx[g.sources[static_cast<size_t>(i - 1)]], Rat(1));
    return paths;
  };

  std::vector<std::vector<std::pair<std::vector<int>, Rat>>> all;
  for (int i = 1; i <= g.order; ++i) all.push_back(paths_for(i));

  Rat total(0);
  std::vector<const std::vector<int>*> picked;
  std::function<void(int, const Rat&)> rec = [&](int i, const Rat& acc) {
    if (i == g.order) {
      total += acc;
      return;
    }
    bool red = coloring.I.contains(i + 1);
    for (const auto& [verts, w] : all[static_cast<size_t>(i)]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (coloring.I.contains(j + 1) != red) continue;
        for (int v : verts)
          if (std::find(picked[static_cast<size_t>(j)]->begin(), picked[static_cast<size_t>(j)]->end(),
                        v) != picked[static_cast<size_t>(j)]->end()) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      picked.push_back(&verts);
      rec(i + 1, acc * w);
      picked.pop_back();
    }
  };
  rec(0, Rat(1));
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("minor_ineq");

TEST_CASE("standard basis sizes are catalan numbers") {
  CHECK(tl_basis(1).size() == 1);
  CHECK(tl_basis(3).size() == 5);
  CHECK(tl_basis(4).size() == 14);
  for (int n = 1; n <= 10; ++n) CHECK(tl_basis(n).size() == static_cast<size_t>(catalan(n)));
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(TLDiagram(2, {{1, 3}, {2, 4}}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(TLDiagram(2, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK(TLDiagram(2, {{1, 4}, {2, 3}}).str() == "(1-4)(2-3)");
}

TEST_CASE("admissible diagram subsets") {
  auto all = tl_subset(col(3, "2"));
  CHECK(all.size() == 5);

  auto bottom = tl_subset(col(3, "1,2,3"));
  REQUIRE(bottom.size() == 1);
  CHECK(bottom[0] == TLDiagram(3, {{1, 6}, {2, 5}, {3, 4}}));  // identity wiring

  CHECK(tl_subset(col(3, "1")).size() == 2);
  CHECK(tl_subset(col(3, "3")).size() == 2);
  CHECK(tl_subset(col(3, "1,3")) == tl_subset(col(3, "2")));

  auto single = tl_subset(col(1, "1"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == TLDiagram(1, {{1, 2}}));
}

TEST_CASE("complement symmetry") {
  for (int n = 1; n <= 5; ++n)
    for (long mask = 0; mask < (1L << n); ++mask) {
      std::vector<int> v;
      for (int i = 1; i <= n; ++i)
        if (mask & (1L << (i - 1))) v.push_back(i);
      Coloring c(n, IndexSet(v));
      Coloring cc(n, c.complement());
      CHECK(tl_subset(c) == tl_subset(cc));
      CHECK(lattice_partition(c) == lattice_partition(cc));
    }
}

TEST_CASE("lattice partitions group steps by height band") {
  using Blocks = std::vector<std::vector<int>>;
  CHECK(lattice_partition(col(2, "1,2")) == Blocks{{1}, {2}});
  CHECK(lattice_partition(col(2, "1")) == Blocks{{1, 2}});
  CHECK(lattice_partition(col(3, "1,3")) == Blocks{{1, 2, 3}});
  CHECK(lattice_partition(col(3, "2")) == Blocks{{1, 2, 3}});
  CHECK(lattice_partition(col(3, "1,2")) == Blocks{{1}, {2, 3}});
  CHECK(lattice_partition(col(3, "1")) == Blocks{{1, 2}, {3}});
  CHECK(lattice_partition(col(3, "1,2,3")) == Blocks{{1}, {2}, {3}});
}

TEST_CASE("pairwise comparisons") {
  // D{1}D{23} <= D{13}D{2}
  CHECK(compare(col(3, "1"), col(3, "2")) == Order::Less);
  CHECK(compare(col(3, "1"), col(3, "2"), Method::Lattice) == Order::Less);
  CHECK(compare(col(3, "2"), col(3, "1")) == Order::Greater);
  CHECK(compare(col(3, "1,2"), col(3, "1,2")) == Order::Equal);
  CHECK(compare(col(3, "1,2"), col(3, "1")) == Order::Incomparable);
  CHECK(compare(col(3, "1,2"), col(3, "1"), Method::Lattice) == Order::Incomparable);
  CHECK_THROWS_AS(compare(col(2, "1"), col(3, "1")), std::invalid_argument);
}

TEST_CASE("poset structure for order three") {
  Poset p = poset(3);
  REQUIRE(p.nodes.size() == 4);
  CHECK(p.nodes[0].I == IndexSet({1}));
  CHECK(p.nodes[1].I == IndexSet({1, 2}));
  CHECK(p.nodes[2].I == IndexSet({1, 3}));
  CHECK(p.nodes[3].I == IndexSet({1, 2, 3}));
  CHECK(p.relations.size() == 5);
  CHECK(p.cover_edges.size() == 4);

  auto has_rel = [&](int a, int b) {
    return std::find(p.relations.begin(), p.relations.end(), std::make_pair(a, b)) !=
           p.relations.end();
  };
  CHECK(has_rel(3, 0));  // D{123}D{} below everything
  CHECK(has_rel(3, 1));
  CHECK(has_rel(3, 2));
  CHECK(has_rel(0, 2));  // the printed inequality
  CHECK(has_rel(1, 2));
}

TEST_CASE("poset sizes for small orders") {
  CHECK(poset(1).nodes.size() == 1);
  CHECK(poset(1).relations.empty());
  Poset p2 = poset(2);
  CHECK(p2.nodes.size() == 2);
  REQUIRE(p2.relations.size() == 1);
  CHECK(p2.nodes[static_cast<size_t>(p2.relations[0].first)].I == IndexSet({1, 2}));
  CHECK_THROWS_AS(poset(9), guard_error);
}

TEST_CASE("both criteria give the same poset") {
  for (int n = 1; n <= 5; ++n) {
    Poset a = poset(n, Method::TL);
    Poset b = poset(n, Method::Lattice);
    CHECK(a.nodes.size() == b.nodes.size());
    CHECK(a.relations == b.relations);
  }
}

TEST_CASE("poset exports") {
  Poset p = poset(3);
  std::string dot = poset_to_dot(p);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("D{1,3}D{2}") != std::string::npos);
  std::string json = poset_to_json(p);
  CHECK(json.find("\"n\": 3") != std::string::npos);
  CHECK(json.find("\"lhs\": [1,2,3]") != std::string::npos);
  std::string text = poset_to_text(p);
  CHECK(text.find("D{1}D{2,3} <= D{1,3}D{2}") != std::string::npos);
}

TEST_CASE("inequalities hold on totally nonnegative matrices") {
  // leading principal 3x3 block of the running example
  Matrix m = parse_matrix_text("3 3\n5 6 3\n4 7 4\n1 4 4\n");
  REQUIRE(is_totally_nonnegative(m).ok);
  CHECK(verify_inequality_on(m, col(3, "1"), col(3, "2")));
  CHECK(minor_product(m, col(3, "1")) == Rat(60));
  CHECK(minor_product(m, col(3, "2")) == Rat(119));

  Matrix id = Matrix::identity(3);
  for (const auto& [a, b] : poset(3).relations)
    CHECK(verify_inequality_on(id, poset(3).nodes[static_cast<size_t>(a)],
                               poset(3).nodes[static_cast<size_t>(b)]));

  auto rng = make_rng(51);
  Poset p3 = poset(3);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix t = random_tnn_matrix(rng, 3, 4);
    for (const auto& [a, b] : p3.relations)
      CHECK(verify_inequality_on(t, p3.nodes[static_cast<size_t>(a)],
                                 p3.nodes[static_cast<size_t>(b)]));
  }
}

TEST_CASE("complementary minor products count two-colored families") {
  auto rng = make_rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    PlanarNetwork g = random_tnn_network(rng, n, 2);
    Matrix w = weight_matrix(g);
    for (long mask = 0; mask < (1L << n); ++mask) {
      std::vector<int> v;
      for (int i = 1; i <= n; ++i)
        if (mask & (1L << (i - 1))) v.push_back(i);
      Coloring c(n, IndexSet(v));
      CHECK(minor_product(w, c) == two_colored_family_weight(g, c));
    }
  }
}

TEST_SUITE_END();
