#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tnncomb/matrix.hpp"
#include "tnncomb/partitions.hpp"
#include "tnncomb/planar_network.hpp"
#include "tnncomb/rational.hpp"

namespace tnn::testing {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

// the 4x4 path matrix used throughout
inline Matrix example_path_matrix() {
  return parse_matrix_text("4 4\n5 6 3 0\n4 7 4 0\n1 4 4 2\n0 1 2 3\n");
}

// lower triangle of ones and its square
inline Matrix ones_lower_matrix() {
  return parse_matrix_text("4 4\n1 0 0 0\n1 1 0 0\n1 1 1 0\n1 1 1 1\n");
}

inline Matrix ones_lower_squared() {
  return parse_matrix_text("4 4\n1 0 0 0\n2 1 0 0\n3 2 1 0\n4 3 2 1\n");
}

// permutation-sum determinant, independent of the elimination route
inline Rat perm_det(const Matrix& m) {
  int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  Rat total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    Rat term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rat perm_minor(const Matrix& m, const IndexSet& I, const IndexSet& J) {
  if (I.empty()) return Rat(1);
  return perm_det(m.submatrix(I, J));
}

inline Rat random_nonneg_rat(std::mt19937_64& rng, int max_num = 4, int max_den = 3) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
  return rat(num(rng), den(rng));
}

inline Rat random_positive_rat(std::mt19937_64& rng, int max_num = 4, int max_den = 3) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  return rat(num(rng), den(rng));
}

inline std::vector<ElementaryFactor> random_factor_word(std::mt19937_64& rng, int n, int count) {
  std::uniform_int_distribution<int> pick(0, 1), pos(1, std::max(1, n - 1));
  std::vector<ElementaryFactor> w;
  for (int k = 0; k < count; ++k)
    w.push_back({pick(rng) == 0, pos(rng), random_nonneg_rat(rng)});
  return w;
}

// invertible totally nonnegative matrix: diagonal times elementary factors
inline Matrix random_tnn_matrix(std::mt19937_64& rng, int n, int factor_count) {
  std::vector<Rat> d;
  for (int i = 0; i < n; ++i) d.push_back(random_positive_rat(rng));
  Matrix m = diagonal_matrix(d);
  if (n >= 2)
    for (const auto& f : random_factor_word(rng, n, factor_count))
      m = m * elementary_matrix(n, f);
  return m;
}

// same distribution realized as a planar network
inline PlanarNetwork random_tnn_network(std::mt19937_64& rng, int n, int factor_count) {
  std::vector<Rat> d;
  for (int i = 0; i < n; ++i) d.push_back(random_positive_rat(rng));
  PlanarNetwork g = elementary_diag_network(d);
  if (n >= 2)
    for (const auto& f : random_factor_word(rng, n, factor_count))
      g = concatenate(g, elementary_factor_network(n, f));
  return g;
}

// layered network with random noncrossing edge sets between columns
inline PlanarNetwork random_layered_network(std::mt19937_64& rng, int n, int max_edges) {
  std::uniform_int_distribution<int> mid_cols(0, 2), col_size(1, 4);
  int middles = mid_cols(rng);
  std::vector<int> sizes{n};
  for (int c = 0; c < middles; ++c) sizes.push_back(col_size(rng));
  sizes.push_back(n);

  PlanarNetwork g;
  g.order = n;
  int next_id = 1;
  std::vector<std::vector<int>> column_ids;
  for (size_t c = 0; c < sizes.size(); ++c) {
    std::vector<int> ids;
    for (int r = 0; r < sizes[c]; ++r) {
      int id = next_id++;
      g.vertices.push_back({id, Rat(static_cast<long>(2 * c)), Rat(sizes[c] - 1 - r)});
      ids.push_back(id);
    }
    column_ids.push_back(ids);
  }
  g.sources = column_ids.front();
  g.sinks = column_ids.back();

  int budget = max_edges;
  for (size_t c = 0; c + 1 < column_ids.size(); ++c) {
    int a = sizes[c], b = sizes[c + 1];
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) candidates.push_back({i, j});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<std::pair<int, int>> chosen;
    for (const auto& cand : candidates) {
      if (budget == 0) break;
      bool ok = true;
      for (const auto& prev : chosen) {
        if (cand.first == prev.first || cand.second == prev.second) continue;
        if ((cand.first - prev.first) * (cand.second - prev.second) < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(cand);
      --budget;
      g.edges.push_back({column_ids[c][static_cast<size_t>(cand.first)],
                         column_ids[c + 1][static_cast<size_t>(cand.second)],
                         random_nonneg_rat(rng)});
    }
  }
  return g;
}

inline Matrix pascal_matrix(int n) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j > i) continue;
      // C(i,j)
      Rat c(1);
      for (int k = 0; k < j; ++k) c = c * Rat(i - k) / Rat(k + 1);
      m(i - 1, j - 1) = c;
    }
  return m;
}

// triangular right/up grid whose path matrix is [binomial(i,j)]: each source
// enters a shared staircase of take/skip stages through its own lane
inline PlanarNetwork binomial_grid_network(int n) {
  PlanarNetwork g;
  g.order = n;
  const Rat eps = rat(1, 8);
  const int C = 2;
  int next_id = 1;
  // grid vertices u(k,l), 0 <= l <= k <= n, skipping the dead end u(n,0)
  std::vector<std::vector<int>> uid(static_cast<size_t>(n) + 1,
                                    std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= k; ++l) {
      if (k == n && l == 0) continue;
      int id = next_id++;
      uid[static_cast<size_t>(k)][static_cast<size_t>(l)] = id;
      g.vertices.push_back({id, Rat(C + k), Rat(-l)});
    }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l <= k; ++l) {
      int from = uid[static_cast<size_t>(k)][static_cast<size_t>(l)];
      int flat = uid[static_cast<size_t>(k + 1)][static_cast<size_t>(l)];
      int diag = uid[static_cast<size_t>(k + 1)][static_cast<size_t>(l + 1)];
      if (flat) g.edges.push_back({from, flat, Rat(1)});
      if (diag) g.edges.push_back({from, diag, Rat(1)});
    }
  for (int j = 1; j <= n; ++j) g.sinks.push_back(uid[static_cast<size_t>(n)][static_cast<size_t>(j)]);
  for (int i = 1; i <= n; ++i) {
    Rat h(n - i + 1);
    int s = next_id++;
    g.vertices.push_back({s, Rat(0), h});
    int bend = next_id++;
    g.vertices.push_back({bend, Rat(C + n - i) - eps * h, h});
    g.sources.push_back(s);
    g.edges.push_back({s, bend, Rat(1)});
    g.edges.push_back({bend, uid[static_cast<size_t>(n - i)][0], Rat(1)});
  }
  return g;
}

}  // namespace tnn::testing
