#pragma once

#include <string>
#include <vector>

#include "tnncomb/matrix.hpp"
#include "tnncomb/rational.hpp"

namespace tnn {

// Weighted acyclic network drawn in the plane with straight-line edges.
// Sources sit on the left boundary (common minimal x, s1 on top), sinks on
// the right boundary (common maximal x, t1 on top), and every edge strictly
// increases x.
struct PlanarNetwork {
  struct Vertex {
    int id;
    Rat x, y;
  };
  struct Edge {
    int from, to;
    Rat weight;
  };

  int order = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<int> sources;  // ids of s1..sn
  std::vector<int> sinks;    // ids of t1..tn
};

struct ValidationResult {
  bool ok = true;
  std::string violation;  // first violated invariant when !ok
};

ValidationResult validate(const PlanarNetwork& g);

// throws std::invalid_argument with the violation if g is invalid
void require_valid(const PlanarNetwork& g);

struct NetworkLimits {
  long path_count_cap = 1'000'000;   // per source/sink pair
  long family_enum_cap = 1'000'000;  // search steps when enumerating families
};

// entry (i,j) = total weight of s_i -> t_j paths; with unit weights this is
// the path-count matrix
Matrix weight_matrix(const PlanarNetwork& g, const NetworkLimits& limits = {});

// total weight of vertex-disjoint path families joining the k-th source of I
// to the k-th sink of J; the empty family has weight 1
Rat disjoint_family_weight(const PlanarNetwork& g, const IndexSet& I, const IndexSet& J,
                           const NetworkLimits& limits = {});

// sinks of g1 meet sources of g2; weight_matrix of the result is the product
PlanarNetwork concatenate(const PlanarNetwork& g1, const PlanarNetwork& g2);

PlanarNetwork elementary_diag_network(const std::vector<Rat>& d);
PlanarNetwork elementary_lower_network(int n, int j, const Rat& c);  // I + c E_{j+1,j}
PlanarNetwork elementary_upper_network(int n, int j, const Rat& c);  // I + c E_{j,j+1}
PlanarNetwork elementary_factor_network(int n, const ElementaryFactor& f);

// realization of an invertible totally nonnegative matrix as a concatenation
// of elementary networks
PlanarNetwork network_from_tnn(const Matrix& m);

// entry (i,j) = x_j^{i-1}, variables along columns
Matrix vandermonde_matrix(const std::vector<Rat>& xs);

// the seven-factor bidiagonal-style factorization of the 4x4 Vandermonde
// matrix, in product order; entries are the classical divided-difference
// expressions in x1..x4
std::vector<Matrix> vandermonde_explicit_factors(const std::vector<Rat>& xs);

// requires 0 <= x1 < x2 < ... (strictly)
PlanarNetwork vandermonde_network(const std::vector<Rat>& xs);

// JSON schema: {"order", "vertices":[{"id","x","y"}], "edges":[{"from","to",
// "weight"}], "sources", "sinks"}; rationals as strings
std::string network_to_json(const PlanarNetwork& g);
PlanarNetwork network_from_json(const std::string& text);

std::string network_to_dot(const PlanarNetwork& g);

}  // namespace tnn
