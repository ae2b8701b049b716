#pragma once

#include <string>
#include <vector>

#include "tnncomb/matrix.hpp"
#include "tnncomb/rational.hpp"

namespace tnn {

// Noncrossing perfect matching on 2n boundary points: left column top-down is
// 1..n (sources), right column bottom-up is n+1..2n (so sink t_j is point
// 2n+1-j). Arcs are stored as sorted (a < b) pairs, the list sorted.
class TLDiagram {
 public:
  TLDiagram() = default;
  TLDiagram(int n, std::vector<std::pair<int, int>> arcs);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  std::string str() const;  // e.g. "(1-2)(3-6)(4-5)"

  friend bool operator==(const TLDiagram& a, const TLDiagram& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) { return a.arcs_ < b.arcs_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

// the standard basis: all noncrossing perfect matchings, Catalan(n) of them,
// in lexicographic arc order
std::vector<TLDiagram> tl_basis(int n);

// subset I of [n] together with its complement; stands for the product
// D_{I,I} D_{Ibar,Ibar} of complementary principal minors
struct Coloring {
  int n = 0;
  IndexSet I;

  Coloring() = default;
  Coloring(int n_, IndexSet I_);
  IndexSet complement() const { return I.complement(n); }
  // the side containing 1, used to identify I with its complement
  Coloring canonical() const;
  std::string str() const;  // "D{1,3}D{2}"

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.n == b.n && a.I == b.I; }
  friend bool operator<(const Coloring& a, const Coloring& b);
};

// diagrams whose arcs all join two sources of distinct colors, two sinks of
// distinct colors, or a source and a sink of the same color
std::vector<TLDiagram> tl_subset(const Coloring& c);

// walk with step i rising iff i is in I; blocks gather steps that occupy the
// same height band
std::vector<std::vector<int>> lattice_partition(const Coloring& c);

enum class Order { Less, Greater, Equal, Incomparable };
enum class Method { TL, Lattice };

std::string order_str(Order o);

// order between the minor products of c1 and c2, valid for every totally
// nonnegative matrix: subset inclusion (TL) or partition refinement (lattice)
Order compare(const Coloring& c1, const Coloring& c2, Method method = Method::TL);

struct Poset {
  int n = 0;
  std::vector<Coloring> nodes;                    // canonical representatives, sorted
  std::vector<std::pair<int, int>> relations;     // (a,b): product(a) <= product(b), a != b
  std::vector<std::pair<int, int>> cover_edges;   // transitive reduction
};

inline constexpr int kDefaultPosetBound = 8;

Poset poset(int n, Method method = Method::TL, int bound = kDefaultPosetBound);

std::string poset_to_dot(const Poset& p);
std::string poset_to_json(const Poset& p);
std::string poset_to_text(const Poset& p);

Rat minor_product(const Matrix& m, const Coloring& c);

// does product(c1) <= product(c2) hold on this matrix
bool verify_inequality_on(const Matrix& m, const Coloring& c1, const Coloring& c2);

}  // namespace tnn
