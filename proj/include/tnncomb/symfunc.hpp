#pragma once

#include <map>
#include <string>
#include <vector>

#include "tnncomb/partitions.hpp"
#include "tnncomb/rational.hpp"

namespace tnn {

enum class Basis { e, h, p, m, s };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

inline constexpr int kDefaultDegreeBound = 20;

// Formal rational linear combination of basis elements b_lambda. The maps
// iterate in display order (degree descending, then lexicographically
// descending), so printing is deterministic.
class SymFn {
 public:
  using CoeffMap = std::map<Partition, Rat, PartitionDisplayLess>;

  explicit SymFn(Basis b, int degree_bound = kDefaultDegreeBound)
      : basis_(b), bound_(degree_bound) {}
  static SymFn basis_element(Basis b, const Partition& lambda,
                             int degree_bound = kDefaultDegreeBound);

  Basis basis() const { return basis_; }
  int degree_bound() const { return bound_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rat& c);

  friend SymFn operator+(const SymFn& a, const SymFn& b);
  friend SymFn operator-(const SymFn& a, const SymFn& b);
  friend SymFn operator*(const Rat& s, const SymFn& a);
  friend SymFn operator*(const SymFn& a, const SymFn& b);  // same basis
  friend bool operator==(const SymFn& a, const SymFn& b);

  std::string str() const;  // single line, e.g. "1*s[3,1] + 2*s[2,2]"

 private:
  Basis basis_;
  int bound_;
  CoeffMap coeffs_;
};

// "coef * b[parts]" per term, display order
std::vector<std::string> symfn_lines(const SymFn& f);

SymFn convert(const SymFn& f, Basis target);

using LRCoefficients = std::map<Partition, long, PartitionDisplayLess>;

// coefficients of s_lambda * s_mu in the Schur basis, by the tableau method
LRCoefficients lr_multiply(const Partition& lambda, const Partition& mu,
                           int degree_bound = kDefaultDegreeBound);

// Schur expansion of the skew function of the given shape, by counting
// standard tableaux whose rectified reading word is 1..k
SymFn skew_schur_expand(const SkewShape& shape, int degree_bound = kDefaultDegreeBound);

struct JacobiTrudi {
  std::vector<std::vector<int>> h_index;  // entry (i,j) holds h_{h_index[i][j]}
  SymFn determinant{Basis::h};            // expanded in the h basis
};

JacobiTrudi jacobi_trudi(const SkewShape& shape, int degree_bound = kDefaultDegreeBound);

// determinant of a matrix whose (i,j) entry is b_{index[i][j]} for a
// multiplicative basis element b (h or e); index < 0 means 0, index 0 means 1
SymFn symbol_determinant(const std::vector<std::vector<int>>& index, Basis b,
                         int degree_bound = kDefaultDegreeBound);

// exponent vectors -> coefficients, exponents of length n_vars
using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, Rat>;

MPoly monomial_expansion(const SymFn& f, int n_vars, long term_cap = 5'000'000);

struct SchurPositivity {
  bool positive = true;
  Partition witness;  // first negative term when !positive
  Rat coefficient;
};

SchurPositivity is_schur_positive(const SymFn& f);

// s_{(i+3,i)/(1)} * s_{(i+1)}  -  s_{(i+2,i+1)} * s_{(i)}, in the Schur basis
SymFn schur_positive_difference(int i, int degree_bound = kDefaultDegreeBound);

// expression grammar: terms like "s[3,1]*s[2,1] - 2*h[4] + s[4,1/1]",
// rational coefficients, parentheses; result in the Schur basis
SymFn parse_symfn_expr(const std::string& text, int degree_bound = kDefaultDegreeBound);

}  // namespace tnn
