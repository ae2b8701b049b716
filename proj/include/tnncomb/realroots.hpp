#pragma once

#include <vector>

#include "tnncomb/matrix.hpp"
#include "tnncomb/poly.hpp"
#include "tnncomb/rational.hpp"

namespace tnn {

// Routines below work on polynomials a(z) = 1 + a_1 z + ... + a_n z^n with
// the implicit factorization a(z) = prod (1 + beta_i z). Power sums are taken
// in the beta_i.

// p_1..p_upto by the Newton recurrence from a_i = e_i(beta); requires a_0 = 1.
std::vector<Rat> power_sums_from_coeffs(const Poly& a, int upto);

// n x n Hankel matrix P with P(i,j) = p_{i+j-2}, p_0 = n = deg a
Matrix hankel_matrix(const Poly& a);

struct Certification {
  bool certified = false;
  // when not certified: the first non-positive Hankel minor, in scan order
  IndexSet I, J;
  Rat witness_value;
};

// All roots real and distinct iff the Hankel matrix is totally positive;
// requires every coefficient positive.
Certification certify_real_distinct(const Poly& a);

// m x m leading truncation of the Toeplitz matrix [a_{j-i}] (a_0 = 1,
// a_k = 0 outside 0..n)
Matrix toeplitz_truncation(const Poly& a, int m, int size_limit = 12);

struct Refutation {
  bool refuted = false;
  IndexSet I, J;  // rows/cols of the negative minor when refuted
  Rat witness_value;
};

// Searches the truncated Toeplitz matrix for a negative minor. A hit refutes
// real-rootedness; absence is inconclusive (the full criterion needs the
// infinite matrix). Requires positive coefficients and m >= deg a.
Refutation toeplitz_refute(const Poly& a, int m, int size_limit = 12);

// number of distinct real roots over (-inf, inf), exact Sturm chain
int sturm_real_root_count(const Poly& a);

// number of real roots counted with multiplicity (layers of iterated gcd)
int real_root_count_with_multiplicity(const Poly& a);

}  // namespace tnn
