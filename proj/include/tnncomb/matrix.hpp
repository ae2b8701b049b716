#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tnncomb/poly.hpp"
#include "tnncomb/rational.hpp"

namespace tnn {

// Sorted set of distinct 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);
  static IndexSet parse(const std::string& text);  // "1,2,3"; "" is empty

  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  int operator[](int k) const { return idx_[static_cast<size_t>(k)]; }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int i) const;
  IndexSet complement(int n) const;  // [n] minus this
  std::string str() const;           // "{1,3}"

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.idx_ == b.idx_; }
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

 private:
  std::vector<int> idx_;
};

// All k-subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_lex(int n, int k);

// Dense matrix of rationals, row-major. operator() is 0-based; the IndexSet
// operations below are 1-based to match the minor conventions.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Rat det(const Matrix& m);

// (I,J) minor; the empty minor is 1.
Rat minor_det(const Matrix& m, const IndexSet& I, const IndexSet& J);

// Result of an exhaustive minor scan. When ok is false, (I,J) is the first
// offending pair in (size, I-lex, J-lex) order and value its minor.
struct MinorScan {
  bool ok = true;
  IndexSet I, J;
  Rat value;
  long pairs_checked = 0;  // nonempty pairs examined
};

inline constexpr int kDefaultMinorScanLimit = 8;

MinorScan is_totally_nonnegative(const Matrix& m, int size_limit = kDefaultMinorScanLimit);
MinorScan is_totally_positive(const Matrix& m, int size_limit = kDefaultMinorScanLimit);

// binom(n,k) x binom(n,k) matrix of k-minors, subsets in lexicographic order
Matrix exterior_power(const Matrix& m, int k);

// I + c*E_{j+1,j} (lower) or I + c*E_{j,j+1} (upper)
struct ElementaryFactor {
  bool lower;
  int j;  // 1-based
  Rat c;
};

Matrix elementary_matrix(int n, const ElementaryFactor& f);
Matrix diagonal_matrix(const std::vector<Rat>& entries);

struct NevilleFactorization {
  int n = 0;
  std::vector<ElementaryFactor> lowers;  // product order, left to right
  std::vector<Rat> diag;
  std::vector<ElementaryFactor> uppers;  // product order, left to right

  Matrix product() const;
};

// Bidiagonal factorization M = L_1...L_m D U_1...U_p of an invertible totally
// nonnegative matrix by adjacent-row (then adjacent-column) elimination.
// Throws std::domain_error if M is singular or a negative parameter arises.
NevilleFactorization neville_factorize(const Matrix& m);

// det(zI - M), monic, constant coefficient first
Poly char_poly(const Matrix& m);

// text format: "rows cols" header, then row-major rationals
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const Matrix& m);

}  // namespace tnn
