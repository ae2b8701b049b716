#include "tnncomb/matrix.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tnn {

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
  for (size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 1) throw std::invalid_argument("index sets are 1-based");
    if (k > 0 && idx_[k] <= idx_[k - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
}

IndexSet IndexSet::parse(const std::string& text) {
  std::vector<int> v;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    v.push_back(std::stoi(tok));
  }
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

IndexSet IndexSet::complement(int n) const {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i)
    if (!contains(i)) v.push_back(i);
  return IndexSet(std::move(v));
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (size_t k = 0; k < idx_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx_[k]);
  }
  return s + "}";
}

std::vector<IndexSet> subsets_lex(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(IndexSet(cur));
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols_)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(const IndexSet& I, const IndexSet& J) const {
  if (I.empty() || J.empty()) throw std::invalid_argument("empty submatrix");
  if (I[I.size() - 1] > rows_ || J[J.size() - 1] > cols_)
    throw std::invalid_argument("submatrix index out of range");
  Matrix s(I.size(), J.size());
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < J.size(); ++j) s(i, j) = (*this)(I[i] - 1, J[j] - 1);
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
  return c;
}

Rat det(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  Matrix w = m;
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (w(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(w(pivot, j), w(col, j));
      d = -d;
    }
    d *= w(col, col);
    Rat inv = Rat(1) / w(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (w(r, col) == 0) continue;
      Rat f = w(r, col) * inv;
      for (int j = col; j < n; ++j) w(r, j) -= f * w(col, j);
    }
  }
  return d;
}

Rat minor_det(const Matrix& m, const IndexSet& I, const IndexSet& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor needs |I| = |J|");
  if (I.empty()) return Rat(1);
  if (I[I.size() - 1] > m.rows() || J[J.size() - 1] > m.cols())
    throw std::invalid_argument("minor index out of range");
  return det(m.submatrix(I, J));
}

namespace {

MinorScan scan_minors(const Matrix& m, int size_limit, bool strict) {
  if (std::max(m.rows(), m.cols()) > size_limit)
    throw guard_error("matrix exceeds exhaustive minor scan limit (" +
                      std::to_string(size_limit) + ")");
  MinorScan r;
  int kmax = std::min(m.rows(), m.cols());
  for (int k = 1; k <= kmax; ++k) {
    auto rows = subsets_lex(m.rows(), k);
    auto cols = subsets_lex(m.cols(), k);
    for (const auto& I : rows)
      for (const auto& J : cols) {
        ++r.pairs_checked;
        Rat v = det(m.submatrix(I, J));
        if ((strict && sgn(v) <= 0) || (!strict && sgn(v) < 0)) {
          r.ok = false;
          r.I = I;
          r.J = J;
          r.value = v;
          return r;
        }
      }
  }
  return r;
}

}  // namespace

MinorScan is_totally_nonnegative(const Matrix& m, int size_limit) {
  return scan_minors(m, size_limit, /*strict=*/false);
}

MinorScan is_totally_positive(const Matrix& m, int size_limit) {
  return scan_minors(m, size_limit, /*strict=*/true);
}

Matrix exterior_power(const Matrix& m, int k) {
  if (!m.square()) throw std::invalid_argument("exterior power of non-square matrix");
  int n = m.rows();
  if (k < 1 || k > n) throw std::invalid_argument("exterior power order out of range");
  auto subs = subsets_lex(n, k);
  int d = static_cast<int>(subs.size());
  Matrix w(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w(i, j) = det(m.submatrix(subs[static_cast<size_t>(i)], subs[static_cast<size_t>(j)]));
  return w;
}

Matrix elementary_matrix(int n, const ElementaryFactor& f) {
  if (f.j < 1 || f.j + 1 > n) throw std::invalid_argument("elementary factor index out of range");
  Matrix m = Matrix::identity(n);
  if (f.lower)
    m(f.j, f.j - 1) = f.c;  // entry (j+1, j), 1-based
  else
    m(f.j - 1, f.j) = f.c;  // entry (j, j+1), 1-based
  return m;
}

Matrix diagonal_matrix(const std::vector<Rat>& entries) {
  Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  return m;
}

Matrix NevilleFactorization::product() const {
  Matrix acc = Matrix::identity(n);
  for (const auto& f : lowers) acc = acc * elementary_matrix(n, f);
  acc = acc * diagonal_matrix(diag);
  for (const auto& f : uppers) acc = acc * elementary_matrix(n, f);
  return acc;
}

namespace {

// Eliminates below the diagonal with adjacent-row operations, bottom-up in
// each column. Appends the inverse factors (I + c E_{i,i-1}) in product
// order. Throws when the matrix cannot be a nonsingular TNN matrix.
void neville_lower_pass(Matrix& w, std::vector<ElementaryFactor>& factors) {
  int n = w.rows();
  for (int col = 0; col < n - 1; ++col) {
    for (int row = n - 1; row > col; --row) {
      const Rat& entry = w(row, col);
      if (entry == 0) continue;
      const Rat& above = w(row - 1, col);
      if (above == 0)
        throw std::domain_error(
            "matrix is singular or not totally nonnegative (zero above a nonzero entry)");
      Rat c = entry / above;
      if (sgn(c) < 0)
        throw std::domain_error("matrix is not totally nonnegative (negative elimination parameter)");
      for (int j = col; j < n; ++j) w(row, j) -= c * w(row - 1, j);
      factors.push_back(ElementaryFactor{true, row, c});  // I + c E_{row+1,row} 1-based
    }
  }
}

}  // namespace

NevilleFactorization neville_factorize(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("factorization needs a square matrix");
  int n = m.rows();
  NevilleFactorization out;
  out.n = n;

  Matrix w = m;
  neville_lower_pass(w, out.lowers);
  // w is now upper triangular; factor its transpose the same way
  Matrix u = w.transpose();
  std::vector<ElementaryFactor> ks;
  neville_lower_pass(u, ks);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && u(i, j) != 0) throw std::domain_error("elimination left a non-diagonal residue");
    if (sgn(u(i, i)) < 0)
      throw std::domain_error("matrix is not totally nonnegative (negative pivot)");
    if (u(i, i) == 0) throw std::domain_error("matrix is singular");
    out.diag.push_back(u(i, i));
  }
  // U'^T = K_1...K_p D  =>  U' = D K_p^T ... K_1^T
  for (auto it = ks.rbegin(); it != ks.rend(); ++it)
    out.uppers.push_back(ElementaryFactor{false, it->j, it->c});
  return out;
}

Poly char_poly(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
  coeffs[static_cast<size_t>(n)] = 1;
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    Rat c = -tr / k;
    coeffs[static_cast<size_t>(n - k)] = c;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk(i, i) += c;
    mk = m * mk;
  }
  return Poly{std::move(coeffs)};
}

Matrix parse_matrix(std::istream& in) {
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw std::invalid_argument("matrix header must be 'rows cols'");
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  Matrix m(rows, cols);
  std::string tok;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!(in >> tok)) throw std::invalid_argument("matrix entries truncated");
      m(i, j) = parse_rat(tok);
    }
  return m;
}

Matrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix(is);
}

std::string matrix_to_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << rat_str(m(i, j));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tnn
