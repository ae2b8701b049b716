#include "tnncomb/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tnn {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::m: return 'm';
    case Basis::s: return 's';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'e': return Basis::e;
    case 'h': return Basis::h;
    case 'p': return Basis::p;
    case 'm': return Basis::m;
    case 's': return Basis::s;
  }
  throw std::invalid_argument(std::string("unknown basis '") + c + "'");
}

SymFn SymFn::basis_element(Basis b, const Partition& lambda, int degree_bound) {
  SymFn f(b, degree_bound);
  f.add_term(lambda, Rat(1));
  return f;
}

Rat SymFn::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFn::add_term(const Partition& lambda, const Rat& c) {
  if (lambda.sum() > bound_)
    throw guard_error("degree bound " + std::to_string(bound_) + " exceeded by " + lambda.str());
  if (c == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(lambda, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SymFn operator+(const SymFn& a, const SymFn& b) {
  if (a.basis_ != b.basis_) throw std::invalid_argument("basis mismatch in sum");
  SymFn out(a.basis_, std::max(a.bound_, b.bound_));
  for (const auto& [l, c] : a.coeffs_) out.add_term(l, c);
  for (const auto& [l, c] : b.coeffs_) out.add_term(l, c);
  return out;
}

SymFn operator-(const SymFn& a, const SymFn& b) { return a + Rat(-1) * b; }

SymFn operator*(const Rat& s, const SymFn& a) {
  SymFn out(a.basis_, a.bound_);
  if (s == 0) return out;
  for (const auto& [l, c] : a.coeffs_) out.add_term(l, s * c);
  return out;
}

bool operator==(const SymFn& a, const SymFn& b) {
  return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.rbegin(), v.rend());
  return Partition(std::move(v));
}

}  // namespace

SymFn operator*(const SymFn& a, const SymFn& b) {
  if (a.basis_ != b.basis_) throw std::invalid_argument("basis mismatch in product");
  int bound = std::max(a.bound_, b.bound_);
  SymFn out(a.basis_, bound);
  if (a.basis_ == Basis::e || a.basis_ == Basis::h || a.basis_ == Basis::p) {
    for (const auto& [l1, c1] : a.coeffs_)
      for (const auto& [l2, c2] : b.coeffs_) out.add_term(merge_parts(l1, l2), c1 * c2);
    return out;
  }
  if (a.basis_ == Basis::s) {
    for (const auto& [l1, c1] : a.coeffs_)
      for (const auto& [l2, c2] : b.coeffs_) {
        Rat c = c1 * c2;
        for (const auto& [nu, mult] : lr_multiply(l1, l2, bound))
          out.add_term(nu, c * Rat(mult));
      }
    return out;
  }
  // monomial basis products route through the Schur basis
  SymFn prod = convert(a, Basis::s) * convert(b, Basis::s);
  return convert(prod, Basis::m);
}

std::string SymFn::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : coeffs_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    if (first && sgn(c) < 0) os << "-";
    os << rat_str(abs(c)) << "*" << basis_letter(basis_) << "[" << (l.empty() ? "" : l.str())
       << "]";
    first = false;
  }
  return os.str();
}

std::vector<std::string> symfn_lines(const SymFn& f) {
  std::vector<std::string> out;
  for (const auto& [l, c] : f.coefficients())
    out.push_back(rat_str(c) + " * " + basis_letter(f.basis()) + "[" + (l.empty() ? "" : l.str()) +
                  "]");
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson multiplication by the tableau method: semistandard
// fillings T of mu such that lambda + c(T_j) is a partition for every column
// suffix T_j; each valid T contributes s_{lambda + c(T)}.

namespace {

bool is_partition_vector(const std::vector<int>& v) {
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) return false;
    if (k > 0 && v[k] > v[k - 1]) return false;
  }
  return true;
}

std::vector<int> padded_sum(const Partition& lambda, const std::vector<int>& content) {
  size_t len = std::max(static_cast<size_t>(lambda.length()), content.size());
  std::vector<int> v(len, 0);
  for (int i = 1; i <= lambda.length(); ++i) v[static_cast<size_t>(i - 1)] = lambda.part(i);
  for (size_t k = 0; k < content.size(); ++k) v[k] += content[k];
  return v;
}

LRCoefficients lr_multiply_direct(const Partition& lambda, const Partition& mu) {
  LRCoefficients out;
  if (mu.empty()) {
    out[lambda] = 1;
    return out;
  }
  int max_entry = lambda.length() + mu.sum();
  auto tableaux = enumerate_ssyt(SkewShape(mu, Partition()), max_entry);
  for (const auto& t : tableaux) {
    bool ok = true;
    for (int j = 1; j <= mu.part(1) && ok; ++j) {
      auto cj = content(column_suffix(t, j));
      if (!is_partition_vector(padded_sum(lambda, cj))) ok = false;
    }
    if (!ok) continue;
    ++out[Partition(padded_sum(lambda, content(t)))];
  }
  return out;
}

std::mutex lr_cache_mutex;
std::map<std::pair<Partition, Partition>, LRCoefficients> lr_cache;

}  // namespace

LRCoefficients lr_multiply(const Partition& lambda, const Partition& mu, int degree_bound) {
  if (lambda.sum() + mu.sum() > degree_bound)
    throw guard_error("degree bound " + std::to_string(degree_bound) + " exceeded by s[" +
                      lambda.str() + "]*s[" + mu.str() + "]");
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  LRCoefficients result = lr_multiply_direct(lambda, mu);
  std::lock_guard<std::mutex> lock(lr_cache_mutex);
  return lr_cache.emplace(key, std::move(result)).first->second;
}

SymFn skew_schur_expand(const SkewShape& shape, int degree_bound) {
  int k = shape.cells();
  if (k > degree_bound) throw guard_error("degree bound exceeded by skew shape " + shape.str());
  SymFn out(Basis::s, degree_bound);
  std::vector<int> identity(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) identity[static_cast<size_t>(i)] = i + 1;
  for (const auto& t : enumerate_syt(shape)) {
    Tableau r = jeu_de_taquin(t);
    if (reading_word(r) == identity) out.add_term(r.shape().outer, Rat(1));
  }
  if (k == 0) out.add_term(Partition(), Rat(1));
  return out;
}

// ---------------------------------------------------------------------------
// symbolic determinants over a multiplicative basis (Jacobi-Trudi style)

namespace {

SymFn::CoeffMap det_expand(const std::vector<std::vector<int>>& index) {
  size_t k = index.size();
  // cofactor expansion along rows, memoized on the set of free columns
  std::map<unsigned, SymFn::CoeffMap> memo;
  std::function<const SymFn::CoeffMap&(unsigned)> rec =
      [&](unsigned mask) -> const SymFn::CoeffMap& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    SymFn::CoeffMap acc;
    size_t row = static_cast<size_t>(__builtin_popcount(mask));
    if (row == k) {
      acc[Partition()] = 1;
      return memo.emplace(mask, std::move(acc)).first->second;
    }
    int parity = 0;
    for (size_t col = 0; col < k; ++col) {
      if (mask & (1u << col)) continue;
      int sub = index[row][col];
      if (sub >= 0) {
        const auto& tail = rec(mask | (1u << col));
        Rat sign((parity % 2 == 0) ? 1 : -1);
        for (const auto& [l, c] : tail) {
          Partition term = sub == 0 ? l : merge_parts(l, Partition({sub}));
          auto [jt, fresh] = acc.try_emplace(term, sign * c);
          if (!fresh) {
            jt->second += sign * c;
            if (jt->second == 0) acc.erase(jt);
          }
        }
      }
      ++parity;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return rec(0);
}

}  // namespace

SymFn symbol_determinant(const std::vector<std::vector<int>>& index, Basis b, int degree_bound) {
  if (b != Basis::h && b != Basis::e)
    throw std::invalid_argument("symbolic determinants take the e or h basis");
  size_t k = index.size();
  for (const auto& row : index)
    if (row.size() != k) throw std::invalid_argument("determinant needs a square matrix");
  if (k > 24) throw guard_error("determinant size limit exceeded");
  SymFn out(b, degree_bound);
  if (k == 0) {
    out.add_term(Partition(), Rat(1));
    return out;
  }
  for (const auto& [l, c] : det_expand(index)) out.add_term(l, c);
  return out;
}

JacobiTrudi jacobi_trudi(const SkewShape& shape, int degree_bound) {
  int k = shape.outer.length();
  JacobiTrudi jt;
  jt.h_index.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      jt.h_index[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          shape.outer.part(i) - shape.inner.part(j) - i + j;
  jt.determinant = symbol_determinant(jt.h_index, Basis::h, degree_bound);
  return jt;
}

// ---------------------------------------------------------------------------
// basis conversions, all routed through the Schur basis

namespace {

// hook expansion of a single power sum
SymFn power_sum_to_schur(int k, int bound) {
  SymFn out(Basis::s, bound);
  for (int legs = 0; legs < k; ++legs) {
    std::vector<int> parts{k - legs};
    parts.insert(parts.end(), static_cast<size_t>(legs), 1);
    out.add_term(Partition(std::move(parts)), Rat(legs % 2 == 0 ? 1 : -1));
  }
  return out;
}

SymFn schur_product_of_parts(const Partition& lambda, Basis from, int bound) {
  SymFn acc = SymFn::basis_element(Basis::s, Partition(), bound);
  for (int i = 1; i <= lambda.length(); ++i) {
    int k = lambda.part(i);
    SymFn factor(Basis::s, bound);
    switch (from) {
      case Basis::e: factor.add_term(Partition(std::vector<int>(static_cast<size_t>(k), 1)), Rat(1)); break;
      case Basis::h: factor.add_term(Partition({k}), Rat(1)); break;
      case Basis::p: factor = power_sum_to_schur(k, bound); break;
      default: throw std::logic_error("not a multiplicative basis");
    }
    acc = acc * factor;
  }
  return acc;
}

// Kostka number: semistandard tableaux of straight shape lambda with content c
long kostka_count(const Partition& lambda, const Partition& content_part) {
  if (lambda.sum() != content_part.sum()) return 0;
  std::vector<int> quota(static_cast<size_t>(content_part.length()));
  for (int i = 1; i <= content_part.length(); ++i)
    quota[static_cast<size_t>(i - 1)] = content_part.part(i);
  int rows = lambda.length();
  std::vector<std::vector<int>> grid(static_cast<size_t>(rows));
  for (int r = 1; r <= rows; ++r) grid[static_cast<size_t>(r - 1)].assign(static_cast<size_t>(lambda.part(r)), 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r > rows) {
      ++count;
      return;
    }
    int nr = (c == lambda.part(r)) ? r + 1 : r;
    int nc = (c == lambda.part(r)) ? 1 : c + 1;
    int lo = 1;
    if (c > 1) lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 2)]);
    if (r > 1 && lambda.part(r - 1) >= c)
      lo = std::max(lo, grid[static_cast<size_t>(r - 2)][static_cast<size_t>(c - 1)] + 1);
    for (int v = lo; v <= static_cast<int>(quota.size()); ++v) {
      if (quota[static_cast<size_t>(v - 1)] == 0) continue;
      --quota[static_cast<size_t>(v - 1)];
      grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
      rec(nr, nc);
      ++quota[static_cast<size_t>(v - 1)];
    }
  };
  if (rows == 0) return 1;
  rec(1, 1);
  return count;
}

std::mutex kostka_mutex;
std::map<std::pair<Partition, Partition>, long> kostka_cache;

long kostka(const Partition& lambda, const Partition& mu) {
  auto key = std::make_pair(lambda, mu);
  std::lock_guard<std::mutex> lock(kostka_mutex);
  auto it = kostka_cache.find(key);
  if (it != kostka_cache.end()) return it->second;
  long v = kostka_count(lambda, mu);
  kostka_cache.emplace(key, v);
  return v;
}

// expansion of m_lambda in the Schur basis by inverting the Kostka matrix
// degree by degree; partitions ordered lexicographically descending, which
// refines dominance
std::mutex m_to_s_mutex;
std::map<Partition, SymFn::CoeffMap> m_to_s_cache;

const SymFn::CoeffMap& m_to_schur(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lock(m_to_s_mutex);
    auto it = m_to_s_cache.find(lambda);
    if (it != m_to_s_cache.end()) return it->second;
  }
  int n = lambda.sum();
  auto parts = partitions_of(n);
  std::sort(parts.begin(), parts.end(),
            [](const Partition& a, const Partition& b) { return b < a; });
  // back substitution from the lex-smallest partition upward
  std::map<Partition, SymFn::CoeffMap> rows;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& nu = *it;
    SymFn::CoeffMap row;
    row[nu] = 1;
    // s_nu = m_nu + sum over mu strictly dominated by nu of K[nu][mu] m_mu
    for (auto jt = std::find(parts.begin(), parts.end(), nu) + 1; jt != parts.end(); ++jt) {
      long kk = kostka(nu, *jt);
      if (kk == 0) continue;
      const auto& sub = rows.at(*jt);
      for (const auto& [p, c] : sub) {
        auto [st, fresh] = row.try_emplace(p, Rat(-kk) * c);
        if (!fresh) {
          st->second += Rat(-kk) * c;
          if (st->second == 0) row.erase(st);
        }
      }
    }
    rows.emplace(nu, std::move(row));
  }
  std::lock_guard<std::mutex> lock(m_to_s_mutex);
  for (auto& [p, r] : rows) m_to_s_cache.emplace(p, std::move(r));
  return m_to_s_cache.at(lambda);
}

// ---- Murnaghan-Nakayama characters via first-column hook encodings ----

std::vector<int> beta_set(const Partition& lambda) {
  int len = lambda.length();
  std::vector<int> b(static_cast<size_t>(len));
  for (int i = 1; i <= len; ++i) b[static_cast<size_t>(i - 1)] = lambda.part(i) + len - i;
  return b;  // strictly decreasing
}

Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) {
    int p = b[static_cast<size_t>(i - 1)] - (len - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

std::mutex mn_mutex;
std::map<std::pair<Partition, Partition>, long> mn_cache;

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum()) throw std::logic_error("character size mismatch");
  if (lambda.sum() == 0) return 1;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_cache.find(key);
    if (it != mn_cache.end()) return it->second;
  }
  int k = mu.part(1);
  std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
  Partition rest(std::move(rest_parts));
  auto beta = beta_set(lambda);
  long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b < k) continue;
    int nb = b - k;
    bool clash = false;
    int between = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == nb) clash = true;
      if (beta[j] > nb && beta[j] < b) ++between;
    }
    if (clash) continue;
    auto nbeta = beta;
    nbeta[i] = nb;
    long sub = mn_character(partition_from_beta(std::move(nbeta)), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(mn_mutex);
  mn_cache.emplace(key, total);
  return total;
}

Rat z_mu(const Partition& mu) {
  Rat z(1);
  int run = 0;
  for (int i = 1; i <= mu.length(); ++i) {
    z *= mu.part(i);
    ++run;
    if (mu.part(i + 1) != mu.part(i)) {
      for (int f = 2; f <= run; ++f) z *= f;
      run = 0;
    }
  }
  return z;
}

SymFn schur_to_basis(const Partition& lambda, Basis target, int bound) {
  switch (target) {
    case Basis::s:
      return SymFn::basis_element(Basis::s, lambda, bound);
    case Basis::h:
      return jacobi_trudi(SkewShape(lambda, Partition()), bound).determinant;
    case Basis::e: {
      Partition conj = lambda.conjugate();
      int k = conj.length();
      std::vector<std::vector<int>> idx(static_cast<size_t>(k),
                                        std::vector<int>(static_cast<size_t>(k)));
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
          idx[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = conj.part(i) - i + j;
      return symbol_determinant(idx, Basis::e, bound);
    }
    case Basis::p: {
      SymFn out(Basis::p, bound);
      for (const auto& mu : partitions_of(lambda.sum())) {
        long chi = mn_character(lambda, mu);
        if (chi != 0) out.add_term(mu, Rat(chi) / z_mu(mu));
      }
      return out;
    }
    case Basis::m: {
      SymFn out(Basis::m, bound);
      for (const auto& mu : partitions_of(lambda.sum())) {
        long kk = kostka(lambda, mu);
        if (kk != 0) out.add_term(mu, Rat(kk));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

SymFn to_schur(const SymFn& f) {
  int bound = f.degree_bound();
  SymFn out(Basis::s, bound);
  switch (f.basis()) {
    case Basis::s:
      return f;
    case Basis::e:
    case Basis::h:
    case Basis::p:
      for (const auto& [l, c] : f.coefficients())
        out = out + c * schur_product_of_parts(l, f.basis(), bound);
      return out;
    case Basis::m:
      for (const auto& [l, c] : f.coefficients())
        for (const auto& [p, cc] : m_to_schur(l)) out.add_term(p, c * cc);
      return out;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SymFn convert(const SymFn& f, Basis target) {
  if (f.basis() == target) return f;
  SymFn s = to_schur(f);
  if (target == Basis::s) return s;
  SymFn out(target, f.degree_bound());
  for (const auto& [l, c] : s.coefficients())
    out = out + c * schur_to_basis(l, target, f.degree_bound());
  return out;
}

MPoly monomial_expansion(const SymFn& f, int n_vars, long term_cap) {
  if (n_vars < 1) throw std::invalid_argument("need at least one variable");

  auto guard = [&](const MPoly& p) {
    if (static_cast<long>(p.size()) > term_cap) throw guard_error("monomial term cap exceeded");
  };

  auto mul = [&](const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Monomial e(ea);
        for (int i = 0; i < n_vars; ++i) e[static_cast<size_t>(i)] += eb[static_cast<size_t>(i)];
        out[e] += ca * cb;
        if (out[e] == 0) out.erase(e);
      }
    guard(out);
    return out;
  };

  Monomial zero(static_cast<size_t>(n_vars), 0);

  auto single = [&](Basis b, int k) {
    MPoly out;
    switch (b) {
      case Basis::e: {
        // DP over variables, degrees descending
        std::vector<MPoly> layer(static_cast<size_t>(k) + 1);
        layer[0][zero] = 1;
        for (int v = 0; v < n_vars; ++v)
          for (int d = std::min(k, v + 1); d >= 1; --d)
            for (const auto& [e, c] : layer[static_cast<size_t>(d - 1)]) {
              Monomial m(e);
              ++m[static_cast<size_t>(v)];
              layer[static_cast<size_t>(d)][m] += c;
            }
        out = layer[static_cast<size_t>(k)];
        break;
      }
      case Basis::h: {
        // degrees ascending within each variable allows repeated picks
        std::vector<MPoly> layer(static_cast<size_t>(k) + 1);
        layer[0][zero] = 1;
        for (int v = 0; v < n_vars; ++v)
          for (int d = 1; d <= k; ++d)
            for (const auto& [e, c] : layer[static_cast<size_t>(d - 1)]) {
              Monomial m(e);
              ++m[static_cast<size_t>(v)];
              layer[static_cast<size_t>(d)][m] += c;
            }
        out = layer[static_cast<size_t>(k)];
        break;
      }
      case Basis::p:
        for (int v = 0; v < n_vars; ++v) {
          Monomial m(zero);
          m[static_cast<size_t>(v)] = k;
          out[m] += 1;
        }
        break;
      default:
        throw std::logic_error("single-part expansion is for e/h/p");
    }
    guard(out);
    return out;
  };

  MPoly total;
  for (const auto& [l, coef] : f.coefficients()) {
    MPoly term;
    term[zero] = 1;
    switch (f.basis()) {
      case Basis::e:
      case Basis::h:
      case Basis::p:
        for (int i = 1; i <= l.length(); ++i) term = mul(term, single(f.basis(), l.part(i)));
        break;
      case Basis::s: {
        MPoly acc;
        if (l.length() > n_vars) {
          term.clear();
          break;
        }
        for (const auto& t : enumerate_ssyt(SkewShape(l, Partition()), n_vars)) {
          auto c = content(t);
          Monomial m(zero);
          for (size_t i = 0; i < c.size(); ++i) m[i] = c[i];
          acc[m] += 1;
        }
        term = acc;
        break;
      }
      case Basis::m: {
        MPoly acc;
        if (l.length() > n_vars) {
          term.clear();
          break;
        }
        Monomial base(zero);
        for (int i = 1; i <= l.length(); ++i) base[static_cast<size_t>(i - 1)] = l.part(i);
        std::sort(base.begin(), base.end());
        do {
          acc[base] += 1;
        } while (std::next_permutation(base.begin(), base.end()));
        term = acc;
        break;
      }
    }
    for (const auto& [e, c] : term) {
      total[e] += coef * c;
      if (total[e] == 0) total.erase(e);
    }
    guard(total);
  }
  return total;
}

SchurPositivity is_schur_positive(const SymFn& f) {
  SymFn s = convert(f, Basis::s);
  SchurPositivity out;
  for (const auto& [l, c] : s.coefficients())
    if (sgn(c) < 0) {
      out.positive = false;
      out.witness = l;
      out.coefficient = c;
      return out;
    }
  return out;
}

SymFn schur_positive_difference(int i, int degree_bound) {
  if (i < 0) throw std::invalid_argument("index must be nonnegative");
  SkewShape skew(Partition({i + 3, i}), Partition({1}));
  SymFn left = skew_schur_expand(skew, degree_bound) *
               SymFn::basis_element(Basis::s, Partition({i + 1}), degree_bound);
  SymFn right = SymFn::basis_element(Basis::s, Partition({i + 2, i + 1}), degree_bound) *
                SymFn::basis_element(Basis::s, i == 0 ? Partition() : Partition({i}), degree_bound);
  return left - right;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int bound;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("expression error at position " + std::to_string(pos) + ": " + msg);
  }

  SymFn parse_expr() {
    SymFn acc = parse_term();
    while (true) {
      skip();
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }

  SymFn parse_term() {
    SymFn acc = parse_factor();
    while (true) {
      skip();
      if (eat('*'))
        acc = acc * parse_factor();
      else
        break;
    }
    return acc;
  }

  SymFn parse_factor() {
    skip();
    if (pos >= text.size()) fail("unexpected end");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      SymFn inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return Rat(-1) * parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      Rat r = parse_rat(text.substr(start, pos - start));
      SymFn f(Basis::s, bound);
      f.add_term(Partition(), r);
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Basis b = basis_from_letter(c);
      ++pos;
      if (!eat('[')) fail("expected '[' after basis letter");
      size_t close = text.find(']', pos);
      if (close == std::string::npos) fail("expected ']'");
      std::string inside = text.substr(pos, close - pos);
      pos = close + 1;
      auto slash = inside.find('/');
      if (slash != std::string::npos) {
        if (b != Basis::s) fail("skew shapes need the s basis");
        return skew_schur_expand(SkewShape::parse(inside), bound);
      }
      return convert(SymFn::basis_element(b, Partition::parse(inside), bound), Basis::s);
    }
    fail("unexpected character");
  }
};

}  // namespace

SymFn parse_symfn_expr(const std::string& text, int degree_bound) {
  Parser p{text, 0, degree_bound};
  SymFn out = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace tnn
