#include "tnncomb/realroots.hpp"

#include <stdexcept>

namespace tnn {

namespace {

void require_normalized(const Poly& a) {
  if (a.is_zero() || a[0] != 1)
    throw std::invalid_argument("polynomial must be normalized with constant term 1");
}

void require_positive_coeffs(const Poly& a) {
  require_normalized(a);
  for (int k = 0; k <= a.degree(); ++k)
    if (sgn(a[k]) <= 0) throw std::invalid_argument("polynomial must have positive coefficients");
}

}  // namespace

std::vector<Rat> power_sums_from_coeffs(const Poly& a, int upto) {
  require_normalized(a);
  if (upto < 1) throw std::invalid_argument("power sum count must be >= 1");
  int n = a.degree();
  auto e = [&](int i) -> Rat { return (i >= 0 && i <= n) ? a[i] : Rat(0); };
  // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  std::vector<Rat> p(static_cast<size_t>(upto) + 1, Rat(0));  // p[0] unused
  for (int k = 1; k <= upto; ++k) {
    Rat acc = Rat((k % 2 == 1) ? k : -k) * e(k);
    for (int i = 1; i < k; ++i) {
      Rat term = e(i) * p[static_cast<size_t>(k - i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    p[static_cast<size_t>(k)] = acc;
  }
  return std::vector<Rat>(p.begin() + 1, p.end());
}

Matrix hankel_matrix(const Poly& a) {
  require_normalized(a);
  int n = a.degree();
  if (n < 1) throw std::invalid_argument("hankel matrix needs degree >= 1");
  Matrix p(n, n);
  if (n == 1) {
    p(0, 0) = 1;  // p_0 = n
    return p;
  }
  auto sums = power_sums_from_coeffs(a, 2 * n - 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = i + j;
      p(i, j) = (k == 0) ? Rat(n) : sums[static_cast<size_t>(k - 1)];
    }
  return p;
}

Certification certify_real_distinct(const Poly& a) {
  require_positive_coeffs(a);
  Matrix p = hankel_matrix(a);
  MinorScan scan = is_totally_positive(p);
  Certification c;
  c.certified = scan.ok;
  if (!scan.ok) {
    c.I = scan.I;
    c.J = scan.J;
    c.witness_value = scan.value;
  }
  return c;
}

Matrix toeplitz_truncation(const Poly& a, int m, int size_limit) {
  require_normalized(a);
  if (m < a.degree()) throw std::invalid_argument("truncation size must be >= degree");
  if (m > size_limit)
    throw guard_error("toeplitz truncation exceeds size limit (" + std::to_string(size_limit) + ")");
  Matrix t(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = j - i;
      t(i, j) = (k >= 0 && k <= a.degree()) ? a[k] : Rat(0);
    }
  return t;
}

Refutation toeplitz_refute(const Poly& a, int m, int size_limit) {
  require_positive_coeffs(a);
  Matrix t = toeplitz_truncation(a, m, size_limit);
  MinorScan scan = is_totally_nonnegative(t, size_limit);
  Refutation r;
  if (!scan.ok) {
    r.refuted = true;
    r.I = scan.I;
    r.J = scan.J;
    r.witness_value = scan.value;
  }
  return r;
}

namespace {

// positive rescale to a primitive integer coefficient vector
void make_primitive(Poly& f) {
  if (f.is_zero()) return;
  Int den(1);
  for (int k = 0; k <= f.degree(); ++k) {
    Int d = f[k].get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Rat> c(f.coeffs());
  Int content(0);
  for (auto& x : c) {
    x *= Rat(den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
  }
  if (content > 1)
    for (auto& x : c) x /= Rat(content);
  f = Poly{std::move(c)};
}

int sign_at_plus_inf(const Poly& f) { return sgn(f.leading()); }

int sign_at_minus_inf(const Poly& f) {
  int s = sgn(f.leading());
  return (f.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_real_root_count(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("sturm count of the zero polynomial");
  if (a.degree() == 0) return 0;
  std::vector<Poly> chain;
  Poly f0 = a, f1 = a.derivative();
  make_primitive(f0);
  make_primitive(f1);
  chain.push_back(f0);
  chain.push_back(f1);
  while (!chain.back().is_zero()) {
    const Poly& prev = chain[chain.size() - 2];
    Poly r = Rat(-1) * divmod(prev, chain.back()).second;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  std::vector<int> at_minus, at_plus;
  for (const Poly& f : chain) {
    at_minus.push_back(sign_at_minus_inf(f));
    at_plus.push_back(sign_at_plus_inf(f));
  }
  return variations(at_minus) - variations(at_plus);
}

int real_root_count_with_multiplicity(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  int total = 0;
  Poly g = a;
  while (g.degree() >= 1) {
    total += sturm_real_root_count(g);
    g = poly_gcd(g, g.derivative());
  }
  return total;
}

}  // namespace tnn
