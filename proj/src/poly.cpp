#include "tnncomb/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tnn {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly{std::vector<Rat>{c}}; }

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
  return Poly{std::move(d)};
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly{std::move(c)};
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly{std::move(c)};
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> c(a.c_);
  for (auto& x : c) x *= s;
  return Poly{std::move(c)};
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rat> quot(static_cast<size_t>(a.degree() - db + 1), Rat(0));
  for (int k = a.degree(); k >= db; --k) {
    Rat& top = rem[static_cast<size_t>(k)];
    if (top == 0) continue;
    Rat q = top / b.leading();
    quot[static_cast<size_t>(k - db)] = q;
    for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k - db + i)] -= q * b[i];
  }
  return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return (Rat(1) / x.leading()) * x;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0 && !(c_.size() == 1)) continue;
    Rat coef = c_[k];
    if (first) {
      if (sgn(coef) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(coef) < 0 ? " - " : " + ");
    }
    os << rat_str(abs(coef));
    if (k == 1)
      os << " z";
    else if (k > 1)
      os << " z^" << k;
  }
  return os.str();
}

std::string Poly::coeff_list_str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) os << ",";
    os << rat_str(c_[k]);
  }
  return os.str();
}

namespace {

// "1 + 6 z + 5 z^2 + 1 z^3"; coefficient may be omitted before z, exponent
// defaults to 1 when ^ is absent
Poly parse_sum_form(const std::string& text) {
  std::vector<Rat> coeffs;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  int pending_sign = +1;
  bool any = false;
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '+' || text[i] == '-') {
      pending_sign = (text[i] == '-') ? -1 : +1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("bad polynomial: missing +/- in '" + text + "'");
    }
    // optional coefficient
    Rat coef(1);
    size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    if (i > start) coef = parse_rat(text.substr(start, i - start));
    skip_ws();
    int exp = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t es = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == es) throw std::invalid_argument("bad exponent in '" + text + "'");
        exp = std::stoi(text.substr(es, i - es));
      }
    } else if (i == start) {
      throw std::invalid_argument("bad polynomial term in '" + text + "'");
    }
    if (coeffs.size() <= static_cast<size_t>(exp)) coeffs.resize(static_cast<size_t>(exp) + 1, Rat(0));
    coeffs[static_cast<size_t>(exp)] += Rat(pending_sign) * coef;
    pending_sign = +1;
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return Poly{std::move(coeffs)};
}

}  // namespace

Poly Poly::parse(const std::string& text) {
  if (text.find('z') != std::string::npos) return parse_sum_form(text);
  // comma-separated coefficient list, constant first
  std::vector<Rat> coeffs;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
    coeffs.push_back(parse_rat(tok.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
  return Poly{std::move(coeffs)};
}

}  // namespace tnn
