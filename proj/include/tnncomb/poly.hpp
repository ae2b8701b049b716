#pragma once

#include <string>
#include <vector>

#include "tnncomb/rational.hpp"

namespace tnn {

// Univariate polynomial over Rat, constant coefficient first.
// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);

  // "1,6,5,1" (constant first) or "1 + 6 z + 5 z^2 + 1 z^3"
  static Poly parse(const std::string& text);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string str() const;             // "1 + 6 z + 5 z^2 + 1 z^3"
  std::string coeff_list_str() const;  // "1,6,5,1"

 private:
  std::vector<Rat> c_;
  void trim();
};

// quotient/remainder with deg(rem) < deg(b)
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// monic gcd (gcd of zero polys is zero)
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace tnn
