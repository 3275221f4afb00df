#pragma once

#include <string>
#include <vector>

#include "g2kit/linalg.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

/// Polynomial in one variable X with Scalar coefficients, lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c) { return Poly({c}); }
  static Poly x() { return Poly({Scalar(0), Scalar(1)}); }

  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return k < 0 || k > degree() ? Scalar(0) : c_[k]; }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  /// P(−X).
  Poly reflect() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  bool operator==(const Poly& o) const { return (*this - o).is_zero(); }

  /// Quotient and remainder of Euclidean division by a nonzero b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd by the Euclidean algorithm.
  static Poly gcd(Poly a, Poly b);

  Scalar eval(const Scalar& x) const;
  /// P(M) by Horner's rule.
  MatX<Scalar> eval(const MatX<Scalar>& m) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace g2kit
