#include "g2kit/polynomial.hpp"

#include <sstream>

namespace g2kit {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = c_.back().inv();
  std::vector<Scalar> c;
  for (const auto& a : c_) c.push_back(a * inv);
  c.back() = Scalar(1);
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  std::vector<Scalar> c;
  for (int k = 1; k <= degree(); ++k) c.push_back(Scalar(k) * c_[k]);
  return Poly(std::move(c));
}

Poly Poly::reflect() const {
  std::vector<Scalar> c = c_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Scalar(-1) * b; }

Poly operator*(const Scalar& s, const Poly& a) {
  std::vector<Scalar> c;
  for (const auto& x : a.c_) c.push_back(s * x);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Poly r = a;
  std::vector<Scalar> q(std::max(0, a.degree() - b.degree() + 1), Scalar(0));
  Scalar lead_inv = b.leading().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Scalar f = r.leading() * lead_inv;
    q[shift] = f;
    std::vector<Scalar> sub(shift + b.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < b.c_.size(); ++k) sub[shift + k] = f * b.c_[k];
    int deg = r.degree();
    r = r - Poly(std::move(sub));
    // The leading term cancels by construction even when coefficients are approximate.
    if (r.degree() >= deg) {
      std::vector<Scalar> c = r.c_;
      c.resize(deg);
      r = Poly(std::move(c));
    }
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar s(0);
  for (int k = degree(); k >= 0; --k) s = s * x + c_[k];
  return s;
}

MatX<Scalar> Poly::eval(const MatX<Scalar>& m) const {
  const int n = m.rows();
  MatX<Scalar> acc = MatX<Scalar>::Zero(n, n);
  MatX<Scalar> id = MatX<Scalar>::Identity(n, n);
  for (int k = degree(); k >= 0; --k) acc = acc * m + id * c_[k];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str() << ")";
    if (k == 1) os << "*X";
    if (k > 1) os << "*X^" << k;
  }
  return os.str();
}

}  // namespace g2kit
