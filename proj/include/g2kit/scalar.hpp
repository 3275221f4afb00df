#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "g2kit/errors.hpp"
#include "g2kit/rational.hpp"

namespace g2kit {

enum class Extension { none, unramified, ramified };

std::string to_string(Extension ext);
Extension extension_from_string(const std::string& s);

/// Parameters of the local field model F_p((t)) and its quadratic extension.
struct FieldConfig {
  int p = 5;
  int precision = 8;  ///< number of stored coefficients after the leading one
  Extension ext = Extension::none;

  void validate() const;
  bool operator==(const FieldConfig&) const = default;
};

/// Residue field element a + b·ω, with ω² = ν (the fixed non-square) in the
/// unramified case and b = 0 otherwise.
struct Residue {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const Residue&) const = default;
};

class FieldContext;

/**
 * @brief Truncated Laurent series in the uniformizer π of F or F'.
 *
 * A scalar is either a context-free rational constant (used for literals such
 * as Scalar(0), Scalar(1) inside Eigen expressions; it adopts the context of
 * the first field element it meets) or a series c_v π^v + ... attached to a
 * FieldContext.  An exact series has finitely many terms, at most N of them.
 * An approximate series is known modulo π^prec; only inversion produces one.
 * Equality means equality modulo the joint precision.
 */
class Scalar {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  Scalar() = default;
  Scalar(int n) : num_(n) {}
  Scalar(long n) : num_(n) {}
  Scalar(long long n) : num_(n) {}
  static Scalar rational(std::int64_t num, std::int64_t den);

  const FieldContext* context() const { return ctx_; }
  bool has_context() const { return ctx_ != nullptr; }
  bool is_zero() const { return ctx_ ? coeffs_.empty() : num_ == 0; }
  bool is_exact() const { return !ctx_ || prec_ >= kInf; }

  /// Valuation in units of 1/e; kInf for exact zero.
  std::int64_t val() const;
  /// Valuation v_F as a rational (val / e).
  Rational valuation() const;
  /// Absolute precision in units of 1/e; kInf for exact values.
  std::int64_t abs_prec() const { return ctx_ ? prec_ : kInf; }
  /// True iff x lies in π^k·o.  Raises PrecisionError when undecidable.
  bool val_at_least(std::int64_t k) const;
  /// Coefficient of π^k.
  Residue coeff(std::int64_t k) const;
  Residue leading() const;
  const std::vector<Residue>& coeffs() const { return coeffs_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend bool operator==(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }

  Scalar inv() const;
  /// x + O(π^prec).
  Scalar truncated(std::int64_t prec) const;
  /// Sparse monomial list "a*t^k + ...", with " + O(t^k)" for approximations.
  std::string str() const;

  std::int64_t const_num() const { return num_; }
  std::int64_t const_den() const { return den_; }

 private:
  friend class FieldContext;
  const FieldContext* ctx_ = nullptr;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::int64_t val_ = kInf;
  std::int64_t prec_ = kInf;
  std::vector<Residue> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }
inline Scalar add(const Scalar& x, const Scalar& y) { return x + y; }
inline Scalar mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Scalar inv(const Scalar& x) { return x.inv(); }

/// Coefficient of t^{-1} of the trace to F; the additive character of conductor p_F.
std::uint32_t residue_character(const Scalar& x);

/// Exact squareness test from the leading term (p odd).
bool is_square(const Scalar& x);
/// Square root ≡ 1 mod 𝔭 of a principal unit x ∈ 1 + 𝔭, by Newton iteration to the working precision.
Scalar principal_unit_sqrt(const Scalar& x);

/**
 * @brief Interned arithmetic context for one FieldConfig.
 *
 * Contexts live for the whole program; pointers returned by get() are stable
 * and may be shared across threads.
 */
class FieldContext {
 public:
  static const FieldContext* get(const FieldConfig& cfg);

  const FieldConfig& config() const { return cfg_; }
  int p() const { return cfg_.p; }
  int precision() const { return cfg_.precision; }
  Extension ext() const { return cfg_.ext; }
  /// Ramification index of the model over F_p((t)).
  int e() const { return cfg_.ext == Extension::ramified ? 2 : 1; }
  /// The fixed non-square of F_p (smallest quadratic non-residue).
  std::uint32_t nonresidue() const { return nu_; }
  /// A unit whose residue is not a square in the residue field of this model.
  Scalar nonsquare_unit() const;
  /// Context of the base field F with the same p and N.
  const FieldContext* base() const;

  Residue radd(Residue x, Residue y) const;
  Residue rsub(Residue x, Residue y) const;
  Residue rneg(Residue x) const;
  Residue rmul(Residue x, Residue y) const;
  Residue rinv(Residue x) const;
  Residue rconj(Residue x) const { return {x.a, x.b == 0 ? 0 : p_ - x.b}; }
  Residue rfrom_int(std::int64_t n) const;
  bool rsquare(Residue x) const;
  std::uint32_t legendre(std::uint32_t a) const;

  Scalar zero() const;
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t n) const;
  Scalar from_rational(std::int64_t num, std::int64_t den) const;
  /// Brings a context-free constant into this context; checks mixed contexts.
  Scalar adopt(const Scalar& x) const;
  /// The variable t of F (equal to s² in the ramified case).
  Scalar t() const;
  /// The uniformizer: t, or s in the ramified case.
  Scalar uniformizer() const { return monomial({1, 0}, 1); }
  /// ω with ω² = ν; only in the unramified case.
  Scalar omega() const;
  Scalar monomial(Residue c, std::int64_t k) const;
  Scalar monomial(std::int64_t c, std::int64_t k) const { return monomial(rfrom_int(c), k); }
  /// Series Σ coeffs[i] π^{val+i} + O(π^prec).
  Scalar series(std::int64_t val, std::vector<Residue> coeffs, std::int64_t prec = Scalar::kInf) const;
  /// Image of a base-field scalar in this (extension) context.
  Scalar embed(const Scalar& base_scalar) const;

  /// Random exact scalar Σ_{k=vmin}^{vmin+terms-1} c_k π^k.
  Scalar random(std::mt19937_64& rng, std::int64_t vmin, int terms) const;
  Scalar parse(const std::string& s) const;

  std::string var() const { return cfg_.ext == Extension::ramified ? "s" : "t"; }

 private:
  explicit FieldContext(const FieldConfig& cfg);
  friend class Scalar;
  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  Scalar make(std::int64_t val, std::vector<Residue> coeffs, std::int64_t prec) const;

  FieldConfig cfg_;
  std::uint32_t p_;
  std::uint32_t nu_;
};

}  // namespace g2kit

namespace Eigen {
template <>
struct NumTraits<g2kit::Scalar> : GenericNumTraits<g2kit::Scalar> {
  typedef g2kit::Scalar Real;
  typedef g2kit::Scalar NonInteger;
  typedef g2kit::Scalar Literal;
  typedef g2kit::Scalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int digits() { return 0; }
};
}  // namespace Eigen
