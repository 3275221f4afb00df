#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "g2kit/linalg.hpp"
#include "g2kit/scalar.hpp"

namespace g2kit {

template <class T>
using Oct = Eigen::Matrix<T, 8, 1>;
template <class T>
using Mat8 = Eigen::Matrix<T, 8, 8>;

using Octonion = Oct<Scalar>;
using EndV = Mat8<Scalar>;

/// Witt labels in storage order: [e_{-4}, e_{-1}, e_{-2}, e_{-3}, e_3, e_2, e_1, e_4].
inline constexpr std::array<int, 8> kBasisOrder = {-4, -1, -2, -3, 3, 2, 1, 4};

/// Storage position of e_i, i ∈ {±1, ±2, ±3, ±4}.
constexpr int pos(int i) { return i < 0 ? (i == -4 ? 0 : -i) : (i == 4 ? 7 : 7 - i); }
constexpr int label(int position) { return kBasisOrder[position]; }

/// e_k e_l = sign · e_{index}, with positions for k, l and index.
struct TableEntry {
  int sign = 0;
  int index = 0;
};
using MultTable = std::array<std::array<TableEntry, 8>, 8>;

/// The 64-entry multiplication table on the Witt basis.
const MultTable& mult_table();

/// Trace, Q and the Gram matrix of f on the basis, derived from the table.
struct FormConstants {
  std::array<int, 8> trace{};
  std::array<int, 8> q{};
  std::array<std::array<int, 8>, 8> gram{};
};
const FormConstants& form_constants();

template <class T>
Oct<T> basis(int i) {
  Oct<T> x = Oct<T>::Zero();
  x[pos(i)] = T(1);
  return x;
}

template <class T>
Oct<T> unit() {
  return basis<T>(-4) + basis<T>(4);
}

template <class T>
Oct<T> mul(const Oct<T>& x, const Oct<T>& y) {
  const MultTable& tab = mult_table();
  Oct<T> r = Oct<T>::Zero();
  for (int k = 0; k < 8; ++k) {
    if (detail::is_zero(x[k])) continue;
    for (int l = 0; l < 8; ++l) {
      const TableEntry& e = tab[k][l];
      if (e.sign == 0 || detail::is_zero(y[l])) continue;
      T p = x[k] * y[l];
      if (e.sign > 0)
        r[e.index] += p;
      else
        r[e.index] -= p;
    }
  }
  return r;
}

template <class T>
T bilinear_f(const Oct<T>& x, const Oct<T>& y) {
  const auto& g = form_constants().gram;
  T s = T(0);
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l)
      if (g[k][l] != 0) s += T(g[k][l]) * x[k] * y[l];
  return s;
}

template <class T>
T norm_q(const Oct<T>& x) {
  const FormConstants& fc = form_constants();
  T s = T(0);
  for (int k = 0; k < 8; ++k) {
    if (fc.q[k] != 0) s += T(fc.q[k]) * x[k] * x[k];
    for (int l = k + 1; l < 8; ++l)
      if (fc.gram[k][l] != 0) s += T(fc.gram[k][l]) * x[k] * x[l];
  }
  return s;
}

template <class T>
T trace(const Oct<T>& x) {
  const auto& tr = form_constants().trace;
  T s = T(0);
  for (int k = 0; k < 8; ++k)
    if (tr[k] != 0) s += T(tr[k]) * x[k];
  return s;
}

/// x̄ = f(x, 𝟙)𝟙 − x.
template <class T>
Oct<T> conj(const Oct<T>& x) {
  return unit<T>() * trace(x) - x;
}

template <class T>
Mat8<T> gram_matrix() {
  Mat8<T> g;
  const auto& gi = form_constants().gram;
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l) g(k, l) = T(gi[k][l]);
  return g;
}

/// Matrix of x ↦ a·x.
template <class T>
Mat8<T> left_mult(const Oct<T>& a) {
  Mat8<T> m;
  for (int l = 0; l < 8; ++l) m.col(l) = mul<T>(a, basis<T>(label(l)));
  return m;
}

/// Matrix of x ↦ x·a.
template <class T>
Mat8<T> right_mult(const Oct<T>& a) {
  Mat8<T> m;
  for (int l = 0; l < 8; ++l) m.col(l) = mul<T>(basis<T>(label(l)), a);
  return m;
}

/// Matrix of conjugation.
template <class T>
Mat8<T> conj_matrix() {
  Mat8<T> m;
  for (int l = 0; l < 8; ++l) m.col(l) = g2kit::conj(basis<T>(label(l)));
  return m;
}

/**
 * @brief Linear subspace of V held in reduced column-echelon normal form.
 *
 * Two subspaces are equal iff their normal forms agree entrywise.
 */
template <class T>
class Subspace {
 public:
  Subspace() : basis_(MatX<T>::Zero(8, 0)) {}
  explicit Subspace(const MatX<T>& columns) : basis_(column_echelon<T>(columns)) {}

  static Subspace span(const std::vector<Oct<T>>& vs) {
    MatX<T> m(8, vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) m.col(k) = vs[k];
    return Subspace(m);
  }
  static Subspace whole() { return Subspace(MatX<T>::Identity(8, 8)); }

  int dim() const { return static_cast<int>(basis_.cols()); }
  const MatX<T>& basis() const { return basis_; }
  Oct<T> vector(int k) const { return basis_.col(k); }
  std::vector<Oct<T>> vectors() const {
    std::vector<Oct<T>> v;
    for (int k = 0; k < dim(); ++k) v.push_back(vector(k));
    return v;
  }

  bool contains(const Oct<T>& v) const {
    MatX<T> m(8, dim() + 1);
    m << basis_, v;
    return rank<T>(m) == dim();
  }
  bool contains(const Subspace& s) const {
    MatX<T> m(8, dim() + s.dim());
    m << basis_, s.basis_;
    return rank<T>(m) == dim();
  }
  bool operator==(const Subspace& o) const { return dim() == o.dim() && mat_equal<T>(basis_, o.basis_); }

  Subspace operator+(const Subspace& o) const {
    MatX<T> m(8, dim() + o.dim());
    m << basis_, o.basis_;
    return Subspace(m);
  }
  /// f-orthogonal complement in V.
  Subspace orthogonal() const {
    if (dim() == 0) return whole();
    MatX<T> rows = basis_.transpose() * gram_matrix<T>();
    return Subspace(kernel<T>(rows));
  }
  Subspace intersect(const Subspace& o) const { return (orthogonal() + o.orthogonal()).orthogonal(); }
  /// Coordinates of v in the normal-form basis.
  std::optional<VecX<T>> coords(const Oct<T>& v) const {
    auto x = solve<T>(basis_, v);
    if (!x) return std::nullopt;
    return VecX<T>(x->col(0));
  }

 private:
  MatX<T> basis_;
};

using SubspaceV = Subspace<Scalar>;

// ---------------------------------------------------------------- Scalar-only utilities

enum class SubalgebraKind { center, split_dim2, field_dim2, split_dim4, division_dim4, full };
std::string to_string(SubalgebraKind k);

/// Unital subalgebra on which Q is non-degenerate.
struct CompositionSubalgebra {
  std::vector<Octonion> basis;
  SubalgebraKind kind = SubalgebraKind::center;
  /// For split_dim2: the idempotent e⁺ when known.
  std::optional<Octonion> e_plus;

  int dim() const { return static_cast<int>(basis.size()); }
  SubspaceV space() const { return SubspaceV::span(basis); }
};

/// F·𝟙.
CompositionSubalgebra center_algebra();
/// D ⊥ Da; requires a ⊥ D and Q(a) ≠ 0.
CompositionSubalgebra double_algebra(const CompositionSubalgebra& d, const Octonion& a);
/// Closure under multiplication, unit, non-degenerate Q.
bool is_composition(const std::vector<Octonion>& basis);
/// Kind of a composition subalgebra from its dimension and discriminant data.
SubalgebraKind detect_kind(const std::vector<Octonion>& basis);
/// Hilbert symbol (a, b) ∈ {±1} over F_p((t)).
int hilbert_symbol(const Scalar& a, const Scalar& b);
/// f-orthogonal basis of span(vs) with Q non-zero on each vector; requires f non-degenerate on the span.
std::vector<Octonion> orthogonal_basis(const std::vector<Octonion>& vs);
/// Square root of an exact monomial c·t^{2k} with c a square mod p.
std::optional<Scalar> monomial_sqrt(const Scalar& x);

struct Idempotents {
  Octonion e_plus;
  Octonion e_minus;
  Octonion c;
};
/// e⁺ = −hh', e⁻ = −h'h, c = e⁺ − e⁻ for Q(h) = Q(h') = 0, h, h' ⊥ 𝟙, f(h, h') = 1.
Idempotents idempotents_from_isotropic_pair(const Octonion& h, const Octonion& hp);

struct Polarization {
  SubspaceV w_plus;
  SubspaceV w_minus;
  Octonion e_plus;
  Octonion e_minus;
};
/// W^± = e^± W for a split dimension-2 subalgebra with known idempotent.
Polarization split_polarization(const CompositionSubalgebra& d);

/// span(e_{-4}, e_4) with e⁺ = e_{-4}.
CompositionSubalgebra standard_hyperbolic_plane();

}  // namespace g2kit
