#include "g2kit/filtration.hpp"

#include <algorithm>

namespace g2kit {

namespace {

using Row = std::vector<std::int64_t>;
using Mp = std::vector<Row>;  // row-major

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const { return ((a % p) + p) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  Mp mul(const Mp& a, const Mp& b) const {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mp c(n, Row(m, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (a[i][l])
          for (std::size_t j = 0; j < m; ++j) c[i][j] = norm(c[i][j] + a[i][l] * b[l][j]);
    return c;
  }
  Mp transpose(const Mp& a) const {
    if (a.empty()) return {};
    Mp t(a[0].size(), Row(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
  }
  Mp identity(std::size_t n) const {
    Mp m(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  Mp add(const Mp& a, const Mp& b, std::int64_t sb = 1) const {
    Mp c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = norm(a[i][j] + sb * b[i][j]);
    return c;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(Mp& a) const {
    std::vector<std::size_t> piv;
    if (a.empty()) return piv;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t k = r;
      while (k < rows && norm(a[k][c]) == 0) ++k;
      if (k == rows) continue;
      std::swap(a[r], a[k]);
      std::int64_t iv = inv(a[r][c]);
      for (auto& x : a[r]) x = norm(x * iv);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r && a[i][c]) {
          std::int64_t f = a[i][c];
          for (std::size_t j = 0; j < cols; ++j) a[i][j] = norm(a[i][j] - f * a[r][j]);
        }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }
  /// Rank of the column span.
  std::size_t rank_cols(const Mp& cols_as_rows) const {
    Mp a = cols_as_rows;
    return rref(a).size();
  }
  /// Basis (as a list of vectors) of {x : a x = 0}, a given row-major with n columns.
  std::vector<Row> kernel(Mp a, std::size_t n) const {
    std::vector<Row> out;
    if (a.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        Row v(n, 0);
        v[i] = 1;
        out.push_back(v);
      }
      return out;
    }
    auto piv = rref(a);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_piv[f]) continue;
      Row v(n, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = norm(-a[r][f]);
      out.push_back(v);
    }
    return out;
  }
  /// Vectors as columns of an n × k matrix.
  Mp as_columns(const std::vector<Row>& vs, std::size_t n) const {
    Mp m(n, Row(vs.size(), 0));
    for (std::size_t k = 0; k < vs.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) m[i][k] = norm(vs[k][i]);
    return m;
  }
  std::vector<Row> combine(const std::vector<Row>& basis, const std::vector<Row>& coeffs, std::size_t n) const {
    std::vector<Row> out;
    for (const auto& c : coeffs) {
      Row v(n, 0);
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) v[i] = norm(v[i] + c[k] * basis[k][i]);
      out.push_back(v);
    }
    return out;
  }
  bool same_span(const std::vector<Row>& a, const std::vector<Row>& b) const {
    std::vector<Row> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::size_t ra = rank_cols(a), rb = rank_cols(b), ru = rank_cols(u);
    return ra == rb && rb == ru;
  }
};

}  // namespace

GammaPerpReport gamma_perp(const SymplecticSpace& v, const std::vector<std::vector<std::int64_t>>& x) {
  if (v.p <= 3) throw InvalidInputError("need p ≠ 2, 3");
  Fp f{v.p};
  const std::size_t n = v.form.size();
  if (n == 0 || n % 2 || v.gamma.size() != n) throw InvalidInputError("need an even-dimensional space with γ of matching size");
  for (std::size_t i = 0; i < n; ++i) {
    if (v.form[i].size() != n || v.gamma[i].size() != n) throw InvalidInputError("form and γ must be square");
    for (std::size_t j = 0; j < n; ++j)
      if (f.norm(v.form[i][j] + v.form[j][i]) != 0 || (i == j && f.norm(v.form[i][i]) != 0))
        throw InvalidInputError("form is not alternating");
  }
  if (f.rank_cols(v.form) != n) throw InvalidInputError("form is degenerate");
  const Mp& a = v.form;
  const Mp& g = v.gamma;
  if (f.mul(f.mul(f.transpose(g), a), g) != f.add(a, Mp(n, Row(n, 0)))) throw InvalidInputError("γ does not preserve the form");
  Mp id = f.identity(n);
  Mp g2 = f.mul(g, g);
  int order;
  if (f.add(g, id, -1) == Mp(n, Row(n, 0))) order = 1;
  else if (g2 == id) order = 2;
  else if (f.mul(g2, g) == id) order = 3;
  else throw InvalidInputError("γ must have order 1, 2 or 3");
  for (const auto& r : x)
    if (r.size() != n) throw InvalidInputError("vector of X has the wrong length");

  // γ-stability of X.
  Mp xc = f.as_columns(x, n);
  Mp gx = f.mul(g, xc);
  std::vector<Row> x_and_gx = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    Row col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = gx[i][k];
    x_and_gx.push_back(col);
  }
  if (f.rank_cols(x_and_gx) != f.rank_cols(x)) throw InvalidInputError("X is not γ-stable");

  Mp gm1 = f.add(g, id, -1);
  std::vector<Row> fixed = f.kernel(gm1, n);
  std::vector<Row> x_fixed = x.empty() ? std::vector<Row>{} : f.combine(x, f.kernel(f.mul(gm1, xc), x.size()), n);

  // Orthogonal of X^Γ inside V^Γ.
  std::vector<Row> lhs;
  if (x_fixed.empty()) {
    lhs = fixed;
  } else if (!fixed.empty()) {
    Mp cond = f.mul(f.mul(f.transpose(f.as_columns(x_fixed, n)), a), f.as_columns(fixed, n));
    lhs = f.combine(fixed, f.kernel(cond, fixed.size()), n);
  }
  // (X^⊥)^Γ.
  std::vector<Row> xperp = x.empty() ? f.kernel({}, n) : f.kernel(f.mul(f.transpose(xc), a), n);
  std::vector<Row> rhs;
  if (!xperp.empty()) rhs = f.combine(xperp, f.kernel(f.mul(gm1, f.as_columns(xperp, n)), xperp.size()), n);

  GammaPerpReport rep;
  rep.identity = f.same_span(lhs, rhs);
  rep.dim_fixed = static_cast<int>(fixed.size());
  rep.dim_x_fixed = static_cast<int>(f.rank_cols(x_fixed));

  std::vector<Row> vs;
  if (order == 2) vs = f.kernel(f.add(g, id), n);
  if (order == 3) vs = f.kernel(f.add(f.add(g2, g), id), n);
  std::vector<Row> all = fixed;
  all.insert(all.end(), vs.begin(), vs.end());
  bool orth = true;
  if (!fixed.empty() && !vs.empty()) {
    Mp pair = f.mul(f.mul(f.transpose(f.as_columns(fixed, n)), a), f.as_columns(vs, n));
    for (const auto& r : pair)
      for (auto e : r) orth = orth && e == 0;
  }
  rep.decomposition = fixed.size() + vs.size() == n && f.rank_cols(all) == n && orth;
  return rep;
}

std::vector<std::vector<std::vector<std::int64_t>>> gamma_stable_subspaces(const SymplecticSpace& v) {
  Fp f{v.p};
  const std::size_t n = v.gamma.size();
  std::vector<std::vector<Row>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t c = 0; c < n; ++c)
        if (choose[c]) piv.push_back(c);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!choose[c]) free.push_back({r, c});
      std::vector<std::int64_t> digits(free.size(), 0);
      while (true) {
        std::vector<Row> rows(k, Row(n, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
        for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = digits[i];
        std::vector<Row> ext = rows;
        for (const auto& r : rows) {
          Row gr(n, 0);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gr[i] = f.norm(gr[i] + v.gamma[i][j] * r[j]);
          ext.push_back(gr);
        }
        if (f.rank_cols(ext) == k) out.push_back(rows);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == v.p) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return out;
}

}  // namespace g2kit
