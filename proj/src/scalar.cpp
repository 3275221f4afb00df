#include "g2kit/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace g2kit {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= Scalar::kInf || b >= Scalar::kInf) return Scalar::kInf;
  return a + b;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Scalar rational_const(__int128 num, __int128 den) {
  if (den == 0) throw DivisionByZeroError("context-free constant with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || -num > lim || den > lim) throw UnsupportedError("context-free constant overflow");
  return Scalar::rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

const FieldContext* common(const Scalar& x, const Scalar& y) {
  if (!x.context()) return y.context();
  if (!y.context() || y.context() == x.context()) return x.context();
  throw ConfigMismatchError("operands belong to different field configurations");
}

// Largest prime factor test used for context-free valuations.
bool has_factor_at_least_5(std::int64_t n) {
  if (n < 0) n = -n;
  while (n % 2 == 0 && n > 0) n /= 2;
  while (n % 3 == 0 && n > 0) n /= 3;
  return n > 1;
}

}  // namespace

std::string to_string(Extension ext) {
  switch (ext) {
    case Extension::none: return "none";
    case Extension::unramified: return "unramified";
    case Extension::ramified: return "ramified";
  }
  return "none";
}

Extension extension_from_string(const std::string& s) {
  if (s == "none") return Extension::none;
  if (s == "unramified") return Extension::unramified;
  if (s == "ramified") return Extension::ramified;
  throw ConfigError("unknown extension '" + s + "'");
}

void FieldConfig::validate() const {
  if (!is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw ConfigError("residual characteristic must differ from 2 and 3");
  if (p > 1000003) throw ConfigError("p too large");
  if (precision < 4) throw ConfigError("precision must be at least 4");
  if (precision > 4096) throw ConfigError("precision too large");
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

// ---------------------------------------------------------------- contexts

const FieldContext* FieldContext::get(const FieldConfig& cfg) {
  cfg.validate();
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<FieldContext>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(cfg.p, cfg.precision, static_cast<int>(cfg.ext));
  auto it = table.find(key);
  if (it == table.end()) it = table.emplace(key, std::unique_ptr<FieldContext>(new FieldContext(cfg))).first;
  return it->second.get();
}

FieldContext::FieldContext(const FieldConfig& cfg) : cfg_(cfg), p_(cfg.p), nu_(0) {
  for (std::uint32_t a = 2; a < p_; ++a) {
    if (pow_mod(a, (p_ - 1) / 2, p_) == p_ - 1) {
      nu_ = a;
      break;
    }
  }
}

const FieldContext* FieldContext::base() const { return get({cfg_.p, cfg_.precision, Extension::none}); }

Residue FieldContext::radd(Residue x, Residue y) const {
  return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}
Residue FieldContext::rneg(Residue x) const { return {x.a ? p_ - x.a : 0, x.b ? p_ - x.b : 0}; }
Residue FieldContext::rsub(Residue x, Residue y) const { return radd(x, rneg(y)); }
Residue FieldContext::rmul(Residue x, Residue y) const {
  std::uint64_t p = p_;
  if (x.b == 0 && y.b == 0) return {static_cast<std::uint32_t>(std::uint64_t(x.a) * y.a % p), 0};
  std::uint64_t a = (std::uint64_t(x.a) * y.a + std::uint64_t(x.b) * y.b % p * nu_) % p;
  std::uint64_t b = (std::uint64_t(x.a) * y.b + std::uint64_t(x.b) * y.a) % p;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}
Residue FieldContext::rinv(Residue x) const {
  if (x.is_zero()) throw DivisionByZeroError("inverse of zero residue");
  if (x.b == 0) return {pow_mod(x.a, p_ - 2, p_), 0};
  // (a + bω)^{-1} = (a − bω) / (a² − νb²)
  std::uint64_t p = p_;
  std::uint64_t n = (std::uint64_t(x.a) * x.a + p * p - std::uint64_t(x.b) * x.b % p * nu_ % p) % p;
  std::uint64_t ni = pow_mod(n, p - 2, p);
  return {static_cast<std::uint32_t>(x.a * ni % p), static_cast<std::uint32_t>((p - x.b) * ni % p)};
}
Residue FieldContext::rfrom_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), 0};
}
std::uint32_t FieldContext::legendre(std::uint32_t a) const { return pow_mod(a % p_, (p_ - 1) / 2, p_); }
bool FieldContext::rsquare(Residue x) const {
  if (x.is_zero()) return true;
  if (x.b == 0 && cfg_.ext != Extension::unramified) return legendre(x.a) == 1;
  if (x.b == 0) return true;  // every element of F_p is a square in F_{p²}
  // Euler's criterion in F_{p²}: x^{(p²−1)/2} = 1.
  std::uint64_t e = (std::uint64_t(p_) * p_ - 1) / 2;
  Residue r{1, 0}, b = x;
  while (e) {
    if (e & 1) r = rmul(r, b);
    b = rmul(b, b);
    e >>= 1;
  }
  return r == Residue{1, 0};
}

Scalar FieldContext::make(std::int64_t val, std::vector<Residue> c, std::int64_t prec) const {
  if (prec < Scalar::kInf) {
    std::int64_t keep = std::max<std::int64_t>(0, prec - val);
    if (static_cast<std::int64_t>(c.size()) > keep) c.resize(keep);
  }
  std::size_t lead = 0;
  while (lead < c.size() && c[lead].is_zero()) ++lead;
  if (lead) {
    c.erase(c.begin(), c.begin() + lead);
    val += lead;
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  Scalar x;
  x.ctx_ = this;
  x.prec_ = prec;
  if (c.empty()) return x;
  std::int64_t n = cfg_.precision;
  if (prec >= Scalar::kInf) {
    if (static_cast<std::int64_t>(c.size()) > n)
      throw PrecisionError("exact result needs " + std::to_string(c.size()) + " coefficients, window is " +
                           std::to_string(n));
  } else if (prec - val > n) {
    x.prec_ = val + n;
    if (static_cast<std::int64_t>(c.size()) > n) c.resize(n);
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  x.val_ = val;
  x.coeffs_ = std::move(c);
  return x;
}

Scalar FieldContext::zero() const {
  Scalar x;
  x.ctx_ = this;
  return x;
}

Scalar FieldContext::from_int(std::int64_t n) const { return monomial(rfrom_int(n), 0); }

Scalar FieldContext::from_rational(std::int64_t num, std::int64_t den) const {
  Residue d = rfrom_int(den);
  if (d.is_zero()) throw DivisionByZeroError("denominator divisible by p");
  return monomial(rmul(rfrom_int(num), rinv(d)), 0);
}

Scalar FieldContext::adopt(const Scalar& x) const {
  if (x.ctx_ == this) return x;
  if (x.ctx_) throw ConfigMismatchError("scalar belongs to a different field configuration");
  return from_rational(x.num_, x.den_);
}

Scalar FieldContext::t() const { return monomial({1, 0}, e()); }

Scalar FieldContext::omega() const {
  if (cfg_.ext != Extension::unramified) throw UnsupportedError("ω exists only in the unramified extension");
  return monomial({0, 1}, 0);
}

Scalar FieldContext::nonsquare_unit() const {
  if (cfg_.ext != Extension::unramified) return monomial({nu_, 0}, 0);
  for (std::uint32_t b = 1; b < p_; ++b)
    for (std::uint32_t a = 0; a < p_; ++a)
      if (!rsquare({a, b})) return monomial({a, b}, 0);
  throw std::logic_error("F_{p²} has non-squares");
}

Scalar FieldContext::monomial(Residue c, std::int64_t k) const { return make(k, {c}, Scalar::kInf); }

Scalar FieldContext::series(std::int64_t val, std::vector<Residue> coeffs, std::int64_t prec) const {
  for (auto& r : coeffs) r = {r.a % p_, cfg_.ext == Extension::unramified ? r.b % p_ : 0};
  return make(val, std::move(coeffs), prec);
}

Scalar FieldContext::embed(const Scalar& x) const {
  if (!x.ctx_ || x.ctx_ == this) return adopt(x);
  if (x.ctx_->ext() != Extension::none || x.ctx_->p() != cfg_.p)
    throw ConfigMismatchError("embed expects a base-field scalar with the same p");
  std::int64_t e = this->e();
  std::vector<Residue> c;
  if (!x.coeffs_.empty()) {
    c.assign((x.coeffs_.size() - 1) * e + 1, Residue{});
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i * e] = x.coeffs_[i];
  }
  std::int64_t prec = x.prec_ >= Scalar::kInf ? Scalar::kInf : x.prec_ * e;
  std::int64_t val = x.coeffs_.empty() ? 0 : x.val_ * e;
  return make(val, std::move(c), prec);
}

Scalar FieldContext::random(std::mt19937_64& rng, std::int64_t vmin, int terms) const {
  std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
  std::vector<Residue> c(terms);
  for (auto& r : c) {
    r.a = d(rng);
    if (cfg_.ext == Extension::unramified) r.b = d(rng);
  }
  return make(vmin, std::move(c), Scalar::kInf);
}

Scalar FieldContext::parse(const std::string& text) const {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);
  const std::string v = var();
  auto parse_exp = [&](const std::string& m) -> std::int64_t {
    // m is "" (no variable), "v" or "v^k"
    if (m.empty()) return 0;
    std::string name = m.substr(0, 1);
    std::int64_t scale = 1;
    if (name == v) {
      scale = 1;
    } else if (name == "t" && v == "s") {
      scale = 2;
    } else {
      throw ParseError("unknown variable in '" + m + "'");
    }
    if (m.size() == 1) return scale;
    if (m[1] != '^') throw ParseError("bad monomial '" + m + "'");
    return scale * std::stoll(m.substr(2));
  };
  Scalar acc = zero();
  std::int64_t prec = Scalar::kInf;
  try {
    for (const auto& term : terms) {
      if (term.empty()) throw ParseError("empty term in '" + text + "'");
      if (term == "0") continue;
      if (term.rfind("O(", 0) == 0) {
        prec = std::min(prec, parse_exp(term.substr(2, term.size() - 3)));
        continue;
      }
      Residue c{1, 0};
      std::string mono;
      bool neg = false;
      std::string rest = term;
      if (rest[0] == '-') {
        neg = true;
        rest = rest.substr(1);
      }
      if (rest[0] == '(') {
        auto close = rest.find(')');
        std::string in = rest.substr(1, close - 1);
        auto plus = in.find('+');
        std::string a = in.substr(0, plus), b = in.substr(plus + 1);
        if (b.size() < 2 || b.substr(b.size() - 2) != "*w") throw ParseError("bad residue '" + in + "'");
        c = {rfrom_int(std::stoll(a)).a, rfrom_int(std::stoll(b.substr(0, b.size() - 2))).a};
        rest = rest.substr(close + 1);
        if (!rest.empty()) {
          if (rest[0] != '*') throw ParseError("bad term '" + term + "'");
          mono = rest.substr(1);
        }
      } else if (std::isdigit(static_cast<unsigned char>(rest[0]))) {
        auto star = rest.find('*');
        c = rfrom_int(std::stoll(rest.substr(0, star)));
        if (star != std::string::npos) mono = rest.substr(star + 1);
      } else {
        mono = rest;
      }
      if (neg) c = rneg(c);
      acc = acc + monomial(c, parse_exp(mono));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse scalar '" + text + "'");
  }
  return acc.truncated(prec);
}

// ---------------------------------------------------------------- scalars

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZeroError("zero denominator");
  Scalar x;
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  if (den < 0) g = -g;
  x.num_ = num / g;
  x.den_ = den / g;
  return x;
}

std::int64_t Scalar::val() const {
  if (!ctx_) {
    if (num_ == 0) return kInf;
    if (has_factor_at_least_5(num_) || has_factor_at_least_5(den_))
      throw UnsupportedError("valuation of a context-free constant depends on p");
    return 0;
  }
  if (!coeffs_.empty()) return val_;
  if (prec_ >= kInf) return kInf;
  throw PrecisionError("valuation undetermined: value is O(π^" + std::to_string(prec_) + ")");
}

Rational Scalar::valuation() const {
  std::int64_t v = val();
  if (v >= kInf) throw DomainError("valuation of zero is infinite");
  return Rational(v, ctx_ ? ctx_->e() : 1);
}

bool Scalar::val_at_least(std::int64_t k) const {
  if (!ctx_) return num_ == 0 || val() >= k;
  if (!coeffs_.empty()) return val_ >= k;
  if (prec_ >= kInf || prec_ >= k) return true;
  throw PrecisionError("cannot decide membership in π^" + std::to_string(k) + "·o for O(π^" +
                       std::to_string(prec_) + ")");
}

Residue Scalar::coeff(std::int64_t k) const {
  if (!ctx_) {
    if (num_ == 0) return {};
    throw UnsupportedError("coefficients of a context-free constant depend on p");
  }
  if (k >= prec_) throw PrecisionError("coefficient of π^" + std::to_string(k) + " is beyond precision");
  if (coeffs_.empty() || k < val_ || k >= val_ + static_cast<std::int64_t>(coeffs_.size())) return {};
  return coeffs_[k - val_];
}

Residue Scalar::leading() const {
  if (!ctx_) throw UnsupportedError("leading coefficient of a context-free constant");
  if (coeffs_.empty()) {
    if (prec_ >= kInf) throw DomainError("zero has no leading coefficient");
    throw PrecisionError("leading coefficient beyond precision");
  }
  return coeffs_.front();
}

Scalar Scalar::operator-() const {
  if (!ctx_) return rational(-num_, den_);
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = ctx_->rneg(c);
  return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  const FieldContext* ctx = common(x, y);
  if (!ctx) return rational_const(__int128(x.num_) * y.den_ + __int128(y.num_) * x.den_, __int128(x.den_) * y.den_);
  if (x.ctx_ == nullptr && x.num_ == 0) return ctx->adopt(y);
  if (y.ctx_ == nullptr && y.num_ == 0) return ctx->adopt(x);
  const Scalar X = ctx->adopt(x), Y = ctx->adopt(y);
  std::int64_t prec = std::min(X.prec_, Y.prec_);
  if (X.coeffs_.empty()) return ctx->make(Y.val_, Y.coeffs_, prec);
  if (Y.coeffs_.empty()) return ctx->make(X.val_, X.coeffs_, prec);
  std::int64_t lo = std::min(X.val_, Y.val_);
  std::int64_t hi = std::max(X.val_ + static_cast<std::int64_t>(X.coeffs_.size()),
                             Y.val_ + static_cast<std::int64_t>(Y.coeffs_.size()));
  if (prec < Scalar::kInf) hi = std::min(hi, prec);
  if (hi <= lo) return ctx->make(lo, {}, prec);
  std::vector<Residue> c(hi - lo);
  for (std::size_t i = 0; i < X.coeffs_.size(); ++i) {
    std::int64_t k = X.val_ + i - lo;
    if (k < hi - lo) c[k] = X.coeffs_[i];
  }
  for (std::size_t i = 0; i < Y.coeffs_.size(); ++i) {
    std::int64_t k = Y.val_ + i - lo;
    if (k < hi - lo) c[k] = ctx->radd(c[k], Y.coeffs_[i]);
  }
  return ctx->make(lo, std::move(c), prec);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  const FieldContext* ctx = common(x, y);
  if (!ctx) return rational_const(__int128(x.num_) * y.num_, __int128(x.den_) * y.den_);
  if ((!x.ctx_ && x.num_ == 0) || (!y.ctx_ && y.num_ == 0)) return ctx->zero();
  if (!x.ctx_ && x.num_ == 1 && x.den_ == 1) return y;
  if (!y.ctx_ && y.num_ == 1 && y.den_ == 1) return x;
  const Scalar X = ctx->adopt(x), Y = ctx->adopt(y);
  bool xz = X.coeffs_.empty(), yz = Y.coeffs_.empty();
  if ((xz && X.prec_ >= Scalar::kInf) || (yz && Y.prec_ >= Scalar::kInf)) return ctx->zero();
  std::int64_t vx = xz ? Scalar::kInf : X.val_, vy = yz ? Scalar::kInf : Y.val_;
  std::int64_t prec = std::min({sat_add(X.prec_, vy), sat_add(Y.prec_, vx), sat_add(X.prec_, Y.prec_)});
  if (xz || yz) return ctx->make(0, {}, prec);
  std::int64_t val = vx + vy;
  std::int64_t lx = X.coeffs_.size(), ly = Y.coeffs_.size();
  std::int64_t len = lx + ly - 1;
  if (prec < Scalar::kInf) {
    len = std::min(len, prec - val);
  } else if (len > ctx->precision()) {
    throw PrecisionError("exact product needs " + std::to_string(len) + " coefficients, window is " +
                         std::to_string(ctx->precision()));
  }
  if (len <= 0) return ctx->make(val, {}, prec);
  std::vector<Residue> c(len);
  if (ctx->ext() != Extension::unramified) {
    const std::uint64_t p = ctx->p();
    for (std::int64_t k = 0; k < len; ++k) {
      std::uint64_t s = 0;
      std::int64_t i0 = std::max<std::int64_t>(0, k - ly + 1), i1 = std::min<std::int64_t>(k, lx - 1);
      for (std::int64_t i = i0; i <= i1; ++i) {
        s += std::uint64_t(X.coeffs_[i].a) * Y.coeffs_[k - i].a;
        if (s >= (1ull << 62)) s %= p;
      }
      c[k] = {static_cast<std::uint32_t>(s % p), 0};
    }
  } else {
    for (std::int64_t k = 0; k < len; ++k) {
      Residue s{};
      std::int64_t i0 = std::max<std::int64_t>(0, k - ly + 1), i1 = std::min<std::int64_t>(k, lx - 1);
      for (std::int64_t i = i0; i <= i1; ++i) s = ctx->radd(s, ctx->rmul(X.coeffs_[i], Y.coeffs_[k - i]));
      c[k] = s;
    }
  }
  return ctx->make(val, std::move(c), prec);
}

Scalar Scalar::inv() const {
  if (!ctx_) {
    if (num_ == 0) throw DivisionByZeroError("inverse of zero");
    return rational(den_, num_);
  }
  if (coeffs_.empty()) {
    if (prec_ >= kInf) throw DivisionByZeroError("inverse of zero");
    throw PrecisionError("inverse of a value indistinguishable from zero (O(π^" + std::to_string(prec_) + "))");
  }
  const std::int64_t n = ctx_->precision();
  if (prec_ >= kInf && coeffs_.size() == 1) return ctx_->make(-val_, {ctx_->rinv(coeffs_[0])}, kInf);
  std::int64_t rel = prec_ >= kInf ? n : std::min(n, prec_ - val_);
  std::vector<Residue> w(rel);
  Residue w0 = ctx_->rinv(coeffs_[0]);
  w[0] = w0;
  for (std::int64_t k = 1; k < rel; ++k) {
    Residue s{};
    for (std::int64_t j = 1; j <= k && j < static_cast<std::int64_t>(coeffs_.size()); ++j)
      s = ctx_->radd(s, ctx_->rmul(coeffs_[j], w[k - j]));
    w[k] = ctx_->rneg(ctx_->rmul(w0, s));
  }
  return ctx_->make(-val_, std::move(w), -val_ + rel);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (!x.ctx_ && !y.ctx_) {
    if (y.num_ == 0) throw DivisionByZeroError("division by zero");
    return rational_const(__int128(x.num_) * y.den_, __int128(x.den_) * y.num_);
  }
  const FieldContext* ctx = common(x, y);
  return ctx->adopt(x) * ctx->adopt(y).inv();
}

Scalar Scalar::truncated(std::int64_t prec) const {
  if (!ctx_) throw UnsupportedError("truncation of a context-free constant");
  return ctx_->make(coeffs_.empty() ? 0 : val_, coeffs_, std::min(prec_, prec));
}

std::string Scalar::str() const {
  if (!ctx_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  const std::string v = ctx_->var();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Residue& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::int64_t k = val_ + static_cast<std::int64_t>(i);
    if (!first) os << " + ";
    first = false;
    std::string cs = c.b ? "(" + std::to_string(c.a) + "+" + std::to_string(c.b) + "*w)" : std::to_string(c.a);
    if (k == 0) os << cs;
    else if (k == 1) os << cs << "*" << v;
    else os << cs << "*" << v << "^" << k;
  }
  if (prec_ < kInf) {
    if (!first) os << " + ";
    first = false;
    os << "O(" << v << "^" << prec_ << ")";
  }
  if (first) return "0";
  return os.str();
}

std::uint32_t residue_character(const Scalar& x) {
  const FieldContext* ctx = x.context();
  if (!ctx || x.is_zero()) {
    if (ctx && !x.is_exact() && x.abs_prec() <= -ctx->e())
      throw PrecisionError("t^-1 coefficient beyond precision");
    return 0;
  }
  const std::int64_t e = ctx->e();
  if (x.val() < -e) throw NotInDomainError("residue character needs v(x) >= -1 (conductor p_F)");
  Residue c = x.coeff(-e);
  if (ctx->ext() == Extension::none) return c.a;
  return static_cast<std::uint32_t>(2ull * c.a % ctx->p());
}

bool is_square(const Scalar& x) {
  if (!x.has_context()) throw UnsupportedError("squareness of a context-free constant depends on p");
  if (x.is_zero()) return true;
  return x.val() % 2 == 0 && x.context()->rsquare(x.leading());
}

Scalar principal_unit_sqrt(const Scalar& x) {
  const FieldContext* ctx = x.context();
  if (!ctx) {
    if (x == Scalar(1)) return x;
    throw UnsupportedError("square root of a context-free constant");
  }
  Scalar d = x - ctx->one();
  if (!d.is_zero() && d.val() < 1) throw DomainError("principal_unit_sqrt needs x ∈ 1 + 𝔭");
  if (d.is_zero() && x.is_exact()) return ctx->one();
  Scalar half = ctx->from_rational(1, 2);
  Scalar y = ctx->one();
  for (std::int64_t bits = 1; bits < 2 * ctx->precision() * ctx->e() + 2; bits *= 2) y = (y + x * y.inv()) * half;
  for (int k = 0; k < 2; ++k) y = (y + x * y.inv()) * half;
  return y;
}

}  // namespace g2kit
