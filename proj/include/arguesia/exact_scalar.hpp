#pragma once

// Exact scalars: reduced rationals and one quadratic extension.
//
// Rat wraps a GMP rational and keeps it canonical at all times: the
// denominator is positive and coprime with the numerator, zero is 0/1.
// Two Rats are equal iff their (numerator, denominator) tuples are equal.
//
// QuadExt holds a + b*sqrt(d) with d > 1 not a perfect square (square factors
// of small primes are pulled out). It is the
// carrier for the fixed points of hyperbolic involutions and for chord
// endpoints of conics cut by rational lines.

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "arguesia/errors.hpp"

namespace arguesia {

class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& v) : q_(v) {}

  /// Parses `[-]digits[/digits]`.
  static Rat parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const { return from(::abs(q_)); }
  Rat inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return from(1 / q_);
  }
  double to_double() const { return q_.get_d(); }

  /// Canonical `p/q` text; integers print as `p/1`.
  std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

  Rat operator-() const { return from(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  static Rat from(const mpq_class& q) {
    Rat r;
    r.q_ = q;
    return r;
  }
  mpq_class q_{0};
};

inline Rat Rat::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num_text) || !digits(den_text))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

inline Rat rat_parse(std::string_view text) { return Rat::parse(text); }

inline Rat pow2(const Rat& x) { return x * x; }

/// a + b*sqrt(d). Values with b == 0 are plain rationals and carry d == 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadExt(I v) : a_(v) {}  // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(radicand); the radicand is normalized to a squarefree integer.
  QuadExt(const Rat& a, const Rat& b, const Rat& radicand);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const mpz_class& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  Rat to_rat() const {
    if (!is_rational()) throw DomainError("irrational value " + str() + " used as a rational");
    return a_;
  }

  QuadExt conj() const { return make(a_, -b_, d_); }
  /// a^2 - b^2 d, exact.
  Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt operator-() const { return make(-a_, -b_, d_); }
  friend QuadExt operator+(QuadExt x, QuadExt y) {
    const mpz_class d = unify(x, y);
    return make(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(QuadExt x, QuadExt y) {
    const mpz_class d = unify(x, y);
    return make(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    const Rat n = y.norm();
    if (n.is_zero()) throw DomainError("division by zero in quadratic extension");
    const QuadExt num = x * y.conj();
    return make(num.a_ / n, num.b_ / n, num.d_);
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_.is_zero() != y.b_.is_zero()) return false;
    if (x.b_.is_zero() || x.d_ == y.d_) return x.b_ == y.b_;
    // b sqrt(d) = b' sqrt(d') iff same sign and b^2 d = b'^2 d'
    return x.b_.sign() == y.b_.sign() && x.b_ * x.b_ * Rat(x.d_) == y.b_ * y.b_ * Rat(y.d_);
  }
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `a`, or `a + b*sqrt(d)` with canonical Rat text.
  std::string str() const {
    if (is_rational()) return a_.str();
    const std::string root = b_.str() + "*sqrt(" + d_.get_str() + ")";
    return a_.is_zero() ? root : a_.str() + " + " + root;
  }
  double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d()); }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

 private:
  static QuadExt make(const Rat& a, const Rat& b, const mpz_class& d) {
    QuadExt q;
    q.a_ = a;
    q.b_ = b;
    q.d_ = b.is_zero() ? mpz_class(0) : d;
    return q;
  }
  /// Rewrites b*sqrt(d) over radicand e when d*e is a square r^2:
  /// sqrt(d) = r/sqrt(e) = (r/e) sqrt(e).
  static bool rebase(QuadExt& q, const mpz_class& e) {
    const mpz_class de = q.d_ * e;
    if (!mpz_perfect_square_p(de.get_mpz_t())) return false;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), de.get_mpz_t());
    q.b_ = q.b_ * Rat(r, e);
    q.d_ = e;
    return true;
  }
  /// Brings x and y over one radicand; throws when they live in different
  /// quadratic fields.
  static mpz_class unify(QuadExt& x, QuadExt& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational() || x.d_ == y.d_) return x.d_;
    const bool ok = x.d_ < y.d_ ? rebase(y, x.d_) : rebase(x, y.d_);
    if (!ok)
      throw DomainError("mixed radicands sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
    return x.d_;
  }

  Rat a_;
  Rat b_;
  mpz_class d_{0};
};

/// Factors n = k^2 * s, pulling out every square prime factor below
/// kTrialLimit (all of them when the cofactor left has at most two prime
/// factors, e.g. n below kTrialLimit^3). s is never a perfect square unless 1.
/// A radicand that is not fully reduced is still handled exactly: radicands of
/// the same field are unified on the fly (see QuadExt::unify).
inline constexpr unsigned long kTrialLimit = 2048;

inline std::pair<mpz_class, mpz_class> squarefree_decompose(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) return {0, 0};
  mpz_class k = 1;
  mpz_class s = 1;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  };
  strip(2);
  for (unsigned long p = 3; p < kTrialLimit && mpz_class(p) * p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      k *= r;
    } else {
      s *= n;
    }
  }
  return {k, s};
}

inline QuadExt::QuadExt(const Rat& a, const Rat& b, const Rat& radicand) : a_(a) {
  if (radicand.sign() < 0) throw DomainError("negative radicand " + radicand.str());
  if (b.is_zero() || radicand.is_zero()) return;
  // sqrt(p/q) = sqrt(p*q)/q
  const auto [k, s] = squarefree_decompose(radicand.num() * radicand.den());
  const Rat coef = b * Rat(k, radicand.den());
  if (s == 1) {
    a_ += coef;
  } else {
    b_ = coef;
    d_ = s;
  }
}

inline int QuadExt::sign() const {
  if (b_.is_zero()) return a_.sign();
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  const Rat diff = a_ * a_ - b_ * b_ * Rat(d_);
  return diff.sign() > 0 ? sa : sb;
}

/// Exact square root of a nonnegative rational as b*sqrt(d), d squarefree.
inline QuadExt quad_sqrt(const Rat& x) {
  if (x.sign() < 0) throw DomainError("elliptic case - no real root of " + x.str());
  return QuadExt(Rat(0), Rat(1), x);
}

}  // namespace arguesia

template <>
struct std::hash<arguesia::Rat> {
  std::size_t operator()(const arguesia::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
