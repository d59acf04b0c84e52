#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP-backed) and
// prime fields with a runtime modulus.  Every algebraic computation in this
// library is templated over one of the two field context types below; there
// is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hlab/errors.hpp"

namespace hlab {

// ---------------------------------------------------------------------------
// Rational: always in lowest terms with positive denominator (mpq invariant).

class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
    v.canonicalize();
    return Rational(v);
  }

  bool is_zero() const { return v_ == 0; }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  Rational inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  const mpq_class& raw() const { return v_; }
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// FpScalar: residue in [0,p) tagged with its modulus.  A default-constructed
// scalar is the unattached zero (modulus 0); it may combine with any modulus.
// Combining two attached scalars with different moduli is an error.

class FpScalar {
 public:
  FpScalar() : val_(0), mod_(0) {}
  FpScalar(std::uint64_t value, std::uint64_t modulus) : val_(value % modulus), mod_(modulus) {}

  bool is_zero() const { return val_ == 0; }
  std::uint64_t value() const { return val_; }
  std::uint64_t modulus() const { return mod_; }

  bool operator==(const FpScalar& o) const {
    if (is_zero() && o.is_zero()) return true;
    return joint_modulus(o) != 0 && val_ == o.val_;
  }
  bool operator!=(const FpScalar& o) const { return !(*this == o); }

  FpScalar operator+(const FpScalar& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return FpScalar();
    return FpScalar((val_ + o.val_) % p, p);
  }
  FpScalar operator-(const FpScalar& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return FpScalar();
    return FpScalar((val_ + p - o.val_) % p, p);
  }
  FpScalar operator*(const FpScalar& o) const {
    std::uint64_t p = joint_modulus(o);
    if (p == 0) return FpScalar();
    return FpScalar((val_ * o.val_) % p, p);
  }
  FpScalar operator/(const FpScalar& o) const { return *this * o.inverse(); }
  FpScalar operator-() const {
    if (mod_ == 0) return FpScalar();
    return FpScalar(mod_ - val_, mod_);
  }
  FpScalar& operator+=(const FpScalar& o) { return *this = *this + o; }
  FpScalar& operator-=(const FpScalar& o) { return *this = *this - o; }
  FpScalar& operator*=(const FpScalar& o) { return *this = *this * o; }

  FpScalar inverse() const {
    if (mod_ == 0 || val_ == 0) throw Error("inverse of zero in prime field");
    // extended Euclid on (val, mod)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(mod_), newr = static_cast<std::int64_t>(val_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw Error("non-invertible residue (modulus not prime?)");
    if (t < 0) t += static_cast<std::int64_t>(mod_);
    return FpScalar(static_cast<std::uint64_t>(t), mod_);
  }

  std::string str() const { return std::to_string(val_); }

 private:
  // 0 when both unattached; throws when attached moduli differ.
  std::uint64_t joint_modulus(const FpScalar& o) const {
    if (mod_ == 0) return o.mod_;
    if (o.mod_ == 0) return mod_;
    if (mod_ != o.mod_)
      throw FieldMismatchError("moduli " + std::to_string(mod_) + " vs " + std::to_string(o.mod_));
    return mod_;
  }

  std::uint64_t val_;
  std::uint64_t mod_;
};

// ---------------------------------------------------------------------------
// Field contexts.  All algebraic containers carry one by value.

struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Rational(); }
  Scalar one() const { return Rational(1); }
  Scalar from_long(long n) const { return Rational(n); }
  Scalar from_rational(const Rational& r) const { return r; }
  std::string name() const { return "rat"; }
  std::uint64_t characteristic() const { return 0; }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimeField {
  std::uint64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw Error("modulus too large (need p < 2^31)");
  }

  using Scalar = FpScalar;

  Scalar zero() const { return FpScalar(0, p); }
  Scalar one() const { return FpScalar(1, p); }
  Scalar from_long(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return FpScalar(static_cast<std::uint64_t>(r), p);
  }
  Scalar from_rational(const Rational& r) const {
    std::uint64_t num = mpz_fdiv_ui(r.raw().get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(r.raw().get_den().get_mpz_t(), p);
    if (den == 0)
      throw Error("denominator of " + r.str() + " vanishes mod " + std::to_string(p));
    return FpScalar(num, p) * FpScalar(den, p).inverse();
  }
  std::string name() const { return "fp:" + std::to_string(p); }
  std::uint64_t characteristic() const { return p; }

  // Element of multiplicative order exactly r; requires r | p-1.
  Scalar primitive_root_of_unity(std::uint64_t r) const {
    if (r == 0 || (p - 1) % r != 0)
      throw Error("F_" + std::to_string(p) + " has no primitive " + std::to_string(r) +
                  "-th root of unity (need p = 1 mod r)");
    for (std::uint64_t g = 1; g < p; ++g) {
      FpScalar z = pow(FpScalar(g, p), (p - 1) / r);
      if (order_is(z, r)) return z;
    }
    throw Error("no primitive root found");  // unreachable for prime p
  }

  static Scalar pow(Scalar base, std::uint64_t e) {
    FpScalar acc(1, base.modulus());
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

 private:
  static bool order_is(FpScalar z, std::uint64_t r) {
    FpScalar acc = z;
    for (std::uint64_t k = 1; k < r; ++k) {
      if (acc.value() == 1) return false;
      acc *= z;
    }
    return acc.value() == 1;
  }
};

}  // namespace hlab
