#pragma once

#include <gmpxx.h>

#include <string>

namespace whcx {

// Element of Q (prime 0) or F_p. Values from different nonzero primes never mix;
// a rational combined with an F_p value is reduced modulo p.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n, int p = 0);
  Scalar(const mpq_class& q, int p = 0);

  static Scalar parse(const std::string& text, int p);

  int prime() const { return p_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }
  Scalar in_field(int p) const { return Scalar(v_, p); }
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void adopt(int p);
  void reduce();

  mpq_class v_;
  int p_ = 0;
};

bool is_prime(long n);

}  // namespace whcx
