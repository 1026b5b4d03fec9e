#include "scalar.hpp"

#include <stdexcept>

namespace whcx {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar::Scalar(long n, int p) : v_(n), p_(p) { reduce(); }

Scalar::Scalar(const mpq_class& q, int p) : v_(q), p_(p) {
  v_.canonicalize();
  reduce();
}

Scalar Scalar::parse(const std::string& text, int p) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar literal: " + text);
  if (q.get_den() == 0) throw std::domain_error("zero denominator in " + text);
  q.canonicalize();
  return Scalar(q, p);
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class m(p_);
  mpz_class num = v_.get_num() % m;
  if (v_.get_den() != 1) {
    mpz_class den = v_.get_den() % m;
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    num = (num * inv) % m;
  }
  if (num < 0) num += m;
  v_ = mpq_class(num);
}

void Scalar::adopt(int p) {
  if (p == p_ || p == 0) return;
  if (p_ != 0) throw std::invalid_argument("mixing scalars from different prime fields");
  p_ = p;
  reduce();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(o.p_);
  if (o.p_ == p_) {
    v_ += o.v_;
  } else {
    v_ += o.in_field(p_).v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt(o.p_);
  v_ -= (o.p_ == p_ ? o.v_ : o.in_field(p_).v_);
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt(o.p_);
  v_ *= (o.p_ == p_ ? o.v_ : o.in_field(p_).v_);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  adopt(o.p_);
  mpq_class d = (o.p_ == p_ ? o.v_ : o.in_field(p_).v_);
  if (sgn(d) == 0) throw std::domain_error("division by zero");
  if (p_ == 0) {
    v_ /= d;
  } else {
    mpz_class m(p_), inv;
    mpz_class dz = d.get_num();
    mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), m.get_mpz_t());
    v_ *= mpq_class(inv);
    reduce();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.v_ == b.v_;
  int p = a.p_ ? a.p_ : b.p_;
  if (a.p_ && b.p_) return false;
  return a.in_field(p).v_ == b.in_field(p).v_;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace whcx
