#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

#include "flagtwist/errors.hpp"

namespace flagtwist {

// Exact element of Q(i). Both parts are arbitrary-precision rationals kept
// in lowest terms with positive denominator, so equality is structural.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q, mpq_class(0));
  }
  static GaussRat make(long nre, long dre, long nim, long dim) {
    mpq_class r(nre, dre), i(nim, dim);
    r.canonicalize();
    i.canonicalize();
    return GaussRat(r, i);
  }
  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  // x * conj(x): always real and >= 0.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const {
    if (is_zero()) throw Error("division by zero in Q(i)");
    mpq_class n = norm();
    return GaussRat(re_ / n, -im_ / n);
  }

  // Total bit size of the four integers; pivot-selection metric.
  std::size_t bit_size() const {
    return mpz_sizeinbase(re_.get_num_mpz_t(), 2) +
           mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_num_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_den_mpz_t(), 2);
  }

  // Serialized fraction string, always "num/den" (e.g. "-1/1").
  static std::string frac_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  // Accepts "num/den" or a bare integer; reduces silently.
  static mpq_class parse_frac(const std::string& s);

  // Human-readable form: "0", "3/5", "-i", "3/5+4/5i", ...
  std::string str() const;

 private:
  mpq_class re_, im_;
};

}  // namespace flagtwist
