#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace iqg {

// Exact a + b*sqrt(-1) with a, b rational.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussRational(long num, long den) : re_(num, den) { re_.canonicalize(); }
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  // Total order (re, then im); only used for canonical sorting.
  int compare(const GaussRational& o) const;

  GaussRational inverse() const;
  GaussRational pow(long e) const;

  // Rational square root when this is a nonnegative rational square.
  bool rational_sqrt(GaussRational& out) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace iqg
