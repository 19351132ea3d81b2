#include "iqg/rational.hpp"

#include "iqg/error.hpp"

namespace iqg {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  if (sgn(im_) == 0) return {mpq_class(1 / re_), mpq_class(0)};
  mpq_class n = re_ * re_ + im_ * im_;
  return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussRational GaussRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussRational result(1);
  GaussRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

int GaussRational::compare(const GaussRational& o) const {
  int c = cmp(re_, o.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(im_, o.im_);
  return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

bool GaussRational::rational_sqrt(GaussRational& out) const {
  if (sgn(im_) != 0 || sgn(re_) < 0) return false;
  if (mpz_perfect_square_p(re_.get_num_mpz_t()) == 0 || mpz_perfect_square_p(re_.get_den_mpz_t()) == 0) {
    return false;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), re_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), re_.get_den_mpz_t());
  out = GaussRational(mpq_class(n, d), mpq_class(0));
  return true;
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  std::size_t n = mpz_size(z);
  for (std::size_t k = 0; k < n && k < 4; ++k) h = h * 1099511628211ULL ^ mpz_getlimbn(z, k);
  return h ^ n;
}

}  // namespace

std::size_t GaussRational::hash() const {
  std::size_t h = hash_mpz(re_.get_num_mpz_t()) * 31 + hash_mpz(re_.get_den_mpz_t());
  if (sgn(im_) != 0) h ^= (hash_mpz(im_.get_num_mpz_t()) * 31 + hash_mpz(im_.get_den_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  return h;
}

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return "(" + im_.get_str() + ")*I";
  return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "*I)";
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotADE: return "NotADE";
    case ErrorKind::TauNotInvolution: return "TauNotInvolution";
    case ErrorKind::TauNotAutomorphism: return "TauNotAutomorphism";
    case ErrorKind::NotInCorootLattice: return "NotInCorootLattice";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::IncompatibleOrientation: return "IncompatibleOrientation";
    case ErrorKind::ThetaOutsideFixedSet: return "ThetaOutsideFixedSet";
    case ErrorKind::AdjacentThetas: return "AdjacentThetas";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::LocalizationViolation: return "LocalizationViolation";
    case ErrorKind::DoublePin: return "DoublePin";
    case ErrorKind::NonSimplePole: return "NonSimplePole";
    case ErrorKind::UnpinnedResidual: return "UnpinnedResidual";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BadSpecialization: return "BadSpecialization";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace iqg
