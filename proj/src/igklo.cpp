#include "iqg/igklo.hpp"

#include <cstdlib>

#include "iqg/error.hpp"

namespace iqg {

namespace {

Scalar inv(const Scalar& x) { return x.inverse(); }

Target as_target(const Scalar& s) {
  if (!s.is_monomial()) throw Error(ErrorKind::WrongCase, "pin value " + s.str() + " is not a monomial");
  const auto& [m, c] = s.num().min_term();
  return {c, m};
}

const GaussRational kI = GaussRational::i();

}  // namespace

std::string Block::label() const {
  std::string s = sign > 0 ? "chi+" : (sign < 0 ? "chi-" : "chi+");
  return s + "[" + std::to_string(node + 1) + "," + std::to_string(index) + "]";
}

GKLOImage::GKLOImage(ShiftInstance inst, Corruption corruption) : inst_(std::move(inst)), corr_(corruption) {
  build_blocks();
}

Scalar GKLOImage::w(int i, int r) const {
  const int vi = inst_.v[i];
  if (r >= 1 && r <= vi) return Scalar::var(var::W(i + 1, r), 2);
  const int t = tau(i);
  if (t != i && inst_.diagram.c(i, t) == -1) {
    const int n = vi + inst_.v[t];
    if (r > vi && r <= n) return Scalar::var(var::W(t + 1, n + 1 - r), -2);
  }
  throw Error(ErrorKind::WrongCase, "w index " + std::to_string(r) + " out of range at node " + std::to_string(i + 1));
}

Scalar GKLOImage::zeta(int i) const {
  auto it = inst_.zeta.find(i + 1);
  if (it != inst_.zeta.end()) return Scalar(it->second);
  return Scalar::var(var::zeta(i + 1));
}

Scalar GKLOImage::W(int i, const Scalar& x) const { return W_skip(i, x, 0); }

// W_i with the factor (1 - w_{i,skip}/x) left out.
Scalar GKLOImage::W_skip(int i, const Scalar& x, int skip) const {
  const int t = tau(i);
  Scalar r(1);
  for (int k = 1; k <= inst_.v[t]; ++k) r *= Scalar::var(var::W(t + 1, k), -1);
  const Scalar xi = inv(x);
  for (int k = 1; k <= inst_.v[i]; ++k) {
    if (k != skip) r *= Scalar(1) - w(i, k) * xi;
  }
  return r;
}

Scalar GKLOImage::Z(int i, const Scalar& x) const {
  Scalar r(1);
  const Scalar xi = inv(x);
  for (int s = 1; s <= inst_.w[i]; ++s) r *= Scalar(1) - Scalar::var(var::Z(i + 1, s)) * xi;
  return r;
}

Scalar GKLOImage::Wb(int i, const Scalar& x) const { return W(i, x) * W(tau(i), inv(x)); }

Scalar GKLOImage::Zb(int i, const Scalar& x) const { return Z(i, x) * Z(tau(i), inv(x)); }

Scalar GKLOImage::Wbr(int i, int r, const Scalar& x) const {
  return W_skip(i, x, r) * W(tau(i), inv(x));
}

Scalar GKLOImage::kappa(const Scalar& x) {
  Scalar one(1);
  return (one - q(1) * x) * (one - q(-1) * x) / (one - x).pow(2);
}

Scalar GKLOImage::wpfactor(int i, const Scalar& x) const {
  int wp2 = inst_.wp2[i];
  if (corr_.flip_wp) wp2 = -wp2;
  if (wp2 == 0) return Scalar(1);
  Scalar a = x * Scalar::qpow(wp2);
  return (a - inv(a)) / (x - inv(x));
}

FactorCurrent GKLOImage::Xi(int i, Var xv) const {
  const Scalar x = Scalar::var(xv);
  Scalar s = zeta(i) * zeta(tau(i)) * wpfactor(i, x);
  if (inst_.theta[i]) s *= kappa(x).pow(inst_.theta[i]);
  s *= Zb(i, x);
  s /= Wb(i, q(1) * x) * Wb(i, q(-1) * x);
  for (int j = 0; j < rank(); ++j) {
    if (inst_.diagram.adjacent(i, j)) s *= Wb(j, x);
  }
  return {xv, s};
}

std::vector<Block> GKLOImage::fixed_blocks(int i) const {
  std::vector<Block> out;
  const auto& d = inst_.diagram;
  const Scalar pre = zeta(i) / (Scalar(1) - q(2));
  const int theta = corr_.drop_kappa ? 0 : inst_.theta[i];
  for (int r = 1; r <= inst_.v[i]; ++r) {
    const Scalar wr = w(i, r);
    // chi^+_{i,r}: argument w/q
    {
      const Scalar a = wr * q(-1);
      Scalar c = pre * Z(i, a) / Wbr(i, r, wr);
      for (int j = 0; j < rank(); ++j) {
        if (!d.adjacent(i, j)) continue;
        if (inst_.arrow(j, i)) c *= Wb(j, a);
        if (inst_.arrow(i, j) && d.fixed(j)) c *= W(j, inv(a));
      }
      out.push_back({i, r, +1, as_target(wr), TorusElement(c, shift_op(i + 1, r, -1))});
    }
    // chi^-_{i,r}: argument 1/(q w)
    {
      const Scalar a = inv(q(1) * wr);
      Scalar c = q(1) * pre * Z(i, a) / Wbr(i, r, wr);
      if (theta) c *= kappa(a).pow(theta);
      for (int j = 0; j < rank(); ++j) {
        if (!d.adjacent(i, j) || !inst_.arrow(i, j)) continue;
        c *= d.fixed(j) ? W(j, inv(a)) : Wb(j, inv(a));
      }
      out.push_back({i, r, -1, as_target(inv(wr)), TorusElement(c, shift_op(i + 1, r, 1))});
    }
  }
  if (inst_.theta[i] && !corr_.drop_constant) {
    const Scalar one(1);
    Scalar c = zeta(i) * Scalar(kI * GaussRational(inst_.theta[i])) * Z(i, one) / ((one + q(1)) * Wb(i, q(1)));
    for (int j = 0; j < rank(); ++j) {
      if (d.adjacent(i, j)) c *= W(j, one);
    }
    out.push_back({i, 0, 0, as_target(q(1)), TorusElement(c)});
  }
  return out;
}

std::vector<Block> GKLOImage::moving_blocks(int i) const {
  std::vector<Block> out;
  const auto& d = inst_.diagram;
  const int t = tau(i);
  const bool a2n = d.c(i, t) == -1;
  const Scalar pre = zeta(i) / (Scalar(1) - q(2));
  for (int r = 1; r <= inst_.v[i]; ++r) {
    const Scalar wr = w(i, r);
    const Scalar a = wr * q(-1);
    Scalar c = Scalar::qpow(std::abs(inst_.wp2[i])) * pre * Z(i, a) / Wbr(i, r, wr);
    for (int j = 0; j < rank(); ++j) {
      if (d.adjacent(i, j) && inst_.arrow(j, i)) c *= Wb(j, a);
    }
    out.push_back({i, r, +1, as_target(wr), TorusElement(c, shift_op(i + 1, r, -1))});
  }
  for (int r = 1; r <= inst_.v[t]; ++r) {
    const Scalar wr = w(t, r);
    const Scalar a = inv(q(1) * wr);
    Scalar c = -q(1) * pre * Z(i, a) / Wbr(t, r, wr);
    for (int k = 0; k < rank(); ++k) {
      if (d.adjacent(t, k) && inst_.arrow(t, k)) c *= Wb(k, inv(a));
    }
    int index = a2n ? inst_.v[i] + inst_.v[t] + 1 - r : r;
    out.push_back({i, index, -1, as_target(inv(wr)), TorusElement(c, shift_op(t + 1, r, 1))});
  }
  return out;
}

void GKLOImage::build_blocks() {
  const int n = rank();
  if (static_cast<int>(inst_.v.size()) != n || static_cast<int>(inst_.w.size()) != n ||
      static_cast<int>(inst_.theta.size()) != n || static_cast<int>(inst_.wp2.size()) != n) {
    throw Error(ErrorKind::ValidationError, "instance data has the wrong length");
  }
  for (int i = 0; i < n; ++i) {
    if (inst_.v[i] < 0) throw Error(ErrorKind::NegativeMultiplicity, "negative multiplicity");
  }
  blocks_.clear();
  for (int i = 0; i < n; ++i) blocks_.push_back(inst_.diagram.fixed(i) ? fixed_blocks(i) : moving_blocks(i));
}

Distribution GKLOImage::B(int i, Var x) const {
  Distribution out;
  const Target qinv(Monomial(var::Q, -2));
  for (const auto& b : blocks_[i]) {
    for (const auto& [dm, c] : b.chi.terms()) out += Distribution::pinned(x, b.point * qinv, c, dm);
  }
  return out;
}

Distribution GKLOImage::B_direct(int i, Var xv) const {
  const auto& d = inst_.diagram;
  const Scalar x = Scalar::var(xv);
  const Scalar xi = inv(x);
  const Scalar one(1);
  const int t = tau(i);
  Distribution out;
  auto pin = [&](const Scalar& target, const Scalar& coeff, const DMonomial& dm) {
    out += Distribution::pinned(xv, as_target(target), coeff, dm);
  };
  if (d.fixed(i)) {
    const int theta = corr_.drop_kappa ? 0 : inst_.theta[i];
    Scalar first = zeta(i) / (one - q(2)) * Z(i, x);
    Scalar second = q(1) * zeta(i) / (one - q(2)) * Z(i, x);
    if (theta) second *= kappa(x).pow(theta);
    for (int j = 0; j < rank(); ++j) {
      if (!d.adjacent(i, j)) continue;
      if (inst_.arrow(j, i)) first *= Wb(j, x);
      if (inst_.arrow(i, j)) {
        if (d.fixed(j)) {
          first *= W(j, xi);
          second *= W(j, xi);
        } else {
          second *= Wb(j, xi);
        }
      }
    }
    for (int r = 1; r <= inst_.v[i]; ++r) {
      const Scalar wr = w(i, r);
      const Scalar denom = Wbr(i, r, wr);
      pin(wr / q(1), first / denom, shift_op(i + 1, r, -1));
      pin(inv(q(1) * wr), second / denom, shift_op(i + 1, r, 1));
    }
    if (inst_.theta[i] && !corr_.drop_constant) {
      Scalar c = Scalar(kI * GaussRational(inst_.theta[i])) * zeta(i) * Z(i, one) / ((one + q(1)) * Wb(i, q(1)));
      for (int j = 0; j < rank(); ++j) {
        if (d.adjacent(i, j)) c *= W(j, one);
      }
      pin(one, c, {});
    }
    return out;
  }
  Scalar first = Scalar::qpow(std::abs(inst_.wp2[i])) * zeta(i) / (one - q(2)) * Z(i, x);
  Scalar second = -q(1) * zeta(i) / (one - q(2)) * Z(i, x);
  for (int j = 0; j < rank(); ++j) {
    if (d.adjacent(i, j) && inst_.arrow(j, i)) first *= Wb(j, x);
    if (d.adjacent(t, j) && inst_.arrow(t, j)) second *= Wb(j, xi);
  }
  for (int r = 1; r <= inst_.v[i]; ++r) {
    const Scalar wr = w(i, r);
    pin(wr / q(1), first / Wbr(i, r, wr), shift_op(i + 1, r, -1));
  }
  for (int r = 1; r <= inst_.v[t]; ++r) {
    const Scalar wr = w(t, r);
    pin(inv(q(1) * wr), second / Wbr(t, r, wr), shift_op(t + 1, r, 1));
  }
  return out;
}

Scalar GKLOImage::leading_K(int i) const {
  FactorCurrent xi = Xi(i);
  const int expected = inst_.ell[tau(i)];
  const int got = xi.top_degree();
  if (got != expected) {
    throw Error(ErrorKind::DegreeMismatch, "node " + std::to_string(i + 1) + ": top degree " + std::to_string(got) +
                                               ", expected " + std::to_string(expected));
  }
  return xi.leading_coefficient();
}

ExtendedIndex GKLOImage::extend_a2n(int i) const {
  const int t = tau(i);
  if (t == i || inst_.diagram.c(i, t) != -1) {
    throw Error(ErrorKind::WrongCase, "node " + std::to_string(i + 1) + " is not on an A2n pair");
  }
  return {inst_.v[i] + inst_.v[t]};
}

NodePairs GKLOImage::partners() const {
  NodePairs out;
  for (int i = 0; i < rank(); ++i) {
    if (tau(i) > i) out.emplace_back(i + 1, tau(i) + 1);
  }
  return out;
}

}  // namespace iqg
