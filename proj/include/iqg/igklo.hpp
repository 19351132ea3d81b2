#pragma once

#include <string>
#include <vector>

#include "iqg/deltacalc.hpp"
#include "iqg/satake.hpp"

namespace iqg {

// Deliberate defects for negative controls.
struct Corruption {
  bool drop_kappa = false;     // omit the kappa^theta dressing in the B-image
  bool flip_wp = false;        // use -wp in the Cartan current
  bool drop_constant = false;  // omit the delta(u) constant term
  bool any() const { return drop_kappa || flip_wp || drop_constant; }
};

// One summand delta(point/(q x)) * chi of a B-current. point is the
// (possibly extended) w-value: w_{i,r}, w_{tau i,r}^{-1}, or q for the
// constant term.
struct Block {
  int node = 0;
  int index = 0;  // 0 for the constant term; extended index on A2n pairs
  int sign = 0;   // +1 first sum, -1 second sum, 0 constant term
  Target point;
  TorusElement chi;
  std::string label() const;
};

struct ExtendedIndex {
  int n = 0;  // v_i + v_{tau i}
  // r -> n + 1 - r
  int prime(int r) const { return n + 1 - r; }
};

class GKLOImage {
 public:
  explicit GKLOImage(ShiftInstance inst, Corruption corruption = {});

  const ShiftInstance& instance() const { return inst_; }
  const Corruption& corruption() const { return corr_; }
  int rank() const { return inst_.rank(); }
  int tau(int i) const { return inst_.tau(i); }

  static Scalar q(int k) { return Scalar::qpow(2 * k); }
  // w_{i,r} for 1 <= r <= v_i, and the extended values on A2n pairs.
  Scalar w(int i, int r) const;
  Scalar zeta(int i) const;

  Scalar W(int i, const Scalar& x) const;      // W_i
  Scalar Z(int i, const Scalar& x) const;      // Z_i
  Scalar Wb(int i, const Scalar& x) const;     // bold W_i
  Scalar Zb(int i, const Scalar& x) const;     // bold Z_i
  Scalar Wbr(int i, int r, const Scalar& x) const;  // bold W_{i,r}
  static Scalar kappa(const Scalar& x);

  FactorCurrent Xi(int i, Var x = var::u) const;
  const std::vector<Block>& blocks(int i) const { return blocks_[i]; }
  Distribution B(int i, Var x = var::u) const;
  // Reassembled from the three-part formula, independent of the blocks.
  Distribution B_direct(int i, Var x = var::u) const;

  // Leading coefficient of Xi_i at infinity; throws DegreeMismatch.
  Scalar leading_K(int i) const;

  ExtendedIndex extend_a2n(int i) const;
  NodePairs partners() const;

 private:
  Scalar wpfactor(int i, const Scalar& x) const;
  Scalar W_skip(int i, const Scalar& x, int skip) const;
  void build_blocks();
  std::vector<Block> fixed_blocks(int i) const;
  std::vector<Block> moving_blocks(int i) const;

  ShiftInstance inst_;
  Corruption corr_;
  std::vector<std::vector<Block>> blocks_;
};

}  // namespace iqg
