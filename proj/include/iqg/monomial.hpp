#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace iqg {

// Variables are packed as kind | node | index so that the numeric order is
// intrinsic (no registry) and identical across runs.
//   Q        q^{1/2}
//   Spectral u, v, u1, u2, x (free spectral parameters)
//   W        w_{i,r}^{1/2}
//   Z        z_{i,s}
//   Zeta     zeta_i
enum class VarKind : std::uint32_t { Q = 0, Spectral = 1, W = 2, Z = 3, Zeta = 4 };

using Var = std::uint32_t;

namespace var {

constexpr Var make(VarKind kind, std::uint32_t node, std::uint32_t index) {
  return (static_cast<std::uint32_t>(kind) << 28) | ((node & 0x3fffu) << 14) | (index & 0x3fffu);
}
constexpr VarKind kind(Var v) { return static_cast<VarKind>(v >> 28); }
constexpr std::uint32_t node(Var v) { return (v >> 14) & 0x3fffu; }
constexpr std::uint32_t index(Var v) { return v & 0x3fffu; }

constexpr Var Q = make(VarKind::Q, 0, 0);
constexpr Var u = make(VarKind::Spectral, 0, 0);
constexpr Var v = make(VarKind::Spectral, 0, 1);
constexpr Var u1 = make(VarKind::Spectral, 0, 2);
constexpr Var u2 = make(VarKind::Spectral, 0, 3);
constexpr Var x = make(VarKind::Spectral, 0, 4);

// Nodes and indices are 1-based, as in the formulas.
constexpr Var W(std::uint32_t node, std::uint32_t r) { return make(VarKind::W, node, r); }
constexpr Var Z(std::uint32_t node, std::uint32_t s) { return make(VarKind::Z, node, s); }
constexpr Var zeta(std::uint32_t node) { return make(VarKind::Zeta, node, 0); }

inline bool is_spectral(Var v) { return kind(v) == VarKind::Spectral; }

std::string name(Var v);

}  // namespace var

// Laurent monomial: sorted (var, nonzero exponent) pairs.
class Monomial {
 public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(Var v, int e = 1);
  Monomial(std::initializer_list<Entry> entries);

  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }

  int degree(Var v) const;
  Monomial without(Var v) const;
  bool contains_kind(VarKind k) const;
  bool all_even() const;
  Monomial half() const;

  Monomial inverse() const;
  Monomial pow(int e) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Lexicographic order on exponent vectors (missing = 0). Compatible with
  // multiplication, so it is a group order on the monomials.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<Entry> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace iqg
