#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iqg/rational.hpp"

namespace iqg {

// Nodes are 0-based here; symbols use node + 1.
struct SatakeDiagram {
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<int> tau;
  std::string type;  // e.g. "A3", empty when given only by matrix

  int c(int i, int j) const { return cartan[i][j]; }
  bool fixed(int i) const { return tau[i] == i; }
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] == -1; }
  bool split() const;
  std::vector<int> fixed_nodes() const;     // I_0
  std::vector<int> positive_nodes() const;  // I_1, smallest index of each 2-orbit
  std::vector<int> negative_nodes() const;  // I_{-1}
  std::vector<std::pair<int, int>> edges() const;
};

std::vector<std::vector<int>> cartan_matrix(const std::string& type);

// Throws NotADE, TauNotInvolution, TauNotAutomorphism.
SatakeDiagram validate_diagram(const std::vector<std::vector<int>>& cartan, const std::vector<int>& tau);

// tau from a list of cycles with 1-based entries.
std::vector<int> tau_from_cycles(int rank, const std::vector<std::vector<int>>& cycles);
std::vector<std::vector<int>> tau_cycles(const std::vector<int>& tau);

// Throws NotDominant, NotInCorootLattice, NegativeMultiplicity.
std::vector<int> solve_shift(const SatakeDiagram& d, const std::vector<int>& w, const std::vector<int>& ell);

// arrow[i][j] == true means i -> j.
using Orientation = std::vector<std::vector<bool>>;

Orientation default_orientation(const SatakeDiagram& d);
void validate_orientation(const SatakeDiagram& d, const Orientation& o);
// Twice the shift value, in {-1, 0, 1}. Throws IncompatibleOrientation.
std::vector<int> assign_wp(const SatakeDiagram& d, const Orientation& o);
// Throws ThetaOutsideFixedSet, AdjacentThetas.
void validate_theta(const SatakeDiagram& d, const std::vector<int>& theta);

struct ShiftInstance {
  std::string name;
  SatakeDiagram diagram;
  std::vector<int> w;      // <lambda, alpha_i>
  std::vector<int> ell;    // <mu, alpha_i>
  std::vector<int> v;      // multiplicities
  std::vector<int> theta;
  Orientation orientation;
  std::vector<int> wp2;    // 2 * wp_i
  std::map<int, GaussRational> zeta;  // numeric values; empty means symbolic

  int rank() const { return diagram.rank; }
  int tau(int i) const { return diagram.tau[i]; }
  bool arrow(int i, int j) const { return orientation[i][j]; }
};

struct InstanceSpec {
  std::string name;
  std::string type;
  std::vector<std::vector<int>> tau_cycles;
  std::vector<int> lambda;
  std::vector<int> mu;
  std::vector<int> theta;
  std::optional<std::vector<std::pair<int, int>>> orientation;  // 1-based arrows
  std::map<int, GaussRational> zeta;
};

ShiftInstance build_instance(const InstanceSpec& spec);

std::vector<ShiftInstance> build_catalog();
std::vector<InstanceSpec> catalog_specs();
ShiftInstance catalog_instance(const std::string& name);

}  // namespace iqg
