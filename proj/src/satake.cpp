#include "iqg/satake.hpp"

#include <algorithm>
#include <functional>

#include "iqg/error.hpp"

namespace iqg {

bool SatakeDiagram::split() const {
  for (int i = 0; i < rank; ++i) {
    if (tau[i] != i) return false;
  }
  return true;
}

std::vector<int> SatakeDiagram::fixed_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (tau[i] == i) out.push_back(i);
  }
  return out;
}

std::vector<int> SatakeDiagram::positive_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (tau[i] > i) out.push_back(i);
  }
  return out;
}

std::vector<int> SatakeDiagram::negative_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (tau[i] < i) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> SatakeDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      if (cartan[i][j] == -1) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const std::string& type) {
  if (type.size() < 2) throw Error(ErrorKind::NotADE, "bad type '" + type + "'");
  char letter = type[0];
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::NotADE, "bad type '" + type + "'");
  }
  std::vector<std::vector<int>> c(n > 0 ? n : 0, std::vector<int>(n > 0 ? n : 0, 0));
  auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  if (letter == 'A' && n >= 1) {
    for (int i = 1; i < n; ++i) link(i, i + 1);
  } else if (letter == 'D' && n >= 4) {
    for (int i = 1; i < n - 1; ++i) link(i, i + 1);
    link(n - 2, n);
  } else if (letter == 'E' && n >= 6 && n <= 8) {
    link(1, 3);
    link(3, 4);
    link(2, 4);
    for (int i = 4; i < n; ++i) link(i, i + 1);
  } else {
    throw Error(ErrorKind::NotADE, "unsupported type '" + type + "'");
  }
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  return c;
}

SatakeDiagram validate_diagram(const std::vector<std::vector<int>>& cartan, const std::vector<int>& tau) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw Error(ErrorKind::NotADE, "empty Cartan matrix");
  for (const auto& row : cartan) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotADE, "Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw Error(ErrorKind::NotADE, "diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] != 0 && cartan[i][j] != -1) throw Error(ErrorKind::NotADE, "off-diagonal entry outside {0,-1}");
      if (cartan[i][j] != cartan[j][i]) throw Error(ErrorKind::NotADE, "Cartan matrix is not symmetric");
    }
  }
  // connected
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b) {
      if (!seen[b] && cartan[a][b] == -1) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw Error(ErrorKind::NotADE, "diagram is not connected");
  // simply laced + connected + positive definite <=> ADE
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan[i][j];
  }
  for (int k = 0; k < n; ++k) {
    if (sgn(m[k][k]) <= 0) throw Error(ErrorKind::NotADE, "Cartan matrix is not positive definite");
    for (int i = k + 1; i < n; ++i) {
      mpq_class f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  if (static_cast<int>(tau.size()) != n) throw Error(ErrorKind::TauNotInvolution, "tau has the wrong size");
  for (int i = 0; i < n; ++i) {
    if (tau[i] < 0 || tau[i] >= n) throw Error(ErrorKind::TauNotInvolution, "tau is not a permutation");
  }
  for (int i = 0; i < n; ++i) {
    if (tau[tau[i]] != i) throw Error(ErrorKind::TauNotInvolution, "tau is not an involution");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cartan[tau[i]][tau[j]] != cartan[i][j]) {
        throw Error(ErrorKind::TauNotAutomorphism, "tau does not preserve the Cartan matrix");
      }
    }
  }
  SatakeDiagram d;
  d.rank = n;
  d.cartan = cartan;
  d.tau = tau;
  return d;
}

std::vector<int> tau_from_cycles(int rank, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> tau(rank);
  for (int i = 0; i < rank; ++i) tau[i] = i;
  std::vector<bool> used(rank, false);
  for (const auto& cyc : cycles) {
    if (cyc.size() == 1) {
      int a = cyc[0] - 1;
      if (a < 0 || a >= rank || used[a]) throw Error(ErrorKind::TauNotInvolution, "bad cycle entry");
      used[a] = true;
      continue;
    }
    if (cyc.size() != 2) throw Error(ErrorKind::TauNotInvolution, "cycles of an involution have length 1 or 2");
    int a = cyc[0] - 1, b = cyc[1] - 1;
    if (a < 0 || b < 0 || a >= rank || b >= rank || a == b || used[a] || used[b]) {
      throw Error(ErrorKind::TauNotInvolution, "bad cycle entry");
    }
    used[a] = used[b] = true;
    tau[a] = b;
    tau[b] = a;
  }
  return tau;
}

std::vector<std::vector<int>> tau_cycles(const std::vector<int>& tau) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(tau.size()); ++i) {
    if (tau[i] > i) out.push_back({i + 1, tau[i] + 1});
  }
  return out;
}

std::vector<int> solve_shift(const SatakeDiagram& d, const std::vector<int>& w, const std::vector<int>& ell) {
  const int n = d.rank;
  if (static_cast<int>(w.size()) != n || static_cast<int>(ell.size()) != n) {
    throw Error(ErrorKind::ValidationError, "pairing vectors must have length " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0) throw Error(ErrorKind::NotDominant, "lambda pairing at node " + std::to_string(i + 1) + " is negative");
  }
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = d.cartan[i][j];
    m[i][n] = w[i] - ell[i];
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    std::swap(m[k], m[p]);
    for (int i = 0; i < n; ++i) {
      if (i == k || sgn(m[i][k]) == 0) continue;
      mpq_class f = m[i][k] / m[k][k];
      for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    mpq_class x = m[i][n] / m[i][i];
    if (x.get_den() != 1) throw Error(ErrorKind::NotInCorootLattice, "multiplicity at node " + std::to_string(i + 1) + " is " + x.get_str());
    if (sgn(x) < 0) throw Error(ErrorKind::NegativeMultiplicity, "multiplicity at node " + std::to_string(i + 1) + " is " + x.get_str());
    v[i] = static_cast<int>(x.get_num().get_si());
  }
  return v;
}

Orientation default_orientation(const SatakeDiagram& d) {
  const int n = d.rank;
  Orientation o(n, std::vector<bool>(n, false));
  auto assigned = [&](int a, int b) { return o[a][b] || o[b][a]; };
  for (const auto& [a, b] : d.edges()) {
    if (assigned(a, b)) continue;
    o[a][b] = true;
    if (!d.fixed(a) || !d.fixed(b)) {
      int ta = d.tau[a], tb = d.tau[b];
      if (!assigned(ta, tb)) o[tb][ta] = true;
    }
  }
  return o;
}

void validate_orientation(const SatakeDiagram& d, const Orientation& o) {
  const int n = d.rank;
  if (static_cast<int>(o.size()) != n) throw Error(ErrorKind::IncompatibleOrientation, "orientation has the wrong size");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool edge = d.adjacent(a, b);
      if (o[a][b] && !edge) throw Error(ErrorKind::IncompatibleOrientation, "arrow on a non-edge");
      if (edge && o[a][b] == o[b][a]) throw Error(ErrorKind::IncompatibleOrientation, "edge without a unique direction");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!o[a][b]) continue;
      if ((!d.fixed(a) || !d.fixed(b)) && !o[d.tau[b]][d.tau[a]]) {
        throw Error(ErrorKind::IncompatibleOrientation, "arrow " + std::to_string(a + 1) + "->" + std::to_string(b + 1) +
                                                            " is not matched by " + std::to_string(d.tau[b] + 1) + "->" +
                                                            std::to_string(d.tau[a] + 1));
      }
    }
  }
}

std::vector<int> assign_wp(const SatakeDiagram& d, const Orientation& o) {
  validate_orientation(d, o);
  std::vector<int> wp(d.rank, 0);
  for (int i = 0; i < d.rank; ++i) {
    int t = d.tau[i];
    if (d.c(i, t) != -1) continue;
    wp[i] = o[i][t] ? -1 : 1;
  }
  return wp;
}

void validate_theta(const SatakeDiagram& d, const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != d.rank) throw Error(ErrorKind::ValidationError, "theta has the wrong length");
  for (int i = 0; i < d.rank; ++i) {
    if (theta[i] != 0 && theta[i] != 1) throw Error(ErrorKind::ValidationError, "theta entries must be 0 or 1");
    if (theta[i] == 1 && !d.fixed(i)) {
      throw Error(ErrorKind::ThetaOutsideFixedSet, "theta at node " + std::to_string(i + 1) + " but the node is not fixed");
    }
  }
  for (const auto& [a, b] : d.edges()) {
    if (theta[a] && theta[b]) {
      throw Error(ErrorKind::AdjacentThetas, "theta set at adjacent nodes " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
    }
  }
}

ShiftInstance build_instance(const InstanceSpec& spec) {
  ShiftInstance s;
  s.name = spec.name;
  auto cartan = cartan_matrix(spec.type);
  const int n = static_cast<int>(cartan.size());
  s.diagram = validate_diagram(cartan, tau_from_cycles(n, spec.tau_cycles));
  s.diagram.type = spec.type;
  s.w = spec.lambda;
  s.ell = spec.mu;
  s.v = solve_shift(s.diagram, s.w, s.ell);
  s.theta = spec.theta.empty() ? std::vector<int>(n, 0) : spec.theta;
  validate_theta(s.diagram, s.theta);
  if (spec.orientation) {
    s.orientation.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : *spec.orientation) {
      if (a < 1 || b < 1 || a > n || b > n) throw Error(ErrorKind::IncompatibleOrientation, "arrow endpoint out of range");
      s.orientation[a - 1][b - 1] = true;
    }
  } else {
    s.orientation = default_orientation(s.diagram);
  }
  s.wp2 = assign_wp(s.diagram, s.orientation);
  for (const auto& [node, value] : spec.zeta) {
    if (node < 1 || node > n) throw Error(ErrorKind::ValidationError, "zeta node out of range");
    if (value.is_zero()) throw Error(ErrorKind::ValidationError, "zeta values must be nonzero");
  }
  s.zeta = spec.zeta;
  return s;
}

std::vector<InstanceSpec> catalog_specs() {
  return {
      {"sA1-v1-t0", "A1", {}, {2}, {0}, {0}, std::nullopt, {}},
      {"sA1-v1-t1", "A1", {}, {2}, {0}, {1}, std::nullopt, {}},
      {"sA1-v2-t0", "A1", {}, {2}, {-2}, {0}, std::nullopt, {}},
      {"sA1-v2-t1", "A1", {}, {2}, {-2}, {1}, std::nullopt, {}},
      {"sA2-v11-t00", "A2", {}, {1, 1}, {0, 0}, {0, 0}, std::nullopt, {}},
      {"sA2-v11-t10", "A2", {}, {1, 1}, {0, 0}, {1, 0}, std::nullopt, {}},
      {"qsA3-v111-t0", "A3", {{1, 3}}, {1, 0, 1}, {0, 0, 0}, {0, 0, 0}, std::nullopt, {}},
      {"qsA3-v111-t1", "A3", {{1, 3}}, {1, 0, 1}, {0, 0, 0}, {0, 1, 0}, std::nullopt, {}},
      {"qsA2-v11", "A2", {{1, 2}}, {1, 1}, {0, 0}, {0, 0}, std::nullopt, {}},
      {"qsA4-v1111", "A4", {{1, 4}, {2, 3}}, {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, std::nullopt, {}},
  };
}

std::vector<ShiftInstance> build_catalog() {
  std::vector<ShiftInstance> out;
  for (const auto& spec : catalog_specs()) out.push_back(build_instance(spec));
  return out;
}

ShiftInstance catalog_instance(const std::string& name) {
  for (const auto& spec : catalog_specs()) {
    if (spec.name == name) return build_instance(spec);
  }
  throw Error(ErrorKind::ValidationError, "no catalog instance named '" + name + "'");
}

}  // namespace iqg
