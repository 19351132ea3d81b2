#include "iqg/relcheck.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "iqg/error.hpp"
#include "iqg/oracle.hpp"

namespace iqg {

namespace {

constexpr RelKind kAllKinds[] = {RelKind::HH,     RelKind::HB,     RelKind::BB1,    RelKind::BB2,
                                 RelKind::BB3,    RelKind::BB4,    RelKind::BB5,    RelKind::Serre1,
                                 RelKind::Serre2, RelKind::Serre3, RelKind::DEG,    RelKind::ChiFixed,
                                 RelKind::ChiA2n, RelKind::Identity};

Scalar S(Var v) { return Scalar::var(v); }
Scalar q(int k) { return Scalar::qpow(2 * k); }

Pins make_pins(Pins p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return p;
}

DMonomial single_dmon(const TorusElement& x) {
  if (x.terms().size() != 1) throw Error(ErrorKind::WrongCase, "block is not a single shift monomial");
  return x.terms().begin()->first;
}

std::uint64_t mix(std::uint64_t seed, const std::string& label) {
  return seed ^ (std::hash<std::string>{}(label) * 0x9e3779b97f4a7c15ULL);
}

// (x - q^c y)
Scalar lin(Var x, int c, Var y) { return S(x) - q(c) * S(y); }

}  // namespace

const char* to_string(RelKind k) {
  switch (k) {
    case RelKind::HH: return "HH";
    case RelKind::HB: return "HB";
    case RelKind::BB1: return "BB1";
    case RelKind::BB2: return "BB2";
    case RelKind::BB3: return "BB3";
    case RelKind::BB4: return "BB4";
    case RelKind::BB5: return "BB5";
    case RelKind::Serre1: return "Serre1";
    case RelKind::Serre2: return "Serre2";
    case RelKind::Serre3: return "Serre3";
    case RelKind::DEG: return "DEG";
    case RelKind::ChiFixed: return "ChiFixed";
    case RelKind::ChiA2n: return "ChiA2n";
    case RelKind::Identity: return "Identity";
  }
  return "?";
}

std::optional<RelKind> parse_relkind(const std::string& s) {
  for (RelKind k : kAllKinds) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool CheckReport::all_pass() const {
  return std::none_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.status == Status::Fail; });
}

std::size_t CheckReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const CheckEntry& e) { return e.status == s; }));
}

RelKind bb_kind(const SatakeDiagram& d, int i, int j) {
  const int t = d.tau[i];
  if (j == t) {
    if (i == j) return RelKind::BB2;
    if (d.c(i, t) == 0) return RelKind::BB1;
    if (d.c(i, t) == -1) return RelKind::BB3;
    throw Error(ErrorKind::WrongCase, "unexpected Cartan entry between i and tau i");
  }
  if (d.c(i, j) == 0) return RelKind::BB4;
  return RelKind::BB5;
}

std::optional<RelKind> serre_kind(const SatakeDiagram& d, int i, int j) {
  if (i == j) return std::nullopt;
  const int t = d.tau[i];
  if (d.c(i, j) == -1 && j != t && i != t) return RelKind::Serre1;
  if (d.c(i, j) == -1 && i == t) return RelKind::Serre2;
  if (d.c(i, t) == -1 && j == t) return RelKind::Serre3;
  return std::nullopt;
}

std::vector<RelationCase> dispatch(const SatakeDiagram& d) {
  std::vector<RelationCase> out;
  const int n = d.rank;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({RelKind::HH, i, j});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({RelKind::HB, i, j});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({bb_kind(d, i, j), i, j});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (auto k = serre_kind(d, i, j)) out.push_back({*k, i, j});
    }
  }
  for (int i = 0; i < n; ++i) out.push_back({RelKind::DEG, i, i});
  return out;
}

std::string case_label(const RelationCase& rc) {
  return std::string(to_string(rc.kind)) + "(" + std::to_string(rc.i + 1) + "," + std::to_string(rc.j + 1) + ")";
}

RelationChecker::RelationChecker(const GKLOImage& img, CheckOptions opts) : img_(img), opts_(std::move(opts)) {}

const Distribution& RelationChecker::B(int i, Var x) const {
  auto key = std::make_pair(i, x);
  auto it = bcache_.find(key);
  if (it == bcache_.end()) it = bcache_.emplace(key, img_.B(i, x)).first;
  return it->second;
}

namespace {

int exchange_c(const SatakeDiagram& d, int i, int j) { return i == j ? 2 : d.c(i, j); }

Distribution serre_lhs(const Distribution& b1, const Distribution& b2, const Distribution& bj) {
  Distribution inner = bracket_q(b2, bj, q(1));
  return symmetrize(bracket_q(b1, inner, q(-1)), var::u1, var::u2);
}

}  // namespace

Distribution RelationChecker::eval_lhs(const RelationCase& rc) const {
  const int i = rc.i, j = rc.j;
  const auto& d = img_.instance().diagram;
  switch (rc.kind) {
    case RelKind::HH: {
      Scalar a = img_.Xi(i, var::u).scalar(), b = img_.Xi(j, var::v).scalar();
      return Distribution::scalar(a * b - b * a);
    }
    case RelKind::HB:
      return multiply_dist(Distribution::scalar(img_.Xi(i, var::u).scalar()), B(j, var::v));
    case RelKind::BB1:
    case RelKind::BB4:
      return bracket_q(B(i, var::u), B(j, var::v), Scalar(1));
    case RelKind::BB2:
    case RelKind::BB3:
    case RelKind::BB5: {
      const int c = rc.kind == RelKind::BB2 ? 2 : (rc.kind == RelKind::BB3 ? -1 : exchange_c(d, i, j));
      Distribution r = scale(lin(var::u, c, var::v), multiply_dist(B(i, var::u), B(j, var::v)));
      r += scale(lin(var::v, c, var::u), multiply_dist(B(j, var::v), B(i, var::u)));
      return r;
    }
    case RelKind::Serre1:
    case RelKind::Serre2:
    case RelKind::Serre3:
      return serre_lhs(B(i, var::u1), B(i, var::u2), B(j, var::v));
    default:
      return {};
  }
}

Distribution RelationChecker::residue_dist(const FactorCurrent& gamma, const std::string& label, Var partner,
                                           std::vector<GammaRecord>* gammas) const {
  auto rs = residues(gamma);
  Distribution out;
  Distribution expansion;
  for (const auto& r : rs) {
    out.add({make_pins({{gamma.var(), r.point}, {partner, r.point.inverse()}}), r.residue, {}});
    expansion.add({{{gamma.var(), r.point}}, r.residue, {}});
  }
  if (gammas) gammas->push_back({label, gamma, expansion, false, false});
  return out;
}

Distribution RelationChecker::eval_rhs(const RelationCase& rc, std::vector<GammaRecord>* gammas) const {
  const int i = rc.i, j = rc.j;
  const auto& d = img_.instance().diagram;
  const Scalar U = S(var::u), V = S(var::v);
  switch (rc.kind) {
    case RelKind::HB: {
      const int c = d.c(i, j), ct = d.c(d.tau[i], j);
      const Scalar Ui = U.inverse();
      Scalar R = (q(c) * U - V) * (q(ct) * Ui - V) / ((U - q(c) * V) * (Ui - q(ct) * V));
      return scale(R, multiply_dist(B(j, var::v), Distribution::scalar(img_.Xi(i, var::u).scalar())));
    }
    case RelKind::BB1: {
      Scalar xi = img_.Xi(i, var::u).scalar();
      const Scalar k = opts_.bb1_alt_normalization ? q(1) - q(-1) : q(2) - Scalar(1);
      FactorCurrent gamma(var::u, xi / k);
      Distribution r = residue_dist(gamma, case_label(rc), var::v, gammas);
      if (opts_.bb1 == BB1Convention::I) {
        // Theta_i(v) at v = u^-1 expands Xi_{tau i}(u) near zero; the excess
        // over the tau i reading is a series with the linked pin v = u^-1.
        Scalar excess = (xi - img_.Xi(d.tau[i], var::u).scalar()) / k;
        if (!excess.is_zero()) r.add({{{var::v, Target(Monomial(var::u, -1))}}, excess, {}});
      }
      return r;
    }
    case RelKind::BB2:
    case RelKind::BB3: {
      Scalar k = rc.kind == RelKind::BB2 ? (q(-1) - q(1)) : (q(2) - Scalar(1));
      FactorCurrent gamma(var::u, (U - U.inverse()) * img_.Xi(i, var::u).scalar() / k);
      return residue_dist(gamma, case_label(rc), var::v, gammas);
    }
    case RelKind::Serre2: {
      const Scalar U1 = S(var::u1), U2 = S(var::u2);
      FactorCurrent gamma(var::u1, (U1 - U1.inverse()) * img_.Xi(i, var::u1).scalar());
      Distribution r = residue_dist(gamma, case_label(rc), var::u2, gammas);
      Scalar pre = V / ((U1 - q(1) * V) * (U2 - q(1) * V));
      return scale(pre, multiply_dist(r, B(j, var::v)));
    }
    case RelKind::Serre3: {
      const Scalar U2 = S(var::u2), U2i = U2.inverse();
      const Scalar xi = img_.Xi(i, var::u2).scalar();
      Distribution out;
      int n = 0;
      for (const auto& t : B(i, var::u1).term_list()) {
        const Target& a = t.pins.front().second;
        const Scalar A(a);
        Scalar pre = (Scalar(1) + q(2)) * (U2 - U2i) * U2i / ((q(1) * A - U2i) * (U2i - q(2) * A.inverse()));
        FactorCurrent gamma(var::u2, pre * xi);
        auto rs = residues(gamma);
        Distribution expansion;
        for (const auto& r : rs) {
          out.add({make_pins({{var::u1, a}, {var::u2, r.point}, {var::v, r.point.inverse()}}), r.residue * t.coeff,
                   t.dmon});
          expansion.add({{{var::u2, r.point}}, r.residue, {}});
        }
        if (gammas) {
          gammas->push_back({case_label(rc) + "#" + std::to_string(++n), gamma, expansion, false, false});
        }
      }
      return symmetrize(out, var::u1, var::u2);
    }
    default:
      return {};
  }
}

WordSum RelationChecker::lhs_words(const RelationCase& rc) const {
  const int i = rc.i, j = rc.j;
  const auto& d = img_.instance().diagram;
  auto Bl = [](int node, Var x) { return Letter{node, x, false}; };
  switch (rc.kind) {
    case RelKind::HB:
      return {{Scalar(1), {Letter{i, var::u, true}, Bl(j, var::v)}}};
    case RelKind::BB1:
    case RelKind::BB4:
      return {{Scalar(1), {Bl(i, var::u), Bl(j, var::v)}}, {Scalar(-1), {Bl(j, var::v), Bl(i, var::u)}}};
    case RelKind::BB2:
    case RelKind::BB3:
    case RelKind::BB5: {
      const int c = rc.kind == RelKind::BB2 ? 2 : (rc.kind == RelKind::BB3 ? -1 : exchange_c(d, i, j));
      return {{lin(var::u, c, var::v), {Bl(i, var::u), Bl(j, var::v)}},
              {lin(var::v, c, var::u), {Bl(j, var::v), Bl(i, var::u)}}};
    }
    case RelKind::Serre1:
    case RelKind::Serre2:
    case RelKind::Serre3: {
      WordSum out;
      for (auto [a, b] : {std::make_pair(var::u1, var::u2), std::make_pair(var::u2, var::u1)}) {
        Letter X = Bl(i, a), Y = Bl(i, b), Z = Bl(j, var::v);
        out.push_back({Scalar(1), {X, Y, Z}});
        out.push_back({-q(1), {X, Z, Y}});
        out.push_back({-q(-1), {Y, Z, X}});
        out.push_back({Scalar(1), {Z, Y, X}});
      }
      return out;
    }
    default:
      return {};
  }
}

std::optional<WordSum> RelationChecker::rhs_words(const RelationCase& rc) const {
  const auto& d = img_.instance().diagram;
  switch (rc.kind) {
    case RelKind::HB: {
      const int c = d.c(rc.i, rc.j), ct = d.c(d.tau[rc.i], rc.j);
      const Scalar U = S(var::u), V = S(var::v), Ui = U.inverse();
      Scalar R = (q(c) * U - V) * (q(ct) * Ui - V) / ((U - q(c) * V) * (Ui - q(ct) * V));
      return WordSum{{R, {Letter{rc.j, var::v, false}, Letter{rc.i, var::u, true}}}};
    }
    case RelKind::BB4:
    case RelKind::BB5:
    case RelKind::Serre1:
      return WordSum{};
    default:
      return std::nullopt;
  }
}

void RelationChecker::run_oracle(CheckEntry& e, const Distribution& lhs, const Distribution& rhs,
                                 const RelationCase& rc) const {
  WordSum lw = lhs_words(rc);
  auto rw = rhs_words(rc);
  e.oracle = randomized_relation(img_, lw, rw ? &*rw : nullptr, rhs, opts_.trials, mix(opts_.seed, e.label),
                                 e.status == Status::Pass);
  (void)lhs;
}

CheckEntry RelationChecker::check(const RelationCase& rc) const {
  CheckEntry e;
  e.rc = rc;
  e.label = case_label(rc);
  auto t0 = std::chrono::steady_clock::now();
  if (rc.kind == RelKind::Serre2) e.rhs_mode = "prefactor evaluated at pins";
  if (rc.kind == RelKind::Serre3) e.rhs_mode = "prefactor folded into residue expansion";
  if (rc.kind == RelKind::BB1) e.rhs_mode = opts_.bb1 == BB1Convention::TauI ? "taui" : "i";
  bool have_sides = false;
  Distribution lhs, rhs;
  try {
    if (rc.kind == RelKind::DEG) {
      Scalar k = img_.leading_K(rc.i);
      e.status = Status::Pass;
      e.note = "leading coefficient " + k.str();
    } else {
      lhs = eval_lhs(rc);
      rhs = eval_rhs(rc, &e.gammas);
      have_sides = true;
      e.lhs_terms = lhs.size();
      e.rhs_terms = rhs.size();
      e.discrepancies = canonicalize_compare(lhs, rhs);
      e.status = e.discrepancies.empty() ? Status::Pass : Status::Fail;
      if (rc.kind == RelKind::HH) e.note = "scalar currents";
    }
  } catch (const Error& err) {
    e.status = Status::Fail;
    e.note = err.what();
  }
  if (opts_.oracle && have_sides) {
    try {
      if (rc.kind == RelKind::HH) {
        e.oracle = randomized_equal(lhs, rhs, instance_symbols(img_.instance()), opts_.trials, mix(opts_.seed, e.label),
                                    e.status == Status::Pass);
      } else {
        run_oracle(e, lhs, rhs, rc);
      }
    } catch (const Error& err) {
      e.oracle.ran = false;
      e.note += (e.note.empty() ? "" : "; ") + std::string("oracle: ") + err.what();
    }
  }
  if (opts_.series) {
    for (auto& g : e.gammas) {
      g.series_checked = true;
      try {
        g.series_ok = truncated_series_check(g.gamma, g.expansion, opts_.order, mix(opts_.seed, g.label));
      } catch (const Error&) {
        g.series_ok = false;
      }
    }
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

CheckEntry RelationChecker::chi_suite(RelKind kind) const {
  CheckEntry e;
  e.rc = {kind, 0, 0};
  e.label = to_string(kind);
  auto t0 = std::chrono::steady_clock::now();
  const auto& inst = img_.instance();
  const auto& d = inst.diagram;
  std::vector<std::pair<int, int>> node_pairs;
  if (kind == RelKind::ChiFixed) {
    for (int i : d.fixed_nodes()) {
      for (int j : d.fixed_nodes()) node_pairs.emplace_back(i, j);
    }
  } else {
    for (int i = 0; i < d.rank; ++i) {
      const int t = d.tau[i];
      if (t > i && d.c(i, t) == -1) {
        for (int a : {i, t}) {
          for (int b : {i, t}) node_pairs.emplace_back(a, b);
        }
      }
    }
  }
  const auto symbols = instance_symbols(inst);
  bool any = false, all_pass = true, all_consistent = true, all_numeric = true;
  int trials = 0, redraws = 0;
  for (auto [i, j] : node_pairs) {
    const int c = i == j ? 2 : d.c(i, j);
    const auto& bi = img_.blocks(i);
    const auto& bj = img_.blocks(j);
    for (std::size_t x = 0; x < bi.size(); ++x) {
      for (std::size_t y = 0; y < bj.size(); ++y) {
        const Block& a = bi[x];
        const Block& b = bj[y];
        if (i == j && x == y) continue;
        if (i == j && (single_dmon(a.chi) * single_dmon(b.chi)).is_one()) continue;
        if (i != j && (single_dmon(a.chi) * single_dmon(b.chi)).is_one() && !(a.index == 0 && b.index == 0)) continue;
        any = true;
        const Scalar pa(a.point), pb(b.point);
        Scalar cl = pa - q(c) * pb, cr = q(c) * pa - pb;
        TorusElement lhs = cl * (a.chi * b.chi);
        TorusElement rhs = cr * (b.chi * a.chi);
        bool ok = lhs == rhs;
        const std::string pair_label = a.label() + "*" + b.label();
        e.cases.push_back(pair_label);
        if (!ok) {
          all_pass = false;
          TorusElement diff = lhs - rhs;
          for (const auto& [dm, s] : diff.terms()) {
            Discrepancy disc;
            disc.pins = make_pins({{var::u, a.point * Target(Monomial(var::Q, -2))},
                                   {var::v, b.point * Target(Monomial(var::Q, -2))}});
            disc.dmon = dm;
            auto li = lhs.terms().find(dm);
            auto ri = rhs.terms().find(dm);
            disc.lhs = li == lhs.terms().end() ? Scalar() : li->second;
            disc.rhs = ri == rhs.terms().end() ? Scalar() : ri->second;
            e.discrepancies.push_back(disc);
          }
          e.note += (e.note.empty() ? "" : " ") + pair_label;
        }
        if (opts_.oracle) {
          auto v = randomized_torus({{cl, {a.chi, b.chi}}}, {{cr, {b.chi, a.chi}}}, symbols, opts_.trials,
                                    mix(opts_.seed, e.label + pair_label), ok);
          trials += v.trials;
          redraws += v.redraws;
          all_consistent = all_consistent && v.consistent;
          all_numeric = all_numeric && v.numeric_equal;
        }
      }
    }
  }
  if (!any) {
    e.status = Status::Skipped;
    e.note = "no applicable block pairs";
  } else {
    e.status = all_pass ? Status::Pass : Status::Fail;
    if (opts_.oracle) e.oracle = {true, all_numeric, all_consistent, trials, redraws, opts_.seed};
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

namespace {

bool wanted(const CheckOptions& o, RelKind k) {
  return o.kinds.empty() || std::find(o.kinds.begin(), o.kinds.end(), k) != o.kinds.end();
}

bool wanted_pair(const CheckOptions& o, int i, int j) {
  return o.pairs.empty() || std::find(o.pairs.begin(), o.pairs.end(), std::make_pair(i, j)) != o.pairs.end();
}

CheckEntry scalar_identity(const std::string& name, const Scalar& lhs, const Scalar& rhs, const CheckOptions& opts,
                           const std::set<Var>& symbols) {
  CheckEntry e;
  e.rc = {RelKind::Identity, 0, 0};
  e.label = "identity:" + name;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = lhs == rhs;
  e.status = ok ? Status::Pass : Status::Fail;
  if (!ok) e.discrepancies.push_back({{}, {}, lhs, rhs});
  if (opts.oracle) {
    e.oracle = randomized_equal(Distribution::scalar(lhs), Distribution::scalar(rhs), symbols, opts.trials,
                                mix(opts.seed, e.label), ok);
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

}  // namespace

std::vector<CheckEntry> a2n_residue_checks(const GKLOImage& img, int i0) {
  const auto& inst = img.instance();
  const int t0 = inst.tau(i0);
  // Orient the pair as i -> j.
  const int i = inst.arrow(i0, t0) ? i0 : t0;
  const int j = inst.tau(i);
  const auto ext = img.extend_a2n(i);
  std::vector<CheckEntry> out;
  const Scalar U = S(var::u), V = S(var::v);
  FactorCurrent gi(var::u, (U - U.inverse()) * img.Xi(i, var::u).scalar() / (q(2) - Scalar(1)));
  FactorCurrent gj(var::v, (V - V.inverse()) * img.Xi(j, var::v).scalar() / (q(2) - Scalar(1)));
  const auto ri = residues(gi);
  const auto rj = residues(gj);
  auto find = [](const std::vector<ResidueTerm>& rs, const Target& p) -> const ResidueTerm* {
    for (const auto& r : rs) {
      if (r.point == p) return &r;
    }
    return nullptr;
  };
  const std::string pair = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  {
    CheckEntry e;
    e.rc = {RelKind::Identity, i, j};
    e.label = "identity:residue-symmetry" + pair;
    e.status = Status::Pass;
    for (const auto& r : ri) {
      if (r.point.mono.is_one() && (r.point.coeff == GaussRational(1) || r.point.coeff == GaussRational(-1))) continue;
      const ResidueTerm* m = find(rj, r.point.inverse());
      Scalar other = m ? m->residue : Scalar();
      if (!(other == r.residue)) {
        e.status = Status::Fail;
        e.discrepancies.push_back({{{var::u, r.point}}, {}, r.residue, other});
      }
    }
    Distribution ei, ej;
    for (const auto& r : ri) ei.add({{{var::u, r.point}}, r.residue, {}});
    for (const auto& r : rj) ej.add({{{var::v, r.point}}, r.residue, {}});
    e.gammas.push_back({e.label + ":u", gi, ei, false, false});
    e.gammas.push_back({e.label + ":v", gj, ej, false, false});
    out.push_back(std::move(e));
  }
  const Target qinv(Monomial(var::Q, -2));
  auto block = [&](int node, int index) -> const Block& {
    for (const auto& b : img.blocks(node)) {
      if (b.index == index) return b;
    }
    throw Error(ErrorKind::WrongCase, "missing block");
  };
  for (int r = 1; r <= ext.n; ++r) {
    const Block& a = block(i, r);
    const Block& b = block(j, ext.prime(r));
    Distribution da, db;
    for (const auto& [dm, c] : a.chi.terms()) da += Distribution::pinned(var::u, a.point * qinv, c, dm);
    for (const auto& [dm, c] : b.chi.terms()) db += Distribution::pinned(var::v, b.point * qinv, c, dm);
    for (int order = 0; order < 2; ++order) {
      CheckEntry e;
      e.rc = {RelKind::Identity, i, j};
      e.label = "identity:pinned-pair-residue" + pair + (order == 0 ? "ab" : "ba") + "[r=" + std::to_string(r) + "]";
      Distribution prod = order == 0 ? scale(U - q(-1) * V, multiply_dist(da, db))
                                     : scale(V - q(-1) * U, multiply_dist(db, da));
      e.status = Status::Pass;
      if (prod.size() != 1) {
        e.status = Status::Fail;
        e.note = "expected a single pinned scalar term";
      } else {
        const auto term = prod.term_list().front();
        const Target* pu = nullptr;
        const Target* pv = nullptr;
        for (const auto& [x, tg] : term.pins) {
          if (x == var::u) pu = &tg;
          if (x == var::v) pv = &tg;
        }
        const ResidueTerm* m = pu ? find(ri, *pu) : nullptr;
        Scalar expect = m ? m->residue : Scalar();
        if (!term.dmon.is_one() || !pu || !pv || !(*pv == pu->inverse()) || !(term.coeff == expect)) {
          e.status = Status::Fail;
          e.discrepancies.push_back({term.pins, term.dmon, term.coeff, expect});
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

CheckReport run_all(const ShiftInstance& inst, const CheckOptions& opts) {
  CheckReport rep;
  rep.instance = inst.name;
  rep.seed = opts.seed;
  GKLOImage img(inst, opts.corruption);
  RelationChecker rc(img, opts);
  for (const auto& c : dispatch(inst.diagram)) {
    if (!wanted(opts, c.kind) || !wanted_pair(opts, c.i, c.j)) continue;
    rep.entries.push_back(rc.check(c));
  }
  const auto& d = inst.diagram;
  if (wanted(opts, RelKind::ChiFixed) && !d.fixed_nodes().empty()) rep.entries.push_back(rc.chi_suite(RelKind::ChiFixed));
  bool a2n = false;
  for (int i = 0; i < d.rank; ++i) a2n = a2n || (d.tau[i] != i && d.c(i, d.tau[i]) == -1);
  if (a2n && wanted(opts, RelKind::ChiA2n)) rep.entries.push_back(rc.chi_suite(RelKind::ChiA2n));
  if (a2n && wanted(opts, RelKind::Identity)) {
    for (int i = 0; i < d.rank; ++i) {
      if (d.tau[i] > i && d.c(i, d.tau[i]) == -1) {
        for (auto& e : a2n_residue_checks(img, i)) {
          if (opts.series) {
            for (auto& g : e.gammas) {
              g.series_checked = true;
              g.series_ok = truncated_series_check(g.gamma, g.expansion, opts.order, mix(opts.seed, g.label));
            }
          }
          rep.entries.push_back(std::move(e));
        }
      }
    }
  }
  return rep;
}

CheckReport identity_suite(const CheckOptions& opts) {
  CheckReport rep;
  rep.instance = "identities";
  rep.seed = opts.seed;
  const Scalar one(1);
  const Scalar U = S(var::u), V = S(var::v), U1 = S(var::u1), U2 = S(var::u2);
  const Scalar w = Scalar::var(var::W(1, 1), 2), p = Scalar::var(var::W(2, 1), 2);
  const std::set<Var> symbols{var::Q, var::u, var::v, var::u1, var::u2, var::W(1, 1), var::W(2, 1)};
  auto ratio = [&](int c, const Scalar& x, const Scalar& y) {
    return (q(c) * x - y) * (q(c) * x.inverse() - y) / ((x - q(c) * y) * (x.inverse() - q(c) * y));
  };
  auto add = [&](const std::string& name, const Scalar& l, const Scalar& r) {
    rep.entries.push_back(scalar_identity(name, l, r, opts, symbols));
  };
  for (int c : {2, 0, -1}) add("ratio-at-one(c=" + std::to_string(c) + ")", ratio(c, U, one), one);
  const Scalar Ui = U.inverse(), Vi = V.inverse();
  add("ratio-c2-lower",
      ((one - V * Ui) * (one - q(2) * U * V) * (one - q(2) * V * Ui) * (one - U * V)).inverse(),
      q(-4) * ratio(2, U, V) *
          ((one - q(-2) * V * Ui) * (one - U * V) * (one - V * Ui) * (one - q(-2) * U * V)).inverse());
  add("ratio-c2-raise",
      ((one - q(-2) * Ui * Vi) * (one - U * Vi) * (one - Ui * Vi) * (one - q(-2) * U * Vi)).inverse(),
      q(4) * ratio(2, U, V) * ((one - Ui * Vi) * (one - q(2) * U * Vi) * (one - q(2) * Ui * Vi) * (one - U * Vi)).inverse());
  add("ratio-c-1", (one - q(1) * V * Ui) * (one - q(1) * U * V),
      q(2) * ratio(-1, U, V) * (one - q(-1) * V * Ui) * (one - q(-1) * U * V));
  add("kappa-symmetry", GKLOImage::kappa(U), GKLOImage::kappa(Ui));
  {
    // constant-term conversion at u1 = u2 = 1, v = p/q
    Scalar pre = V / ((U1 - q(1) * V) * (U2 - q(1) * V));
    Substitution s{{var::u1, Target()}, {var::u2, Target()}, {var::v, Target(Monomial{{var::W(2, 1), 2}, {var::Q, -2}})}};
    add("serre-constant-conversion", q(-1) * p / (one - p).pow(2), pre.substitute(s));
  }
  for (int k : {1, -1}) {
    const Scalar wk = w.pow(k);
    const Scalar wki = wk.inverse();
    Scalar lhs = (q(-1) - q(1)) * (q(-2) * wk - q(2) * wki) * p / ((q(-1) * wk - p) * (q(1) * wki - p));
    Scalar pre = (q(-1) - q(1)) * (U1 - q(2) * U2) * V / ((U1 - q(1) * V) * (U2 - q(1) * V));
    Monomial wm(var::W(1, 1), 2 * k);
    Substitution s{{var::u1, Target(wm * Monomial(var::Q, -2))},
                   {var::u2, Target(wm.inverse() * Monomial(var::Q, 2))},
                   {var::v, Target(Monomial{{var::W(2, 1), 2}, {var::Q, -2}})}};
    const std::string tag = k > 0 ? "+" : "-";
    add("serre-paired-conversion" + tag, lhs, pre.substitute(s));
    Scalar sum = (q(-1) - q(1)) * q(2) * wki / (q(1) * wki - p) -
                 q(-1) * (q(-1) - q(1)) * wk / (q(-1) * wk - p) * (q(2) * wki - q(-1) * p) / (q(1) * wki - p);
    add("serre-coefficient-sum" + tag, sum, lhs);
  }
  {
    Substitution s{{var::u2, Target(Monomial(var::v, -1))}};
    Scalar a = -q(2) * (one - V * V) * (one - q(-1) * U1.inverse() * V) /
               ((one - q(1) * U1.inverse() * V) * (one - q(2) * U1 * V));
    Scalar b = (one - V * V) / (one - q(2) * U1 * U2.inverse());
    Scalar target = (one - V * V) * (one - q(2)) / ((one - q(1) * U1.inverse() * V) * (one - q(2) * U1 * V));
    add("theta-tau-simplification", (a + b).substitute(s), target);
  }
  {
    // Move B_i(u1) past Theta_i(u2) K_{tau i} using the unshifted
    // Cartan-B relation (c_ii = 2, c_{tau i,i} = -1), then pass to the
    // normalized current.
    auto H = [&](const Scalar& x, const Scalar& y) {
      return (one - q(-2) * x / y) / (one - q(2) * x / y) * (one - q(-1) * x * y) / (one - q(1) * x * y);
    };
    const Scalar U1i = U1.inverse();
    Scalar conv = (one - U2 * U2) / (one - q(1) * U2 * U2);
    Scalar t1 = q(1) * (U1i * V - q(1) * U1i * U2) / (one - q(2) * U1i * U2) * H(U2, U1).inverse() * q(-3) * conv;
    Scalar t2 = q(-2) * (q(1) * U1i * U2 - U1i * V) / (one - q(-2) * U1i * U2) * conv;
    Scalar target = (V * V - one) * (one - q(2)) / ((one - q(1) * U1i * V) * (one - q(2) * U1 * V));
    Substitution s{{var::v, Target(Monomial(var::u2, -1))}};
    add("theta-simplification", (t1 + t2).substitute(s), target.substitute(s));
  }
  {
    Monomial wm(var::W(1, 1), 2);
    Substitution s{{var::u, Target(wm * Monomial(var::Q, -2))}, {var::v, Target(wm.inverse() * Monomial(var::Q, 2))}};
    Scalar l = Scalar::qpow(3) * (U - q(-1) * V) * (one - q(-3) * w * w) / (one - q(-1) * w * w);
    Scalar r = U * Scalar::qpow(-1) - Ui * Scalar::qpow(1);
    add("pinned-pair-prefactor", l.substitute(s), r.substitute(s));
  }
  return rep;
}

}  // namespace iqg
