// One pass/fail line per acceptance criterion, all checks exact.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iqg/error.hpp"
#include "iqg/igklo.hpp"
#include "iqg/oracle.hpp"
#include "iqg/relcheck.hpp"

using namespace iqg;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr int kTrials = 20;

int failures = 0;

void line(int n, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << " [PRIMARY] " << title << ": " << (ok ? "PASS" : "FAIL") << "  (" << detail << ")"
            << std::endl;
  if (!ok) ++failures;
}

bool is_relation(RelKind k) {
  switch (k) {
    case RelKind::ChiFixed:
    case RelKind::ChiA2n:
    case RelKind::Identity:
      return false;
    default:
      return true;
  }
}

struct Run {
  ShiftInstance inst;
  CheckReport report;
  double seconds = 0;
};

}  // namespace

int main() {
  CheckOptions opts;
  opts.trials = kTrials;
  opts.seed = kSeed;
  opts.order = 8;

  std::vector<Run> runs;
  double total = 0;
  for (auto& inst : build_catalog()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = run_all(inst, opts);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += s;
    runs.push_back({inst, std::move(rep), s});
  }

  // 1. Every applicable relation passes with no discrepancies.
  {
    bool ok = runs.size() == 10;
    std::size_t checked = 0;
    double worst = 0;
    std::string first_bad;
    for (const auto& r : runs) {
      worst = std::max(worst, r.seconds);
      std::size_t deg = 0;
      for (const auto& e : r.report.entries) {
        if (!is_relation(e.rc.kind)) continue;
        ++checked;
        if (e.rc.kind == RelKind::DEG) ++deg;
        if (e.status != Status::Pass || !e.discrepancies.empty()) {
          ok = false;
          if (first_bad.empty()) first_bad = r.inst.name + " " + e.label + " " + e.note;
        }
      }
      if (deg != static_cast<std::size_t>(r.inst.rank())) ok = false;
    }
    ok = ok && worst <= 120 && total <= 900;
    std::ostringstream d;
    d << checked << " relation checks on " << runs.size() << " instances, slowest instance " << worst << "s, total "
      << total << "s";
    if (!first_bad.empty()) d << "; first failure " << first_bad;
    line(1, "full relation verification", ok, d.str());
  }

  // 2. Block exchange identities on fixed nodes and on A2n pairs, with coverage of
  // every sign combination and of the constant block.
  {
    bool ok = true;
    int fixed_ran = 0, a2n_ran = 0;
    std::size_t pairs = 0;
    std::set<std::string> signs;
    bool constant_block = false;
    for (const auto& r : runs) {
      const auto& d = r.inst.diagram;
      bool a2n = false;
      for (int i = 0; i < d.rank; ++i) a2n = a2n || (d.tau[i] != i && d.c(i, d.tau[i]) == -1);
      bool saw_a2n = false;
      for (const auto& e : r.report.entries) {
        if (e.rc.kind == RelKind::ChiFixed && e.status != Status::Skipped) {
          ++fixed_ran;
          ok = ok && e.status == Status::Pass;
          for (const auto& c : e.cases) {
            // "chi+[1,0]*chi-[1,2]"
            const auto star = c.find('*');
            signs.insert(std::string{c[3], c[star + 4]});
            if (c.find(",0]") != std::string::npos) constant_block = true;
          }
          pairs += e.cases.size();
        }
        if (e.rc.kind == RelKind::ChiA2n) {
          saw_a2n = true;
          ++a2n_ran;
          ok = ok && e.status == Status::Pass && !e.cases.empty();
          pairs += e.cases.size();
        }
      }
      if (a2n && !saw_a2n) ok = false;
    }
    ok = ok && fixed_ran >= 6 && a2n_ran == 2 && signs.size() == 4 && constant_block;
    line(2, "block exchange suites", ok,
         std::to_string(fixed_ran) + " fixed-node suites, " + std::to_string(a2n_ran) + " A2n suites, " +
             std::to_string(pairs) + " block pairs, " + std::to_string(signs.size()) + " sign patterns, constant block " +
             (constant_block ? "covered" : "missing"));
  }

  // 3. Structural symmetries of the currents.
  {
    bool ok = true;
    int n = 0;
    const Scalar U = Scalar::var(var::u), Ui = U.inverse();
    if (!(GKLOImage::kappa(U) == GKLOImage::kappa(Ui))) ok = false;
    for (const auto& r : runs) {
      GKLOImage img(r.inst);
      for (int i = 0; i < img.rank(); ++i) {
        const int t = img.tau(i);
        ok = ok && img.Wb(i, U) == img.Wb(t, Ui);
        ok = ok && img.Zb(i, U) == img.Zb(t, Ui);
        ok = ok && img.Xi(i).inverted().scalar() == img.Xi(t).scalar();
        n += 3;
      }
    }
    line(3, "structural symmetries", ok, std::to_string(n + 1) + " exact current identities");
  }

  // 4. Top degree of the Cartan current and the DegreeMismatch trigger.
  {
    bool ok = true;
    int nodes = 0, triggered = 0;
    for (const auto& r : runs) {
      GKLOImage img(r.inst);
      for (int i = 0; i < img.rank(); ++i) {
        ++nodes;
        ok = ok && img.Xi(i).top_degree() == r.inst.ell[img.tau(i)];
        try {
          img.leading_K(i);
        } catch (const Error&) {
          ok = false;
        }
      }
      ShiftInstance bad = r.inst;
      bad.v[0] += 1;
      GKLOImage corrupt(bad);
      bool hit = false;
      for (int i = 0; i < corrupt.rank(); ++i) {
        try {
          corrupt.leading_K(i);
        } catch (const Error& e) {
          hit = hit || e.kind() == ErrorKind::DegreeMismatch;
        }
      }
      triggered += hit;
      ok = ok && hit;
    }
    line(4, "degree extraction", ok,
         std::to_string(nodes) + " nodes match ell[tau i], " + std::to_string(triggered) +
             " corrupted instances raise DegreeMismatch");
  }

  // 5. Every residue expansion survives the truncated series check.
  {
    bool ok = true;
    int gammas = 0, symmetry = 0;
    for (const auto& r : runs) {
      for (const auto& e : r.report.entries) {
        for (const auto& g : e.gammas) {
          ++gammas;
          ok = ok && g.series_checked && g.series_ok;
        }
        if (e.label.rfind("identity:residue-symmetry", 0) == 0) {
          ++symmetry;
          ok = ok && e.status == Status::Pass;
        }
      }
    }
    ok = ok && gammas > 0 && symmetry == 2;
    line(5, "residue expansion soundness", ok,
         std::to_string(gammas) + " expansions checked to order 8, " + std::to_string(symmetry) +
             " A2n residue symmetries");
  }

  // 6. Numeric oracle agrees with every symbolic verdict of criteria 1 and 2.
  {
    bool ok = true;
    int checks = 0, disagreements = 0;
    for (const auto& r : runs) {
      for (const auto& e : r.report.entries) {
        if (e.rc.kind == RelKind::DEG || e.rc.kind == RelKind::Identity || e.status == Status::Skipped) continue;
        ++checks;
        if (!e.oracle.ran || e.oracle.trials < kTrials || !e.oracle.consistent) {
          ok = false;
          ++disagreements;
        }
      }
    }
    line(6, "oracle concordance", ok,
         std::to_string(checks) + " verdicts, " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(kTrials) + " trials each, seed " + std::to_string(kSeed));
  }

  // 7. Standalone identities.
  {
    CheckReport rep = identity_suite(opts);
    bool ok = rep.all_pass();
    for (const auto& e : rep.entries) ok = ok && e.oracle.ran && e.oracle.consistent;
    const char* required[] = {"identity:ratio-at-one(c=2)",        "identity:ratio-at-one(c=0)",
                              "identity:ratio-at-one(c=-1)",       "identity:ratio-c2-lower",
                              "identity:ratio-c2-raise",           "identity:ratio-c-1",
                              "identity:serre-constant-conversion", "identity:serre-paired-conversion+",
                              "identity:serre-paired-conversion-", "identity:theta-tau-simplification",
                              "identity:theta-simplification"};
    for (const char* label : required) {
      ok = ok && std::any_of(rep.entries.begin(), rep.entries.end(), [label](const CheckEntry& e) {
             return e.label == label && e.status == Status::Pass;
           });
    }
    line(7, "identity regressions", ok,
         std::to_string(rep.count(Status::Pass)) + "/" + std::to_string(rep.entries.size()) + " identities exact");
  }

  // 8. Each corruption is caught with a localized support.
  {
    bool ok = true;
    std::ostringstream d;
    const char* names[] = {"drop kappa", "flip wp", "drop constant"};
    for (int flag = 0; flag < 3; ++flag) {
      CheckOptions o = opts;
      o.trials = 5;
      o.series = false;
      Corruption& c = o.corruption;
      (flag == 0 ? c.drop_kappa : flag == 1 ? c.flip_wp : c.drop_constant) = true;
      int caught = 0;
      bool consistent = true;
      for (const auto& r : runs) {
        CheckReport rep = run_all(r.inst, o);
        for (const auto& e : rep.entries) {
          if (e.oracle.ran && !e.oracle.consistent) consistent = false;
          if (e.status == Status::Fail && !e.discrepancies.empty() && !e.discrepancies.front().pins.empty()) ++caught;
        }
      }
      ok = ok && caught > 0 && consistent;
      d << (flag ? ", " : "") << names[flag] << ": " << caught << " failing checks";
    }
    line(8, "negative controls", ok, d.str());
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
