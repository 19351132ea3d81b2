#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iqg/igklo.hpp"

namespace iqg {

enum class RelKind { HH, HB, BB1, BB2, BB3, BB4, BB5, Serre1, Serre2, Serre3, DEG, ChiFixed, ChiA2n, Identity };

const char* to_string(RelKind k);
std::optional<RelKind> parse_relkind(const std::string& s);

struct RelationCase {
  RelKind kind;
  int i = 0;  // 0-based
  int j = 0;
};

// The BB kind of the ordered pair (i, j); exactly one applies.
RelKind bb_kind(const SatakeDiagram& d, int i, int j);
// The Serre kind of the ordered pair (i, j), if any.
std::optional<RelKind> serre_kind(const SatakeDiagram& d, int i, int j);
// HH and HB for every ordered pair, the BB and Serre kinds, DEG per node.
std::vector<RelationCase> dispatch(const SatakeDiagram& d);

// Ordered operator words for the oracle: coeff * L_1 L_2 ... L_n, where a
// letter is B_node(var) or the scalar current Xi_node(var).
struct Letter {
  int node = 0;
  Var var = var::u;
  bool xi = false;
};
struct Word {
  Scalar coeff;
  std::vector<Letter> letters;
};
using WordSum = std::vector<Word>;

// coeff * prod of torus elements, for block identities.
struct TorusWord {
  Scalar coeff;
  std::vector<TorusElement> factors;
};

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct OracleVerdict {
  bool ran = false;
  bool numeric_equal = false;
  bool consistent = false;  // numeric verdict agrees with the symbolic one
  int trials = 0;
  int redraws = 0;
  std::uint64_t seed = 0;
};

struct GammaRecord {
  std::string label;
  FactorCurrent gamma;
  Distribution expansion;
  bool series_checked = false;
  bool series_ok = false;
};

struct CheckEntry {
  RelationCase rc;
  std::string label;  // e.g. "BB2(1,1)" or an identity name
  Status status = Status::Skipped;
  std::vector<Discrepancy> discrepancies;
  std::string note;
  double seconds = 0;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string rhs_mode;  // prefactor handling, for the report
  OracleVerdict oracle;
  std::vector<GammaRecord> gammas;
  std::vector<std::string> cases;  // block pairs exercised by the exchange suites
};

struct CheckReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<CheckEntry> entries;
  bool all_pass() const;
  std::size_t count(Status s) const;
};

enum class BB1Convention { TauI, I };

struct CheckOptions {
  BB1Convention bb1 = BB1Convention::TauI;
  // BB1 right side over (q - q^-1) instead of (q^2 - 1); the image only
  // satisfies the latter.
  bool bb1_alt_normalization = false;
  bool oracle = true;
  int trials = 20;
  std::uint64_t seed = 20260101;
  bool series = true;
  int order = 8;
  // Empty means all kinds; otherwise only the listed kinds run.
  std::vector<RelKind> kinds;
  // Restrict to these 0-based ordered pairs (i, j); empty means all.
  std::vector<std::pair<int, int>> pairs;
  Corruption corruption;
};

class RelationChecker {
 public:
  RelationChecker(const GKLOImage& img, CheckOptions opts);

  const GKLOImage& image() const { return img_; }
  const Distribution& B(int i, Var x) const;

  Distribution eval_lhs(const RelationCase& rc) const;
  // gammas receives every rational function expanded by residues.
  Distribution eval_rhs(const RelationCase& rc, std::vector<GammaRecord>* gammas = nullptr) const;
  WordSum lhs_words(const RelationCase& rc) const;
  // Word form of the right side where one exists (HB and zero right sides).
  std::optional<WordSum> rhs_words(const RelationCase& rc) const;

  CheckEntry check(const RelationCase& rc) const;
  CheckEntry chi_suite(RelKind kind) const;

 private:
  Distribution residue_dist(const FactorCurrent& gamma, const std::string& label, Var partner,
                            std::vector<GammaRecord>* gammas) const;
  void run_oracle(CheckEntry& e, const Distribution& lhs, const Distribution& rhs, const RelationCase& rc) const;

  const GKLOImage& img_;
  CheckOptions opts_;
  mutable std::map<std::pair<int, Var>, Distribution> bcache_;
};

std::string case_label(const RelationCase& rc);

CheckReport run_all(const ShiftInstance& inst, const CheckOptions& opts = {});

// Standalone rational and delta identities used in the correctness argument.
CheckReport identity_suite(const CheckOptions& opts = {});

// Residue symmetry and the pinned block-product residue forms on one A2n pair.
std::vector<CheckEntry> a2n_residue_checks(const GKLOImage& img, int i);

}  // namespace iqg
