#include "iqg/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <iomanip>
#include <sstream>

#include "iqg/error.hpp"

namespace iqg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

GaussRational parse_rational(const json& j) {
  if (j.is_number_integer()) return GaussRational(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad("not a rational: " + j.get<std::string>());
    q.canonicalize();
    return GaussRational(q, mpq_class(0));
  }
  if (j.is_array() && j.size() == 2) {
    GaussRational re = parse_rational(j[0]), im = parse_rational(j[1]);
    return re + GaussRational::i() * im;
  }
  bad("zeta values are integers, \"p/q\" strings or [re, im] pairs");
}

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string pin_str(const Pins& p) { return pins_str(p); }

}  // namespace

ShiftInstance parse_instance_object(const json& j) {
  if (!j.is_object()) bad("instance must be an object");
  InstanceSpec s;
  s.name = j.value("name", std::string("inline"));
  if (!j.contains("type") || !j["type"].is_string()) bad("instance needs a type such as \"A3\"");
  s.type = j["type"].get<std::string>();
  if (j.contains("tau")) {
    if (!j["tau"].is_array()) bad("tau is a list of cycles");
    for (const auto& c : j["tau"]) s.tau_cycles.push_back(int_vector(c, "tau cycle"));
  }
  if (!j.contains("lambda") || !j.contains("mu")) bad("instance needs lambda and mu pairing vectors");
  s.lambda = int_vector(j["lambda"], "lambda");
  s.mu = int_vector(j["mu"], "mu");
  if (j.contains("theta")) s.theta = int_vector(j["theta"], "theta");
  if (j.contains("orientation")) {
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["orientation"]) {
      auto e = int_vector(a, "arrow");
      if (e.size() != 2) bad("arrows are [from, to] pairs");
      arrows.emplace_back(e[0], e[1]);
    }
    s.orientation = arrows;
  }
  if (j.contains("zeta")) {
    if (!j["zeta"].is_object()) bad("zeta maps node numbers to values");
    for (const auto& [k, v] : j["zeta"].items()) {
      int node = 0;
      try {
        node = std::stoi(k);
      } catch (const std::exception&) {
        bad("zeta key is not a node number: " + k);
      }
      s.zeta[node] = parse_rational(v);
    }
  }
  const auto n = cartan_matrix(s.type).size();
  if (s.lambda.size() != n || s.mu.size() != n || (!s.theta.empty() && s.theta.size() != n)) {
    throw Error(ErrorKind::ValidationError, "lambda, mu and theta need one entry per node of " + s.type);
  }
  ShiftInstance inst = build_instance(s);
  // Multiplicities are always recomputed; a stale given value is an error.
  if (j.contains("v") && int_vector(j["v"], "v") != inst.v) {
    throw Error(ErrorKind::ValidationError, "given v disagrees with the one solved from lambda and mu");
  }
  return inst;
}

std::vector<ShiftInstance> parse_instances(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "all") return build_catalog();
    return {catalog_instance(name)};
  }
  if (j.is_object()) return {parse_instance_object(j)};
  if (j.is_array()) {
    std::vector<ShiftInstance> out;
    for (const auto& x : j) {
      for (auto& inst : parse_instances(x)) out.push_back(std::move(inst));
    }
    return out;
  }
  bad("instance must be a catalog name, \"all\", an object or a list");
}

std::vector<RelKind> parse_relations(const std::string& csv) {
  std::vector<RelKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto k = parse_relkind(item);
    if (!k) throw Error(ErrorKind::ValidationError, "unknown relation kind '" + item + "'");
    out.push_back(*k);
  }
  return out;
}

BB1Convention parse_bb1(const std::string& s) {
  if (s == "taui") return BB1Convention::TauI;
  if (s == "i") return BB1Convention::I;
  throw Error(ErrorKind::ValidationError, "bb1 convention is 'taui' or 'i'");
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) bad("config must be an object");
  if (j.contains("schema") && j["schema"] != kConfigSchema) bad("unsupported config schema");
  RunConfig cfg;
  cfg.instances = parse_instances(j.value("instance", json("all")));
  auto& o = cfg.options;
  if (j.contains("relations")) {
    const auto& r = j["relations"];
    if (r.is_string()) {
      o.kinds = parse_relations(r.get<std::string>());
    } else if (r.is_array()) {
      for (const auto& x : r) {
        if (!x.is_string()) bad("relations are kind names");
        auto k = parse_relkind(x.get<std::string>());
        if (!k) throw Error(ErrorKind::ValidationError, "unknown relation kind '" + x.get<std::string>() + "'");
        o.kinds.push_back(*k);
      }
    } else {
      bad("relations must be a string or a list");
    }
  }
  if (j.contains("pairs")) {
    for (const auto& p : j["pairs"]) {
      auto e = int_vector(p, "pair");
      if (e.size() != 2) bad("pairs are [i, j] with 1-based nodes");
      o.pairs.emplace_back(e[0] - 1, e[1] - 1);
    }
  }
  if (j.contains("oracle")) {
    const auto& x = j["oracle"];
    if (!x.is_object()) bad("oracle must be an object");
    o.oracle = x.value("enabled", true);
    o.trials = x.value("trials", o.trials);
    o.seed = x.value("seed", o.seed);
    o.order = x.value("order", o.order);
    o.series = x.value("series", true);
    if (o.trials < 1 || o.order < 0) throw Error(ErrorKind::ValidationError, "trials must be positive and order nonnegative");
  }
  o.bb1 = parse_bb1(j.value("bb1_convention", std::string("taui")));
  o.bb1_alt_normalization = j.value("bb1_alt_normalization", false);
  if (j.contains("corruption")) {
    const auto& c = j["corruption"];
    o.corruption.drop_kappa = c.value("drop_kappa", false);
    o.corruption.flip_wp = c.value("flip_wp", false);
    o.corruption.drop_constant = c.value("drop_constant", false);
  }
  cfg.identities = j.value("identities", true);
  const auto fmt = j.value("format", std::string("text"));
  if (fmt != "text" && fmt != "structured") throw Error(ErrorKind::ValidationError, "format is 'text' or 'structured'");
  cfg.structured = fmt == "structured";
  validate_filter(cfg);
  return cfg;
}

RunConfig load_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str());
}

void validate_filter(const RunConfig& cfg) {
  const auto& o = cfg.options;
  for (const auto& inst : cfg.instances) {
    const auto& d = inst.diagram;
    for (auto [i, j] : o.pairs) {
      if (i < 0 || j < 0 || i >= d.rank || j >= d.rank) {
        throw Error(ErrorKind::ValidationError, "pair out of range for " + inst.name);
      }
    }
    if (o.kinds.empty()) continue;
    std::set<RelKind> present;
    for (const auto& c : dispatch(d)) present.insert(c.kind);
    bool a2n = false;
    for (int i = 0; i < d.rank; ++i) a2n = a2n || (d.tau[i] != i && d.c(i, d.tau[i]) == -1);
    if (!d.fixed_nodes().empty()) present.insert(RelKind::ChiFixed);
    if (a2n) present.insert(RelKind::ChiA2n);
    present.insert(RelKind::Identity);
    for (RelKind k : o.kinds) {
      if (!present.count(k)) {
        throw Error(ErrorKind::ValidationError,
                    std::string(to_string(k)) + " does not apply to instance " + inst.name);
      }
    }
  }
}

bool RunResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.all_pass(); });
}

namespace {

bool entry_ok(const CheckEntry& e) {
  if (e.status == Status::Fail) return false;
  if (e.oracle.ran && !e.oracle.consistent) return false;
  for (const auto& g : e.gammas) {
    if (g.series_checked && !g.series_ok) return false;
  }
  return true;
}

}  // namespace

RunResult run_report(const RunConfig& cfg) {
  RunResult res;
  for (const auto& inst : cfg.instances) res.reports.push_back(run_all(inst, cfg.options));
  const auto& k = cfg.options.kinds;
  if (cfg.identities && (k.empty() || std::find(k.begin(), k.end(), RelKind::Identity) != k.end())) {
    res.reports.push_back(identity_suite(cfg.options));
  }
  // An oracle disagreement or a failed series check counts as a failure.
  for (auto& r : res.reports) {
    for (auto& e : r.entries) {
      if (e.status == Status::Pass && !entry_ok(e)) {
        e.status = Status::Fail;
        e.note += (e.note.empty() ? "" : "; ") + std::string("cross-check disagreement");
      }
    }
  }
  return res;
}

json instance_json(const ShiftInstance& inst) {
  json j;
  j["name"] = inst.name;
  j["type"] = inst.diagram.type;
  j["tau"] = tau_cycles(inst.diagram.tau);
  j["lambda"] = inst.w;
  j["mu"] = inst.ell;
  j["v"] = inst.v;
  j["theta"] = inst.theta;
  j["wp2"] = inst.wp2;
  json arrows = json::array();
  for (int a = 0; a < inst.rank(); ++a) {
    for (int b = 0; b < inst.rank(); ++b) {
      if (inst.arrow(a, b)) arrows.push_back({a + 1, b + 1});
    }
  }
  j["orientation"] = arrows;
  return j;
}

json to_json(const CheckEntry& e) {
  json j;
  j["label"] = e.label;
  j["kind"] = to_string(e.rc.kind);
  j["i"] = e.rc.i + 1;
  j["j"] = e.rc.j + 1;
  j["status"] = to_string(e.status);
  j["seconds"] = e.seconds;
  j["lhs_terms"] = e.lhs_terms;
  j["rhs_terms"] = e.rhs_terms;
  if (!e.rhs_mode.empty()) j["rhs_mode"] = e.rhs_mode;
  if (!e.note.empty()) j["note"] = e.note;
  if (e.oracle.ran) {
    j["oracle"] = {{"trials", e.oracle.trials},
                   {"redraws", e.oracle.redraws},
                   {"numeric_equal", e.oracle.numeric_equal},
                   {"consistent", e.oracle.consistent},
                   {"seed", e.oracle.seed}};
  }
  json series = json::array();
  for (const auto& g : e.gammas) {
    if (g.series_checked) series.push_back({{"label", g.label}, {"ok", g.series_ok}});
  }
  if (!series.empty()) j["series"] = series;
  if (!e.cases.empty()) j["cases"] = e.cases;
  json disc = json::array();
  for (const auto& d : e.discrepancies) {
    disc.push_back({{"support", pin_str(d.pins)}, {"shift", dmon_str(d.dmon)}, {"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}});
  }
  j["discrepancies"] = disc;
  return j;
}

json to_json(const CheckReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"instance", r.instance},
          {"seed", r.seed},
          {"all_pass", r.all_pass()},
          {"counts", {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skipped", r.count(Status::Skipped)}}},
          {"entries", entries}};
}

json report_json(const RunResult& res, const RunConfig& cfg) {
  json reports = json::array();
  for (const auto& r : res.reports) reports.push_back(to_json(r));
  json instances = json::array();
  for (const auto& inst : cfg.instances) instances.push_back(instance_json(inst));
  const auto& o = cfg.options;
  return {{"schema", kReportSchema},
          {"all_pass", res.all_pass()},
          {"settings",
           {{"oracle", o.oracle},
            {"trials", o.trials},
            {"seed", o.seed},
            {"order", o.order},
            {"bb1_convention", o.bb1 == BB1Convention::TauI ? "taui" : "i"},
            {"bb1_alt_normalization", o.bb1_alt_normalization},
            {"corruption",
             {{"drop_kappa", o.corruption.drop_kappa},
              {"flip_wp", o.corruption.flip_wp},
              {"drop_constant", o.corruption.drop_constant}}}}},
          {"instances", instances},
          {"reports", reports}};
}

std::string report_text(const RunResult& res) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : res.reports) {
    os << "== " << r.instance << " (seed " << r.seed << ")\n";
    for (const auto& e : r.entries) {
      os << "  " << std::left << std::setw(5) << to_string(e.status) << " " << std::setw(44) << e.label
         << std::right << std::fixed << std::setprecision(3) << e.seconds << "s";
      if (e.oracle.ran) {
        os << "  oracle " << e.oracle.trials << " trials " << (e.oracle.consistent ? "consistent" : "DISAGREES");
      }
      if (!e.note.empty()) os << "  (" << e.note << ")";
      os << "\n";
      for (const auto& d : e.discrepancies) {
        os << "      at " << pins_str(d.pins) << " " << dmon_str(d.dmon) << "\n"
           << "        lhs " << d.lhs.str() << "\n"
           << "        rhs " << d.rhs.str() << "\n";
      }
    }
    pass += r.count(Status::Pass);
    fail += r.count(Status::Fail);
    skipped += r.count(Status::Skipped);
  }
  os << "summary: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace iqg
