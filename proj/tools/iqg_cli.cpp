#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "iqg/error.hpp"
#include "iqg/igklo.hpp"
#include "iqg/report.hpp"

using namespace iqg;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Flags {
  std::string config;
  std::string instance;
  std::string relations;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> order;
  std::string bb1 = "";
  std::string format = "";
  bool alt_normalization = false;
  bool no_oracle = false;
  std::vector<std::string> corrupt;
  std::string generator = "B1";
};

// --instance takes a catalog name, "all", or an inline JSON object.
json instance_arg(const std::string& s) {
  if (!s.empty() && s.front() == '{') {
    try {
      return json::parse(s);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("inline instance is not valid JSON: ") + e.what());
    }
  }
  return json(s);
}

RunConfig build_config(const Flags& f) {
  json j = json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read config file '" + f.config + "'");
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("config is not valid JSON: ") + e.what());
    }
  }
  if (!f.instance.empty()) j["instance"] = instance_arg(f.instance);
  if (!f.relations.empty()) j["relations"] = f.relations;
  if (!j.contains("oracle")) j["oracle"] = json::object();
  if (f.trials) j["oracle"]["trials"] = *f.trials;
  if (f.seed) j["oracle"]["seed"] = *f.seed;
  if (f.order) j["oracle"]["order"] = *f.order;
  if (f.no_oracle) j["oracle"]["enabled"] = false;
  if (!f.bb1.empty()) j["bb1_convention"] = f.bb1;
  if (f.alt_normalization) j["bb1_alt_normalization"] = true;
  if (!f.format.empty()) j["format"] = f.format;
  for (const auto& c : f.corrupt) {
    if (c == "kappa") {
      j["corruption"]["drop_kappa"] = true;
    } else if (c == "wp") {
      j["corruption"]["flip_wp"] = true;
    } else if (c == "constant") {
      j["corruption"]["drop_constant"] = true;
    } else {
      throw Error(ErrorKind::ValidationError, "unknown corruption '" + c + "' (kappa, wp, constant)");
    }
  }
  return parse_config(j);
}

int emit(const RunResult& res, const RunConfig& cfg) {
  if (cfg.structured) {
    std::cout << report_json(res, cfg).dump(2) << "\n";
  } else {
    std::cout << report_text(res);
  }
  return res.all_pass() ? kExitPass : kExitFail;
}

int cmd_validate(const Flags& f) {
  RunConfig cfg = build_config(f);
  json out = json::array();
  for (const auto& inst : cfg.instances) out.push_back(instance_json(inst));
  if (cfg.structured) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& inst : out) std::cout << "valid: " << inst.dump() << "\n";
  }
  return kExitPass;
}

int cmd_image(const Flags& f) {
  RunConfig cfg = build_config(f);
  const auto& g = f.generator;
  std::size_t pos = g.rfind("Xi", 0) == 0 ? 2 : (g.rfind("B", 0) == 0 ? 1 : std::string::npos);
  if (pos == std::string::npos || pos >= g.size()) {
    throw Error(ErrorKind::ValidationError, "generator is B<node> or Xi<node>, e.g. B1 or Xi2");
  }
  int node = 0;
  try {
    node = std::stoi(g.substr(pos)) - 1;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ValidationError, "bad node in generator '" + g + "'");
  }
  for (const auto& inst : cfg.instances) {
    if (node < 0 || node >= inst.rank()) throw Error(ErrorKind::ValidationError, "node out of range for " + inst.name);
    GKLOImage img(inst, cfg.options.corruption);
    std::cout << "== " << inst.name << " " << g << "(u)\n";
    if (pos == 2) {
      std::cout << img.Xi(node).str() << "\n";
    } else {
      std::cout << img.B(node).str() << "\n";
    }
  }
  return kExitPass;
}

int cmd_check(const Flags& f) {
  RunConfig cfg = build_config(f);
  return emit(run_report(cfg), cfg);
}

int cmd_identities(const Flags& f) {
  Flags g = f;
  if (g.instance.empty() && g.config.empty()) g.instance = "all";
  RunConfig cfg = build_config(g);
  RunResult res;
  res.reports.push_back(identity_suite(cfg.options));
  for (const auto& inst : cfg.instances) {
    CheckOptions o = cfg.options;
    o.kinds = {RelKind::Identity};
    CheckReport r = run_all(inst, o);
    if (!r.entries.empty()) res.reports.push_back(std::move(r));
  }
  return emit(res, cfg);
}

int cmd_catalog(const Flags& f) {
  json out = json::array();
  for (const auto& inst : build_catalog()) out.push_back(instance_json(inst));
  if (f.format == "structured") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& inst : out) {
      std::cout << std::left << std::setw(14) << inst["name"].get<std::string>() << " type "
                << inst["type"].get<std::string>() << "  tau " << inst["tau"].dump() << "  v " << inst["v"].dump()
                << "  theta " << inst["theta"].dump() << "\n";
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of iGKLO representations of shifted affine iquantum groups"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* c) {
    c->add_option("--config", f.config, "JSON run configuration");
    c->add_option("--instance", f.instance, "catalog name, 'all', or inline JSON instance");
    c->add_option("--format", f.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };
  auto checking = [&f](CLI::App* c) {
    c->add_option("--relations", f.relations, "comma-separated kinds, e.g. BB3,Serre3");
    c->add_option("--trials", f.trials, "oracle trials per check");
    c->add_option("--seed", f.seed, "oracle seed");
    c->add_option("--order", f.order, "truncation order of the series check");
    c->add_option("--bb1-convention", f.bb1, "taui or i")->check(CLI::IsMember({"taui", "i"}));
    c->add_flag("--bb1-alt-normalization", f.alt_normalization, "BB1 right side over (q - q^-1)");
    c->add_flag("--no-oracle", f.no_oracle, "skip numeric cross-checks");
    c->add_option("--corrupt", f.corrupt, "negative control: kappa, wp, constant");
  };

  auto* validate = app.add_subcommand("validate", "validate an instance or config");
  common(validate);
  auto* image = app.add_subcommand("image", "print the image of a generator in normal form");
  common(image);
  image->add_option("--generator", f.generator, "B<node> or Xi<node>");
  image->add_option("--corrupt", f.corrupt, "negative control: kappa, wp, constant");
  auto* check = app.add_subcommand("check", "verify every applicable relation");
  common(check);
  checking(check);
  auto* identities = app.add_subcommand("identities", "run the identity suite");
  common(identities);
  checking(identities);
  auto* catalog = app.add_subcommand("catalog", "list the built-in instances");
  catalog->add_option("--format", f.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(f);
    if (*image) return cmd_image(f);
    if (*check) return cmd_check(f);
    if (*identities) return cmd_identities(f);
    if (*catalog) return cmd_catalog(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
