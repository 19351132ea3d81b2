#include <pybind11/pybind11.h>

#include <string>

#include "iqg/error.hpp"
#include "iqg/igklo.hpp"
#include "iqg/report.hpp"

namespace py = pybind11;
using namespace iqg;
using nlohmann::json;

namespace {

// JSON strings cross the boundary; the Python side decodes them.
std::string catalog_json() {
  json out = json::array();
  for (const auto& inst : build_catalog()) out.push_back(instance_json(inst));
  return out.dump();
}

std::string check_json(const std::string& config) {
  RunConfig cfg = load_config_text(config);
  return report_json(run_report(cfg), cfg).dump();
}

std::string identities_json(const std::string& config) {
  RunConfig cfg = load_config_text(config);
  RunResult res;
  res.reports.push_back(identity_suite(cfg.options));
  return report_json(res, cfg).dump();
}

std::string validate_json(const std::string& instance) {
  json out = json::array();
  for (const auto& inst : parse_instances(json::parse(instance))) out.push_back(instance_json(inst));
  return out.dump();
}

std::string image_str(const std::string& instance, const std::string& generator, int node) {
  auto insts = parse_instances(json::parse(instance));
  if (insts.size() != 1) throw Error(ErrorKind::ValidationError, "image needs exactly one instance");
  GKLOImage img(insts.front());
  if (node < 1 || node > img.rank()) throw Error(ErrorKind::ValidationError, "node out of range");
  if (generator == "B") return img.B(node - 1).str();
  if (generator == "Xi") return img.Xi(node - 1).str();
  throw Error(ErrorKind::ValidationError, "generator is 'B' or 'Xi'");
}

}  // namespace

PYBIND11_MODULE(_iqgklo, m) {
  m.doc() = "Exact relation checks for iGKLO images";
  static py::exception<Error> exc(m, "IqgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    } catch (const json::exception& e) {
      py::set_error(exc, (std::string("ParseError: ") + e.what()).c_str());
    }
  });
  m.attr("CONFIG_SCHEMA") = kConfigSchema;
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.def("catalog_json", &catalog_json);
  m.def("check_json", &check_json, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("identities_json", &identities_json, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("validate_json", &validate_json, py::arg("instance"));
  m.def("image", &image_str, py::arg("instance"), py::arg("generator"), py::arg("node"));
}
