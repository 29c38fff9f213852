#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "okzar/report.hpp"

namespace {

int exit_code(okzar::ErrorKind kind) {
  switch (kind) {
    case okzar::ErrorKind::Input: return 2;
    case okzar::ErrorKind::Data: return 3;
    case okzar::ErrorKind::ModelViolation: return 4;
    case okzar::ErrorKind::Unsupported: return 5;
    case okzar::ErrorKind::Unbounded: return 6;
    case okzar::ErrorKind::ContractViolation: return 7;
    case okzar::ErrorKind::Internal: return 1;
  }
  return 1;
}

void report_error(const char* kind, const std::string& message) {
  okzar::Json err;
  err["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << err.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chamber decompositions and Newton-Okounkov bodies of Bott-Samelson varieties"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Cap on internal parallelism")->check(CLI::PositiveNumber);

  std::string file, divisor, restrict_to, hyperplane, out;

  auto* chambers = app.add_subcommand("chambers", "List the Mori/Zariski chambers");
  auto* pairing = app.add_subcommand("pairing", "Pair fixed divisors with nef facets");
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of a divisor");
  auto* nobody = app.add_subcommand("nobody", "Global Newton-Okounkov body, a restriction or a divisor slice");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the global body (Cox generators)");
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a divisor body");
  auto* plot = app.add_subcommand("plot", "SVG of the chambers cut by a hyperplane");
  auto* validate = app.add_subcommand("validate", "Check a variety document");

  for (auto* sub : {chambers, pairing, zariski, nobody, hilbert, ehrhart, plot, validate})
    sub->add_option("file", file, "Variety document (JSON)")->required();
  zariski->add_option("-d,--divisor", divisor, "Divisor expression, e.g. \"D2+2E2\"")->required();
  auto* nobody_divisor = nobody->add_option("--divisor", divisor, "Slice over this divisor");
  auto* nobody_restrict = nobody->add_option("--restrict", restrict_to, "Restrict to a named subcone");
  nobody_divisor->excludes(nobody_restrict);
  auto* hilbert_restrict = hilbert->add_option("--restrict", restrict_to, "Restrict to a named subcone");
  ehrhart->add_option("--divisor", divisor, "Divisor expression")->required();
  plot->add_option("--hyperplane", hyperplane, "Coefficients h with h.x = 1, e.g. \"1,1,1\"")->required();
  plot->add_option("--out", out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    okzar::Json report;
    if (hilbert->parsed()) {
      auto doc = okzar::parse_document(okzar::read_json_file(file));
      std::optional<std::string> r;
      if (hilbert_restrict->count()) r = restrict_to;
      report = okzar::cmd_hilbert(doc, r);
    } else {
      okzar::VarietyData v = okzar::load_variety_file(file);
      if (chambers->parsed()) {
        report = okzar::cmd_chambers(v);
      } else if (pairing->parsed()) {
        report = okzar::cmd_pairing(v);
      } else if (zariski->parsed()) {
        report = okzar::cmd_zariski(v, divisor);
      } else if (nobody->parsed()) {
        std::optional<std::string> d, r;
        if (nobody_divisor->count()) d = divisor;
        if (nobody_restrict->count()) r = restrict_to;
        report = okzar::cmd_nobody(v, d, r);
      } else if (ehrhart->parsed()) {
        report = okzar::cmd_ehrhart(v, divisor);
      } else if (plot->parsed()) {
        report = okzar::cmd_plot(v, hyperplane, out);
      } else {
        report = okzar::cmd_validate(v);
      }
    }
    std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const okzar::Error& e) {
    report_error(okzar::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return 1;
  }
}
