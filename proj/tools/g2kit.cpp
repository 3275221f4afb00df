#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "g2kit/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run the g2kit verification suites"};
  int p = 5, precision = 8;
  std::uint64_t seed = 1;
  std::string suite = "all", out, format = "json", extension = "none";
  app.add_option("--p", p, "Residue characteristic, a prime ≥ 5");
  app.add_option("--precision", precision, "Coefficients kept after the leading one");
  app.add_option("--extension", extension, "none, unramified or ramified");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--suite", suite, "octonion, triality, norms, filtration, strata or all");
  app.add_option("--out", out, "Write the JSON report to this path");
  app.add_option("--format", format, "Standard output format")->check(CLI::IsMember({"json", "text"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!g2kit::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'\n";
    return 2;
  }
  g2kit::FieldConfig cfg;
  try {
    cfg.p = p;
    cfg.precision = precision;
    cfg.ext = g2kit::extension_from_string(extension);
    cfg.validate();
  } catch (const g2kit::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  g2kit::SuiteReport rep = g2kit::run_suite(suite, cfg, seed);
  std::string json = rep.to_json().dump(2) + "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << json;
  }
  if (format == "text")
    std::cout << rep.text();
  else
    std::cout << json;
  return rep.exit_code();
}
