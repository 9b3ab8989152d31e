#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "cli.hpp"
#include "pdt/error.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric P-difference variety toolkit"};
  std::string command;
  std::string path;
  int deg = 0;
  long box = 0;
  bool json = false;
  bool quiet = false;
  std::string names;
  for (const auto& c : pdt::cli::commands()) names += (names.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("input", path, "Input document (JSON), or - for stdin")->required();
  auto* deg_opt = app.add_option("--bounds-deg", deg, "Maximum certificate degree");
  auto* box_opt = app.add_option("--bounds-box", box, "Maximum certificate coefficient size")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "Emit the result document as JSON");
  app.add_flag("--quiet", quiet, "Print nothing; report through the exit code");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  pdt::cli::RunOptions opts;
  if (*deg_opt) opts.bounds_deg = deg;
  if (*box_opt) opts.bounds_box = box;
  if (const char* env = std::getenv("PDT_DEFAULT_BOUNDS")) {
    opts.env_bounds = pdt::cli::parse_bounds_spec(env);
    if (!opts.env_bounds) {
      std::cerr << "pdt: PDT_DEFAULT_BOUNDS must look like \"deg,box\"\n";
      return 1;
    }
  }

  try {
    const auto input = pdt::cli::parse_input(read_all(path));
    const auto doc = pdt::cli::run(command, input, opts);
    if (!quiet) {
      if (json) {
        std::cout << doc.to_json().dump(2) << "\n";
      } else {
        std::cout << pdt::cli::render_text(doc);
      }
    }
    return doc.exit_code();
  } catch (const pdt::Error& e) {
    if (!quiet) std::cerr << "pdt: " << e.what() << "\n";
    return pdt::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    if (!quiet) std::cerr << "pdt: " << e.what() << "\n";
    return 1;
  }
}
