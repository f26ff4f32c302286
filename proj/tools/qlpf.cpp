// Command-line front end for the qlpf script language.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qlpf/error.hpp"
#include "qlpf/script.hpp"
#include "qlpf/selfcheck.hpp"

namespace {

enum class Mode { text, json, csv };

struct Printer {
  Mode mode = Mode::text;
  bool printed = false;
  bool spaced = false;  // previous record was a table or report

  void operator()(const qlpf::Json& record) {
    switch (mode) {
      case Mode::json:
        std::cout << record.dump() << '\n';
        break;
      case Mode::csv:
      case Mode::text: {
        const bool value = record.value("command", "") == "value";
        if (printed && (mode == Mode::csv || spaced || !value)) std::cout << '\n';
        std::cout << (mode == Mode::csv ? qlpf::render_csv(record) : qlpf::render_text(record));
        spaced = !value;
        break;
      }
    }
    std::cout.flush();
    printed = true;
  }
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qlpf::UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropy and splitting patterns of quasilinear p-forms"};
  app.require_subcommand(1);
  bool json = false, csv = false, serial = false;
  std::uint32_t max_degree = 512;
  std::size_t max_gens = 0;
  std::uint64_t seed = 1;
  auto* json_opt = app.add_flag("--json", json, "Emit one JSON object per output record");
  app.add_flag("--csv", csv, "Emit CSV with a header row")->excludes(json_opt);
  app.add_option("--max-degree", max_degree, "Degree guard for intermediate polynomials")
      ->check(CLI::Range(1u, 1u << 20));
  app.add_option("--max-gens", max_gens, "Default generator budget of pisp searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed of the randomized self-check");
  app.add_flag("--serial", serial, "Run every kernel on one thread");

  std::vector<std::string> files;
  auto* run = app.add_subcommand("run", "Execute script files ('-' reads standard input)");
  run->add_option("files", files, "Script files")->required();

  std::string text;
  auto* eval = app.add_subcommand("eval", "Execute a script given on the command line");
  eval->add_option("script", text, "Script text, e.g. 'field GF(2)(x,y); aniso <x,y,x+y>'")->required();

  unsigned table_p = 5;
  auto* table = app.add_subcommand("verify-table1", "Emit and verify the neighbor witness table");
  table->add_option("p", table_p, "Characteristic")->required();

  std::size_t instances = 40;
  auto* check = app.add_subcommand("selfcheck", "Randomized cross-checks of the defect routes");
  check->add_option("--count", instances, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Printer print{json ? Mode::json : csv ? Mode::csv : Mode::text};
  qlpf::SessionOptions options;
  options.max_degree = max_degree;
  options.max_gens = max_gens;
  options.exec = serial ? qlpf::Exec::serial : qlpf::Exec::parallel;
  std::string current = "<command line>";
  try {
    qlpf::Session session(options);
    if (*run) {
      for (const auto& path : files) {
        current = path;
        session.run(read_source(path), print);
      }
    } else if (*eval) {
      session.run(text, print);
    } else if (*table) {
      session.run("verify-table1 " + std::to_string(table_p), print);
    } else if (*check) {
      print(qlpf::run_selfcheck({seed, instances, options.exec}));
    }
    return 0;
  } catch (const qlpf::ParseError& e) {
    std::cerr << current << ":" << e.what() << '\n';
    return 2;
  } catch (const qlpf::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const qlpf::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qlpf::ArithmeticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
