#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "divides/errors.hpp"

using namespace divides;

namespace {

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DivideError(ErrorCode::ParseError, "cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

// Runs `body` against stdout or the --out file.
template <class F>
int with_output(const std::string& out_path, F&& body) {
  if (out_path.empty()) return body(std::cout);
  std::ostringstream buf;
  const int code = body(buf);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DivideError(ErrorCode::ParseError, "cannot write " + out_path);
  out << buf.str();
  return code;
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidParameter:
    case ErrorCode::NotCoprime:
    case ErrorCode::EmptySequence:
    case ErrorCode::NonPositiveEntry:
    case ErrorCode::MonotonicityViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide curves on the pi/4 lattice: families, traces, braids, verification sweeps"};
  app.require_subcommand(1);

  std::string out_path, emit = "json", source, suite, range_text;
  int max_n = 2, max_dim = 6;

  auto* family = app.add_subcommand("family", "Build a family curve, e.g. P:3, Pm:-2, PIX:2, PX:1, B:3,7, C:6");
  family->add_option("spec", source, "family string")->required();
  family->add_option("--emit", emit, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  family->add_option("--out", out_path, "output file (default stdout)");

  auto* trace_cmd = app.add_subcommand("trace", "Trace a region given as JSON {\"stairs\":..,\"offset\":..}");
  trace_cmd->add_option("region", source, "region JSON file, or - for stdin")->required();
  trace_cmd->add_option("--emit", emit, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  trace_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification sweep and write a JSON report");
  verify->add_option("suite", suite, "tables, coefficient, genus or oracle")
      ->required()
      ->check(CLI::IsMember({"tables", "coefficient", "genus", "oracle"}));
  verify->add_option("--range", range_text, "parameter interval A..B");
  verify->add_option("--out", out_path, "output file (default stdout)");

  auto* braid = app.add_subcommand("braid", "Braid word and Alexander polynomial of a family or region file");
  braid->add_option("source", source, "family string, or a region JSON file path")->required();
  braid->add_option("--out", out_path, "output file (default stdout)");

  auto* census = app.add_subcommand("census", "Arc/circle counts of every staircase within bounds");
  census->add_option("--max-n", max_n, "maximal staircase length")->check(CLI::PositiveNumber);
  census->add_option("--max-dim", max_dim, "maximal a_n and b_1")->check(CLI::PositiveNumber);
  census->add_option("--emit", emit, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*family) {
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_family(source, emit, os); });
    }
    if (*trace_cmd) {
      const auto text = read_input(source);
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_trace(text, emit, os); });
    }
    if (*verify) {
      const auto range = range_text.empty() ? cli::default_range(suite) : cli::parse_range(range_text);
      const auto report = cli::cmd_verify(suite, range);
      const int code = with_output(out_path, [&](std::ostream& os) {
        os << report.to_json().dump(2) << '\n';
        return report.pass() ? cli::kPass : cli::kFail;
      });
      std::cerr << suite << ": " << report.records.size() - report.failed() << '/' << report.records.size()
                << " records pass\n";
      return code;
    }
    if (*braid) {
      const bool is_family = source.find(':') != std::string::npos;
      const auto text = is_family ? source : read_input(source);
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_braid(text, os); });
    }
    if (*census) {
      if (census->count("--emit") == 0) emit = "csv";
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_census(max_n, max_dim, emit, os); });
    }
  } catch (const DivideError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? cli::kUsage : cli::kFail;
  }
  return cli::kUsage;
}
