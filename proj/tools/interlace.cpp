#include "interlace/commands.hpp"
#include "interlace/rational.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct RawFlags {
  std::string input;
  std::string output;
  std::string width;
  std::string eps;
  std::string delta;
  std::size_t r = 0;
  std::uint64_t guard = 1'000'000;
  unsigned threads = 0;
  bool audit = false;
  std::string mode = "assignment";
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interlacing-family computations on rational instances"};
  app.require_subcommand(1);
  RawFlags raw;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"mixedchar", "mixed characteristic polynomial of the instance matrices"},
      {"verify-identity", "compare expected char poly with the mixed char poly"},
      {"certify", "barrier certificate for the largest-root bound"},
      {"assign", "greedy assignment along the interlacing family"},
      {"partition", "partition vectors into r blocks with the norm bound"},
      {"bruteforce", "exhaustive oracle for assignments or partitions"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", raw.input, "instance JSON file")->required();
    sub->add_option("-o,--output", raw.output, "write the report here instead of stdout");
    sub->add_option("--width", raw.width, "root bracket width as p/q (default 1/2^40)");
    sub->add_option("--guard-outcomes,--guard", raw.guard, "maximum number of enumerated outcomes");
    sub->add_option("--threads", raw.threads, "worker threads, 0 for all");
    if (name == "mixedchar") sub->add_flag("--audit", raw.audit, "use the literal derivative path and list subset terms");
    if (name == "certify") sub->add_option("--eps", raw.eps, "trace bound as p/q");
    if (name == "partition" || name == "bruteforce") sub->add_option("--r", raw.r, "number of blocks");
    if (name == "partition") sub->add_option("--delta", raw.delta, "norm bound as p/q");
    if (name == "bruteforce")
      sub->add_option("--mode", raw.mode, "assignment or partition")
          ->check(CLI::IsMember({"assignment", "partition"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : interlace::kExitParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  interlace::CommandFlags flags;
  try {
    if (!raw.width.empty()) flags.width = interlace::parse_rational(raw.width);
    if (!raw.eps.empty()) flags.eps = interlace::parse_rational(raw.eps);
    if (!raw.delta.empty()) flags.delta = interlace::parse_rational(raw.delta);
  } catch (const interlace::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return interlace::kExitParse;
  }
  if (flags.width <= 0) {
    std::cerr << "error: --width must be positive\n";
    return interlace::kExitParse;
  }
  if (raw.r != 0) flags.r = raw.r;
  flags.guard = raw.guard;
  flags.threads = raw.threads;
  flags.audit = raw.audit;
  flags.mode = raw.mode;

  std::string text;
  if (!read_file(raw.input, text)) {
    std::cerr << "error: cannot read " << raw.input << '\n';
    return interlace::kExitParse;
  }

  const interlace::CommandResult result = interlace::run_command(command, text, flags);
  const std::string dumped = result.report.dump(2) + "\n";
  if (raw.output.empty()) {
    std::cout << dumped;
  } else {
    std::ofstream out(raw.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << raw.output << '\n';
      return interlace::kExitFailure;
    }
    out << dumped;
  }
  return result.exit_code;
}
