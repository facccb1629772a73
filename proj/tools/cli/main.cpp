#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  using namespace termlq::cli;

  CLI::App app{"Finite-horizon LQ control with a terminal-state constraint"};
  app.set_version_flag("--version", kToolVersion);

  std::string command;
  std::string out_path;
  RunOptions opt;
  app.add_option("command", command, "solve | learn | verify | reach | campaign")
      ->required()
      ->check(CLI::IsMember({"solve", "learn", "verify", "reach", "campaign"}));
  app.add_option("--instance", opt.instance_path, "Instance file (JSON)");
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--seed", opt.seed, "Run seed; required by learn, verify, campaign");
  app.add_option("--samples", opt.samples, "Samples per stage for learning")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--replay", opt.replay_path,
                 "Learn from a recorded transition log instead of simulating");
  app.add_option("--record", opt.record_path,
                 "Write the transitions used for learning to this log");
  app.add_option("--trials", opt.trials, "Campaign trial count")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "Campaign worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  const RunResult result = run(*parse_command(command), opt);
  if (!result.message.empty()) std::cerr << "termlq: " << result.message << '\n';

  if (out_path.empty()) {
    std::cout << serialize_report(result.report);
  } else {
    try {
      write_report(result.report, out_path);
    } catch (const termlq::Error& e) {
      std::cerr << "termlq: " << e.what() << '\n';
      return kExitIo;
    }
  }
  return result.exit_code;
}
