// lcp-certify: error-bound certificates for LCP(M, q) with Nekrasov and
// B-Nekrasov matrices.
#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "lcpcert/commands.hpp"

int main(int argc, char** argv) {
  using lcpcert::Command;
  using lcpcert::OutputFormat;

  CLI::App app{"Certified a-priori error bounds for linear complementarity problems"};
  app.require_subcommand(1);

  lcpcert::RunConfig cfg;
  std::string format;
  std::optional<double> epsilon;
  std::optional<std::size_t> trials;

  const std::map<std::string, Command> commands{{"classify", Command::Classify},
                                                {"bound", Command::Bound},
                                                {"sweep", Command::Sweep},
                                                {"verify", Command::Verify},
                                                {"lcp", Command::Lcp}};
  const std::map<std::string, std::string> descriptions{
      {"classify", "Report matrix class membership (SDD, Z, Nekrasov, B, B-Nekrasov, H, P)"},
      {"bound", "Evaluate the four LCP error bounds"},
      {"sweep", "Tabulate the epsilon-parameterized bound against the parameter-free one (CSV)"},
      {"verify", "Compare the bounds against a brute-force oracle and run the lemma checks"},
      {"lcp", "Solve LCP(M, q) by basis enumeration and certify random trial points"}};

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--matrix", cfg.matrix_path, "Matrix file (plain text or CSV)")->required();
    sub->add_option("--q", cfg.q_path, "Vector file for q (lcp)");
    sub->add_option("--epsilon", epsilon, "Parameter for the epsilon-parameterized bounds");
    sub->add_option("--grid", cfg.grid, "Number of interior sweep points")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    sub->add_option("--samples", cfg.samples, "Interior oracle samples");
    sub->add_option("--seed", cfg.seed, "Seed for oracle samples and trial points");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--theorem", cfg.theorem, "Restrict to one bound")
        ->check(CLI::IsMember(
            {"all", "gp-nekrasov", "new-nekrasov", "gp-bnekrasov", "new-bnekrasov"}));
    sub->add_option("--trials", trials, "Lemma trials (verify) or trial points (lcp)");
    sub->callback([&cfg, command = command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcpcert::kExitError;
  }

  cfg.epsilon = epsilon;
  cfg.trials = trials;
  if (format == "json") cfg.format = OutputFormat::Json;
  if (format == "csv") cfg.format = OutputFormat::Csv;
  if (format == "text") cfg.format = OutputFormat::Text;

  const lcpcert::CommandResult result = lcpcert::run_command(cfg);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
