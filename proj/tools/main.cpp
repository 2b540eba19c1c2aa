#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efflevi/errors.hpp"
#include "efflevi/json_io.hpp"
#include "efflevi/rational.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw efflevi::invalid_input("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct SubcommandSpec {
  const char* name;
  const char* description;
};

constexpr SubcommandSpec kSubcommands[] = {
    {"radical", "Maximal solvable ideal of a Lie algebra input"},
    {"levi", "Certified Levi decomposition with height bounds"},
    {"standardize", "Flag standardization of a nilpotently acting radical"},
    {"height", "Height of a group element over a place set"},
    {"height-adjoint", "Height through the adjoint action on a module"},
    {"height-subspace", "Height of the subspace spanned by a Lie algebra"},
    {"reduce", "Siegel reduction of a rational matrix"},
    {"inj-radius", "Injectivity radius lower bound at a point"},
    {"siegel-kernel", "Small basis of an integer kernel lattice"},
    {"siegel-solve", "Small solution of an inhomogeneous integer system"},
    {"small-basis", "Small basis extraction along a spanning family"},
    {"unipotent-reduce", "Unipotent reduction into a compact fundamental cell"},
    {"bench-exponents", "Exponent measurement harness over the fixture corpus"},
    {"verify", "Re-run a witness and check it reproduces byte for byte"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reduction theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input_path;
  std::string S = "inf";
  long budget = efflevi::kDefaultNodeBudget;
  std::string delta = "1";
  std::string eta0 = "1/4";
  unsigned long seed = 1;
  std::string format = "json";

  app.add_option("--S", S, "Comma-separated places, e.g. inf,2,3")
      ->capture_default_str();
  app.add_option("--budget", budget, "Enumeration node budget")
      ->capture_default_str();
  app.add_option("--delta", delta, "LLL parameter in (1/4, 1]")
      ->capture_default_str();
  app.add_option("--eta0", eta0, "Cap on the reported injectivity radius")
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed for the harness")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  for (const SubcommandSpec& sub : kSubcommands) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.description);
    cmd->add_option("input", input_path, "Input JSON file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  efflevi::CommandOptions opt;
  opt.S = S;
  opt.budget = budget;
  opt.seed = seed;
  opt.format = format;

  std::string input;
  try {
    opt.delta = efflevi::rat_from_string(delta);
    opt.eta0 = efflevi::rat_from_string(eta0);
    input = read_file(input_path);
  } catch (const efflevi::invalid_input& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  efflevi::CommandResult result = efflevi::run_command(name, input, opt);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
