// twcech: compute dimensionally reduced twisted Čech cohomology and verify
// the differential, exact-sequence and cocycle identities on instance files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "twcech/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw twcech::SchemaError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int emit(const twcech::CliResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Čech cohomology of torus-bundle covers"};
  app.set_version_flag("--version", std::string(TWCECH_VERSION));
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string path;
  std::vector<int> degrees;
  std::string coeff = "Z";
  auto* compute = app.add_subcommand("compute", "Cohomology groups of an instance");
  compute->add_option("instance", path, "Instance file, or - for stdin")->required();
  compute->add_option("--degree,-k", degrees, "Degree (repeatable); all by default")
      ->delimiter(',');
  compute->add_option("--coeff", coeff, "Coefficients")
      ->check(CLI::IsMember({"Z", "Q", "QZ"}));
  add_format(compute);

  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Check identities on an instance");
  verify->add_option("instance", path, "Instance file, or - for stdin")->required();
  verify->add_option("--checks", checks,
                     "Subset of d2,steenrod,les,tu,surjectivity,lift")
      ->delimiter(',');
  verify->add_option("--seed", seed, "Seed for sampled checks");
  add_format(verify);

  std::string name;
  std::optional<int> k;
  std::vector<int> euler;
  auto* example = app.add_subcommand("example", "Print a worked example instance");
  example->add_option("name", name, "hopf, lens, t3, nilmanifold, s2-rank2, torus-nerve, boundary-setup")
      ->required();
  example->add_option("--k", k, "Twist multiple for lens and nilmanifold");
  example->add_option("--euler", euler, "Euler vector a,b for s2-rank2")
      ->delimiter(',')
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto format = format_name == "json" ? twcech::Format::Json : twcech::Format::Text;
  try {
    if (*compute)
      return emit(twcech::run_compute(read_input(path), degrees,
                                      twcech::parse_scalar(coeff), format));
    if (*verify) return emit(twcech::run_verify(read_input(path), checks, seed, format));
    twcech::ExampleParameters params;
    params.k = k;
    if (!euler.empty()) params.euler = std::pair{euler[0], euler[1]};
    return emit(twcech::run_example(name, params));
  } catch (const twcech::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
