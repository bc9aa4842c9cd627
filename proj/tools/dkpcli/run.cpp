#include "CLI11.hpp"

#include "dkpcli/commands.hpp"

namespace dkp::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction, verification and decomposition of DKP algebra representations", "dkp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string name, file, file_b, out_path, suite = "all", p, m;
  std::optional<long> spacetime_dim;
  bool as_json = false, corrupt = false;

  auto* build = app.add_subcommand("build", "Write a builtin representation as JSON");
  build->add_option("name", name, "Representation name")->required()->check(CLI::IsMember(builtin_names()));
  build->add_option("--D", spacetime_dim, "Spacetime dimension for scalar-D / vector-D");
  build->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check the DKP algebra and projector identities");
  verify->add_option("file", file, "Representation JSON")->required();
  verify->add_option("--suite", suite, "algebra, projectors or all")->check(CLI::IsMember({"algebra", "projectors", "all"}));

  auto* decomp = app.add_subcommand("decompose", "Split a representation into irreducible blocks");
  decomp->add_option("file", file, "Representation JSON")->required();
  decomp->add_option("-o,--out", out_path, "Directory for block-<k>.json files");

  auto* equiv = app.add_subcommand("equiv", "Search for an intertwiner between two representations");
  equiv->add_option("fileA", file, "First representation")->required();
  equiv->add_option("fileB", file_b, "Second representation")->required();

  auto* planewave = app.add_subcommand("planewave", "Plane-wave amplitudes and field equations");
  planewave->add_option("file", file, "Representation JSON")->required();
  planewave->add_option("--p", p, "Momentum p^mu, comma-separated rationals (energy first)")->required();
  planewave->add_option("--m", m, "Mass, a positive rational")->required();

  auto* paper = app.add_subcommand("paper", "Run every reproduction check");
  paper->add_flag("--json", as_json, "Print the full JSON report");
  paper->add_flag("--corrupt", corrupt, "Damage the builtin irrep (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    const auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "dkp: " << e.what() << "\n" << failed->help();
    return kExitUsage;
  }

  if (build->parsed()) return cmd_build(name, spacetime_dim, out_path, out, err);
  if (verify->parsed()) return cmd_verify(file, suite, out, err);
  if (decomp->parsed()) return cmd_decompose(file, out_path, out, err);
  if (equiv->parsed()) return cmd_equiv(file, file_b, out, err);
  if (planewave->parsed()) return cmd_planewave(file, p, m, out, err);
  return cmd_paper(as_json, corrupt, out, err);
}

}  // namespace dkp::cli
