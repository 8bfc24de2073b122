#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dpcolor/cli.hpp"

namespace {

std::optional<std::string> opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dpcolor::cli;
  CLI::App app{"DP-coloring (correspondence coloring) of small multigraphs"};
  app.require_subcommand(1);

  Config cfg;
  std::string format = "text";
  bool strict = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "lines"}));
  app.add_flag("--strict", strict, "Treat invalid covers as parse errors");

  std::string graph, cover, lists, witness, out_path;
  int k = 0, max_n = 4, max_mult = 1;
  bool with_chi = false;

  auto* validate = app.add_subcommand("validate", "Check the cover axioms");
  validate->add_option("cover", cover, "Cover file")->required();
  validate->add_option("--graph", graph, "Base multigraph (default: simple graph implied by the cross edges)");

  auto* solve = app.add_subcommand("solve", "Decide (L,H)-colorability");
  solve->add_option("graph", graph, "Multigraph file")->required();
  solve->add_option("cover", cover, "Cover file")->required();

  auto* chi = app.add_subcommand("chi-dp", "DP-chromatic number");
  chi->add_option("graph", graph, "Multigraph file")->required();

  auto* dc = app.add_subcommand("degree-colorable", "Decide DP-degree-colorability from the blocks");
  dc->add_option("graph", graph, "Multigraph file")->required();
  dc->add_option("--witness", witness, "Write an uncolorable degree cover here");

  auto* crit = app.add_subcommand("check-critical", "Decide DP-k-criticality");
  crit->add_option("graph", graph, "Multigraph file")->required();
  crit->add_option("--k", k, "Target DP-chromatic number")->required()->check(CLI::PositiveNumber);
  crit->add_flag("--chi", with_chi, "Always compute chi_DP, even when a failing deletion settles the answer");

  auto* reduce = app.add_subcommand("reduce", "Cover H(G,L) of a list assignment");
  reduce->add_option("graph", graph, "Simple graph file")->required();
  reduce->add_option("lists", lists, "Lists file")->required();
  reduce->add_option("-o,--out", out_path, "Write the cover here instead of stdout");

  auto* census = app.add_subcommand("census", "Connected (multi)graphs up to isomorphism with their invariants");
  census->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::PositiveNumber);
  census->add_option("--max-mult", max_mult, "Largest edge multiplicity")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    cfg = config_from_env(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.strict = strict;
  cfg.format = format == "lines" ? OutputFormat::Lines : OutputFormat::Text;

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*validate) return cmd_validate(cover, opt(graph), cfg, out, err);
  if (*solve) return cmd_solve(graph, cover, cfg, out, err);
  if (*chi) return cmd_chi_dp(graph, cfg, out, err);
  if (*dc) return cmd_degree_colorable(graph, opt(witness), cfg, out, err);
  if (*crit) return cmd_check_critical(graph, k, with_chi, cfg, out, err);
  if (*reduce) return cmd_reduce(graph, lists, opt(out_path), cfg, out, err);
  if (*census) return cmd_census(max_n, max_mult, cfg, out, err);
  return kUsage;
}
