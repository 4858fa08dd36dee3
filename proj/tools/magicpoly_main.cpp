// magicpoly: construct, verify, enumerate and draw magic polygons, check the
// residual-range properties of the construction, and run the exact
// linear-algebra argument against odd orders.
//
// Exit codes on every subcommand: 0 for a positive result, 1 for a negative
// mathematical result (not magic, zero solutions, odd order), 2 for usage or
// parse problems. Result JSON goes to stdout alone; diagnostics and timing
// go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mpoly/construct.hpp"
#include "mpoly/core.hpp"
#include "mpoly/labeling_io.hpp"
#include "mpoly/proofcheck.hpp"
#include "mpoly/search.hpp"
#include "mpoly/svg_render.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

bool write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return false;
  }
  out << bytes;
  out.close();
  if (!out) {
    std::cerr << "failed writing " << path << "\n";
    return false;
  }
  return true;
}

std::optional<std::string> read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_construct(int n, const std::string& output) {
  mpoly::Labeling labeling = mpoly::construct(n);
  return write_output(output, mpoly::serialize_labeling_document(labeling))
             ? kExitPositive
             : kExitUsage;
}

int cmd_verify(const std::string& input) {
  const auto text = read_input(input);
  if (!text) return kExitUsage;
  const mpoly::Labeling labeling = mpoly::parse_labeling_document(*text);
  const mpoly::VerificationReport report = mpoly::verify(labeling);
  std::cout << mpoly::to_output_bytes(mpoly::to_json(report));
  return report.is_magic ? kExitPositive : kExitNegative;
}

int cmd_enumerate(int n, const mpoly::SearchConfig& config) {
  const mpoly::EnumerationResult result = mpoly::enumerate(n, config);
  std::cerr << "n=" << n << " " << mpoly::to_string(config.mode)
            << ": explored " << result.nodes_explored << " nodes in "
            << result.wall_time.count() << " s with "
            << config.worker_count << " worker(s)\n";
  std::cout << mpoly::to_output_bytes(mpoly::to_json(result));
  return result.total_count > 0 ? kExitPositive : kExitNegative;
}

int cmd_prove_odd(std::int64_t sweep_max) {
  const mpoly::ProofReport report = mpoly::check_odd_contradiction(sweep_max);
  std::cout << mpoly::to_output_bytes(mpoly::to_json(report));
  return report.ok ? kExitPositive : kExitNegative;
}

int cmd_render(const std::string& input, const std::string& output) {
  const auto text = read_input(input);
  if (!text) return kExitUsage;
  const mpoly::Labeling labeling = mpoly::parse_labeling_document(*text);
  return write_output(output, mpoly::render_svg(labeling)) ? kExitPositive
                                                           : kExitUsage;
}

int cmd_check_ranges(int n) {
  const mpoly::RangePartitionReport report = mpoly::range_partition_check(n);
  std::cout << mpoly::to_output_bytes(mpoly::to_json(report));
  return report.ok ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magic polygon toolkit"};
  app.require_subcommand(1);

  int n = 0;
  std::string output = "-";
  std::string input;
  std::string mode = "pruned";
  mpoly::SearchConfig config;
  std::int64_t limit = 0;
  std::int64_t sweep_max = 10000;

  CLI::App* construct =
      app.add_subcommand("construct", "emit one magic n-gon as JSON");
  construct->add_option("n", n, "polygon order (even)")->required();
  construct->add_option("-o,--output", output, "output path, - for stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "check a labeling document");
  verify->add_option("input", input, "labeling JSON path")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "count all magic n-gons");
  enumerate->add_option("n", n, "polygon order")->required();
  enumerate->add_option("--mode", mode, "search mode")
      ->check(CLI::IsMember({"exhaustive", "pruned"}));
  enumerate->add_flag("--up-to-symmetry", config.up_to_symmetry,
                      "lead with symmetry classes");
  enumerate->add_flag("--emit", config.emit_solutions,
                      "list canonical solutions in the result");
  enumerate->add_option("--workers", config.worker_count, "worker threads")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", limit,
                        "cap the emitted solution list (counting is never cut)")
      ->check(CLI::PositiveNumber);

  CLI::App* prove_odd = app.add_subcommand(
      "prove-odd", "exact row-reduction argument against odd orders");
  prove_odd->add_option("--sweep-max", sweep_max,
                        "numeric cross-check for k = 1..N, 0 to skip")
      ->check(CLI::NonNegativeNumber);

  CLI::App* render =
      app.add_subcommand("render", "draw a labeling document as SVG");
  render->add_option("input", input, "labeling JSON path")->required();
  render->add_option("output", output, "SVG output path")->required();

  CLI::App* check_ranges = app.add_subcommand(
      "check-ranges", "audit the construction's residual value ranges");
  check_ranges->add_option("n", n, "polygon order (even, >= 8)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(construct)) return cmd_construct(n, output);
    if (app.got_subcommand(verify)) return cmd_verify(input);
    if (app.got_subcommand(enumerate)) {
      config.mode = mode == "exhaustive" ? mpoly::SearchMode::Exhaustive
                                         : mpoly::SearchMode::Pruned;
      if (limit > 0) config.solution_limit = limit;
      return cmd_enumerate(n, config);
    }
    if (app.got_subcommand(prove_odd)) return cmd_prove_odd(sweep_max);
    if (app.got_subcommand(render)) return cmd_render(input, output);
    if (app.got_subcommand(check_ranges)) return cmd_check_ranges(n);
  } catch (const mpoly::NonexistenceError& e) {
    std::cerr << e.what() << "\n";
    return kExitNegative;
  } catch (const mpoly::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
