#include "reeb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reeb/assignment.hpp"
#include "reeb/error.hpp"
#include "reeb/genoracle.hpp"
#include "reeb/json_io.hpp"
#include "reeb/morse.hpp"
#include "reeb/render.hpp"
#include "reeb/surface.hpp"

namespace reeb {

namespace {

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph:
      return kExitInvalid;
    case ErrorCode::NonGenericCut:
    case ErrorCode::EmptyWindow:
    case ErrorCode::NoLowerBoundary:
    case ErrorCode::NoUpperBoundary:
    case ErrorCode::ConflictingPropagation:
    case ErrorCode::UnassignedFrontier:
    case ErrorCode::EmptyFrontier:
    case ErrorCode::NonConsecutiveFrontier:
    case ErrorCode::NothingToAssign:
    case ErrorCode::BrokenUniqueness:
    case ErrorCode::InvariantViolation:
    case ErrorCode::IncompleteAssignment:
    case ErrorCode::GenerationFailed:
      return kExitAlgorithm;
    default:
      return kExitInput;
  }
}

void report(std::ostream& err, std::string_view code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << '\n';
}

struct Options {
  std::string input = "-";
  std::string field;
  std::string output;
  bool check = false;
  bool trace = false;
  bool allow_regular = false;
  std::vector<double> window;
  std::string format = "dot";
  GenParams gen;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

EssentialSubgraph essential_input(const Options& opt, std::istream& in) {
  return essential_subgraph(parse_graph(slurp(opt.input, in)), {opt.allow_regular});
}

std::optional<EdgeNumbers> try_numbers(const ReebGraph& graph, bool allow_regular) {
  try {
    const auto g = essential_subgraph(graph, {allow_regular});
    const auto p = assign_all(g);
    EdgeNumbers numbers;
    for (std::size_t e = 0; e < g.graph().edge_count(); ++e) {
      numbers[g.graph().edges()[e].id] = p.values()[e];
    }
    return numbers;
  } catch (const Error&) {
    return std::nullopt;
  }
}

int dispatch(const std::string& command, const Options& opt, std::istream& in, std::ostream& out) {
  if (command == "validate") {
    const auto graph = parse_graph(slurp(opt.input, in));
    const auto result = validate(graph, {opt.allow_regular});
    out << to_json(result).dump() << '\n';
    return result.ok() ? kExitOk : kExitInvalid;
  }
  if (command == "assign") {
    const auto g = essential_input(opt, in);
    const auto p = assign_all(g, opt.check);
    out << assignment_to_json(g, p, opt.trace).dump() << '\n';
    return kExitOk;
  }
  if (command == "bound") {
    const auto g = essential_input(opt, in);
    const auto p = assign_all(g, opt.check);
    out << to_json(g, distance_bound(g, p)).dump() << '\n';
    return kExitOk;
  }
  if (command == "from-mesh") {
    std::istringstream off(slurp(opt.input, in));
    const auto surface = read_off(off);
    std::istringstream values(slurp(opt.field, in));
    const ScalarField field(surface, read_scalars(values));
    auto graph = label_reeb(surface, field, build_reeb(surface, field));
    if (!opt.window.empty()) graph = restrict_window(graph, opt.window[0], opt.window[1]);
    out << to_json(graph).dump() << '\n';
    return kExitOk;
  }
  if (command == "gen") {
    auto j = to_json(random_reeb(opt.gen));
    j["meta"] = {{"generator", "random_reeb"},
                 {"seed", opt.gen.seed},
                 {"saddles", opt.gen.saddle_count},
                 {"parallel_edge_bias", opt.gen.parallel_edge_bias},
                 {"inessential_bias", opt.gen.inessential_bias}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  // render
  const auto graph = parse_graph(slurp(opt.input, in));
  const auto numbers = try_numbers(graph, opt.allow_regular).value_or(EdgeNumbers{});
  out << (opt.format == "svg" ? to_svg(graph, numbers) : to_dot(graph, numbers));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Reeb graph validation, edge assignment and distance bounds"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Graph JSON file, or - for stdin")->capture_default_str();
    sub->add_option("-o,--output", opt.output, "Write the result to this file");
    sub->add_flag("--allow-regular", opt.allow_regular, "Accept valency-2 vertices");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the structural rules of a graph");
  add_input(validate_cmd);

  auto* assign_cmd = app.add_subcommand("assign", "Assign integers to the essential edges");
  add_input(assign_cmd);
  assign_cmd->add_flag("--check-invariants", opt.check, "Recheck the sweep invariants at every step");
  assign_cmd->add_flag("--trace", opt.trace, "Include the step-by-step trace");

  auto* bound_cmd = app.add_subcommand("bound", "Report the distance bound");
  add_input(bound_cmd);
  bound_cmd->add_flag("--check-invariants", opt.check, "Recheck the sweep invariants at every step");

  auto* mesh_cmd = app.add_subcommand("from-mesh", "Labeled Reeb graph of a scalar field on an OFF surface");
  mesh_cmd->add_option("mesh", opt.input, "OFF file, or - for stdin")->required();
  mesh_cmd->add_option("field", opt.field, "One value per vertex")->required();
  mesh_cmd->add_option("-o,--output", opt.output, "Write the result to this file");
  mesh_cmd->add_option("--window", opt.window, "Restrict to the levels [lo, hi]")->expected(2);

  auto* gen_cmd = app.add_subcommand("gen", "Emit a random valid window graph");
  gen_cmd->add_option("--seed", opt.gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--saddles", opt.gen.saddle_count, "Number of saddles")->capture_default_str();
  gen_cmd->add_option("--parallel-bias", opt.gen.parallel_edge_bias,
                      "Chance that a split is closed again at the next saddle")
      ->capture_default_str();
  gen_cmd->add_option("--inessential-bias", opt.gen.inessential_bias,
                      "Chance of inessential branches at splits")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", opt.output, "Write the result to this file");

  auto* render_cmd = app.add_subcommand("render", "Draw a graph as DOT or SVG");
  add_input(render_cmd);
  render_cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"dot", "svg"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kExitInput;
  }
  if (opt.window.size() == 2 && !(opt.window[0] < opt.window[1])) {
    report(err, to_string(ErrorCode::InvalidWindow), "window needs lo < hi");
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opt.output.empty()) return dispatch(command, opt, in, out);
    std::ostringstream buffer;
    const int status = dispatch(command, opt, in, buffer);
    std::ofstream file(opt.output, std::ios::binary);
    if (!(file << buffer.str())) fail(ErrorCode::IoError, "cannot write '" + opt.output + "'");
    return status;
  } catch (const Error& e) {
    report(err, to_string(e.code()), e.what());
    return exit_status(e.code());
  } catch (const std::exception& e) {
    report(err, to_string(ErrorCode::IoError), e.what());
    return kExitInput;
  }
}

}  // namespace reeb
