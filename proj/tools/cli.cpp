#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <vector>

#include "clausen/batch.hpp"
#include "clausen/clausen.hpp"

namespace clausen::cli {

namespace {

const std::map<std::string, Kind> kKindNames{
    {"sin", Kind::SinSum}, {"cos", Kind::CosSum}, {"clausen", Kind::Clausen}};

struct EvalArgs {
  std::string kind;
  int order = 0;
  double x = 0.0;
};

struct TableArgs {
  std::string kind;
  int order = 0;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string format = "csv";
};

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return kExitUsage;
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  out << format_value(evaluate({kKindNames.at(a.kind), a.order, a.x})) << "\n";
  return kExitOk;
}

int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.steps < 2) return usage_error(err, "--steps must be at least 2");
  if (!std::isfinite(a.from) || !std::isfinite(a.to) || !(a.from < a.to)) {
    return usage_error(err, "--from must be finite and below --to");
  }

  const auto rows = static_cast<std::size_t>(a.steps) + 1;
  const double step = (a.to - a.from) / a.steps;
  std::vector<double> xs(rows);
  for (std::size_t i = 0; i < rows; ++i) xs[i] = a.from + static_cast<double>(i) * step;
  xs.back() = a.to;

  std::vector<double> values(rows);
  evaluate_batch(kKindNames.at(a.kind), a.order, xs, values);

  std::string buf = "x,value\n";
  for (std::size_t i = 0; i < rows; ++i) {
    buf += format_value(xs[i]);
    buf += ',';
    buf += format_value(values[i]);
    buf += '\n';
  }
  out << buf;
  return kExitOk;
}

}  // namespace

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clausen sums C_j, S_j and Cl_j"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate at a single point");
  eval->add_option("--kind", eval_args.kind, "sin | cos | clausen")
      ->required()
      ->check(CLI::IsMember({"sin", "cos", "clausen"}));
  eval->add_option("--order", eval_args.order, "Order j")->required();
  eval->add_option("--x", eval_args.x, "Argument in radians")->required();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate on an equally spaced grid as CSV");
  table->add_option("--kind", table_args.kind, "sin | cos | clausen")
      ->required()
      ->check(CLI::IsMember({"sin", "cos", "clausen"}));
  table->add_option("--order", table_args.order, "Order j")->required();
  table->add_option("--from", table_args.from, "First abscissa")->required();
  table->add_option("--to", table_args.to, "Last abscissa")->required();
  table->add_option("--steps", table_args.steps, "Number of intervals (rows = steps + 1)")->required();
  table->add_option("--format", table_args.format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (eval->parsed()) return run_eval(eval_args, out);
  return run_table(table_args, out, err);
}

}  // namespace clausen::cli
