#include "cli_app.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tuniform/disc_io.hpp"
#include "tuniform/error.hpp"
#include "tuniform/oeis.hpp"
#include "tuniform/render.hpp"
#include "tuniform/tables.hpp"
#include "tuniform/verify.hpp"

namespace tuniform::cli {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::io_error, "write to " + path + " failed");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot open " + path);
  try {
    return nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_format, path + ": " + e.what());
  }
}

BuildLimits limits_from(std::size_t max_vertices) {
  BuildLimits limits;
  limits.max_vertices = max_vertices;
  return limits;
}

int default_n_max(int t) {
  if (auto n = table_n_max(t)) return *n;
  throw Error(ErrorCode::invalid_argument, "--n-max is required for t = " + std::to_string(t));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-uniform disc sequences: tables, verification, OEIS prefixes, SVG discs"};
  app.require_subcommand(1);
  std::size_t max_vertices = BuildLimits{}.max_vertices;
  app.add_option("--max-vertices", max_vertices, "vertex budget for disc construction")->capture_default_str();

  int t = 0;
  std::optional<int> n_max;
  std::string format = "markdown";
  std::string out_path;
  int precision = 12;

  auto* table = app.add_subcommand("table", "sequence table for one t");
  table->add_option("--t", t, "neighbours per interior vertex")->required();
  table->add_option("--n-max", n_max, "largest radius (default: the standard table range)");
  table->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}))->capture_default_str();
  table->add_option("--out", out_path, "output file (default stdout)");
  table->add_option("--precision", precision, "digits for decimal ratios in csv/json")->capture_default_str();

  std::vector<int> ts{4, 5, 6, 7, 8, 9, 10};
  int jobs = 1;
  int verify_precision = 50;
  std::string disc_path;
  auto* verify = app.add_subcommand("verify", "run every applicable checker; exit 0 iff all hold");
  verify->add_option("--t", ts, "values of t (comma separated)")->delimiter(',')->capture_default_str();
  verify->add_option("--n-max", n_max, "largest radius for every t (default: per-t range)");
  verify->add_option("--out", out_path, "JSON report path (default stdout)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--precision", verify_precision, "decimal digits for irrational limits")->capture_default_str();
  verify->add_option("--disc", disc_path, "check a disc JSON file instead of constructed discs");

  auto* oeis = app.add_subcommand("oeis-check", "compare sequences with embedded OEIS prefixes");
  oeis->add_option("--t", t)->required()->check(CLI::Range(6, 10));
  oeis->add_option("--out", out_path);

  int radius = 0;
  RenderSpec spec;
  auto* render = app.add_subcommand("render", "SVG drawing of the canonical disc");
  render->add_option("--t", t)->required();
  render->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  render->add_option("--out", out_path, "SVG path (default stdout)");
  render->add_option("--size", spec.size, "width and height in px")->capture_default_str();
  render->add_option("--stroke", spec.stroke)->capture_default_str();
  render->add_option("--stroke-width", spec.stroke_width)->capture_default_str();

  auto* ex = app.add_subcommand("disc-export", "JSON dump of the canonical disc");
  ex->add_option("--t", t)->required();
  ex->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  ex->add_option("--out", out_path);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const BuildLimits limits = limits_from(max_vertices);

    if (*table) {
      const auto seq = build_table(t, n_max.value_or(default_n_max(t)), limits);
      std::string text;
      if (format == "markdown") text = render_markdown(seq);
      else if (format == "csv") text = render_csv(seq, precision);
      else text = render_json(seq, precision).dump(2) + "\n";
      emit(text, out_path, out);
      return 0;
    }

    if (*verify) {
      std::vector<VerificationResult> results;
      if (!disc_path.empty()) {
        results = verify_disc(disc_from_json(read_json(disc_path)));
      } else {
        VerifyOptions options;
        options.ts = ts;
        options.n_max = n_max;
        options.limits = limits;
        options.jobs = jobs;
        options.precision = verify_precision;
        results = run_verification(options);
      }
      emit(results_to_json(results).dump(2) + "\n", out_path, out);
      for (const auto& r : results) {
        if (!r.holds()) err << "FAIL " << r.claim << " (t = " << r.t << ")\n";
      }
      return all_hold(results) ? 0 : 1;
    }

    if (*oeis) {
      const auto entries = oeis_check(t, limits);
      const auto report = oeis_report_to_json(t, entries);
      emit(report.dump(2) + "\n", out_path, out);
      for (const auto& e : entries) {
        if (!e.matches()) {
          err << to_string(ErrorCode::prefix_mismatch) << ": " << e.id << " diverges at n = " << *e.first_mismatch_n
              << " (expected " << e.expected << ", computed " << e.computed << ")\n";
        }
      }
      return report["all_match"].get<bool>() ? 0 : 1;
    }

    if (*render) {
      emit(render_svg(build_disc(t, radius, limits), spec), out_path, out);
      return 0;
    }

    if (*ex) {
      emit(disc_to_json(build_disc(t, radius, limits)).dump() + "\n", out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace tuniform::cli
