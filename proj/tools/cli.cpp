#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "sgl/exact.hpp"
#include "sgl/io.hpp"
#include "sgl/match.hpp"
#include "sgl/oracle.hpp"
#include "sgl/parallel.hpp"
#include "sgl/translate.hpp"

namespace sgl::cli {

namespace {

struct Config {
  int bandwidth = 0;
  double nu = 0.0;
  std::string out_path;
  std::string in_path;
  std::string points_path;
  std::string spectrum_path;
  std::string f_path;
  std::string g_path;
  std::string grid_path;
  std::vector<std::string> suites;
  int max_order = 4;
  int top_k = 10;
  int parallelism = 0;
  bool rational = false;
  bool canary = false;
  bool emit_template = false;
  double tolerance = 1e-8;
  double floor = 1e-12;
};

void emit(const Config& c, std::ostream& out, const std::string& content) {
  if (c.out_path.empty())
    out << content;
  else
    io::write_file(c.out_path, content);
}

void require_bandwidth(int b) {
  if (b < 1) throw InputError("--bandwidth must be >= 1");
}

int cmd_table(const Config& c, std::ostream& out) {
  require_bandwidth(c.bandwidth);
  if (!(c.nu > 0.0) || !std::isfinite(c.nu))
    throw InputError("--nu must be > 0: the closed form is defined for positive shifts only "
                     "(nu = 0 is the identity coupling)");
  if (c.rational) {
    if (c.bandwidth > 4) throw InputError("--rational supports --bandwidth <= 4");
    TranslationTable table(c.bandwidth, c.nu);
    const exact::Rational nu(c.nu);
    for (const auto& e : table.entries())
      table.at(e.n, e.n_p, e.l, e.l_p, e.m_abs) =
          static_cast<double>(exact::t_element(e.n, e.n_p, e.l, e.l_p, e.m_abs, nu));
    emit(c, out, io::table_to_csv(table));
    return kOk;
  }
  emit(c, out, io::table_to_csv(build_table(c.bandwidth, c.nu, c.parallelism)));
  return kOk;
}

int cmd_transform(const Config& c, std::ostream& out) {
  if (c.emit_template) {
    require_bandwidth(c.bandwidth);
    emit(c, out, io::samples_template(c.bandwidth));
    return kOk;
  }
  if (c.in_path.empty()) throw InputError("transform needs --in (or --template)");
  const io::Samples s = io::samples_from_json(io::read_file(c.in_path));
  if (c.bandwidth != 0 && c.bandwidth != s.bandwidth)
    throw InputError("--bandwidth " + std::to_string(c.bandwidth) + " does not match the sample file (" +
                     std::to_string(s.bandwidth) + ")");
  emit(c, out, io::spectrum_to_json(forward_transform(s.values, s.bandwidth, c.parallelism)));
  return kOk;
}

int cmd_synth(const Config& c, std::ostream& out) {
  const SglSpectrum spec = io::spectrum_from_json(io::read_file(c.spectrum_path));
  const auto points = io::points_from_json(io::read_file(c.points_path));
  emit(c, out, io::values_to_json(points, synthesize(spec, points, c.parallelism)));
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  oracle::SuiteOptions o;
  o.max_order = c.max_order;
  o.rational = c.rational;
  o.canary = c.canary;
  o.workers = c.parallelism;
  o.translation_tolerance = c.tolerance;
  o.translation_floor = c.floor;
  std::vector<std::string> suites = c.suites.empty() ? oracle::suite_names() : c.suites;
  for (const auto& s : suites)
    if (std::find(oracle::suite_names().begin(), oracle::suite_names().end(), s) == oracle::suite_names().end())
      throw InputError("unknown suite '" + s + "'");
  std::string lines;
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& s : suites) {
    for (const auto& r : oracle::run_suite(s, o)) {
      lines += io::report_to_json_line(r) + "\n";
      ++total;
      if (!r.passed) ++failed;
    }
  }
  emit(c, out, lines);
  err << "verify: " << total << " cases, " << failed << " failed\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_match(const Config& c, std::ostream& out) {
  const SglSpectrum f = io::spectrum_from_json(io::read_file(c.f_path));
  const SglSpectrum g = io::spectrum_from_json(io::read_file(c.g_path));
  const PoseGrid grid = io::grid_from_json(io::read_file(c.grid_path));
  if (f.bandwidth() != g.bandwidth())
    throw InputError("bandwidth mismatch: f has " + std::to_string(f.bandwidth()) + ", g has " +
                     std::to_string(g.bandwidth()));
  emit(c, out, io::results_to_json(grid_search(f, g, grid, c.top_k, c.parallelism), grid));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Spherical Gauss-Laguerre translation tables, transforms, verification and rigid matching", "sgl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sgl 1.0.0");

  auto* parallel = app.add_option("--parallelism", c.parallelism, "Worker cap (default: SGL_NUM_THREADS or all cores)");
  parallel->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Write the translation table for one shift length as CSV");
  table->add_option("--bandwidth", c.bandwidth, "Maximal order B")->required();
  table->add_option("--nu", c.nu, "Shift length along +z")->required();
  table->add_option("--out", c.out_path, "Output CSV (default: stdout)");
  table->add_flag("--rational", c.rational, "Evaluate with exact arithmetic (B <= 4)");
  table->add_option("--parallelism", c.parallelism, "Worker cap")->check(CLI::NonNegativeNumber);

  auto* transform = app.add_subcommand("transform", "SGL coefficients from samples on the quadrature grid");
  transform->add_option("--bandwidth", c.bandwidth, "Bandwidth B (required with --template)");
  transform->add_option("--in", c.in_path, "Samples JSON")->check(CLI::ExistingFile);
  transform->add_flag("--template", c.emit_template, "Write the sample grid with zero values instead");
  transform->add_option("--out", c.out_path, "Output JSON (default: stdout)");
  transform->add_option("--parallelism", c.parallelism, "Worker cap")->check(CLI::NonNegativeNumber);

  auto* synth = app.add_subcommand("synth", "Evaluate a spectrum at given points");
  synth->add_option("--spectrum", c.spectrum_path, "Spectrum JSON")->required()->check(CLI::ExistingFile);
  synth->add_option("--points", c.points_path, "Points JSON")->required()->check(CLI::ExistingFile);
  synth->add_option("--out", c.out_path, "Output JSON (default: stdout)");
  synth->add_option("--parallelism", c.parallelism, "Worker cap")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run the oracle suites and emit JSON-lines reports");
  verify->add_option("--suite", c.suites, "Suite name (repeatable; default: all)");
  verify->add_option("--max-order", c.max_order, "Bound on n, n' for the sweeps")->check(CLI::Range(1, 8));
  verify->add_flag("--rational", c.rational, "Add exact-arithmetic cross checks");
  verify->add_flag("--canary", c.canary, "Inject a sign error into the closed form (must fail)");
  verify->add_option("--tolerance", c.tolerance, "Relative tolerance for the translation suite");
  verify->add_option("--floor", c.floor, "Absolute floor for the translation suite");
  verify->add_option("--out", c.out_path, "Output JSON-lines (default: stdout)");
  verify->add_option("--parallelism", c.parallelism, "Worker cap")->check(CLI::NonNegativeNumber);

  auto* match = app.add_subcommand("match", "Rank the poses of a grid by weighted overlap");
  match->add_option("--f", c.f_path, "Spectrum to move")->required()->check(CLI::ExistingFile);
  match->add_option("--g", c.g_path, "Target spectrum")->required()->check(CLI::ExistingFile);
  match->add_option("--grid", c.grid_path, "Pose grid JSON")->required()->check(CLI::ExistingFile);
  match->add_option("--top-k", c.top_k, "Results to keep (<= 0 keeps all)");
  match->add_option("--out", c.out_path, "Output JSON (default: stdout)");
  match->add_option("--parallelism", c.parallelism, "Worker cap")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(c, out);
    if (transform->parsed()) return cmd_transform(c, out);
    if (synth->parsed()) return cmd_synth(c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (match->parsed()) return cmd_match(c, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sgl::cli
