#include "ptsech_cli/run.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "ptsech/analytic.hpp"
#include "ptsech/bound.hpp"
#include "ptsech/error.hpp"
#include "ptsech/oracle.hpp"

namespace ptsech::cli {

namespace {

constexpr std::size_t max_points = 1000000;

struct RawOptions {
  double A = 0.0;
  double lambda = 1.0;
  int im_sign = 1;
  std::string branch = "conj";
  std::string format = "json";
  std::string output;
  std::optional<double> E;
  std::optional<double> E_min, E_max;
  int count = 0;
  int n_max = 0;
  double x_min = -8.0, x_max = 8.0, x_step = 0.5;
  std::vector<double> c1{1.0, 0.0}, c2{0.0, 0.0};
  double X = 0.0;
  double tol = 1e-13;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RawOptions& o) {
  sub->add_option("--A", o.A, "Potential strength A")->required();
  sub->add_option("--lambda", o.lambda, "Inverse width lambda > 0")->required();
  sub->add_option("--im-sign", o.im_sign, "Sign s of the i A tanh term")
      ->check(CLI::IsMember({1, -1}));
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "Output file (default: standard output)");
}

void add_branch(CLI::App* sub, RawOptions& o, bool allow_both) {
  auto* opt = sub->add_option("--branch", o.branch, "Sign choice for k'");
  if (allow_both) {
    o.branch = "both";
    opt->check(CLI::IsMember({"conj", "negconj", "both"}));
  } else {
    opt->check(CLI::IsMember({"conj", "negconj"}));
  }
}

void add_grid(CLI::App* sub, RawOptions& o, bool single_allowed) {
  if (single_allowed) sub->add_option("--E", o.E, "Energy");
  sub->add_option("--E-min", o.E_min, "First grid energy");
  sub->add_option("--E-max", o.E_max, "Last grid energy");
  sub->add_option("--count", o.count, "Number of grid energies (>= 2)");
}

void add_oracle(CLI::App* sub, RawOptions& o) {
  sub->add_option("--X", o.X, "Oracle cutoff distance (0 selects 25/lambda)");
  sub->add_option("--tol", o.tol, "Oracle integration tolerance");
}

std::vector<double> energy_grid(const RawOptions& o, bool single_allowed) {
  if (o.E) {
    if (o.E_min || o.E_max || o.count != 0) throw UsageError("--E excludes --E-min/--E-max/--count");
    if (!std::isfinite(*o.E)) throw UsageError("--E must be finite");
    return {*o.E};
  }
  if (!o.E_min || !o.E_max || o.count == 0)
    throw UsageError(single_allowed ? "give --E or all of --E-min, --E-max, --count"
                                    : "give --E-min, --E-max and --count");
  if (!(std::isfinite(*o.E_min) && std::isfinite(*o.E_max) && *o.E_min < *o.E_max))
    throw UsageError("need finite --E-min < --E-max");
  if (o.count < 2 || static_cast<std::size_t>(o.count) > max_points)
    throw UsageError("--count must lie in [2, 1000000]");
  std::vector<double> grid(static_cast<std::size_t>(o.count));
  const double step = (*o.E_max - *o.E_min) / (o.count - 1);
  for (int i = 0; i < o.count; ++i) grid[static_cast<std::size_t>(i)] = *o.E_min + i * step;
  grid.back() = *o.E_max;
  return grid;
}

std::vector<double> x_grid(const RawOptions& o) {
  if (!(std::isfinite(o.x_min) && std::isfinite(o.x_max) && o.x_min <= o.x_max))
    throw UsageError("need finite --x-min <= --x-max");
  if (!(o.x_step > 0.0 && std::isfinite(o.x_step))) throw UsageError("--x-step must be positive");
  const double n = std::floor((o.x_max - o.x_min) / o.x_step * (1.0 + 1e-12)) + 1.0;
  if (n > static_cast<double>(max_points)) throw UsageError("x grid exceeds 1000000 points");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = o.x_min + static_cast<double>(i) * o.x_step;
  return xs;
}

RunConfig finish(Command cmd, const RawOptions& o) {
  RunConfig c;
  c.command = cmd;
  try {
    c.spec = PotentialSpec(o.A, o.lambda, o.im_sign);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  c.format = o.format == "csv" ? Format::Csv : Format::Json;
  c.output = o.output;
  c.branch = o.branch == "both" ? std::nullopt : parse_branch(o.branch);
  switch (cmd) {
    case Command::Spectrum:
      if (o.n_max < 1) throw UsageError("--n-max must be >= 1");
      c.n_max = o.n_max;
      break;
    case Command::Scatter:
      if (!o.E || !std::isfinite(*o.E)) throw UsageError("--E must be finite");
      c.energies = {*o.E};
      break;
    case Command::Wavefunction:
      if (!o.E || !std::isfinite(*o.E)) throw UsageError("--E must be finite");
      c.energies = {*o.E};
      c.xs = x_grid(o);
      c.c1 = {o.c1[0], o.c1[1]};
      c.c2 = {o.c2[0], o.c2[1]};
      break;
    case Command::Verify:
      c.energies = energy_grid(o, true);
      break;
    case Command::Sweep:
      c.energies = energy_grid(o, false);
      break;
  }
  if (cmd == Command::Verify) {
    if (!(o.X == 0.0 || (std::isfinite(o.X) && o.lambda * o.X >= 20.0)))
      throw UsageError("--X must be 0 or satisfy lambda X >= 20");
    if (!(o.tol >= 1e-14 && o.tol <= 1e-4)) throw UsageError("--tol must lie in [1e-14, 1e-4]");
    c.X = o.X;
    c.tol = o.tol;
  }
  return c;
}

std::vector<Column> echo_columns() {
  return {{"A", Kind::Real}, {"lambda", Kind::Real}, {"im_sign", Kind::Integer}};
}

void push_echo(std::vector<Value>& row, const PotentialSpec& s) {
  row.emplace_back(s.A());
  row.emplace_back(s.lambda());
  row.emplace_back(static_cast<long long>(s.im_sign()));
}

const char* const amplitude_names[] = {"R_rl", "T_rl", "R_lr", "T_lr"};

std::array<Tagged, 4> amplitudes(const ScatteringData& d) { return {d.R_rl, d.T_rl, d.R_lr, d.T_lr}; }

std::vector<Branch> branches_of(const RunConfig& c) {
  if (c.branch) return {*c.branch};
  return {Branch::ConjK, Branch::NegConjK};
}

Table spectrum_table(const RunConfig& c) {
  Table t;
  t.columns = echo_columns();
  t.columns.insert(t.columns.end(), {{"n", Kind::Integer},
                                     {"convention", Kind::Text},
                                     {"energy", Kind::Real},
                                     {"admissible", Kind::Boolean},
                                     {"decay_minus", Kind::Real},
                                     {"decay_plus", Kind::Real},
                                     {"p", Kind::Complex},
                                     {"q", Kind::Complex}});
  for (const BoundState& st : spectrum(c.spec, c.n_max)) {
    std::vector<Value> row;
    push_echo(row, c.spec);
    row.emplace_back(static_cast<long long>(st.n));
    row.emplace_back(std::string(to_string(st.convention)));
    row.emplace_back(st.energy);
    row.emplace_back(st.admissible);
    row.emplace_back(st.decay_minus);
    row.emplace_back(st.decay_plus);
    row.emplace_back(st.p);
    row.emplace_back(st.q);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table scattering_table(const RunConfig& c) {
  Table t;
  t.columns = echo_columns();
  t.columns.insert(t.columns.end(), {{"E", Kind::Real}, {"branch", Kind::Text}});
  for (const char* name : amplitude_names) t.columns.push_back({name, Kind::TaggedComplex});
  for (double E : c.energies) {
    const ScatteringData d = scattering_coefficients(derive_params(E, c.spec, *c.branch));
    std::vector<Value> row;
    push_echo(row, c.spec);
    row.emplace_back(E);
    row.emplace_back(std::string(to_string(*c.branch)));
    for (const Tagged& v : amplitudes(d)) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table wavefunction_table(const RunConfig& c) {
  Table t;
  t.columns = echo_columns();
  t.columns.insert(t.columns.end(), {{"E", Kind::Real},
                                     {"branch", Kind::Text},
                                     {"x", Kind::Real},
                                     {"psi", Kind::Complex},
                                     {"dpsi", Kind::Complex}});
  const double E = c.energies.front();
  const DerivedParams d = derive_params(E, c.spec, *c.branch);
  for (double x : c.xs) {
    const WavefunctionValue v = wavefunction_with_derivative(x, {c.c1, c.c2}, d);
    std::vector<Value> row;
    push_echo(row, c.spec);
    row.emplace_back(E);
    row.emplace_back(std::string(to_string(*c.branch)));
    row.emplace_back(x);
    row.emplace_back(v.psi);
    row.emplace_back(v.dpsi);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table verify_table(const RunConfig& c) {
  Table t;
  t.columns = echo_columns();
  t.columns.insert(t.columns.end(), {{"E", Kind::Real}, {"branch", Kind::Text}});
  for (const char* name : amplitude_names) {
    t.columns.push_back({std::string(name) + "_analytic", Kind::TaggedComplex});
    t.columns.push_back({std::string(name) + "_oracle", Kind::TaggedComplex});
    t.columns.push_back({std::string(name) + "_deviation", Kind::Real});
  }
  t.columns.push_back({"max_deviation", Kind::Real});
  oracle::OracleOptions opts;
  opts.X = c.X;
  opts.tol = c.tol;
  for (double E : c.energies) {
    for (Branch br : branches_of(c)) {
      const auto analytic = amplitudes(scattering_coefficients(derive_params(E, c.spec, br)));
      const auto numeric = amplitudes(oracle::numeric_scattering(c.spec, E, br, opts));
      std::vector<Value> row;
      push_echo(row, c.spec);
      row.emplace_back(E);
      row.emplace_back(std::string(to_string(br)));
      double worst = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        const double dev = relative_deviation(numeric[i], analytic[i]);
        worst = std::max(worst, dev);
        row.emplace_back(analytic[i]);
        row.emplace_back(numeric[i]);
        row.emplace_back(dev);
      }
      row.emplace_back(worst);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace

Parsed parse_arguments(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form and numerical scattering for A[sech(lambda x) + s i tanh(lambda x)]",
               "ptsech"};
  app.require_subcommand(1);
  RawOptions o;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Bound-state levels E_n for n = 1..n_max");
  add_common(spectrum_cmd, o);
  spectrum_cmd->add_option("--n-max", o.n_max, "Highest level index")->required();

  auto* scatter_cmd = app.add_subcommand("scatter", "Closed-form R and T at one energy");
  add_common(scatter_cmd, o);
  add_branch(scatter_cmd, o, false);
  scatter_cmd->add_option("--E", o.E, "Energy")->required();

  auto* wave_cmd = app.add_subcommand("wavefunction", "Closed-form solution on an x grid");
  add_common(wave_cmd, o);
  add_branch(wave_cmd, o, false);
  wave_cmd->add_option("--E", o.E, "Energy")->required();
  wave_cmd->add_option("--x-min", o.x_min, "First x")->capture_default_str();
  wave_cmd->add_option("--x-max", o.x_max, "Last x")->capture_default_str();
  wave_cmd->add_option("--x-step", o.x_step, "Grid spacing")->capture_default_str();
  wave_cmd->add_option("--c1", o.c1, "Coefficient of the first solution (re im)")->expected(2);
  wave_cmd->add_option("--c2", o.c2, "Coefficient of the second solution (re im)")->expected(2);

  auto* verify_cmd = app.add_subcommand("verify", "Closed forms against the numerical oracle");
  add_common(verify_cmd, o);
  add_branch(verify_cmd, o, true);
  add_grid(verify_cmd, o, true);
  add_oracle(verify_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form R and T over an energy grid");
  add_common(sweep_cmd, o);
  add_branch(sweep_cmd, o, false);
  add_grid(sweep_cmd, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, exit_ok};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, exit_ok};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, exit_usage};
  }

  Command cmd = Command::Spectrum;
  if (*scatter_cmd) cmd = Command::Scatter;
  if (*wave_cmd) cmd = Command::Wavefunction;
  if (*verify_cmd) cmd = Command::Verify;
  if (*sweep_cmd) cmd = Command::Sweep;
  try {
    return {finish(cmd, o), exit_ok};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, exit_usage};
  }
}

Table build_table(const RunConfig& config) {
  switch (config.command) {
    case Command::Spectrum: return spectrum_table(config);
    case Command::Scatter:
    case Command::Sweep: return scattering_table(config);
    case Command::Wavefunction: return wavefunction_table(config);
    case Command::Verify: return verify_table(config);
  }
  return {};
}

double max_deviation(const Table& verify_table) {
  const auto& cols = verify_table.columns;
  const auto it = std::find_if(cols.begin(), cols.end(),
                               [](const Column& c) { return c.name == "max_deviation"; });
  if (it == cols.end()) throw std::invalid_argument("not a verify table");
  const auto idx = static_cast<std::size_t>(it - cols.begin());
  double worst = 0.0;
  for (const auto& row : verify_table.rows) {
    const double d = std::get<double>(row[idx]);
    worst = std::isnan(d) ? d : std::max(worst, d);
    if (std::isnan(worst)) break;
  }
  return worst;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Parsed parsed = parse_arguments(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& config = *parsed.config;

  Table table;
  try {
    table = build_table(config);
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return exit_numeric;
  }

  if (config.output.empty()) {
    emit(table, config.format, out);
    out.flush();
    if (!out) {
      err << "IOError: writing to standard output failed\n";
      return exit_numeric;
    }
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "IOError: cannot open " << config.output << '\n';
      return exit_numeric;
    }
    emit(table, config.format, file);
    file.close();
    if (!file) {
      err << "IOError: writing " << config.output << " failed\n";
      return exit_numeric;
    }
  }

  if (config.command == Command::Verify) {
    const double worst = max_deviation(table);
    if (!(worst <= verify_threshold)) {
      err << "VerificationFailed: max relative deviation " << format_real(worst)
          << " exceeds " << verify_threshold << '\n';
      return exit_numeric;
    }
  }
  return exit_ok;
}

}  // namespace ptsech::cli
