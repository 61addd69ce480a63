#include "nrs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "nrs/errors.hpp"
#include "nrs/genluk.hpp"
#include "nrs/hyper.hpp"
#include "nrs/nrs.hpp"
#include "nrs/xi.hpp"

namespace nrs::cli {

namespace {

struct RunConfig {
  std::string coeffs;
  std::string coeff_file;
  int m = 0;
  int steps = 64;
  long precision = kDefaultPrecision;
  std::string tol;
  std::string format = "table";
  std::string mode = "auto";
  std::string seq;
  int grade_cap = 6;
  int nmax = 100;
  int kmax = 8;
  int jensen = -1;
};

class Validation : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> coefficient_tokens(const RunConfig& cfg) {
  if (cfg.coeffs.empty() == cfg.coeff_file.empty()) throw Validation("give exactly one of --coeffs and --coeff-file");
  std::string text = cfg.coeffs;
  if (!cfg.coeff_file.empty()) {
    std::ifstream in(cfg.coeff_file);
    if (!in) throw Validation("cannot read " + cfg.coeff_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  if (tokens.size() < 2) throw Validation("need at least two coefficients a_0 a_1 ...");
  return tokens;
}

bool has_decimal(const std::vector<std::string>& tokens) {
  return std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    return t.find_first_of(".eE") != std::string::npos;
  });
}

// Exact iterates double in size every step, so auto means float.
bool use_exact(const RunConfig& cfg, const std::vector<std::string>& tokens) {
  if (cfg.mode != "exact") return false;
  if (has_decimal(tokens)) throw Validation("decimal coefficients need --mode float");
  return true;
}

template <Scalar S>
Polynomial<S> parse_polynomial(const std::vector<std::string>& tokens) {
  std::vector<S> c;
  for (const auto& t : tokens) {
    c.push_back(std::visit([](const auto& v) { return convert<S>(v); }, parse_scalar(t)));
  }
  return Polynomial<S>(std::move(c));
}

std::optional<Rational> parse_tol(const RunConfig& cfg) {
  if (cfg.tol.empty()) return std::nullopt;
  Rational tol = std::visit([](const auto& v) { return convert<Rational>(v); }, parse_scalar(cfg.tol));
  if (tol.sign() <= 0) throw Validation("--tol must be positive");
  return tol;
}

std::vector<std::string> table_header(int m) {
  std::vector<std::string> h{"n"};
  const std::string ms = std::to_string(m);
  if (m > 1) {
    for (int i = 0; i < m; ++i) h.push_back("J" + std::to_string(i) + "_" + ms);
  }
  h.push_back("J_" + ms);
  h.push_back("partial_sum");
  return h;
}

template <Scalar S>
std::vector<std::string> table_cells(const IterationRow<S>& row) {
  std::vector<std::string> c{std::to_string(row.n)};
  if (row.j.size() > 1) {
    for (const S& v : row.j) c.push_back(print_scalar(v, 10));
  }
  c.push_back(print_scalar(row.j_total, 10));
  c.push_back(print_scalar(row.partial_sum, 10));
  return c;
}

void print_line(std::ostream& out, const std::vector<std::string>& cells, bool csv) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (csv) {
      if (i) out << ',';
      out << cells[i];
    } else {
      out << (i ? std::setw(18) : std::setw(3)) << cells[i];
    }
  }
  out << '\n';
}

template <Scalar S>
int emit_run(const Polynomial<S>& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunOptions options;
  options.max_steps = cfg.steps;
  options.precision = cfg.precision;
  options.tol = parse_tol(cfg);
  const RunResult<S> result = run(p, cfg.m, options);

  const bool csv = cfg.format == "csv";
  print_line(out, table_header(cfg.m), csv);
  for (const auto& row : result.rows) print_line(out, table_cells(row), csv);

  const int steps = static_cast<int>(result.rows.size()) - 1;
  std::ostream& note = csv ? err : out;
  note << "verdict: " << to_string(result.verdict) << " after " << steps << " steps\n";
  switch (result.verdict) {
    case Verdict::Converged:
      return kOk;
    case Verdict::Failed:
      err << result.diagnostic << '\n';
      return kSingular;
    case Verdict::MaxSteps:
      break;
  }
  return kMaxSteps;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto tokens = coefficient_tokens(cfg);
  if (use_exact(cfg, tokens)) return emit_run(parse_polynomial<Rational>(tokens), cfg, out, err);
  return emit_run(parse_polynomial<Float>(tokens), cfg, out, err);
}

int cmd_newton(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  const auto p = parse_polynomial<Float>(coefficient_tokens(cfg));
  const std::vector<Float> newton = newton_run(p, cfg.steps, cfg.precision);

  RunOptions options;
  options.max_steps = cfg.steps - 1;
  options.precision = cfg.precision;
  options.tol = Rational(0);
  const RunResult<Float> nrs = run(p, 1, options);

  // NRS(1) partial sum at step n equals the Newton iterate c_{n+1}.
  const bool csv = cfg.format == "csv";
  print_line(out, {"n", "newton", "nrs1", "rel_dev"}, csv);
  Float worst(0);
  for (std::size_t n = 1; n < newton.size(); ++n) {
    std::vector<std::string> cells{std::to_string(n), print_scalar(newton[n], 10)};
    if (n - 1 < nrs.rows.size()) {
      const Float& s = nrs.rows[n - 1].partial_sum;
      Float dev = abs(s - newton[n]);
      if (!newton[n].is_zero()) dev = dev / abs(newton[n]);
      if (dev > worst) worst = dev;
      cells.push_back(print_scalar(s, 10));
      cells.push_back(print_scalar(dev, 3));
    } else {
      cells.insert(cells.end(), {"-", "-"});
    }
    print_line(out, cells, csv);
  }
  (csv ? err : out) << "max relative deviation: " << print_scalar(worst, 3) << '\n';
  return nrs.verdict == Verdict::Failed ? kSingular : kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  if (cfg.seq.empty()) throw Validation("count needs --seq \"k:count,...\"");
  const DegreeSequence d = parse_degree_sequence(cfg.seq);
  const BigInt formula = count_with_degree_sequence(d);
  const std::size_t cap = static_cast<std::size_t>(std::max(cfg.grade_cap, static_cast<int>(kDefaultWordCap)));
  const auto words = enumerate_by_degree_sequence(d, cap);
  const BigInt enumerated(words.size());
  out << "sequence: " << to_string(d) << '\n';
  out << "formula: " << formula << '\n';
  out << "enumeration: " << enumerated << '\n';
  const bool ok = formula == enumerated;
  out << (ok ? "OK" : "MISMATCH") << '\n';
  return ok ? kOk : kCountMismatch;
}

int cmd_sturmfels(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  const auto p = parse_polynomial<Rational>(coefficient_tokens(cfg));
  out << equivalence_report(p, cfg.m, cfg.grade_cap).to_text();
  return kOk;
}

int cmd_xi(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int kmax = std::max(cfg.kmax, cfg.jensen);
  const XiSeries series = xi_coefficients(cfg.nmax, kmax, cfg.precision);
  const bool csv = cfg.format == "csv";
  std::ostream& note = csv && cfg.jensen >= 0 && cfg.m > 0 ? err : out;
  print_line(note, {"k", "a_k"}, csv);
  for (std::size_t k = 0; k < series.a.size(); ++k) print_line(note, {std::to_string(k), print_scalar(series.a[k], 10)}, csv);
  note << "odd-power residual: " << print_scalar(series.odd_residual, 3) << '\n';
  if (cfg.jensen < 0) return kOk;

  const Polynomial<Float> p = jensen_polynomial(series, cfg.jensen);
  note << "jensen coefficients:";
  for (const Float& c : p.coeffs()) note << ' ' << print_scalar(c, 10);
  note << '\n';
  if (cfg.m == 0) return kOk;
  return emit_run(p, cfg, out, err);
}

void add_coeff_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--coeffs", cfg.coeffs, "coefficients a_0 a_1 ... a_d (p/q, integers or decimals)");
  sub->add_option("--coeff-file", cfg.coeff_file, "file holding the coefficients");
}

void add_numeric_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
  sub->add_option("--format", cfg.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--steps", cfg.steps, "maximum number of steps")->check(CLI::Range(0, 100000));
  sub->add_option("--tol", cfg.tol, "stop once |J_m(n)| < tol");
  sub->add_option("--mode", cfg.mode, "exact, float or auto")->check(CLI::IsMember({"exact", "float", "auto"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized Newton-Raphson-Simpson iterations for polynomial root sums"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "NRS(m) table for a polynomial");
  add_coeff_options(run_cmd, cfg);
  run_cmd->add_option("--m", cfg.m, "number of roots to sum")->required()->check(CLI::PositiveNumber);
  add_run_options(run_cmd, cfg);
  add_numeric_options(run_cmd, cfg);

  auto* newton_cmd = app.add_subcommand("newton", "Newton iterates beside NRS(1) partial sums");
  add_coeff_options(newton_cmd, cfg);
  newton_cmd->add_option("--steps", cfg.steps, "number of Newton steps")->check(CLI::Range(1, 100000));
  add_numeric_options(newton_cmd, cfg);

  auto* count_cmd = app.add_subcommand("count", "formula count against brute-force enumeration");
  count_cmd->add_option("--seq", cfg.seq, "degree sequence \"k:count,...\"")->required();
  count_cmd->add_option("--grade-cap", cfg.grade_cap, "maximum number of letters to enumerate")->check(CLI::Range(1, 20));

  auto* sturmfels_cmd = app.add_subcommand("sturmfels", "tree sums against the bracket series, grade by grade");
  add_coeff_options(sturmfels_cmd, cfg);
  sturmfels_cmd->add_option("--m", cfg.m, "number of roots")->required()->check(CLI::PositiveNumber);
  sturmfels_cmd->add_option("--grade-cap", cfg.grade_cap, "largest grade compared")->check(CLI::Range(1, kDefaultGradeCap));

  auto* xi_cmd = app.add_subcommand("xi", "Taylor coefficients of xi(1/2 + i sqrt t) and Jensen polynomials");
  xi_cmd->add_option("--nmax", cfg.nmax, "truncation of the outer sum")->check(CLI::Range(2, 2000));
  xi_cmd->add_option("--kmax", cfg.kmax, "largest coefficient index")->check(CLI::Range(0, 200));
  xi_cmd->add_option("--jensen", cfg.jensen, "degree of the Jensen polynomial")->check(CLI::Range(0, 200));
  xi_cmd->add_option("--m", cfg.m, "run NRS(m) on the Jensen polynomial")->check(CLI::PositiveNumber);
  add_run_options(xi_cmd, cfg);
  add_numeric_options(xi_cmd, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }

  PrecisionScope scope(cfg.precision);
  try {
    if (*run_cmd) return cmd_run(cfg, out, err);
    if (*newton_cmd) return cmd_newton(cfg, out, err);
    if (*count_cmd) return cmd_count(cfg, out, err);
    if (*sturmfels_cmd) return cmd_sturmfels(cfg, out, err);
    if (*xi_cmd) return cmd_xi(cfg, out, err);
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const DerivativeZero& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace nrs::cli
