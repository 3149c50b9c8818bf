#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "descent/exact.hpp"
#include "descent/expfun.hpp"
#include "descent/presets.hpp"
#include "descent/spectral.hpp"

namespace descent::cli {

namespace {

struct Loaded {
  WeightScheme scheme;
  std::string description;
};

Loaded load(const Options& o) {
  if (!o.preset.empty() && !o.scheme_file.empty()) throw UsageError("--scheme and --preset are exclusive");
  if (!o.preset.empty()) {
    try {
      const Preset& p = preset(o.preset);
      return {p.scheme, p.name + " (" + p.description + ")"};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!o.scheme_file.empty()) {
    try {
      return {load_scheme_file(o.scheme_file), o.scheme_file};
    } catch (const std::runtime_error& e) {
      throw UsageError(o.scheme_file + ": " + e.what());
    }
  }
  throw UsageError("one of --scheme FILE or --preset NAME is required");
}

std::optional<Letter> letter_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return letter_from_char(s.front());
}

exact::EndFilter filter_of(const Options& o) { return {letter_option(o.start), letter_option(o.end)}; }

std::vector<double> parse_range(const std::string& text, std::size_t parts, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.size() != parts) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(parts) + " colon-separated numbers");
  }
  return out;
}

spectral::SearchRegion region_of(const Options& o, const spectral::TransferPair& t) {
  spectral::SearchRegion region = spectral::default_region(t);
  if (!o.real_range.empty()) {
    const auto r = parse_range(o.real_range, 2, "--real-range");
    if (!(r[0] < r[1])) throw UsageError("--real-range: LO must be below HI");
    region.real_lo = r[0];
    region.real_hi = r[1];
  }
  if (!o.complex_box.empty()) {
    const auto b = parse_range(o.complex_box, 4, "--complex-box");
    if (!(b[0] < b[1]) || !(b[2] < b[3])) throw UsageError("--complex-box: empty box");
    region.box = {b[0], b[1], b[2], b[3]};
  }
  return region;
}

std::string region_text(const spectral::SearchRegion& r) {
  return "real [" + format_number(r.real_lo) + ", " + format_number(r.real_hi) + "], box [" +
         format_number(r.box.re_lo) + ", " + format_number(r.box.re_hi) + "] x [" + format_number(r.box.im_lo) +
         ", " + format_number(r.box.im_hi) + "], |lambda| >= " + format_number(r.exclude);
}

std::string filter_text(const Options& o) {
  return (o.start.empty() ? std::string("*") : o.start) + "," + (o.end.empty() ? std::string("*") : o.end);
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

Report cmd_oracle(const Options& o) {
  const Loaded ld = load(o);
  const exact::EndFilter filter = filter_of(o);
  const int lowest = filter.active() ? 2 : 0;
  if (!o.n && !o.n_max) throw UsageError("oracle needs --n or --n-max");
  if (o.n && o.n_max) throw UsageError("--n and --n-max are exclusive for oracle");
  const int hi = o.n ? *o.n : *o.n_max;
  const int lo = o.n ? *o.n : lowest;
  if (lo < lowest || hi < lo) {
    throw UsageError(filter.active() ? "n must be at least 2 with --start/--end" : "n must be non-negative");
  }

  std::vector<std::string> methods;
  if (o.method == "all") methods = {"dp", "brute", "operator"};
  else methods = {o.method};
  const bool brute_fits = hi <= exact::kDefaultBruteForceCap;
  if (o.method == "brute" && !brute_fits) {
    throw UsageError("brute force is limited to n <= " + std::to_string(exact::kDefaultBruteForceCap));
  }
  if (filter.active() && ld.scheme.m() < 2 && std::find(methods.begin(), methods.end(), "operator") != methods.end()) {
    throw UsageError("the operator method needs m >= 2 for --start/--end");
  }

  Report r;
  r.command = "oracle";
  r.scheme = ld.description;
  r.parameters = {{"n", o.n ? std::to_string(*o.n) : std::to_string(lo) + ".." + std::to_string(hi)},
                  {"method", o.method},
                  {"ends", filter_text(o)}};
  r.columns = {"n"};
  for (const auto& m : methods) {
    if (m == "brute" && !brute_fits) continue;
    r.columns.push_back(m);
  }
  if (o.method == "all") r.columns.push_back("agree");
  if (o.method == "all" && !brute_fits) {
    r.notes.push_back("brute force skipped above n = " + std::to_string(exact::kDefaultBruteForceCap));
  }

  bool agreement = true;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Cell> row{integer(n)};
    std::vector<Rational> values;
    for (const auto& m : methods) {
      Rational v;
      if (m == "dp") v = exact::dp_alpha(ld.scheme, n, filter).value;
      else if (m == "brute") {
        if (!brute_fits) continue;
        v = exact::brute_force_alpha(ld.scheme, n, filter).value;
      } else v = expfun::alpha_by_operator_iteration(ld.scheme, n, filter).value;
      values.push_back(v);
      row.push_back(exact(v));
    }
    if (o.method == "all") {
      const bool same = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values.front(); });
      row.push_back(flag(same));
      if (!same) {
        agreement = false;
        std::string msg = "disagreement at n = " + std::to_string(n) + ":";
        for (std::size_t i = 1; i < r.columns.size() - 1; ++i) msg += " " + r.columns[i] + "=" + row[i].text;
        r.notes.push_back(msg);
      }
    }
    r.rows.push_back(std::move(row));
  }
  if (o.method == "all") r.summary.emplace_back("agreement", flag(agreement));
  r.ok = agreement;
  return r;
}

Report cmd_spectrum(const Options& o) {
  const Loaded ld = load(o);
  const auto t = spectral::build_transfer(ld.scheme);
  const auto region = region_of(o, t);
  auto points = spectral::spectrum(t, region);
  const std::size_t found = points.size();
  if (o.top) {
    if (*o.top < 1) throw UsageError("--top must be positive");
    if (points.size() > static_cast<std::size_t>(*o.top)) points.resize(static_cast<std::size_t>(*o.top));
  }

  Report r;
  r.command = "spectrum";
  r.scheme = ld.description;
  r.parameters = {{"region", region_text(region)}};
  r.columns = {"k", "lambda_re", "lambda_im", "modulus", "simple", "residual"};
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    r.rows.push_back({integer(static_cast<long long>(k)), number(p.lambda.real()), number(p.lambda.imag()),
                      number(std::abs(p.lambda)), flag(p.simple), number(p.residual)});
  }
  r.summary.emplace_back("roots", integer(static_cast<long long>(found)));
  return r;
}

namespace {

WeightScheme refined(const Loaded& ld, const Options& o) {
  const exact::EndFilter f = filter_of(o);
  if (!f.active()) return ld.scheme;
  if (ld.scheme.m() < 2) throw UsageError("--start/--end need m >= 2 for asymptotic constants");
  return restrict_ends(ld.scheme, f.start, f.end);
}

}  // namespace

Report cmd_constants(const Options& o) {
  const Loaded ld = load(o);
  const WeightScheme s = refined(ld, o);
  const auto t = spectral::build_transfer(s);
  const auto region = region_of(o, t);
  const auto points = spectral::spectrum(t, region);
  const std::size_t top = o.top ? static_cast<std::size_t>(std::max(*o.top, 1)) : 1;
  const double tol = o.tol.value_or(1e-9);
  const auto model = expfun::asymptotic_model(s, points, top, region.exclude);

  Report r;
  r.command = "constants";
  r.scheme = ld.description;
  r.parameters = {{"ends", filter_text(o)}, {"top", std::to_string(top)}, {"region", region_text(region)}};
  r.columns = {"lambda_re", "lambda_im",    "modulus",     "constant_re",  "constant_im",
               "phi_mu_re", "phi_mu_im",    "kappa_psi_re", "kappa_psi_im", "phi_psi_re",
               "phi_psi_im", "imag_residue"};
  double worst = 0;
  for (const auto& mode : model.modes) {
    const auto& p = mode.pairings;
    r.rows.push_back({number(mode.lambda.real()), number(mode.lambda.imag()), number(std::abs(mode.lambda)),
                      number(mode.constant.real()), number(mode.constant.imag()), number(p.phi_mu.real()),
                      number(p.phi_mu.imag()), number(p.kappa_psi.real()), number(p.kappa_psi.imag()),
                      number(p.phi_psi.real()), number(p.phi_psi.imag()), number(mode.imag_residue)});
    worst = std::max(worst, mode.imag_residue);
  }
  r.summary.emplace_back("r_hat", number(model.r_hat));
  r.summary.emplace_back("max_imag_residue", number(worst));
  if (model.modes.empty()) r.notes.push_back("no eigenvalues found in the search region");
  if (!(worst < tol)) {
    r.ok = false;
    r.notes.push_back("conjugate constants disagree by more than " + format_number(tol));
  }
  return r;
}

Report cmd_verify(const Options& o) {
  const Loaded ld = load(o);
  const exact::EndFilter filter = filter_of(o);
  const WeightScheme s = refined(ld, o);
  const int m = s.m();
  const int n_max = o.n_max.value_or(14);
  const int n_lo = std::max(m, filter.active() ? 2 : 0);
  if (n_max < n_lo) throw UsageError("--n-max must be at least " + std::to_string(n_lo));
  const auto t = spectral::build_transfer(s);
  const auto region = region_of(o, t);
  const auto points = spectral::spectrum(t, region);

  Report r;
  r.command = "verify";
  r.scheme = ld.description;
  r.parameters = {{"n_max", std::to_string(n_max)}, {"ends", filter_text(o)}, {"region", region_text(region)}};

  if (!is_kernel_symmetric(s)) {
    r.parameters.emplace_back("mode", "spectrum only");
    r.columns = {"k", "lambda_re", "lambda_im", "modulus", "simple", "residual"};
    for (std::size_t k = 0; k < points.size(); ++k) {
      const auto& p = points[k];
      r.rows.push_back({integer(static_cast<long long>(k)), number(p.lambda.real()), number(p.lambda.imag()),
                        number(std::abs(p.lambda)), flag(p.simple), number(p.residual)});
    }
    r.notes.push_back("window weights are not invariant under word reversal; constants unavailable");
    return r;
  }

  const std::size_t top = o.top ? static_cast<std::size_t>(std::max(*o.top, 1)) : 1;
  const double floor = o.tol.value_or(1e-12);
  const auto model = expfun::asymptotic_model(s, points, top, region.exclude);
  const double r_hat = model.r_hat > 0 ? model.r_hat : region.exclude;

  struct Line {
    int n;
    Rational alpha;
    double ratio, predicted, error;
  };
  std::vector<Line> lines;
  for (int n = n_lo; n <= n_max; ++n) {
    const Rational alpha = exact::dp_alpha(ld.scheme, n, filter).value;
    const double ratio = to_double(alpha / Rational(factorial(n)));
    const double predicted = expfun::predict_alpha(model, n).value;
    lines.push_back({n, alpha, ratio, predicted, std::abs(ratio - predicted)});
  }

  // C is fitted on the first half; the second half must stay under C r_hat^n.
  const std::size_t head = (lines.size() + 1) / 2;
  double c_fit = 0;
  for (std::size_t i = 0; i < head; ++i) c_fit = std::max(c_fit, lines[i].error / std::pow(r_hat, lines[i].n));

  r.columns = {"n", "alpha", "alpha_over_factorial", "predicted", "error", "bound", "within"};
  bool decays = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const double bound = c_fit * std::pow(r_hat, l.n) + floor;
    const bool within = i < head || l.error <= bound;
    decays = decays && within;
    r.rows.push_back({integer(l.n), exact(l.alpha), number(l.ratio), number(l.predicted),
                      number(l.error), number(bound), flag(within)});
  }
  r.summary.emplace_back("eigenvalues", integer(static_cast<long long>(model.modes.size())));
  r.summary.emplace_back("r_hat", number(r_hat));
  r.summary.emplace_back("C", number(c_fit));
  r.summary.emplace_back("decay", flag(decays));
  r.ok = decays;
  return r;
}

Report cmd_sequence(const Options& o) {
  const int n_max = o.n_max.value_or(20);
  if (n_max < 4) throw UsageError("--n-max must be at least 4");
  const WeightScheme& s = preset("sec6").scheme;
  const exact::GenfunTable gf = exact::genfun_coeffs(n_max);
  const int genfun_order = 12;
  const bool genfun_equation = exact::verify_genfun_equation(genfun_order);

  Report r;
  r.command = "sequence";
  r.scheme = "sec6 (" + preset("sec6").description + ")";
  r.parameters = {{"n_max", std::to_string(n_max)}};
  r.columns = {"n",         "alpha_aa",  "alpha_ab",    "alpha_ba",        "alpha_bb", "alpha",
               "derangements", "recursion", "derangement", "nearest_integer", "genfun"};
  const auto a = Letter::a;
  const auto b = Letter::b;
  bool ok = genfun_equation;
  auto status = [](bool v) { return text(v ? "pass" : "fail"); };
  for (int n = 2; n <= n_max; ++n) {
    const Rational aa = exact::dp_alpha(s, n, {a, a}).value;
    const Rational ab = exact::dp_alpha(s, n, {a, b}).value;
    const Rational ba = exact::dp_alpha(s, n, {b, a}).value;
    const Rational bb = exact::dp_alpha(s, n, {b, b}).value;
    const Rational total = exact::dp_alpha(s, n).value;
    const BigInt d = exact::derangements(n);

    const auto rec = exact::section6_recursion(n);
    const bool recursion = Rational(rec.aa) == aa && Rational(rec.ab) == ab && Rational(rec.bb) == bb &&
                           Rational(rec.total) == total && ab == ba;
    const bool derangement = bb == Rational(d);

    bool nearest = true;
    bool any = false;
    const std::pair<exact::Sequence, Rational> seqs[] = {{exact::Sequence::aa, aa},
                                                         {exact::Sequence::ab, ab},
                                                         {exact::Sequence::bb, bb},
                                                         {exact::Sequence::total, total}};
    for (const auto& [which, value] : seqs) {
      if (n < exact::nearest_integer_threshold(which)) continue;
      any = true;
      nearest = nearest && Rational(exact::nearest_integer_formula(n, which)) == value;
    }
    const std::size_t k = static_cast<std::size_t>(n);
    const bool genfun = gf.aa[k] == aa && gf.ab[k] == ab && gf.bb[k] == bb && gf.total[k] == total;

    ok = ok && recursion && derangement && nearest && genfun;
    r.rows.push_back({integer(n), exact(aa), exact(ab), exact(ba), exact(bb), exact(total), exact(d),
                      status(recursion), status(derangement), any ? status(nearest) : text("-"), status(genfun)});
  }
  r.summary.emplace_back("genfun_equation_order_" + std::to_string(genfun_order), flag(genfun_equation));
  r.summary.emplace_back("all_checks", flag(ok));
  r.ok = ok;
  return r;
}

namespace {

void add_scheme_options(CLI::App* cmd, Options& o) {
  auto* file = cmd->add_option("--scheme", o.scheme_file, "weight scheme file");
  auto* name = cmd->add_option("--preset", o.preset, "built-in scheme")->check(CLI::IsMember([] {
    std::vector<std::string> names;
    for (const auto& p : presets()) names.push_back(p.name);
    return names;
  }()));
  file->excludes(name);
}

void add_end_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--start", o.start, "first descent letter")->check(CLI::IsMember({"a", "b"}));
  cmd->add_option("--end", o.end, "last descent letter")->check(CLI::IsMember({"a", "b"}));
}

void add_region_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--real-range", o.real_range, "real scan interval LO:HI");
  cmd->add_option("--complex-box", o.complex_box, "Newton seed box RE1:RE2:IM1:IM2");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted consecutive descent counts and their asymptotics", "descent"};
  app.require_subcommand(1, 1);
  Options o;
  std::string format = "table";

  auto* oracle = app.add_subcommand("oracle", "exact alpha_n by dp, brute force or operator iteration");
  auto* spectrum = app.add_subcommand("spectrum", "non-zero eigenvalues of the transfer operator");
  auto* constants = app.add_subcommand("constants", "asymptotic constants of the leading eigenvalues");
  auto* verify = app.add_subcommand("verify", "compare exact alpha_n/n! with the asymptotic expansion");
  auto* sequence = app.add_subcommand("sequence", "checks on the wt(aa)=0, wt(bb)=2 sequences");

  for (auto* cmd : {oracle, spectrum, constants, verify, sequence}) {
    cmd->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--tol", o.tol, "absolute tolerance of numeric checks");
  }
  for (auto* cmd : {oracle, spectrum, constants, verify}) add_scheme_options(cmd, o);
  for (auto* cmd : {oracle, constants, verify}) add_end_options(cmd, o);
  for (auto* cmd : {spectrum, constants, verify}) {
    add_region_options(cmd, o);
    cmd->add_option("--top", o.top, "number of eigenvalues");
  }
  oracle->add_option("--n", o.n, "permutation length");
  oracle->add_option("--method", o.method, "dp, brute, operator or all")
      ->check(CLI::IsMember({"dp", "brute", "operator", "all"}));
  for (auto* cmd : {oracle, verify, sequence}) cmd->add_option("--n-max", o.n_max, "largest length");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  o.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;

  const auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    if (oracle->parsed()) report = cmd_oracle(o);
    else if (spectrum->parsed()) report = cmd_spectrum(o);
    else if (constants->parsed()) report = cmd_constants(o);
    else if (verify->parsed()) report = cmd_verify(o);
    else report = cmd_sequence(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  render(report, o.format, out);
  err << "time: " << format_number(seconds) << " s\n";
  return report.ok ? 0 : 1;
}

}  // namespace descent::cli
