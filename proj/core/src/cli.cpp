// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jacobicode/codes.hpp"
#include "jacobicode/error.hpp"
#include "jacobicode/explorer.hpp"
#include "jacobicode/io.hpp"
#include "jacobicode/jacobian.hpp"
#include "jacobicode/selftest.hpp"

namespace jacobicode {
namespace {

struct CurveArgs {
  std::string curve;  // file path or inline JSON
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::string h = "0";
  std::string f;
};

struct OutputArgs {
  std::string format = "json";
  std::string output;
};

void add_curve_options(CLI::App* cmd, CurveArgs& a) {
  cmd->add_option("--curve", a.curve, "Curve as a JSON file or inline JSON object");
  cmd->add_option("--q", a.q, "Field order");
  cmd->add_option("--modulus", a.modulus, "Field modulus coefficients, low degree first")->delimiter(',');
  cmd->add_option("--h", a.h, "h(x) in inline syntax, e.g. x^2+1");
  cmd->add_option("--f", a.f, "f(x) in inline syntax, e.g. x^5+x^3");
}

void add_output_options(CLI::App* cmd, OutputArgs& o, bool csv) {
  std::vector<std::string> formats{"json", "text"};
  if (csv) formats.insert(formats.begin() + 1, "csv");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--output,-o", o.output, "Write to this file instead of standard output");
}

FieldPtr field_for(std::uint64_t q, const std::vector<std::uint32_t>& modulus) {
  if (q < 2) throw Error(ErrorCode::Usage, "--q is required");
  if (modulus.empty()) return field_of_order(q);
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned a = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(static_cast<std::uint32_t>(p), a, modulus);
}

json read_json_arg(const std::string& text) {
  std::string body = text;
  if (text.find('{') == std::string::npos) {
    std::ifstream in(text);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

CurveModel load_curve(const CurveArgs& a) {
  if (!a.curve.empty()) {
    const json j = read_json_arg(a.curve);
    return curve_from_json(j.contains("curve") ? j.at("curve") : j);
  }
  if (a.f.empty()) throw Error(ErrorCode::Usage, "give --curve, or --q and --f");
  FieldPtr field = field_for(a.q, a.modulus);
  const Poly h = parse_poly(a.h, *field);
  const Poly f = parse_poly(a.f, *field);
  return validate_curve(std::move(field), h, f);
}

void check_r(const std::vector<std::int64_t>& rs, bool allow_small) {
  for (const auto r : rs) {
    if (r < 1 || r > 6) throw Error(ErrorCode::InvalidR, "r must lie in [1, 6], got " + std::to_string(r));
    if (r < 3 && !allow_small) {
      throw Error(ErrorCode::InvalidR, "r = " + std::to_string(r) + " < 3 needs --allow-small-r");
    }
  }
}

void emit(const OutputArgs& o, const std::string& body, std::ostream& out) {
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::Usage, "cannot write '" + o.output + "'");
  file << body;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json document(const char* command) { return json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string text_row(const CodeRow& row) {
  std::ostringstream os;
  const auto& r = row.report;
  os << std::left << std::setw(14) << format_poly(row.curve.h) << ' ' << std::setw(26) << format_poly(row.curve.f)
     << std::right << std::setw(5) << r.n1 << std::setw(6) << row.n2 << std::setw(3) << r.r << std::setw(7) << r.n
     << std::setw(4) << r.k << std::setw(7) << r.d_lb << "  " << std::left << std::setw(8) << to_string(r.branch)
     << std::setw(10) << to_string(r.simplicity.verdict) << (r.certified ? "yes" : "no") << '\n';
  return os.str();
}

std::string text_header() {
  std::ostringstream os;
  os << std::left << std::setw(14) << "h" << ' ' << std::setw(26) << "f" << std::right << std::setw(5) << "N1"
     << std::setw(6) << "N2" << std::setw(3) << "r" << std::setw(7) << "n" << std::setw(4) << "k" << std::setw(7)
     << "d_lb" << "  " << std::left << std::setw(8) << "branch" << std::setw(10) << "simple" << "certified\n";
  return os.str();
}

json row_to_json(const CodeRow& row) {
  return json{{"h", format_poly(row.curve.h)},
              {"f", format_poly(row.curve.f)},
              {"curve", curve_to_json(row.curve)},
              {"N2", row.n2},
              {"weil", weil_to_json(row.weil)},
              {"report", report_to_json(row.report)}};
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  CurveArgs curve;
  OutputArgs out;
  std::vector<std::int64_t> r{3};
  bool allow_small_r = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const CurveModel curve = load_curve(a.curve);
  check_r(a.r, a.allow_small_r);
  const auto rows = evaluate_curve(curve, a.r, CodeParamsOptions{a.allow_small_r});
  const auto n1 = static_cast<std::int64_t>(count_points(curve, 1).count);
  const auto n2 = static_cast<std::int64_t>(count_points(curve, 2).count);
  const WeilData w = weil_from_counts(curve.field->q(), n1, n2);
  const SimplicityVerdict verdict = classify_simplicity(w);

  if (a.out.format == "csv") {
    std::string body = csv_header() + "\n";
    for (const auto& row : rows) body += csv_row(row.curve, row.n2, row.weil, row.report) + "\n";
    emit(a.out, body, out);
    return 0;
  }
  if (a.out.format == "text") {
    std::ostringstream os;
    os << "curve  y^2 + (" << format_poly(curve.h) << ") y = " << format_poly(curve.f) << " over F_" << w.q << '\n'
       << "N1 = " << n1 << ", N2 = " << n2 << ", f_A = " << format_int_poly(w.polynomial()) << '\n'
       << "n = " << jacobian_order(w) << ", simplicity " << to_string(verdict.verdict) << " (" << verdict.reason
       << ")\n"
       << text_header();
    for (const auto& row : rows) os << text_row(row);
    emit(a.out, os.str(), out);
    return 0;
  }

  json j = document("analyze");
  j["curve"] = curve_to_json(curve);
  j["N1"] = n1;
  j["N2"] = n2;
  j["weil"] = weil_to_json(w);
  j["f_A"] = format_int_poly(w.polynomial());
  j["factorization"] = factorization_to_json(factor_weil(w));
  j["n"] = jacobian_order(w);
  j["simple"] = verdict.verdict == Simplicity::Simple;
  j["simplicity"] = simplicity_to_json(verdict);
  if (rows.size() == 1) {
    const auto& r = rows.front().report;
    j["r"] = r.r;
    j["k"] = r.k;
    j["d_lb"] = r.d_lb;
    j["branch"] = to_string(r.branch);
    j["certified"] = r.certified;
  }
  json reports = json::array();
  for (const auto& row : rows) reports.push_back(report_to_json(row.report));
  j["reports"] = reports;
  emit(a.out, dump(j), out);
  return 0;
}

struct JacobianArgs {
  CurveArgs curve;
  OutputArgs out;
  bool enumerate = false;
  bool verify_order = false;
};

int cmd_jacobian(const JacobianArgs& a, std::ostream& out) {
  const CurveModel curve = load_curve(a.curve);
  const auto n1 = static_cast<std::int64_t>(count_points(curve, 1).count);
  const auto n2 = static_cast<std::int64_t>(count_points(curve, 2).count);
  const WeilData w = weil_from_counts(curve.field->q(), n1, n2);
  const std::int64_t order = jacobian_order(w);

  std::optional<EnumeratedJacobian> jac;
  if (a.enumerate || a.verify_order) jac.emplace(enumerate_jacobian(curve, {a.verify_order}));

  if (a.out.format == "text") {
    std::ostringstream os;
    os << "f_A = " << format_int_poly(w.polynomial()) << "\n#J = f_A(1) = " << order << '\n';
    if (jac) {
      os << "enumerated " << jac->order() << " elements, theta has " << jac->theta().size() << '\n';
      if (a.enumerate) {
        for (const auto& d : jac->elements()) os << "  u = " << format_poly(d.u) << ", v = " << format_poly(d.v) << '\n';
      }
    }
    emit(a.out, os.str(), out);
    return 0;
  }
  json j = document("jacobian");
  j["curve"] = curve_to_json(curve);
  j["N1"] = n1;
  j["N2"] = n2;
  j["weil"] = weil_to_json(w);
  j["order"] = order;
  if (jac) {
    j["enumerated_order"] = jac->order();
    j["theta_size"] = jac->theta().size();
    if (a.verify_order) j["order_verified"] = true;
    if (a.enumerate) {
      json el = json::array();
      for (const auto& d : jac->elements()) el.push_back(divisor_to_json(d));
      j["elements"] = el;
    }
  }
  emit(a.out, dump(j), out);
  return 0;
}

struct BoundArgs {
  std::uint64_t q = 0;
  std::int64_t tau = 0;
  std::int64_t pi = 2;
  OutputArgs out{"text", ""};
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  if (a.q < 2) throw Error(ErrorCode::Usage, "--q must be at least 2");
  field_of_order(a.q);  // q must be a prime power
  const std::int64_t b = weil_type_point_bound(a.q, a.tau, a.pi);
  if (a.out.format == "text") {
    emit(a.out, std::to_string(b) + "\n", out);
    return 0;
  }
  json j = document("bound");
  j["q"] = a.q;
  j["tau"] = a.tau;
  j["pi"] = a.pi;
  j["m"] = serre_constant(a.q);
  j["bound"] = b;
  emit(a.out, dump(j), out);
  return 0;
}

struct AttainArgs {
  CurveArgs curve;
  OutputArgs out;
  std::int64_t r = 3;
  std::size_t tuples = 20;
  bool allow_small_r = false;
};

int cmd_attain(const AttainArgs& a, std::ostream& out) {
  const CurveModel curve = load_curve(a.curve);
  check_r({a.r}, a.allow_small_r);
  const EnumeratedJacobian jac = enumerate_jacobian(curve);
  const auto n1 = static_cast<std::int64_t>(jac.theta().size());
  const auto n2 = static_cast<std::int64_t>(count_points(curve, 2).count);
  const WeilData w = weil_from_counts(curve.field->q(), n1, n2);
  const CodeReport report = code_params(w, n1, a.r, {a.allow_small_r});
  const auto tuples = find_zero_sum_tuples(jac, static_cast<unsigned>(a.r), a.tuples);

  std::vector<TranslateExperiment> runs;
  runs.reserve(tuples.size());
  for (const auto& t : tuples) runs.push_back(translate_support_count(jac, t));

  if (a.out.format == "text") {
    std::ostringstream os;
    os << "n = " << report.n << ", k = " << report.k << ", d_lb = " << report.d_lb << ", r N1 = " << a.r * n1 << '\n';
    for (const auto& e : runs) {
      os << "N(D) = " << e.support_count << "  n - N(D) = " << e.weight_surrogate
         << (e.attained ? "  attained" : "") << '\n';
    }
    emit(a.out, os.str(), out);
    return 0;
  }
  json j = document("attain");
  j["curve"] = curve_to_json(curve);
  j["report"] = report_to_json(report);
  json ex = json::array();
  for (const auto& e : runs) ex.push_back(experiment_to_json(e));
  j["experiments"] = ex;
  emit(a.out, dump(j), out);
  return 0;
}

struct SearchArgs {
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::int64_t> r{3};
  bool exhaustive = false;
  bool random = false;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string kind = "imaginary";
  int h_degree = -1;
  unsigned threads = 0;
  std::size_t top = 20;
  OutputArgs out;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchSpace space;
  space.field = field_for(a.q, a.modulus);
  space.kind = a.kind == "real" ? KindFilter::Real : a.kind == "any" ? KindFilter::Any : KindFilter::Imaginary;
  space.h_max_degree = a.h_degree;
  space.mode = a.random ? SearchMode::Random : SearchMode::Exhaustive;
  space.seed = a.seed;
  space.trials = a.trials;
  check_r(a.r, true);

  BestCodesOptions opts;
  opts.threads = a.threads;
  if (a.top > 0) opts.keep = a.top;
  const BestCodesResult res = best_codes(space, a.r, opts);

  if (a.out.format == "csv") {
    std::string body = csv_header() + "\n";
    for (const auto& row : res.rows) body += csv_row(row.curve, row.n2, row.weil, row.report) + "\n";
    emit(a.out, body, out);
    return 0;
  }
  if (a.out.format == "text") {
    std::ostringstream os;
    os << "F_" << a.q << ' ' << to_string(space.kind) << ' ' << to_string(space.mode);
    if (space.mode == SearchMode::Random) os << " seed " << space.seed << " trials " << space.trials;
    os << ": " << res.valid_curves << " valid of " << res.candidates << ", max N1 = " << res.max_n1 << '\n'
       << text_header();
    for (const auto& row : res.rows) os << text_row(row);
    emit(a.out, os.str(), out);
    return 0;
  }
  json j = document("search");
  j["field"] = field_to_json(*space.field);
  j["kind"] = to_string(space.kind);
  j["mode"] = to_string(space.mode);
  if (space.mode == SearchMode::Random) {
    j["seed"] = space.seed;
    j["trials"] = space.trials;
  }
  j["h_max_degree"] = space.h_max_degree;
  j["r"] = a.r;
  j["candidates"] = res.candidates;
  j["valid_curves"] = res.valid_curves;
  j["max_n1"] = res.max_n1;
  j["max_n1_curve"] = res.max_n1_curve ? curve_to_json(*res.max_n1_curve) : json(nullptr);
  json rows = json::array();
  for (const auto& row : res.rows) rows.push_back(row_to_json(row));
  j["rows"] = rows;
  emit(a.out, dump(j), out);
  return 0;
}

int cmd_selftest(std::ostream& out) {
  const SelftestReport report = run_selftest();
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) out << ": " << c.detail;
    out << '\n';
  }
  out << (report.passed() ? "selftest passed\n" : "selftest FAILED\n");
  return report.passed() ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes on Jacobians of genus-2 curves over small finite fields", "jacobicode"};
  app.require_subcommand(1);
  // -h would clash with --h; subcommands inherit this flag.
  app.set_help_flag("--help", "Print this help message and exit");

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Code parameters for one curve");
  add_curve_options(c_analyze, analyze.curve);
  add_output_options(c_analyze, analyze.out, true);
  c_analyze->add_option("--r", analyze.r, "Comma-separated multiples of the theta divisor")->delimiter(',');
  c_analyze->add_flag("--allow-small-r", analyze.allow_small_r, "Permit r = 1, 2");

  JacobianArgs jacobian;
  auto* c_jacobian = app.add_subcommand("jacobian", "Order and elements of the Jacobian");
  add_curve_options(c_jacobian, jacobian.curve);
  add_output_options(c_jacobian, jacobian.out, false);
  c_jacobian->add_flag("--enumerate", jacobian.enumerate, "List every element");
  c_jacobian->add_flag("--verify-order", jacobian.verify_order, "Check the element count against f_A(1)");

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "Point bound for a curve of arithmetic genus pi on the surface");
  c_bound->add_option("--q", bound.q, "Field order")->required();
  c_bound->add_option("--tau", bound.tau, "Trace, #C(F_q) = q + 1 + tau")->required();
  c_bound->add_option("--pi", bound.pi, "Arithmetic genus");
  add_output_options(c_bound, bound.out, false);

  AttainArgs attain;
  auto* c_attain = app.add_subcommand("attain", "Translate experiments for zero-sum tuples");
  add_curve_options(c_attain, attain.curve);
  add_output_options(c_attain, attain.out, false);
  c_attain->add_option("--r", attain.r, "Number of translates");
  c_attain->add_option("--tuples", attain.tuples, "Number of tuples to examine");
  c_attain->add_flag("--allow-small-r", attain.allow_small_r, "Permit r = 1, 2");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Best codes over a family of curves");
  c_search->add_option("--q", search.q, "Field order")->required();
  c_search->add_option("--modulus", search.modulus, "Field modulus coefficients")->delimiter(',');
  c_search->add_option("--r", search.r, "Comma-separated r values")->delimiter(',');
  auto* ex = c_search->add_flag("--exhaustive", search.exhaustive, "Walk every coefficient tuple (default)");
  auto* rnd = c_search->add_flag("--random", search.random, "Draw random coefficient tuples");
  ex->excludes(rnd);
  c_search->add_option("--trials", search.trials, "Random draws");
  c_search->add_option("--seed", search.seed, "Random seed");
  c_search->add_option("--kind", search.kind, "Model kind")->check(CLI::IsMember({"imaginary", "real", "any"}));
  c_search->add_option("--h-degree", search.h_degree, "Largest degree of h in characteristic 2");
  c_search->add_option("--threads", search.threads, "Worker threads (default JACOBICODE_THREADS or all cores)");
  c_search->add_option("--top", search.top, "Rows to keep, 0 for all");
  add_output_options(c_search, search.out, true);

  app.add_subcommand("selftest", "Run the invariant suites over q = 2, 3, 4, 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (c_analyze->parsed()) return cmd_analyze(analyze, out);
    if (c_jacobian->parsed()) return cmd_jacobian(jacobian, out);
    if (c_bound->parsed()) return cmd_bound(bound, out);
    if (c_attain->parsed()) return cmd_attain(attain, out);
    if (c_search->parsed()) return cmd_search(search, out);
    return cmd_selftest(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_tripwire(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace jacobicode
