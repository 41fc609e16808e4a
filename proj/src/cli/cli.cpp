#include "circulus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "circulus/analysis.hpp"
#include "circulus/barycenter.hpp"
#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"
#include "circulus/parasect.hpp"
#include "circulus/render.hpp"
#include "circulus/verify.hpp"

namespace circulus::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string decimal_of(const Rational& q, int decimals) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  mpz_class scaled = q.numerator() * scale / q.denominator();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals)
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return negative ? "-" + digits : digits;
}

// Ordered key/value report used by every command that is not a row table.
using Report = std::vector<std::pair<std::string, std::string>>;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::plain: {
      std::size_t width = 0;
      for (const auto& [k, v] : report) width = std::max(width, k.size());
      for (const auto& [k, v] : report) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
      break;
    }
    case Format::csv:
      out << "key,value\n";
      for (const auto& [k, v] : report) out << csv_cell(k) << "," << csv_cell(v) << "\n";
      break;
    case Format::json: {
      Json j = Json::object();
      for (const auto& [k, v] : report) j[k] = v;
      out << j.dump() << "\n";
      break;
    }
  }
}

Json row_json(const RowCells& c) {
  Json j;
  j["method"] = c.method;
  j["n"] = c.n;
  j["side"] = c.side;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["width"] = c.width;
  j["correct_digits"] = c.correct_digits;
  return j;
}

void emit_rows(const std::vector<BoundsRow>& rows, const RunConfig& cfg, bool trig_seeded, std::ostream& out) {
  std::vector<RowCells> cells;
  for (const BoundsRow& r : rows) cells.push_back(row_cells(r, cfg.digits));
  switch (cfg.format) {
    case Format::plain:
      for (const RowCells& c : cells) {
        out << std::left << std::setw(20) << c.method << " n=" << std::setw(7) << c.n << std::setw(10) << c.side
            << c.rendered << "  lo=" << c.lo << "  hi=" << c.hi << "  width=" << c.width
            << "  correct_digits=" << c.correct_digits;
        if (trig_seeded) out << "  trig-seeded";
        out << "\n";
      }
      break;
    case Format::csv:
      out << "method,n,side,lo,hi,width,correct_digits\n";
      for (const RowCells& c : cells)
        out << c.method << "," << c.n << "," << c.side << "," << c.lo << "~rd," << c.hi << "~ru," << c.width << ","
            << c.correct_digits << "\n";
      break;
    case Format::json: {
      if (cells.size() == 1 && cfg.command == Command::compute) {
        out << row_json(cells.front()).dump() << "\n";
        break;
      }
      Json arr = Json::array();
      for (const RowCells& c : cells) arr.push_back(row_json(c));
      out << arr.dump() << "\n";
      break;
    }
  }
}

Method require_method(const RunConfig& cfg) {
  if (!cfg.method) throw UsageError("--method is required for this command");
  return *cfg.method;
}

std::string show(const Enclosure& e, int digits) { return render(e, digits); }

std::string show(Truth t) { return std::string(to_string(t)); }

int cmd_compute(const RunConfig& cfg, Precision p, std::ostream& out) {
  Method m = require_method(cfg);
  bool two = uses_two_rungs(m);
  if (two && cfg.doublings < 1) throw IndexError(std::string(to_string(m)) + " needs --doublings >= 1");
  PolygonLadder l = ladder(cfg.seed_sides, cfg.doublings, p);
  std::size_t i = static_cast<std::size_t>(two ? cfg.doublings - 1 : cfg.doublings);
  emit_rows({make_row(m, l, i)}, cfg, l.trig_seeded(), out);
  return ok;
}

int cmd_ladder(const RunConfig& cfg, Precision p, std::ostream& out) {
  PolygonLadder l = ladder(cfg.seed_sides, cfg.doublings + 1, p);
  std::vector<Method> methods = cfg.method ? std::vector<Method>{*cfg.method} : ladder_methods();
  std::vector<BoundsRow> rows;
  for (int i = 0; i <= cfg.doublings; ++i)
    for (Method m : methods) rows.push_back(make_row(m, l, static_cast<std::size_t>(i)));
  emit_rows(rows, cfg, l.trig_seeded(), out);
  return ok;
}

int cmd_order(const RunConfig& cfg, Precision p, std::ostream& out) {
  Method m = require_method(cfg);
  int first = std::max(0, cfg.doublings - 6);
  OrderEstimate est = estimate_order(m, cfg.seed_sides, first, cfg.doublings, p);
  std::ostringstream slope;
  slope << std::fixed << std::setprecision(4) << est.slope;
  Report report{{"method", std::string(to_string(m))},
                {"seed", std::to_string(cfg.seed_sides)},
                {"slope", slope.str()},
                {"order", std::to_string(est.order)},
                {"coefficient", show(est.coefficient, cfg.digits)}};
  for (const ErrorSample& s : est.samples) report.emplace_back("error_n" + std::to_string(s.n), show(s.error, cfg.digits));
  emit_report(report, cfg.format, out);
  return ok;
}

int cmd_barycenter(const RunConfig& cfg, Precision p, std::ostream& out) {
  Enclosure r = Enclosure::point(Rational::parse(cfg.radius), p);
  Enclosure theta = parse_angle(cfg.theta, p);
  Enclosure exact = barycenter_exact(r, theta);
  Enclosure oracle = barycenter_oracle(r, theta);
  Report report{{"theta", show(theta, cfg.digits)},
                {"radius", cfg.radius},
                {"xbar_exact", show(exact, cfg.digits)},
                {"xbar_oracle", show(oracle, cfg.digits)},
                {"overlap", exact.overlaps(oracle) ? "holds" : "violated"}};
  emit_report(report, cfg.format, out);
  return ok;
}

int cmd_segment(const RunConfig& cfg, Precision p, std::ostream& out) {
  Enclosure r = Enclosure::point(Rational::parse(cfg.radius), p);
  Enclosure theta = parse_angle(cfg.theta, p);
  SegmentGeometry g = segment(r, theta);
  int d = cfg.digits;
  Report report{{"r", show(g.r, d)},         {"theta", show(g.theta, d)}, {"a", show(g.a, d)},
                {"b", show(g.b, d)},         {"c", show(g.c, d)},         {"sigma", show(g.sigma, d)},
                {"delta", show(g.delta, d)}, {"xi", show(g.xi, d)},       {"xbar", show(g.xbar, d)}};
  report.emplace_back("tangent", g.tangent ? show(*g.tangent, d) : std::string("undefined"));
  if (g.tangent) {
    BalanceReport bal = balance_check(g);
    report.emplace_back("balance", show(bal.truth));
    report.emplace_back("balance_residual", show(bal.residual, d));
    RatioReport ratio = barycentric_equation_ratio(g);
    report.emplace_back("sigma_over_delta", show(ratio.ratio, d));
    report.emplace_back("barycentric_equation", ratio.agree ? "holds" : "violated");
    for (const Verdict& v : segment_inequality_suite(g)) report.emplace_back(v.name, show(v.truth));
  }
  emit_report(report, cfg.format, out);
  return ok;
}

int cmd_appendix_f(const RunConfig& cfg, Precision p, std::ostream& out) {
  Enclosure x = Enclosure::point(Rational::parse(cfg.x), p);
  Enclosure r = Enclosure::point(Rational::parse(cfg.radius), p);
  Enclosure f = f_of_x(x);
  ParabolaCircleConfig pc = configure(r, x * r);
  AreaDifferenceReport rep = area_difference_report(pc);
  Report report{{"x", cfg.x},
                {"f", show(f, cfg.digits)},
                {"radius", cfg.radius},
                {"sliver_minus_wedge", show(rep.sliver_minus_wedge, cfg.digits)},
                {"below_f1_bound", show(rep.below_f1)},
                {"below_r2_over_290", show(rep.below_290th)},
                {"bound_check", show(rep.bound_check)}};
  emit_report(report, cfg.format, out);
  return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<CheckResult> results = run_verify_suite(cfg.rng_seed, cfg.samples);
  Truth all = overall(results);
  switch (cfg.format) {
    case Format::plain:
      for (const CheckResult& c : results)
        out << std::left << std::setw(10) << c.id << std::setw(15) << to_string(c.truth) << c.name
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
      out << "overall " << to_string(all) << "\n";
      break;
    case Format::csv:
      out << "id,name,truth,detail\n";
      for (const CheckResult& c : results)
        out << c.id << "," << csv_cell(c.name) << "," << to_string(c.truth) << "," << csv_cell(c.detail) << "\n";
      break;
    case Format::json: {
      Json checks = Json::array();
      for (const CheckResult& c : results)
        checks.push_back(Json{{"id", c.id}, {"name", c.name}, {"truth", to_string(c.truth)}, {"detail", c.detail}});
      out << Json{{"checks", checks}, {"overall", to_string(all)}}.dump() << "\n";
      break;
    }
  }
  if (all == Truth::violated) return verify_failure;
  if (all == Truth::indeterminate) return indeterminate;
  return ok;
}

}  // namespace

Precision working_precision(int digits) {
  if (const char* env = std::getenv("CIRCULUS_PRECISION_BITS")) {
    std::string text(env);
    std::size_t used = 0;
    long bits = 0;
    try {
      bits = std::stol(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || bits < 32 || bits > 1000000)
      throw std::invalid_argument("CIRCULUS_PRECISION_BITS must be an integer >= 32");
    return Precision(static_cast<unsigned>(bits));
  }
  return Precision::for_digits(digits);
}

Enclosure parse_angle(const std::string& text, Precision p) {
  auto pos = text.find("pi");
  if (pos == std::string::npos) return Enclosure::point(Rational::parse(text), p);
  std::string before = text.substr(0, pos), after = text.substr(pos + 2);
  if (!before.empty() && before.back() == '*') before.pop_back();
  Rational factor = before.empty() ? Rational(1) : Rational::parse(before);
  if (!after.empty()) {
    if (after[0] != '/') throw DomainError("malformed angle: " + text);
    factor = factor / Rational::parse(after.substr(1));
  }
  Precision w = p.plus(16);
  return (factor * pi_reference(w)).with_precision(p);
}

RowCells row_cells(const BoundsRow& row, int digits) {
  int decimals = decimals_for(row.value, digits);
  std::string lo = render_lo(row.value, decimals), hi = render_hi(row.value, decimals);
  Rational width = Rational::parse(hi) - Rational::parse(lo);
  return RowCells{std::string(to_string(row.method)),
                  row.n,
                  std::string(to_string(row.side)),
                  lo,
                  hi,
                  decimal_of(width, decimals),
                  row.correct_digits,
                  render(row.value, digits)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Rigorous enclosures of the classical pi bounds and circular-segment theorems", "circulus"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  std::string method_name, format_name = "plain";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "significant decimal digits (4..1000)")->check(CLI::Range(4, 1000));
    sub->add_option("--format", format_name, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
  };
  auto add_polygon = [&](CLI::App* sub) {
    sub->add_option("--method", method_name, "estimator name");
    sub->add_option("--seed", cfg.seed_sides, "seed polygon: 3, 4, 6 or 30")->check(CLI::IsMember({3, 4, 6, 30}));
    sub->add_option("--doublings", cfg.doublings, "side doublings (0..40)")->check(CLI::Range(0, 40));
  };
  auto add_segment = [&](CLI::App* sub) {
    sub->add_option("--theta", cfg.theta, "central angle, e.g. 1.2, pi/2, 2pi/3");
    sub->add_option("--radius", cfg.radius, "circle radius");
  };

  struct Sub {
    const char* name;
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {"compute", Command::compute, "one bound at one side count"},
      {"ladder", Command::ladder, "every ladder method at every rung"},
      {"order", Command::order, "fitted convergence order and error coefficient"},
      {"barycenter", Command::barycenter, "segment barycenter: formula against quadrature"},
      {"segment", Command::segment, "segment geometry and its inequalities"},
      {"appendix-f", Command::appendix_f, "sliver minus wedge f(x) and its bounds"},
      {"verify", Command::verify, "run every invariant check"},
  };
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    switch (s.command) {
      case Command::compute:
      case Command::ladder:
      case Command::order:
        add_polygon(sub);
        break;
      case Command::barycenter:
      case Command::segment:
        add_segment(sub);
        break;
      case Command::appendix_f:
        sub->add_option("--x", cfg.x, "height over radius, in (0, 1]");
        sub->add_option("--radius", cfg.radius, "circle radius");
        break;
      case Command::verify:
        sub->add_option("--samples", cfg.samples, "random draws per sampled property")->check(CLI::Range(1, 100000));
        sub->add_option("--rng-seed", cfg.rng_seed, "seed of the sampling generator");
        break;
    }
    commands.emplace_back(sub, s.command);
  }
  // Same spelling with an underscore.
  app.add_subcommand("appendix_f", "alias of appendix-f")->group("");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  if (!rest.empty() && rest[0] == "appendix_f") rest[0] = "appendix-f";
  std::vector<std::string> reversed(rest.rbegin(), rest.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "circulus: " << e.what() << "\n";
    return usage;
  }
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) cfg.command = command;

  try {
    if (!method_name.empty()) {
      cfg.method = parse_method(method_name);
      if (!cfg.method) throw UsageError("unknown method: " + method_name);
    }
    cfg.format = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::plain;
    Precision p = working_precision(cfg.digits);
    switch (cfg.command) {
      case Command::compute:
        return cmd_compute(cfg, p, out);
      case Command::ladder:
        return cmd_ladder(cfg, p, out);
      case Command::order:
        return cmd_order(cfg, p, out);
      case Command::barycenter:
        return cmd_barycenter(cfg, p, out);
      case Command::segment:
        return cmd_segment(cfg, p, out);
      case Command::appendix_f:
        return cmd_appendix_f(cfg, p, out);
      case Command::verify:
        return cmd_verify(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "circulus: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "circulus: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "circulus: " << e.what() << "\n";
    return domain;
  }
  return ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace circulus::cli
