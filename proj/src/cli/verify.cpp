#include "circulus/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "circulus/analysis.hpp"
#include "circulus/barycenter.hpp"
#include "circulus/bounds.hpp"
#include "circulus/cli.hpp"
#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"
#include "circulus/parasect.hpp"
#include "circulus/polygon.hpp"

namespace circulus {

namespace {

// Integer in [lo, hi]; plain modulo so draws match on every platform.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Truth from(bool ok) { return ok ? Truth::holds : Truth::violated; }

// Folds verdicts and remembers the first failure for the report.
class Tally {
 public:
  void add(Truth t, const std::string& where) {
    if (t != Truth::holds && first_.empty()) first_ = where + " " + std::string(to_string(t));
    truth_ = both(truth_, t);
    ++count_;
  }
  void add(bool ok, const std::string& where) { add(from(ok), where); }
  Truth truth() const { return truth_; }
  std::string detail() const { return first_.empty() ? std::to_string(count_) + " checks" : first_; }

 private:
  Truth truth_ = Truth::holds;
  std::string first_;
  int count_ = 0;
};

struct Node {
  bool leaf = true;
  Rational value;
  ArithKind kind = ArithKind::add;
  std::unique_ptr<Node> left, right;
};

std::unique_ptr<Node> random_tree(std::mt19937_64& rng, int depth) {
  auto node = std::make_unique<Node>();
  if (depth == 0 || draw(rng, 0, 2) == 0) {
    node->value = Rational(draw(rng, -1000, 1000), draw(rng, 1, 1000));
    return node;
  }
  node->leaf = false;
  node->kind = static_cast<ArithKind>(draw(rng, 0, 3));
  node->left = random_tree(rng, depth - 1);
  node->right = random_tree(rng, depth - 1);
  return node;
}

Rational exact_value(const Node& n) {
  if (n.leaf) return n.value;
  Rational a = exact_value(*n.left), b = exact_value(*n.right);
  switch (n.kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      if (b.sign() == 0) throw DomainError("division by zero");
      return a / b;
  }
  return a;
}

Enclosure enclose(const Node& n, Precision p) {
  if (n.leaf) return Enclosure::point(n.value, p);
  return enc_arith(enclose(*n.left, p), enclose(*n.right, p), n.kind);
}

Enclosure pi_over(long n, Precision p) { return (pi_reference(p.plus(32)) / n).with_precision(p); }

Enclosure angle(long thousandths, Precision p) { return Enclosure::point(Rational(thousandths, 1000), p); }

using Body = std::function<void(Tally&, std::mt19937_64&)>;

struct Check {
  const char* id;
  const char* name;
  Body body;
};

std::vector<Check> checks(int samples) {
  std::vector<Check> s;

  s.push_back({"EXACT-1", "random expression trees enclose their exact value", [samples](Tally& t, auto& rng) {
                 for (int i = 0; i < samples; ++i) {
                   auto tree = random_tree(rng, 4);
                   Rational truth;
                   try {
                     truth = exact_value(*tree);
                   } catch (const DomainError&) {
                     continue;
                   }
                   Precision p(32 + static_cast<unsigned>(i % 4) * 32);
                   try {
                     t.add(enclose(*tree, p).contains(truth), "tree " + std::to_string(i));
                   } catch (const DivisionByIntervalContainingZero&) {
                   }
                 }
               }});
  s.push_back({"EXACT-2", "more precision never widens an enclosure", [samples](Tally& t, auto& rng) {
                 for (int i = 0; i < samples; ++i) {
                   auto tree = random_tree(rng, 4);
                   Precision p(32 + static_cast<unsigned>(i % 4) * 32);
                   try {
                     Enclosure coarse = enclose(*tree, p), fine = enclose(*tree, Precision(4 * p.bits()));
                     t.add(fine.width() <= coarse.width() && fine.overlaps(coarse), "tree " + std::to_string(i));
                   } catch (const DivisionByIntervalContainingZero&) {
                   }
                 }
               }});
  s.push_back({"EXACT-3", "enc_sqrt(x) squared contains x", [samples](Tally& t, auto& rng) {
                 for (int i = 0; i < samples; ++i) {
                   Rational x(draw(rng, 0, 1000000), draw(rng, 1, 1000));
                   Enclosure root = enc_sqrt(Enclosure::point(x, Precision(64)));
                   t.add(root.square().contains(x), "x=" + std::to_string(x.to_double()));
                 }
               }});
  s.push_back({"EXACT-4", "sin^2 + cos^2 contains 1", [samples](Tally& t, auto& rng) {
                 for (int i = 0; i < samples; ++i) {
                   Enclosure x = Enclosure::point(Rational(draw(rng, -100000, 100000), 1000), Precision(96));
                   t.add((sin(x).square() + cos(x).square()).contains(Rational(1)), "x=" + std::to_string(i));
                 }
               }});
  s.push_back({"EXACT-5", "pi_reference nests as precision grows", [](Tally& t, auto&) {
                 Enclosure previous = pi_reference(Precision(64));
                 for (unsigned bits = 96; bits <= 512; bits += 32) {
                   Enclosure next = pi_reference(Precision(bits));
                   t.add(previous.lo() <= next.lo() && next.hi() <= previous.hi(), std::to_string(bits) + " bits");
                   t.add(next.width() <= previous.width().scaled(-32), std::to_string(bits) + " bits");
                   previous = next;
                 }
               }});

  s.push_back({"POLY-1", "inscribed < pi < circumscribed at every rung", [](Tally& t, auto&) {
                 for (int n0 : {3, 4, 6}) {
                   Precision p(128);
                   PolygonLadder l = ladder(n0, 12, p);
                   Enclosure pi = pi_reference(p);
                   for (std::size_t k = 0; k < l.size(); ++k) {
                     std::string where = "n=" + std::to_string(l.rung(k).n);
                     t.add(l.rung(k).insc.hi() <= pi.lo(), where);
                     t.add(pi.hi() <= l.rung(k).circ.lo(), where);
                   }
                 }
               }});
  s.push_back({"POLY-2", "recurrence agrees with the trig closed forms", [](Tally& t, auto&) {
                 for (int n0 : {3, 4, 6}) {
                   Precision p(64);
                   PolygonLadder l = ladder(n0, 10, p);
                   for (std::size_t k = 0; k < l.size(); ++k) {
                     PolygonRung trig = trig_rung(l.rung(k).n, p);
                     std::string where = "n=" + std::to_string(l.rung(k).n);
                     t.add(trig.insc.overlaps(l.rung(k).insc) && trig.circ.overlaps(l.rung(k).circ), where);
                   }
                 }
               }});
  s.push_back({"POLY-3", "width at rung k stays below 2^(k+6) times rung 0", [](Tally& t, auto&) {
                 for (int n0 : {3, 4, 6}) {
                   PolygonLadder l = ladder(n0, 12, Precision(64));
                   Dyadic base = std::max(l.rung(0).insc.width(), l.rung(0).circ.width());
                   for (std::size_t k = 0; k < l.size(); ++k) {
                     Dyadic limit = base.scaled(static_cast<long>(k) + 6);
                     t.add(l.rung(k).insc.width() <= limit && l.rung(k).circ.width() <= limit,
                           "n=" + std::to_string(l.rung(k).n));
                   }
                 }
               }});
  s.push_back({"POLY-4", "polygon areas match (n/2) sin(2pi/n) and the half-side perimeter", [](Tally& t, auto&) {
                 Precision p(96);
                 PolygonLadder l = ladder(4, 8, p);
                 for (std::size_t k = 0; k < l.size(); ++k) {
                   long n = l.rung(k).n;
                   Enclosure oracle = Rational(n, 2) * sin(pi_over(n, p.plus(16)).scaled(1)).with_precision(p);
                   t.add(l.rung(k).insc_area.overlaps(oracle), "n=" + std::to_string(n));
                   if (k > 0) t.add(l.rung(k).insc_area.overlaps(l.rung(k - 1).insc), "n=" + std::to_string(n));
                 }
               }});

  s.push_back({"BOUNDS-1", "lower bounds fall short of pi and upper bounds exceed it", [](Tally& t, auto&) {
                 struct Case {
                   unsigned bits;
                   int doublings;
                 };
                 for (Case c : {Case{64, 4}, Case{256, 10}}) {
                   Precision p(c.bits);
                   PolygonLadder l = ladder(6, c.doublings + 1, p);
                   Enclosure pi = pi_reference(p);
                   for (int i = 0; i <= c.doublings; ++i)
                     for (Method m : all_methods()) {
                       BoundsRow row = make_row(m, l, static_cast<std::size_t>(i));
                       std::string where = std::string(to_string(m)) + " n=" + std::to_string(row.n);
                       if (row.side == Side::lower) t.add(strictly_less(row.value, pi), where);
                       if (row.side == Side::upper) t.add(strictly_greater(row.value, pi), where);
                       if (row.side == Side::two_sided) t.add(row.value.contains(pi), where);
                     }
                 }
               }});
  s.push_back({"BOUNDS-2", "dominance chain at equal n", [](Tally& t, auto&) {
                 Precision p(256);
                 PolygonLadder l = ladder(6, 11, p);
                 Enclosure pi = pi_reference(p);
                 for (std::size_t k = 0; k + 1 < l.size(); ++k) {
                   std::string where = "n=" + std::to_string(l.rung(k).n);
                   Enclosure arch = archimedes(l, k), vii = huygens_vii_lower(l, k + 1);
                   Enclosure fin = huygens_final_lower(l, k + 1), xvi = huygens_xvi_upper(l, k + 1);
                   Enclosure ix = snell_ix_upper(l, k);
                   t.add(arch.lo() <= vii.lo() && vii.hi() <= fin.hi(), where);
                   t.add(strictly_less(fin, pi), where);
                   t.add(strictly_less(pi, xvi), where);
                   t.add(xvi.lo() <= ix.lo() && ix.hi() <= arch.hi(), where);
                 }
               }});
  s.push_back({"BOUNDS-3", "polygon bounds are n times the arc forms", [](Tally& t, auto&) {
                 Precision p(128);
                 PolygonLadder l = ladder(6, 5, p);
                 for (std::size_t k = 1; k < l.size(); ++k) {
                   long n = l.rung(k - 1).n;
                   Enclosure x = pi_over(n, p);
                   std::string where = "n=" + std::to_string(n);
                   for (Method m : {Method::huygens_vii, Method::huygens_xvi_upper, Method::huygens_final_lower,
                                    Method::schuh27_lower})
                     t.add(evaluate(m, l, k).overlaps(n * arc_bounds(x, m)), where + " " + std::string(to_string(m)));
                   t.add(cusa_lower(l, k).overlaps((2 * n) * cusa_lower_arc(pi_over(2 * n, p))), where + " cusa");
                   t.add(snell_ix_upper(l, k - 1).overlaps(n * snell_upper_arc(x)), where + " snell");
                 }
               }});
  s.push_back({"BOUNDS-4", "chord and sine forms of the XVI bound agree", [samples](Tally& t, auto& rng) {
                 Precision p(128);
                 for (int i = 0; i < samples; ++i) {
                   long c = draw(rng, 1, 1000000), b = c + draw(rng, 1, 1000000);
                   Enclosure eb = Enclosure::point(Rational(b, 1000000), p);
                   Enclosure ec = Enclosure::point(Rational(c, 1000000), p);
                   t.add(xvi_upper_form(eb, ec).overlaps(xvi_upper_chord_form(eb, ec)), "draw " + std::to_string(i));
                 }
               }});

  s.push_back({"BARY-1", "closed-form barycenter agrees with quadrature", [](Tally& t, auto&) {
                 Precision p(64);
                 for (long r2 : {1L, 2L, 6L})
                   for (long th : {50L, 700L, 1571L, 2500L, 3141L}) {
                     Enclosure r = Enclosure::point(Rational(r2, 2), p), theta = angle(th, p);
                     t.add(barycenter_exact(r, theta).overlaps(barycenter_oracle(r, theta, 1 << 12)),
                           "r=" + std::to_string(r2) + "/2 theta=" + std::to_string(th) + "e-3");
                   }
                 Enclosure pi = pi_reference(p);
                 t.add(barycenter_exact(Enclosure::point(1, p), pi).overlaps(
                           barycenter_oracle(Enclosure::point(1, p), pi, 1 << 12)),
                       "theta=pi");
               }});
  s.push_back({"BARY-2", "lever balance residual shrinks with precision", [samples](Tally& t, auto& rng) {
                 int n = std::min(samples, 50);
                 for (int i = 0; i < n; ++i) {
                   long th = draw(rng, 10, 3140);
                   BalanceReport coarse = balance_check(segment(Enclosure::point(1, Precision(64)), angle(th, Precision(64))));
                   BalanceReport fine = balance_check(segment(Enclosure::point(1, Precision(192)), angle(th, Precision(192))));
                   std::string where = "theta=" + std::to_string(th) + "e-3";
                   t.add(coarse.truth, where);
                   t.add(fine.truth, where);
                   t.add(fine.residual.width() < coarse.residual.width(), where);
                 }
               }});
  s.push_back({"BARY-3", "xi is pinched between Schuh's bound and 3a/5", [](Tally& t, auto&) {
                 Precision p(96);
                 for (long th : {10L, 50L, 200L, 1000L, 2000L, 3000L}) {
                   SegmentGeometry g = segment(Enclosure::point(1, p), angle(th, p));
                   Enclosure three_fifths = Rational(3, 5) * g.a;
                   Enclosure schuh = three_fifths - 3 * g.a.square() / (25 * (1 - three_fifths));
                   std::string where = "theta=" + std::to_string(th) + "e-3";
                   t.add(strictly_greater(g.xi, schuh), where);
                   t.add(strictly_less(g.xi, three_fifths), where);
                   if (th <= 200) t.add((g.xi - schuh).hi() < (g.xi - g.a.scaled(-1)).lo(), where + " sharper");
                 }
               }});
  s.push_back({"BARY-4", "lengths scale linearly and areas quadratically", [samples](Tally& t, auto& rng) {
                 Precision p(96);
                 int n = std::min(samples, 50);
                 for (int i = 0; i < n; ++i) {
                   long th = draw(rng, 10, 3140), lambda = draw(rng, 2, 50);
                   Enclosure theta = angle(th, p);
                   SegmentGeometry unit = segment(Enclosure::point(1, p), theta);
                   SegmentGeometry big = segment(Enclosure::point(lambda, p), theta);
                   long sq = lambda * lambda;
                   std::string where = "theta=" + std::to_string(th) + "e-3 lambda=" + std::to_string(lambda);
                   t.add(big.a.overlaps(lambda * unit.a) && big.b.overlaps(lambda * unit.b) &&
                             big.c.overlaps(lambda * unit.c) && big.xi.overlaps(lambda * unit.xi) &&
                             big.xbar.overlaps(lambda * unit.xbar),
                         where);
                   t.add(big.sigma.overlaps(sq * unit.sigma) && big.delta.overlaps(sq * unit.delta) &&
                             big.tangent->overlaps(sq * *unit.tangent),
                         where);
                 }
               }});
  s.push_back({"BARY-5", "segment inequalities hold for random angles below pi", [samples](Tally& t, auto& rng) {
                 Precision p(96);
                 for (int i = 0; i < samples; ++i) {
                   long th = draw(rng, 10, 3141);
                   for (const Verdict& v : segment_inequality_suite(segment(Enclosure::point(1, p), angle(th, p))))
                     t.add(v.truth, v.name + " at theta=" + std::to_string(th) + "e-3");
                 }
                 for (long n : {6L, 12L, 96L}) t.add(lemma_vi(n, p).truth, "lemma vi n=" + std::to_string(n));
               }});

  s.push_back({"PARA-1", "f(x) < 0 on a grid over [1e-3, 1]", [](Tally& t, auto&) {
                 Precision p(64);
                 Enclosure zero = Enclosure::point(0, p);
                 for (int i = 0; i < 200; ++i) {
                   Rational x = Rational(1, 1000) + Rational(999, 1000) * Rational(i, 199);
                   t.add(strictly_less(f_of_x(Enclosure::point(x, p)), zero), "i=" + std::to_string(i));
                 }
               }});
  s.push_back({"PARA-2", "f is strictly decreasing on the grid", [](Tally& t, auto&) {
                 Precision p(64);
                 Enclosure previous = f_of_x(Enclosure::point(Rational(1, 1000), p));
                 for (int i = 1; i < 200; ++i) {
                   Rational x = Rational(1, 1000) + Rational(999, 1000) * Rational(i, 199);
                   Enclosure f = f_of_x(Enclosure::point(x, p));
                   t.add(f.hi() < previous.lo(), "i=" + std::to_string(i));
                   previous = f;
                 }
               }});
  s.push_back({"PARA-3", "(10 - 4x)^2 - 5(2 - x)(10 - 3x) = x^2 exactly", [](Tally& t, auto& rng) {
                 for (int i = 0; i < 50; ++i) {
                   Rational x(draw(rng, -100000, 100000), draw(rng, 1, 100000));
                   t.add(derivative_identity(x), "draw " + std::to_string(i));
                 }
               }});
  s.push_back({"PARA-4", "2 f(b/r) r^2 equals circular minus parabolic area", [samples](Tally& t, auto& rng) {
                 Precision p(96);
                 int n = std::min(samples, 100);
                 for (int i = 0; i < n; ++i) {
                   Enclosure r = Enclosure::point(Rational(draw(rng, 1, 50), 7), p);
                   Enclosure b = r * Enclosure::point(Rational(draw(rng, 1, 1000), 1000), p);
                   ParabolaCircleConfig cfg = configure(r, b);
                   AreaDifferenceReport rep = area_difference_report(cfg);
                   std::string where = "draw " + std::to_string(i);
                   t.add((circular_segment_area(cfg) - parabolic_segment_area(cfg)).overlaps(2 * rep.sliver_minus_wedge),
                         where);
                   t.add(rep.bound_check, where);
                 }
               }});

  s.push_back({"ANAL-1", "lower bounds are in defect and upper bounds in excess", [](Tally& t, auto&) {
                 Precision p(256);
                 for (Method m : {Method::huygens_vii, Method::cusa, Method::huygens_final_lower, Method::schuh27_lower,
                                  Method::archimedes, Method::snell_ix, Method::snell, Method::huygens_xvi_upper}) {
                   if (side_of(m) == Side::two_sided) continue;
                   for (const ErrorSample& e : estimate_order(m, 6, 1, 6, p).samples)
                     t.add(e.error.positive(), std::string(to_string(m)) + " n=" + std::to_string(e.n));
                 }
               }});
  s.push_back({"ANAL-2", "order six methods beat order four methods from n = 12", [](Tally& t, auto&) {
                 Precision p(256);
                 for (Method six_m : {Method::huygens_xvi_upper, Method::huygens_final_lower}) {
                   OrderEstimate six = estimate_order(six_m, 6, 1, 8, p);
                   for (Method m : {Method::huygens_vii, Method::cusa, Method::snell_ix}) {
                     OrderEstimate four = estimate_order(m, 6, 1, 8, p);
                     for (std::size_t i = 0; i < four.samples.size(); ++i)
                       t.add(six.samples[i].error.hi() < four.samples[i].error.lo(),
                             std::string(to_string(six_m)) + " vs " + std::string(to_string(m)) +
                                 " n=" + std::to_string(four.samples[i].n));
                   }
                 }
               }});
  s.push_back({"ANAL-3", "measured coefficients approach the expected constants", [](Tally& t, auto&) {
                 Precision p(256);
                 for (const CoefficientRow& row : coefficient_table(p)) {
                   if (!row.expected) continue;
                   double previous = 1e300;
                   for (int k = 4; k <= 9; ++k) {
                     OrderEstimate est = estimate_order(row.method, 6, k - 3, k, p);
                     double gap = std::fabs((est.coefficient - *row.expected).mid().to_double());
                     t.add(gap < previous, std::string(to_string(row.method)) + " k=" + std::to_string(k));
                     previous = gap;
                   }
                 }
               }});

  s.push_back({"CLI-1", "identical arguments give byte-identical output", [](Tally& t, auto&) {
                 for (std::vector<std::string> args :
                      {std::vector<std::string>{"circulus", "ladder", "--seed", "6", "--doublings", "3", "--format", "csv"},
                       std::vector<std::string>{"circulus", "segment", "--theta", "2pi/3", "--format", "json"}}) {
                   std::ostringstream a, b, err;
                   int ca = cli::run(args, a, err), cb = cli::run(args, b, err);
                   t.add(ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty(), args[1]);
                 }
               }});
  s.push_back({"CLI-2", "JSON output round-trips unchanged", [](Tally& t, auto&) {
                 for (std::vector<std::string> args :
                      {std::vector<std::string>{"circulus", "ladder", "--seed", "4", "--doublings", "2", "--format", "json"},
                       std::vector<std::string>{"circulus", "appendix-f", "--x", "1/2", "--format", "json"},
                       std::vector<std::string>{"circulus", "compute", "--method", "combined", "--format", "json"}}) {
                   std::ostringstream out, err;
                   int code = cli::run(args, out, err);
                   std::string text = out.str();
                   bool ok = code == 0 && !text.empty() && text.back() == '\n';
                   if (ok) ok = nlohmann::ordered_json::parse(text).dump() + "\n" == text;
                   t.add(ok, args[1]);
                 }
               }});
  return s;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::uint64_t rng_seed, int samples) {
  std::vector<CheckResult> results;
  std::uint64_t index = 0;
  for (const Check& check : checks(samples)) {
    // Each check draws from its own stream so adding a check never shifts the others.
    std::mt19937_64 rng(rng_seed + 0x9e3779b97f4a7c15ULL * ++index);
    Tally tally;
    try {
      check.body(tally, rng);
      results.push_back({check.id, check.name, tally.truth(), tally.detail()});
    } catch (const std::exception& e) {
      results.push_back({check.id, check.name, Truth::violated, e.what()});
    }
  }
  return results;
}

Truth overall(const std::vector<CheckResult>& results) {
  Truth t = Truth::holds;
  for (const CheckResult& r : results) t = both(t, r.truth);
  return t;
}

}  // namespace circulus
