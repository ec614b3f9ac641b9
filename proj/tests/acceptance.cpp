// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed below and never loosened at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "sigspec/sigspec.hpp"

namespace {

using namespace sigspec;

constexpr std::uint64_t kSeed = 20240607;
constexpr double kInputEnergyTol = 1e-9;
constexpr double kProductEnergyTol = 1e-7;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Counts for criterion 6, gathered while criteria 1-3 run.
struct CountLedger {
  int products = 0;
  int violations = 0;
  void check(const ProductGraph& pg, const MarkedSignedGraph& g1, const MarkedSignedGraph& g2) {
    ++products;
    const bool ok = pg.result.order() == expected_product_order(g1.order(), g2.order()) &&
                    pg.result.graph.size() == expected_product_size(g1.order(), g1.graph.size(), g2.order(), g2.graph.size());
    if (!ok) ++violations;
  }
};

CountLedger counts;

Outcome criterion1() {
  const int trials = 60;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(kSeed, static_cast<std::uint64_t>(t)));
    const RandomInstance a = random_generator_graph(rng, 4, true);
    const RandomInstance b = random_generator_graph(rng, 4, true);
    const ProductGraph pg = product(a.graph, b.graph);
    counts.check(pg, a.graph, b.graph);
    if (adjacency_factored(a.graph, b.graph).assembled != graph_charpoly(pg.result.graph)) {
      ++failures;
      std::printf("  mismatch: %s x %s\n", a.description.c_str(), b.description.c_str());
    }
  }
  return {failures == 0, std::to_string(trials) + " trials, " + std::to_string(failures) + " failures"};
}

Outcome criterion2() {
  const int trials = 40;
  int failures = 0;
  int paper_l = 0, paper_q = 0, paper_degree_equal = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(kSeed + 1, static_cast<std::uint64_t>(t)));
    const bool signed_inputs = t % 4 != 3;
    const RandomInstance a = random_regular_graph(rng, 4, signed_inputs);
    const RandomInstance b = random_regular_graph(rng, 4, signed_inputs);
    const ProductGraph pg = product(a.graph, b.graph);
    counts.check(pg, a.graph, b.graph);
    const Polynomial l = graph_charpoly(pg.result.graph, MatrixKind::laplacian);
    const Polynomial q = graph_charpoly(pg.result.graph, MatrixKind::signless_laplacian);
    const FactoredCharPoly fl = laplacian_factored(a.graph, b.graph, DegreeMode::constructed);
    const FactoredCharPoly fq = signless_factored(a.graph, b.graph, DegreeMode::constructed);
    if (fl.assembled != l || fq.assembled != q) {
      ++failures;
      std::printf("  mismatch: %s x %s\n", a.description.c_str(), b.description.c_str());
    }
    const FactoredCharPoly pl = laplacian_factored(a.graph, b.graph, DegreeMode::paper, BracketSign::printed);
    const FactoredCharPoly pq = signless_factored(a.graph, b.graph, DegreeMode::paper);
    paper_l += pl.assembled == l ? 1 : 0;
    paper_q += pq.assembled == q ? 1 : 0;
    paper_degree_equal += pl.a_degree == fl.a_degree ? 1 : 0;
  }
  std::printf("  paper-form record: L matches %d/%d, Q matches %d/%d, degree constants coincide in %d/%d\n", paper_l,
              trials, paper_q, trials, paper_degree_equal, trials);
  return {failures == 0, std::to_string(trials) + " trials (constructed mode), " + std::to_string(failures) + " failures"};
}

Outcome criterion3() {
  const int trials = 25;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(kSeed + 2, static_cast<std::uint64_t>(t)));
    const MarkedSignedGraph g1 = random_marked_graph(rng, 6);
    const MarkedSignedGraph k1(SignedGraph(1, {}), Marking({rng.sign()}));
    const ProductGraph pg = product(g1, k1);
    counts.check(pg, g1, k1);
    const MarkedSignedGraph c = corona(g1, k1);
    bool ok = pg.result.graph == c.graph && pg.result.marking.values() == c.marking.values();
    for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless_laplacian})
      ok = ok && graph_charpoly(pg.result.graph, k) == graph_charpoly(c.graph, k);
    ok = ok && adjacency_factored(g1, k1).assembled == graph_charpoly(c.graph);
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(trials) + " inputs, " + std::to_string(failures) + " failures"};
}

Outcome criterion4() {
  int cases = 0, failures = 0;
  for (int n = 1; n <= 6; ++n)
    for (Sign c : {Sign::plus, Sign::minus}) {
      ++cases;
      const MarkedSignedGraph s = signed_star(n, c);
      if (s.marking[0] != c || adjacency_coronal(s).as_function() != star_coronal_closed_form(n, c)) ++failures;
    }
  return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome criterion5() {
  Rng rng(kSeed + 4);
  int unbalanced = 0;
  for (int t = 0; t < 200; ++t)
    if (!is_balanced(mu_signed_graph(random_marked_graph(rng, 9)))) ++unbalanced;
  return {unbalanced == 0, "200 graphs, " + std::to_string(unbalanced) + " unbalanced"};
}

Outcome criterion6() {
  return {counts.products > 0 && counts.violations == 0,
          std::to_string(counts.products) + " products, " + std::to_string(counts.violations) + " count violations"};
}

Outcome criterion7() {
  const auto [g1, g2] = equienergetic_demo_pair();
  const MarkedSignedGraph k2 = with_canonical_marking(complete(2));
  const EquienergeticCertificate c = equienergetic_family(g1, g2, k2, {kInputEnergyTol, kProductEnergyTol});
  const bool inputs = std::abs(c.input_energy_1 - 36.0) <= kInputEnergyTol && std::abs(c.input_energy_2 - 36.0) <= kInputEnergyTol;
  const bool shape = g1.order() == 18 && g2.order() == 18 && regular_degree(g1.graph) == 6 &&
                     regular_degree(g2.graph) == 6 && c.product_1.result.order() == 72 && c.product_2.result.order() == 72;
  const double diff = std::abs(c.product_energy_1 - c.product_energy_2);
  const bool pass = inputs && shape && diff <= kProductEnergyTol && c.charpoly_1 != c.charpoly_2 && c.valid();
  char buf[200];
  std::snprintf(buf, sizeof buf, "input energies %.12f, %.12f; product energies %.9f, %.9f (diff %.2e); charpolys %s",
                c.input_energy_1, c.input_energy_2, c.product_energy_1, c.product_energy_2, diff,
                c.charpoly_1 != c.charpoly_2 ? "differ" : "equal");
  return {pass, buf};
}

Outcome criterion8() {
  int random_cases = 0, random_fail = 0;
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(kSeed + 7, static_cast<std::uint64_t>(t)));
    const RandomInstance a = random_generator_graph(rng, 4, true);
    const RandomInstance b = random_generator_graph(rng, 4, true);
    ++random_cases;
    if (integral_product_check(a.graph, b.graph).overall != is_integral(product(a.graph, b.graph).result).integral)
      ++random_fail;
  }

  int star_cases = 0, star_fail = 0, star_integral = 0;
  for (int n1 = 1; n1 <= 4; ++n1) {
    std::vector<SignedGraph> firsts{star(n1), complete(n1), path(n1), complete(n1, Signature::all_negative())};
    if (n1 >= 3) {
      firsts.push_back(cycle(n1));
      firsts.push_back(cycle(n1, Signature::all_negative()));
    }
    for (const SignedGraph& g : firsts) {
      const MarkedSignedGraph g1 = with_canonical_marking(g);
      for (int n = 1; n <= 4; ++n)
        for (Sign c : {Sign::plus, Sign::minus}) {
          ++star_cases;
          const StarIntegralityReport s = star_product_integral_check(g1, n, c);
          const IntegralityReport general = integral_product_check(g1, signed_star(n, c));
          if (s.integral != general.overall) ++star_fail;
          star_integral += s.integral ? 1 : 0;
        }
    }
  }

  // x^3 - n2 l x^2 - (n2^2 + n2 - 1) x + n2 (n2 - 1)(l - 2c), split by powers of l.
  int audit_fail = 0;
  for (int n = 1; n <= 8; ++n)
    for (Sign c : {Sign::plus, Sign::minus}) {
      const StarIntegralityReport s = star_product_integral_check(with_canonical_marking(complete(1)), n, c);
      const long m = n + 1;
      const long cv = value(c);
      if (s.cubic_constant_part != Polynomial{-2 * m * (m - 1) * cv, -(m * m + m - 1), 0, 1} ||
          s.cubic_lambda_part != Polynomial{-m * (m - 1), 0, m})
        ++audit_fail;
    }

  const bool pass = random_fail == 0 && star_fail == 0 && audit_fail == 0;
  return {pass, std::to_string(random_cases) + " random (" + std::to_string(random_fail) + " disagree), " +
                    std::to_string(star_cases) + " star (" + std::to_string(star_fail) + " disagree, " +
                    std::to_string(star_integral) + " integral), audit failures " + std::to_string(audit_fail)};
}

Outcome criterion9() {
  using testing::cli;
  using testing::run_command;
  const std::string dir = "sigspec_acceptance_tmp";
  run_command("rm -rf " + dir + " && mkdir -p " + dir);
  run_command(cli() + " gen --family cycle --n 4 --out " + dir + "/a.txt");
  run_command(cli() + " gen --family cycle --n 4 --signs=-+-+ --out " + dir + "/b.txt");
  run_command(cli() + " gen --family complete --n 3 --out " + dir + "/g.txt");

  const std::vector<std::string> commands{
      "verify-theorem --which A --trials 50 --seed 7",
      "verify-theorem --which L --trials 30 --seed 7",
      "verify-theorem --which Q --trials 30 --seed 7 --signed no",
      "verify-theorem --which L --trials 30 --seed 7 --degree-mode paper",
      "cospectral-family " + dir + "/a.txt " + dir + "/b.txt " + dir + "/g.txt --side right",
      "equienergetic-demo",
      "integral-search --family star --max-n1 3 --max-n 4",
  };
  int differing = 0, broken = 0;
  for (const auto& c : commands) {
    const auto first = run_command(cli() + " " + c);
    const auto second = run_command(cli() + " " + c);
    if (first.out.empty() || first.exit_code < 0 || first.exit_code == 1) ++broken;
    if (first.out != second.out || first.exit_code != second.exit_code) ++differing;
  }
  run_command("rm -rf " + dir);
  return {differing == 0 && broken == 0, std::to_string(commands.size()) + " commands run twice, " +
                                             std::to_string(differing) + " differ, " + std::to_string(broken) + " broken"};
}

}  // namespace

// With no argument every criterion runs; with N only criterion N runs
// (criterion 6 first replays 1-3 quietly to collect its counts).
int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [criterion 1-9]\n");
    return 2;
  }
  if (only == 6) {
    criterion1();
    criterion2();
    criterion3();
  }
  int failed = 0, ran = 0;
  for (const auto& [id, fn] : criteria) {
    if (only != 0 && id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%s; %.2fs)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
