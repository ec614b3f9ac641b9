// sigspec: command-line front end for the signed graph product toolkit.
//
// Exit codes: 0 success (including "hypothesis not satisfied" outcomes,
// which are reported in the JSON), 1 I/O or validation error, 2 a
// verification mismatch.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigspec/sigspec.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sigspec;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct Options {
  std::string out;
  std::uint64_t seed = 1;
  bool seed_given = false;
  double tol = kEnergyTolerance;
  std::string matrix = "A";
  std::string degree_mode = "constructed";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MarkedSignedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const GraphParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// FNV-1a over the file bytes, so a report names exactly what it read.
json input_json(const std::string& path) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : read_file(path)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return {{"path", path}, {"fnv1a64", hex.str()}};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw InputError("cannot write " + opt.out);
  out << text;
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

MatrixKind parse_kind(const std::string& s) {
  if (s == "A") return MatrixKind::adjacency;
  if (s == "L") return MatrixKind::laplacian;
  if (s == "Q") return MatrixKind::signless_laplacian;
  throw InputError("unknown matrix kind " + s);
}

DegreeMode parse_degree_mode(const std::string& s) {
  if (s == "constructed") return DegreeMode::constructed;
  if (s == "paper") return DegreeMode::paper;
  throw InputError("unknown degree mode " + s);
}

json poly_json(const Polynomial& p) { return {{"text", p.to_string()}, {"coefficients", p.coefficient_strings()}}; }

json coronal_json(const CoronalTriple& c) {
  return {{"text", c.to_string()}, {"P", poly_json(c.P)}, {"F", poly_json(c.F)}, {"R", poly_json(c.R)}, {"d", c.F.degree()}};
}

std::string marking_string(const Marking& m) {
  std::string s;
  for (Sign x : m.values()) s += to_char(x);
  return s;
}

json graph_summary(const MarkedSignedGraph& mg) {
  json j{{"vertices", mg.order()}, {"edges", mg.graph.size()}, {"marking", marking_string(mg.marking)}};
  if (auto r = regular_degree(mg.graph)) j["regular_degree"] = *r;
  j["balanced"] = is_balanced(mg.graph);
  return j;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  int n = 0;
  int a = 0;
  int b = 0;
  std::string signs;
  int line_graph_iterations = 0;
};

Signature signature_from(const std::string& signs, int edge_count) {
  if (signs.empty()) return Signature::all_positive();
  if (signs.size() == 1 && edge_count != 1)
    return signs == "-" ? Signature::all_negative() : Signature::all_positive();
  std::vector<Sign> out;
  for (char c : signs) {
    if (c == '+')
      out.push_back(Sign::plus);
    else if (c == '-')
      out.push_back(Sign::minus);
    else
      throw InputError(std::string("bad sign character '") + c + "'");
  }
  if (static_cast<int>(out.size()) != edge_count)
    throw InputError("--signs lists " + std::to_string(out.size()) + " signs for " + std::to_string(edge_count) + " edges");
  return Signature::explicit_signs(std::move(out));
}

int run_gen(const GenArgs& g, const Options& opt) {
  auto build = [&g](const Signature& sig) -> SignedGraph {
    if (g.family == "star") return star(g.n, sig);
    if (g.family == "path") return path(g.n, sig);
    if (g.family == "cycle") return cycle(g.n, sig);
    if (g.family == "complete") return complete(g.n, sig);
    if (g.family == "complete-bipartite") return complete_bipartite(g.a, g.b, sig);
    if (g.family == "prism") return prism(g.n, sig);
    throw InputError("unknown family " + g.family);
  };
  SignedGraph shape;
  try {
    shape = build(Signature::all_positive());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  SignedGraph graph = build(signature_from(g.signs, shape.size()));
  for (int k = 0; k < g.line_graph_iterations; ++k) graph = line_graph(graph);
  std::vector<std::string> comments{"family " + g.family};
  emit(opt, serialize_graph(with_canonical_marking(std::move(graph)), comments));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// product / charpoly / coronal / spectrum / energy

int run_product(const std::string& f1, const std::string& f2, const Options& opt) {
  const MarkedSignedGraph g1 = load_graph(f1);
  const MarkedSignedGraph g2 = load_graph(f2);
  const ProductGraph pg = product(g1, g2);
  std::vector<std::string> comments{
      "product of " + f1 + " (n1 = " + std::to_string(pg.n1) + ") and " + f2 + " (n2 = " + std::to_string(pg.n2) + ")",
      "vertex i*n2+k is a(i,k); vertex n1*n2+i*n2+q is b(i,q)"};
  for (int v = 0; v < pg.result.order(); ++v) {
    const ProductVertex o = pg.origin(v);
    comments.push_back("v" + std::to_string(v) + " = " + (o.kind == ProductVertex::Kind::a ? "a(" : "b(") +
                       std::to_string(o.i) + "," + std::to_string(o.k) + ")");
  }
  emit(opt, serialize_graph(pg.result, comments));
  return kExitOk;
}

int run_charpoly(const std::string& file, const Options& opt) {
  const MarkedSignedGraph g = load_graph(file);
  const MatrixKind kind = parse_kind(opt.matrix);
  const Polynomial p = graph_charpoly(g.graph, kind);
  emit_json(opt, {{"command", "charpoly"}, {"input", input_json(file)}, {"matrix", matrix_kind_name(kind)}, {"graph", graph_summary(g)},
                  {"charpoly", poly_json(p)}});
  return kExitOk;
}

int run_coronal(const std::string& file, bool use_mu_graph, const Options& opt) {
  const MarkedSignedGraph g = load_graph(file);
  const MatrixKind kind = parse_kind(opt.matrix);
  const MarkedSignedGraph source = use_mu_graph ? mu_signed(g) : g;
  const CoronalTriple c = signed_coronal(matrices(source)[kind], source.marking);
  emit_json(opt, {{"command", "coronal"},
                  {"input", input_json(file)},
                  {"matrix", matrix_kind_name(kind)},
                  {"mu_signed_graph", use_mu_graph},
                  {"graph", graph_summary(g)},
                  {"coronal", coronal_json(c)}});
  return kExitOk;
}

int run_spectrum(const std::string& file, bool energy_only, const Options& opt) {
  const MarkedSignedGraph g = load_graph(file);
  const MatrixKind kind = energy_only ? MatrixKind::adjacency : parse_kind(opt.matrix);
  const Spectrum s = spectrum(g.graph, kind);
  const EnergyValue e = energy(g);
  const IntegralityVerdict iv = is_integral(g);
  json j{{"command", energy_only ? "energy" : "spectrum"}, {"input", input_json(file)}, {"graph", graph_summary(g)}};
  if (!energy_only) {
    j["matrix"] = matrix_kind_name(kind);
    j["eigenvalues"] = s.eigenvalues;
    j["charpoly"] = poly_json(graph_charpoly(g.graph, kind));
  }
  j["energy"] = {{"value", e.value}, {"tolerance", e.tolerance}};
  j["integral"] = {{"integral", iv.integral}, {"integer_roots", iv.roots}};
  if (energy_only) j["charpoly"] = poly_json(graph_charpoly(g.graph));
  emit_json(opt, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-theorem

struct VerifyArgs {
  std::string which = "A";
  std::string signed_inputs = "yes";
  int trials = 50;
  int max_n1 = 4;
  int max_n2 = 4;
};

int run_verify(const VerifyArgs& v, const Options& opt) {
  const MatrixKind kind = parse_kind(v.which);
  const DegreeMode mode = parse_degree_mode(opt.degree_mode);
  if (v.signed_inputs != "yes" && v.signed_inputs != "no") throw InputError("--signed takes yes or no");
  const bool signed_inputs = v.signed_inputs == "yes";
  if (v.trials < 1 || v.max_n1 < 1 || v.max_n2 < 1) throw InputError("--trials, --max-n1 and --max-n2 must be positive");

  json trials = json::array();
  int failures = 0;
  int paper_matches = 0;
  for (int t = 0; t < v.trials; ++t) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    const bool regular = kind != MatrixKind::adjacency;
    const RandomInstance first =
        regular ? random_regular_graph(rng, v.max_n1, signed_inputs) : random_generator_graph(rng, v.max_n1, signed_inputs);
    const RandomInstance second =
        regular ? random_regular_graph(rng, v.max_n2, signed_inputs) : random_generator_graph(rng, v.max_n2, signed_inputs);

    const ProductGraph pg = product(first.graph, second.graph);
    const int n1 = first.graph.order();
    const int n2 = second.graph.order();
    const bool counts_ok = pg.result.order() == expected_product_order(n1, n2) &&
                           pg.result.graph.size() == expected_product_size(n1, first.graph.graph.size(), n2, second.graph.graph.size());
    const Polynomial direct = graph_charpoly(pg.result.graph, kind);
    const FactoredCharPoly fac = factored(kind, first.graph, second.graph, mode);
    const bool equal = fac.assembled == direct;
    const bool ok = equal && counts_ok;
    if (!ok) ++failures;

    json rec{{"trial", t},          {"seed", seed},       {"first", first.description}, {"second", second.description},
             {"vertices", pg.result.order()}, {"edges", pg.result.graph.size()}, {"counts_ok", counts_ok},
             {"equal", equal}};
    if (regular) {
      const int r1 = *regular_degree(first.graph.graph);
      const int r2 = *regular_degree(second.graph.graph);
      rec["degree_constants"] = {{"constructed", n2 * (r1 + 1)}, {"paper", r1 + 2 * n2}, {"b", r2 + n2}};
      const FactoredCharPoly literal = factored(kind, first.graph, second.graph, DegreeMode::paper, BracketSign::printed);
      const bool paper_ok = literal.assembled == direct;
      if (paper_ok) ++paper_matches;
      rec["paper_form_matches"] = paper_ok;
    }
    if (!ok) {
      rec["factored"] = poly_json(fac.assembled);
      rec["direct"] = poly_json(direct);
    }
    trials.push_back(std::move(rec));
  }

  json report{{"command", "verify-theorem"},
              {"matrix", matrix_kind_name(kind)},
              {"signed", signed_inputs},
              {"degree_mode", to_string(mode)},
              {"seed", opt.seed},
              {"trials", v.trials},
              {"max_n1", v.max_n1},
              {"max_n2", v.max_n2},
              {"failures", failures}};
  if (kind != MatrixKind::adjacency) report["paper_form_matches"] = paper_matches;
  report["verdict"] = failures == 0 ? "PASS" : "FAIL";
  report["records"] = std::move(trials);
  emit_json(opt, report);
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// cospectral-family

int run_cospectral_family(const std::string& fa, const std::string& fb, const std::string& f, const std::string& side_s,
                          const Options& opt) {
  if (side_s != "left" && side_s != "right") throw InputError("--side takes left or right");
  const ProductSide side = side_s == "left" ? ProductSide::left : ProductSide::right;
  const CospectralFamilyReport rep = cospectral_family_check(load_graph(fa), load_graph(fb), load_graph(f), side);
  json j{{"command", "cospectral-family"},
         {"inputs", {input_json(fa), input_json(fb), input_json(f)}},
         {"side", to_string(side)},
         {"mu_graphs_cospectral", rep.mu_graphs_cospectral}};
  j["same_coronal"] = rep.same_coronal ? json(*rep.same_coronal) : json(nullptr);
  j["hypothesis_holds"] = rep.hypothesis_holds;
  j["products_cospectral"] = {
      {"A", rep.products_a_cospectral},
      {"L", rep.products_l_cospectral ? json(*rep.products_l_cospectral) : json(nullptr)},
      {"Q", rep.products_q_cospectral ? json(*rep.products_q_cospectral) : json(nullptr)}};
  j["consistent"] = rep.consistent();
  emit_json(opt, j);
  return rep.consistent() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// equienergetic-demo

int run_equienergetic(const std::string& base_file, const Options& opt) {
  const auto [g1, g2] = equienergetic_demo_pair();
  const MarkedSignedGraph base = base_file.empty() ? with_canonical_marking(complete(2)) : load_graph(base_file);
  EquienergeticTolerances tol;
  tol.inputs = opt.tol;
  const EquienergeticCertificate c = equienergetic_family(g1, g2, base, tol);
  json j{{"command", "equienergetic-demo"},
         {"first", "L(L(K_{3,3})) all-positive"},
         {"second", "L(L(C3 x K2)) all-positive"},
         {"base", base_file.empty() ? json("K2 all-positive") : input_json(base_file)},
         {"tolerances", {{"inputs", tol.inputs}, {"products", tol.products}}}};
  j["hypotheses"] = {{"same_order", c.same_order},
                     {"mu_graphs_non_cospectral", c.inputs_non_cospectral},
                     {"input_energies", {c.input_energy_1, c.input_energy_2}},
                     {"mu_graphs_equienergetic", c.inputs_equienergetic},
                     {"same_coronal", c.same_coronal},
                     {"coronal_from_regularity", c.coronal_from_regularity},
                     {"failed_clause", c.failed_clause}};
  j["products"] = {{"vertices", {c.product_1.result.order(), c.product_2.result.order()}},
                   {"edges", {c.product_1.result.graph.size(), c.product_2.result.graph.size()}},
                   {"energies", {c.product_energy_1, c.product_energy_2}},
                   {"energy_difference", std::abs(c.product_energy_1 - c.product_energy_2)},
                   {"equienergetic", c.products_equienergetic},
                   {"cospectral", c.products_cospectral},
                   {"charpolys", {poly_json(c.charpoly_1), poly_json(c.charpoly_2)}}};
  j["valid"] = c.valid();
  emit_json(opt, j);
  // An invalid certificate whose hypotheses held is a verification failure.
  if (c.hypotheses_hold() && !c.valid()) return kExitMismatch;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// integral-search

int run_integral_search(const std::string& family, int max_n1, int max_n, const Options& opt) {
  if (family != "star") throw InputError("only --family star is supported");
  if (max_n1 < 1 || max_n < 1) throw InputError("--max-n1 and --max-n must be positive");
  struct Named {
    std::string name;
    SignedGraph g;
  };
  std::vector<Named> firsts;
  for (int n1 = 1; n1 <= max_n1; ++n1) {
    firsts.push_back({"star(" + std::to_string(n1) + ")", star(n1)});
    firsts.push_back({"complete(" + std::to_string(n1) + ")", complete(n1)});
    if (n1 >= 3) firsts.push_back({"path(" + std::to_string(n1) + ")", path(n1)});
    if (n1 >= 3) firsts.push_back({"cycle(" + std::to_string(n1) + ")", cycle(n1)});
  }
  json hits = json::array();
  json cases = json::array();
  int disagreements = 0;
  for (const auto& f : firsts) {
    const MarkedSignedGraph g1 = with_canonical_marking(f.g);
    for (int n = 1; n <= max_n; ++n) {
      for (Sign c : {Sign::plus, Sign::minus}) {
        const MarkedSignedGraph s = signed_star(n, c);
        const StarIntegralityReport star_rep = star_product_integral_check(g1, s);
        const IntegralityReport general = integral_product_check(g1, s);
        const bool agree = star_rep.integral == general.overall;
        if (!agree) ++disagreements;
        json rec{{"first", f.name},
                 {"star_n", n},
                 {"center_mark", std::string(1, to_char(c))},
                 {"integral", general.overall},
                 {"star_path_integral", star_rep.integral},
                 {"literal_center_integral", star_rep.literal_center_integral},
                 {"agree", agree}};
        if (general.overall) {
          std::vector<long> roots = general.r_factor.roots;
          roots.insert(roots.end(), general.bracket.roots.begin(), general.bracket.roots.end());
          std::sort(roots.begin(), roots.end(), std::greater<>());
          hits.push_back({{"first", f.name}, {"star_n", n}, {"center_mark", std::string(1, to_char(c))},
                          {"bracket_and_r_roots", roots}});
        }
        cases.push_back(std::move(rec));
      }
    }
  }
  json j{{"command", "integral-search"},
         {"family", family},
         {"max_n1", max_n1},
         {"max_n", max_n},
         {"cases", cases.size()},
         {"disagreements", disagreements},
         {"integral_hits", hits},
         {"records", cases}};
  emit_json(opt, j);
  return disagreements == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graph product toolkit: products, coronals, factored characteristic polynomials, spectra"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to FILE instead of stdout");
    sub->add_option("--seed", opt.seed, "Random seed (falls back to SIGSPEC_SEED)")->each([&opt](const std::string&) {
      opt.seed_given = true;
    });
    sub->add_option("--tol", opt.tol, "Energy tolerance");
    sub->add_option("--degree-mode", opt.degree_mode, "a-vertex degree constant: constructed or paper");
    sub->add_option("--matrix", opt.matrix, "Matrix kind: A, L or Q");
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("--family", gen.family, "star, path, cycle, complete, complete-bipartite, prism")->required();
  gen_cmd->add_option("--n", gen.n, "Order");
  gen_cmd->add_option("--a", gen.a, "First part size (complete-bipartite)");
  gen_cmd->add_option("--b", gen.b, "Second part size (complete-bipartite)");
  gen_cmd->add_option("--signs", gen.signs, "Edge signs, one +/- per edge in generator order, or a single sign for all");
  gen_cmd->add_option("--line-graph", gen.line_graph_iterations, "Apply the line graph this many times");
  add_common(gen_cmd);

  std::string file1, file2, file3;
  auto* product_cmd = app.add_subcommand("product", "Build the product of two graph files");
  product_cmd->add_option("first", file1)->required();
  product_cmd->add_option("second", file2)->required();
  add_common(product_cmd);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  charpoly_cmd->add_option("graph", file1)->required();
  add_common(charpoly_cmd);

  bool mu_graph = false;
  auto* coronal_cmd = app.add_subcommand("coronal", "Reduced signed coronal P/F and cofactor R");
  coronal_cmd->add_option("graph", file1)->required();
  coronal_cmd->add_flag("--mu-graph", mu_graph, "Use the mu-signed graph");
  add_common(coronal_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues, energy and integrality");
  spectrum_cmd->add_option("graph", file1)->required();
  add_common(spectrum_cmd);

  auto* energy_cmd = app.add_subcommand("energy", "Energy and integrality");
  energy_cmd->add_option("graph", file1)->required();
  add_common(energy_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "Compare factored and direct characteristic polynomials");
  verify_cmd->add_option("--which", verify.which, "A, L or Q");
  verify_cmd->add_option("--signed", verify.signed_inputs, "yes or no");
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--max-n1", verify.max_n1);
  verify_cmd->add_option("--max-n2", verify.max_n2);
  add_common(verify_cmd);

  std::string side = "left";
  auto* family_cmd = app.add_subcommand("cospectral-family", "Check the cospectral family corollaries");
  family_cmd->add_option("graph_a", file1)->required();
  family_cmd->add_option("graph_b", file2)->required();
  family_cmd->add_option("graph", file3)->required();
  family_cmd->add_option("--side", side, "left: (A*G, B*G); right: (G*A, G*B)");
  add_common(family_cmd);

  std::string base_file;
  auto* demo_cmd = app.add_subcommand("equienergetic-demo", "Non-cospectral equienergetic certificate for L^2 pair");
  demo_cmd->add_option("--base", base_file, "Graph file for the first factor (default K2)");
  add_common(demo_cmd);

  std::string search_family = "star";
  int max_n1 = 4;
  int max_n = 4;
  auto* search_cmd = app.add_subcommand("integral-search", "Enumerate small products and report integral ones");
  search_cmd->add_option("--family", search_family);
  search_cmd->add_option("--max-n1", max_n1);
  search_cmd->add_option("--max-n", max_n);
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (!opt.seed_given) {
    if (const char* env = std::getenv("SIGSPEC_SEED")) {
      try {
        opt.seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "error: SIGSPEC_SEED is not an integer\n";
        return kExitInput;
      }
    }
  }

  try {
    if (*gen_cmd) return run_gen(gen, opt);
    if (*product_cmd) return run_product(file1, file2, opt);
    if (*charpoly_cmd) return run_charpoly(file1, opt);
    if (*coronal_cmd) return run_coronal(file1, mu_graph, opt);
    if (*spectrum_cmd) return run_spectrum(file1, false, opt);
    if (*energy_cmd) return run_spectrum(file1, true, opt);
    if (*verify_cmd) return run_verify(verify, opt);
    if (*family_cmd) return run_cospectral_family(file1, file2, file3, side, opt);
    if (*demo_cmd) return run_equienergetic(base_file, opt);
    if (*search_cmd) return run_integral_search(search_family, max_n1, max_n, opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
