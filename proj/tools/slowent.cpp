// Command-line front end: JSON for structured results, CSV for series.
// Exit codes: 0 ok, 1 usage or input error, 2 not quasi-unipotent, 3 assertion failed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "slowent/closed_forms.hpp"
#include "slowent/json_io.hpp"
#include "slowent/lemma_suites.hpp"
#include "slowent/simd.hpp"

using namespace slowent;

namespace {

constexpr int kUsage = 1, kRejected = 2, kAssertion = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return Json::parse(in);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << s << '\n';
  return s;
}

// "depth:alpha" pairs for double chains.
std::vector<std::pair<std::size_t, double>> parse_doubles(const std::vector<std::string>& specs) {
  std::vector<std::pair<std::size_t, double>> out;
  for (const std::string& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("double chain must be given as depth:alpha, got " + s);
    try {
      out.emplace_back(std::stoul(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("cannot parse double chain " + s);
    }
  }
  return out;
}

BlockSequence require_blocks(const std::vector<std::size_t>& blocks) {
  if (blocks.empty()) throw UsageError("--blocks is required");
  validate_block_sequence(blocks);
  return blocks;
}

class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
  }
  template <class... Cols>
  void row(const Cols&... cols) {
    if (!file_.is_open()) return;
    std::ostringstream line;
    line.precision(17);
    bool first = true;
    ((line << (first ? "" : ",") << cols, first = false), ...);
    file_ << line.str() << '\n';
  }

 private:
  std::ofstream file_;
};

struct SlopeAssertion {
  std::optional<double> tolerance;
  std::optional<double> expected;

  // Adds the verdict to `out`; returns false when the assertion fails.
  bool apply(Json& out, double slope, double theory) const {
    const double target = expected.value_or(theory);
    out["expected_slope"] = target;
    if (!tolerance) return true;
    const bool pass = std::abs(slope - target) <= *tolerance;
    out["assertion"] = {{"tolerance", *tolerance}, {"pass", pass}};
    if (!pass) std::cerr << "slope " << slope << " is not within " << *tolerance << " of " << target << '\n';
    return pass;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slow entropy of quasi-unipotent flows: exact exponents, Bowen-ball simulation, toral codings."};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  bool scalar = false;
  app.add_option("--threads", threads, "Worker cap (0 = hardware concurrency)");
  app.add_flag("--scalar", scalar, "Disable SIMD kernels");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Chain structure and exponent R of ad_U for an algebra JSON file");
  std::string analyze_input;
  std::optional<long> u_index;
  std::optional<double> lambda_opt;
  double tol = kDefaultTol;
  analyze->add_option("input", analyze_input, "Algebra JSON path, or - for stdin")->required();
  analyze->add_option("--u", u_index, "Use basis element with this index as U");
  analyze->add_option("--lambda", lambda_opt, "Also report the sequence entropy R log(lambda)");
  analyze->add_option("--tol", tol, "Eigenvalue clustering radius");

  // formulas
  auto* formulas = app.add_subcommand("formulas", "Closed-form exponents");
  std::string formula_kind;
  std::vector<std::size_t> blocks;
  std::size_t formula_d = 0, sym = 0;
  formulas->add_option("kind", formula_kind, "blocks | nilpotent | twisted")->required()->check(CLI::IsMember({"blocks", "nilpotent", "twisted"}));
  formulas->add_option("--blocks", blocks, "Jordan block sizes, nondecreasing")->delimiter(',');
  formulas->add_option("--d", formula_d, "Dimension for the nilpotent example");
  formulas->add_option("--sym", sym, "Symmetric power of the twist");

  // triple
  auto* triple = app.add_subcommand("triple", "sl(2)-triple route: centralizer spectrum and R");
  std::string triple_input;
  std::vector<std::size_t> triple_blocks;
  triple->add_option("--input", triple_input, "Algebra JSON (Jacobson-Morozov on its U)");
  triple->add_option("--blocks", triple_blocks, "Block-diagonal triple in sl(d)")->delimiter(',');

  // zoo
  auto* zoo = app.add_subcommand("zoo", "Emit an example algebra as JSON");
  std::string zoo_kind, zoo_alpha = "1", zoo_output;
  std::vector<std::size_t> zoo_blocks, zoo_depths;
  std::vector<std::string> zoo_doubles;
  std::size_t zoo_d = 2, zoo_sym = 0;
  zoo->add_option("kind", zoo_kind, "sl | heisenberg | twisted | synthetic")->required()->check(CLI::IsMember({"sl", "heisenberg", "twisted", "synthetic"}));
  zoo->add_option("--blocks", zoo_blocks, "Jordan block sizes")->delimiter(',');
  zoo->add_option("--d", zoo_d, "Dimension of the Heisenberg-type example");
  zoo->add_option("--alpha", zoo_alpha, "Rational rotation parameter");
  zoo->add_option("--sym", zoo_sym, "Symmetric power of the twist");
  zoo->add_option("--depths", zoo_depths, "Chain depths for the synthetic realizer")->delimiter(',');
  zoo->add_option("--double", zoo_doubles, "Double chain depth:alpha (repeatable)");
  zoo->add_option("-o,--output", zoo_output, "Write JSON here instead of stdout");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo and lemma checks on the linear divergence model");
  std::string sim_kind, csv_path, sup_mode = "exact";
  std::vector<std::size_t> depths;
  std::vector<std::string> doubles;
  McConfig mc;
  double tmin = 10, tratio = 2, lambda = 2, L = 1, eta = 0.05;
  std::size_t tcount = 5, nmax = 8, trials = 0, max_degree = 6;
  std::optional<std::uint64_t> seed;
  SlopeAssertion assertion;
  bool assert_all = false;
  simulate->add_option("kind", sim_kind, "bowen | sequence | shearing | brudnyi")->required()->check(CLI::IsMember({"bowen", "sequence", "shearing", "brudnyi"}));
  simulate->add_option("--depths", depths, "Chain depths")->delimiter(',');
  simulate->add_option("--double", doubles, "Double chain depth:alpha (repeatable)");
  simulate->add_option("--epsilon", mc.epsilon, "Bowen radius");
  simulate->add_option("--tmin", tmin, "First time of the geometric T grid");
  simulate->add_option("--tratio", tratio, "Ratio of the T grid");
  simulate->add_option("--tcount", tcount, "Number of T values");
  simulate->add_option("--samples", mc.samples, "Samples per volume estimate");
  simulate->add_option("--seed", seed, "Random seed (drawn and printed when omitted)");
  simulate->add_option("--sup-mode", sup_mode, "exact | grid")->check(CLI::IsMember({"exact", "derivative-roots", "grid"}));
  simulate->add_option("--grid-points", mc.grid_points, "Chebyshev points in grid mode");
  simulate->add_option("--lambda", lambda, "Sequence growth factor (> 1)");
  simulate->add_option("--L", L, "Sequence base time");
  simulate->add_option("--nmax", nmax, "Largest sequence index N");
  simulate->add_option("--trials", trials, "Instances for shearing / brudnyi");
  simulate->add_option("--max-degree", max_degree, "Largest polynomial degree for brudnyi");
  simulate->add_option("--eta", eta, "Separation radius for shearing");
  simulate->add_option("--assert-slope", assertion.tolerance, "Exit 3 unless the slope is within this of the expected value");
  simulate->add_option("--expect", assertion.expected, "Expected slope (defaults to the theory value)");
  simulate->add_flag("--assert", assert_all, "Exit 3 on any failed lemma instance");
  simulate->add_option("--csv", csv_path, "Write the volume series here");

  // torus
  auto* torus = app.add_subcommand("torus", "Hamming-ball covering counts of the affine toral map");
  CodingConfig coding;
  std::vector<double> window;
  std::size_t nmin = 50, ncount = 6;
  double nratio = 2;
  std::string torus_csv;
  std::optional<std::uint64_t> torus_seed;
  SlopeAssertion torus_assertion;
  torus->add_option("--d", coding.d, "Torus dimension");
  torus->add_option("--alpha", coding.alpha, "Rotation number");
  torus->add_option("--q", coding.q, "Cells per axis");
  torus->add_option("--epsilon", coding.epsilon, "Hamming radius");
  torus->add_option("--samples", coding.samples, "Sampled orbits");
  torus->add_option("--seed", torus_seed, "Random seed (drawn and printed when omitted)");
  torus->add_option("--window", window, "Per-axis widths of the sampling box")->delimiter(',');
  torus->add_option("--nmin", nmin, "First orbit length");
  torus->add_option("--nratio", nratio, "Ratio of the n grid");
  torus->add_option("--ncount", ncount, "Number of orbit lengths");
  torus->add_option("--assert-slope", torus_assertion.tolerance, "Exit 3 unless the exponent is within this of the expected value");
  torus->add_option("--expect", torus_assertion.expected, "Expected exponent (defaults to d(d-1)/2)");
  torus->add_option("--csv", torus_csv, "Write the count series here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  simd::force_scalar(scalar);

  try {
    if (analyze->parsed()) {
      Algebra a = algebra_from_json(read_json(analyze_input));
      if (u_index) {
        if (*u_index < 0 || static_cast<std::size_t>(*u_index) >= a.basis.size()) throw UsageError("--u index out of range");
        a.U = a.basis[static_cast<std::size_t>(*u_index)];
      }
      const RatMatrix ad = a.ad_u();
      const QuasiUnipotence q = is_quasi_unipotent(ad, tol);
      Json out{{"name", a.name}, {"quasi_unipotent", q.quasi_unipotent},
               {"path", q.path == QuasiUnipotence::Path::exact ? "exact" : "numeric"}};
      if (!q.quasi_unipotent) {
        const auto z = q.offending.value_or(std::complex<double>{});
        out["offending_eigenvalue"] = {{"re", z.real()}, {"im", z.imag()}};
        emit(out);
        std::cerr << "not quasi-unipotent: ad_U has eigenvalue " << z.real() << (z.imag() < 0 ? " - " : " + ")
                  << std::abs(z.imag()) << "i off the imaginary axis\n";
        return kRejected;
      }
      const EntropyReport r = slowent::analyze(ad, tol);
      out.update(to_json(r));
      if (lambda_opt) out["sequence_entropy"] = sequence_entropy(r.structure, *lambda_opt);
      emit(out);
      return 0;
    }

    if (formulas->parsed()) {
      Json out{{"kind", formula_kind}};
      if (formula_kind == "nilpotent") {
        if (formula_d == 0) throw UsageError("--d is required");
        out["d"] = formula_d;
        out["R"] = to_string(r_nilpotent_example(formula_d));
      } else {
        const BlockSequence k = require_blocks(blocks);
        out["blocks"] = k;
        if (formula_kind == "blocks") {
          out["R"] = to_string(r_block_sequence(k));
        } else {
          const auto lengths = jordan_lengths(sym_power_rep(block_nilpotent(k), sym));
          out["sym"] = sym;
          out["twist_jordan_lengths"] = lengths;
          out["R"] = to_string(r_twisted(k, lengths));
        }
      }
      emit(out);
      return 0;
    }

    if (triple->parsed()) {
      if (triple_input.empty() == triple_blocks.empty()) throw UsageError("give exactly one of --input and --blocks");
      std::vector<RatMatrix> basis;
      Sl2Triple t;
      Json out;
      if (!triple_blocks.empty()) {
        const BlockSequence k = require_blocks(triple_blocks);
        std::size_t d = 0;
        for (auto b : k) d += b;
        basis = sl_basis(d);
        t = block_triple(k);
        out["blocks"] = k;
      } else {
        const Algebra a = algebra_from_json(read_json(triple_input));
        basis = a.basis;
        t = jacobson_morozov(a.basis, a.U);
        out["name"] = a.name;
      }
      const TripleEntropy e = entropy_via_triple(basis, t);
      out["triple"] = {{"V", to_json(t.V)}, {"X", to_json(t.X)}, {"U", to_json(t.Uprime)}};
      out.update(to_json(e.spectrum));
      out["R"] = to_string(e.R);
      emit(out);
      return 0;
    }

    if (zoo->parsed()) {
      Algebra a;
      if (zoo_kind == "sl") a = sl_algebra(require_blocks(zoo_blocks));
      else if (zoo_kind == "heisenberg") a = heisenberg_type(zoo_d, parse_rational(zoo_alpha));
      else if (zoo_kind == "twisted") a = twisted_algebra(require_blocks(zoo_blocks), zoo_sym);
      else a = synthetic_from_structure(zoo_depths, parse_doubles(zoo_doubles));
      const std::string text = to_json(a).dump(2);
      if (zoo_output.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream f(zoo_output);
        if (!f) throw UsageError("cannot write " + zoo_output);
        f << text << '\n';
      }
      return 0;
    }

    if (simulate->parsed()) {
      const std::uint64_t s = resolve_seed(seed);
      Json out{{"kind", sim_kind}, {"seed", s}};
      if (sim_kind == "brudnyi") {
        const SuiteSummary r = brudnyi_suite(trials ? trials : 10000, max_degree, s);
        out.update(Json{{"trials", r.trials}, {"failures", r.failures}, {"skipped", r.skipped}, {"worst_ratio", r.worst},
                        {"all_pass", r.failures == 0}});
        emit(out);
        return assert_all && r.failures ? kAssertion : 0;
      }
      if (depths.empty() && doubles.empty()) throw UsageError("give --depths and/or --double");
      const ChainStructure st = ChainStructure::from_parts(depths, parse_doubles(doubles));
      out["structure"] = to_json(st);
      const Rational R = slow_entropy(st);
      out["R"] = to_string(R);
      if (sim_kind == "shearing") {
        const SuiteSummary r = shearing_suite(st, trials ? trials : 1000, eta, s);
        out.update(Json{{"c", shearing_constant(st)}, {"eta", eta}, {"trials", r.trials}, {"failures", r.failures},
                        {"skipped", r.skipped}, {"max_fraction", r.worst}, {"all_pass", r.failures == 0}});
        emit(out);
        return assert_all && r.failures ? kAssertion : 0;
      }
      mc.seed = s;
      mc.threads = threads;
      mc.sup_mode = parse_sup_mode(sup_mode);
      CsvSink csv(csv_path);
      VolumeSeries series;
      double theory = 0;
      const char* time_name = "T";
      if (sim_kind == "bowen") {
        mc.T_grid = geometric_grid(tmin, tratio, tcount);
        series = mc_bowen_volume(st, mc);
        theory = predicted_exponents(st).time_exponent.get_d();
      } else {
        SequenceConfig seq;
        seq.L = L;
        seq.lambda = lambda;
        seq.n_max = nmax;
        series = sequence_bowen_volume(st, seq, mc);
        theory = -sequence_entropy(st, lambda);
        time_name = "N";
        out["lambda"] = lambda;
      }
      csv.row(time_name, "volume", std::string("log10_") + time_name, "log10_V", "accepted", "samples");
      Json points = Json::array();
      for (const VolumePoint& p : series.points) {
        csv.row(p.time, p.volume, std::log10(p.time), std::log10(p.volume), p.accepted, p.samples);
        points.push_back({{time_name, p.time}, {"volume", p.volume}, {"accepted", p.accepted}, {"samples", p.samples}});
      }
      out["epsilon"] = mc.epsilon;
      out["samples"] = mc.samples;
      out["sup_mode"] = to_string(mc.sup_mode);
      out["points"] = std::move(points);
      out["fit"] = to_json(series.fit);
      const bool pass = assertion.apply(out, series.fit.exponent, theory);
      emit(out);
      return pass ? 0 : kAssertion;
    }

    if (torus->parsed()) {
      coding.seed = resolve_seed(torus_seed);
      coding.window = window;
      coding.threads = threads;
      std::vector<std::size_t> grid;
      for (double n : geometric_grid(static_cast<double>(nmin), nratio, ncount)) grid.push_back(static_cast<std::size_t>(std::llround(n)));
      coding.n = grid.empty() ? nmin : grid.front();
      coding.validate();
      const CodingSeries series = empirical_slow_entropy(coding, grid);
      CsvSink csv(torus_csv);
      csv.row("n", "S_greedy", "S_separated", "log10_n", "log10_S_greedy", "log10_S_separated");
      Json points = Json::array();
      for (const CodingPoint& p : series.points) {
        const double g = p.estimate.scaled_greedy(), sep = p.estimate.scaled_separated();
        csv.row(p.n, g, sep, std::log10(static_cast<double>(p.n)), std::log10(g), std::log10(sep));
        Json row = to_json(p.estimate);
        row["n"] = p.n;
        points.push_back(std::move(row));
      }
      Json out{{"d", coding.d}, {"alpha", coding.alpha}, {"q", coding.q}, {"epsilon", coding.epsilon},
               {"samples", coding.samples}, {"seed", coding.seed}, {"window", coding.window},
               {"points", std::move(points)}, {"fit", to_json(series.fit)}};
      const bool pass = torus_assertion.apply(out, series.fit.exponent, static_cast<double>(coding.d * (coding.d - 1) / 2));
      emit(out);
      return pass ? 0 : kAssertion;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
