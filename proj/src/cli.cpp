#include "fracjump/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracjump/asjump.hpp"
#include "fracjump/errors.hpp"
#include "fracjump/fjump.hpp"
#include "fracjump/text_format.hpp"

namespace fracjump {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultRngSeed = 20240611;

struct Options {
  bool as = false;
  std::uint32_t p = 0;
  std::optional<std::int64_t> c;
  std::string matrix;
  std::string poly;
  std::string seed;
  std::uint64_t count = 0;
  std::string format = "csv";
  bool unchecked = false;
  std::size_t n = 0;
  std::size_t degree = 0;
  std::size_t max_terms = 0;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t rng_seed = kDefaultRngSeed;
  std::uint64_t budget = 10'000'000;
  std::uint64_t factor_bound = 1'000'000;

  EnumerationBudget enum_budget() const { return {.max_points = budget}; }
  FactorBudget factor_budget() const { return {.trial_division_bound = factor_bound}; }
};

std::string to_string(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

std::string to_string(const BigNat& v) { return v.str(); }

void add_budget_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "Maximum number of enumerated points");
  cmd->add_option("--factor-bound", o.factor_bound, "Trial-division bound used when factoring group orders");
}

// --as --p --c or --matrix --p
void add_map_options(CLI::App* cmd, Options& o) {
  cmd->add_flag("--as", o.as, "Use the Artin-Schreier map T^p - T - c");
  cmd->add_option("--p", o.p, "Field characteristic")->required();
  cmd->add_option("--c", o.c, "Artin-Schreier parameter");
  cmd->add_option("--matrix", o.matrix, "Matrix rows separated by ';', entries by ','");
}

// Without --c the verification suites run every c in F_p^*.
void require_one_map(const Options& o, bool needs_c = true) {
  if (o.as == !o.matrix.empty()) throw ParameterError("give exactly one of --as and --matrix");
  if (o.as && needs_c && !o.c) throw ParameterError("--as needs --c");
}

Json base_report(const std::string& command, Json params) {
  Json report;
  report["command"] = command;
  report["params"] = std::move(params);
  report["checks"] = Json::array();
  return report;
}

void add_check(Json& report, const std::string& name, bool pass, const std::string& detail) {
  report["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
}

int finish(Json& report, std::ostream& out) {
  bool pass = true;
  for (const auto& c : report["checks"]) pass = pass && c["pass"].get<bool>();
  const int code = pass ? kExitOk : kExitCheckFailed;
  report["exit"] = code;
  out << report.dump(2) << '\n';
  return code;
}

std::vector<std::int64_t> c_values(const Options& o) {
  if (o.c) return {*o.c};
  std::vector<std::int64_t> all;
  for (std::int64_t c = 1; c < o.p; ++c) all.push_back(c);
  return all;
}

Json map_params(const Options& o) {
  Json params{{"p", o.p}};
  if (o.as) {
    params["as"] = true;
    if (o.c) params["c"] = *o.c;
  } else if (!o.matrix.empty()) {
    params["matrix"] = o.matrix;
  }
  params["budget"] = o.budget;
  params["factor_bound"] = o.factor_bound;
  return params;
}

ProjectiveAutomorphism parse_automorphism(const Options& o) {
  const PrimeField field(o.p);
  return {field, parse_matrix(field, o.matrix)};
}

// gen ---------------------------------------------------------------------

class PointWriter {
 public:
  PointWriter(std::ostream& out, const std::string& format, std::uint32_t p) : out_(out), format_(format) {
    if (format != "csv" && format != "hex" && format != "raw") throw ParameterError("unknown format " + format);
    if (format == "raw" && p > 251) throw ParameterError("raw format needs p <= 251");
  }

  void write(const Vector& x) {
    static constexpr char kHex[] = "0123456789abcdef";
    if (format_ == "raw") {
      for (Residue v : x) buffer_.push_back(static_cast<char>(v));
    } else if (format_ == "hex") {
      for (Residue v : x) {
        buffer_.push_back(kHex[(v >> 4) & 0xf]);
        buffer_.push_back(kHex[v & 0xf]);
      }
      buffer_.push_back('\n');
    } else {
      buffer_ += format_vector(x);
      buffer_.push_back('\n');
    }
    if (buffer_.size() > (1u << 16)) flush();
  }

  void flush() {
    out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    buffer_.clear();
  }

 private:
  std::ostream& out_;
  std::string format_;
  std::string buffer_;
};

int cmd_gen(const Options& o, std::ostream& out) {
  require_one_map(o);
  if (o.format == "hex" && o.p > 256) throw ParameterError("hex format needs p <= 256");
  PointWriter writer(out, o.format, o.p);
  if (o.as) {
    const ArtinSchreierJump jump(o.p, *o.c);
    Vector x = o.seed.empty() ? Vector(jump.n(), 0) : parse_vector(jump.field(), o.seed);
    if (x.size() != jump.n()) throw ParameterError("seed must have p-1 coordinates");
    for (std::uint64_t k = 0; k < o.count; ++k) {
      x = jump.step(x);
      writer.write(x);
    }
  } else {
    const auto psi = parse_automorphism(o);
    const auto jump = FractionalJump::build(psi, o.unchecked ? BuildMode::unchecked : BuildMode::checked,
                                            o.factor_budget(), o.enum_budget());
    Vector x = o.seed.empty() ? Vector(jump.n(), 0) : parse_vector(jump.field(), o.seed);
    if (x.size() != jump.n()) throw ParameterError("seed must have n coordinates");
    for (std::uint64_t k = 0; k < o.count; ++k) {
      x = jump.eval(x);
      writer.write(x);
    }
  }
  writer.flush();
  return kExitOk;
}

// verify ------------------------------------------------------------------

void verify_full_orbit(const Options& o, Json& report) {
  require_one_map(o, false);
  if (o.as) {
    for (std::int64_t c : c_values(o)) {
      const ArtinSchreierJump jump(o.p, c);
      const auto size = affine_point_count(o.p, jump.n(), o.enum_budget());
      add_check(report, "full-orbit c=" + std::to_string(c), has_full_orbit(jump, o.enum_budget()),
                std::to_string(size) + " points");
    }
    return;
  }
  const auto psi = parse_automorphism(o);
  const auto size = affine_point_count(o.p, psi.n(), o.enum_budget());
  add_check(report, "full-orbit", is_transitive_affine(psi, o.enum_budget()), std::to_string(size) + " points");
}

// Piecewise evaluation against direct iteration over every affine point.
std::pair<std::uint64_t, std::uint64_t> compare_with_direct(const ProjectiveAutomorphism& psi,
                                                            const FractionalJump& jump,
                                                            const ArtinSchreierJump* closed_form,
                                                            const EnumerationBudget& budget) {
  affine_point_count(psi.field().modulus(), psi.n(), budget);
  std::uint64_t points = 0, mismatches = 0;
  for_each_point(psi.field().modulus(), psi.n(), [&](const Vector& x) {
    ++points;
    const auto direct = eval_direct(psi, x);
    bool ok = direct.jump_index <= psi.n() + 1;
    try {
      ok = ok && jump.eval(x) == direct.point;
    } catch (const NotTransitiveCompatible&) {
      ok = false;
    }
    if (closed_form) ok = ok && closed_form->step(x) == direct.point;
    if (!ok) ++mismatches;
  });
  return {points, mismatches};
}

void verify_oracle(const Options& o, Json& report) {
  require_one_map(o, false);
  if (o.as) {
    for (std::int64_t c : c_values(o)) {
      const ArtinSchreierJump as(o.p, c);
      const auto psi = as.automorphism();
      const auto jump = FractionalJump::build(psi, BuildMode::unchecked);
      bool forms_ok = true;
      for (std::size_t i = 1; i <= o.p; ++i) forms_ok = forms_ok && as.piece_forms(i) == jump.pieces()[i - 1];
      add_check(report, "closed-form-pieces c=" + std::to_string(c), forms_ok,
                "closed-form affine forms vs rows of M^i");
      const auto [points, bad] = compare_with_direct(psi, jump, &as, o.enum_budget());
      add_check(report, "oracle c=" + std::to_string(c), bad == 0,
                std::to_string(points) + " points, " + std::to_string(bad) + " mismatches");
    }
    return;
  }
  const auto psi = parse_automorphism(o);
  const auto jump = FractionalJump::build(psi, o.unchecked ? BuildMode::unchecked : BuildMode::checked,
                                          o.factor_budget(), o.enum_budget());
  const auto [points, bad] = compare_with_direct(psi, jump, nullptr, o.enum_budget());
  add_check(report, "oracle", bad == 0, std::to_string(points) + " points, " + std::to_string(bad) + " mismatches");
}

void verify_classify(const Options& o, Json& report) {
  if (o.n < 1) throw ParameterError("--n must be at least 1");
  const PrimeField field(o.p);
  std::uint64_t classes = 0;
  std::vector<SweepException> exceptions;
  if (o.exhaustive) {
    auto sweep = classification_sweep(o.p, o.n, o.enum_budget());
    classes = sweep.classes;
    exceptions = std::move(sweep.exceptions);
  } else {
    std::mt19937_64 rng(o.rng_seed);
    std::uniform_int_distribution<Residue> dist(0, o.p - 1);
    const std::size_t dim = o.n + 1;
    while (classes < o.samples) {
      Vector entries(dim * dim);
      for (auto& v : entries) v = dist(rng);
      const Matrix m(dim, std::move(entries));
      if (determinant(field, m) == 0) continue;
      ++classes;
      const ProjectiveAutomorphism psi(field, m);
      const auto r = classify(psi, o.enum_budget());
      if (r.proj_transitive != r.affine_transitive) exceptions.push_back({m, r});
    }
  }
  const std::string counted = std::to_string(classes) + (o.exhaustive ? " classes" : " sampled matrices");
  if (!is_degenerate_pair(o.p, o.n)) {
    add_check(report, "proj-transitive iff affine-transitive", exceptions.empty(),
              counted + ", " + std::to_string(exceptions.size()) + " exceptions");
    return;
  }
  bool shape_ok = true;
  for (const auto& e : exceptions) shape_ok = shape_ok && !e.result.proj_transitive && e.result.affine_transitive;
  add_check(report, "exceptions have non-transitive Psi and transitive psi", shape_ok,
            counted + ", " + std::to_string(exceptions.size()) + " exceptions");
  if (o.exhaustive) {
    const int kind = o.n == 1 ? 1 : 2;
    const Matrix phi = degenerate_example(kind, o.p).matrix();
    bool found = false;
    for (const auto& e : exceptions) found = found || e.matrix == phi;
    add_check(report, kind == 1 ? "Phi_1 among exceptions" : "Phi_2 among exceptions", found, format_matrix(phi));
  }
}

void verify_cost(const Options& o, Json& report) {
  if (o.c && *o.c % static_cast<std::int64_t>(o.p) == 0) throw ParameterError("c must be nonzero mod p");
  for (std::int64_t c : c_values(o)) {
    const ArtinSchreierJump jump(o.p, c);
    const std::string tag = " c=" + std::to_string(c);
    const auto census = region_census(jump, o.enum_budget());
    add_check(report, "census" + tag, census == region_census_formula(o.p), Json(census).dump());
    const Rational empirical = expected_cost_empirical(jump, o.enum_budget());
    if (o.p == 2) {
      // the closed forms assume 1 + c != 0 in the last denominator
      add_check(report, "expected-cost" + tag, empirical == Rational(7, 2), "E = " + to_string(empirical));
      continue;
    }
    std::uint64_t bad = 0;
    for_each_point(o.p, jump.n(), [&](const Vector& x) {
      const auto cost = jump.step_counted(x).second;
      if (cost.total() != piece_cost_formula(o.p, cost.piece_index)) ++bad;
    });
    add_check(report, "per-point-cost" + tag, bad == 0, std::to_string(bad) + " points off c_i");
    const Rational formula = expected_cost_formula(o.p);
    add_check(report, "expected-cost" + tag, empirical == formula,
              "empirical " + to_string(empirical) + ", formula " + to_string(formula));
  }
}

// other commands ----------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  const auto psi = parse_automorphism(o);
  const auto r = classify(psi, o.enum_budget());
  Json report{{"command", "classify"},
              {"p", o.p},
              {"n", psi.n()},
              {"matrix", format_matrix(psi.matrix())},
              {"proj_transitive", r.proj_transitive},
              {"affine_transitive", r.affine_transitive},
              {"degenerate", r.degenerate},
              {"exit", 0}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_primitive(const Options& o, std::ostream& out) {
  const PrimeField field(o.p);
  const Poly f = parse_poly(field, o.poly);
  if (f.degree() < 1) throw ParameterError("polynomial must have degree >= 1");
  const bool irreducible = is_irreducible(field, f);
  const BigNat group = projective_space_size(o.p, static_cast<std::uint64_t>(f.degree()));
  Json order = nullptr;
  try {
    order = to_string(projective_order(field, f, o.factor_budget()));
  } catch (const DomainError&) {
    // f(0) = 0 or f is not a power of an irreducible: [[T]] has no order
  }
  const bool primitive = is_projectively_primitive(field, f, o.factor_budget());
  const int code = primitive ? kExitOk : kExitCheckFailed;
  Json report{{"command", "primitive"},
              {"params", {{"p", o.p}, {"poly", format_poly(f)}, {"factor_bound", o.factor_bound}}},
              {"irreducible", irreducible},
              {"projective_order", order},
              {"group_order", to_string(group)},
              {"primitive", primitive},
              {"exit", code}};
  out << report.dump(2) << '\n';
  return code;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.degree < 1) throw ParameterError("--degree must be at least 1");
  const PrimeField field(o.p);
  affine_point_count(o.p, o.degree, o.enum_budget());
  std::string text;
  for_each_point(o.p, o.degree, [&](const Vector& low) {
    if (o.max_terms > 0) {
      const auto terms = 1 + static_cast<std::size_t>(std::count_if(low.begin(), low.end(), [](Residue v) { return v != 0; }));
      if (terms > o.max_terms) return;
    }
    Vector coeffs = low;
    coeffs.push_back(1);
    const Poly f(std::move(coeffs));
    if (is_projectively_primitive(field, f, o.factor_budget())) text += format_poly(f) + '\n';
  });
  out << text;
  return kExitOk;
}

Json rational_fields(const Rational& r) { return {{"exact", to_string(r)}, {"approx", r.convert_to<double>()}}; }

int cmd_bench(const Options& o, std::ostream& out) {
  require_one_map(o);
  Json report{{"command", "bench"}, {"params", map_params(o)}};
  std::vector<std::uint64_t> census, costs;
  Rational empirical;
  if (o.as) {
    const ArtinSchreierJump jump(o.p, *o.c);
    census = region_census(jump, o.enum_budget());
    costs.assign(o.p, 0);
    BigNat total = 0;
    for_each_point(o.p, jump.n(), [&](const Vector& x) {
      const auto cost = jump.step_counted(x).second;
      costs[cost.piece_index - 1] = cost.total();
      total += cost.total();
    });
    empirical = Rational(total, ipow(o.p, jump.n()));
    report["census"] = census;
    report["costs"] = costs;
    std::vector<std::uint64_t> predicted;
    for (std::size_t i = 1; i <= o.p; ++i) predicted.push_back(piece_cost_formula(o.p, i));
    report["costs_formula"] = predicted;
    report["expected_cost"] = rational_fields(empirical);
    const Rational formula = expected_cost_formula(o.p);
    report["expected_cost_formula"] = rational_fields(formula);
    report["expected_cost_minus_p"] = rational_fields(empirical - o.p);
  } else {
    const auto psi = parse_automorphism(o);
    const auto jump = FractionalJump::build(psi, o.unchecked ? BuildMode::unchecked : BuildMode::checked,
                                            o.factor_budget(), o.enum_budget());
    census = region_census(jump, o.enum_budget());
    BigNat total = 0;
    const auto model = piece_cost_model(jump);
    for (std::size_t i = 0; i < model.size(); ++i) {
      costs.push_back(model[i].total());
      total += BigNat(census[i]) * model[i].total();
    }
    empirical = Rational(total, ipow(o.p, jump.n()));
    report["census"] = census;
    report["costs"] = costs;
    report["expected_cost"] = rational_fields(empirical);
  }
  report["exit"] = 0;
  out << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fractional jumps of projective automorphisms over prime fields"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto* gen = app.add_subcommand("gen", "Emit successive points of the orbit of a seed");
  add_map_options(gen, o);
  gen->add_option("--count", o.count, "Number of points")->required();
  gen->add_option("--seed", o.seed, "Starting affine point (default: origin)");
  gen->add_option("--format", o.format, "csv, hex or raw")->check(CLI::IsMember({"csv", "hex", "raw"}));
  gen->add_flag("--unchecked", o.unchecked, "Skip the primitivity gate for --matrix");
  add_budget_options(gen, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->require_subcommand(1);
  auto* full_orbit = verify->add_subcommand("full-orbit", "Orbit of the origin covers all of A^n");
  auto* oracle = verify->add_subcommand("oracle", "Piecewise evaluation equals direct projective iteration");
  auto* vclassify = verify->add_subcommand("classify", "Projective vs affine transitivity over PGL_{n+1}(F_p)");
  auto* cost = verify->add_subcommand("cost", "Operation counts of the Artin-Schreier map");
  for (auto* cmd : {full_orbit, oracle}) {
    add_map_options(cmd, o);
    cmd->add_flag("--unchecked", o.unchecked, "Skip the primitivity gate for --matrix");
  }
  vclassify->add_option("--p", o.p, "Field characteristic")->required();
  vclassify->add_option("--n", o.n, "Projective dimension")->required();
  vclassify->add_flag("--exhaustive", o.exhaustive, "Sweep the whole group instead of sampling");
  vclassify->add_option("--samples", o.samples, "Number of random matrices when not exhaustive");
  vclassify->add_option("--rng-seed", o.rng_seed, "Seed of the sampling generator");
  cost->add_flag("--as", o.as, "Accepted for symmetry with the other suites");
  cost->add_option("--p", o.p, "Field characteristic")->required();
  cost->add_option("--c", o.c, "Artin-Schreier parameter (default: every c)");
  for (auto* cmd : {full_orbit, oracle, vclassify, cost}) add_budget_options(cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a single automorphism");
  classify_cmd->add_option("--p", o.p, "Field characteristic")->required();
  classify_cmd->add_option("--matrix", o.matrix, "Matrix rows separated by ';'")->required();
  add_budget_options(classify_cmd, o);

  auto* primitive = app.add_subcommand("primitive", "Test a polynomial for projective primitivity");
  primitive->add_option("--p", o.p, "Field characteristic")->required();
  primitive->add_option("--poly", o.poly, "Coefficients in ascending degree, e.g. 3,4,0,1")->required();
  add_budget_options(primitive, o);

  auto* search = app.add_subcommand("search", "List projectively primitive monic polynomials");
  search->add_option("--p", o.p, "Field characteristic")->required();
  search->add_option("--degree", o.degree, "Degree")->required();
  search->add_option("--max-terms", o.max_terms, "Keep only polynomials with at most this many nonzero terms");
  add_budget_options(search, o);

  auto* bench = app.add_subcommand("bench", "Region census and operation costs");
  add_map_options(bench, o);
  bench->add_flag("--unchecked", o.unchecked, "Skip the primitivity gate for --matrix");
  add_budget_options(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<Json> report;
  try {
    if (*gen) return cmd_gen(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*primitive) return cmd_primitive(o, out);
    if (*search) return cmd_search(o, out);
    if (*bench) return cmd_bench(o, out);

    Json params = map_params(o);
    std::string suite;
    if (*full_orbit) suite = "full-orbit";
    if (*oracle) suite = "oracle";
    if (*cost) suite = "cost";
    if (*vclassify) {
      suite = "classify";
      params = {{"p", o.p}, {"n", o.n}, {"exhaustive", o.exhaustive}, {"budget", o.budget}};
      if (!o.exhaustive) {
        params["samples"] = o.samples;
        params["rng_seed"] = o.rng_seed;
      }
    }
    params["suite"] = suite;
    report = base_report("verify", std::move(params));
    if (*full_orbit) verify_full_orbit(o, *report);
    if (*oracle) verify_oracle(o, *report);
    if (*vclassify) verify_classify(o, *report);
    if (*cost) verify_cost(o, *report);
    return finish(*report, out);
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    if (report) {
      add_check(*report, "budget", false, e.what());
      (*report)["exit"] = kExitBudget;
      out << report->dump(2) << '\n';
    }
    return kExitBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotPrimitive;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace fracjump
