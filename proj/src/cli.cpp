#include "linres/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linres/binomial.hpp"
#include "linres/formulas.hpp"
#include "linres/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linres {

namespace {

struct CommonOpts {
  std::string field = "q";
  std::string format = "text";
  std::string input = "-";
  int threads = 0;
  int subset_cap = 20;
  int separator_cap = 0;
};

struct GenOpts {
  std::string family;
  int n = 0;
  int d = 3;
  std::uint64_t seed = 0;
  int steps = 8;
  int max_n = 10;
};

struct FormulaOpts {
  int n = 0;
  int d = 0;
  unsigned long long mu = 0;
};

FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "0") return FieldSpec::rationals();
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return FieldSpec(static_cast<std::uint32_t>(v));
  } catch (const error& e) {
    fail(errc::parse_error, e.what());  // composite: keep the primality diagnostic
  } catch (const std::exception&) {
    fail(errc::parse_error, "--field expects 'q' or a prime, got '" + s + "'");
  }
}

Clutter load_clutter(const CommonOpts& opts, std::istream& stdin_stream) {
  if (opts.input == "-") return parse_clutter(stdin_stream);
  std::ifstream f(opts.input);
  if (!f) fail(errc::parse_error, "cannot open input file '" + opts.input + "'");
  return parse_clutter(f);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  cmd->add_option("--field", opts.field, "coefficient field: q (rationals) or a prime");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", opts.threads,
                  "worker threads for the subset enumeration (0 = default)");
  cmd->add_option("--subset-cap", opts.subset_cap,
                  "largest n admitted to the 2^n Hochster enumeration");
  cmd->add_option("--separator-cap", opts.separator_cap,
                  "largest clique separator searched (0 = d+2)");
  if (with_input) cmd->add_option("input", opts.input, "clutter file, or - for standard input");
}

void apply_threads(const CommonOpts& opts) {
#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#else
  (void)opts;
#endif
}

HochsterOptions hochster_opts(const CommonOpts& opts) {
  HochsterOptions h;
  h.max_n = opts.subset_cap;
  h.threads = opts.threads;
  return h;
}

struct CheckLedger {
  std::vector<std::pair<std::string, std::string>> results;  // name -> "" (pass) or detail
  bool ok = true;
  void record(const std::string& name, bool pass, const std::string& detail = "") {
    results.emplace_back(name, pass ? "" : (detail.empty() ? "failed" : detail));
    ok = ok && pass;
  }
};

// Cross-validation ledger: the identities and oracle agreements the library
// promises, evaluated on one input.
void run_check(const Clutter& c, const FieldSpec& k, const CommonOpts& opts, CheckLedger& ledger) {
  const SimplicialComplex delta = clique_complex(c);
  const int d = c.d();
  const bool dim_ok = delta.dim() == d - 1;
  const bool zero_ideal = binomial(c.n(), c.d()) == c.size();

  {  // boundary maps compose to zero
    bool pass = true;
    for (int t = 0; t <= delta.dim(); ++t) {
      const ExactMatrix a = boundary_matrix(delta, t, k);
      const ExactMatrix b = boundary_matrix(delta, t + 1, k);
      for (int i = 0; i < a.rows && pass; ++i)
        for (int j = 0; j < b.cols && pass; ++j) {
          long long s = 0;
          for (int l = 0; l < a.cols; ++l) s += a.at(i, l) * b.at(l, j);
          if (k.is_rationals() ? (s != 0) : (s % k.characteristic() != 0)) pass = false;
        }
    }
    ledger.record("boundary_squares_to_zero", pass);
  }
  {  // Euler characteristic vs alternating homology sum
    const auto dims = reduced_homology_dims(delta, k, 0, delta.dim());
    long long alt = 0;
    for (int t = 0; t <= delta.dim(); ++t)
      alt += (t % 2 == 0 ? 1 : -1) * dims[static_cast<std::size_t>(t)];
    ledger.record("euler_identity", euler_characteristic(delta) - 1 == alt);
  }
  {  // homology below d-2 of induced subcomplexes vanishes
    bool pass = true;
    auto check_w = [&](VertexMask w) {
      const SimplicialComplex sub = induced_subcomplex(delta, w);
      for (int t = 0; t < d - 2; ++t)
        if (reduced_homology_dims(sub, k, t, t)[0] != 0) return false;
      return true;
    };
    if (c.n() <= 12) {
      for (VertexMask w = 1; w <= c.full_mask() && pass; ++w) pass = check_w(w);
    } else {
      Rng rng(12345);
      for (int s = 0; s < 200 && pass; ++s) pass = check_w((rng.next() & c.full_mask()) | 1);
    }
    ledger.record("low_homology_vanishes", pass);
  }
  if (dim_ok) {
    const auto dims = reduced_homology_dims(delta, k, d - 2, d - 1);
    const long long rhs = homology_difference_identity(c.n(), d, static_cast<long long>(c.size()));
    ledger.record("homology_difference_identity", dims[0] - dims[1] == rhs);
  }
  if (!zero_ideal) {
    const BettiTable table = betti_hochster(c, k, hochster_opts(opts));
    if (dim_ok) {
      const ShapeBoundsReport sb = verify_shape_bounds(c, k);
      ledger.record("shape_bounds", sb.ok());
      const bool cm = is_cohen_macaulay(c, k);
      ledger.record("cm_criterion_vs_projdim", cm == (table.projdim() == c.n() - d - 1));
    }
    ledger.record("linearity_consistent_with_table",
                  has_linear_resolution(c, k) == (table.regularity() == table.indeg()));
    if (c.n() <= 12)
      ledger.record("parallel_matches_serial", table.same_entries(betti_hochster_serial(c, k)));
    if (is_minimal_to_linearity(c, k)) {
      const BettiTable closed = minimal_resolution_formula(c.n(), d, table.mu());
      ledger.record("minimal_formula_matches_hochster", closed.same_entries(table));
    }
  } else {
    ledger.record("zero_ideal_is_linear", has_linear_resolution(c, k));
  }
}

int cmd_with_clutter(const std::string& sub, const CommonOpts& opts, std::istream& in,
                     std::ostream& out) {
  const FieldSpec k = parse_field(opts.field);
  const bool json = opts.format == "json";
  apply_threads(opts);
  const Clutter c = load_clutter(opts, in);

  if (sub == "betti") {
    const BettiTable t = betti_hochster(c, k, hochster_opts(opts));
    out << (json ? betti_json(t) + "\n" : render_betti_text(t));
  } else if (sub == "reg") {
    const BettiTable t = betti_hochster(c, k, hochster_opts(opts));
    if (json) {
      nlohmann::ordered_json j;
      j["field"] = k.name();
      j["reg"] = t.regularity();
      out << j.dump() << "\n";
    } else {
      out << "reg=" << t.regularity() << "\n";
    }
  } else if (sub == "linearity") {
    const bool lin = has_linear_resolution(c, k);
    if (json) {
      nlohmann::ordered_json j;
      j["field"] = k.name();
      j["linear"] = lin;
      out << j.dump() << "\n";
    } else {
      out << "linear=" << (lin ? "yes" : "no") << "\n";
    }
  } else if (sub == "homology") {
    const SimplicialComplex delta = clique_complex(c);
    const auto dims = reduced_homology_dims(delta, k, -1, delta.dim());
    if (json) {
      nlohmann::ordered_json j;
      nlohmann::ordered_json dj = nlohmann::ordered_json::object();
      for (int t = -1; t <= delta.dim(); ++t)
        dj[std::to_string(t)] = dims[static_cast<std::size_t>(t + 1)];
      j["dims"] = dj;
      j["field"] = k.name();
      out << j.dump() << "\n";
    } else {
      for (int t = -1; t <= delta.dim(); ++t)
        out << "H[" << t << "]=" << dims[static_cast<std::size_t>(t + 1)] << "\n";
    }
  } else if (sub == "classify") {
    const ClassificationReport r = classify(c, k, opts.separator_cap);
    out << (json ? report_json(r) + "\n" : render_report_text(r));
  } else if (sub == "decompose") {
    const auto dec = decompose(c, opts.separator_cap);
    if (json) {
      nlohmann::ordered_json j;
      j["decomposable"] = dec.has_value();
      if (dec) {
        j["kind"] = dec->kind == DecompositionKind::clique_intersection ? "clique-intersection"
                                                                        : "sc-disjoint";
        j["separator"] = mask_to_vertices(dec->separator);
        j["part1"] = dec->part1.circuit_lists();
        j["part2"] = dec->part2.circuit_lists();
        j["complete_search"] = dec->complete_search;
      }
      out << j.dump() << "\n";
    } else if (dec) {
      out << "decomposable=yes kind="
          << (dec->kind == DecompositionKind::clique_intersection ? "clique-intersection"
                                                                  : "sc-disjoint");
      if (dec->kind == DecompositionKind::clique_intersection)
        out << " separator=" << mask_to_string(dec->separator);
      out << "\n";
      out << "part1:\n" << to_text(dec->part1);
      out << "part2:\n" << to_text(dec->part2);
    } else {
      out << "decomposable=no\n";
    }
  } else {  // check
    CheckLedger ledger;
    run_check(c, k, opts, ledger);
    if (json) {
      nlohmann::ordered_json j;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& [name, detail] : ledger.results) {
        nlohmann::ordered_json e;
        e["name"] = name;
        e["pass"] = detail.empty();
        arr.push_back(e);
      }
      j["results"] = arr;
      j["ok"] = ledger.ok;
      out << j.dump() << "\n";
    } else {
      for (const auto& [name, detail] : ledger.results)
        out << (detail.empty() ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail)
            << "\n";
    }
    return ledger.ok ? 0 : 1;
  }
  return 0;
}

int cmd_formula(const CommonOpts& opts, const FormulaOpts& fo, std::ostream& out) {
  const BettiTable t = minimal_resolution_formula(fo.n, fo.d, fo.mu);
  out << (opts.format == "json" ? betti_json(t) + "\n" : render_betti_text(t));
  return 0;
}

int cmd_generate(const CommonOpts& opts, const GenOpts& go, std::ostream& out) {
  std::vector<std::string> trace;
  Clutter c(0, 1, {});
  if (go.family == "cycle") {
    c = cycle(go.n);
  } else if (go.family == "cross-polytope") {
    c = cross_polytope_boundary(go.d);
  } else if (go.family == "glued-bipyramids") {
    c = glued_bipyramids();
  } else if (go.family == "pinched-surface") {
    c = pinched_surface();
  } else if (go.family == "rp2") {
    c = rp2_six();
  } else if (go.family == "torus") {
    c = torus_seven();
  } else if (go.family == "maximal") {
    c = maximal_clutter(go.n, go.d);
  } else if (go.family == "generalized-chordal") {
    GeneralizedChordalParams p;
    p.d = go.d;
    p.max_n = go.max_n;
    p.steps = go.steps;
    GeneratedClutter g = generalized_chordal(go.seed, p);
    c = g.clutter;
    trace = g.trace;
  } else {
    fail(errc::parse_error, "unknown family '" + go.family + "'");
  }
  if (opts.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json_string(c));
    if (!trace.empty()) j["trace"] = trace;
    out << j.dump() << "\n";
  } else {
    for (const auto& line : trace) out << "# " << line << "\n";
    out << to_text(c);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Betti tables, regularity and classification of d-uniform clutters"};
  app.require_subcommand(1);

  const std::vector<std::string> clutter_cmds = {"betti",    "reg",       "linearity", "classify",
                                                 "decompose", "homology", "check"};
  std::map<std::string, CommonOpts> opts;
  std::map<std::string, CLI::App*> cmds;
  for (const auto& name : clutter_cmds) {
    cmds[name] = app.add_subcommand(name);
    add_common(cmds[name], opts[name]);
  }

  FormulaOpts fo;
  CLI::App* formula = app.add_subcommand("resolution-formula");
  add_common(formula, opts["resolution-formula"], false);
  formula->add_option("--n", fo.n, "vertex count")->required();
  formula->add_option("--d", fo.d, "uniformity")->required();
  formula->add_option("--mu", fo.mu, "number of minimal generators")->required();

  GenOpts go;
  CLI::App* generate = app.add_subcommand("generate");
  add_common(generate, opts["generate"], false);
  generate
      ->add_option("--family", go.family,
                   "cycle | cross-polytope | glued-bipyramids | pinched-surface | rp2 | torus | maximal | "
                   "generalized-chordal")
      ->required();
  generate->add_option("--n", go.n, "family parameter n");
  generate->add_option("--d", go.d, "family parameter d");
  generate->add_option("--seed", go.seed, "generator seed");
  generate->add_option("--steps", go.steps, "growth steps");
  generate->add_option("--max-n", go.max_n, "vertex budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (const auto& name : clutter_cmds)
      if (cmds[name]->parsed()) return cmd_with_clutter(name, opts[name], in, out);
    if (formula->parsed()) return cmd_formula(opts["resolution-formula"], fo, out);
    if (generate->parsed()) return cmd_generate(opts["generate"], go, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace linres
