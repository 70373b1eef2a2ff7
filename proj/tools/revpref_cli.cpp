#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "revpref/afriat.hpp"
#include "revpref/axioms.hpp"
#include "revpref/counterfactual.hpp"
#include "revpref/dataset.hpp"
#include "revpref/errors.hpp"
#include "revpref/maximin.hpp"
#include "revpref/quasilinear.hpp"
#include "revpref/recover.hpp"
#include "revpref/selfcheck.hpp"
#include "revpref/version.hpp"

using json = nlohmann::json;
using namespace revpref;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitUsage = 64;

Vec parse_vec(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t pos = 0;
    double v = std::stod(cell, &pos);
    if (pos != cell.size()) throw InputError("cannot parse vector component '" + cell + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty vector argument");
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json report_envelope(const std::string& command, double tol, std::uint64_t seed) {
  json j;
  j["tool"] = "revpref";
  j["version"] = kVersion;
  j["command"] = command;
  j["tolerance"] = tol;
  j["seed"] = seed;
  j["interpretation"] = {{"numberSweep", kSweepNote}, {"bigM", kBigMNote}};
  return j;
}

json axiom_json(const AxiomReport& r) {
  json j;
  j["axiom"] = r.axiom;
  j["holds"] = r.holds;
  if (r.witness) {
    json w = json::array();
    for (auto i : *r.witness) w.push_back(i + 1);  // 1-based in reports
    j["witness"] = w;
    j["slack"] = r.slack;
  }
  return j;
}

void emit(const json& j, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(outPath);
    if (!f) throw InputError("cannot write '" + outPath + "'");
    f << j.dump(2) << "\n";
  }
}

struct CommonOpts {
  std::string input;
  double tol = kDefaultTol;
  std::uint64_t seed = 20240101;
  std::string output;
  bool strictExit = false;
  std::size_t patternCap = 12;
};

int run_test(const CommonOpts& opt, const std::string& axiom, bool asCsv) {
  Dataset d = load_csv_file(opt.input);
  std::vector<AxiomReport> reports;
  if (axiom == "all") {
    reports = check_all(d, opt.tol);
  } else {
    if (axiom == "warp") reports.push_back(check_warp(d, opt.tol));
    else if (axiom == "wgarp") reports.push_back(check_wgarp(d, opt.tol));
    else if (axiom == "sarp") reports.push_back(check_sarp(d, opt.tol));
    else if (axiom == "garp") reports.push_back(check_garp(d, opt.tol));
    else if (axiom == "lod") reports.push_back(check_law_of_demand(d, opt.tol));
    else if (axiom == "slod") reports.push_back(check_strong_law(d, opt.tol));
    else throw CLI::ValidationError("--axiom", "unknown axiom '" + axiom + "'");
  }

  bool anyViolated = false;
  for (const auto& r : reports) anyViolated = anyViolated || !r.holds;

  if (asCsv) {
    std::ostringstream os;
    os << "axiom,holds,witness,slack\n";
    for (const auto& r : reports) {
      os << r.axiom << "," << (r.holds ? "true" : "false") << ",";
      if (r.witness) {
        for (std::size_t i = 0; i < r.witness->size(); ++i)
          os << (i ? " " : "") << (*r.witness)[i] + 1;
        os << "," << r.slack;
      } else {
        os << ",";
      }
      os << "\n";
    }
    if (opt.output.empty())
      std::cout << os.str();
    else
      std::ofstream(opt.output) << os.str();
  } else {
    json j = report_envelope("test", opt.tol, opt.seed);
    j["observations"] = d.T();
    j["goods"] = d.L();
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(axiom_json(r));
    j["axioms"] = arr;
    emit(j, opt.output);
  }
  return (opt.strictExit && anyViolated) ? kExitViolation : kExitOk;
}

int run_numbers(const CommonOpts& opt, const std::string& system, double eps) {
  Dataset d = load_csv_file(opt.input);
  json j = report_envelope("numbers", opt.tol, opt.seed);
  j["system"] = system;

  if (system == "afriat" || system == "strict" || system == "varian") {
    AfriatNumbers n = system == "strict" ? strict_afriat_numbers(d, eps, nullptr, opt.tol)
                                         : afriat_numbers(d, opt.tol);
    if (system == "varian") {
      j["V"] = n.U;
    } else {
      j["U"] = n.U;
      j["lambda"] = n.lambda;
    }
    j["residuals"] = matrix_json(afriat_residuals(n, d));
  } else if (system == "pairwise") {
    PairwiseNumbers n = pairwise_numbers(d, opt.tol);
    j["R"] = matrix_json(n.R);
    j["lambdaPair"] = matrix_json(n.lambdaPair);
    j["residuals"] = matrix_json(pairwise_residuals(n, d));
  } else if (system == "w") {
    WNumbers n = w_numbers(d, opt.tol);
    j["W"] = matrix_json(n.W);
  } else {
    throw CLI::ValidationError("--system", "unknown system '" + system + "'");
  }
  emit(j, opt.output);
  return kExitOk;
}

int run_prefer(const CommonOpts& opt, const std::string& xs, const std::string& ys, bool strict) {
  Dataset d = load_csv_file(opt.input);
  Vec x = parse_vec(xs), y = parse_vec(ys);
  auto fam = strict ? LocalUtilityFamily::build_strict(d, -1.0, opt.tol)
                    : LocalUtilityFamily::build(d, opt.tol);
  auto res = eval_preference(fam, x, y);

  json j = report_envelope("prefer", opt.tol, opt.seed);
  j["strict"] = strict;
  j["x"] = x;
  j["y"] = y;
  j["value"] = res.value;
  j["rowStrategy"] = res.game.rowStrategy;
  j["colStrategy"] = res.game.colStrategy;
  j["attainingPair"] = {res.iStar + 1, res.jStar + 1};
  j["minimaxGap"] = res.game.valueMaximin - res.game.valueMinimax;
  emit(j, opt.output);
  return kExitOk;
}

int run_bounds(const CommonOpts& opt, const std::string& xs, const std::string& ys,
               const std::string& set, const std::string& axiomName, std::size_t grid) {
  Dataset d = load_csv_file(opt.input);
  Vec x = parse_vec(xs);
  SupportAxiom axiom = axiomName == "garp" ? SupportAxiom::GARP : SupportAxiom::WGARP;

  auto member_of = [&](const Vec& y) -> BoundMembership {
    if (set == "rp") return in_rp(d, y, x, axiom, opt.tol, opt.patternCap);
    if (set == "nrw") return in_nrw(d, y, x, axiom, opt.tol, opt.patternCap);
    if (set == "rpw") return in_rp_robust(d, y, x, opt.tol);
    if (set == "nrww") return in_nrw_robust(d, y, x, opt.tol);
    throw CLI::ValidationError("--set", "unknown set '" + set + "'");
  };

  if (grid == 0) {
    if (ys.empty()) throw CLI::ValidationError("--y", "provide a candidate or use --grid");
    BoundMembership m = member_of(parse_vec(ys));
    json j = report_envelope("bounds", opt.tol, opt.seed);
    j["set"] = m.setName;
    j["x"] = m.query;
    j["y"] = m.candidate;
    j["member"] = m.member;
    j["patternsChecked"] = m.patternsChecked;
    j["note"] = m.note;
    if (m.certificatePrice) j["certificatePrice"] = *m.certificatePrice;
    emit(j, opt.output);
    return kExitOk;
  }

  // point-cloud sweep: n^L candidates spanning [0, 1.25 * max coordinate]
  double hi = 0.0;
  for (double v : d.bundles().data()) hi = std::max(hi, v);
  hi = hi > 0 ? 1.25 * hi : 1.0;
  std::size_t total = 1;
  for (std::size_t l = 0; l < d.L(); ++l) {
    if (total > 200000 / grid) throw PatternExplosion(total * grid, 200000);
    total *= grid;
  }
  std::ostringstream os;
  for (std::size_t l = 1; l <= d.L(); ++l) os << "y" << l << ",";
  os << "member\n";
  for (std::size_t code = 0; code < total; ++code) {
    Vec y(d.L());
    std::size_t c = code;
    bool allZero = true;
    for (std::size_t l = 0; l < d.L(); ++l) {
      y[l] = hi * double(c % grid) / double(grid - 1 == 0 ? 1 : grid - 1);
      if (y[l] > 0) allZero = false;
      c /= grid;
    }
    if (allZero) continue;
    os << format_vec(y).substr(1, format_vec(y).size() - 2) << ","
       << (member_of(y).member ? 1 : 0) << "\n";
  }
  if (opt.output.empty())
    std::cout << os.str();
  else
    std::ofstream(opt.output) << os.str();
  return kExitOk;
}

int run_counterfactual(const CommonOpts& opt, const std::string& priceStr,
                       const std::string& bundleStr, std::size_t boxFlag,
                       std::size_t priceGrid) {
  Dataset d = load_csv_file(opt.input);
  Vec pNew = parse_vec(priceStr);
  json j = report_envelope("counterfactual", opt.tol, opt.seed);
  j["newPrice"] = pNew;

  if (!bundleStr.empty()) {
    Vec xNew = parse_vec(bundleStr);
    double w = dot(pNew, xNew);
    if (w <= 0) throw InputError("new bundle must have positive cost");
    Vec xNorm(xNew);
    for (auto& v : xNorm) v /= w;  // normalize onto the wealth-1 budget face
    auto rep = in_wdemand(d, pNew, xNorm, opt.tol);
    j["bundle"] = xNew;
    j["normalizedBundle"] = xNorm;
    j["member"] = rep.member;
    if (!rep.member) {
      j["violated"] = rep.violated;
      if (rep.violatedObservation) j["violatedObservation"] = *rep.violatedObservation + 1;
    }

    if (priceGrid > 0) {
      // sweep a grid of alternative prices for the same bundle through the
      // binary feasibility system
      CounterfactualQuery q{d, {CounterfactualSlot{}}};
      std::mt19937_64 rng(opt.seed);
      std::uniform_real_distribution<double> pr(0.2, 2.0);
      for (std::size_t i = 0; i < priceGrid; ++i) {
        Vec p(d.L());
        for (auto& v : p) v = pr(rng);
        q.slots[0].candidates.push_back({p, xNew});
      }
      auto milp = milp_feasible(q, opt.tol);
      j["milp"] = {{"feasible", milp.feasible}, {"bigM", milp.bigM}};
      if (milp.feasible) {
        j["milp"]["R"] = matrix_json(milp.R);
        j["milp"]["chosenCandidate"] = milp.chosenCandidates[0];
      }
    }
  } else {
    auto milp = milp_feasible({d, {}}, opt.tol);
    j["milp"] = {{"feasible", milp.feasible}, {"bigM", milp.bigM}};
    if (milp.feasible) j["milp"]["R"] = matrix_json(milp.R);
  }

  if (boxFlag > 0) {
    auto box = wdemand_box(d, pNew, opt.tol);
    j["box"] = {{"feasible", box.feasible}};
    if (box.feasible) {
      j["box"]["lo"] = box.lo;
      j["box"]["hi"] = box.hi;
      json verts = json::array();
      for (const auto& v : box.vertices) verts.push_back(v);
      j["box"]["vertices"] = verts;
    }
  }
  emit(j, opt.output);
  return kExitOk;
}

int run_quasilinear(const CommonOpts& opt, const std::string& op, const std::string& zs,
                    const std::string& xs, const std::string& ys) {
  Dataset d = load_csv_file(opt.input);
  json j = report_envelope("quasilinear", opt.tol, opt.seed);
  j["op"] = op;

  if (op == "numbers") {
    auto n = quasilinear_numbers(d, opt.tol);
    j["U"] = n.U;
    auto pn = ql_pairwise_numbers(d, opt.tol);
    j["R"] = matrix_json(pn.R);
  } else if (op == "utility") {
    if (zs.empty()) throw CLI::ValidationError("--z", "utility evaluation needs --z");
    auto n = quasilinear_numbers(d, opt.tol);
    j["z"] = parse_vec(zs);
    j["value"] = quasilinear_utility(d, n, parse_vec(zs));
  } else if (op == "prefer") {
    if (xs.empty() || ys.empty()) throw CLI::ValidationError("--x", "prefer needs --x and --y");
    auto res = eval_ql_preference(d, parse_vec(xs), parse_vec(ys), opt.tol);
    j["x"] = parse_vec(xs);
    j["y"] = parse_vec(ys);
    j["value"] = res.value;
    j["rowStrategy"] = res.game.rowStrategy;
    j["colStrategy"] = res.game.colStrategy;
  } else if (op == "theoremd") {
    auto res = check_theorem_d_feasibility(d, opt.tol);
    j["feasible"] = res.feasible;
    j["minLambda"] = res.minLambda;
    if (res.feasible) j["lambda"] = res.lambda;
  } else {
    throw CLI::ValidationError("--op", "unknown op '" + op + "'");
  }
  emit(j, opt.output);
  return kExitOk;
}

int run_selfcheck(const CommonOpts& opt) {
  auto results = run_acceptance(opt.seed);
  int failures = print_acceptance(std::cout, results);
  if (!opt.output.empty()) {
    json j = report_envelope("selfcheck", opt.tol, opt.seed);
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"index", r.index},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    j["criteria"] = arr;
    emit(j, opt.output);
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("REVPREF_THREADS")) {
#ifdef _OPENMP
    int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
#endif
  }

  CLI::App app{"revealed-preference axiom tests, certificate numbers, maximin preferences, "
               "recoverability bounds and demand counterfactuals"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string axiom = "all", system = "afriat", xs, ys, zs, set = "rp", supportAxiom = "wgarp";
  std::string priceStr, bundleStr, qlOp = "numbers";
  bool strictPrefer = false, asCsv = false, asJson = false;
  std::size_t grid = 0, boxFlag = 0, priceGrid = 0;
  double eps = -1.0;

  auto add_common = [&](CLI::App* sub, bool needsInput = true) {
    if (needsInput) sub->add_option("csv", opt.input, "input dataset CSV")->required();
    sub->add_option("--tol", opt.tol, "absolute comparison tolerance");
    sub->add_option("--seed", opt.seed, "RNG seed for audits");
    sub->add_option("-o,--output", opt.output, "write the report to a file");
    sub->add_flag("--strict-exit", opt.strictExit, "exit 2 when an axiom is violated");
    sub->add_option("--pattern-cap", opt.patternCap,
                    "largest observation count for exhaustive pattern sweeps");
    sub->add_flag("--json", asJson, "JSON output (default)");
  };

  auto* tcmd = app.add_subcommand("test", "decide axioms and report witnesses");
  add_common(tcmd);
  tcmd->add_option("--axiom", axiom, "all|warp|wgarp|sarp|garp|lod|slod");
  tcmd->add_flag("--csv", asCsv, "CSV output instead of JSON");

  auto* ncmd = app.add_subcommand("numbers", "construct certificate number systems");
  add_common(ncmd);
  ncmd->add_option("--system", system, "afriat|strict|varian|pairwise|w")->required();
  ncmd->add_option("--eps", eps, "strictness penalty weight (strict system)");

  auto* pcmd = app.add_subcommand("prefer", "evaluate the maximin preference function");
  add_common(pcmd);
  pcmd->add_option("--x", xs, "first bundle a,b,...")->required();
  pcmd->add_option("--y", ys, "second bundle a,b,...")->required();
  pcmd->add_flag("--strict", strictPrefer, "strict (WARP) variant");

  auto* bcmd = app.add_subcommand("bounds", "preference recoverability bounds");
  add_common(bcmd);
  bcmd->add_option("--x", xs, "query bundle")->required();
  bcmd->add_option("--y", ys, "candidate bundle");
  bcmd->add_option("--set", set, "rp|nrw|rpw|nrww")->required();
  bcmd->add_option("--axiom", supportAxiom, "supporting-set axiom: wgarp|garp");
  bcmd->add_option("--grid", grid, "sweep an n-per-axis grid of candidates, emit CSV");

  auto* ccmd = app.add_subcommand("counterfactual", "W-demand membership, box and binary system");
  add_common(ccmd);
  ccmd->add_option("--price", priceStr, "new price vector")->required();
  ccmd->add_option("--bundle", bundleStr, "candidate bundle (normalized to cost 1)");
  ccmd->add_option("--box", boxFlag, "also compute the demand box (any positive value)");
  ccmd->add_option("--price-grid", priceGrid, "binary-system sweep over n random prices");

  auto* qcmd = app.add_subcommand("quasilinear", "law-of-demand machinery");
  add_common(qcmd);
  qcmd->add_option("--op", qlOp, "numbers|utility|prefer|theoremd")->required();
  qcmd->add_option("--z", zs, "bundle for --op utility");
  qcmd->add_option("--x", xs, "first bundle for --op prefer");
  qcmd->add_option("--y", ys, "second bundle for --op prefer");

  auto* scmd = app.add_subcommand("selfcheck", "run the acceptance criteria");
  add_common(scmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (tcmd->parsed()) return run_test(opt, axiom, asCsv);
    if (ncmd->parsed()) return run_numbers(opt, system, eps);
    if (pcmd->parsed()) return run_prefer(opt, xs, ys, strictPrefer);
    if (bcmd->parsed()) return run_bounds(opt, xs, ys, set, supportAxiom, grid);
    if (ccmd->parsed()) return run_counterfactual(opt, priceStr, bundleStr, boxFlag, priceGrid);
    if (qcmd->parsed()) return run_quasilinear(opt, qlOp, zs, xs, ys);
    if (scmd->parsed()) return run_selfcheck(opt);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PatternExplosion& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << " (witness:";
    for (auto i : e.witness) std::cerr << " " << i + 1;
    std::cerr << ")\n";
    return kExitViolation;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what();
    if (e.line) std::cerr << " at line " << e.line << (e.column ? ", column " : "")
                          << (e.column ? std::to_string(e.column) : "");
    std::cerr << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
