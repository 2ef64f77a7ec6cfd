#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ay/core.hpp"
#include "ay/dilation.hpp"
#include "ay/fixtures.hpp"
#include "ay/hereditary.hpp"
#include "ay/model.hpp"
#include "ay/ttoeplitz.hpp"
#include "ay/wold.hpp"

namespace ay::cli {

namespace {

// Thresholds used by the pass/fail verdicts that have no tolerance of their own.
constexpr double kModelPassTol = 1e-6;
constexpr double kWordTol = 1e-11;

struct Outcome {
  bool pass = true;
  Json result = Json::object();
  Json windows = Json::object();
  Json tolerances = Json::object();
  /// A mathematical failure that still produced a result.
  Json error = nullptr;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::WindowTooSmall:
    case ErrorCode::OrderTooSmall:
    case ErrorCode::BandwidthTooLarge:
    case ErrorCode::ZeroTooCloseToCircle:
    case ErrorCode::UnknownKind:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonSquare:
    case ErrorCode::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

std::string status_for(ErrorCode c) {
  if (c == ErrorCode::IoError) return "io_error";
  if (c == ErrorCode::ParseError) return "parse_error";
  return is_input_error(c) ? "input_error" : "fail";
}

Json error_json(const Error& e) {
  Json j = Json::object();
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  j["value"] = e.value();
  j["index"] = e.index();
  return j;
}

Json matrices_json(const std::vector<ComplexMatrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(matrix_to_json(m));
  return a;
}

Json symbols_json(const std::vector<LaurentSymbol>& ss) {
  Json a = Json::array();
  for (const auto& s : ss) a.push_back(symbol_to_json(s));
  return a;
}

Json defect_json(const DefectData& d) {
  Json j = Json::object();
  j["rank"] = d.rank;
  j["basis"] = matrix_to_json(d.basis);
  j["values"] = std::vector<double>(d.values.data(), d.values.data() + d.values.size());
  return j;
}

Json optional_index(const std::optional<Index>& v) { return v ? Json(*v) : Json(nullptr); }

// Accepts the object itself or a wrapper carrying it under `key`, directly or
// inside "result" (so gen output feeds straight back in).
const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object()) {
    if (j.contains(key)) return j.at(key);
    if (j.contains("result") && j.at("result").is_object() && j.at("result").contains(key)) {
      return j.at("result").at(key);
    }
  }
  return j;
}

void require_path(const std::string& path, const char* what) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + what);
}

OperatorTuple load_tuple(const std::string& path) {
  require_path(path, "input tuple");
  return tuple_from_json(unwrap(read_json_file(path), "tuple"));
}

Json parse_inline(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<PredicateReport> predicates(const OperatorTuple& t, double tol,
                                        std::optional<Index> window) {
  return {is_ay_isometry(t, tol, window), is_ay_unitary(t, tol, window)};
}

Json predicate_json(const PredicateReport& p) {
  Json j = Json::object();
  j["pass"] = p.pass;
  j["window_cols"] = p.window_cols;
  j["isometry_dev"] = p.isometry_dev;
  j["coisometry_dev"] = p.coisometry_dev;
  j["relation_devs"] = p.relation_devs;
  j["commutator_norms"] = p.commutator_norms;
  return j;
}

Outcome run_check(const RunConfig& cfg) {
  const OperatorTuple t = load_tuple(cfg.input);
  Outcome out;
  out.windows["window_cols"] = optional_index(cfg.window_cols);
  out.windows["dim"] = t.dim();
  out.tolerances["rank_tol"] = kDefaultRankTol;
  Json& r = out.result;
  try {
    const FundamentalSolution sol = solve_fundamental(t, cfg.tol);
    r["in_ay"] = true;
    r["x"] = matrices_json(sol.x_ops);
    r["residuals"] = sol.residuals;
    r["rhs_norms"] = sol.rhs_norms;
    r["numerical_radii"] = sol.numerical_radii;
    r["path_agreement"] = sol.path_agreement;
    r["defect"] = defect_json(sol.defect);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSolution) throw;
    out.pass = false;
    out.error = error_json(e);
    r["in_ay"] = false;
    r["x"] = nullptr;
    r["residual"] = e.value();
    r["failed_index"] = e.index();
  }
  const auto preds = predicates(t, cfg.tol, cfg.window_cols);
  r["ay_isometry"] = predicate_json(preds[0]);
  r["ay_unitary"] = predicate_json(preds[1]);
  return out;
}

Outcome run_dilate(const RunConfig& cfg) {
  const OperatorTuple t = load_tuple(cfg.input);
  if (cfg.slots < 1) throw Error(ErrorCode::InvalidArgument, "slots must be >= 1");
  const Index max_word = cfg.max_word.value_or(cfg.slots);
  const FundamentalSolution sol = solve_fundamental(t, cfg.tol);
  const DilationResult dil = schaffer_dilate(t, sol, cfg.slots);
  WordCheckOptions opts;
  opts.seed = cfg.seed;
  opts.word_tol = kWordTol;
  opts.relation_tol = cfg.tol;
  const DilationReport rep = verify_dilation(dil, max_word, opts);
  const CommutingReport comm = commuting_constraint_check(sol, cfg.tol);

  Outcome out;
  out.pass = rep.pass;
  out.windows["slots"] = cfg.slots;
  out.windows["max_word"] = max_word;
  out.windows["interior_cols"] = dil.interior_cols();
  out.tolerances["word_tol"] = opts.word_tol;
  out.tolerances["relation_tol"] = opts.relation_tol;
  Json& r = out.result;
  r["pass"] = rep.pass;
  r["worst_word"] = rep.worst_word;
  r["worst_dev"] = rep.worst_dev;
  r["relations_dev"] = rep.relations_dev;
  r["isometry_dev"] = rep.isometry_dev;
  r["coinvariance_dev"] = rep.coinvariance_dev;
  r["words_checked"] = rep.words_checked;
  r["sampled"] = rep.sampled;
  r["dim"] = dil.dim();
  r["rank"] = dil.rank;
  r["slots"] = dil.slots;
  Json c = Json::object();
  c["pass"] = comm.pass;
  c["max_x_commutator"] = comm.max_x_commutator;
  c["max_mixed_defect"] = comm.max_mixed_defect;
  c["dilation_commutator_norm"] = dilation_commutator_norm(dil);
  c["tuple_commutator_norm"] = tuple_commutator_norm(t);
  r["commuting"] = c;
  return out;
}

Outcome run_wold(const RunConfig& cfg) {
  const OperatorTuple t = load_tuple(cfg.input);
  const WoldResult w = wold_decompose(t, cfg.window, cfg.max_power, cfg.tol);
  constexpr double relation_tol = 1e-8;
  const RelationReport det = verify_determinant_relation(w, t, relation_tol);

  Outcome out;
  out.pass = det.pass;
  out.windows["window"] = optional_index(cfg.window);
  out.windows["max_power"] = optional_index(cfg.max_power);
  out.windows["pure_order"] = w.pure_order;
  out.windows["interior_window"] = w.interior_window;
  out.tolerances["relation_tol"] = relation_tol;
  Json& r = out.result;
  r["dim_h1"] = w.dim_h1();
  r["dim_e"] = w.dim_e;
  r["pure_order"] = w.pure_order;
  r["interior_window"] = w.interior_window;
  r["p_unitary"] = matrix_to_json(w.p_unitary);
  r["unitary_tuple"] = w.dim_h1() > 0 ? tuple_to_json(w.unitary_tuple) : Json(nullptr);
  r["phi"] = symbols_json(w.phi_recovered);
  r["f"] = symbols_json(w.f_recovered);
  const WoldDeviations& d = w.deviations;
  r["deviations"] = {{"projection", d.projection}, {"reducing", d.reducing},
                     {"unitary_part", d.unitary_part}, {"basis", d.basis},
                     {"shift", d.shift}, {"pure_relation", d.pure_relation},
                     {"mirror", d.mirror}};
  r["determinant_relation"] = {{"pass", det.pass}, {"devs", det.devs}};
  if (w.dim_h1() == 0 && w.dim_e > 0) {
    const CsFactorization cs = cs_factorize(t, w, relation_tol);
    r["cs"] = {{"pass", cs.pass}, {"c", matrices_json(cs.c_ops)},
               {"relation_devs", cs.relation_devs}, {"commutator_devs", cs.commutator_devs}};
  } else {
    r["cs"] = nullptr;
  }
  if (w.dim_e > 0) {
    const UnitaryExtension ext = extend_to_unitary(w, t);
    r["extension"] = {{"padding", ext.padding}, {"interior_blocks", ext.interior_blocks},
                      {"intertwining_dev", ext.intertwining_dev},
                      {"compression_dev", ext.compression_dev}, {"unitary_dev", ext.unitary_dev}};
  } else {
    r["extension"] = nullptr;
  }
  return out;
}

Outcome run_model(const RunConfig& cfg) {
  const OperatorTuple t = load_tuple(cfg.input);
  if (cfg.order < 2) throw Error(ErrorCode::OrderTooSmall, "order must be >= 2",
                                 static_cast<double>(cfg.order));
  const double rho = spectral_radius(t.last());
  const Index used = auto_model_order(rho, cfg.order, kModelOrderCap);
  const PureModel pm = pure_model(t, used, cfg.tol);
  const ComplementarityReport comp = complementarity_check(pm.embedding, kModelPassTol);
  const double iso = pm.embedding.isometry_defect();

  Json table = Json::array();
  std::vector<Index> orders;
  for (Index k = 10; k < used; k += 10) orders.push_back(k);
  orders.push_back(used);
  for (Index k : orders) {
    const PureModel at = k == used ? pm : pure_model(t, k, cfg.tol);
    double model_dev = 0.0;
    for (double v : at.intertwining_devs) model_dev = std::max(model_dev, v);
    table.push_back({{"order", k},
                     {"isometry_defect", at.embedding.isometry_defect()},
                     {"isometry_defect_telescoped", telescoped_isometry_defect(t.last(), k)},
                     {"complementarity_dev", complementarity_check(at.embedding).deviation},
                     {"model_dev", model_dev}});
  }

  Outcome out;
  out.pass = iso <= kModelPassTol && comp.pass;
  out.windows["order_requested"] = cfg.order;
  out.windows["order_used"] = used;
  out.windows["interior_blocks"] = comp.window_blocks;
  out.tolerances["model_pass_tol"] = kModelPassTol;
  Json& r = out.result;
  r["order_requested"] = cfg.order;
  r["order_used"] = used;
  r["order_capped"] = used >= kModelOrderCap && std::pow(rho, static_cast<double>(used)) > 1e-8;
  r["spectral_radius"] = rho;
  r["y"] = matrices_json(pm.y);
  r["defect_star"] = defect_json(pm.embedding.defect_star);
  r["theta"] = symbol_to_json(pm.embedding.theta_coeffs);
  r["isometry_defect"] = iso;
  r["complementarity_dev"] = comp.deviation;
  r["intertwining_devs"] = pm.intertwining_devs;
  r["residual_table"] = table;
  return out;
}

Outcome run_hereditary(const RunConfig& cfg) {
  const OperatorTuple t = load_tuple(cfg.input);
  if (cfg.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  const HereditaryReport rep = hereditary_family_check(t, cfg.w_bound, cfg.samples, cfg.tol);
  Outcome out;
  out.pass = rep.pass;
  out.windows["theta_samples"] = rep.theta_samples;
  out.tolerances["w_bound"] = rep.w_bound;
  Json& r = out.result;
  r["pass"] = rep.pass;
  r["min_eigenvalue"] = rep.min_eigenvalue;
  r["worst_index"] = rep.worst_index;
  r["worst_theta"] = rep.worst_theta;
  r["solver_ok"] = rep.solver_ok;
  r["criterion"] = rep.criterion;
  r["agree"] = rep.agree;
  r["numerical_radii"] = rep.numerical_radii;
  return out;
}

Outcome run_ttoeplitz(const RunConfig& cfg) {
  require_path(cfg.blaschke, "--blaschke");
  const BlaschkeProduct u = blaschke_from_json(unwrap(read_json_file(cfg.blaschke), "blaschke"));
  const LaurentSymbol phi =
      cfg.symbol.empty() ? LaurentSymbol::scalar(1, {1.0})
                         : symbol_from_json(unwrap(read_json_file(cfg.symbol), "symbol"));
  const ModelSpaceKu space = build_model_space(u);

  Outcome out;
  out.windows["ambient_order"] = space.ambient_order;
  out.windows["degree"] = space.dim();
  Json& r = out.result;
  if (cfg.action == "classify") {
    require_path(cfg.symbol, "--symbol");
    const Classification c = classify_ay_pair(space, phi, cfg.tol);
    out.pass = c.in_ay;
    r["in_ay"] = c.in_ay;
    r["c"] = c.c ? complex_to_json(*c.c) : Json(nullptr);
    r["residual"] = c.residual;
    r["commutator_norm"] = c.commutator_norm;
    r["converse_ok"] = c.converse_ok;
  } else if (cfg.action == "identities") {
    const ConjugationReport rep = conjugation_identity_check(space, phi, cfg.tol);
    out.pass = rep.pass;
    r["pass"] = rep.pass;
    r["involution_dev"] = rep.involution_dev;
    r["antiunitary_dev"] = rep.antiunitary_dev;
    r["symmetry_dev"] = rep.symmetry_dev;
    r["defect_star_dev"] = rep.defect_star_dev;
    r["defect_dev"] = rep.defect_dev;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown ttoeplitz action " + cfg.action);
  }
  r["degree"] = space.dim();
  r["ambient_order"] = space.ambient_order;
  r["tail_bound"] = space.tail_bound;
  return out;
}

std::vector<Complex> gen_points(Rng& rng, int count, double max_modulus) {
  std::vector<Complex> pts;
  for (int k = 0; k < count; ++k) {
    pts.push_back(std::polar(rng.uniform(0.1, max_modulus), 2.0 * std::numbers::pi * rng.uniform()));
  }
  return pts;
}

Json compressed_json(const CompressedFixture& fx) {
  Json pts = Json::array();
  for (Complex w : fx.points) pts.push_back(complex_to_json(w));
  return {{"f_const", matrices_json(fx.f_const)}, {"points", pts}, {"blocks", fx.blocks},
          {"gen_order", fx.gen_order}, {"g_constants", matrix_to_json(fx.g_constants)}};
}

// Laurent window wide enough that the dropped tail of u stays below 1e-15.
int member_window(const BlaschkeProduct& u) {
  const double rho = u.max_modulus();
  if (rho == 0.0) return static_cast<int>(u.degree()) + 6;
  return static_cast<int>(std::ceil(std::log(1e-15) / std::log(rho))) + 6;
}

Outcome run_gen(const RunConfig& cfg) {
  const std::string kind = cfg.kind.empty() ? "canonical" : cfg.kind;
  if (cfg.n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2", cfg.n);
  if (cfg.dim < 1 || cfg.dim_e < 1) throw Error(ErrorCode::InvalidArgument, "dimensions must be >= 1");
  if (cfg.points < 0 || cfg.blocks < 0 || cfg.degree < 0 || cfg.dim_unitary < 0) {
    throw Error(ErrorCode::InvalidArgument, "counts must be >= 0");
  }
  if (!(cfg.max_modulus > 0.0 && cfg.max_modulus < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "max_modulus must lie in (0, 1)", cfg.max_modulus);
  }
  Rng rng(cfg.seed);
  Json params = Json::object();
  Json prov = Json::object();
  Outcome out;
  Json& r = out.result;

  auto compressed = [&](const std::vector<ComplexMatrix>& f) {
    params["n"] = cfg.n;
    params["dim_e"] = cfg.dim_e;
    params["blocks"] = cfg.blocks;
    params["points"] = cfg.points;
    params["max_modulus"] = cfg.max_modulus;
    if (cfg.blocks + cfg.points == 0) throw Error(ErrorCode::InvalidArgument, "empty compression");
    const auto pts = gen_points(rng, cfg.points, cfg.max_modulus);
    const CompressedFixture fx = compressed_canonical(rng, f, cfg.blocks, pts, true);
    r["tuple"] = tuple_to_json(fx.tuple);
    prov = compressed_json(fx);
  };

  if (kind == "canonical") {
    params = {{"n", cfg.n}, {"dim_e", cfg.dim_e}, {"degree", cfg.degree}, {"order", cfg.gen_order}};
    const auto f = random_f_tuple(rng, cfg.n, cfg.dim_e, cfg.degree);
    const CanonicalIsometry canon = canonical_ay(f, cfg.gen_order);
    r["tuple"] = tuple_to_json(canon.tuple);
    prov = {{"f", symbols_json(f)}, {"phi", symbols_json(canon.phi)}, {"exact_cols", canon.exact_cols}};
  } else if (kind == "compressed_canonical") {
    params["radius"] = cfg.radius;
    compressed(random_constant_f(rng, cfg.n, cfg.dim_e, cfg.radius));
  } else if (kind == "commuting") {
    compressed(commuting_constant_f(rng, cfg.n, cfg.dim_e));
  } else if (kind == "violating") {
    if (cfg.n < 3 || cfg.dim_e < 2) {
      throw Error(ErrorCode::InvalidArgument, "violating fixtures need n >= 3 and dim_e >= 2");
    }
    params["radius"] = cfg.radius;
    compressed(random_constant_f(rng, cfg.n, cfg.dim_e, cfg.radius));
  } else if (kind == "ay_unitary_diagonal") {
    params = {{"n", cfg.n}, {"dim", cfg.dim}};
    r["tuple"] = tuple_to_json(ay_unitary_diagonal(rng, cfg.n, cfg.dim, true));
    prov = {{"ay_unitary", true}};
  } else if (kind == "wold_mixed") {
    params = {{"n", cfg.n}, {"dim_unitary", cfg.dim_unitary}, {"dim_e", cfg.dim_e},
              {"degree", cfg.degree}, {"order", cfg.gen_order}};
    const WoldFixture fx = wold_mixed(rng, cfg.n, cfg.dim_unitary, cfg.dim_e, cfg.degree, cfg.gen_order);
    r["tuple"] = tuple_to_json(fx.tuple);
    prov = {{"dim_unitary", fx.dim_unitary}, {"dim_e", fx.dim_e}, {"order", fx.order},
            {"f", symbols_json(fx.f)}, {"mixing", matrix_to_json(fx.mixing)}};
  } else if (kind == "ttoeplitz_member" || kind == "ttoeplitz_nonmember") {
    const int degree = cfg.degree > 0 ? cfg.degree : 2;
    BlaschkeProduct u = cfg.zeros.empty() ? random_blaschke(rng, degree, cfg.max_modulus)
                                          : blaschke_from_json(parse_inline(cfg.zeros, "--zeros"));
    validate(u);
    params = {{"degree", u.degree()}, {"max_modulus", cfg.max_modulus}};
    r["blaschke"] = blaschke_to_json(u);
    if (kind == "ttoeplitz_member") {
      const Complex c =
          cfg.c.empty() ? rng.complex_normal() : complex_from_json(parse_inline(cfg.c, "--c"));
      const int window = member_window(u);
      params["window"] = window;
      r["symbol"] = symbol_to_json(ttoeplitz_member_symbol(rng, u, c, window));
      prov = {{"member", true}, {"c", complex_to_json(c)}};
    } else {
      if (cfg.bandwidth < 2) throw Error(ErrorCode::InvalidArgument, "bandwidth must be >= 2");
      params["bandwidth"] = cfg.bandwidth;
      r["symbol"] = symbol_to_json(random_trig_symbol(rng, cfg.bandwidth));
      // Degree one spaces make every symbol a member; larger ones make a
      // generic trigonometric symbol a non-member.
      prov = {{"member", u.degree() == 1 ? Json(true) : Json(false)}, {"c", nullptr}};
    }
  } else {
    throw Error(ErrorCode::UnknownKind, "unknown fixture kind " + kind);
  }
  r["kind"] = kind;
  r["seed"] = cfg.seed;
  r["params"] = params;
  r["provenance"] = prov;
  return out;
}

const std::vector<std::string>& required_result_keys(Subcommand s, const std::string& action) {
  static const std::vector<std::string> check{"in_ay", "x", "ay_isometry", "ay_unitary"};
  static const std::vector<std::string> dilate{"pass", "worst_word", "worst_dev", "relations_dev",
                                               "commuting"};
  static const std::vector<std::string> wold{"dim_h1", "p_unitary", "phi", "f", "deviations",
                                             "determinant_relation"};
  static const std::vector<std::string> model{"order_used", "y", "theta", "residual_table"};
  static const std::vector<std::string> classify{"in_ay", "c", "residual", "commutator_norm"};
  static const std::vector<std::string> identities{"pass", "involution_dev", "symmetry_dev",
                                                   "defect_star_dev", "defect_dev"};
  static const std::vector<std::string> hereditary{"pass", "min_eigenvalue", "solver_ok", "agree"};
  static const std::vector<std::string> gen{"kind", "seed", "params", "provenance"};
  switch (s) {
    case Subcommand::Check: return check;
    case Subcommand::Dilate: return dilate;
    case Subcommand::Wold: return wold;
    case Subcommand::Model: return model;
    case Subcommand::Ttoeplitz: return action == "identities" ? identities : classify;
    case Subcommand::Hereditary: return hereditary;
    case Subcommand::Gen: return gen;
  }
  return gen;
}

Subcommand subcommand_from(const std::string& name) {
  for (Subcommand s : {Subcommand::Check, Subcommand::Dilate, Subcommand::Wold, Subcommand::Model,
                       Subcommand::Ttoeplitz, Subcommand::Hereditary, Subcommand::Gen}) {
    if (subcommand_name(s) == name) return s;
  }
  throw std::logic_error("unknown subcommand in report: " + name);
}

}  // namespace

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Check: return "check";
    case Subcommand::Dilate: return "dilate";
    case Subcommand::Wold: return "wold";
    case Subcommand::Model: return "model";
    case Subcommand::Ttoeplitz: return "ttoeplitz";
    case Subcommand::Hereditary: return "hereditary";
    case Subcommand::Gen: return "gen";
  }
  return "unknown";
}

void validate_report(const Json& report) {
  for (const char* key : {"tool", "version", "schema", "command", "status", "tolerances",
                          "windows", "result", "error"}) {
    if (!report.contains(key)) throw std::logic_error(std::string("report lacks ") + key);
  }
  const std::string status = report.at("status").get<std::string>();
  const bool ran = status == "pass" || status == "fail";
  if (!ran && status != "io_error" && status != "parse_error" && status != "input_error") {
    throw std::logic_error("bad report status " + status);
  }
  if (report.at("schema").get<std::string>() != "ay." + report.at("command").get<std::string>() + "/1") {
    throw std::logic_error("schema does not match command");
  }
  if (!report.at("tolerances").contains("tol")) throw std::logic_error("tolerances lack tol");
  const Json& result = report.at("result");
  if (result.is_null()) {
    if (status == "pass") throw std::logic_error("pass report without result");
    return;
  }
  const Subcommand s = subcommand_from(report.at("command").get<std::string>());
  const std::string action = report.contains("action") ? report.at("action").get<std::string>() : "";
  for (const auto& key : required_result_keys(s, action)) {
    if (!result.contains(key)) throw std::logic_error("result lacks " + key);
  }
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

RunResult run(const RunConfig& cfg) {
  const std::string name = subcommand_name(cfg.subcommand);
  Json report = Json::object();
  report["tool"] = "ay";
  report["version"] = kToolVersion;
  report["schema"] = "ay." + name + "/1";
  report["command"] = name;
  if (cfg.subcommand == Subcommand::Ttoeplitz) report["action"] = cfg.action;

  Outcome outcome;
  Json error = nullptr;
  std::string status;
  int code = 0;
  try {
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
      throw Error(ErrorCode::InvalidArgument, "tol must be positive", cfg.tol);
    }
    switch (cfg.subcommand) {
      case Subcommand::Check: outcome = run_check(cfg); break;
      case Subcommand::Dilate: outcome = run_dilate(cfg); break;
      case Subcommand::Wold: outcome = run_wold(cfg); break;
      case Subcommand::Model: outcome = run_model(cfg); break;
      case Subcommand::Ttoeplitz: outcome = run_ttoeplitz(cfg); break;
      case Subcommand::Hereditary: outcome = run_hereditary(cfg); break;
      case Subcommand::Gen: outcome = run_gen(cfg); break;
    }
    status = outcome.pass ? "pass" : "fail";
    code = outcome.pass ? 0 : 1;
    error = outcome.error;
  } catch (const Error& e) {
    status = status_for(e.code());
    code = is_input_error(e.code()) ? 2 : 1;
    error = error_json(e);
    // Mathematical failures keep whatever partial result was assembled.
    if (code == 2) outcome.result = nullptr;
  }
  report["status"] = status;
  Json tol = Json::object();
  tol["tol"] = cfg.tol;
  for (auto& [k, v] : outcome.tolerances.items()) tol[k] = v;
  report["tolerances"] = tol;
  report["windows"] = outcome.windows;
  report["result"] = outcome.result.empty() ? Json(nullptr) : outcome.result;
  report["error"] = error;
  validate_report(report);
  return {code, report};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("AY_TOL")) {
    try {
      std::size_t used = 0;
      cfg.tol = std::stod(env, &used);
      if (used != std::string(env).size() || !(cfg.tol > 0.0)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "invalid AY_TOL value: " << env << "\n";
      return 2;
    }
  }

  CLI::App app{"Agler-Young tuple toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::string output;
  auto common = [&](CLI::App* sub, bool tuple_input) {
    if (tuple_input) sub->add_option("input", cfg.input, "tuple JSON file")->required();
    sub->add_option("--tol", cfg.tol, "tolerance (default 1e-9 or AY_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", output, "write the report here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "solve the fundamental equations");
  common(check, true);
  check->add_option("--window", cfg.window_cols, "leading columns for the isometry predicates");

  auto* dilate = app.add_subcommand("dilate", "build and verify the isometric dilation");
  common(dilate, true);
  dilate->add_option("--slots", cfg.slots, "defect slots K")->check(CLI::PositiveNumber);
  dilate->add_option("--max-word", cfg.max_word, "longest word checked (default K)");
  dilate->add_option("--seed", cfg.seed, "seed for sampled word checks");

  auto* wold = app.add_subcommand("wold", "Wold decomposition of an AY isometry");
  common(wold, true);
  wold->add_option("--window", cfg.window, "interior block columns");
  wold->add_option("--max-power", cfg.max_power, "range chain length");

  auto* model = app.add_subcommand("model", "functional model of a pure AY contraction");
  common(model, true);
  model->add_option("--order", cfg.order, "truncation order N")->check(CLI::Range(2, 100000));

  auto* tt = app.add_subcommand("ttoeplitz", "truncated Toeplitz pairs on K_u");
  common(tt, false);
  tt->add_option("action", cfg.action, "classify or identities")
      ->required()
      ->check(CLI::IsMember({"classify", "identities"}));
  tt->add_option("--blaschke", cfg.blaschke, "Blaschke product JSON file")->required();
  tt->add_option("--symbol", cfg.symbol, "symbol JSON file");

  auto* her = app.add_subcommand("hereditary", "hereditary family positivity check");
  common(her, true);
  her->add_option("--w", cfg.w_bound, "numerical radius bound");
  her->add_option("--samples", cfg.samples, "theta samples")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "seeded fixture generator");
  common(gen, false);
  gen->add_option("--kind", cfg.kind,
                  "canonical, compressed_canonical, commuting, violating, ay_unitary_diagonal, "
                  "wold_mixed, ttoeplitz_member, ttoeplitz_nonmember");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--n", cfg.n, "tuple length");
  gen->add_option("--dim", cfg.dim, "space dimension");
  gen->add_option("--dim-e", cfg.dim_e, "coefficient dimension");
  gen->add_option("--degree", cfg.degree, "symbol or Blaschke degree");
  gen->add_option("--order", cfg.gen_order, "truncation order")->check(CLI::Range(2, 100000));
  gen->add_option("--dim-unitary", cfg.dim_unitary, "unitary part dimension");
  gen->add_option("--blocks", cfg.blocks, "leading blocks kept by the compression");
  gen->add_option("--points", cfg.points, "kernel points kept by the compression");
  gen->add_option("--radius", cfg.radius, "numerical radius of the planted constants");
  gen->add_option("--max-modulus", cfg.max_modulus, "largest point or zero modulus");
  gen->add_option("--bandwidth", cfg.bandwidth, "non-member symbol bandwidth");
  gen->add_option("--zeros", cfg.zeros, "Blaschke zeros as JSON, e.g. [[0,0],[0,0]]");
  gen->add_option("--c", cfg.c, "member constant as JSON [re, im]");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const std::vector<std::pair<CLI::App*, Subcommand>> table{
      {check, Subcommand::Check}, {dilate, Subcommand::Dilate}, {wold, Subcommand::Wold},
      {model, Subcommand::Model}, {tt, Subcommand::Ttoeplitz},  {her, Subcommand::Hereditary},
      {gen, Subcommand::Gen}};
  for (const auto& [sub, s] : table) {
    if (sub->parsed()) cfg.subcommand = s;
  }

  const RunResult res = run(cfg);
  const std::string text = render(res.report);
  if (output.empty()) {
    out << text;
    return res.exit_code;
  }
  try {
    write_text_file(output, text);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return res.exit_code;
}

}  // namespace ay::cli
