#include "bihamil/cli.hpp"

#include "bihamil/canonical.hpp"
#include "bihamil/catalog.hpp"
#include "bihamil/errors.hpp"
#include "bihamil/integrals.hpp"
#include "bihamil/json_io.hpp"
#include "bihamil/orbits.hpp"
#include "bihamil/pencil.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <thread>

namespace bihamil::cli {

namespace {

struct Config {
  std::uint64_t seed = 42;
  std::size_t lambda_samples = 7;
  std::size_t points = 10;
  unsigned degree = 4;
  long height = 10;
  std::string format = "text";
  std::string output;
  std::size_t threads = 1;
};

struct Inputs {
  std::string algebra;
  std::string algebra_file;
  std::string pair;
  std::string pair_file;
  std::vector<std::string> points;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string fmt_double(double x) {
  if (std::abs(x) < 1e-300) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json complex_json(std::complex<double> z) { return Json{{"re", fmt_double(z.real())}, {"im", fmt_double(z.imag())}}; }

// Per-item work on a fixed number of threads; results keep input order and the
// first failure (in input order) is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, std::size_t threads, F fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        slots[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t t = std::max<std::size_t>(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<T> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

LieAlgebraSpec load_algebra(const Inputs& in) {
  if (in.algebra.empty() == in.algebra_file.empty()) throw InputError("give exactly one of --algebra and --algebra-file");
  if (!in.algebra.empty()) return catalog_algebra(in.algebra);
  return algebra_from_json(load_json_file(in.algebra_file));
}

std::vector<Vec> load_points(const Inputs& in, std::size_t dim, const Config& cfg, bool real) {
  std::vector<Vec> pts;
  for (const auto& s : in.points) {
    Vec z = parse_point_literal(s);
    if (z.size() != dim) throw InputError("point " + s + " has " + std::to_string(z.size()) + " coordinates, expected " + std::to_string(dim));
    if (real)
      for (const auto& x : z)
        if (!x.is_real()) throw InputError("point " + s + " must be real for a real bivector pair");
    pts.push_back(std::move(z));
  }
  if (pts.empty()) {
    pts = point_schedule(dim, cfg.points, cfg.seed, cfg.height);
    if (real)
      for (auto& z : pts)
        for (auto& x : z) x = GaussianRational(x.re());
  }
  return pts;
}

Json direction_json(const DegenerateDirection& d) {
  Json j{{"l1", complex_json(d.l1)}, {"l2", complex_json(d.l2)}};
  j["exact"] = d.exact ? to_json(*d.exact) : Json(nullptr);
  if (auto ev = d.eigenvalue()) j["eigenvalue"] = complex_json(*ev);
  else j["eigenvalue"] = "infinity";
  j["residual"] = fmt_double(d.residual);
  return j;
}

Json invariants_json(const PencilInvariants& inv) {
  Json jordan = Json::array();
  for (const auto& c : inv.jordan_part)
    jordan.push_back(Json{{"direction", direction_json(c.direction)},
                          {"dim", c.dim},
                          {"block_dims", c.block_dims},
                          {"blocks_resolved", c.blocks_resolved}});
  return Json{{"dim", inv.dim},
              {"generic_rank", inv.generic_rank},
              {"kronecker_indices", inv.kronecker_indices},
              {"kronecker_block_dims", inv.kronecker_block_dims()},
              {"trivial_count", inv.trivial_count},
              {"jordan", jordan},
              {"jordan_dim", inv.jordan_dim()},
              {"dimension_checksum", inv.dimension_checksum}};
}

Json verdict_json(const CompletenessVerdict& v) {
  Json dirs = Json::array();
  for (const auto& d : v.degenerate_directions) dirs.push_back(direction_json(d));
  return Json{{"complete", v.complete},       {"r0", v.r0},
              {"f0_dim", v.f0_dim},           {"f0_tilde_dim", v.f0_tilde_dim},
              {"anchor", to_json(v.anchor)},  {"probe", to_json(v.probe)},
              {"charpoly", to_string(v.charpoly, "t")}, {"degenerate_directions", dirs}};
}

Json lambda_counts_json(const std::vector<std::pair<LambdaPair, std::size_t>>& v) {
  Json a = Json::array();
  for (const auto& [l, c] : v) a.push_back(Json{{"lambda", to_json(l)}, {"value", c}});
  return a;
}

Json classification_json(const PointClassification& pc) {
  Json dirs = Json::array();
  for (const auto& d : pc.degenerate_directions) dirs.push_back(direction_json(d));
  return Json{{"point", to_json(pc.z)},
              {"rank_c", pc.rank_c},
              {"rank_c_tilde", pc.rank_c_tilde},
              {"stacked_rank", pc.stacked_rank},
              {"pencil_generic_rank", pc.pencil_generic_rank},
              {"in_sing", pc.in_sing},
              {"in_incompleteness", pc.in_incompleteness},
              {"in_irregularity", pc.in_irregularity},
              {"mu", pc.mu},
              {"mu_lambda", lambda_counts_json(pc.mu_lambda_samples)},
              {"degenerate_directions", dirs}};
}

std::optional<std::size_t> rank_or_null(const CanonicalPair& p, std::vector<std::string>& warnings) {
  try {
    return p.rank_g();
  } catch (const PreconditionError& e) {
    warnings.push_back(e.what());
    return std::nullopt;
  }
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

struct Payload {
  Json input;
  Json results;
  std::vector<std::string> warnings;
};

Payload cmd_check_jacobi(const Inputs& in, const Config&) {
  Payload p;
  LieAlgebraSpec g = load_algebra(in);
  p.input = algebra_to_json(g);
  Json defects = Json::array();
  for (const auto& d : g.jacobi_defects())
    defects.push_back(Json{{"i", d.i + 1}, {"j", d.j + 1}, {"k", d.k + 1}, {"l", d.l + 1}, {"value", to_string(d.value)}});
  BivectorField c = lie_poisson(g, VariableKind::mixed);
  TrivectorField cc = schouten_bracket(c, c);
  Json comps = Json::array();
  for (const auto& comp : cc.nonzero_components())
    comps.push_back(Json{{"i", comp.i + 1}, {"j", comp.j + 1}, {"k", comp.k + 1}, {"value", comp.value.to_string()}});
  PoissonPairCheck pc = is_poisson_pair(c, conjugate_twist(c));
  if (g.is_abelian()) p.warnings.push_back("abelian algebra: c vanishes, so (c, c~) is not a pair of independent fields");
  p.results = Json{{"algebra", g.name()},
                   {"dim", g.dim()},
                   {"jacobi_defects", defects},
                   {"schouten_cc_zero", cc.is_zero()},
                   {"schouten_cc_components", comps},
                   {"canonical_pair",
                    Json{{"first_poisson", pc.first_poisson},
                         {"mixed_vanishes", pc.mixed_vanishes},
                         {"second_poisson", pc.second_poisson},
                         {"independent", pc.independent},
                         {"is_pair", pc.is_pair()}}},
                   {"pass", cc.is_zero() && defects.empty()}};
  return p;
}

Payload cmd_pencil(const Inputs& in, const Config& cfg) {
  Payload p;
  const int sources = !in.pair.empty() + !in.pair_file.empty() + !in.algebra.empty() + !in.algebra_file.empty();
  if (sources != 1) throw InputError("give exactly one of --pair, --pair-file, --algebra, --algebra-file");
  std::function<SkewPencil(const Vec&)> at;
  std::vector<Vec> pts;
  std::optional<CanonicalPair> canon;
  std::optional<BivectorPair> pair;
  if (!in.pair.empty() || !in.pair_file.empty()) {
    pair = !in.pair.empty() ? catalog_pair(in.pair) : pair_from_json(load_json_file(in.pair_file));
    p.input = pair_to_json(*pair);
    const bool real = pair->c1.kind() == VariableKind::real;
    pts = load_points(in, pair->c1.dim(), cfg, real);
    at = [&](const Vec& z) {
      Matrix a = evaluate_at(pair->c1, z), b = evaluate_at(pair->c2, z);
      if (!a.is_skew() || !b.is_skew()) throw InputError("pencil members are not skew at the point");
      return SkewPencil(a, b);
    };
  } else {
    canon.emplace(load_algebra(in), cfg.seed, cfg.height);
    p.input = algebra_to_json(canon->algebra());
    pts = load_points(in, canon->dim(), cfg, false);
    at = [&](const Vec& z) { return canon->pencil_at(z); };
  }
  Json per = Json::array();
  auto rows = parallel_map<Json>(pts.size(), cfg.threads, [&](std::size_t k) {
    SkewPencil sp = at(pts[k]);
    return Json{{"point", to_json(pts[k])},
                {"invariants", invariants_json(kronecker_invariants(sp))},
                {"completeness", verdict_json(is_complete(sp))}};
  });
  for (auto& r : rows) per.push_back(std::move(r));
  p.results = Json{{"mode", pair ? "pair" : "canonical"}, {"points", per}};
  return p;
}

Payload cmd_classify(const Inputs& in, const Config& cfg) {
  Payload p;
  CanonicalPair pair(load_algebra(in), cfg.seed, cfg.height);
  p.input = algebra_to_json(pair.algebra());
  auto pts = load_points(in, pair.dim(), cfg, false);
  auto rank = rank_or_null(pair, p.warnings);
  auto rows = parallel_map<Json>(pts.size(), cfg.threads, [&](std::size_t k) {
    return classification_json(classify_point(pair, pts[k], 5));
  });
  p.results = Json{{"algebra", pair.algebra().name()},
                   {"dim", pair.dim()},
                   {"rank", opt_json(rank)},
                   {"generic_rank_c", pair.generic_rank_c()},
                   {"generic_stacked_rank", pair.generic_stacked_rank()},
                   {"points", rows}};
  return p;
}

Payload cmd_orbit(const Inputs& in, const Config& cfg) {
  Payload p;
  CanonicalPair pair(load_algebra(in), cfg.seed, cfg.height);
  p.input = algebra_to_json(pair.algebra());
  auto pts = load_points(in, pair.dim(), cfg, false);
  auto rank = rank_or_null(pair, p.warnings);
  auto rows = parallel_map<Json>(pts.size(), cfg.threads, [&](std::size_t k) {
    const Vec& z = pts[k];
    OrbitFrame f = orbit_tangent(pair, z);
    const bool sing = in_sing(pair, z);
    Json cr = Json::array();
    for (const auto& v : f.cr_tangent_10) cr.push_back(to_json(v));
    return Json{{"point", to_json(z)},
                {"orbit_dim", f.orbit_dim},
                {"cr_dim", f.cr_dim},
                {"leaf_dim", f.leaf_10_basis.size()},
                {"mu", mu(pair, z)},
                {"in_sing", sing},
                {"in_irregularity", in_kronecker_irregularity(pair, z)},
                {"cr_generic", cr_genericity_check(f)},
                {"cr_isotropic", sing ? Json(nullptr) : Json(cr_isotropy_check(pair, z))},
                {"cr_tangent_10", cr}};
  });
  p.results = Json{{"algebra", pair.algebra().name()}, {"dim", pair.dim()}, {"rank", opt_json(rank)}, {"points", rows}};
  return p;
}

Payload cmd_reduce(const Inputs& in, const Config& cfg) {
  Payload p;
  CanonicalPair pair(load_algebra(in), cfg.seed, cfg.height);
  p.input = algebra_to_json(pair.algebra());
  auto pts = load_points(in, pair.dim(), cfg, false);
  auto lams = lambda_schedule(cfg.lambda_samples);
  auto rank = rank_or_null(pair, p.warnings);
  auto rows = parallel_map<Json>(pts.size(), cfg.threads, [&](std::size_t k) {
    if (in_sing(pair, pts[k]))
      throw PreconditionError("reduction needs a point outside Sing; " + to_json(pts[k]).dump() + " is singular");
    ReductionReport r = reduction_completeness(pair, pts[k], lams);
    return Json{{"point", to_json(r.z)},
                {"orbit_dim", r.orbit_dim},
                {"cr_dim", r.cr_dim},
                {"quotient_dim", r.quotient_dim},
                {"k", r.k},
                {"k_lambda", lambda_counts_json(r.k_lambda)},
                {"d_lambda", lambda_counts_json(r.d_lambda)},
                {"reduced_generic_rank", r.reduced_generic_rank},
                {"in_irregularity", r.in_irregularity},
                {"k_minimality", "irregularity-surrogate"},
                {"complete", r.complete},
                {"minimal", r.minimal}};
  });
  p.results = Json{{"algebra", pair.algebra().name()}, {"dim", pair.dim()}, {"rank", opt_json(rank)}, {"points", rows}};
  return p;
}

Payload cmd_integrals(const Inputs& in, const Config& cfg) {
  Payload p;
  CanonicalPair pair(load_algebra(in), cfg.seed, cfg.height);
  p.input = algebra_to_json(pair.algebra());
  auto pts = load_points(in, pair.dim(), cfg, false);
  auto lams = lambda_schedule(cfg.lambda_samples);
  IntegralFamily fam = family_F1(pair, cfg.degree, lams);
  for (const auto& w : fam.warnings) p.warnings.push_back(w);

  auto invariant = parallel_map<bool>(fam.size(), cfg.threads,
                                      [&](std::size_t k) { return g0_invariance_check(fam.members[k], pair, pts); });
  Json members = Json::array();
  for (std::size_t k = 0; k < fam.size(); ++k)
    members.push_back(Json{{"provenance", fam.provenance[k]},
                           {"polynomial", fam.members[k].to_string()},
                           {"g0_invariant", static_cast<bool>(invariant[k])}});

  Json ranks = Json::array();
  std::optional<Vec> regular;
  for (const auto& z : pts) {
    if (in_kronecker_irregularity(pair, z)) continue;
    if (!regular) regular = z;
    ranks.push_back(Json{{"point", to_json(z)}, {"differential_rank", differential_rank(fam, z)}});
  }
  Json lagr = nullptr;
  if (regular && !fam.members.empty()) {
    LagrangianCheck lc = cr_lagrangian(fam, pair, *regular);
    lagr = Json{{"point", to_json(*regular)},
                {"leaf_dim", lc.leaf_dim},
                {"kernel_dim", lc.kernel_dim},
                {"isotropic", lc.isotropic},
                {"lagrangian", lc.lagrangian}};
  } else if (!regular) {
    p.warnings.push_back("no scheduled point lies outside the irregularity set");
  }
  p.results = Json{{"algebra", pair.algebra().name()},
                   {"degree_bound", cfg.degree},
                   {"family_size", fam.size()},
                   {"members", members},
                   {"involutive", involutivity_check(fam, pair, lams, pts)},
                   {"differential_ranks", ranks},
                   {"cr_lagrangian", lagr}};
  return p;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += prefix + ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + ": []\n";
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Config cfg;
  Inputs in;
  CLI::App app{"Exact analysis of bihamiltonian pencils and Lie-Poisson pairs", "bihamil"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "seed of the point schedule");
  app.add_option("--lambda-samples", cfg.lambda_samples, "number of scheduled lambda values")->check(CLI::PositiveNumber);
  app.add_option("--points", cfg.points, "number of scheduled points when no --point is given")->check(CLI::PositiveNumber);
  app.add_option("--degree", cfg.degree, "degree bound of the Casimir search")->check(CLI::Range(1u, 8u));
  app.add_option("--height", cfg.height, "bound on scheduled numerators and denominators")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", cfg.output, "write the report to this file");
  app.add_option("--threads", cfg.threads, "worker threads for per-point analyses")->check(CLI::PositiveNumber);

  auto algebra_opts = [&](CLI::App* sub) {
    sub->add_option("--algebra", in.algebra, "catalog algebra name");
    sub->add_option("--algebra-file", in.algebra_file, "algebra JSON file");
  };
  auto point_opts = [&](CLI::App* sub) { sub->add_option("--point", in.points, "point literal such as (1,i,0); repeatable"); };

  std::map<std::string, std::function<Payload(const Inputs&, const Config&)>> commands{
      {"check-jacobi", cmd_check_jacobi}, {"pencil", cmd_pencil}, {"classify", cmd_classify},
      {"orbit", cmd_orbit},               {"reduce", cmd_reduce}, {"integrals", cmd_integrals}};
  std::map<std::string, std::string> help{
      {"check-jacobi", "Schouten bracket [c,c] and the canonical pair check"},
      {"pencil", "Kronecker invariants and completeness of a pencil at points"},
      {"classify", "Sing, incompleteness and irregularity membership with mu"},
      {"orbit", "orbit and CR dimensions, CR genericity and isotropy"},
      {"reduce", "k numbers and completeness of the reduced structure"},
      {"integrals", "Casimirs, the F1 family and its checks"}};
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help[name]);
    algebra_opts(sub);
    point_opts(sub);
    if (name == "pencil") {
      sub->add_option("--pair", in.pair, "catalog pair: kron_2068, kron_2069, jordan4_lam(<value>)");
      sub->add_option("--pair-file", in.pair_file, "bivector pair JSON file");
    }
  }

  Result res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = std::string(e.what()) + "\n";
    return res;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  try {
    Payload p = commands.at(command)(in, cfg);
    Json report{{"schema", kSchema},
                {"tool_version", kToolVersion},
                {"command", command},
                {"config",
                 Json{{"seed", cfg.seed},
                      {"lambda_samples", cfg.lambda_samples},
                      {"points", cfg.points},
                      {"degree", cfg.degree},
                      {"height", cfg.height}}},
                {"input_digest", "fnv1a64:" + hex64(fnv1a(p.input.dump()))},
                {"input", p.input},
                {"warnings", p.warnings},
                {"results", p.results}};
    std::string text;
    if (cfg.format == "json") {
      text = report.dump(2) + "\n";
    } else {
      flatten(report, "", text);
    }
    if (cfg.output.empty()) {
      res.out = std::move(text);
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f || !(f << text)) throw InputError("cannot write " + cfg.output);
    }
  } catch (const InputError& e) {
    res = {2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    res = {3, "", std::string("precondition violated: ") + e.what() + "\n"};
  } catch (const InternalInconsistency& e) {
    res = {4, "", std::string("internal inconsistency: ") + e.what() + "\n"};
  } catch (const DegreeCapExceeded& e) {
    res = {2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    res = {2, "", std::string("input error: ") + e.what() + "\n"};
  }
  return res;
}

}  // namespace bihamil::cli
