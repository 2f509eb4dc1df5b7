// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

// relsemi: command-line runner for the relation, semigroup and heat experiments.
// Exit status: 0 all checks pass, 1 a check fails, 2 bad input.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relsemi/converge.hpp"
#include "relsemi/dissipative.hpp"
#include "relsemi/errors.hpp"
#include "relsemi/execution.hpp"
#include "relsemi/heat/experiment.hpp"
#include "relsemi/io.hpp"
#include "relsemi/logging.hpp"
#include "relsemi/semigroup.hpp"
#include "relsemi/spectral.hpp"

namespace fs = std::filesystem;
using namespace relsemi;
using io::Json;

namespace {

struct Common {
  double tol = 0.0;  // 0 = command default
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out;
};

double tol_or(const Common& c, double dflt) {
  if (c.tol < 0.0 || std::isnan(c.tol)) throw ConfigError("--tol must be positive");
  return c.tol > 0.0 ? c.tol : dflt;
}

std::string param_str(Scalar z) {
  if (z.imag() == 0.0) return io::fmt(z.real());
  return io::fmt(z.real()) + (z.imag() < 0 ? "" : "+") + io::fmt(z.imag()) + "i";
}

// JSON to stdout, or <out>/<name> when --out is given.
void emit(const Common& c, const std::string& name, const Json& j) {
  if (c.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::write_atomic(fs::path(c.out) / name, j.dump(2) + "\n");
  }
}

void emit_file(const Common& c, const std::string& name, const std::string& content) {
  if (!c.out.empty()) io::write_atomic(fs::path(c.out) / name, content);
}

Json sampled_json(const DissipativityCertificate& d) {
  return {{"kind", d.kind == DissipativityCertificate::Kind::l2_exact ? "l2_exact" : "sampled_norm"},
          {"norm", d.norm == Norm::l2 ? "l2" : "sup"},
          {"witness", d.witness},
          {"duality_witness", d.duality_witness},
          {"samples", d.samples},
          {"passed", d.passed}};
}

int rel_parts(const Common& c, const std::string& file) {
  const LinearRelation a = io::relation_from_json(io::read_json(file));
  std::cout << "dom " << a.dom().dim() << "\nran " << a.ran().dim() << "\nker " << a.ker().dim() << "\nmul "
            << a.mul().dim() << "\n";
  if (!c.out.empty())
    emit(c, "parts.json",
         {{"state_dim", a.state_dim()},
          {"dom", a.dom().dim()},
          {"ran", a.ran().dim()},
          {"ker", a.ker().dim()},
          {"mul", a.mul().dim()}});
  return 0;
}

int spec_scan(const Common& c, const std::string& file, const std::string& grid, const std::string& imag) {
  const LinearRelation a = io::relation_from_json(io::read_json(file));
  const std::vector<double> re = io::parse_grid(grid);
  const std::vector<double> im = io::parse_grid(imag);
  std::vector<Scalar> lambdas;
  for (double y : im)
    for (double x : re) lambdas.emplace_back(x, y);
  const auto scan = resolvent_set_scan(a, lambdas, tol_or(c, kDefaultAcceptTol));
  std::vector<std::vector<std::string>> rows;
  for (const ScanEntry& e : scan)
    rows.push_back({io::fmt(e.lambda.real()), io::fmt(e.lambda.imag()), e.in_resolvent_set ? "1" : "0",
                    io::fmt(e.norm), io::fmt(e.residual)});
  const std::string text =
      io::csv("resolvent_set_scan v1", {"lambda_re", "lambda_im", "in_resolvent_set", "norm_R", "residual"}, rows);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    emit_file(c, "scan.csv", text);
  }
  return 0;
}

int dissip_check(const Common& c, const std::string& file, const std::string& norm_name) {
  const LinearRelation a = io::relation_from_json(io::read_json(file));
  const double tol = tol_or(c, kDefaultCertTol);
  Json j;
  bool pass = false;
  if (norm_name == "l2") {
    const MDissipativeEvidence ev = is_m_dissipative(a, tol);
    j["dissipative"] = sampled_json(ev.l2);
    j["range_dim"] = ev.range_dim;
    j["resolvent_bound"] = io::fmt(ev.resolvent_bound);
    j["m_dissipative"] = ev.m_dissipative;
    pass = ev.l2.passed;
  } else if (norm_name == "sup") {
    const DissipativityCertificate d = is_dissipative_sampled(a, Norm::sup, 500, {0.1, 1.0, 10.0}, c.seed);
    j["dissipative"] = sampled_json(d);
    j["note"] = "sampled check: a failure refutes, a pass only supports";
    pass = d.passed;
  } else {
    throw ConfigError("--norm must be l2 or sup");
  }
  j["passed"] = pass;
  emit(c, "dissip.json", j);
  return pass ? 0 : 1;
}

int semigroup_run(const Common& c, const std::string& file, const std::string& x_file, const std::string& grid) {
  const LinearRelation a = io::relation_from_json(io::read_json(file));
  const Vector x = io::vector_from_json(io::read_json(x_file));
  if (x.size() != a.state_dim()) throw ConfigError("--x: vector length differs from state_dim");
  const std::vector<double> tg = io::parse_grid(grid);
  for (double t : tg)
    if (t < 0.0) throw ConfigError("--grid: times must be nonnegative");
  const SemigroupData sd = decompose(a);
  const MildSolution ms = mild_solution(sd, a, x, tg);
  const double tol = tol_or(c, 1e-8);
  const bool cplx = a.field() == Field::complex || x.imag().norm() > 0.0;

  std::vector<std::string> header{"t"};
  for (Index i = 0; i < a.state_dim(); ++i) {
    if (cplx) {
      header.push_back("u" + std::to_string(i + 1) + "_re");
      header.push_back("u" + std::to_string(i + 1) + "_im");
    } else {
      header.push_back("u" + std::to_string(i + 1));
    }
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<io::Series> series(a.state_dim());
  for (std::size_t k = 0; k < tg.size(); ++k) {
    std::vector<std::string> r{io::fmt(tg[k])};
    for (Index i = 0; i < a.state_dim(); ++i) {
      r.push_back(io::fmt(ms.u(i, k).real()));
      if (cplx) r.push_back(io::fmt(ms.u(i, k).imag()));
      series[i].label = "Re u" + std::to_string(i + 1);
      series[i].x.push_back(tg[k]);
      series[i].y.push_back(ms.u(i, k).real());
    }
    rows.push_back(std::move(r));
  }
  const bool pass = ms.max_membership <= tol && ms.lipschitz_excess <= 1e-9;
  Json j{{"max_membership", ms.max_membership},
         {"lipschitz_excess", ms.lipschitz_excess},
         {"tol", tol},
         {"passed", pass}};
  const std::string text = io::csv("trajectory v1", header, rows);
  if (c.out.empty()) {
    std::cout << text;
    std::cerr << j.dump() << "\n";
  } else {
    emit_file(c, "trajectory.csv", text);
    emit(c, "summary.json", j);
    emit_file(c, "trajectory.svg", io::svg_line_chart("mild solution S(t)x", "t", "value", series));
  }
  return pass ? 0 : 1;
}

RelationSequence family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("family: need 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("index")) throw ConfigError("family: need 'index'");
  const std::vector<double> index = j["index"].get<std::vector<double>>();
  if (index.empty()) throw ConfigError("family: empty index");
  if (kind == "list") {
    if (!j.contains("relations") || j["relations"].size() != index.size())
      throw ConfigError("family: 'relations' must match 'index'");
    RelationSequence s;
    s.index = index;
    for (const auto& r : j["relations"]) s.items.push_back(io::relation_from_json(r));
    return s;
  }
  if (kind == "affine") {
    // A_n = graph(base + c(n) direction) with c(n) = n or 1/n.
    const Matrix dir = io::matrix_from_json(j.at("direction"));
    const Matrix base = j.contains("base") ? io::matrix_from_json(j["base"]) : Matrix::Zero(dir.rows(), dir.cols());
    if (base.rows() != dir.rows() || base.cols() != dir.cols() || dir.rows() != dir.cols())
      throw ConfigError("family: base and direction must be square and of equal size");
    const std::string scale = j.contains("scale") ? j["scale"].get<std::string>() : "n";
    if (scale != "n" && scale != "inverse") throw ConfigError("family: scale must be 'n' or 'inverse'");
    const Field f = join(field_of(base), field_of(dir));
    return RelationSequence::from_rule(
        [&](double n) {
          const double s = scale == "n" ? n : 1.0 / n;
          return LinearRelation::from_matrix(base + s * dir, f);
        },
        index);
  }
  throw ConfigError("family: unknown kind '" + kind + "'");
}

Json report_json(const ConvergenceReport& r) {
  static const char* items[] = {"i_integrated", "ii_resolvents", "iii_single_resolvent", "iv_mu_resolvent",
                                "v_graphs"};
  Json v;
  for (int k = 0; k < 5; ++k) v[items[k]] = r.verdict[k];
  Json res = Json::array();
  for (const auto& row : r.resolvent_error) res.push_back(row);
  return {{"index", r.index},
          {"s_error", r.s_error},
          {"resolvent_error", res},
          {"single_error", r.single_error},
          {"mu_error", r.mu_error},
          {"gap", r.gap},
          {"t_error", r.t_error},
          {"mu_sup_norm", io::fmt(r.mu_sup_norm)},
          {"mu_hypotheses", r.mu_hypotheses},
          {"verdict", v},
          {"consistent", r.consistent},
          {"passed", r.passed}};
}

std::string rows_csv(const ConvergenceReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const ReportRow& row : r.rows)
    rows.push_back({io::fmt(row.n), row.kind, param_str(row.param), io::fmt(row.error)});
  return io::csv("convergence_report v1", {"n", "kind", "param", "error"}, rows);
}

io::Series positive_series(const std::string& label, const std::vector<double>& x, const std::vector<double>& y) {
  io::Series s{label, {}, {}};
  for (std::size_t k = 0; k < x.size(); ++k) {
    s.x.push_back(x[k]);
    s.y.push_back(y[k]);
  }
  return s;
}

int converge_tk(const Common& c, const std::string& family, const std::string& limit_file) {
  const RelationSequence seq = family_from_json(io::read_json(family));
  const LinearRelation limit = limit_file.empty()
                                   ? limit_from_resolvents(1.0, seq, tol_or(c, 1e-2))
                                   : io::relation_from_json(io::read_json(limit_file));
  TrotterKatoOptions opts;
  opts.tol = tol_or(c, 1e-2);
  opts.strict = false;
  opts.f_set = default_f_set(limit.state_dim(), Field::complex, c.seed);
  const ConvergenceReport r = trotter_kato_report(seq, limit, opts);
  Json j = report_json(r);
  j["limit"] = io::to_json(limit);
  emit(c, "report.json", j);
  emit_file(c, "report.csv", rows_csv(r));
  emit_file(c, "errors.svg",
            io::svg_line_chart("Trotter-Kato errors", "n", "log10 error",
                               {positive_series("S", r.index, r.s_error),
                                positive_series("R(first lambda)", r.index, r.single_error),
                                positive_series("gap", r.index, r.gap)},
                               true));
  return r.passed ? 0 : 1;
}

heat::Mask mask_in(const heat::Grid& g, const Json& grid_json, const Json& spec) {
  if (spec.is_object() && spec.contains("shape")) {
    Json full = spec;
    full["grid"] = grid_json;
    const heat::Mask m = heat::mask_from_json(full);
    if (!(m.grid() == g)) throw ConfigError("mask: grid differs from the family grid");
    return m;
  }
  throw ConfigError("mask: need 'shape'");
}

std::vector<heat::Mask> heat_family(const heat::Grid& g, const Json& gj, const Json& fam) {
  if (fam.is_array()) {
    std::vector<heat::Mask> out;
    for (const auto& s : fam) out.push_back(mask_in(g, gj, s));
    return out;
  }
  if (fam.is_object() && fam.contains("polygons")) {
    const Json& p = fam["polygons"];
    const auto c = p.at("center").get<std::vector<double>>();
    if (c.size() != 2) throw ConfigError("family.polygons.center must have two entries");
    return heat::polygon_family(g, c[0], c[1], p.at("r").get<double>(), p.at("sides").get<std::vector<int>>());
  }
  if (fam.is_object() && fam.contains("slits")) {
    const Json& s = fam["slits"];
    std::vector<double> w;
    for (double k : s.at("widths_h").get<std::vector<double>>()) w.push_back(k * g.h());
    return heat::slit_family(g, s.at("r").get<double>(), w);
  }
  if (fam.is_object() && fam.contains("disks")) {
    return heat::disk_family(g, fam["disks"].at("radii").get<std::vector<double>>());
  }
  throw ConfigError("family: expected a list of masks or one of polygons/slits/disks");
}

int heat_converge(const Common& c, const std::string& file) {
  const Json j = io::read_json(file);
  if (!j.contains("grid") || !j.contains("family") || !j.contains("limit"))
    throw ConfigError("heat family: need 'grid', 'family' and 'limit'");
  const heat::Grid g = heat::grid_from_json(j["grid"]);
  const std::vector<heat::Mask> masks = heat_family(g, j["grid"], j["family"]);
  if (masks.empty()) throw ConfigError("heat family: empty family");
  heat::Mask limit = heat::Mask::empty(g);
  const Json& lj = j["limit"];
  if (lj.is_object() && lj.contains("slit_h")) {
    limit = heat::slit_family(g, lj.at("r").get<double>(), {lj["slit_h"].get<double>() * g.h()}).front();
  } else {
    limit = mask_in(g, j["grid"], lj);
  }
  heat::HeatExperimentOptions opts;
  if (j.contains("lambdas")) opts.lambdas = j["lambdas"].get<std::vector<double>>();
  if (j.contains("t_grid")) opts.t_grid = io::parse_grid(j["t_grid"].get<std::string>());
  opts.tol = tol_or(c, j.contains("tol") ? j["tol"].get<double>() : 0.05);
  if (j.contains("direction")) {
    const std::string d = j["direction"].get<std::string>();
    if (d == "to_infinity") {
      opts.direction = heat::EigenDirection::to_infinity;
    } else if (d == "to_zero") {
      opts.direction = heat::EigenDirection::to_zero;
    } else {
      throw ConfigError("direction must be to_infinity or to_zero");
    }
  }
  if (opts.lambdas.empty()) throw ConfigError("heat family: empty lambdas");
  const heat::HeatConvergence r = heat::perturbation_experiment(masks, limit, opts);

  Json crit;
  Json n0 = Json::array();
  for (const auto& v : r.criterion.n0) n0.push_back(v ? Json(*v) : Json(nullptr));
  std::vector<std::string> eig;
  for (double e : r.criterion.surplus_eigenvalue) eig.push_back(io::fmt(e));
  crit["margins"] = r.criterion.margins;
  crit["n0"] = n0;
  crit["surplus_eigenvalue"] = eig;
  crit["surplus_measure"] = r.criterion.surplus_measure;
  crit["direction"] = opts.direction == heat::EigenDirection::to_infinity ? "to_infinity" : "to_zero";
  crit["eig_to_infinity"] = r.criterion.eig_to_infinity;
  crit["eig_to_zero"] = r.criterion.eig_to_zero;
  crit["a_holds"] = r.criterion.a_holds;
  crit["b_holds"] = r.criterion.b_holds;
  bool certified = true;
  for (const auto& ce : r.certificates) certified = certified && ce.passed;
  const bool pass = r.tk.verdict[0] && r.s_strictly_decreasing && r.resolvent_decreasing && certified;
  Json out = report_json(r.tk);
  out["assumptions"] = r.assumptions;
  out["criterion"] = crit;
  out["off_domain"] = r.off_domain;
  out["s_strictly_decreasing"] = r.s_strictly_decreasing;
  out["resolvent_decreasing"] = r.resolvent_decreasing;
  out["off_domain_decreasing"] = r.off_domain_decreasing;
  out["certified"] = certified;
  out["passed"] = pass;
  emit(c, "report.json", out);
  emit_file(c, "report.csv", rows_csv(r.tk));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < masks.size(); ++i)
    rows.push_back({io::fmt(r.tk.index[i]), std::to_string(masks[i].count()),
                    io::fmt(r.criterion.surplus_eigenvalue[i]), io::fmt(r.criterion.surplus_measure[i]),
                    io::fmt(r.off_domain[i])});
  emit_file(c, "criterion.csv",
            io::csv("domain_criterion v1", {"n", "nodes", "surplus_eigenvalue", "surplus_measure", "off_domain"},
                    rows));
  emit_file(c, "errors.svg",
            io::svg_line_chart("sup-norm errors along the mask family", "n", "log10 error",
                               {positive_series("S", r.tk.index, r.tk.s_error),
                                positive_series("R(first lambda)", r.tk.index, r.tk.single_error),
                                positive_series("off domain", r.tk.index, r.off_domain)},
                               true));
  return pass ? 0 : 1;
}

int heat_orbit(const Common& c, const std::string& mask_file, const std::string& u0_spec, const std::string& grid) {
  const heat::Mask mask = heat::mask_from_json(io::read_json(mask_file));
  const heat::HeatGenerator gen(mask);
  Vector u0;
  if (u0_spec == "ones") {
    u0 = Vector::Ones(gen.dim());
  } else {
    u0 = io::vector_from_json(io::read_json(u0_spec));
    if (u0.size() != gen.dim()) throw ConfigError("--u0: length differs from the grid size");
  }
  const std::vector<double> tg = io::parse_grid(grid);
  if (tg.front() <= 0.0) throw ConfigError("--grid: times must be positive");
  const heat::HeatOrbit o = heat::heat_orbit(gen, u0, tg, tol_or(c, 1e-6));
  std::vector<std::vector<std::string>> rows;
  io::Series sup{"sup |u(t)|", {}, {}}, trace{"initial trace", {}, {}};
  for (std::size_t k = 0; k < o.t.size(); ++k) {
    for (Index i = 0; i < gen.dim(); ++i)
      rows.push_back({io::fmt(o.t[k]), std::to_string(i), io::fmt(o.u[k](i).real())});
    sup.x.push_back(o.t[k]);
    sup.y.push_back(o.u[k].cwiseAbs().maxCoeff());
    trace.x.push_back(o.t[k]);
    trace.y.push_back(o.initial_trace[k]);
  }
  Json j{{"t", o.t},
         {"membership", o.membership},
         {"initial_trace", o.initial_trace},
         {"off_domain_max", o.off_domain_max},
         {"projection_error", o.projection_error},
         {"passed", o.passed}};
  emit(c, "orbit.json", j);
  emit_file(c, "trajectory.csv", io::csv("heat_trajectory v1", {"t", "node", "value"}, rows));
  emit_file(c, "orbit.svg", io::svg_line_chart("heat orbit", "t", "value", {sup, trace}));
  return o.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  log::init_from_env();
  CLI::App app{"relsemi: linear relations, resolvents and semigroups"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--tol", c.tol, "tolerance (command default when omitted)");
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--jobs", c.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", c.out, "output directory");
  };

  int status = 0;
  std::string file, grid = "0:0.05:5", imag = "0", x_file, norm_name = "l2", family, limit, mask_file,
                    u0 = "ones";

  auto* rel = app.add_subcommand("rel", "relation utilities");
  rel->require_subcommand(1);
  auto* parts = rel->add_subcommand("parts", "dimensions of dom, ran, ker, mul");
  parts->add_option("file", file, "relation JSON")->required();
  common(parts);
  parts->callback([&] { set_max_threads(c.jobs); status = rel_parts(c, file); });

  auto* spec = app.add_subcommand("spec", "resolvent set");
  spec->require_subcommand(1);
  auto* scan = spec->add_subcommand("scan", "classify a grid of lambdas");
  scan->add_option("file", file, "relation JSON")->required();
  scan->add_option("--grid", grid, "real parts a:step:b")->required();
  scan->add_option("--imag", imag, "imaginary parts a:step:b")->capture_default_str();
  common(scan);
  scan->callback([&] { set_max_threads(c.jobs); status = spec_scan(c, file, grid, imag); });

  auto* dissip = app.add_subcommand("dissip", "dissipativity");
  dissip->require_subcommand(1);
  auto* check = dissip->add_subcommand("check", "certify or refute dissipativity");
  check->add_option("file", file, "relation JSON")->required();
  check->add_option("--norm", norm_name, "l2 or sup")->capture_default_str();
  common(check);
  check->callback([&] { set_max_threads(c.jobs); status = dissip_check(c, file, norm_name); });

  auto* semi = app.add_subcommand("semigroup", "semigroup trajectories");
  semi->require_subcommand(1);
  auto* run = semi->add_subcommand("run", "mild solution u(t) = S(t)x");
  run->add_option("file", file, "relation JSON")->required();
  run->add_option("--x", x_file, "initial vector JSON")->required();
  run->add_option("--grid", grid, "times a:step:b")->capture_default_str();
  common(run);
  run->callback([&] { set_max_threads(c.jobs); status = semigroup_run(c, file, x_file, grid); });

  auto* conv = app.add_subcommand("converge", "convergence reports");
  conv->require_subcommand(1);
  auto* tk = conv->add_subcommand("tk", "Trotter-Kato equivalence report");
  tk->add_option("--family", family, "family JSON")->required();
  tk->add_option("--limit", limit, "limit relation JSON (empirical limit when omitted)");
  common(tk);
  tk->callback([&] { set_max_threads(c.jobs); status = converge_tk(c, family, limit); });

  auto* heat_cmd = app.add_subcommand("heat", "heat equation on masked grids");
  heat_cmd->require_subcommand(1);
  auto* hconv = heat_cmd->add_subcommand("converge", "domain convergence experiment");
  hconv->add_option("--family", family, "family JSON")->required();
  common(hconv);
  hconv->callback([&] { set_max_threads(c.jobs); status = heat_converge(c, family); });
  auto* horbit = heat_cmd->add_subcommand("orbit", "heat orbit T(t)u0");
  horbit->add_option("--mask", mask_file, "mask JSON")->required();
  horbit->add_option("--u0", u0, "'ones' or a vector JSON")->capture_default_str();
  horbit->add_option("--grid", grid, "times a:step:b")->capture_default_str();
  common(horbit);
  horbit->callback([&] { set_max_threads(c.jobs); status = heat_orbit(c, mask_file, u0, grid); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "relsemi: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "relsemi: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "relsemi: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "relsemi: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "relsemi: " << e.what() << "\n";
    return 2;
  }
  return status;
}
