// voroq: Voronoi-cell isoperimetry of 3-D lattices in Selling coordinates.
//
// Subcommands: eval, analyze, table, orbits, family, minimize, export.
// Exit codes: 0 ok, 2 parse error, 3 degenerate geometry, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "voroq/calculus.hpp"
#include "voroq/cell.hpp"
#include "voroq/errors.hpp"
#include "voroq/families.hpp"
#include "voroq/optimize.hpp"
#include "voroq/quotient.hpp"
#include "voroq/selling.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

// 12 significant digits, reparsed so the JSON round-trips byte-identically.
double sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json vec_json(const voroq::Vec6& v) {
  json a = json::array();
  for (double x : v) a.push_back(sig12(x));
  return a;
}

voroq::Vec6 parse_rho(const std::string& text) {
  voroq::Vec6 rho{};
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 6) throw std::invalid_argument("expected 6 components");
    std::size_t pos = 0;
    try {
      rho[n] = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    ++n;
  }
  if (n != 6) throw std::invalid_argument("expected 6 components");
  return rho;
}

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int cmd_eval(const std::string& rho_text, bool as_json) {
  const voroq::SellingParams rho(parse_rho(rho_text));
  const voroq::VoronoiCell cell = voroq::build_cell(rho);
  const double det = voroq::det_closed(rho.raw());
  const double f_closed = voroq::F_closed(rho);
  const double f_geom = voroq::F_geometric(rho);
  const double q = voroq::Q_from_F(f_closed);

  if (as_json) {
    json out;
    out["rho"] = vec_json(rho.raw());
    out["det"] = sig12(det);
    out["F_closed"] = sig12(f_closed);
    out["F_geometric"] = sig12(f_geom);
    out["Q"] = sig12(q);
    out["volume"] = sig12(cell.volume);
    out["total_area"] = sig12(cell.total_area);
    out["faces"] = json::array();
    for (const auto& f : cell.faces)
      out["faces"].push_back({{"name", f.name}, {"area", sig12(f.scalar_area)}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "det A       = " << fmt6(det) << "\n"
            << "F (closed)  = " << fmt6(f_closed) << "\n"
            << "F (geom)    = " << fmt6(f_geom) << "\n"
            << "Q           = " << fmt6(q) << "\n"
            << "volume      = " << fmt6(cell.volume) << "\n"
            << "total area  = " << fmt6(cell.total_area) << "\n"
            << "faces:\n";
  for (const auto& f : cell.faces)
    std::cout << "  " << f.name << "\t" << fmt6(f.scalar_area) << "\n";
  return 0;
}

int cmd_analyze(const std::string& rho_text, double h_grad, double h_hess, bool as_json) {
  const voroq::SellingParams rho(parse_rho(rho_text));
  voroq::ClassifyOptions opt;
  if (h_grad > 0.0) opt.fd.grad_step = h_grad;
  if (h_hess > 0.0) opt.fd.hess_step = h_hess;
  const voroq::StationaryReport rep = voroq::classify_point(rho, opt);

  if (as_json) {
    json out;
    out["rho"] = vec_json(rep.point);
    out["classification"] = voroq::to_string(rep.classification);
    out["active_set"] = rep.active_set;
    out["gradient"] = vec_json(rep.gradient);
    out["euler_residual"] = sig12(rep.euler_residual);
    out["hessian"] = json::array();
    for (const auto& row : rep.hessian) out["hessian"].push_back(vec_json(row));
    json fs = json::array(), ts = json::array();
    for (double v : rep.full_spectrum) fs.push_back(sig12(v));
    for (double v : rep.tangent_spectrum) ts.push_back(sig12(v));
    out["full_spectrum"] = fs;
    out["tangent_spectrum"] = ts;
    out["one_sided_fd"] = rep.one_sided_fd;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "classification   = " << voroq::to_string(rep.classification) << "\n";
  std::cout << "active set       = {";
  for (std::size_t i = 0; i < rep.active_set.size(); ++i)
    std::cout << (i ? "," : "") << rep.active_set[i];
  std::cout << "}\n";
  std::cout << "gradient         =";
  for (double g : rep.gradient) std::cout << " " << fmt6(g);
  std::cout << "\nfull spectrum    =";
  for (double v : rep.full_spectrum) std::cout << " " << fmt6(v);
  std::cout << "\ntangent spectrum =";
  for (double v : rep.tangent_spectrum) std::cout << " " << fmt6(v);
  std::cout << "\neuler residual   = " << rep.euler_residual << "\n";
  if (rep.one_sided_fd)
    std::cout << "note: boundary point, one-sided stencils used\n";
  return 0;
}

int cmd_table(bool as_json) {
  struct Row {
    const char* structure;
    const char* f_exact;
    double f;
  };
  const Row rows[3] = {
      {"SC (cube)", "6", voroq::refs::f_sc()},
      {"FCC (rhombic dodecahedron)", "3*2^(5/6)", voroq::refs::f_fcc()},
      {"BCC (truncated octahedron)", "3*2^(2/3)*(1+2*sqrt(3))/4", voroq::refs::f_bcc()},
  };
  if (as_json) {
    json out = json::array();
    for (const Row& r : rows) {
      char qbuf[32];
      std::snprintf(qbuf, sizeof qbuf, "%.4f", voroq::Q_from_F(r.f));
      out.push_back({{"structure", r.structure},
                     {"F_exact", r.f_exact},
                     {"F", sig12(r.f)},
                     {"Q", std::strtod(qbuf, nullptr)}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("%-28s %-28s %-10s %s\n", "structure", "F exact", "F", "Q");
  for (const Row& r : rows)
    std::printf("%-28s %-28s %-10.6f %.4f\n", r.structure, r.f_exact, r.f,
                voroq::Q_from_F(r.f));
  return 0;
}

int cmd_orbits(bool as_json) {
  const auto classes = voroq::enumerate_two_value_orbits();
  if (as_json) {
    json out = json::array();
    for (const auto& c : classes)
      out.push_back({{"name", std::string(1, c.name)},
                     {"pattern", c.pattern},
                     {"orbit_size", c.orbit_size},
                     {"weight", c.weight}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("%-6s %-16s %-12s %s\n", "class", "pattern", "orbit size", "weight");
  for (const auto& c : classes) {
    std::string pat;
    for (int b : c.pattern) pat += b ? "p" : "q";
    std::printf("%-6c %-16s %-12d %d\n", c.name, pat.c_str(), c.orbit_size, c.weight);
  }
  return 0;
}

int cmd_family(const std::string& cls_name, double u_min, double u_max,
               std::size_t steps, const std::string& out_path) {
  const auto classes = voroq::enumerate_two_value_orbits();
  const voroq::OrbitClass* cls = nullptr;
  for (const auto& c : classes)
    if (cls_name.size() == 1 && c.name == cls_name[0]) cls = &c;
  if (!cls) throw std::invalid_argument("unknown class: " + cls_name);
  if (steps < 2 || u_max <= u_min) throw std::invalid_argument("bad u grid");

  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open " + out_path);

  char line[256];
  const bool opposite = cls->name == 'O';
  out << (opposite ? "u,H,psi,tildeF,F_check\n" : "u,F\n");
  for (std::size_t k = 0; k < steps; ++k) {
    const double u = u_min + (u_max - u_min) * static_cast<double>(k) /
                                 static_cast<double>(steps - 1);
    try {
      if (opposite) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n", u,
                      voroq::H_of_u(u), voroq::psi(u), voroq::tilde_F(u),
                      voroq::family_F(*cls, u, 1.0));
      } else {
        std::snprintf(line, sizeof line, "%.12g,%.12g\n", u,
                      voroq::family_F(*cls, u, 1.0));
      }
      out << line;
    } catch (const voroq::DegenerateCell&) {
      std::snprintf(line, sizeof line, "# degenerate at u=%.12g\n", u);
      out << line;
    }
  }
  if (!out.good()) throw std::ios_base::failure("write failed: " + out_path);
  return 0;
}

int cmd_minimize(const std::string& start_text, int n_random, std::uint64_t seed,
                 int max_iter, bool as_json) {
  voroq::OptimizeConfig cfg;
  if (max_iter > 0) cfg.max_iter = max_iter;

  if (!start_text.empty()) {
    const voroq::SellingParams start(parse_rho(start_text));
    const voroq::OptimizationResult r = voroq::minimize_F(start, cfg);
    if (as_json) {
      json out;
      out["start"] = vec_json(r.start);
      out["minimizer"] = vec_json(r.minimizer);
      out["F"] = sig12(r.F_value);
      out["iterations"] = r.iterations;
      out["converged"] = r.converged;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "F          = " << fmt6(r.F_value) << "\n"
                << "iterations = " << r.iterations << "\n"
                << "converged  = " << (r.converged ? "yes" : "no") << "\nminimizer  =";
      for (double v : r.minimizer) std::cout << " " << fmt6(v);
      std::cout << "\n";
    }
    return 0;
  }

  const voroq::SurveySummary s = voroq::random_restart_survey(n_random, seed, cfg);
  if (as_json) {
    json out;
    out["n_starts"] = s.n_starts;
    out["seed"] = s.seed;
    out["best_F"] = sig12(s.best_F);
    out["best_point"] = vec_json(s.best_point);
    out["n_converged_to_bcc"] = s.n_converged_to_bcc;
    out["fraction_converged"] = sig12(s.fraction_converged);
    out["counterexample_candidates"] = json::array();
    for (const auto& c : s.counterexample_candidates)
      out["counterexample_candidates"].push_back(vec_json(c));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "starts              = " << s.n_starts << " (seed " << s.seed << ")\n"
              << "best F              = " << fmt6(s.best_F) << "\n"
              << "converged fraction  = " << fmt6(s.fraction_converged) << "\n"
              << "counterexamples     = " << s.counterexample_candidates.size() << "\n";
  }
  return 0;
}

int cmd_export(const std::string& rho_text, const std::string& out_path) {
  const voroq::SellingParams rho(parse_rho(rho_text));
  const voroq::VoronoiCell cell = voroq::build_cell(rho);
  const voroq::EuclideanEmbedding emb = voroq::embed_euclidean(rho);
  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open " + out_path);
  out << voroq::export_obj(cell, emb);
  if (!out.good()) throw std::ios_base::failure("write failed: " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voronoi-cell isoperimetry of 3-D lattices (Selling parameters)"};
  app.require_subcommand(1);

  std::string rho_text, out_path, cls_name = "O", start_text;
  bool as_json = false;
  double h_grad = 0.0, h_hess = 0.0, u_min = 0.0, u_max = 50.0;
  std::size_t steps = 501;
  int n_random = 0, max_iter = 0;
  std::uint64_t seed = 1;

  CLI::App* eval = app.add_subcommand("eval", "evaluate F, Q, areas, volume");
  eval->add_option("--rho", rho_text, "six comma-separated parameters")->required();
  eval->add_flag("--json", as_json, "machine-readable output");

  CLI::App* analyze = app.add_subcommand("analyze", "gradient/Hessian/stationarity");
  analyze->add_option("--rho", rho_text)->required();
  analyze->add_option("--h-grad", h_grad, "gradient FD step scale");
  analyze->add_option("--h-hess", h_hess, "Hessian FD step scale");
  analyze->add_flag("--json", as_json);

  CLI::App* table = app.add_subcommand("table", "SC/FCC/BCC quotients");
  table->add_flag("--json", as_json);

  CLI::App* orbits = app.add_subcommand("orbits", "two-value orbit classes");
  orbits->add_flag("--json", as_json);

  CLI::App* family = app.add_subcommand("family", "scan a two-value family to CSV");
  family->add_option("--class", cls_name, "orbit class (C, O, A, S, T, P)");
  family->add_option("--u-min", u_min);
  family->add_option("--u-max", u_max);
  family->add_option("--steps", steps);
  family->add_option("--out", out_path, "CSV output path")->required();

  CLI::App* minimize = app.add_subcommand("minimize", "descend F on the simplex");
  minimize->add_option("--start", start_text, "starting point");
  minimize->add_option("--random", n_random, "number of random restarts");
  minimize->add_option("--seed", seed);
  minimize->add_option("--max-iter", max_iter);
  minimize->add_flag("--json", as_json);

  CLI::App* exp = app.add_subcommand("export", "write the cell as Wavefront OBJ");
  exp->add_option("--rho", rho_text)->required();
  exp->add_option("--out", out_path, "OBJ output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (eval->parsed()) return cmd_eval(rho_text, as_json);
    if (analyze->parsed()) return cmd_analyze(rho_text, h_grad, h_hess, as_json);
    if (table->parsed()) return cmd_table(as_json);
    if (orbits->parsed()) return cmd_orbits(as_json);
    if (family->parsed()) return cmd_family(cls_name, u_min, u_max, steps, out_path);
    if (minimize->parsed()) {
      if (start_text.empty() && n_random <= 0) {
        std::cerr << "minimize: need --start or --random N\n";
        return kExitParse;
      }
      return cmd_minimize(start_text, n_random, seed, max_iter, as_json);
    }
    if (exp->parsed()) return cmd_export(rho_text, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const voroq::NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const voroq::DegenerateCell& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
