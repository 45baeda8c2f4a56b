#include "spsolve/errors.hpp"
#include "spsolve/fglm.hpp"
#include "spsolve/json_io.hpp"
#include "spsolve/macaulay.hpp"
#include "spsolve/mulmaps.hpp"
#include "spsolve/schur_solver.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitSingular = 4;
constexpr int kExitResidual = 5;
constexpr int kExitUnstable = 6;

using namespace spsolve;

struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SOLVE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed SOLVE_SEED\n";
    }
  }
  return kDefaultSeed;
}

PolySystem read_system(const std::string& path) {
  return load_system(path);  // throws std::runtime_error with a message
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump() << "\n"; }

void dump_matrix(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

Degree parse_bstop(const std::string& text) {
  Degree d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    d.push_back(std::stoll(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return d;
}

int cmd_mv(const std::string& input, bool verbose) {
  PolySystem sys = read_system(input);
  if (sys.polys.size() != sys.nvars)
    throw ArityError("mv needs n polynomials in n variables");
  std::vector<LatticePolytope> ps;
  for (const auto& f : sys.polys) ps.push_back(newton_polytope(f));
  nlohmann::ordered_json j;
  j["mv"] = mixed_volume(ps);
  if (verbose) {
    // per-subset lattice-point counts of the inclusion-exclusion formula
    std::size_t n = ps.size();
    nlohmann::ordered_json subsets = nlohmann::ordered_json::array();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      LatticePolytope acc;
      bool started = false;
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        members.push_back(i);
        acc = started ? minkowski_sum(acc, ps[i]) : ps[i];
        started = true;
      }
      subsets.push_back({{"polys", members},
                         {"lattice_points", lattice_points(acc).size()}});
    }
    j["subsets"] = std::move(subsets);
  }
  emit(j);
  return kExitOk;
}

int cmd_macaulay(const std::string& input, const std::string& dump) {
  PolySystem sys = read_system(input);
  if (sys.polys.size() != sys.nvars + 1)
    throw ArityError("macaulay needs n+1 polynomials in n variables");
  MacaulayMatrix m = macaulay_matrix_dense(sys.polys);
  nlohmann::ordered_json j = matrix_to_json(m);
  if (!dump.empty()) dump_matrix(dump, j);
  emit(j);
  return kExitOk;
}

int cmd_ce_matrix(const std::string& input, std::uint64_t seed,
                  const std::string& dump) {
  PolySystem sys = read_system(input);
  if (sys.polys.size() != sys.nvars + 1)
    throw ArityError("ce-matrix needs n+1 polynomials in n variables");
  CannyEmirisData data = canny_emiris_matrix(sys.polys, seed);
  nlohmann::ordered_json j = matrix_to_json(data.matrix);
  j["seed"] = seed;
  nlohmann::ordered_json bs = nlohmann::ordered_json::array();
  for (const auto& b : data.b_sets) {
    nlohmann::ordered_json shifts = nlohmann::ordered_json::array();
    for (const auto& s : b) shifts.push_back(s.coords);
    bs.push_back(std::move(shifts));
  }
  j["b_sets"] = std::move(bs);
  if (!dump.empty()) dump_matrix(dump, j);
  emit(j);
  return kExitOk;
}

int cmd_koszul(const std::string& input, const std::string& dump) {
  PolySystem sys = read_system(input);
  if (sys.nvars != 4 || sys.polys.size() != 3)
    throw ArityError("koszul needs 3 bilinear forms in (x0,x1,y0,y1)");
  KoszulMatrix m = koszul_bilinear_matrix(sys.polys);
  nlohmann::ordered_json j = matrix_to_json(m);
  if (!dump.empty()) dump_matrix(dump, j);
  emit(j);
  return kExitOk;
}

int cmd_solve(const std::string& input, std::uint64_t seed, double tol) {
  PolySystem sys = read_system(input);
  if (sys.polys.size() != sys.nvars)
    throw ArityError("solve needs a square system");
  SolveResult res = solve_torus(sys, seed, tol);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
  emit(solution_to_json(res));
  for (double r : res.residuals)
    if (!(r <= tol)) return kExitResidual;
  return kExitOk;
}

int cmd_gb(const std::string& input, const std::string& summands,
           const std::string& bstop_text, const std::string& order,
           bool stats, const std::string& dump) {
  PolySystem sys = read_system(input);
  HomogenizedSystem h;
  if (summands == "auto") {
    h = homogenize_default(sys);
  } else {
    // file with {"summands":[[[e...],...],...],"degrees":[[d...],...]}
    std::ifstream in(summands);
    if (!in) throw std::runtime_error("cannot open " + summands);
    nlohmann::json sj;
    in >> sj;
    std::vector<LatticePolytope> qs;
    for (const auto& verts : sj.at("summands")) {
      std::vector<Exponent> pts;
      for (const auto& v : verts) {
        Exponent e;
        e.coords = v.get<std::vector<std::int64_t>>();
        pts.push_back(std::move(e));
      }
      qs.push_back(LatticePolytope::from_points(pts));
    }
    std::vector<Degree> degrees;
    for (const auto& d : sj.at("degrees"))
      degrees.push_back(d.get<std::vector<std::int64_t>>());
    h = homogenize_system(sys, build_algebra(sys.nvars, std::move(qs)),
                          std::move(degrees));
  }

  Degree bstop;
  if (!bstop_text.empty()) {
    bstop = parse_bstop(bstop_text);
  } else {
    bstop.assign(h.algebra.rank(), 0);
    for (const auto& d : h.degrees) bstop = degree_add(bstop, d);
  }

  nlohmann::ordered_json j;
  TruncatedGB gb = truncated_gb(h, bstop);
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& g : dehomogenize_gb(gb))
    basis.push_back(print_polynomial(g, sys.vars));
  j["truncated_gb"] = std::move(basis);
  j["bstop"] = bstop;

  MultiplicationMaps maps = multiplication_maps(h);
  nlohmann::ordered_json b0 = nlohmann::ordered_json::array();
  for (const auto& m : maps.basis) b0.push_back(m.coords);
  j["B0"] = std::move(b0);

  nlohmann::ordered_json eig = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < maps.maps.size(); ++i) {
    Eigen::MatrixXcd m(maps.maps[i].rows(), maps.maps[i].cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        m(r, c) = to_complex(maps.maps[i](r, c));
    EigenData ed = eigen_decomposition(m);
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < ed.values.size(); ++k)
      vals.push_back({{"re", ed.values(k).real()}, {"im", ed.values(k).imag()}});
    eig.push_back({{"var", sys.vars[i]}, {"eigenvalues", std::move(vals)}});
  }
  j["multiplication_eigenvalues"] = std::move(eig);

  if (order == "lex") {
    nlohmann::ordered_json lexgb = nlohmann::ordered_json::array();
    for (const auto& g : fglm_lex(maps))
      lexgb.push_back(print_polynomial(g, sys.vars));
    j["lex_gb"] = std::move(lexgb);
  }

  if (stats) {
    nlohmann::ordered_json st;
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (const auto& [d, sz] : gb.stats.matrix_sizes)
      sizes.push_back({{"degree", d}, {"rows", sz.first}, {"cols", sz.second}});
    st["matrix_sizes"] = std::move(sizes);
    nlohmann::ordered_json zr = nlohmann::ordered_json::array();
    for (const auto& [d, z] : gb.stats.zero_reductions)
      zr.push_back({{"degree", d}, {"zero_reductions", z}});
    st["zero_reductions"] = std::move(zr);
    st["rows_total"] = gb.stats.rows_total;
    st["rows_skipped"] = gb.stats.rows_skipped;
    j["stats"] = std::move(st);
  }

  if (!dump.empty()) {
    GradedMatrix gm = macaulay_matrix_graded(h, bstop, gb.lm_tables);
    nlohmann::ordered_json mj;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [i, beta] : gm.rows)
      rows.push_back({{"poly", i}, {"shift", beta.coords}});
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& c : gm.cols) cols.push_back(c.coords);
    mj["rows"] = std::move(rows);
    mj["cols"] = std::move(cols);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < gm.mat.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < gm.mat.cols(); ++c)
        row.push_back(gm.mat(r, c).get_str());
      entries.push_back(std::move(row));
    }
    mj["entries"] = std::move(entries);
    dump_matrix(dump, mj);
  }

  emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse polynomial system solver over the torus"};
  app.require_subcommand(1);

  std::string input, dump, bstop, order = "grevlex", summands = "auto";
  std::uint64_t seed = default_seed();
  double tol = 1e-8;
  bool verbose = false, stats = false;

  auto add_common = [&](CLI::App* c, bool with_seed) {
    c->add_option("input", input, "system JSON file")->required();
    c->add_option("--matrix-dump", dump, "write the matrix JSON to a file");
    if (with_seed) c->add_option("--seed", seed, "lifting/perturbation seed");
  };

  CLI::App* mv = app.add_subcommand("mv", "mixed volume (BKK bound)");
  add_common(mv, false);
  mv->add_flag("--verbose", verbose, "per-subset lattice-point counts");
  CLI::App* bkk = app.add_subcommand("bkk", "alias of mv");
  add_common(bkk, false);
  bkk->add_flag("--verbose", verbose, "per-subset lattice-point counts");

  CLI::App* mac = app.add_subcommand("macaulay", "dense Macaulay matrix");
  add_common(mac, false);
  CLI::App* ce = app.add_subcommand("ce-matrix", "Canny-Emiris matrix");
  add_common(ce, true);
  CLI::App* ko = app.add_subcommand("koszul", "bilinear Koszul matrix");
  add_common(ko, false);

  CLI::App* so = app.add_subcommand("solve", "eigenvalue solve on the torus");
  add_common(so, true);
  so->add_option("--tol", tol, "residual tolerance");

  CLI::App* gb = app.add_subcommand("gb", "toric Groebner basis pipeline");
  add_common(gb, false);
  gb->add_option("--summands", summands, "auto | summand-file path");
  gb->add_option("--bstop", bstop, "truncation multidegree, comma separated");
  gb->add_option("--order", order, "grevlex | lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  gb->add_flag("--stats", stats, "emit F5 elimination statistics");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mv->parsed()) return cmd_mv(input, verbose);
    if (bkk->parsed()) return cmd_mv(input, verbose);
    if (mac->parsed()) return cmd_macaulay(input, dump);
    if (ce->parsed()) return cmd_ce_matrix(input, seed, dump);
    if (ko->parsed()) return cmd_koszul(input, dump);
    if (so->parsed()) return cmd_solve(input, seed, tol);
    if (gb->parsed()) return cmd_gb(input, summands, bstop, order, stats, dump);
  } catch (const SingularM11& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const DimensionUnstable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResidual;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
