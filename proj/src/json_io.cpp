#include "spsolve/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spsolve {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_from_json_string(const std::string& s) {
  return rational_from_string(s);
}

}  // namespace

nlohmann::ordered_json system_to_json(const PolySystem& sys) {
  nlohmann::ordered_json j;
  j["vars"] = sys.vars;
  nlohmann::ordered_json polys = nlohmann::ordered_json::array();
  for (const auto& f : sys.polys) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
      nlohmann::ordered_json t;
      if (c.is_exact()) {
        t["c"] = rational_str(c.exact());
      } else {
        t["c"] = {{"re", c.numeric().real()}, {"im", c.numeric().imag()}};
      }
      t["e"] = e.coords;
      terms.push_back(std::move(t));
    }
    polys.push_back(std::move(terms));
  }
  j["polys"] = std::move(polys);
  return j;
}

PolySystem system_from_json(const nlohmann::json& j) {
  PolySystem sys;
  if (!j.contains("vars") || !j["vars"].is_array())
    throw std::runtime_error("system JSON: missing \"vars\" array");
  for (const auto& v : j["vars"]) sys.vars.push_back(v.get<std::string>());
  sys.nvars = sys.vars.size();
  if (!j.contains("polys") || !j["polys"].is_array())
    throw std::runtime_error("system JSON: missing \"polys\" array");
  for (const auto& terms : j["polys"]) {
    SparsePoly f(sys.nvars);
    for (const auto& t : terms) {
      if (!t.contains("c") || !t.contains("e"))
        throw std::runtime_error("system JSON: term needs \"c\" and \"e\"");
      Exponent e;
      e.coords = t["e"].get<std::vector<std::int64_t>>();
      if (e.dim() != sys.nvars)
        throw std::runtime_error("system JSON: exponent length != #vars");
      Coefficient c;
      if (t["c"].is_string()) {
        c = Coefficient(rational_from_json_string(t["c"].get<std::string>()));
      } else if (t["c"].is_number()) {
        std::ostringstream os;
        os << t["c"];
        c = Coefficient(rational_from_json_string(os.str()));
      } else if (t["c"].is_object()) {
        c = Coefficient(std::complex<double>(t["c"].value("re", 0.0),
                                             t["c"].value("im", 0.0)));
      } else {
        throw std::runtime_error("system JSON: unsupported coefficient form");
      }
      f.add_term(e, c);
    }
    sys.polys.push_back(std::move(f));
  }
  return sys;
}

PolySystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return system_from_json(j);
}

nlohmann::ordered_json solution_to_json(const SolveResult& res) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : res.points) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& z : p)
      coords.push_back({{"re", z.real()}, {"im", z.imag()}});
    pts.push_back(std::move(coords));
  }
  j["points"] = std::move(pts);
  j["residuals"] = res.residuals;
  j["mv"] = res.mixed_volume;
  j["seed"] = res.seed;
  if (!res.warnings.empty()) j["warnings"] = res.warnings;
  return j;
}

namespace {

nlohmann::ordered_json entries_of(const RatMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(rational_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json matrix_to_json(const MacaulayMatrix& m) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : m.rows)
    rows.push_back({{"poly", r.poly}, {"shift", r.shift.coords}});
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (const auto& c : m.cols) cols.push_back(c.coords);
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  j["entries"] = entries_of(m.mat);
  return j;
}

nlohmann::ordered_json matrix_to_json(const KoszulMatrix& m) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [i, k] : m.row_labels) rows.push_back({i, k});
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (const auto& [i, k] : m.col_labels) cols.push_back({i, k});
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  j["entries"] = entries_of(m.mat);
  return j;
}

std::string matrix_to_text(const RatMat& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::string s = rational_str(m(i, j));
      width[static_cast<std::size_t>(j)] =
          std::max(width[static_cast<std::size_t>(j)], s.size());
      cells[static_cast<std::size_t>(i)].push_back(std::move(s));
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace spsolve
