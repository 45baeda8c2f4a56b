#ifndef SPSOLVE_JSON_IO_HPP
#define SPSOLVE_JSON_IO_HPP

#include "spsolve/macaulay.hpp"
#include "spsolve/polynomial.hpp"
#include "spsolve/schur_solver.hpp"

#include "json.hpp"

#include <string>

namespace spsolve {

/// {"vars":["x","y"],"polys":[[{"c":"3/2","e":[1,0]},...],...]}
nlohmann::ordered_json system_to_json(const PolySystem& sys);
PolySystem system_from_json(const nlohmann::json& j);

/// Reads a system from a JSON file; throws std::runtime_error with a
/// human-readable message on malformed input.
PolySystem load_system(const std::string& path);

/// {"points":[[{"re":..,"im":..},...]],"residuals":[..],"mv":k,"seed":s}
nlohmann::ordered_json solution_to_json(const SolveResult& res);

/// Labels plus entries as rational strings.
nlohmann::ordered_json matrix_to_json(const MacaulayMatrix& m);
nlohmann::ordered_json matrix_to_json(const KoszulMatrix& m);

/// Plain text grid of a rational matrix for docs and golden tests.
std::string matrix_to_text(const RatMat& m);

}  // namespace spsolve

#endif
