#ifndef SPSOLVE_SUBDIVISION_HPP
#define SPSOLVE_SUBDIVISION_HPP

#include "spsolve/polytope.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace spsolve {

/// Integer lifting values for every support point, reproducible from a seed.
struct Lifting {
  std::uint64_t seed = 0;
  std::vector<std::map<Exponent, std::int64_t>> heights;
};

Lifting random_lifting(const std::vector<std::set<Exponent>>& supports,
                       std::uint64_t seed);

/// One cell of a fine mixed subdivision: the selected face of every summand
/// plus the cell body conv(F_0 + ... + F_s) for point location.
struct Cell {
  std::vector<std::vector<Exponent>> faces;  // F_i, each sorted
  std::vector<int> type;                     // affine dimension of each F_i
  LatticePolytope body;
};

struct MixedSubdivision {
  Lifting lifting;
  std::vector<Cell> cells;  // sorted by faces, deterministic
};

/// Regular fine mixed subdivision induced by a random lifting. Retries with
/// seed+1, seed+2, ... up to `max_retries` times when a lifting is not
/// generic; throws DegenerateLifting when all attempts fail.
MixedSubdivision mixed_subdivision(const std::vector<std::set<Exponent>>& supports,
                                   std::uint64_t seed,
                                   int max_retries = 16);

/// Indices of the fully mixed cells (every face an edge); only meaningful
/// when the subdivision was built from exactly n supports in n variables.
std::vector<std::size_t> mixed_cell_indices(const MixedSubdivision& sub);

/// Normalized volume |det(e_1,...,e_n)| of a fully mixed cell.
Integer cell_volume(const Cell& cell);

/// Sum of mixed-cell volumes; equals the mixed volume of the supports.
std::int64_t mixed_volume_from_cells(const MixedSubdivision& sub);

/// Indices of cells whose body contains the (rational) point.
std::vector<std::size_t> locate(const MixedSubdivision& sub,
                                const std::vector<Rational>& point);

}  // namespace spsolve

#endif
