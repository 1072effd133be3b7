#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "opcat/simplicial.hpp"

namespace opcat {

// A finite simplicial set through level Q as index tables: face[q][i][x] for q ≥ 1 and
// degen[q][i][x] for q < Q.
struct FiniteSSet {
  std::vector<std::size_t> size;
  std::vector<std::vector<std::vector<std::size_t>>> face;
  std::vector<std::vector<std::vector<std::size_t>>> degen;

  std::size_t top() const { return size.size() - 1; }
};

// Level-0 tables of a simplicial object in a one-level category (sets or based sets).
FiniteSSet underlying(const SimplicialObject& k);
// Relabels every level by a random permutation.
FiniteSSet permuted(const FiniteSSet& k, std::uint64_t seed);

// The point; Δ^n/∂Δ^n with simplices the surjective monotone sequences plus the basepoint.
FiniteSSet point_sset(std::size_t q_max);
SimplicialObject sphere_model(std::size_t n, std::size_t q_max);

struct SparseColumnMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cols;  // sorted by row
};

// ∂_q: C_q -> C_{q-1} for q = 1..top, with boundary[0] the zero map from C_0.
struct ChainComplex {
  std::vector<std::size_t> rank;
  std::vector<SparseColumnMatrix> boundary;
};

// Chains on nondegenerate simplices modulo degenerate ones.
ChainComplex normalized_chains(const FiniteSSet& k);
// Chains on all simplices.
ChainComplex unnormalized_chains(const FiniteSSet& k);
// Counts entries of ∂∂ that are nonzero.
std::size_t boundary_squared_defects(const ChainComplex& c);

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<std::string> torsion;  // invariant factors > 1, decimal
  bool operator==(const AbelianGroup&) const = default;
  bool is_z() const { return rank == 1 && torsion.empty(); }
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
};

// Rank and the invariant factors above 1 (in divisibility order) of the Smith form of an
// integer matrix. Unit pivots are eliminated sparsely first; the remainder goes through a
// dense Smith reduction. Works in 64-bit arithmetic and redoes everything with arbitrary
// precision on overflow.
struct SmithSummary {
  std::size_t rank = 0;
  std::vector<std::string> factors;  // > 1
  bool wide = false;                 // the arbitrary-precision path was used
};
SmithSummary smith(const SparseColumnMatrix& m, bool force_wide = false);

// H_0..H_n; needs the complex through degree n+1 (ErrorCode::Bound otherwise).
std::vector<AbelianGroup> homology(const ChainComplex& c, std::size_t n);
std::vector<AbelianGroup> homology(const FiniteSSet& k, std::size_t n);

// The abelian group Z^gens / (rows of relations).
AbelianGroup cokernel(std::size_t gens, const std::vector<std::vector<std::int64_t>>& relations);

}  // namespace opcat
