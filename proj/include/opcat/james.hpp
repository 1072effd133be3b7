#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opcat/homology.hpp"
#include "opcat/monad.hpp"

namespace opcat {

// F_k J X for a based simplicial set X (over pointed_category): q-simplices are words of
// length ≤ k in the nonbasepoint q-simplices, faces and degeneracies letterwise with
// basepoint letters deleted. Throws ErrorCode::Bound if a level exceeds the tabulation limit.
SimplicialObject james_filtration(const SimplicialObject& x, std::size_t k);
// The inclusion X = F_1 J X as letters; checks it is a levelwise bijection commuting with
// faces and degeneracies.
Report check_first_stage(const SimplicialObject& x);

// F_k / F_{k-1}: words of length exactly k plus the basepoint.
FiniteSSet filtration_quotient(const SimplicialObject& fk, std::size_t k);
// X^{∧k}: k-tuples of nonbasepoint simplices plus the basepoint.
FiniteSSet smash_power(const SimplicialObject& x, std::size_t k);

// Ranks of the tensor algebra on reduced homology, from the unreduced H_0..H_n of X.
std::vector<std::size_t> tensor_algebra_ranks(const std::vector<AbelianGroup>& hx, std::size_t n);

struct JamesHomology {
  std::size_t degree = 0;
  std::vector<AbelianGroup> base;  // H_q(X)
  std::size_t stage = 0;           // the reported stage F_{n+1}
  std::vector<AbelianGroup> homology;
  std::vector<AbelianGroup> previous;  // H_q(F_n), empty if n = 0
  std::vector<bool> agrees;            // H_q(F_n) = H_q(F_{n+1})
  std::vector<std::size_t> tensor;
  bool tensor_algebra_match = false;
  std::vector<std::size_t> level_sizes;  // simplices of F_{n+1} per level
};

// H_q(F_{n+1} J X) for q ≤ n with F_n for comparison; refuses X with H_0 ≠ Z
// (ErrorCode::Domain).
JamesHomology james_homology(const SimplicialObject& x, std::size_t n);

// A commutative monoid by generators and relations lhs = rhs, each an exponent vector.
struct MonoidPresentation {
  std::size_t generators = 0;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> relations;
  bool commutative = true;
};

struct GroupCompletion {
  AbelianGroup group;
  // Coordinates of each generator's image: one entry per cyclic factor Z/d (listed first,
  // reduced mod d) then per free Z summand.
  std::vector<std::vector<std::string>> images;
};

// Throws ErrorCode::Domain for non-commutative input.
GroupCompletion grothendieck(const MonoidPresentation& m);
// A finite (partial) monoid given by its table, kUndef for undefined products, with unit u.
MonoidPresentation table_presentation(const std::vector<std::vector<std::size_t>>& table, std::size_t unit);

// π_0 as the coequalizer of d_0, d_1 on level 0; class of each vertex.
std::vector<std::size_t> pi0_classes(const FiniteSSet& k, std::size_t* count = nullptr);

// π_0 of F_k J S^0 with the partial product of words: element j is the class of a^j.
struct Pi0Monoid {
  std::size_t k = 0;
  std::size_t classes = 0;
  std::vector<std::vector<std::size_t>> table;  // kUndef beyond length k
  bool is_truncated_naturals = false;
  GroupCompletion completion;
};
Pi0Monoid pi0_james_s0(std::size_t k);

}  // namespace opcat
