#pragma once

#include <cstddef>
#include <vector>

namespace opcat {

// A permutation of {1..n} stored as a based table of length n+1 (p[0] = 0).
using Perm = std::vector<std::size_t>;

Perm perm_identity(std::size_t n);
Perm perm_compose(const Perm& a, const Perm& b);  // a∘b
Perm perm_inverse(const Perm& p);
bool is_perm(const Perm& p);
std::size_t perm_degree(const Perm& p);

// All permutations of {1..n} in lexicographic order of their tables.
const std::vector<Perm>& all_perms(std::size_t n);
// Position of p in all_perms(degree).
std::size_t perm_rank(const Perm& p);

// Block sum τ_1 ⊕ … ⊕ τ_k.
Perm perm_block_sum(const std::vector<Perm>& blocks);
// The permutation of j_1+…+j_k letters that moves block r (length lengths[r-1])
// to the slot sigma(r), keeping the order inside each block.
Perm perm_block(const Perm& sigma, const std::vector<std::size_t>& lengths);

std::size_t factorial(std::size_t n);

}  // namespace opcat
