#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opcat/monad.hpp"
#include "opcat/operad.hpp"

namespace opcat {

TermMonadPtr identity_terms(bool based);
// Words of length ≤ k. Based: basepoint letters are deleted and the empty word is the basepoint.
TermMonadPtr free_monoid_terms(std::size_t k, bool based);
// Multisets of size ≤ k; based as above (the truncated free commutative monoid).
TermMonadPtr multiset_terms(std::size_t k, bool based);
// Free monoid with zero: the basepoint is an absorbing zero, the empty word a unit.
TermMonadPtr monoid_with_zero_terms(std::size_t k);
// ∐_j C(j) ×_Σj X^j modulo basepoint deletion, normal forms Op(j, x_1..x_j, c) with
// x sorted and c least in its stabilizer orbit; arities ≤ k.
TermMonadPtr operad_terms(OperadPtr op, std::size_t k);

// Normalizes (c ∈ C(j); letters) including basepoint deletion.
Value operad_normal_form(const Operad& op, std::size_t j, std::size_t c, std::vector<Value> letters);

// Classes of ∐_j C(j)×X^j under the generated relation, computed by union-find, compared
// with the normal forms. Returns the number of classes; fills the report.
std::size_t operad_quotient_check(const Operad& op, std::size_t k, const std::vector<Value>& letters, Report& r);

using Interchange = std::function<std::optional<Value>(const Value&)>;

struct MonadPair {
  std::string name;
  TermMonadPtr c;  // outer
  TermMonadPtr j;  // inner
  Interchange rho; // J C -> C J on terms
};

MonadPair trivial_pair_outer(TermMonadPtr j);  // C = identity
MonadPair trivial_pair_inner(TermMonadPtr c);  // J = identity
// Multisets over words with zero, ρ multiplying out products of sums.
MonadPair distributive_pair(std::size_t k);

// C J with μ = μ^C μ^J ∘ C ρ J and η = η^C J ∘ η^J.
TermMonadPtr composite_terms(const MonadPair& p);

}  // namespace opcat
