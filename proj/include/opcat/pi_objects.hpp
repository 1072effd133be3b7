#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "opcat/category.hpp"
#include "opcat/co.hpp"
#include "opcat/monad.hpp"
#include "opcat/report.hpp"

namespace opcat {

// Objects of pi_category(N) are Π-indexed based sets X(0), …, X(N). An n-tuple is written
// Tuple[y_1..y_n]; the all-basepoint tuple is the basepoint itself.
Value tuple_value(std::vector<Value> ys);
std::vector<Value> tuple_entries(const Value& v, std::size_t n);

// R Y: n ↦ Y^n with Π acting by projection and insertion of basepoints.
Obj pi_power(const Category& pi, const Obj& y);
// The arrow of pi for a Π map; throws ErrorCode::Domain if absent.
std::size_t pi_arrow(const Category& pi, const BasedMap& f);
// A Π-object given by level carriers that are Π-closed subsets of Y^n.
Obj pi_sub_power(const Category& pi, const Obj& y, const std::vector<std::vector<Value>>& levels);

// δ: X(n) -> X(1)^n induced by δ_j(i) = [i = j]; checks "delta_bijective" per level and
// sets info strictly_special and per_level.
Report segal_special(const Category& pi, const Obj& x);

// 𝔻 X (n) = 𝒟(−, n) ⊗_Π X over objects m ≤ N, as a monad on pi_category(N). Elements are
// classes of (m, a ∈ 𝒟(m,n), x ∈ X(m)) named Co[m, a, x] by their least member; the
// class of 𝒟(0, n) × X(0) is the basepoint.
Monad co_monad(std::shared_ptr<const CatOfOperators> d);

// ω: 𝔻RY → RCY with C the operad monad truncated at N, where (RCY)(n) is restricted to
// tuples of total arity ≤ N. Checks it is well defined on classes, bijective at every n,
// and commutes with the Π structure; and that (𝔻RY)(1) has exactly the elements of C Y.
Report check_omega(std::shared_ptr<const CatOfOperators> d, const Obj& y);

}  // namespace opcat
