#pragma once

#include <cstddef>
#include <vector>

#include "opcat/category.hpp"
#include "opcat/monad.hpp"
#include "opcat/monadics.hpp"
#include "opcat/report.hpp"

namespace opcat {

// Levels K_0..K_Q in a category, faces face[q][i]: K_q -> K_{q-1} (q ≥ 1, face[0] empty) and
// degeneracies degen[q][i]: K_q -> K_{q+1} (q < Q).
struct SimplicialObject {
  CatPtr cat;
  std::vector<Obj> level;
  std::vector<std::vector<Mor>> face;
  std::vector<std::vector<Mor>> degen;

  std::size_t top() const { return level.size() - 1; }
};

// d_i d_j = d_{j-1} d_i (i < j), d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id,
// d_i s_j = s_j d_{i-1} (i > j+1), s_i s_j = s_{j+1} s_i (i ≤ j), on every level present.
Report check_simplicial(const SimplicialObject& k);

// B(F, C, Y) through level Q: q-simplices F C^q Y, d_0 = β, d_i = F C^{i-1} μ, d_q = F C^{q-1} θ,
// s_i = F C^i η.
SimplicialObject bar(const CFunctor& f, const Monad& c, const Algebra& y, std::size_t q_max);
// C^q applied to the objects of a chain, C^0 X = X.
std::vector<Obj> iterates(const Monad& c, const Obj& x, std::size_t q);
// C^k h for h: a -> b, given the iterates of a and b.
Mor iterate_fmap(const Monad& c, const std::vector<Obj>& ca, const std::vector<Obj>& cb, const Mor& h, std::size_t k);

// For B(C, C, Y): ζ_q = θ∘Cθ∘…∘C^qθ and ν_q = η∘…∘η; ζν = id, ζ a simplicial map to the
// constant object at Y, each ζ_q a C-algebra map, and the extra degeneracy η_{C^{q+1}Y}
// satisfies d_0 s_{-1} = id, d_{i+1} s_{-1} = s_{-1} d_i.
Report check_contraction(const Monad& c, const Algebra& y, std::size_t q_max);

// For B(F, C, C X): the extra degeneracy F C^{q+1} η_X with augmentation β_X to F X;
// d_{q+1} s = id, d_i s = s d_i (i ≤ q), and the collapse κ_q = β∘d_0^q back to F X.
Report check_free_collapse(const CFunctor& f, const Monad& c, const Obj& x, std::size_t q_max);

// Σ_C applied levelwise to B(C, C, Y) against B(Σ, C, Y): ψ_q = the map induced by β on
// Σ_C(C C^q Y) -> Σ C^q Y is an iso commuting with all faces and degeneracies; d_0 of
// B(Σ,C,Y) is checked against Σ_C(μ) explicitly.
Report check_levelwise_sigma(const Monad& c, const Adjunction& a, const Action& act, const Algebra& y,
                             std::size_t q_max);

}  // namespace opcat
