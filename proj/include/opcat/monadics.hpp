#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "opcat/category.hpp"
#include "opcat/monad.hpp"
#include "opcat/report.hpp"
#include "opcat/terms.hpp"

namespace opcat {

// ---- adjunctions ----

// Σ X = G × X (based: G₊ ∧ X) with G acting on the left, Ω the forgetful functor.
Adjunction free_gset_adjunction(GroupPtr g, bool based);
// Σ X = X₊ from sets to pointed sets.
Adjunction free_pointed_adjunction();
// L = evaluation at G/e, R = fixed-point presheaf; LR = Id.
Adjunction presheaf_reflection(std::shared_ptr<const OrbitCategory> oc);
// Σ X = words of length ≤ k with the partial concatenation product; probes on the right
// should be total monoids whose unit is the basepoint.
Adjunction free_partial_monoid_adjunction(std::size_t k);
Adjunction identity_adjunction(CatPtr c);

// Right-hand probes for free_partial_monoid_adjunction: Z/n (n ≤ max_order) and {1, a} with a a = a.
std::vector<Obj> monoid_probes(std::size_t max_order);

// θ̄ = Ωε: ΩΣΩ -> Ω, the action of the adjunction's own monad.
Action adjunction_action(const Adjunction& a);
// θ̄ = id: the identity monad acting on Ω.
Action trivial_action(const Adjunction& a);

// ---- split coequalizers ----

struct SplitDiagram {
  CatPtr cat;
  Obj a, b, c;
  Mor f, g;  // a -> b
  Mor q;     // b -> c
  Mor i;     // c -> b
  Mor j;     // b -> a
};

// qf = qg, qi = id, fj = iq, gj = id, compared where both sides are defined.
Report verify_split_coequalizer(const SplitDiagram& d);
// C C Y ⇉ C Y -> Y with f = Cθ, g = μ, q = θ, i = η_Y, j = η_{CY}.
SplitDiagram canonical_split(const Monad& m, const Algebra& y);

// ---- Σ_C ----

// α_X = θ̄_{ΣX} ∘ Cη_X: CX -> ΩΣX.
Mor alpha_map(const Monad& c, const Adjunction& a, const Action& act, const Obj& x, const Obj& cx);
// Σ as a C-functor with β = εΣ ∘ Σα.
CFunctor adjoint_cfunctor(const Monad& c, const Adjunction& a, const Action& act);

struct Coequalized {
  Obj fy, fcy;  // F Y, F C Y
  Obj object;   // Σ_C Y
  Mor q;        // F Y -> Σ_C Y
};
// Coequalizer of β_Y and Fθ.
Coequalized coequalized_sigma(const CFunctor& f, const Monad& c, const Algebra& y);
// The map on quotients induced by h: src.fy -> dst.fy; throws ErrorCode::Domain if h does
// not respect the identifications.
Mor induced_map(const Category& s, const Coequalized& src, const Coequalized& dst, const Mor& h);
// The map from a quotient to any object induced by h: src.fy -> z.
Mor factor_through(const Category& s, const Coequalized& src, const Obj& z, const Mor& h);

// For every (Y, Z): h ↦ Ω(h q) η is a bijection S(Σ_C Y, Z) -> C-alg(Y, Ω_C Z); and
// Σ_C(C X) ≅ Σ X through β for every free probe C X.
Report sigma_adjunction_check(const Monad& c, const Adjunction& a, const Action& act, const std::vector<Algebra>& ys,
                              const std::vector<Obj>& zs, const std::vector<Obj>& free_probes,
                              const CheckOptions& opt = {});

// ---- Beck ----

// Γ = ΩΣ; for each Γ-algebra on the left probes η_Γ = Ωq∘η must be an iso, and for each
// right probe ε_Γ: Σ_Γ Ω Z -> Z must be an iso. info["monadic"] summarizes.
Report beck_check(const Adjunction& a, const std::vector<Obj>& t_probes, const std::vector<Obj>& s_probes,
                  const CheckOptions& opt = {});

// ---- monad maps, α and β ----

using MonadMap = std::function<Mor(const Obj& x, const Obj& sx, const Obj& tx)>;
// φ∘η = η, φ∘μ = μ∘Tφ∘φS and naturality, on probes (iterates must fit the tabulation limit).
Report check_monad_map(const Monad& s, const Monad& t, const MonadMap& phi, const std::vector<Obj>& probes,
                       const CheckOptions& opt = {});

// θ̄ an action; α a map of monads C -> ΩΣ; α unique among C-algebra maps C X -> Ω_C Σ X
// restricting to η; the pullback action recovers θ̄ and α; β a C-functor; on free algebras
// Ωq∘η composed with Σ_C(CX) ≅ ΣX equals α.
Report alpha_beta_check(const Monad& c, const Adjunction& a, const Action& act, const std::vector<Obj>& t_probes,
                        const std::vector<Obj>& s_probes, const CheckOptions& opt = {});

// ---- monad pairs ----

struct PairOptions {
  std::size_t letters = 8;     // letters sampled from each iterate
  std::size_t cap = 20000;     // terms per sampled iterate
  std::size_t alg_limit = 200000;
  bool algebras = true;
};

// Diagrams of the interchange, composite monad laws, the unit maps being monad maps, the
// identity composite μ ∘ Cη_J CJ ∘ Cη_C J = id, and the
// correspondence between compatible (J, C) algebra pairs and CJ-algebras on the probes.
Report check_monad_pair(const MonadPair& p, CatPtr cat, const std::vector<Obj>& probes, const PairOptions& opt = {});

// ---- conjugate monads ----

// D = R C L with μ = RμL ∘ RCεCL and η = RηL ∘ η, for an adjunction with LR = Id.
Monad conjugate_monad(const Monad& c, const Adjunction& lr);
// L R Z = Z on the nose and ε = id.
Report check_lr_identity(const Adjunction& lr, const std::vector<Obj>& s_probes);
Obj unit_object(const Adjunction& lr, const Obj& p);  // R L P
Mor adjunction_unit(const Adjunction& lr, const Obj& p);

// K₊ ∧ (−) for a finite group K (acting only on the K factor).
TermMonadPtr group_smash_terms(GroupPtr k);

// For D levelwise K₊∧(−) on presheaves and C = K₊∧(−) on G-sets: ω: DR = RC, ι = ωL∘Dη.
MonadMap iota_map(const Adjunction& lr, const Monad& d, const Monad& rcl);

// η: P -> RLP is an iso.
bool is_strictly_special(const Adjunction& lr, const Obj& p, std::string* why = nullptr);

// RCL laws, ι a monad map, R of C-algebras are RCL-algebras, D and RCL preserve strict
// specialness on the strictly special probes.
Report conjugate_check(const Monad& c, const Monad& d, const Adjunction& lr, const std::vector<Obj>& t_probes,
                       const std::vector<Obj>& s_probes, const CheckOptions& opt = {});

}  // namespace opcat
