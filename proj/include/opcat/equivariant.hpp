#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opcat/finset.hpp"
#include "opcat/group.hpp"

namespace opcat {

// i ↦ β(g) f α(g⁻¹)(i)
BasedMap conjugation_action(const BasedMap& f, std::size_t g, const HomToSym& alpha,
                            const HomToSym& beta);

bool composable(const HomToSym& beta, const std::vector<HomToSym>& alphas);
HomToSym gamma_hom(const HomToSym& beta, const std::vector<HomToSym>& alphas);

// (σ,g)(i) = σ(α(g)(i)) on n^α.
std::size_t semidirect_act(const Perm& sigma, std::size_t g, const HomToSym& alpha, std::size_t i);

struct GraphSubgroup {
  std::vector<std::size_t> subgroup;               // H as sorted elements of G
  std::vector<Perm> images;                        // α(h), aligned with subgroup
  std::vector<std::pair<std::size_t, Perm>> elements;  // {(h, α(h))}, sorted
};

std::vector<GraphSubgroup> graph_family(const FiniteGroup& g, std::size_t n);
bool is_graph_subgroup(const FiniteGroup& g, std::size_t n, const GraphSubgroup& gs);

// A finite based G-set on {0..size}, basepoint 0 fixed.
struct BasedGSet {
  GroupPtr group;
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> act;  // act[g][x]

  std::size_t operator()(std::size_t g, std::size_t x) const { return act[g][x]; }
  std::vector<std::size_t> fixed_points(const std::vector<std::size_t>& subgroup) const;
};

BasedGSet validate_gset(GroupPtr g, std::size_t size, std::vector<std::vector<std::size_t>> act);
BasedGSet gset_from_hom(const HomToSym& alpha);
BasedGSet trivial_gset(GroupPtr g, std::size_t size);

// Fixed points of X^n under g(x_1..x_n) = (g x_{α(g⁻¹)(1)}, …, g x_{α(g⁻¹)(n)}),
// as sorted tuples; the all-basepoint tuple comes first.
std::vector<std::vector<std::size_t>> twisted_power_fixed_points(const BasedGSet& x,
                                                                 const HomToSym& alpha);
// The same set computed as (X^n)^{Γ_α} from the graph subgroup elements.
std::vector<std::vector<std::size_t>> graph_fixed_points(const BasedGSet& x, const HomToSym& alpha);

// Objects are the subgroups H (as G/H); a morphism G/H -> G/K is a coset gK fixed by H.
class OrbitCategory {
 public:
  explicit OrbitCategory(GroupPtr g);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  std::size_t num_objects() const { return subgroups_.size(); }
  const std::vector<std::size_t>& subgroup(std::size_t h) const { return subgroups_[h]; }
  std::size_t trivial_object() const { return 0; }

  const std::vector<std::vector<std::size_t>>& cosets(std::size_t k) const { return cosets_[k]; }
  std::size_t coset_of(std::size_t k, std::size_t g) const { return coset_of_[k][g]; }
  std::size_t rep(std::size_t k, std::size_t c) const { return cosets_[k][c][0]; }

  // Coset indices in G/K fixed by H, increasing.
  const std::vector<std::size_t>& homs(std::size_t h, std::size_t k) const { return homs_[h][k]; }
  // f': K->L after f: H->K, both given as coset indices.
  std::size_t compose(std::size_t h, std::size_t k, std::size_t l, std::size_t f_prime,
                      std::size_t f) const;
  std::size_t identity(std::size_t h) const { return coset_of_[h][group_->identity()]; }
  // The projection G/e -> G/H.
  std::size_t projection(std::size_t h) const { return coset_of_[h][group_->identity()]; }

 private:
  GroupPtr group_;
  std::vector<std::vector<std::size_t>> subgroups_;
  std::vector<std::vector<std::vector<std::size_t>>> cosets_;
  std::vector<std::vector<std::size_t>> coset_of_;
  std::vector<std::vector<std::vector<std::size_t>>> homs_;
};

// Contravariant functor from the orbit category to finite based sets.
struct OrbitalPresheaf {
  std::vector<std::size_t> sizes;  // P(G/H) = {0..sizes[h]}
  // restrict[h][k][i]: P(f) for the i-th morphism in homs(h,k), a table P(G/K) -> P(G/H).
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> restrict;
  // Optional: the element of an ambient G-set named by each index (fixed-point presheaves).
  std::vector<std::vector<std::size_t>> labels;
};

void validate_presheaf(const OrbitCategory& oc, const OrbitalPresheaf& p);
OrbitalPresheaf fixed_point_presheaf(const OrbitCategory& oc, const BasedGSet& x);
// L: evaluation at G/e with the induced G-action.
BasedGSet evaluate_at_e(const OrbitCategory& oc, const OrbitalPresheaf& p);

struct SpecialReport {
  bool strictly_special = true;
  std::vector<std::string> failures;
};
SpecialReport strictly_special(const OrbitCategory& oc, const OrbitalPresheaf& p);

}  // namespace opcat
