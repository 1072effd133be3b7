#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opcat/group.hpp"
#include "opcat/perm.hpp"
#include "opcat/report.hpp"

namespace opcat {

// Reduced, arity-truncated operad of finite sets. Elements of C(j) are 0..card(j)-1.
// gamma tables are keyed by the input arities (j_1..j_k) and indexed in mixed radix
// with c ∈ C(k) most significant, then d_1, …, d_k.
class Operad {
 public:
  using GammaTables = std::map<std::vector<std::size_t>, std::vector<std::size_t>>;
  using SigmaTables = std::vector<std::vector<std::vector<std::size_t>>>;  // [j][perm rank][c]

  Operad() = default;
  // Validates shapes; axioms are checked separately by check_operad.
  Operad(std::string name, std::size_t bound, std::vector<std::size_t> card, std::size_t unit,
         SigmaTables sigma, GammaTables gamma);

  const std::string& name() const { return name_; }
  std::size_t bound() const { return bound_; }
  std::size_t card(std::size_t j) const { return card_[j]; }
  const std::vector<std::size_t>& cards() const { return card_; }
  std::size_t unit() const { return unit_; }

  // c·σ for c ∈ C(j).
  std::size_t act(std::size_t j, std::size_t c, const Perm& sigma) const;
  std::size_t act_rank(std::size_t j, std::size_t c, std::size_t rank) const { return sigma_[j][rank][c]; }

  // γ(c; d_1..d_k) with d_r ∈ C(arities[r]). Throws ErrorCode::Bound past the arity bound.
  std::size_t gamma(std::size_t c, const std::vector<std::size_t>& arities,
                    const std::vector<std::size_t>& ds) const;
  bool gamma_defined(const std::vector<std::size_t>& arities) const;

  const SigmaTables& sigma_tables() const { return sigma_; }
  const GammaTables& gamma_tables() const { return gamma_; }

  // Optional left G-action on carriers commuting with Σ: gact[j][g][c].
  GroupPtr group;
  std::vector<std::vector<std::vector<std::size_t>>> gact;
  std::size_t gaction(std::size_t j, std::size_t g, std::size_t c) const {
    return gact.empty() ? c : gact[j][g][c];
  }

  // Optional element names for output.
  std::vector<std::vector<std::string>> names;

  friend bool operator==(const Operad& a, const Operad& b) {
    return a.bound_ == b.bound_ && a.card_ == b.card_ && a.unit_ == b.unit_ && a.sigma_ == b.sigma_ &&
           a.gamma_ == b.gamma_;
  }

 private:
  std::string name_;
  std::size_t bound_ = 0;
  std::vector<std::size_t> card_;
  std::size_t unit_ = 0;
  SigmaTables sigma_;
  GammaTables gamma_;
};

using OperadPtr = std::shared_ptr<const Operad>;

// Every arity tuple (j_1..j_k) with k ≤ bound and j_1+…+j_k ≤ bound.
std::vector<std::vector<std::size_t>> arity_tuples(std::size_t bound);

Report check_operad(const Operad& o);

Operad commutativity_operad(std::size_t bound);   // N: every carrier a point
Operad associativity_operad(std::size_t bound);   // M: M(j) = Σ_j
// Based endomorphism operad of {0..points-1} with basepoint 0: based maps X^j -> X.
Operad endomorphism_operad(std::size_t points, std::size_t bound);

// Permutation underlying an element of M(j).
const Perm& assoc_element(std::size_t j, std::size_t c);

// ---- G-operads obtained by prolongation ----

class GOperad {
 public:
  GOperad(OperadPtr base, GroupPtr group);

  const Operad& base() const { return *base_; }
  OperadPtr base_ptr() const { return base_; }
  GroupPtr group() const { return group_; }
  std::size_t bound() const { return base_->bound(); }
  // All homomorphisms G -> Σ_n; objects of the G-operad are pairs (n, index).
  const std::vector<HomToSym>& homs(std::size_t n) const { return homs_[n]; }
  std::size_t hom_index(const HomToSym& a) const;
  std::size_t card(std::size_t n, std::size_t) const { return base_->card(n); }

  // g acting on C_G(n^α): (g c)·α(g)⁻¹.
  std::size_t act(std::size_t n, std::size_t alpha, std::size_t g, std::size_t c) const;
  std::size_t right(std::size_t n, std::size_t c, const Perm& sigma) const { return base_->act(n, c, sigma); }

  struct Result {
    std::size_t arity;
    std::size_t alpha;  // index into homs(arity)
    std::size_t element;
  };
  // γ_G on a composable tuple; throws ErrorCode::Domain otherwise.
  Result gamma(std::size_t beta, const std::vector<std::size_t>& arities,
               const std::vector<std::size_t>& alphas, std::size_t c,
               const std::vector<std::size_t>& ds) const;

 private:
  OperadPtr base_;
  GroupPtr group_;
  std::vector<std::vector<HomToSym>> homs_;
};

GOperad prolong_operad(OperadPtr c, GroupPtr g);
Operad restrict_goperad(const GOperad& p);
Report check_goperad(const GOperad& p);

// ---- operad pairs ----

// λ: J(k) × C(j_1) × … × C(j_k) -> C(j_1⋯j_k). Tables keyed by (j_1..j_k), indexed
// in mixed radix with g ∈ J(k) most significant.
struct PairAction {
  struct Entry {
    std::size_t target = 0;
    std::vector<std::size_t> table;
  };
  std::map<std::vector<std::size_t>, Entry> entries;
};

// Every tuple (j_1..j_k) with k ≤ J.bound, j_r ≤ C.bound and j_1⋯j_k ≤ C.bound.
std::vector<std::vector<std::size_t>> pair_domain(const Operad& j, const Operad& c);
PairAction pair_action_to_points(const Operad& j, const Operad& c);
// Throws ErrorCode::Domain on missing or mis-targeted entries.
void validate_pair_action(const Operad& j, const Operad& c, const PairAction& lam);
Report check_pair_action(const Operad& j, const Operad& c, const PairAction& lam);

}  // namespace opcat
