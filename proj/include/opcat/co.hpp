#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "opcat/finset.hpp"
#include "opcat/group.hpp"
#include "opcat/operad.hpp"
#include "opcat/report.hpp"

namespace opcat {

// (φ, c) with c[j-1] ∈ C(|φ⁻¹(j)|).
struct COMorphism {
  BasedMap phi;
  std::vector<std::size_t> c;

  friend bool operator==(const COMorphism&, const COMorphism&) = default;
  friend auto operator<=>(const COMorphism&, const COMorphism&) = default;
};

std::string to_string(const COMorphism& a);

// Category of operators over F with objects 0..N. Composition uses the operad formula;
// morphism sets are the full coproduct for build_co, or any sub-collection for hand-built ones.
class CatOfOperators {
 public:
  CatOfOperators(OperadPtr op, std::size_t n, std::vector<std::vector<std::vector<COMorphism>>> homs);

  const Operad& operad() const { return *op_; }
  OperadPtr operad_ptr() const { return op_; }
  std::size_t bound() const { return n_; }
  const std::vector<COMorphism>& homs(std::size_t m, std::size_t n) const { return homs_[m][n]; }
  // Position in homs(m,n); throws ErrorCode::Domain when the morphism is absent.
  std::size_t index(std::size_t m, std::size_t n, const COMorphism& a) const;
  bool contains(std::size_t m, std::size_t n, const COMorphism& a) const;
  bool is_full() const { return full_; }

 private:
  OperadPtr op_;
  std::size_t n_;
  std::vector<std::vector<std::vector<COMorphism>>> homs_;
  bool full_ = false;
  friend CatOfOperators build_co(OperadPtr op, std::size_t n);
};

CatOfOperators build_co(OperadPtr op, std::size_t n);

// a∘b; requires b.phi.target() == a.phi.source().
COMorphism compose_co(const Operad& op, const COMorphism& a, const COMorphism& b);
COMorphism co_identity(const Operad& op, std::size_t n);
// ι: Π -> 𝔇(C).
COMorphism co_iota(const Operad& op, const BasedMap& f);
// a ∨ b.
COMorphism co_wedge(const COMorphism& a, const COMorphism& b);
// The shuffle σ_j of the composite (φ,·)∘(ψ,·) at j, as a permutation of |(φψ)⁻¹(j)| letters.
Perm co_shuffle(const BasedMap& phi, const BasedMap& psi, std::size_t j);

// Composition tables: comp(m,n,p)[a * |D(m,n)| + b] = index of a∘b for a ∈ D(n,p), b ∈ D(m,n).
class CompositionTables {
 public:
  explicit CompositionTables(const CatOfOperators& d);
  const std::vector<std::uint32_t>& table(std::size_t m, std::size_t n, std::size_t p) const {
    return t_[(m * (n_ + 1) + n) * (n_ + 1) + p];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> t_;
};

// Associativity, unit, functoriality of ξ and ι, wedge covering.
Report check_co(const CatOfOperators& d);

// 𝔈(𝒟): fibers over φ_n with γ read off through wedges. Throws ErrorCode::Validation
// ("wedge condition fails") when a needed wedge morphism is missing.
Operad extract_operad(const CatOfOperators& d);

// Equivariant category of operators: objects (m, α) for every α: G -> Σ_m.
class EquivariantCO {
 public:
  EquivariantCO(std::shared_ptr<const CatOfOperators> d, GroupPtr g);

  const CatOfOperators& base() const { return *d_; }
  GroupPtr group() const { return g_; }
  const std::vector<HomToSym>& homs(std::size_t m) const { return homs_[m]; }
  // g·a = ι(β(g)) ∘ (g c) ∘ ι(α(g⁻¹)) on D(m^α, n^β).
  COMorphism act(const HomToSym& alpha, const HomToSym& beta, std::size_t g, const COMorphism& a) const;

 private:
  std::shared_ptr<const CatOfOperators> d_;
  GroupPtr g_;
  std::vector<std::vector<HomToSym>> homs_;
};

EquivariantCO prolong_co(std::shared_ptr<const CatOfOperators> d, GroupPtr g);
// Group action laws, g·id = id and equivariance of composition for objects ≤ max_objects.
Report check_equivariant_co(const EquivariantCO& e, std::size_t max_objects);
// For D = 𝔇(N): hom sets equal F(m,n) with the conjugation action of the equivariant module.
Report compare_with_fg(const EquivariantCO& e);
// γ_G and the G-action computed through the category of operators agree with the prolonged G-operad.
Report cross_check_goperad(const EquivariantCO& e, const GOperad& p);

}  // namespace opcat
