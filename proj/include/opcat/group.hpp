#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "opcat/perm.hpp"

namespace opcat {

class FiniteGroup {
 public:
  // Validates associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> mult, std::string name = "");
  // Closure of the generators in Σ_n; element 0 is the identity.
  static FiniteGroup from_perm_gens(const std::vector<Perm>& gens, std::string name = "");
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return mult_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mult_; }
  const std::string& name() const { return name_; }

  // Every subgroup as a sorted element list; ordered by size, then lexicographically.
  const std::vector<std::vector<std::size_t>>& subgroups() const { return subgroups_; }
  std::vector<std::size_t> closure(const std::vector<std::size_t>& elems) const;
  std::vector<std::size_t> generators(const std::vector<std::size_t>& subgroup) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mult_ == b.mult_; }

 private:
  void finish();

  std::string name_;
  std::vector<std::vector<std::size_t>> mult_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> subgroups_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// α: G -> Σ_n, one permutation per group element.
struct HomToSym {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<Perm> images;

  const Perm& operator()(std::size_t g) const { return images[g]; }
  bool is_trivial() const;
  friend bool operator==(const HomToSym& a, const HomToSym& b) {
    return a.degree == b.degree && a.images == b.images;
  }
};

HomToSym validate_hom(GroupPtr g, std::size_t n, std::vector<Perm> images);
HomToSym trivial_hom(GroupPtr g, std::size_t n);

// All homomorphisms from the subgroup `elems` (sorted element list) into Σ_n,
// returned as image lists aligned with elems.
std::vector<std::vector<Perm>> homs_on_subgroup(const FiniteGroup& g,
                                                const std::vector<std::size_t>& elems,
                                                std::size_t n);
std::vector<HomToSym> enumerate_homs_to_sym(GroupPtr g, std::size_t n);

}  // namespace opcat
