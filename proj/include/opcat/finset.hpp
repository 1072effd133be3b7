#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace opcat {

// Subcategories Σ ⊂ Λ ⊂ Π ⊂ F of based finite sets.
enum class Kind { Sigma, Lambda, Pi, F };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

// A based map m -> n between the objects {0..m} and {0..n}.
class BasedMap {
 public:
  BasedMap() : table_{0} {}
  BasedMap(std::size_t source, std::size_t target, std::vector<std::size_t> table);

  static BasedMap identity(std::size_t n);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }

  // |φ⁻¹(j)| for positive j.
  std::size_t fiber_size(std::size_t j) const;
  // Preimage of j in increasing order.
  std::vector<std::size_t> fiber(std::size_t j) const;

  friend bool operator==(const BasedMap&, const BasedMap&) = default;
  friend auto operator<=>(const BasedMap&, const BasedMap&) = default;

 private:
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::vector<std::size_t> table_;
};

bool is_member(Kind kind, const BasedMap& f);

std::vector<BasedMap> enumerate_homs(Kind kind, std::size_t m, std::size_t n);

// f∘g; requires g.target() == f.source().
BasedMap compose(const BasedMap& f, const BasedMap& g);

BasedMap wedge(const BasedMap& f, const BasedMap& g);
BasedMap wedge_all(const std::vector<BasedMap>& fs);
BasedMap smash(const BasedMap& f, const BasedMap& g);

// Position of the pair (i,j), i,j positive, in m∧n.
inline std::size_t smash_index(std::size_t i, std::size_t j, std::size_t n) {
  return n * (i - 1) + j;
}

// φ_n: n -> 1 sending every positive element to 1.
BasedMap phi(std::size_t n);

// δ_j: n -> 1 sending j to 1 and everything else to 0.
BasedMap delta(std::size_t n, std::size_t j);

std::string to_string(const BasedMap& f);

}  // namespace opcat
