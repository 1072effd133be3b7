#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opcat/equivariant.hpp"
#include "opcat/group.hpp"
#include "opcat/value.hpp"

namespace opcat {

constexpr std::size_t kUndef = std::numeric_limits<std::size_t>::max();

// An indexing shape: levels with structure maps between them. Objects of the category
// are finite sets at each level together with functions for every arrow.
struct Arrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::string label;
};

struct Shape {
  std::string name;
  std::vector<std::string> level_names;
  std::vector<Arrow> arrows;
  // {a, b, c}: arrow c equals arrow a after arrow b.
  std::vector<std::array<std::size_t, 3>> relations;
  std::vector<std::size_t> identities;
  bool based = false;   // every level has the basepoint, preserved by every map
  bool monoid = false;  // single level carrying a partial product with a unit

  GroupPtr group;                               // G-sets
  std::shared_ptr<const OrbitCategory> orbits;  // presheaves
  std::vector<std::array<std::size_t, 3>> orbit_arrows;  // (h, k, coset) per arrow
  std::vector<BasedMap> pi_maps;                // Π-objects, aligned with arrows
};

struct Obj {
  std::vector<CarrierPtr> levels;
  std::vector<std::vector<std::size_t>> arrows;  // arrows[a][x] indexes the dst level
  // Partial monoid structure: product[x][y] or kUndef, and the unit index.
  std::vector<std::vector<std::size_t>> product;
  std::size_t unit = 0;

  const Carrier& at(std::size_t l) const { return *levels[l]; }
  std::size_t total_size() const;
};

// Per-level index tables; kUndef marks entries outside a truncation guard.
struct Mor {
  std::vector<std::vector<std::size_t>> level;
  bool total() const;
  friend bool operator==(const Mor&, const Mor&) = default;
};

using LevelFn = std::function<std::optional<Value>(std::size_t level, const Value&)>;

class Category;
using CatPtr = std::shared_ptr<const Category>;

class Category {
 public:
  explicit Category(Shape s);

  const Shape& shape() const { return shape_; }
  const std::string& name() const { return shape_.name; }
  std::size_t num_levels() const { return shape_.level_names.size(); }
  bool based() const { return shape_.based; }

  // Builds an object from level carriers and a function computing each arrow; validates.
  Obj make(std::vector<std::vector<Value>> levels,
           const std::function<Value(std::size_t arrow, const Value&)>& arrow_fn) const;
  Obj make_monoid(std::vector<Value> elems,
                  const std::function<std::optional<Value>(const Value&, const Value&)>& mul,
                  const Value& unit) const;
  // Throws ErrorCode::Validation describing the first violated condition.
  void validate(const Obj& x) const;

  // Tabulates f; values outside the target carrier raise ErrorCode::Domain, nullopt gives kUndef.
  Mor tabulate(const Obj& x, const Obj& y, const LevelFn& f) const;
  LevelFn as_fn(const Obj& x, const Obj& y, const Mor& f) const;

  // Total, based, commuting with arrows, preserving defined products.
  bool is_mor(const Obj& x, const Obj& y, const Mor& f, std::string* why = nullptr) const;
  bool is_iso(const Obj& x, const Obj& y, const Mor& f, std::string* why = nullptr) const;
  Mor identity(const Obj& x) const;
  // g∘f with undefined entries propagated.
  Mor compose(const Mor& g, const Mor& f) const;

  // Every morphism x -> y; throws ErrorCode::Bound beyond limit.
  std::vector<Mor> homs(const Obj& x, const Obj& y, std::size_t limit = 1000000) const;
  std::size_t count_homs(const Obj& x, const Obj& y, std::size_t limit = 1000000) const;

  struct Coequalizer {
    Obj object;
    Mor q;
  };
  // Coequalizer of f, g: x -> y by union-find per level closed under the arrows;
  // classes are named by their least element.
  Coequalizer coequalizer(const Obj& x, const Obj& y, const Mor& f, const Mor& g) const;

 private:
  void for_each_hom(const Obj& x, const Obj& y, std::size_t limit,
                    const std::function<void(const Mor&)>& visit) const;
  Shape shape_;
};

CatPtr set_category();
CatPtr pointed_category();
// Finite G-sets; one arrow per group element, acting on the single level.
CatPtr gset_category(GroupPtr g, bool based);
// Based presheaves on the orbit category: levels are subgroups, arrows restrictions.
CatPtr presheaf_category(std::shared_ptr<const OrbitCategory> oc);
// Covariant functors from Π (objects 0..n) to based sets.
CatPtr pi_category(std::size_t n);
CatPtr monoid_category();

// One-level objects.
Obj set_obj(const Category& c, std::vector<Value> elems);
// Based G-set from a BasedGSet (elements Atom(1..size)), or an unbased one on Atom(1..n).
Obj gset_obj(const Category& c, const BasedGSet& x);
Obj gset_obj(const Category& c, const HomToSym& alpha);
Obj presheaf_obj(const Category& c, const OrbitalPresheaf& p);
BasedGSet to_based_gset(const Category& c, const Obj& x);

std::string describe(const Category& c, const Obj& x);

}  // namespace opcat
