#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opcat/category.hpp"
#include "opcat/report.hpp"
#include "opcat/value.hpp"

namespace opcat {

struct Functor {
  std::string name;
  CatPtr src, dst;
  std::function<Obj(const Obj&)> apply;
  // F f: F x -> F y given both images. Undefined entries of f stay undefined.
  std::function<Mor(const Obj& x, const Obj& y, const Obj& fx, const Obj& fy, const Mor& f)> fmap;
};

Functor identity_functor(CatPtr c);

// Term-level evaluators for a monad acting levelwise on terms over the letters of each level.
struct TermMonad {
  using Fn = std::function<std::optional<Value>(const Value&)>;
  std::string name;
  bool based = false;
  // Every term over the letters in increasing order, at most cap of them; complete is
  // cleared when the cap cuts the enumeration short. The basepoint letter is ignored.
  std::function<std::vector<Value>(const std::vector<Value>& letters, std::size_t cap, bool& complete)> enumerate;
  std::function<std::optional<Value>(const Value&)> unit;
  std::function<std::optional<Value>(const Value&)> mult;
  std::function<std::optional<Value>(const Fn& f, const Value&)> fmap;
};

using TermMonadPtr = std::shared_ptr<const TermMonad>;

struct Monad {
  std::string name;
  CatPtr cat;
  std::function<Obj(const Obj&)> apply;
  std::function<Mor(const Obj& x, const Obj& y, const Obj& tx, const Obj& ty, const Mor& f)> fmap;
  std::function<Mor(const Obj& x, const Obj& tx)> unit;
  std::function<Mor(const Obj& x, const Obj& tx, const Obj& ttx)> mult;
  TermMonadPtr terms;  // present for levelwise term monads
  bool truncated = false;
};

// Largest carrier a lifted term monad tabulates before raising ErrorCode::Bound.
constexpr std::size_t kTabulateLimit = 200000;

Monad lift(TermMonadPtr t, CatPtr c, std::size_t limit = kTabulateLimit);
Monad identity_monad(CatPtr c);

struct CheckOptions {
  std::size_t tabulate_limit = 20000;  // iterates larger than this are sampled through terms
  std::size_t sample_letters = 10;     // letters drawn from a large iterate, spread by weight
  std::size_t sample_cap = 20000;      // terms enumerated over sampled letters
  std::size_t max_maps = 4000;         // maps per probe pair used for naturality
  bool lightest_letters = false;       // sample the lightest letters instead of a spread
};

// Functoriality, naturality of η and μ, unit and associativity laws on the probes and all
// maps among them. Entries outside a truncation guard count as partial, not as failures.
Report check_monad(const Monad& m, const std::vector<Obj>& probes, const CheckOptions& opt = {});

// A finite set of elements of T T X together with μ and T f evaluated on them.
class SecondIterate {
 public:
  SecondIterate(const Monad& m, const Obj& x, const Obj& tx, const CheckOptions& opt);

  bool full() const { return full_; }
  std::size_t num_levels() const { return elems_.size(); }
  const std::vector<Value>& elems(std::size_t l) const { return elems_[l]; }
  const Obj& ttx() const { return ttx_; }
  // μ_X(s) as an index in T X, or kUndef.
  std::size_t mu(std::size_t l, std::size_t i) const { return mu_[l][i]; }
  // T f on every element, f: T X -> B given (possibly partially, kUndef = unknown);
  // returns indices into T B.
  std::vector<std::vector<std::size_t>> tmap(const Obj& b, const Obj& tb, const Mor& f) const;
  // Sampled mode: the T X indices occurring as letters of elems(l)[i].
  const std::vector<std::size_t>& letters(std::size_t l, std::size_t i) const { return letters_[l][i]; }
  // T f of one sampled element, f given on at least its letters.
  std::size_t tmap_one(std::size_t l, std::size_t i, const Obj& tb, const Mor& f) const;

 private:
  const Monad& m_;
  const Obj& x_;
  const Obj& tx_;
  bool full_ = false;
  Obj ttx_;
  std::vector<std::vector<Value>> elems_;
  std::vector<std::vector<std::size_t>> mu_;
  std::vector<std::vector<std::vector<std::size_t>>> letters_;
};

struct Algebra {
  Obj carrier;
  Obj tx;     // T of the carrier
  Mor theta;  // T X -> X
};

Report check_algebra(const Monad& m, const Algebra& a, const CheckOptions& opt = {});
// The free algebra (T X, μ_X).
Algebra free_algebra(const Monad& m, const Obj& x);

// Every T-algebra structure on x; complete is cleared if laws were checked on a sample of TTX.
std::vector<Algebra> enumerate_algebras(const Monad& m, const Obj& x, std::size_t limit = 100000,
                                        const CheckOptions& opt = {}, bool* complete = nullptr);
// Algebra maps a -> b, optionally with prescribed values fixed[level] = {(src index, dst index)}.
std::vector<Mor> enumerate_algebra_maps(const Monad& m, const Algebra& a, const Algebra& b,
                                        const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& fixed = {},
                                        std::size_t limit = 100000, const CheckOptions& opt = {});
bool is_algebra_map(const Monad& m, const Algebra& a, const Algebra& b, const Mor& f, std::string* why = nullptr);

struct Adjunction {
  std::string name;
  Functor left;   // Σ: T -> S
  Functor right;  // Ω: S -> T
  std::function<Mor(const Obj& x, const Obj& sx, const Obj& osx)> unit;    // X -> ΩΣX
  std::function<Mor(const Obj& z, const Obj& oz, const Obj& soz)> counit;  // ΣΩZ -> Z
};

// Triangle identities, naturality of η and ε, functor laws and hom-set cardinalities.
Report check_adjunction(const Adjunction& a, const std::vector<Obj>& t_probes, const std::vector<Obj>& s_probes,
                        const CheckOptions& opt = {});
// Γ = ΩΣ with μ = ΩεΣ.
Monad monad_of(const Adjunction& a);

// A C-functor (F, β: FC -> F), F: T -> S.
struct CFunctor {
  std::string name;
  Functor functor;
  std::function<Mor(const Obj& x, const Obj& cx, const Obj& fcx, const Obj& fx)> beta;
};

Report check_cfunctor(const CFunctor& f, const Monad& c, const std::vector<Obj>& probes, const CheckOptions& opt = {});
// (C, μ) as a C-functor T -> T.
CFunctor self_cfunctor(const Monad& c);

// Natural action θ̄: CΩ -> Ω for a monad C on T and an adjunction Σ ⊣ Ω.
using Action = std::function<Mor(const Obj& z, const Obj& oz, const Obj& coz)>;

// Ω_C Z = (ΩZ, θ̄_Z).
Algebra omega_c(const Monad& c, const Adjunction& a, const Action& act, const Obj& z);

// Probe universes.
std::vector<Obj> set_probes(std::size_t max_size, bool based);
std::vector<Obj> gset_probes(const Category& c, std::size_t max_size);
std::vector<Obj> presheaf_probes(const Category& c, std::size_t max_size);

}  // namespace opcat
