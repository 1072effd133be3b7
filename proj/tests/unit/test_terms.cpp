#include "doctest.h"

#include "opcat/monad.hpp"
#include "opcat/terms.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}

Obj s0() { return set_obj(*pointed_category(), atoms(1, true)); }
}  // namespace

TEST_CASE("truncated monads on S0 have k+1 points") {
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(lift(free_monoid_terms(k, true), pointed_category()).apply(s0()).at(0).size() == k + 1);
    CHECK(lift(multiset_terms(k, true), pointed_category()).apply(s0()).at(0).size() == k + 1);
    auto m = std::make_shared<const Operad>(associativity_operad(k));
    CHECK(lift(operad_terms(m, k), pointed_category()).apply(s0()).at(0).size() == k + 1);
    auto n = std::make_shared<const Operad>(commutativity_operad(k));
    CHECK(lift(operad_terms(n, k), pointed_category()).apply(s0()).at(0).size() == k + 1);
  }
}

TEST_CASE("operad terms match the free monoid and multiset counts") {
  // M X = words, N X = multisets on the nonbase letters.
  auto m = std::make_shared<const Operad>(associativity_operad(3));
  auto n = std::make_shared<const Operad>(commutativity_operad(3));
  for (std::size_t x = 0; x <= 3; ++x) {
    Obj X = set_obj(*pointed_category(), atoms(x, true));
    CHECK(lift(operad_terms(m, 3), pointed_category()).apply(X).at(0).size() ==
          lift(free_monoid_terms(3, true), pointed_category()).apply(X).at(0).size());
    CHECK(lift(operad_terms(n, 3), pointed_category()).apply(X).at(0).size() ==
          lift(multiset_terms(3, true), pointed_category()).apply(X).at(0).size());
  }
}

TEST_CASE("operad quotient by union-find agrees with normal forms") {
  for (auto op : {std::make_shared<const Operad>(associativity_operad(3)),
                  std::make_shared<const Operad>(commutativity_operad(3)),
                  std::make_shared<const Operad>(endomorphism_operad(2, 2))}) {
    std::size_t k = op->bound();
    for (std::size_t x = 0; x <= 2; ++x) {
      Report r;
      std::size_t classes = operad_quotient_check(*op, k, atoms(x, true), r);
      CHECK_MESSAGE(r.ok(), failing(r));
      Obj X = set_obj(*pointed_category(), atoms(x, true));
      CHECK(classes == lift(operad_terms(op, k), pointed_category()).apply(X).at(0).size());
    }
  }
}

TEST_CASE("term monads pass the monad suite") {
  auto probes = set_probes(2, true);
  std::vector<TermMonadPtr> ts{identity_terms(true), free_monoid_terms(3, true), multiset_terms(3, true),
                               monoid_with_zero_terms(3),
                               operad_terms(std::make_shared<const Operad>(endomorphism_operad(2, 2)), 2),
                               composite_terms(distributive_pair(3))};
  for (const auto& t : ts) {
    Report r = check_monad(lift(t, pointed_category()), probes);
    CHECK_MESSAGE(r.ok(), (t->name + "\n" + failing(r)));
  }
  Report u = check_monad(lift(free_monoid_terms(3, false), set_category()), set_probes(2, false));
  CHECK_MESSAGE(u.ok(), failing(u));
}
