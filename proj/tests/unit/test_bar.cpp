#include "doctest.h"

#include "opcat/simplicial.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}

std::size_t total_cases(const Report& r) {
  std::size_t n = 0;
  for (const auto& c : r.checks()) n += c.cases;
  return n;
}
}  // namespace

TEST_CASE("bar construction for the identity monad is constant") {
  auto cat = pointed_category();
  Monad id = identity_monad(cat);
  for (const Obj& x : set_probes(3, true)) {
    Algebra y = free_algebra(id, x);
    SimplicialObject b = bar(self_cfunctor(id), id, y, 4);
    REQUIRE(b.top() == 4);
    for (std::size_t q = 0; q <= 4; ++q) {
      CHECK(b.level[q].total_size() == x.total_size());
      for (const Mor& d : b.face[q]) CHECK(d == cat->identity(x));
      for (const Mor& s : b.degen[q]) CHECK(s == cat->identity(x));
    }
    Report r = check_contraction(id, y, 4);
    CHECK_MESSAGE(r.ok(), failing(r));
  }
}

TEST_CASE("B(C, C, Y) has q-simplices C^{q+1} Y and satisfies the identities") {
  auto g = make_group(FiniteGroup::cyclic(2));
  Monad m = monad_of(free_gset_adjunction(g, false));
  std::size_t algebras = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    Obj x = set_obj(*set_category(), atoms(n, false));
    for (const Algebra& y : enumerate_algebras(m, x)) {
      ++algebras;
      SimplicialObject b = bar(self_cfunctor(m), m, y, 4);
      std::vector<Obj> it = iterates(m, x, 5);
      for (std::size_t q = 0; q <= 4; ++q) CHECK(b.level[q].total_size() == it[q + 1].total_size());
      CHECK(b.level[4].total_size() == 32 * n);
      Report r = check_simplicial(b);
      CHECK_MESSAGE(r.ok(), failing(r));
      CHECK(total_cases(r) > 0);
      Report z = check_contraction(m, y, 4);
      CHECK_MESSAGE(z.ok(), failing(z));
    }
  }
  CHECK(algebras == 3);  // trivial on 1 point, trivial and swap on 2
}

TEST_CASE("simplicial check rejects a broken face") {
  auto g = make_group(FiniteGroup::cyclic(2));
  Monad m = monad_of(free_gset_adjunction(g, false));
  Obj x = set_obj(*set_category(), atoms(2, false));
  Algebra y = enumerate_algebras(m, x).back();
  SimplicialObject b = bar(self_cfunctor(m), m, y, 3);
  auto& row = b.face[2][1].level[0];
  std::swap(row[0], row[1]);
  CHECK_FALSE(check_simplicial(b).ok());
}

TEST_CASE("bar on free algebras collapses to F X") {
  for (bool based : {false, true}) {
    auto g = make_group(FiniteGroup::cyclic(2));
    Adjunction a = free_gset_adjunction(g, based);
    Monad m = monad_of(a);
    CFunctor sigma = adjoint_cfunctor(m, a, adjunction_action(a));
    for (const Obj& x : set_probes(2, based)) {
      Report r = check_free_collapse(sigma, m, x, 3);
      CHECK_MESSAGE(r.ok(), failing(r));
      Report s = check_free_collapse(self_cfunctor(m), m, x, 3);
      CHECK_MESSAGE(s.ok(), failing(s));
    }
  }
}

TEST_CASE("Sigma_C of B(C, C, Y) is B(Sigma, C, Y) levelwise") {
  for (bool based : {false, true}) {
    auto g = make_group(FiniteGroup::cyclic(2));
    Adjunction a = free_gset_adjunction(g, based);
    Monad m = monad_of(a);
    std::size_t seen = 0;
    for (const Obj& x : set_probes(2, based))
      for (const Algebra& y : enumerate_algebras(m, x)) {
        Report r = check_levelwise_sigma(m, a, adjunction_action(a), y, 3);
        CHECK_MESSAGE(r.ok(), failing(r));
        CHECK(r.find("d0_is_beta")->cases > 0);
        CHECK(r.find("degeneracies_commute")->cases > 0);
        ++seen;
      }
    CHECK(seen >= 3);
  }
  Adjunction p = free_pointed_adjunction();
  Monad m = monad_of(p);
  for (const Obj& x : set_probes(2, false))
    for (const Algebra& y : enumerate_algebras(m, x)) {
      Report r = check_levelwise_sigma(m, p, adjunction_action(p), y, 3);
      CHECK_MESSAGE(r.ok(), failing(r));
    }
}
