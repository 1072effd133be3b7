#include "doctest.h"

#include "opcat/error.hpp"
#include "opcat/monadics.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}

std::vector<GroupPtr> groups() {
  return {make_group(FiniteGroup::cyclic(2)), make_group(FiniteGroup::cyclic(3)),
          make_group(FiniteGroup::symmetric(3))};
}
}  // namespace

TEST_CASE("free G-set adjunction is monadic") {
  for (const auto& g : groups())
    for (bool based : {false, true}) {
      Adjunction a = free_gset_adjunction(g, based);
      auto tp = set_probes(g->order() == 6 ? 2 : 3, based);
      auto sp = gset_probes(*a.left.dst, 2);
      Report adj = check_adjunction(a, tp, sp);
      CHECK_MESSAGE(adj.ok(), (a.name + "\n" + failing(adj)));
      Report r = beck_check(a, tp, sp);
      CHECK_MESSAGE(r.ok(), (a.name + "\n" + failing(r)));
      CHECK(r.info()["monadic"] == true);
    }
}

TEST_CASE("G x - algebras on n points are the homomorphisms G -> S_n") {
  auto g = make_group(FiniteGroup::cyclic(3));
  Monad m = monad_of(free_gset_adjunction(g, false));
  for (std::size_t n = 0; n <= 3; ++n) {
    Obj x = set_obj(*set_category(), atoms(n, false));
    CHECK(enumerate_algebras(m, x).size() == enumerate_homs_to_sym(g, n).size());
  }
}

TEST_CASE("canonical split coequalizers verify and perturbations are rejected") {
  auto g = make_group(FiniteGroup::cyclic(2));
  Monad m = monad_of(free_gset_adjunction(g, true));
  std::size_t probes = 0, rejected = 0, perturbed = 0;
  for (const Obj& x : set_probes(2, true))
    for (const Algebra& y : enumerate_algebras(m, x)) {
      SplitDiagram d = canonical_split(m, y);
      Report r = verify_split_coequalizer(d);
      CHECK_MESSAGE(r.ok(), failing(r));
      ++probes;
      // Redirect one entry of each map in turn.
      for (Mor SplitDiagram::*field : {&SplitDiagram::f, &SplitDiagram::g, &SplitDiagram::q, &SplitDiagram::i,
                                       &SplitDiagram::j}) {
        SplitDiagram e = d;
        Mor& h = e.*field;
        const Obj& dst = field == &SplitDiagram::q ? d.c : field == &SplitDiagram::i ? d.b
                         : field == &SplitDiagram::j ? d.a : d.b;
        if (dst.at(0).size() < 2 || h.level[0].empty()) continue;
        h.level[0][0] = (h.level[0][0] + 1) % dst.at(0).size();
        ++perturbed;
        if (!verify_split_coequalizer(e).ok()) ++rejected;
      }
    }
  CHECK(probes > 0);
  CHECK(perturbed > 0);
  CHECK(rejected == perturbed);
}

TEST_CASE("Sigma_C is left adjoint to Omega_C") {
  struct Case {
    Monad c;
    Adjunction a;
    Action act;
    std::vector<Obj> t, s;
  };
  std::vector<Case> cases;
  {
    Adjunction a = free_gset_adjunction(make_group(FiniteGroup::cyclic(2)), true);
    cases.push_back({monad_of(a), a, adjunction_action(a), set_probes(2, true), gset_probes(*a.left.dst, 2)});
    cases.push_back({identity_monad(a.left.src), a, trivial_action(a), set_probes(2, true),
                     gset_probes(*a.left.dst, 2)});
  }
  {
    Adjunction a = free_pointed_adjunction();
    cases.push_back({monad_of(a), a, adjunction_action(a), set_probes(3, false), set_probes(2, true)});
  }
  std::size_t instances = 0;
  for (const auto& k : cases) {
    std::vector<Algebra> ys;
    for (const Obj& x : k.t)
      for (Algebra& y : enumerate_algebras(k.c, x)) ys.push_back(std::move(y));
    Report r = sigma_adjunction_check(k.c, k.a, k.act, ys, k.s, k.t);
    CHECK_MESSAGE(r.ok(), (k.c.name + " / " + k.a.name + "\n" + failing(r)));
    instances += r.info()["instances"].get<std::size_t>();
  }
  CHECK(instances >= 5);
}

TEST_CASE("alpha is the identity for the adjunction's own monad and eta for the identity monad") {
  Adjunction a = free_gset_adjunction(make_group(FiniteGroup::cyclic(2)), true);
  auto tp = set_probes(2, true);
  auto sp = gset_probes(*a.left.dst, 2);
  Monad g = monad_of(a);
  Report r1 = alpha_beta_check(g, a, adjunction_action(a), tp, sp);
  CHECK_MESSAGE(r1.ok(), failing(r1));
  for (const Obj& x : tp) {
    Obj gx = g.apply(x);
    CHECK(alpha_map(g, a, adjunction_action(a), x, gx) == a.left.src->identity(gx));
  }
  Monad id = identity_monad(a.left.src);
  Report r2 = alpha_beta_check(id, a, trivial_action(a), tp, sp);
  CHECK_MESSAGE(r2.ok(), failing(r2));
  for (const Obj& x : tp) {
    Obj sx = a.left.apply(x);
    CHECK(alpha_map(id, a, trivial_action(a), x, x) == a.unit(x, sx, a.right.apply(sx)));
  }
  Adjunction p = free_pointed_adjunction();
  Report r3 = alpha_beta_check(monad_of(p), p, adjunction_action(p), set_probes(2, false), set_probes(2, true));
  CHECK_MESSAGE(r3.ok(), failing(r3));
}

TEST_CASE("monad pairs") {
  auto cat = pointed_category();
  auto probes = set_probes(1, true);
  for (const auto& p : {trivial_pair_outer(multiset_terms(3, true)), trivial_pair_inner(free_monoid_terms(3, true)),
                        distributive_pair(3)}) {
    Report r = check_monad_pair(p, cat, probes);
    CHECK_MESSAGE(r.ok(), (p.name + "\n" + failing(r)));
  }
}

TEST_CASE("conjugate monad on fixed-point presheaves") {
  auto g = make_group(FiniteGroup::cyclic(2));
  auto oc = std::make_shared<const OrbitCategory>(g);
  Adjunction lr = presheaf_reflection(oc);
  auto sp = gset_probes(*lr.left.dst, 2);
  auto tp = presheaf_probes(*lr.left.src, 2);
  auto k = group_smash_terms(make_group(FiniteGroup::cyclic(2)));
  Monad c = lift(k, lr.left.dst);
  Monad d = lift(k, lr.left.src);
  Report r = conjugate_check(c, d, lr, tp, sp);
  CHECK_MESSAGE(r.ok(), failing(r));
  CHECK(r.info()["strictly_special_probes"].get<std::size_t>() > 0);
  for (const Obj& z : sp) CHECK(is_strictly_special(lr, lr.right.apply(z)));
}

TEST_CASE("partial monoid adjunction") {
  Adjunction a = free_partial_monoid_adjunction(3);
  Report r = check_adjunction(a, set_probes(1, true), monoid_probes(3));
  CHECK_MESSAGE(r.ok(), failing(r));
  // L R L X on two letters has 1 + 14 + 14^2 + 14^3 words, over the monoid size cap.
  CHECK_THROWS_AS(check_adjunction(a, set_probes(2, true), monoid_probes(3)), Error);
  // Z/n has n carriers; {1, a} with a a = a is idempotent.
  CHECK(monoid_probes(3).size() == 4);
}

TEST_CASE("alpha for the truncated free monoid into partial monoids") {
  Adjunction p = free_partial_monoid_adjunction(3);
  Monad m = lift(free_monoid_terms(3, true), p.left.src);
  Report r = alpha_beta_check(m, p, adjunction_action(p), set_probes(1, true), monoid_probes(3));
  CHECK_MESSAGE(r.ok(), failing(r));
  CHECK(r.check("alpha_monad_map.mult").cases > 0);
}

TEST_CASE("more monadic adjunctions") {
  Adjunction pt = free_pointed_adjunction();
  Report r1 = beck_check(pt, set_probes(3, false), set_probes(3, true));
  CHECK_MESSAGE(r1.ok(), failing(r1));
  auto oc = std::make_shared<const OrbitCategory>(make_group(FiniteGroup::cyclic(2)));
  Adjunction lr = presheaf_reflection(oc);
  Report a = check_adjunction(lr, presheaf_probes(*lr.left.src, 2), gset_probes(*lr.left.dst, 2));
  CHECK_MESSAGE(a.ok(), failing(a));
  Report r2 = beck_check(lr, presheaf_probes(*lr.left.src, 2), gset_probes(*lr.left.dst, 2));
  CHECK_MESSAGE(r2.ok(), failing(r2));
}

TEST_CASE("Sigma = C on free algebras is C X") {
  // C = C2 x - is total, so the coequalizer of β = μ and Cμ exists on the nose.
  auto cat = set_category();
  Monad m = monad_of(free_gset_adjunction(make_group(FiniteGroup::cyclic(2)), false));
  CFunctor self = self_cfunctor(m);
  for (const Obj& x : set_probes(3, false)) {
    Algebra free = free_algebra(m, x);
    Coequalized q = coequalized_sigma(self, m, free);
    CHECK(q.object.at(0).size() == free.carrier.at(0).size());
    Mor psi = factor_through(*cat, q, free.carrier, m.mult(x, free.carrier, q.fy));
    CHECK(cat->is_iso(q.object, free.carrier, psi));
  }
}

TEST_CASE("conjugate of the identity adjunction is the monad itself") {
  auto cat = pointed_category();
  Monad c = lift(free_monoid_terms(2, true), cat);
  Adjunction id = identity_adjunction(cat);
  Monad rcl = conjugate_monad(c, id);
  for (const Obj& x : set_probes(2, true)) CHECK(rcl.apply(x).at(0).elems() == c.apply(x).at(0).elems());
  Report r = conjugate_check(c, c, id, set_probes(2, true), set_probes(2, true));
  CHECK_MESSAGE(r.ok(), failing(r));
}

TEST_CASE("Gamma = C2 x - and its algebras pass the law suites") {
  for (const auto& g : groups()) {
    Adjunction a = free_gset_adjunction(g, false);
    Monad m = monad_of(a);
    auto probes = set_probes(3, false);
    Report r = check_monad(m, probes);
    CHECK_MESSAGE(r.ok(), failing(r));
    for (const Obj& x : probes)
      for (const Algebra& y : enumerate_algebras(m, x)) CHECK(check_algebra(m, y).ok());
    Report cf = check_cfunctor(adjoint_cfunctor(m, a, adjunction_action(a)), m, probes);
    CHECK_MESSAGE(cf.ok(), failing(cf));
  }
}
