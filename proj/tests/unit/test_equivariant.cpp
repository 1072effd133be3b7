#include "doctest.h"

#include <set>

#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"
#include "opcat/finset.hpp"
#include "opcat/perm.hpp"

using namespace opcat;

namespace {

std::vector<GroupPtr> groups() {
  return {make_group(FiniteGroup::cyclic(2)), make_group(FiniteGroup::cyclic(3)),
          make_group(FiniteGroup::symmetric(3))};
}

// Independent predicates over raw tables.
bool oracle_member(Kind k, std::size_t m, std::size_t n, const std::vector<std::size_t>& t) {
  std::vector<std::size_t> fib(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) ++fib[t[i]];
  bool fibres_small = true;
  for (std::size_t j = 1; j <= n; ++j) fibres_small = fibres_small && fib[j] <= 1;
  switch (k) {
    case Kind::F: return true;
    case Kind::Pi: return fibres_small;
    case Kind::Lambda: return fibres_small && fib[0] == 0;
    case Kind::Sigma: return fibres_small && fib[0] == 0 && m == n;
  }
  return false;
}

std::vector<std::vector<std::size_t>> all_tables(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(m + 1, 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = m;
    while (i >= 1 && t[i] == n) t[i--] = 0;
    if (i == 0) break;
    ++t[i];
  }
  return out;
}

}  // namespace

TEST_CASE("based finite sets: enumeration, composition, wedge and smash") {
  CHECK(enumerate_homs(Kind::F, 1, 1).size() == 2);
  CHECK(enumerate_homs(Kind::Sigma, 3, 3).size() == 6);
  CHECK(enumerate_homs(Kind::Pi, 2, 1).size() == 3);
  CHECK(enumerate_homs(Kind::Lambda, 2, 3).size() == 6);
  for (Kind k : {Kind::Sigma, Kind::Lambda, Kind::Pi, Kind::F})
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t n = 0; n <= 4; ++n) {
        auto homs = enumerate_homs(k, m, n);
        std::size_t want = 0;
        for (const auto& t : all_tables(m, n)) want += oracle_member(k, m, n, t);
        CHECK(homs.size() == want);
        for (std::size_t i = 0; i < homs.size(); ++i) {
          CHECK(is_member(k, homs[i]));
          if (i > 0) CHECK(homs[i - 1] < homs[i]);
        }
      }
  CHECK(compose(phi(2), wedge(phi(2), phi(3))) == phi(5));
  CHECK(wedge(BasedMap::identity(2), BasedMap::identity(3)) == BasedMap::identity(5));
  // Closure under composition, m, n, p ≤ 3.
  for (Kind k : {Kind::Sigma, Kind::Lambda, Kind::Pi, Kind::F})
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t p = 0; p <= 3; ++p)
          for (const auto& g : enumerate_homs(k, m, n))
            for (const auto& f : enumerate_homs(k, n, p)) CHECK(is_member(k, compose(f, g)));
  // Wedge and smash: unit, associativity and interchange with composition.
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (const auto& f : enumerate_homs(Kind::F, a, b)) {
        CHECK(wedge(f, BasedMap::identity(0)) == f);
        for (const auto& g : enumerate_homs(Kind::F, b, a)) {
          for (const auto& h : enumerate_homs(Kind::F, 1, 2)) {
            CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));
            CHECK(smash(smash(f, g), h) == smash(f, smash(g, h)));
          }
          CHECK(compose(wedge(g, f), wedge(f, g)) == wedge(compose(g, f), compose(f, g)));
          CHECK(compose(smash(g, f), smash(f, g)) == smash(compose(g, f), compose(f, g)));
        }
      }
  BasedMap s = smash(BasedMap::identity(2), BasedMap::identity(3));
  CHECK(s.source() == 6);
  CHECK(smash_index(2, 1, 3) == 4);
}

TEST_CASE("homomorphisms into symmetric groups and the conjugation action") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  std::size_t gen = 1;
  HomToSym swap = validate_hom(c2, 2, {perm_identity(2), {0, 2, 1}});
  CHECK_THROWS_AS(validate_hom(c2, 3, {perm_identity(3), {0, 2, 3, 1}}), Error);
  CHECK(conjugation_action(BasedMap(2, 2, {0, 2, 1}), gen, swap, swap) == BasedMap(2, 2, {0, 2, 1}));
  CHECK(conjugation_action(BasedMap(2, 2, {0, 1, 1}), gen, swap, swap) == BasedMap(2, 2, {0, 2, 2}));
  for (const auto& g : groups()) {
    // Number of homomorphisms G -> Σ_n by brute force over all image tuples on generators.
    for (std::size_t n = 0; n <= 3; ++n) {
      auto homs = enumerate_homs_to_sym(g, n);
      std::set<std::vector<Perm>> distinct;
      for (const auto& a : homs) {
        distinct.insert(a.images);
        for (std::size_t x = 0; x < g->order(); ++x)
          for (std::size_t y = 0; y < g->order(); ++y)
            CHECK(perm_compose(a(x), a(y)) == a(g->mul(x, y)));
      }
      CHECK(distinct.size() == homs.size());
    }
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n)
        for (const auto& al : enumerate_homs_to_sym(g, m))
          for (const auto& be : enumerate_homs_to_sym(g, n))
            for (const auto& f : enumerate_homs(Kind::F, m, n)) {
              CHECK(conjugation_action(f, g->identity(), al, be) == f);
              for (std::size_t x = 0; x < g->order(); ++x)
                for (std::size_t y = 0; y < g->order(); ++y)
                  CHECK(conjugation_action(f, g->mul(x, y), al, be) ==
                        conjugation_action(conjugation_action(f, y, al, be), x, al, be));
              // Respects composition through a middle object of degree ≤ 2.
              for (const auto& ga : enumerate_homs_to_sym(g, 1))
                for (const auto& h : enumerate_homs(Kind::F, n, 1))
                  for (std::size_t x = 0; x < g->order(); ++x)
                    CHECK(conjugation_action(compose(h, f), x, al, ga) ==
                          compose(conjugation_action(h, x, be, ga), conjugation_action(f, x, al, be)));
            }
  }
}

TEST_CASE("gamma of homomorphisms and the semidirect action") {
  for (const auto& g : groups()) {
    std::vector<HomToSym> small;
    for (std::size_t n = 0; n <= 2; ++n)
      for (auto& a : enumerate_homs_to_sym(g, n)) small.push_back(a);
    std::size_t composables = 0;
    for (std::size_t k = 1; k <= 2; ++k)
      for (const auto& be : enumerate_homs_to_sym(g, k)) {
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
          std::vector<HomToSym> as;
          for (auto i : pick) as.push_back(small[i]);
          if (composable(be, as)) {
            ++composables;
            HomToSym gm = gamma_hom(be, as);
            std::vector<std::size_t> lengths;
            for (const auto& a : as) lengths.push_back(a.degree);
            for (std::size_t x = 0; x < g->order(); ++x) {
              std::vector<Perm> blocks;
              for (const auto& a : as) blocks.push_back(a(x));
              CHECK(gm(x) == perm_compose(perm_block(be(x), lengths), perm_block_sum(blocks)));
              for (std::size_t y = 0; y < g->order(); ++y)
                CHECK(perm_compose(gm(x), gm(y)) == gm(g->mul(x, y)));
            }
          } else {
            CHECK_THROWS_AS(gamma_hom(be, as), Error);
          }
          std::size_t r = 0;
          while (r < k && ++pick[r] == small.size()) pick[r++] = 0;
          if (r == k) break;
        }
      }
    CHECK(composables > 0);
    // (σ, g)(τ, h) = (σ α(g) τ α(g)⁻¹, gh) acts as the composite.
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& al : enumerate_homs_to_sym(g, n))
        for (const auto& s : all_perms(n))
          for (const auto& t : all_perms(n))
            for (std::size_t x = 0; x < g->order(); ++x)
              for (std::size_t y = 0; y < g->order(); ++y) {
                Perm prod = perm_compose(perm_compose(s, perm_compose(al(x), t)), perm_inverse(al(x)));
                for (std::size_t i = 1; i <= n; ++i)
                  CHECK(semidirect_act(s, x, al, semidirect_act(t, y, al, i)) == semidirect_act(prod, g->mul(x, y), al, i));
              }
  }
  auto c2 = make_group(FiniteGroup::cyclic(2));
  HomToSym swap = validate_hom(c2, 2, {perm_identity(2), {0, 2, 1}});
  HomToSym t1 = trivial_hom(c2, 1), s2 = validate_hom(c2, 2, {perm_identity(2), {0, 2, 1}});
  CHECK_FALSE(composable(swap, {trivial_hom(c2, 2), s2}));
  CHECK(composable(swap, {s2, s2}));
  CHECK(composable(trivial_hom(c2, 2), {t1, s2}));
}

TEST_CASE("graph subgroups and twisted fixed points") {
  CHECK(graph_family(FiniteGroup::trivial(), 3).size() == 1);
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto fam = graph_family(*c2, 2);
  CHECK(fam.size() == 3);
  for (const auto& g : groups())
    for (std::size_t n = 0; n <= 3; ++n) {
      auto f = graph_family(*g, n);
      std::set<std::vector<std::pair<std::size_t, Perm>>> els;
      for (const auto& gs : f) {
        CHECK(is_graph_subgroup(*g, n, gs));
        els.insert(gs.elements);
      }
      CHECK(els.size() == f.size());
      // Every subgroup appears with the trivial homomorphism.
      for (const auto& h : g->subgroups()) {
        bool found = false;
        for (const auto& gs : f)
          if (gs.subgroup == h && std::all_of(gs.images.begin(), gs.images.end(), [&](const Perm& p) { return p == perm_identity(n); }))
            found = true;
        CHECK(found);
      }
      // Graph fixed points agree with the twisted action for every based G-set of size ≤ 2.
      for (std::size_t s = 0; s <= 2; ++s)
        for (const auto& xa : enumerate_homs_to_sym(g, s)) {
          BasedGSet x = gset_from_hom(xa);
          for (const auto& al : enumerate_homs_to_sym(g, n)) CHECK(twisted_power_fixed_points(x, al) == graph_fixed_points(x, al));
        }
    }
  // Trivial action with the swap gives the diagonal.
  BasedGSet x = trivial_gset(c2, 2);
  HomToSym swap = validate_hom(c2, 2, {perm_identity(2), {0, 2, 1}});
  auto fp = twisted_power_fixed_points(x, swap);
  CHECK(fp.size() == 3);
  for (const auto& t : fp) CHECK(t[0] == t[1]);
  CHECK(twisted_power_fixed_points(x, trivial_hom(c2, 0)).size() == 1);
  CHECK(twisted_power_fixed_points(x, trivial_hom(c2, 2)).size() == 9);
}

TEST_CASE("orbit category and fixed-point presheaves") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  OrbitCategory oc(c2);
  REQUIRE(oc.num_objects() == 2);
  std::size_t e = 0, top = 1;
  CHECK(oc.homs(e, e).size() == 2);
  CHECK(oc.homs(e, top).size() == 1);
  CHECK(oc.homs(top, e).size() == 0);
  CHECK(oc.homs(top, top).size() == 1);
  std::size_t probes = 0;
  for (const auto& g : groups()) {
    OrbitCategory o(g);
    for (std::size_t s = 0; s <= 3; ++s)
      for (const auto& a : enumerate_homs_to_sym(g, s)) {
        BasedGSet x = gset_from_hom(a);
        OrbitalPresheaf p = fixed_point_presheaf(o, x);
        validate_presheaf(o, p);
        CHECK(strictly_special(o, p).strictly_special);
        BasedGSet lr = evaluate_at_e(o, p);
        CHECK(lr.size == x.size);
        CHECK(lr.act == x.act);
        ++probes;
      }
  }
  CHECK(probes > 10);
  // A presheaf with P(G/G) larger than P(G/e)^G.
  OrbitalPresheaf p = fixed_point_presheaf(oc, trivial_gset(c2, 1));
  p.sizes[top] = 2;
  for (auto& t : p.restrict[e][top]) t.push_back(1);
  p.restrict[top][top][0] = {0, 1, 2};
  p.labels.clear();
  CHECK_FALSE(strictly_special(oc, p).strictly_special);
}
