#include "doctest.h"

#include <chrono>
#include <numeric>

#include "opcat/error.hpp"
#include "opcat/james.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}

SimplicialObject constant_s0(std::size_t q_max) {
  auto cat = pointed_category();
  Obj s0 = set_obj(*cat, atoms(1, true));
  SimplicialObject x;
  x.cat = cat;
  x.level.assign(q_max + 1, s0);
  x.face.resize(q_max + 1);
  x.degen.resize(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q) {
    if (q > 0) x.face[q].assign(q + 1, cat->identity(s0));
    if (q < q_max) x.degen[q].assign(q + 1, cat->identity(s0));
  }
  return x;
}

// Order of g in Z^n / relations, by brute force over multiples: the least m with m·g in the
// Z-span, tested by comparing cokernels.
std::size_t order_in(std::size_t gens, std::vector<std::vector<std::int64_t>> rel, std::vector<std::int64_t> g) {
  AbelianGroup base = cokernel(gens, rel);
  for (std::size_t m = 1; m <= 64; ++m) {
    auto r = rel;
    std::vector<std::int64_t> mg = g;
    for (auto& v : mg) v *= static_cast<std::int64_t>(m);
    r.push_back(mg);
    AbelianGroup q = cokernel(gens, r);
    // m·g = 0 iff adding it as a relation leaves the group unchanged.
    if (q == base) return m;
  }
  return 0;
}
}  // namespace

TEST_CASE("James filtration: first stage, S^0 and level counts") {
  for (std::size_t n = 1; n <= 2; ++n) {
    SimplicialObject x = sphere_model(n, 3);
    Report r = check_first_stage(x);
    CHECK_MESSAGE(r.ok(), failing(r));
    for (std::size_t k = 1; k <= 3; ++k) {
      SimplicialObject f = james_filtration(x, k);
      Report s = check_simplicial(f);
      CHECK_MESSAGE(s.ok(), failing(s));
    }
  }
  SimplicialObject s0 = constant_s0(3);
  for (std::size_t k = 1; k <= 4; ++k) {
    SimplicialObject f = james_filtration(s0, k);
    for (const Obj& l : f.level) CHECK(l.at(0).size() == k + 1);
  }
  SimplicialObject f2 = james_filtration(sphere_model(1, 2), 2);
  CHECK(f2.level[2].at(0).size() == 7);
  // F_{k-1} sits inside F_k levelwise.
  SimplicialObject f3 = james_filtration(sphere_model(1, 2), 3);
  for (std::size_t q = 0; q <= 2; ++q)
    for (const Value& w : f2.level[q].at(0).elems()) CHECK(f3.level[q].at(0).contains(w));
}

TEST_CASE("tensor algebra ranks") {
  std::vector<AbelianGroup> s1{{1, {}}, {1, {}}, {0, {}}, {0, {}}, {0, {}}};
  CHECK(tensor_algebra_ranks(s1, 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  std::vector<AbelianGroup> s2{{1, {}}, {0, {}}, {1, {}}, {0, {}}, {0, {}}};
  CHECK(tensor_algebra_ranks(s2, 4) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  std::vector<AbelianGroup> w{{1, {}}, {2, {}}, {0, {}}, {0, {}}};
  CHECK(tensor_algebra_ranks(w, 3) == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("homology of F_5 J S^1 and F_5 J S^2") {
  auto t0 = std::chrono::steady_clock::now();
  JamesHomology s1 = james_homology(sphere_model(1, 6), 4);
  CHECK(s1.stage == 5);
  for (std::size_t q = 0; q <= 4; ++q) CHECK(s1.homology[q].is_z());
  CHECK(s1.tensor_algebra_match);
  JamesHomology s2 = james_homology(sphere_model(2, 5), 4);
  for (std::size_t q = 0; q <= 4; ++q) CHECK(s2.homology[q].rank == (q % 2 == 0 ? 1u : 0u));
  for (std::size_t q = 0; q <= 4; ++q) CHECK(s2.homology[q].torsion.empty());
  CHECK(s2.tensor_algebra_match);
  CHECK(s2.level_sizes[5] == 111111);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("James S^1 + S^2 homology: " << secs << " s");
  CHECK(secs < 300);
}

TEST_CASE("James homology of a point and of a disconnected X") {
  CHECK_THROWS_AS(james_homology(constant_s0(3), 2), Error);
  // Δ^n/∂ with the top cell removed is the point model in this encoding.
  auto cat = pointed_category();
  Obj pt = set_obj(*cat, {Value::base()});
  SimplicialObject x;
  x.cat = cat;
  x.level.assign(4, pt);
  x.face.resize(4);
  x.degen.resize(4);
  for (std::size_t q = 0; q < 4; ++q) {
    if (q > 0) x.face[q].assign(q + 1, cat->identity(pt));
    if (q < 3) x.degen[q].assign(q + 1, cat->identity(pt));
  }
  JamesHomology h = james_homology(x, 2);
  for (std::size_t q = 0; q <= 2; ++q) CHECK(h.homology[q].rank == (q == 0 ? 1u : 0u));
  CHECK(h.tensor_algebra_match);
}

TEST_CASE("filtration quotients match smash powers of S^1") {
  SimplicialObject x = sphere_model(1, 5);
  for (std::size_t k = 1; k <= 3; ++k) {
    SimplicialObject f = james_filtration(x, k);
    auto a = homology(filtration_quotient(f, k), 4);
    auto b = homology(smash_power(x, k), 4);
    CHECK(a == b);
    for (std::size_t q = 0; q <= 4; ++q) CHECK(a[q].rank == (q == 0 || q == k ? 1u : 0u));
  }
}

TEST_CASE("Grothendieck group completion") {
  MonoidPresentation nat;
  nat.generators = 1;
  GroupCompletion z = grothendieck(nat);
  CHECK(z.group.str() == "Z");
  CHECK(z.images[0] == std::vector<std::string>{"1"});
  // Z/n and Z/2 x Z/2 as tables are unchanged.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    GroupCompletion g = grothendieck(table_presentation(t, 0));
    CHECK(g.group.rank == 0);
    CHECK(g.group.str() == (n == 1 ? "0" : "Z/" + std::to_string(n)));
    // The generator 1 has order n; oracle by brute force over multiples.
    auto p = table_presentation(t, 0);
    std::vector<std::vector<std::int64_t>> rel;
    for (auto& [l, r] : p.relations) {
      std::vector<std::int64_t> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = l[i] - r[i];
      rel.push_back(d);
    }
    if (n > 1) {
      std::vector<std::int64_t> e1(n, 0);
      e1[1] = 1;
      CHECK(order_in(n, rel, e1) == n);
    }
  }
  std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) klein[a][b] = a ^ b;
  CHECK(grothendieck(table_presentation(klein, 0)).group.str() == "Z/2 + Z/2");
  // {1, a} with aa = a goes to the trivial group.
  GroupCompletion idem = grothendieck(table_presentation({{0, 1}, {1, 1}}, 0));
  CHECK(idem.group.is_zero());
  // Non-commutative tables are refused.
  MonoidPresentation bad = table_presentation({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  CHECK_FALSE(bad.commutative);
  CHECK_THROWS_AS(grothendieck(bad), Error);
}

TEST_CASE("pi_0 of the truncated free monoid on S^0") {
  for (std::size_t k = 1; k <= 5; ++k) {
    Pi0Monoid m = pi0_james_s0(k);
    CHECK(m.classes == k + 1);
    CHECK(m.is_truncated_naturals);
    CHECK(m.completion.group.is_z());
  }
}
