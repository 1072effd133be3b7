#include "doctest.h"

#include <chrono>

#include "opcat/co.hpp"
#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}
}  // namespace

TEST_CASE("hom set sizes") {
  auto m = std::make_shared<const Operad>(associativity_operad(2));
  auto d = build_co(m, 2);
  CHECK(d.homs(2, 1).size() == 5);
  CHECK(d.homs(2, 0).size() == 1);
  auto e = std::make_shared<const Operad>(endomorphism_operad(2, 3));
  auto de = build_co(e, 3);
  std::vector<std::vector<std::size_t>> want{{1, 1, 1, 1}, {1, 3, 5, 7}, {1, 13, 33, 61}, {1, 159, 437, 883}};
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) CHECK(de.homs(i, j).size() == want[i][j]);
}

TEST_CASE("shuffle witness") {
  BasedMap psi(3, 2, {0, 2, 1, 2}), ph = phi(2);
  CHECK(co_shuffle(ph, psi, 1) == Perm{0, 2, 1, 3});
}

TEST_CASE("CO suites") {
  for (auto op : {std::make_shared<const Operad>(commutativity_operad(3)),
                  std::make_shared<const Operad>(associativity_operad(3)),
                  std::make_shared<const Operad>(endomorphism_operad(2, 3))}) {
    auto t0 = std::chrono::steady_clock::now();
    auto d = build_co(op, 3);
    auto r = check_co(d);
    CHECK_MESSAGE(r.ok(), failing(r));
    CHECK(extract_operad(d) == *op);
    MESSAGE(op->name() << " " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s");
  }
}

TEST_CASE("wedge condition failure") {
  auto m = std::make_shared<const Operad>(associativity_operad(2));
  auto full = build_co(m, 2);
  std::vector<std::vector<std::vector<COMorphism>>> homs(3, std::vector<std::vector<COMorphism>>(3));
  BasedMap w = wedge(phi(2), phi(0));
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (const auto& x : full.homs(a, b))
        if (!(a == 2 && b == 2 && x.phi == w)) homs[a][b].push_back(x);
  CatOfOperators bad(m, 2, homs);
  CHECK_THROWS_WITH_AS(extract_operad(bad), doctest::Contains("wedge condition fails"), Error);
}

TEST_CASE("prolonged CO") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  auto n = std::make_shared<const Operad>(commutativity_operad(3));
  auto dn = std::make_shared<const CatOfOperators>(build_co(n, 3));
  auto e = prolong_co(dn, c2);
  auto r1 = compare_with_fg(e);
  CHECK_MESSAGE(r1.ok(), failing(r1));
  auto r2 = check_equivariant_co(e, 2);
  CHECK_MESSAGE(r2.ok(), failing(r2));
  auto m = std::make_shared<const Operad>(associativity_operad(3));
  auto dm = std::make_shared<const CatOfOperators>(build_co(m, 3));
  auto em = prolong_co(dm, c2);
  auto r3 = check_equivariant_co(em, 2);
  CHECK_MESSAGE(r3.ok(), failing(r3));
  auto r4 = cross_check_goperad(em, prolong_operad(m, c2));
  CHECK_MESSAGE(r4.ok(), failing(r4));
}
