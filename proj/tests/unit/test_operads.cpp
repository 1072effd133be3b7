#include "doctest.h"

#include "opcat/error.hpp"
#include "opcat/operad.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}
}  // namespace

TEST_CASE("standard operads pass the axiom suite") {
  for (std::size_t J = 1; J <= 3; ++J) {
    auto n = check_operad(commutativity_operad(J));
    CHECK_MESSAGE(n.ok(), failing(n));
    auto m = check_operad(associativity_operad(J));
    CHECK_MESSAGE(m.ok(), failing(m));
  }
  auto e = check_operad(endomorphism_operad(2, 3));
  CHECK_MESSAGE(e.ok(), failing(e));
}

TEST_CASE("corrupted gamma entry is reported") {
  Operad m = associativity_operad(3);
  auto g = m.gamma_tables();
  auto& t = g.at({1, 1});
  t[0] = 1 - t[0];
  Operad bad("M-bad", 3, m.cards(), m.unit(), m.sigma_tables(), g);
  auto r = check_operad(bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("associativity")->witnesses.empty());
}

TEST_CASE("endomorphism operad sizes") {
  Operad e1 = endomorphism_operad(1, 3);
  CHECK(e1.cards() == std::vector<std::size_t>{1, 1, 1, 1});
  Operad e2 = endomorphism_operad(2, 3);
  CHECK(e2.cards() == std::vector<std::size_t>{1, 2, 8, 128});
}

TEST_CASE("prolongation and restriction") {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  for (auto base : {std::make_shared<const Operad>(commutativity_operad(3)),
                    std::make_shared<const Operad>(associativity_operad(3)),
                    std::make_shared<const Operad>(endomorphism_operad(2, 2))}) {
    GOperad p = prolong_operad(base, c2);
    auto r = check_goperad(p);
    CHECK_MESSAGE(r.ok(), failing(r));
    CHECK(restrict_goperad(p) == *base);
  }
  auto s3 = make_group(FiniteGroup::symmetric(3));
  auto r = check_goperad(prolong_operad(std::make_shared<const Operad>(associativity_operad(3)), s3));
  CHECK_MESSAGE(r.ok(), failing(r));
}

TEST_CASE("pair actions on N") {
  Operad n = commutativity_operad(3), m = associativity_operad(3);
  for (const Operad* j : {&n, &m}) {
    auto r = check_pair_action(*j, n, pair_action_to_points(*j, n));
    CHECK_MESSAGE(r.ok(), failing(r));
  }
  PairAction lam = pair_action_to_points(n, n);
  lam.entries.at({2, 1}).target = 1;
  CHECK_THROWS_AS(validate_pair_action(n, n, lam), Error);
}
