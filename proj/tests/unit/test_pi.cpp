#include "doctest.h"

#include "opcat/pi_objects.hpp"

using namespace opcat;

namespace {
std::string failing(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.ok()) s += c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses[0]) + "\n";
  return s;
}

std::shared_ptr<const CatOfOperators> co(Operad op, std::size_t n) {
  return std::make_shared<const CatOfOperators>(build_co(std::make_shared<const Operad>(std::move(op)), n));
}
}  // namespace

TEST_CASE("cartesian powers are strictly special") {
  auto pi = pi_category(3);
  for (std::size_t k = 0; k <= 2; ++k) {
    Obj ry = pi_power(*pi, set_obj(*pointed_category(), atoms(k, true)));
    CHECK(ry.at(2).size() == (k + 1) * (k + 1));
    Report r = segal_special(*pi, ry);
    CHECK_MESSAGE(r.ok(), failing(r));
    CHECK(r.info()["strictly_special"] == true);
  }
}

TEST_CASE("a proper Pi-closed subset of X(1)^2 is not strictly special") {
  auto pi = pi_category(2);
  Obj y = set_obj(*pointed_category(), atoms(1, true));
  Value a = Value::atom(1);
  // Drop (a, a) from Y^2; the rest is closed under Π.
  std::vector<std::vector<Value>> levels{{Value::base()},
                                         {Value::base(), tuple_value({a})},
                                         {Value::base(), tuple_value({Value::base(), a}), tuple_value({a, Value::base()})}};
  for (auto& l : levels) std::sort(l.begin(), l.end());
  Obj x = pi_sub_power(*pi, y, levels);
  Report r = segal_special(*pi, x);
  CHECK_FALSE(r.ok());
  CHECK(r.info()["strictly_special"] == false);
  CHECK(r.info()["per_level"][1]["bijective"] == true);
  CHECK(r.info()["per_level"][2]["injective"] == true);
}

TEST_CASE("(D R X)(1) is C X and omega: D R = R C") {
  for (std::size_t n : {2, 3})
    for (std::size_t k = 0; k <= 2; ++k) {
      Obj y = set_obj(*pointed_category(), atoms(k, true));
      for (auto d : {co(associativity_operad(n), n), co(commutativity_operad(n), n)}) {
        Report r = check_omega(d, y);
        CHECK_MESSAGE(r.ok(), (d->operad().name() + " " + std::to_string(k) + "\n" + failing(r)));
      }
    }
  Report e = check_omega(co(endomorphism_operad(2, 2), 2), set_obj(*pointed_category(), atoms(1, true)));
  CHECK_MESSAGE(e.ok(), failing(e));
}

TEST_CASE("the CO monad on Pi-objects") {
  auto d = co(associativity_operad(2), 2);
  Monad m = co_monad(d);
  std::vector<Obj> probes;
  for (std::size_t k = 0; k <= 1; ++k) probes.push_back(pi_power(*m.cat, set_obj(*pointed_category(), atoms(k, true))));
  Report r = check_monad(m, probes);
  CHECK_MESSAGE(r.ok(), failing(r));
  // 𝔻R = RC, but the arity truncation cuts (RCY)(n) down, so δ is only injective.
  for (const Obj& p : probes) {
    Report s = segal_special(*m.cat, m.apply(p));
    for (const auto& l : s.info()["per_level"]) CHECK(l["injective"] == true);
  }
}
