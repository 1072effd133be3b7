// One line per acceptance criterion: "AC<n> PASS|FAIL <seconds>s <detail>".
// Usage: acceptance [n ...]   (no arguments runs all)
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opcat/co.hpp"
#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"
#include "opcat/homology.hpp"
#include "opcat/james.hpp"
#include "opcat/monadics.hpp"
#include "opcat/operad.hpp"
#include "opcat/perm.hpp"
#include "opcat/simplicial.hpp"

using namespace opcat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void need(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
  void need(const Report& r, const std::string& what) {
    if (!r.ok())
      for (const auto& c : r.checks())
        if (!c.ok()) {
          need(false, what + ": " + c.name + (c.witnesses.empty() ? "" : " (" + c.witnesses[0] + ")"));
          return;
        }
  }
};

std::size_t cases(const Report& r, const std::string& suffix = "") {
  std::size_t n = 0;
  for (const auto& c : r.checks())
    if (suffix.empty() || (c.name.size() >= suffix.size() && c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0))
      n += c.cases;
  return n;
}

std::vector<GroupPtr> groups() {
  return {make_group(FiniteGroup::cyclic(2)), make_group(FiniteGroup::cyclic(3)),
          make_group(FiniteGroup::symmetric(3))};
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Monad, algebra, adjunction and C-functor laws.
void ac1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0, algebras = 0;
  for (const auto& g : groups())
    for (bool based : {false, true}) {
      Adjunction a = free_gset_adjunction(g, based);
      Monad m = monad_of(a);
      auto tp = set_probes(3, based);
      auto sp = gset_probes(*a.left.dst, 3);
      std::string tag = g->name() + (based ? " based" : "");
      Report rm = check_monad(m, tp);
      o.need(rm, tag + " monad");
      Report ra = check_adjunction(a, tp, sp);
      o.need(ra, tag + " adjunction");
      Report rc = check_cfunctor(adjoint_cfunctor(m, a, adjunction_action(a)), m, tp);
      o.need(rc, tag + " Sigma C-functor");
      Report rs = check_cfunctor(self_cfunctor(m), m, tp);
      o.need(rs, tag + " self C-functor");
      checked += cases(rm) + cases(ra) + cases(rc) + cases(rs);
      for (const Obj& x : tp) {
        auto ys = enumerate_algebras(m, x);
        // G x (-) algebras on n points are the actions G -> S_n (a point fixed when based).
        std::size_t free_points = x.at(0).size() - (based ? 1 : 0);
        o.need(ys.size() == enumerate_homs_to_sym(g, free_points).size(), tag + " algebra count");
        for (const Algebra& y : ys) {
          Report r = check_algebra(m, y);
          o.need(r, tag + " algebra");
          checked += cases(r);
          ++algebras;
        }
      }
    }
  double s = since(t0);
  o.need(s < 10.0, "runtime over 10 s");
  o.detail << checked << " law instances, " << algebras << " algebras";
}

// 2. Split coequalizers: verify matches a direct evaluation of the four equations on
// every single-entry perturbation.
using Table = std::vector<std::size_t>;
Table after(const Table& outer, const Table& inner) {
  Table t(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) t[i] = outer[inner[i]];
  return t;
}
Table ident(std::size_t n) {
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return t;
}
std::vector<bool> equations(const SplitDiagram& d) {
  const Table &f = d.f.level[0], &g = d.g.level[0], &q = d.q.level[0], &i = d.i.level[0], &j = d.j.level[0];
  return {after(q, f) == after(q, g), after(q, i) == ident(d.c.at(0).size()), after(f, j) == after(i, q),
          after(g, j) == ident(d.b.at(0).size())};
}

void ac2(Outcome& o) {
  std::size_t probes = 0, perturbed = 0, rejected = 0, single = 0, mismatch = 0;
  for (const auto& g : groups())
    for (bool based : {false, true}) {
      Monad m = monad_of(free_gset_adjunction(g, based));
      for (const Obj& x : set_probes(2, based))
        for (const Algebra& y : enumerate_algebras(m, x)) {
          SplitDiagram d = canonical_split(m, y);
          o.need(verify_split_coequalizer(d), g->name() + " canonical split");
          ++probes;
          struct Slot {
            Mor SplitDiagram::*field;
            const Obj SplitDiagram::*dst;
          };
          for (Slot s : {Slot{&SplitDiagram::f, &SplitDiagram::b}, Slot{&SplitDiagram::g, &SplitDiagram::b},
                         Slot{&SplitDiagram::q, &SplitDiagram::c}, Slot{&SplitDiagram::i, &SplitDiagram::b},
                         Slot{&SplitDiagram::j, &SplitDiagram::a}}) {
            std::size_t width = (d.*s.dst).at(0).size();
            for (std::size_t e = 0; e < (d.*s.field).level[0].size(); ++e)
              for (std::size_t v = 0; v < width; ++v) {
                if (v == (d.*s.field).level[0][e]) continue;
                SplitDiagram p = d;
                (p.*s.field).level[0][e] = v;
                auto eq = equations(p);
                std::size_t broken = 0;
                for (bool b : eq) broken += !b;
                bool verdict = verify_split_coequalizer(p).ok();
                if (verdict != (broken == 0)) ++mismatch;
                if (broken > 0) {
                  ++perturbed;
                  if (!verdict) ++rejected;
                }
                if (broken == 1) ++single;
              }
          }
        }
    }
  o.need(probes > 0 && single > 0, "no probes");
  o.need(mismatch == 0, "verifier disagrees with direct evaluation");
  o.need(rejected == perturbed, "a perturbation breaking an equation was accepted");
  o.detail << probes << " probe algebras verified; " << rejected << "/" << perturbed << " equation-breaking perturbations rejected ("
           << single << " break exactly one)";
}

// 3. Beck: eta_Gamma iso on every probe algebra for G = C2.
void ac3(Outcome& o) {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  std::size_t iso = 0;
  for (bool based : {false, true}) {
    Adjunction a = free_gset_adjunction(c2, based);
    Report r = beck_check(a, set_probes(3, based), gset_probes(*a.left.dst, 3));
    o.need(r, std::string("beck ") + (based ? "based" : "unbased"));
    o.need(r.info().value("monadic", false), "not reported monadic");
    o.need(cases(r, "eta_gamma_iso") > 0, "no eta_Gamma instances");
    iso += cases(r, "eta_gamma_iso");
  }
  o.detail << iso << " eta_Gamma isomorphisms, monadic: true";
}

// 4. Sigma_C adjunction bijection and Sigma_C(CX) = Sigma X.
void ac4(Outcome& o) {
  struct Case {
    Monad c;
    Adjunction a;
    Action act;
    std::vector<Obj> t, s;
  };
  std::vector<Case> all;
  for (const auto& g : groups()) {
    Adjunction a = free_gset_adjunction(g, true);
    std::size_t n = g->order() == 6 ? 1 : 2;
    all.push_back({monad_of(a), a, adjunction_action(a), set_probes(n, true), gset_probes(*a.left.dst, 2)});
  }
  {
    Adjunction a = free_gset_adjunction(make_group(FiniteGroup::cyclic(2)), true);
    all.push_back({identity_monad(a.left.src), a, trivial_action(a), set_probes(2, true), gset_probes(*a.left.dst, 2)});
    Adjunction p = free_pointed_adjunction();
    all.push_back({monad_of(p), p, adjunction_action(p), set_probes(3, false), set_probes(2, true)});
  }
  std::size_t instances = 0, bij = 0, free_iso = 0;
  for (const auto& k : all) {
    std::vector<Algebra> ys;
    for (const Obj& x : k.t)
      for (Algebra& y : enumerate_algebras(k.c, x)) ys.push_back(std::move(y));
    Report r = sigma_adjunction_check(k.c, k.a, k.act, ys, k.s, k.t);
    o.need(r, k.c.name + " / " + k.a.name);
    instances += r.info().value("instances", std::size_t{0});
    bij += cases(r, "round_trip");
    free_iso += cases(r, "free_sigma_iso");
  }
  o.need(instances >= 5, "fewer than 5 instances");
  o.need(free_iso > 0, "no free probes");
  o.detail << instances << " (Y, Z) instances, " << bij << " round trips, " << free_iso << " free probes Sigma_C(CX) = Sigma X";
}

// 5. Category of operators.
void ac5(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (auto op : {std::make_shared<const Operad>(commutativity_operad(3)),
                  std::make_shared<const Operad>(associativity_operad(3)),
                  std::make_shared<const Operad>(endomorphism_operad(2, 3))}) {
    auto d = build_co(op, 3);
    Report r = check_co(d);
    o.need(r, op->name());
    n += cases(r, "associativity");
    o.need(extract_operad(d) == *op, op->name() + " extract(build) differs");
  }
  o.need(since(t0) < 60.0, "runtime over 60 s");
  o.detail << n << " associativity triples over N, M, End(2 points); extract.build = id";
}

// 6. gamma of homomorphisms, graph family, prolonged CO.
void ac6(Outcome& o) {
  auto c2 = make_group(FiniteGroup::cyclic(2));
  std::vector<HomToSym> alphas;
  for (std::size_t n = 0; n <= 3; ++n)
    for (auto& a : enumerate_homs_to_sym(c2, n)) alphas.push_back(a);
  std::size_t tuples = 0;
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& be : enumerate_homs_to_sym(c2, k)) {
      std::vector<std::size_t> pick(k, 0);
      for (;;) {
        std::vector<HomToSym> as;
        for (auto i : pick) as.push_back(alphas[i]);
        if (composable(be, as)) {
          ++tuples;
          HomToSym gm = gamma_hom(be, as);
          std::vector<std::size_t> lengths;
          std::size_t total = 0;
          for (const auto& a : as) lengths.push_back(a.degree), total += a.degree;
          o.need(gm.degree == total, "degree");
          for (std::size_t x = 0; x < 2; ++x) {
            std::vector<Perm> blocks;
            for (const auto& a : as) blocks.push_back(a(x));
            o.need(gm(x) == perm_compose(perm_block(be(x), lengths), perm_block_sum(blocks)), "blockwise formula");
            // Each block r goes to block beta(x)(r) through alpha_r(x).
            std::vector<std::size_t> start(k + 1, 0);
            for (std::size_t r = 0; r < k; ++r) start[r + 1] = start[r] + lengths[r];
            for (std::size_t r = 0; r < k; ++r) {
              std::size_t dst = be(x)[r + 1] - 1;
              for (std::size_t i = 1; i <= lengths[r]; ++i)
                o.need(gm(x)[start[r] + i] == start[dst] + as[r](x)[i], "blockwise equivariance");
            }
            for (std::size_t y = 0; y < 2; ++y) o.need(perm_compose(gm(x), gm(y)) == gm(c2->mul(x, y)), "homomorphism");
          }
        }
        std::size_t r = 0;
        while (r < k && ++pick[r] == alphas.size()) pick[r++] = 0;
        if (r == k) break;
      }
    }
  auto fam = graph_family(*c2, 2);
  o.need(fam.size() == 3, "graph_family(C2, 2) has " + std::to_string(fam.size()) + " members");
  auto dn = std::make_shared<const CatOfOperators>(build_co(std::make_shared<const Operad>(commutativity_operad(3)), 3));
  Report r = compare_with_fg(prolong_co(dn, c2));
  o.need(r, "prolonged D(N) vs F_G");
  o.detail << tuples << " composable tuples, |graph_family(C2,2)| = " << fam.size() << ", " << cases(r)
           << " hom comparisons against F_C2";
}

// 7. Monad pairs.
void ac7(Outcome& o) {
  auto cat = pointed_category();
  auto probes = set_probes(1, true);
  std::size_t ident = 0, corr = 0;
  for (const auto& p : {trivial_pair_outer(multiset_terms(3, true)), trivial_pair_inner(free_monoid_terms(3, true)),
                        trivial_pair_outer(free_monoid_terms(3, true)), distributive_pair(3)}) {
    Report r = check_monad_pair(p, cat, probes);
    o.need(r, p.name);
    o.need(cases(r, "identity_composite") > 0, p.name + ": identity composite not exercised");
    ident += cases(r, "identity_composite");
    corr += cases(r, "correspondence_cardinality");
  }
  o.need(corr > 0, "algebra correspondence not exercised");
  o.detail << "rho = id (both sides) and the commutative/free pair at guard 3; " << ident << " identity-composite cases, "
           << corr << " cardinality checks";
}

// 8. Bar constructions.
void ac8(Outcome& o) {
  std::size_t simp = 0, zeta = 0, sig = 0;
  auto c2 = make_group(FiniteGroup::cyclic(2));
  std::vector<std::pair<Adjunction, std::vector<Obj>>> cases_;
  for (bool based : {false, true}) cases_.push_back({free_gset_adjunction(c2, based), set_probes(2, based)});
  cases_.push_back({free_pointed_adjunction(), set_probes(2, false)});
  for (const auto& [a, probes] : cases_) {
    Monad m = monad_of(a);
    CFunctor sigma = adjoint_cfunctor(m, a, adjunction_action(a));
    for (const Obj& x : probes) {
      o.need(check_free_collapse(sigma, m, x, 4), a.name + " free collapse");
      for (const Algebra& y : enumerate_algebras(m, x)) {
        for (const CFunctor& f : {self_cfunctor(m), sigma}) {
          Report r = check_simplicial(bar(f, m, y, 4));
          o.need(r, a.name + " simplicial identities");
          simp += cases(r);
        }
        Report z = check_contraction(m, y, 4);
        o.need(z, a.name + " contraction");
        zeta += cases(z, "zeta_nu_id");
        Report l = check_levelwise_sigma(m, a, adjunction_action(a), y, 4);
        o.need(l, a.name + " levelwise Sigma_C");
        o.need(cases(l, "d0_is_beta") > 0 && cases(l, "faces_commute") > 0, "levelwise iso not exercised");
        sig += cases(l);
      }
    }
  }
  o.need(zeta > 0, "zeta nu not exercised");
  o.detail << simp << " simplicial identity cases through level 4, " << zeta << " zeta.nu = id cases, " << sig
           << " levelwise-iso cases";
}

// 9. James homology.
void ac9(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> s1{1, 1, 1, 1, 1}, s2{1, 0, 1, 0, 1};
  for (std::size_t dim : {1, 2}) {
    JamesHomology j = james_homology(sphere_model(dim, 5), 4);
    const auto& want = dim == 1 ? s1 : s2;
    o.need(j.stage == 5, "stage is not F_5");
    for (std::size_t q = 0; q <= 4; ++q)
      o.need(j.homology[q].rank == want[q] && j.homology[q].torsion.empty(),
             "H_" + std::to_string(q) + "(F_5 J S^" + std::to_string(dim) + ") = " + j.homology[q].str());
    o.need(j.tensor_algebra_match, "tensor algebra mismatch for S^" + std::to_string(dim));
    o.detail << "S" << dim << ": ";
    for (std::size_t q = 0; q <= 4; ++q) o.detail << (q ? "," : "") << j.homology[q].str();
    o.detail << "; ";
  }
  o.need(since(t0) < 300.0, "runtime over 5 min");
  o.detail << "tensor algebra matches";
}

// 10. Group completion.  Finite abelian groups are compared by order and by the number of
// elements of each order, counted by brute force on the table and on the answer.
std::map<std::size_t, std::size_t> order_profile(const std::vector<std::vector<std::size_t>>& t, std::size_t unit) {
  std::map<std::size_t, std::size_t> prof;
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t k = 1, y = x;
    while (y != unit) y = t[y][x], ++k;
    ++prof[k];
  }
  return prof;
}
std::vector<std::vector<std::size_t>> product_table(const std::vector<std::size_t>& ns) {
  std::size_t n = 1;
  for (auto m : ns) n *= m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ra = a, rb = b, out = 0, scale = 1;
      for (auto m : ns) {
        out += ((ra % m + rb % m) % m) * scale;
        scale *= m, ra /= m, rb /= m;
      }
      t[a][b] = out;
    }
  return t;
}

void ac10(Outcome& o) {
  MonoidPresentation nat;
  nat.generators = 1;
  GroupCompletion z = grothendieck(nat);
  o.need(z.group.is_z(), "K(N) = " + z.group.str());
  std::size_t groups_checked = 0;
  for (const auto& ns : std::vector<std::vector<std::size_t>>{{1}, {2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 3}, {2, 2, 2}, {4, 2, 3}}) {
    auto t = product_table(ns);
    GroupCompletion g = grothendieck(table_presentation(t, 0));
    o.need(g.group.rank == 0, "finite group completed with a free part");
    std::vector<std::size_t> cyc;
    for (const auto& s : g.group.torsion) cyc.push_back(std::stoul(s));
    if (cyc.empty()) cyc.push_back(1);
    o.need(order_profile(product_table(cyc), 0) == order_profile(t, 0), "K(G) differs from G for " + g.group.str());
    ++groups_checked;
  }
  std::size_t ks = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    Pi0Monoid p = pi0_james_s0(k);
    o.need(p.classes == k + 1 && p.is_truncated_naturals, "pi_0 F_" + std::to_string(k) + " J S^0 not truncated N");
    o.need(p.completion.group.is_z(), "completion of pi_0 is " + p.completion.group.str());
    ++ks;
  }
  o.detail << "K(N) = " << z.group.str() << ", " << groups_checked << " finite abelian groups unchanged, pi_0 F_k J S^0 = N<=k with completion Z for k <= " << ks;
}

// 11. Orbital presheaves and the conjugate monad.
void ac11(Outcome& o) {
  std::size_t fp = 0, conj = 0;
  for (const auto& g : groups()) {
    OrbitCategory oc(g);
    for (std::size_t s = 0; s <= 3; ++s)
      for (const auto& a : enumerate_homs_to_sym(g, s)) {
        BasedGSet x = gset_from_hom(a);
        OrbitalPresheaf p = fixed_point_presheaf(oc, x);
        validate_presheaf(oc, p);
        o.need(strictly_special(oc, p).strictly_special, g->name() + " fixed-point presheaf not strictly special");
        BasedGSet lr = evaluate_at_e(oc, p);
        o.need(lr.size == x.size && lr.act == x.act, g->name() + " LR != Id");
        ++fp;
      }
    auto ocp = std::make_shared<const OrbitCategory>(g);
    Adjunction lr = presheaf_reflection(ocp);
    std::size_t n = g->order() == 6 ? 1 : 2;
    auto sp = gset_probes(*lr.left.dst, n);
    auto tp = presheaf_probes(*lr.left.src, n);
    o.need(check_lr_identity(lr, sp), g->name() + " LR = Id");
    auto k = group_smash_terms(make_group(FiniteGroup::cyclic(2)));
    Report r = conjugate_check(lift(k, lr.left.dst), lift(k, lr.left.src), lr, tp, sp);
    o.need(r, g->name() + " conjugate monad");
    o.need(cases(r) > 0, "conjugate suite empty");
    conj += cases(r);
  }
  o.detail << fp << " fixed-point presheaves strictly special with LR = Id; " << conj
           << " RCL monad-law and iota monad-map cases";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<void(Outcome&)>> all{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11};
  std::set<std::size_t> want;
  for (int i = 1; i < argc; ++i) want.insert(std::strtoul(argv[i], nullptr, 10));
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!want.empty() && !want.count(i + 1)) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      all[i](o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    std::printf("AC%zu %s %.2fs %s%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", since(t0), o.detail.str().c_str(),
                o.pass ? "" : " | first failure: ", o.first_failure.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
