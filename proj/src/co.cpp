#include "opcat/co.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"
#include "opcat/util.hpp"

namespace opcat {

std::string to_string(const COMorphism& a) { return "(" + to_string(a.phi) + ", " + bracket(a.c) + ")"; }

namespace {

// Data of (φ,·)∘(ψ,·) that does not depend on the operad elements.
struct Plan {
  BasedMap comp;
  std::vector<std::vector<std::size_t>> fibers;  // φ⁻¹(j), increasing
  std::vector<std::vector<std::size_t>> keys;    // (|ψ⁻¹(i)|)_{i ∈ φ⁻¹(j)}
  std::vector<Perm> shuffles;
  std::vector<std::size_t> shuffle_ranks;
};

Perm shuffle_of(const BasedMap& phi, const BasedMap& psi, std::size_t j) {
  // natural order of (φψ)⁻¹(j) versus the order of ∐_{φ(i)=j} ψ⁻¹(i)
  std::vector<std::size_t> natural;
  for (std::size_t x = 1; x <= psi.source(); ++x)
    if (phi(psi(x)) == j) natural.push_back(x);
  std::vector<std::size_t> block;
  for (std::size_t i : phi.fiber(j))
    for (std::size_t x : psi.fiber(i)) block.push_back(x);
  Perm s(natural.size() + 1, 0);
  for (std::size_t p = 0; p < natural.size(); ++p) {
    std::size_t q = std::find(block.begin(), block.end(), natural[p]) - block.begin();
    s[p + 1] = q + 1;
  }
  return s;
}

Plan make_plan(const BasedMap& phi, const BasedMap& psi) {
  if (!(psi.target() == phi.source())) fail(ErrorCode::Domain,
          "compose_co: object mismatch (" + std::to_string(psi.target()) + " vs " + std::to_string(phi.source()) + ")");
  Plan p;
  p.comp = compose(phi, psi);
  for (std::size_t j = 1; j <= phi.target(); ++j) {
    p.fibers.push_back(phi.fiber(j));
    std::vector<std::size_t> key;
    for (std::size_t i : p.fibers.back()) key.push_back(psi.fiber_size(i));
    p.keys.push_back(std::move(key));
    p.shuffles.push_back(shuffle_of(phi, psi, j));
    p.shuffle_ranks.push_back(perm_rank(p.shuffles.back()));
  }
  return p;
}

void check_shape(const Operad& op, const COMorphism& a) {
  if (!(a.c.size() == a.phi.target())) fail(ErrorCode::Validation, "morphism " + to_string(a) + ": wrong number of operad elements");
  for (std::size_t j = 1; j <= a.phi.target(); ++j) {
    std::size_t ar = a.phi.fiber_size(j);
    if (!(ar <= op.bound())) fail(ErrorCode::Bound, "morphism " + to_string(a) + ": fiber beyond operad arity bound");
    if (!(a.c[j - 1] < op.card(ar))) fail(ErrorCode::Validation, "morphism " + to_string(a) + ": operad element out of range");
  }
}

// rank of a map among all based maps m -> n (lexicographic tables)
std::size_t map_rank(const BasedMap& f) {
  std::size_t r = 0;
  for (std::size_t i = 1; i <= f.source(); ++i) r = r * (f.target() + 1) + f(i);
  return r;
}

}  // namespace

Perm co_shuffle(const BasedMap& phi, const BasedMap& psi, std::size_t j) { return shuffle_of(phi, psi, j); }

COMorphism compose_co(const Operad& op, const COMorphism& a, const COMorphism& b) {
  Plan p = make_plan(a.phi, b.phi);
  COMorphism out{p.comp, {}};
  for (std::size_t j = 1; j <= a.phi.target(); ++j) {
    const auto& key = p.keys[j - 1];
    std::size_t ar = perm_degree(p.shuffles[j - 1]);
    require(op.gamma_defined(key), ErrorCode::Bound, "compose_co: arity overflow beyond the operad bound");
    std::vector<std::size_t> ds;
    for (std::size_t i : p.fibers[j - 1]) ds.push_back(b.c[i - 1]);
    std::size_t e = op.gamma(a.c[j - 1], key, ds);
    out.c.push_back(op.act_rank(ar, e, p.shuffle_ranks[j - 1]));
  }
  return out;
}

COMorphism co_identity(const Operad& op, std::size_t n) { return COMorphism{BasedMap::identity(n), std::vector<std::size_t>(n, op.unit())}; }

COMorphism co_iota(const Operad& op, const BasedMap& f) {
  if (!(is_member(Kind::Pi, f))) fail(ErrorCode::Domain, "iota: " + to_string(f) + " is not a Π map");
  COMorphism out{f, {}};
  for (std::size_t j = 1; j <= f.target(); ++j) out.c.push_back(f.fiber_size(j) == 1 ? op.unit() : 0);
  return out;
}

COMorphism co_wedge(const COMorphism& a, const COMorphism& b) {
  COMorphism out{wedge(a.phi, b.phi), a.c};
  out.c.insert(out.c.end(), b.c.begin(), b.c.end());
  return out;
}

CatOfOperators::CatOfOperators(OperadPtr op, std::size_t n, std::vector<std::vector<std::vector<COMorphism>>> homs)
    : op_(std::move(op)), n_(n), homs_(std::move(homs)) {
  require(op_ != nullptr, ErrorCode::Domain, "category of operators needs an operad");
  if (!(op_->bound() >= n_)) fail(ErrorCode::Bound,
          "category of operators: operad arity bound " + std::to_string(op_->bound()) + " is below object bound " +
              std::to_string(n_));
  require(homs_.size() == n_ + 1, ErrorCode::Validation, "category of operators: hom sets must cover objects 0..N");
  for (std::size_t m = 0; m <= n_; ++m) {
    require(homs_[m].size() == n_ + 1, ErrorCode::Validation, "category of operators: hom sets must cover objects 0..N");
    for (std::size_t k = 0; k <= n_; ++k) {
      auto& hs = homs_[m][k];
      for (const auto& a : hs) {
        if (!(a.phi.source() == m && a.phi.target() == k)) fail(ErrorCode::Validation,
                "morphism " + to_string(a) + " listed in the wrong hom set");
        check_shape(*op_, a);
      }
      std::sort(hs.begin(), hs.end());
      require(std::adjacent_find(hs.begin(), hs.end()) == hs.end(), ErrorCode::Validation, "duplicate morphism in hom set");
    }
  }
}

CatOfOperators build_co(OperadPtr op, std::size_t n) {
  require(op != nullptr, ErrorCode::Domain, "build_co needs an operad");
  if (!(op->bound() >= n)) fail(ErrorCode::Bound,
          "build_co: operad arity bound " + std::to_string(op->bound()) + " is below object bound " + std::to_string(n));
  std::vector<std::vector<std::vector<COMorphism>>> homs(n + 1, std::vector<std::vector<COMorphism>>(n + 1));
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t k = 0; k <= n; ++k)
      for (const BasedMap& f : enumerate_homs(Kind::F, m, k)) {
        std::vector<std::size_t> rad;
        for (std::size_t j = 1; j <= k; ++j) rad.push_back(op->card(f.fiber_size(j)));
        for_each_digits(rad, [&](const std::vector<std::size_t>& c) { homs[m][k].push_back(COMorphism{f, c}); });
      }
  CatOfOperators d(std::move(op), n, std::move(homs));
  d.full_ = true;
  return d;
}

std::size_t CatOfOperators::index(std::size_t m, std::size_t n, const COMorphism& a) const {
  require(m <= n_ && n <= n_, ErrorCode::Bound, "object beyond the category's bound");
  const auto& hs = homs_[m][n];
  auto it = std::lower_bound(hs.begin(), hs.end(), a);
  if (!(it != hs.end() && *it == a)) fail(ErrorCode::Domain, "morphism " + to_string(a) + " is not in the category");
  return static_cast<std::size_t>(it - hs.begin());
}

bool CatOfOperators::contains(std::size_t m, std::size_t n, const COMorphism& a) const {
  if (m > n_ || n > n_) return false;
  return std::binary_search(homs_[m][n].begin(), homs_[m][n].end(), a);
}

// ---- composition tables ----

namespace {

// offsets of each φ-block inside a full hom set, indexed by map rank
struct HomLayout {
  std::vector<BasedMap> maps;
  std::vector<std::size_t> offset;              // by rank
  std::vector<std::vector<std::size_t>> radix;  // card of each fiber
  std::vector<std::uint32_t> phi_of;            // morphism index -> map rank
};

HomLayout layout(const Operad& op, std::size_t m, std::size_t n) {
  HomLayout l;
  l.maps = enumerate_homs(Kind::F, m, n);
  std::size_t off = 0;
  for (std::size_t r = 0; r < l.maps.size(); ++r) {
    const auto& f = l.maps[r];
    std::vector<std::size_t> rad;
    std::size_t size = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      rad.push_back(op.card(f.fiber_size(j)));
      size *= rad.back();
    }
    l.offset.push_back(off);
    l.radix.push_back(rad);
    for (std::size_t i = 0; i < size; ++i) l.phi_of.push_back(static_cast<std::uint32_t>(r));
    off += size;
  }
  return l;
}

}  // namespace

CompositionTables::CompositionTables(const CatOfOperators& d) : n_(d.bound()) {
  require(d.is_full(), ErrorCode::Domain, "composition tables need a category built by build_co");
  const Operad& op = d.operad();
  const std::size_t N = n_;
  std::vector<std::vector<HomLayout>> lay(N + 1, std::vector<HomLayout>(N + 1));
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t n = 0; n <= N; ++n) lay[m][n] = layout(op, m, n);
  t_.resize((N + 1) * (N + 1) * (N + 1));
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t p = 0; p <= N; ++p) {
        const HomLayout& A = lay[n][p];
        const HomLayout& B = lay[m][n];
        const HomLayout& R = lay[m][p];
        std::size_t nb = d.homs(m, n).size();
        auto& t = t_[(m * (N + 1) + n) * (N + 1) + p];
        t.assign(d.homs(n, p).size() * nb, 0);
        for (std::size_t fa = 0; fa < A.maps.size(); ++fa)
          for (std::size_t fb = 0; fb < B.maps.size(); ++fb) {
            Plan plan = make_plan(A.maps[fa], B.maps[fb]);
            std::size_t rr = map_rank(plan.comp);
            const auto& rrad = R.radix[rr];
            std::vector<const std::vector<std::size_t>*> gt(p);
            std::vector<std::size_t> ar(p);
            for (std::size_t j = 0; j < p; ++j) {
              gt[j] = &op.gamma_tables().at(plan.keys[j]);
              ar[j] = perm_degree(plan.shuffles[j]);
            }
            for_each_digits(A.radix[fa], [&](const std::vector<std::size_t>& c) {
              std::size_t ia = A.offset[fa] + mixed_index(A.radix[fa], c);
              for_each_digits(B.radix[fb], [&](const std::vector<std::size_t>& dd) {
                std::size_t ib = B.offset[fb] + mixed_index(B.radix[fb], dd);
                std::size_t res = 0;
                for (std::size_t j = 0; j < p; ++j) {
                  std::size_t idx = c[j];
                  for (std::size_t i : plan.fibers[j]) idx = idx * op.card(B.maps[fb].fiber_size(i)) + dd[i - 1];
                  std::size_t e = op.act_rank(ar[j], (*gt[j])[idx], plan.shuffle_ranks[j]);
                  res = res * rrad[j] + e;
                }
                t[ia * nb + ib] = static_cast<std::uint32_t>(R.offset[rr] + res);
              });
            });
          }
      }
}

// ---- checks ----

Report check_co(const CatOfOperators& d) {
  const Operad& op = d.operad();
  const std::size_t N = d.bound();
  Report rep("category of operators over " + op.name());
  rep.info()["object_bound"] = N;
  nlohmann::json sizes = nlohmann::json::array();
  for (std::size_t m = 0; m <= N; ++m) {
    std::vector<std::size_t> row;
    for (std::size_t n = 0; n <= N; ++n) row.push_back(d.homs(m, n).size());
    sizes.push_back(row);
  }
  rep.info()["hom_sizes"] = sizes;

  auto& reduced = rep.check("reduced");
  for (std::size_t m = 0; m <= N; ++m) {
    reduced.expect(d.homs(m, 0).size() == 1, "D(" + std::to_string(m) + ",0) is not a point");
    reduced.expect(d.homs(0, m).size() == 1, "D(0," + std::to_string(m) + ") is not a point");
  }

  auto& unit = rep.check("unit");
  auto& assoc = rep.check("associativity");
  auto& xi = rep.check("xi_functor");
  if (d.is_full()) {
    CompositionTables T(d);
    std::vector<std::vector<HomLayout>> lay(N + 1, std::vector<HomLayout>(N + 1));
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n) lay[m][n] = layout(op, m, n);
    // unit
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n) {
        std::size_t idm = d.index(m, m, co_identity(op, m)), idn = d.index(n, n, co_identity(op, n));
        std::size_t sz = d.homs(m, n).size();
        const auto& right = T.table(m, m, n);
        const auto& left = T.table(m, n, n);
        for (std::size_t a = 0; a < sz; ++a) {
          unit.expect_lazy(right[a * d.homs(m, m).size() + idm] == a, [&] { return to_string(d.homs(m, n)[a]) + "∘id != itself"; });
          unit.expect_lazy(left[idn * sz + a] == a, [&] { return "id∘" + to_string(d.homs(m, n)[a]) + " != itself"; });
        }
      }
    // ξ(a∘b) = ξa∘ξb via map ranks
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t p = 0; p <= N; ++p) {
          const auto& A = lay[n][p];
          const auto& B = lay[m][n];
          const auto& R = lay[m][p];
          std::vector<std::size_t> fc(A.maps.size() * B.maps.size());
          for (std::size_t x = 0; x < A.maps.size(); ++x)
            for (std::size_t y = 0; y < B.maps.size(); ++y) fc[x * B.maps.size() + y] = map_rank(compose(A.maps[x], B.maps[y]));
          const auto& t = T.table(m, n, p);
          std::size_t nb = B.phi_of.size();
          std::size_t bad = 0, total = 0;
          for (std::size_t a = 0; a < A.phi_of.size(); ++a)
            for (std::size_t b = 0; b < nb; ++b) {
              ++total;
              if (R.phi_of[t[a * nb + b]] != fc[A.phi_of[a] * B.maps.size() + B.phi_of[b]]) ++bad;
            }
          xi.cases += total - bad;
          for (std::size_t i = 0; i < bad; ++i)
            xi.fail("ξ not multiplicative on D(" + std::to_string(n) + "," + std::to_string(p) + ")×D(" + std::to_string(m) + "," +
                    std::to_string(n) + ")");
        }
    // (a∘b)∘c = a∘(b∘c) for c: l->m, b: m->n, a: n->p
    for (std::size_t l = 0; l <= N; ++l)
      for (std::size_t m = 0; m <= N; ++m)
        for (std::size_t n = 0; n <= N; ++n)
          for (std::size_t p = 0; p <= N; ++p) {
            const auto& Tlmp = T.table(l, m, p);
            const auto& Tlnp = T.table(l, n, p);
            const auto& Tlmn = T.table(l, m, n);
            const auto& Tmnp = T.table(m, n, p);
            std::size_t na = d.homs(n, p).size(), nb = d.homs(m, n).size(), nc = d.homs(l, m).size(), nbc = d.homs(l, n).size();
            std::size_t bad = 0;
            for (std::size_t a = 0; a < na; ++a)
              for (std::size_t b = 0; b < nb; ++b) {
                const std::uint32_t* lrow = &Tlmp[static_cast<std::size_t>(Tmnp[a * nb + b]) * nc];
                const std::uint32_t* brow = &Tlmn[b * nc];
                const std::uint32_t* arow = &Tlnp[a * nbc];
                for (std::size_t c = 0; c < nc; ++c)
                  if (lrow[c] != arow[brow[c]]) {
                    if (bad++ < 8)
                      assoc.witnesses.push_back("a=" + to_string(d.homs(n, p)[a]) + " b=" + to_string(d.homs(m, n)[b]) +
                                                " c=" + to_string(d.homs(l, m)[c]));
                  }
              }
            assoc.cases += na * nb * nc;
            assoc.failures += bad;
          }
    // tables agree with the direct formula on a deterministic sample
    auto& agree = rep.check("tables_match_compose");
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t p = 0; p <= N; ++p) {
          const auto& t = T.table(m, n, p);
          std::size_t na = d.homs(n, p).size(), nb = d.homs(m, n).size();
          std::size_t stride = std::max<std::size_t>(1, na * nb / 2000);
          for (std::size_t x = 0; x < na * nb; x += stride) {
            const auto& a = d.homs(n, p)[x / nb];
            const auto& b = d.homs(m, n)[x % nb];
            agree.expect_lazy(compose_co(op, a, b) == d.homs(m, p)[t[x]], [&] { return to_string(a) + " ∘ " + to_string(b); });
          }
        }
  } else {
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n)
        for (const auto& a : d.homs(m, n)) {
          unit.expect(compose_co(op, a, co_identity(op, m)) == a, to_string(a) + "∘id != itself");
          unit.expect(compose_co(op, co_identity(op, n), a) == a, "id∘" + to_string(a) + " != itself");
        }
    auto& closed = rep.check("closed_under_composition");
    for (std::size_t l = 0; l <= N; ++l)
      for (std::size_t m = 0; m <= N; ++m)
        for (std::size_t n = 0; n <= N; ++n)
          for (const auto& b : d.homs(l, m))
            for (const auto& a : d.homs(m, n)) {
              COMorphism ab = compose_co(op, a, b);
              closed.expect_lazy(d.contains(l, n, ab), [&] { return to_string(a) + "∘" + to_string(b) + " is missing"; });
              xi.expect(ab.phi == compose(a.phi, b.phi), "ξ not multiplicative");
              for (std::size_t k = 0; k <= N; ++k)
                for (const auto& c : d.homs(k, l))
                  assoc.expect_lazy(compose_co(op, ab, c) == compose_co(op, a, compose_co(op, b, c)),
                                    [&] { return "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c); });
            }
  }

  auto& iota = rep.check("iota_functor");
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t n = 0; n <= N; ++n)
      for (const BasedMap& g : enumerate_homs(Kind::Pi, m, n)) {
        COMorphism ig = co_iota(op, g);
        iota.expect(ig.phi == g && d.contains(m, n, ig), "ι(" + to_string(g) + ") missing or not over g");
        for (std::size_t p = 0; p <= N; ++p)
          for (const BasedMap& f : enumerate_homs(Kind::Pi, n, p))
            iota.expect_lazy(co_iota(op, compose(f, g)) == compose_co(op, co_iota(op, f), ig),
                             [&] { return "ι(f∘g) != ι(f)∘ι(g) at f=" + to_string(f) + " g=" + to_string(g); });
      }

  auto& wc = rep.check("wedge_cover");
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t m2 = 0; m + m2 <= N; ++m2)
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t n2 = 0; n + n2 <= N; ++n2)
          for (const auto& a : d.homs(m, n))
            for (const auto& b : d.homs(m2, n2)) {
              COMorphism w = co_wedge(a, b);
              wc.expect_lazy(d.contains(m + m2, n + n2, w) && w.phi == wedge(a.phi, b.phi),
                             [&] { return to_string(a) + " ∨ " + to_string(b) + " not covered"; });
            }
  auto& wi = rep.check("wedge_interchange");
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t m2 = 0; m + m2 <= N; ++m2)
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t n2 = 0; n + n2 <= N; ++n2)
          for (std::size_t p = 0; p <= N; ++p)
            for (std::size_t p2 = 0; p + p2 <= N; ++p2) {
              if (d.homs(n, p).size() * d.homs(n2, p2).size() * d.homs(m, n).size() * d.homs(m2, n2).size() > 20000) continue;
              for (const auto& a : d.homs(n, p))
                for (const auto& a2 : d.homs(n2, p2))
                  for (const auto& b : d.homs(m, n))
                    for (const auto& b2 : d.homs(m2, n2))
                      wi.expect_lazy(compose_co(op, co_wedge(a, a2), co_wedge(b, b2)) ==
                                         co_wedge(compose_co(op, a, b), compose_co(op, a2, b2)),
                                     [&] { return "interchange fails at " + to_string(a) + ", " + to_string(a2); });
            }
  return rep;
}

Operad extract_operad(const CatOfOperators& d) {
  const Operad& op = d.operad();
  const std::size_t N = d.bound();
  require(N >= 1, ErrorCode::Bound, "extract_operad needs object bound at least 1");
  // C(n): positions in the fiber over φ_n
  std::vector<std::vector<COMorphism>> fib(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    for (const auto& a : d.homs(n, 1))
      if (a.phi == phi(n)) fib[n].push_back(a);
  auto pos = [&](std::size_t n, const COMorphism& a) {
    auto it = std::lower_bound(fib[n].begin(), fib[n].end(), a);
    if (!(it != fib[n].end() && *it == a)) fail(ErrorCode::Validation,
            "extract_operad: composite " + to_string(a) + " leaves the fiber over φ_" + std::to_string(n));
    return static_cast<std::size_t>(it - fib[n].begin());
  };
  std::vector<std::size_t> card(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    card[n] = fib[n].size();
    if (!(card[n] >= 1)) fail(ErrorCode::Validation, "extract_operad: empty fiber over φ_" + std::to_string(n));
  }
  COMorphism id1 = co_identity(op, 1);
  require(d.contains(1, 1, id1), ErrorCode::Validation, "extract_operad: identity of 1 is missing");
  std::size_t unit = pos(1, id1);
  Operad::SigmaTables sigma(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    for (const Perm& s : all_perms(n)) {
      COMorphism is = co_iota(op, BasedMap(n, n, s));
      require(d.contains(n, n, is), ErrorCode::Validation, "extract_operad: ι of a permutation is missing");
      std::vector<std::size_t> row;
      for (const auto& c : fib[n]) row.push_back(pos(n, compose_co(op, c, is)));
      sigma[n].push_back(std::move(row));
    }
  Operad::GammaTables gamma;
  for (const auto& key : arity_tuples(N)) {
    std::size_t k = key.size(), j = std::accumulate(key.begin(), key.end(), std::size_t{0});
    std::vector<std::size_t> rad{card[k]};
    for (std::size_t x : key) rad.push_back(card[x]);
    std::vector<std::size_t> table;
    for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
      COMorphism w{BasedMap::identity(0), {}};
      for (std::size_t r = 0; r < k; ++r) w = co_wedge(w, fib[key[r]][cd[r + 1]]);
      if (!d.contains(j, k, w))
        fail(ErrorCode::Validation, "wedge condition fails: " + to_string(w) + " is not a morphism of D(" + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
      table.push_back(pos(j, compose_co(op, fib[k][cd[0]], w)));
    });
    gamma[key] = std::move(table);
  }
  Operad out(op.name(), N, std::move(card), unit, std::move(sigma), std::move(gamma));
  if (d.is_full() && N == op.bound()) out.names = op.names;
  return out;
}

// ---- equivariant categories of operators ----

EquivariantCO::EquivariantCO(std::shared_ptr<const CatOfOperators> d, GroupPtr g) : d_(std::move(d)), g_(std::move(g)) {
  for (std::size_t m = 0; m <= d_->bound(); ++m) homs_.push_back(enumerate_homs_to_sym(g_, m));
}

COMorphism EquivariantCO::act(const HomToSym& alpha, const HomToSym& beta, std::size_t g, const COMorphism& a) const {
  const Operad& op = d_->operad();
  require(alpha.degree == a.phi.source() && beta.degree == a.phi.target(), ErrorCode::Domain, "equivariant CO: degree mismatch");
  COMorphism ga = a;
  for (std::size_t j = 1; j <= a.phi.target(); ++j) ga.c[j - 1] = op.gaction(a.phi.fiber_size(j), g, a.c[j - 1]);
  COMorphism left = co_iota(op, BasedMap(beta.degree, beta.degree, beta(g)));
  COMorphism right = co_iota(op, BasedMap(alpha.degree, alpha.degree, alpha(g_->inverse(g))));
  return compose_co(op, compose_co(op, left, ga), right);
}

EquivariantCO prolong_co(std::shared_ptr<const CatOfOperators> d, GroupPtr g) {
  require(d != nullptr && g != nullptr, ErrorCode::Domain, "prolong_co: missing input");
  const Operad& op = d->operad();
  if (op.group) require(*op.group == *g, ErrorCode::Validation, "prolong_co: operad carries a different group");
  return EquivariantCO(std::move(d), std::move(g));
}

Report check_equivariant_co(const EquivariantCO& e, std::size_t max_objects) {
  const CatOfOperators& d = e.base();
  const FiniteGroup& G = *e.group();
  const std::size_t N = std::min(max_objects, d.bound());
  Report rep("equivariant category of operators over " + d.operad().name() + " and " + G.name());
  rep.info()["object_bound"] = N;
  auto& act = rep.check("group_action");
  auto& idf = rep.check("identity_fixed");
  auto& comp = rep.check("composition_equivariance");
  for (std::size_t n = 0; n <= N; ++n)
    for (const auto& al : e.homs(n))
      for (std::size_t g = 0; g < G.order(); ++g)
        idf.expect(e.act(al, al, g, co_identity(d.operad(), n)) == co_identity(d.operad(), n), "g·id != id");
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t n = 0; n <= N; ++n)
      for (const auto& al : e.homs(m))
        for (const auto& be : e.homs(n))
          for (const auto& a : d.homs(m, n)) {
            act.expect(e.act(al, be, G.identity(), a) == a, "e·a != a at " + to_string(a));
            for (std::size_t g = 0; g < G.order(); ++g) {
              COMorphism ga = e.act(al, be, g, a);
              act.expect(d.contains(m, n, ga), "g·a leaves the hom set at " + to_string(a));
              for (std::size_t h = 0; h < G.order(); ++h)
                act.expect_lazy(e.act(al, be, g, e.act(al, be, h, a)) == e.act(al, be, G.mul(g, h), a),
                                [&] { return "g(ha) != (gh)a at " + to_string(a); });
            }
          }
  const Operad& op = d.operad();
  for (std::size_t l = 0; l <= N; ++l)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n)
        for (const auto& al : e.homs(l))
          for (const auto& be : e.homs(m))
            for (const auto& ga : e.homs(n))
              for (const auto& b : d.homs(l, m))
                for (const auto& a : d.homs(m, n))
                  for (std::size_t g = 0; g < G.order(); ++g)
                    comp.expect_lazy(e.act(al, ga, g, compose_co(op, a, b)) ==
                                         compose_co(op, e.act(be, ga, g, a), e.act(al, be, g, b)),
                                     [&] { return "g(a∘b) != (ga)∘(gb) at a=" + to_string(a) + " b=" + to_string(b); });
  return rep;
}

Report compare_with_fg(const EquivariantCO& e) {
  const CatOfOperators& d = e.base();
  const Operad& op = d.operad();
  for (std::size_t j = 0; j <= op.bound(); ++j)
    require(op.card(j) == 1, ErrorCode::Domain, "compare_with_fg needs the commutativity operad");
  const FiniteGroup& G = *e.group();
  Report rep("prolonged D(N) against F_G over " + G.name());
  auto& same = rep.check("hom_sets");
  auto& act = rep.check("conjugation_action");
  for (std::size_t m = 0; m <= d.bound(); ++m)
    for (std::size_t n = 0; n <= d.bound(); ++n) {
      auto fs = enumerate_homs(Kind::F, m, n);
      const auto& hs = d.homs(m, n);
      bool eq = fs.size() == hs.size();
      for (std::size_t i = 0; eq && i < fs.size(); ++i) eq = hs[i].phi == fs[i];
      same.expect(eq, "D(" + std::to_string(m) + "," + std::to_string(n) + ") differs from F");
      for (const auto& al : e.homs(m))
        for (const auto& be : e.homs(n))
          for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t g = 0; g < G.order(); ++g)
              act.expect_lazy(e.act(al, be, g, hs[i]).phi == conjugation_action(hs[i].phi, g, al, be),
                              [&] { return "action differs at " + to_string(hs[i].phi) + " g=" + std::to_string(g); });
    }
  return rep;
}

Report cross_check_goperad(const EquivariantCO& e, const GOperad& p) {
  const CatOfOperators& d = e.base();
  const Operad& op = d.operad();
  require(op == p.base(), ErrorCode::Domain, "cross_check_goperad: operads differ");
  const FiniteGroup& G = *e.group();
  const std::size_t N = std::min(d.bound(), p.bound());
  Report rep("G-operad through the category of operators");
  auto& act = rep.check("action");
  auto& gam = rep.check("gamma");
  auto& twist = rep.check("twisted_wedge");
  HomToSym triv1 = trivial_hom(e.group(), 1);
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t a = 0; a < p.homs(n).size(); ++a)
      for (std::size_t c = 0; c < op.card(n); ++c)
        for (std::size_t g = 0; g < G.order(); ++g) {
          COMorphism r = e.act(p.homs(n)[a], triv1, g, COMorphism{phi(n), {c}});
          act.expect(r.phi == phi(n) && r.c[0] == p.act(n, a, g, c), "action differs in arity " + std::to_string(n));
        }
  for (const auto& key : arity_tuples(N)) {
    std::size_t k = key.size(), j = std::accumulate(key.begin(), key.end(), std::size_t{0});
    if (k == 0) continue;
    std::vector<std::size_t> hrad;
    for (std::size_t x : key) hrad.push_back(p.homs(x).size());
    std::vector<std::size_t> erad{op.card(k)};
    for (std::size_t x : key) erad.push_back(op.card(x));
    for (std::size_t be = 0; be < p.homs(k).size(); ++be)
      for_each_digits(hrad, [&](const std::vector<std::size_t>& as) {
        std::vector<HomToSym> hs;
        for (std::size_t r = 0; r < k; ++r) hs.push_back(p.homs(key[r])[as[r]]);
        const HomToSym& beta = p.homs(k)[be];
        if (!composable(beta, hs)) return;
        HomToSym src = gamma_hom(beta, hs);
        for_each_digits(erad, [&](const std::vector<std::size_t>& cd) {
          std::vector<std::size_t> ds(cd.begin() + 1, cd.end());
          COMorphism w{BasedMap::identity(0), {}};
          for (std::size_t r = 0; r < k; ++r) w = co_wedge(w, COMorphism{phi(key[r]), {ds[r]}});
          COMorphism r = compose_co(op, COMorphism{phi(k), {cd[0]}}, w);
          auto direct = p.gamma(be, key, as, cd[0], ds);
          gam.expect(r.phi == phi(j) && r.c[0] == direct.element && direct.alpha == p.hom_index(src),
                     "γ_G differs at arities (" + join(key) + ")");
          for (std::size_t g = 0; g < G.order(); ++g) {
            Perm bi = beta(G.inverse(g));
            COMorphism w2{BasedMap::identity(0), {}};
            for (std::size_t s = 1; s <= k; ++s)
              w2 = co_wedge(w2, COMorphism{phi(key[s - 1]), {p.act(key[s - 1], as[s - 1], g, ds[bi[s] - 1])}});
            twist.expect_lazy(e.act(src, beta, g, w) == w2, [&] {
              return "g·wedge differs at arities (" + join(key) + ") g=" + std::to_string(g);
            });
          }
        });
      });
  }
  return rep;
}

}  // namespace opcat
