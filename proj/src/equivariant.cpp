#include "opcat/equivariant.hpp"

#include <algorithm>
#include <set>

#include "opcat/error.hpp"

namespace opcat {

BasedMap conjugation_action(const BasedMap& f, std::size_t g, const HomToSym& alpha,
                            const HomToSym& beta) {
  require(alpha.degree == f.source() && beta.degree == f.target(), ErrorCode::Domain,
          "conjugation_action: degree mismatch");
  std::size_t ginv = alpha.group->inverse(g);
  const Perm& a = alpha(ginv);
  const Perm& b = beta(g);
  std::vector<std::size_t> t(f.source() + 1, 0);
  for (std::size_t i = 1; i <= f.source(); ++i) t[i] = b[f(a[i])];
  return BasedMap(f.source(), f.target(), std::move(t));
}

bool composable(const HomToSym& beta, const std::vector<HomToSym>& alphas) {
  if (!(alphas.size() == beta.degree)) fail(ErrorCode::Domain,
          "composable: expected " + std::to_string(beta.degree) + " homomorphisms");
  for (std::size_t g = 0; g < beta.group->order(); ++g)
    for (std::size_t r = 1; r <= beta.degree; ++r) {
      std::size_t s = beta(g)[r];
      if (alphas[r - 1].degree != alphas[s - 1].degree) return false;
      if (!(alphas[r - 1] == alphas[s - 1])) return false;
    }
  return true;
}

HomToSym gamma_hom(const HomToSym& beta, const std::vector<HomToSym>& alphas) {
  require(composable(beta, alphas), ErrorCode::Domain, "gamma_hom: tuple is not composable");
  std::size_t k = beta.degree;
  std::vector<std::size_t> off(k + 1, 0);
  std::size_t j = 0;
  for (std::size_t r = 1; r <= k; ++r) {
    off[r] = j;
    j += alphas[r - 1].degree;
  }
  std::vector<Perm> images;
  for (std::size_t g = 0; g < beta.group->order(); ++g) {
    Perm p(j + 1, 0);
    for (std::size_t r = 1; r <= k; ++r) {
      std::size_t s = beta(g)[r];
      const Perm& a = alphas[r - 1](g);
      for (std::size_t t = 1; t <= alphas[r - 1].degree; ++t) p[off[r] + t] = off[s] + a[t];
    }
    images.push_back(std::move(p));
  }
  return validate_hom(beta.group, j, std::move(images));
}

std::size_t semidirect_act(const Perm& sigma, std::size_t g, const HomToSym& alpha, std::size_t i) {
  return sigma[alpha(g)[i]];
}

std::vector<GraphSubgroup> graph_family(const FiniteGroup& g, std::size_t n) {
  std::vector<GraphSubgroup> out;
  std::set<std::vector<std::pair<std::size_t, Perm>>> seen;
  for (const auto& h : g.subgroups()) {
    for (auto& imgs : homs_on_subgroup(g, h, n)) {
      GraphSubgroup gs;
      gs.subgroup = h;
      for (std::size_t i = 0; i < h.size(); ++i) gs.elements.emplace_back(h[i], imgs[i]);
      std::sort(gs.elements.begin(), gs.elements.end());
      gs.images = std::move(imgs);
      if (seen.insert(gs.elements).second) out.push_back(std::move(gs));
    }
  }
  return out;
}

bool is_graph_subgroup(const FiniteGroup& g, std::size_t n, const GraphSubgroup& gs) {
  std::set<std::pair<std::size_t, Perm>> s(gs.elements.begin(), gs.elements.end());
  Perm id = perm_identity(n);
  for (const auto& [h, p] : gs.elements)
    if (h == g.identity() && p != id) return false;  // Γ ∩ Σ_n = {e}
  if (!s.count({g.identity(), id})) return false;
  for (const auto& [a, p] : gs.elements)
    for (const auto& [b, q] : gs.elements)
      if (!s.count({g.mul(a, b), perm_compose(p, q)})) return false;
  return true;
}

std::vector<std::size_t> BasedGSet::fixed_points(const std::vector<std::size_t>& subgroup) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x <= size; ++x) {
    bool fixed = true;
    for (std::size_t h : subgroup) fixed = fixed && act[h][x] == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

BasedGSet validate_gset(GroupPtr g, std::size_t size, std::vector<std::vector<std::size_t>> act) {
  require(act.size() == g->order(), ErrorCode::Validation, "action: one row per group element");
  for (const auto& row : act) {
    if (!(row.size() == size + 1)) fail(ErrorCode::Validation, "action: row length must be size+1");
    require(row[0] == 0, ErrorCode::Validation, "action: basepoint must be fixed");
    for (std::size_t v : row) require(v <= size, ErrorCode::Validation, "action: entry out of range");
  }
  for (std::size_t x = 0; x <= size; ++x)
    require(act[g->identity()][x] == x, ErrorCode::Validation, "action: identity must act trivially");
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b)
      for (std::size_t x = 0; x <= size; ++x)
        if (!(act[g->mul(a, b)][x] == act[a][act[b][x]])) fail(ErrorCode::Validation,
                "action: not a group action at g=" + std::to_string(a) + ", h=" + std::to_string(b));
  return BasedGSet{std::move(g), size, std::move(act)};
}

BasedGSet gset_from_hom(const HomToSym& alpha) {
  std::vector<std::vector<std::size_t>> act(alpha.images.begin(), alpha.images.end());
  return validate_gset(alpha.group, alpha.degree, std::move(act));
}

BasedGSet trivial_gset(GroupPtr g, std::size_t size) {
  std::vector<std::size_t> row(size + 1);
  for (std::size_t i = 0; i <= size; ++i) row[i] = i;
  std::vector<std::vector<std::size_t>> act(g->order(), row);
  return BasedGSet{std::move(g), size, std::move(act)};
}

namespace {

template <class Visit>
void for_each_tuple(std::size_t n, std::size_t top, Visit visit) {
  std::vector<std::size_t> t(n, 0);
  while (true) {
    visit(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] == top) t[--i] = 0;
    if (i == 0) return;
    ++t[i - 1];
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> twisted_power_fixed_points(const BasedGSet& x,
                                                                 const HomToSym& alpha) {
  require(x.group->order() == alpha.group->order(), ErrorCode::Domain,
          "twisted power: group mismatch");
  std::size_t n = alpha.degree;
  const FiniteGroup& g = *x.group;
  std::vector<std::vector<std::size_t>> out;
  for_each_tuple(n, x.size, [&](const std::vector<std::size_t>& t) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      const Perm& p = alpha(g.inverse(a));
      for (std::size_t i = 1; i <= n; ++i)
        if (x(a, t[p[i] - 1]) != t[i - 1]) return;
    }
    out.push_back(t);
  });
  return out;
}

std::vector<std::vector<std::size_t>> graph_fixed_points(const BasedGSet& x, const HomToSym& alpha) {
  std::size_t n = alpha.degree;
  const FiniteGroup& g = *x.group;
  std::vector<std::pair<std::size_t, Perm>> graph;
  for (std::size_t a = 0; a < g.order(); ++a) graph.emplace_back(a, alpha(a));
  std::vector<std::vector<std::size_t>> out;
  for_each_tuple(n, x.size, [&](const std::vector<std::size_t>& t) {
    for (const auto& [h, sigma] : graph) {
      Perm inv = perm_inverse(sigma);
      for (std::size_t i = 1; i <= n; ++i)
        if (x(h, t[inv[i] - 1]) != t[i - 1]) return;
    }
    out.push_back(t);
  });
  return out;
}

OrbitCategory::OrbitCategory(GroupPtr g) : group_(std::move(g)) {
  subgroups_ = group_->subgroups();
  std::size_t n = subgroups_.size();
  cosets_.resize(n);
  coset_of_.assign(n, std::vector<std::size_t>(group_->order(), 0));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<bool> done(group_->order(), false);
    for (std::size_t a = 0; a < group_->order(); ++a) {
      if (done[a]) continue;
      std::vector<std::size_t> c;
      for (std::size_t x : subgroups_[k]) c.push_back(group_->mul(a, x));
      std::sort(c.begin(), c.end());
      for (std::size_t x : c) {
        done[x] = true;
        coset_of_[k][x] = cosets_[k].size();
      }
      cosets_[k].push_back(std::move(c));
    }
  }
  homs_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < cosets_[k].size(); ++c) {
        bool fixed = true;
        for (std::size_t x : subgroups_[h]) fixed = fixed && coset_of_[k][group_->mul(x, rep(k, c))] == c;
        if (fixed) homs_[h][k].push_back(c);
      }
}

std::size_t OrbitCategory::compose(std::size_t, std::size_t k, std::size_t l, std::size_t f_prime,
                                   std::size_t f) const {
  return coset_of_[l][group_->mul(rep(k, f), rep(l, f_prime))];
}

namespace {

std::size_t hom_position(const OrbitCategory& oc, std::size_t h, std::size_t k, std::size_t c) {
  const auto& hs = oc.homs(h, k);
  auto it = std::lower_bound(hs.begin(), hs.end(), c);
  require(it != hs.end() && *it == c, ErrorCode::Internal, "orbit category: not a morphism");
  return static_cast<std::size_t>(it - hs.begin());
}

}  // namespace

void validate_presheaf(const OrbitCategory& oc, const OrbitalPresheaf& p) {
  std::size_t n = oc.num_objects();
  require(p.sizes.size() == n, ErrorCode::Validation, "presheaf: one size per orbit");
  require(p.restrict.size() == n, ErrorCode::Validation, "presheaf: restriction table shape");
  for (std::size_t h = 0; h < n; ++h) {
    require(p.restrict[h].size() == n, ErrorCode::Validation, "presheaf: restriction table shape");
    for (std::size_t k = 0; k < n; ++k) {
      require(p.restrict[h][k].size() == oc.homs(h, k).size(), ErrorCode::Validation,
              "presheaf: one table per orbit morphism");
      for (const auto& t : p.restrict[h][k]) {
        require(t.size() == p.sizes[k] + 1 && t[0] == 0, ErrorCode::Validation,
                "presheaf: restriction must be a based map P(G/K) -> P(G/H)");
        for (std::size_t v : t) require(v <= p.sizes[h], ErrorCode::Validation, "presheaf: entry out of range");
      }
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    const auto& id = p.restrict[h][h][hom_position(oc, h, h, oc.identity(h))];
    for (std::size_t x = 0; x <= p.sizes[h]; ++x)
      require(id[x] == x, ErrorCode::Validation, "presheaf: identities must act trivially");
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < oc.homs(h, k).size(); ++i)
          for (std::size_t j = 0; j < oc.homs(k, l).size(); ++j) {
            std::size_t f = oc.homs(h, k)[i], fp = oc.homs(k, l)[j];
            std::size_t c = oc.compose(h, k, l, fp, f);
            const auto& pc = p.restrict[h][l][hom_position(oc, h, l, c)];
            const auto& pf = p.restrict[h][k][i];
            const auto& pfp = p.restrict[k][l][j];
            for (std::size_t x = 0; x <= p.sizes[l]; ++x)
              require(pc[x] == pf[pfp[x]], ErrorCode::Validation,
                      "presheaf: restriction does not respect composition");
          }
}

OrbitalPresheaf fixed_point_presheaf(const OrbitCategory& oc, const BasedGSet& x) {
  std::size_t n = oc.num_objects();
  OrbitalPresheaf p;
  p.labels.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    p.labels[h] = x.fixed_points(oc.subgroup(h));
    p.sizes.push_back(p.labels[h].size() - 1);
  }
  p.restrict.assign(n, std::vector<std::vector<std::vector<std::size_t>>>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c : oc.homs(h, k)) {
        std::size_t g = oc.rep(k, c);
        std::vector<std::size_t> t;
        for (std::size_t v : p.labels[k]) {
          std::size_t gv = x(g, v);
          auto it = std::lower_bound(p.labels[h].begin(), p.labels[h].end(), gv);
          require(it != p.labels[h].end() && *it == gv, ErrorCode::Internal,
                  "fixed point presheaf: restriction leaves the fixed points");
          t.push_back(static_cast<std::size_t>(it - p.labels[h].begin()));
        }
        p.restrict[h][k].push_back(std::move(t));
      }
  return p;
}

BasedGSet evaluate_at_e(const OrbitCategory& oc, const OrbitalPresheaf& p) {
  const FiniteGroup& g = oc.group();
  std::size_t e = oc.trivial_object();
  std::vector<std::vector<std::size_t>> act;
  for (std::size_t a = 0; a < g.order(); ++a)
    act.push_back(p.restrict[e][e][hom_position(oc, e, e, oc.coset_of(e, a))]);
  return validate_gset(oc.group_ptr(), p.sizes[e], std::move(act));
}

SpecialReport strictly_special(const OrbitCategory& oc, const OrbitalPresheaf& p) {
  SpecialReport rep;
  BasedGSet lp = evaluate_at_e(oc, p);
  std::size_t e = oc.trivial_object();
  for (std::size_t h = 0; h < oc.num_objects(); ++h) {
    const auto& eta = p.restrict[e][h][hom_position(oc, e, h, oc.projection(h))];
    std::vector<std::size_t> fixed = lp.fixed_points(oc.subgroup(h));
    std::set<std::size_t> image(eta.begin(), eta.end());
    bool lands = std::all_of(eta.begin(), eta.end(), [&](std::size_t v) {
      return std::binary_search(fixed.begin(), fixed.end(), v);
    });
    bool bijective = image.size() == eta.size() && image.size() == fixed.size();
    if (!lands || !bijective) {
      rep.strictly_special = false;
      rep.failures.push_back("eta at orbit " + std::to_string(h) + ": |P(G/H)| = " +
                             std::to_string(eta.size()) + ", |(LP)^H| = " + std::to_string(fixed.size()) +
                             (lands ? "" : ", image leaves the fixed points"));
    }
  }
  return rep;
}

}  // namespace opcat
