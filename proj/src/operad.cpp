#include "opcat/operad.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"
#include "opcat/util.hpp"

namespace opcat {

namespace {

std::size_t sum_of(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// radices (card(k), card(j_1), ..., card(j_k)) for a gamma key
std::vector<std::size_t> gamma_radix(const std::vector<std::size_t>& card, const std::vector<std::size_t>& key) {
  std::vector<std::size_t> r{card[key.size()]};
  for (std::size_t j : key) r.push_back(card[j]);
  return r;
}

std::string key_str(const std::vector<std::size_t>& key) { return "(" + join(key) + ")"; }

}  // namespace

Operad::Operad(std::string name, std::size_t bound, std::vector<std::size_t> card, std::size_t unit,
               SigmaTables sigma, GammaTables gamma)
    : name_(std::move(name)), bound_(bound), card_(std::move(card)), unit_(unit),
      sigma_(std::move(sigma)), gamma_(std::move(gamma)) {
  const std::string where = "operad '" + name_ + "': ";
  if (!(bound_ >= 1)) fail(ErrorCode::Validation, where + "arity bound must be at least 1");
  if (!(card_.size() == bound_ + 1)) fail(ErrorCode::Validation, where + "carriers must cover arities 0..bound");
  if (!(card_[0] == 1)) fail(ErrorCode::Validation, where + "C(0) must be a single point");
  for (std::size_t j = 1; j <= bound_; ++j)
    if (!(card_[j] >= 1)) fail(ErrorCode::Validation, where + "C(" + std::to_string(j) + ") is empty");
  if (!(unit_ < card_[1])) fail(ErrorCode::Validation, where + "unit out of range");
  if (!(sigma_.size() == bound_ + 1)) fail(ErrorCode::Validation, where + "sigma tables must cover arities 0..bound");
  for (std::size_t j = 0; j <= bound_; ++j) {
    if (!(sigma_[j].size() == factorial(j))) fail(ErrorCode::Validation,
            where + "sigma[" + std::to_string(j) + "] needs one row per permutation");
    for (const auto& row : sigma_[j]) {
      if (!(row.size() == card_[j])) fail(ErrorCode::Validation,
              where + "sigma[" + std::to_string(j) + "] row has wrong length");
      for (std::size_t v : row)
        if (!(v < card_[j])) fail(ErrorCode::Validation, where + "sigma[" + std::to_string(j) + "] value out of range");
    }
  }
  for (const auto& key : arity_tuples(bound_)) {
    auto it = gamma_.find(key);
    if (!(it != gamma_.end())) fail(ErrorCode::Validation, where + "gamma table missing for arities " + key_str(key));
    std::size_t size = 1;
    for (std::size_t r : gamma_radix(card_, key)) size *= r;
    if (!(it->second.size() == size)) fail(ErrorCode::Validation,
            where + "gamma table for " + key_str(key) + " has wrong size");
    std::size_t target = card_[sum_of(key)];
    for (std::size_t v : it->second)
      if (!(v < target)) fail(ErrorCode::Validation, where + "gamma value out of range for " + key_str(key));
  }
  if (!(gamma_.size() == arity_tuples(bound_).size())) fail(ErrorCode::Validation,
          where + "gamma has tables outside the arity bound");
}

std::size_t Operad::act(std::size_t j, std::size_t c, const Perm& sigma) const {
  require(perm_degree(sigma) == j, ErrorCode::Domain, "operad action: permutation degree mismatch");
  return sigma_[j][perm_rank(sigma)][c];
}

bool Operad::gamma_defined(const std::vector<std::size_t>& arities) const {
  return arities.size() <= bound_ && sum_of(arities) <= bound_;
}

std::size_t Operad::gamma(std::size_t c, const std::vector<std::size_t>& arities,
                          const std::vector<std::size_t>& ds) const {
  if (!(gamma_defined(arities))) fail(ErrorCode::Bound, "gamma beyond arity bound " + std::to_string(bound_));
  require(ds.size() == arities.size(), ErrorCode::Domain, "gamma: arity list and inputs differ in length");
  const auto& t = gamma_.at(arities);
  std::size_t idx = c;
  for (std::size_t r = 0; r < ds.size(); ++r) idx = idx * card_[arities[r]] + ds[r];
  return t[idx];
}

std::vector<std::vector<std::size_t>> arity_tuples(std::size_t bound) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    out.push_back(cur);
    if (cur.size() == bound) return;
    for (std::size_t j = 0; j <= left; ++j) {
      cur.push_back(j);
      self(self, left - j);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

// All tuples of the given length with entries summing to at most `left`.
std::vector<std::vector<std::size_t>> tuples_of_length(std::size_t len, std::size_t left) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t rem) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j <= rem; ++j) {
      cur.push_back(j);
      self(self, rem - j);
      cur.pop_back();
    }
  };
  rec(rec, left);
  return out;
}

}  // namespace

Report check_operad(const Operad& o) {
  Report rep("operad " + o.name());
  rep.info()["arity_bound"] = o.bound();
  rep.info()["cards"] = o.cards();
  const std::size_t J = o.bound();

  auto& sig = rep.check("sigma_action");
  for (std::size_t j = 0; j <= J; ++j) {
    const auto& ps = all_perms(j);
    for (std::size_t c = 0; c < o.card(j); ++c) {
      sig.expect_lazy(o.act_rank(j, c, 0) == c, [&] { return "c" + std::to_string(c) + "·id != c in arity " + std::to_string(j); });
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < ps.size(); ++b) {
          std::size_t lhs = o.act_rank(j, o.act_rank(j, c, a), b);
          std::size_t rhs = o.act_rank(j, c, perm_rank(perm_compose(ps[a], ps[b])));
          sig.expect_lazy(lhs == rhs, [&] {
            return "arity " + std::to_string(j) + ": (c·σ)·τ != c·(στ) at c=" + std::to_string(c) +
                   " σ=" + bracket(ps[a]) + " τ=" + bracket(ps[b]);
          });
        }
    }
  }

  auto& unit = rep.check("unit");
  for (std::size_t j = 0; j <= J; ++j)
    for (std::size_t d = 0; d < o.card(j); ++d) {
      std::size_t v = o.gamma(o.unit(), {j}, {d});
      unit.expect_lazy(v == d, [&] { return "γ(1;d) != d for d=" + std::to_string(d) + " in arity " + std::to_string(j); });
    }
  for (std::size_t k = 0; k <= J; ++k) {
    std::vector<std::size_t> ones(k, 1), units(k, o.unit());
    for (std::size_t c = 0; c < o.card(k); ++c) {
      std::size_t v = o.gamma(c, ones, units);
      unit.expect_lazy(v == c, [&] { return "γ(c;1..1) != c for c=" + std::to_string(c) + " in arity " + std::to_string(k); });
    }
  }

  // γ(γ(c;d);e) = γ(c; γ(d_1;e_1..), …, γ(d_k;e_..))
  auto& assoc = rep.check("associativity");
  const auto& card = o.cards();
  for (const auto& outer : arity_tuples(J)) {
    std::size_t k = outer.size(), j = sum_of(outer);
    if (k == 0) continue;
    const auto& t_outer = o.gamma_tables().at(outer);
    std::vector<std::size_t> rad_outer = gamma_radix(card, outer);
    for (const auto& inner : tuples_of_length(j, J)) {
      const auto& t_inner = o.gamma_tables().at(inner);
      std::vector<std::size_t> block_sum(k, 0);
      std::vector<std::vector<std::size_t>> block_keys(k);
      std::size_t pos = 0;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t t = 0; t < outer[r]; ++t) block_keys[r].push_back(inner[pos++]);
        block_sum[r] = sum_of(block_keys[r]);
      }
      const auto& t_rhs = o.gamma_tables().at(block_sum);
      std::vector<const std::vector<std::size_t>*> t_blocks(k);
      for (std::size_t r = 0; r < k; ++r) t_blocks[r] = &o.gamma_tables().at(block_keys[r]);
      std::vector<std::size_t> rad_inner;
      for (std::size_t i : inner) rad_inner.push_back(card[i]);

      for_each_digits(rad_outer, [&](const std::vector<std::size_t>& cd) {
        std::size_t cdval = t_outer[mixed_index(rad_outer, cd)];
        for_each_digits(rad_inner, [&](const std::vector<std::size_t>& e) {
          std::size_t lidx = cdval;
          for (std::size_t s = 0; s < j; ++s) lidx = lidx * card[inner[s]] + e[s];
          std::size_t lhs = t_inner[lidx];
          std::size_t ridx = cd[0];
          std::size_t p = 0;
          for (std::size_t r = 0; r < k; ++r) {
            std::size_t bidx = cd[r + 1];
            for (std::size_t t = 0; t < outer[r]; ++t, ++p) bidx = bidx * card[inner[p]] + e[p];
            ridx = ridx * card[block_sum[r]] + (*t_blocks[r])[bidx];
          }
          std::size_t rhs = t_rhs[ridx];
          assoc.expect_lazy(lhs == rhs, [&] {
            return "arities " + key_str(outer) + " then " + key_str(inner) + ": c=" + std::to_string(cd[0]) +
                   " d=" + bracket(std::vector<std::size_t>(cd.begin() + 1, cd.end())) + " e=" + bracket(e);
          });
        });
      });
    }
  }

  // γ(cσ; d) = γ(c; d_{σ⁻¹(1)}, …, d_{σ⁻¹(k)}) · σ⟨j_1..j_k⟩
  auto& eqa = rep.check("equivariance_a");
  for (const auto& key : arity_tuples(J)) {
    std::size_t k = key.size(), j = sum_of(key);
    std::vector<std::size_t> rad = gamma_radix(card, key);
    for (const Perm& s : all_perms(k)) {
      std::size_t srank = perm_rank(s);
      Perm si = perm_inverse(s);
      std::vector<std::size_t> pkey(k);
      for (std::size_t q = 1; q <= k; ++q) pkey[q - 1] = key[si[q] - 1];
      std::size_t brank = perm_rank(perm_block(s, key));
      for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
        std::vector<std::size_t> ds(cd.begin() + 1, cd.end()), pds(k);
        for (std::size_t q = 1; q <= k; ++q) pds[q - 1] = ds[si[q] - 1];
        std::size_t lhs = o.gamma(o.act_rank(k, cd[0], srank), key, ds);
        std::size_t rhs = o.act_rank(j, o.gamma(cd[0], pkey, pds), brank);
        eqa.expect_lazy(lhs == rhs, [&] {
          return "arities " + key_str(key) + " σ=" + bracket(s) + " c=" + std::to_string(cd[0]) + " d=" + bracket(ds);
        });
      });
    }
  }

  // γ(c; d_1τ_1, …, d_kτ_k) = γ(c; d)·(τ_1 ⊕ … ⊕ τ_k)
  auto& eqb = rep.check("equivariance_b");
  for (const auto& key : arity_tuples(J)) {
    std::size_t k = key.size(), j = sum_of(key);
    std::vector<std::size_t> rad = gamma_radix(card, key);
    std::vector<std::size_t> trad;
    for (std::size_t x : key) trad.push_back(factorial(x));
    for_each_digits(trad, [&](const std::vector<std::size_t>& taus) {
      std::vector<Perm> blocks;
      for (std::size_t r = 0; r < k; ++r) blocks.push_back(all_perms(key[r])[taus[r]]);
      std::size_t srank = perm_rank(perm_block_sum(blocks));
      for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
        std::vector<std::size_t> ds(cd.begin() + 1, cd.end()), tds(k);
        for (std::size_t r = 0; r < k; ++r) tds[r] = o.act_rank(key[r], ds[r], taus[r]);
        std::size_t lhs = o.gamma(cd[0], key, tds);
        std::size_t rhs = o.act_rank(j, o.gamma(cd[0], key, ds), srank);
        eqb.expect_lazy(lhs == rhs, [&] {
          return "arities " + key_str(key) + " τ ranks=" + bracket(taus) + " c=" + std::to_string(cd[0]) + " d=" + bracket(ds);
        });
      });
    });
  }
  return rep;
}

// ---- standard operads ----

Operad commutativity_operad(std::size_t bound) {
  std::vector<std::size_t> card(bound + 1, 1);
  Operad::SigmaTables sigma(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j) sigma[j].assign(factorial(j), std::vector<std::size_t>{0});
  Operad::GammaTables gamma;
  for (const auto& key : arity_tuples(bound)) gamma[key] = {0};
  return Operad("N", bound, std::move(card), 0, std::move(sigma), std::move(gamma));
}

const Perm& assoc_element(std::size_t j, std::size_t c) { return all_perms(j).at(c); }

Operad associativity_operad(std::size_t bound) {
  std::vector<std::size_t> card(bound + 1);
  Operad::SigmaTables sigma(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j) {
    const auto& ps = all_perms(j);
    card[j] = ps.size();
    sigma[j].assign(ps.size(), std::vector<std::size_t>(ps.size()));
    for (std::size_t s = 0; s < ps.size(); ++s)
      for (std::size_t c = 0; c < ps.size(); ++c) sigma[j][s][c] = perm_rank(perm_compose(ps[c], ps[s]));
  }
  Operad::GammaTables gamma;
  for (const auto& key : arity_tuples(bound)) {
    std::vector<std::size_t> rad = gamma_radix(card, key);
    std::vector<std::size_t> table;
    for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
      std::vector<Perm> blocks;
      for (std::size_t r = 0; r < key.size(); ++r) blocks.push_back(all_perms(key[r])[cd[r + 1]]);
      Perm p = perm_compose(perm_block(all_perms(key.size())[cd[0]], key), perm_block_sum(blocks));
      table.push_back(perm_rank(p));
    });
    gamma[key] = std::move(table);
  }
  Operad o("M", bound, card, 0, std::move(sigma), std::move(gamma));
  o.names.resize(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j)
    for (const Perm& p : all_perms(j)) o.names[j].push_back(bracket(std::vector<std::size_t>(p.begin() + 1, p.end())));
  return o;
}

Operad endomorphism_operad(std::size_t points, std::size_t bound) {
  require(points >= 1, ErrorCode::Domain, "endomorphism operad needs a nonempty set");
  const std::size_t P = points;
  // element of C(j): table over X^j (mixed radix, x_1 most significant) with entry 0 fixed to 0;
  // encoded in base P over entries 1..P^j-1, entry 1 most significant
  std::vector<std::size_t> card(bound + 1);
  std::vector<std::vector<std::vector<std::size_t>>> tables(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j) {
    std::size_t n = ipow(P, j);
    require(n - 1 < 64 && ipow(P, n - 1) <= (1u << 20), ErrorCode::Bound, "endomorphism operad too large");
    card[j] = ipow(P, n - 1);
    std::vector<std::size_t> rad(n - 1, P);
    for_each_digits(rad, [&](const std::vector<std::size_t>& d) {
      std::vector<std::size_t> t{0};
      t.insert(t.end(), d.begin(), d.end());
      tables[j].push_back(std::move(t));
    });
  }
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < t.size(); ++i) idx = idx * P + t[i];
    return idx;
  };
  auto decode_tuple = [&](std::size_t x, std::size_t j) {
    std::vector<std::size_t> v(j);
    for (std::size_t i = j; i-- > 0;) {
      v[i] = x % P;
      x /= P;
    }
    return v;
  };
  Operad::SigmaTables sigma(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j) {
    const auto& ps = all_perms(j);
    std::size_t n = ipow(P, j);
    sigma[j].assign(ps.size(), std::vector<std::size_t>(card[j]));
    for (std::size_t s = 0; s < ps.size(); ++s) {
      // (f·σ)(x) = f(σx), (σx)_i = x_{σ⁻¹(i)}
      Perm si = perm_inverse(ps[s]);
      std::vector<std::size_t> move(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto v = decode_tuple(x, j);
        std::vector<std::size_t> w(j);
        for (std::size_t i = 1; i <= j; ++i) w[i - 1] = v[si[i] - 1];
        move[x] = mixed_index(std::vector<std::size_t>(j, P), w);
      }
      for (std::size_t c = 0; c < card[j]; ++c) {
        std::vector<std::size_t> t(n);
        for (std::size_t x = 0; x < n; ++x) t[x] = tables[j][c][move[x]];
        sigma[j][s][c] = encode(t);
      }
    }
  }
  Operad::GammaTables gamma;
  for (const auto& key : arity_tuples(bound)) {
    std::size_t k = key.size(), j = sum_of(key), n = ipow(P, j);
    // split each x ∈ X^j into block tuples
    std::vector<std::vector<std::size_t>> parts(n, std::vector<std::size_t>(k));
    for (std::size_t x = 0; x < n; ++x) {
      auto v = decode_tuple(x, j);
      std::size_t pos = 0;
      for (std::size_t r = 0; r < k; ++r) {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < key[r]; ++t) idx = idx * P + v[pos++];
        parts[x][r] = idx;
      }
    }
    std::vector<std::size_t> rad = gamma_radix(card, key);
    std::vector<std::size_t> table;
    std::vector<std::size_t> out(n), y(k);
    for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
      const auto& f = tables[k][cd[0]];
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t r = 0; r < k; ++r) y[r] = tables[key[r]][cd[r + 1]][parts[x][r]];
        out[x] = f[mixed_index(std::vector<std::size_t>(k, P), y)];
      }
      table.push_back(encode(out));
    });
    gamma[key] = std::move(table);
  }
  std::vector<std::size_t> id(P);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::size_t unit = bound >= 1 ? encode(id) : 0;
  return Operad("End" + std::to_string(P), bound, std::move(card), unit, std::move(sigma), std::move(gamma));
}

// ---- G-operads ----

GOperad::GOperad(OperadPtr base, GroupPtr group) : base_(std::move(base)), group_(std::move(group)) {
  for (std::size_t n = 0; n <= base_->bound(); ++n) homs_.push_back(enumerate_homs_to_sym(group_, n));
}

std::size_t GOperad::hom_index(const HomToSym& a) const {
  require(a.degree <= bound(), ErrorCode::Bound, "hom degree beyond arity bound");
  const auto& hs = homs_[a.degree];
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i] == a) return i;
  fail(ErrorCode::Domain, "not a homomorphism to the symmetric group");
}

std::size_t GOperad::act(std::size_t n, std::size_t alpha, std::size_t g, std::size_t c) const {
  const HomToSym& a = homs_[n][alpha];
  return base_->act(n, base_->gaction(n, g, c), perm_inverse(a(g)));
}

GOperad::Result GOperad::gamma(std::size_t beta, const std::vector<std::size_t>& arities,
                               const std::vector<std::size_t>& alphas, std::size_t c,
                               const std::vector<std::size_t>& ds) const {
  std::size_t k = arities.size();
  require(alphas.size() == k && ds.size() == k, ErrorCode::Domain, "gamma_G: argument lengths differ");
  require(base_->gamma_defined(arities), ErrorCode::Bound, "gamma_G beyond arity bound");
  std::vector<HomToSym> as;
  for (std::size_t r = 0; r < k; ++r) as.push_back(homs_[arities[r]][alphas[r]]);
  const HomToSym& b = homs_[k][beta];
  require(composable(b, as), ErrorCode::Domain, "gamma_G: tuple is not composable");
  HomToSym h = gamma_hom(b, as);
  return Result{h.degree, hom_index(h), base_->gamma(c, arities, ds)};
}

GOperad prolong_operad(OperadPtr c, GroupPtr g) {
  require(c != nullptr && g != nullptr, ErrorCode::Domain, "prolong_operad: missing input");
  if (c->group) require(*c->group == *g, ErrorCode::Validation, "prolong_operad: operad carries a different group");
  const Operad& o = *c;
  if (!o.gact.empty()) {
    require(o.gact.size() == o.bound() + 1, ErrorCode::Validation, "G-action tables must cover every arity");
    for (std::size_t j = 0; j <= o.bound(); ++j) {
      require(o.gact[j].size() == g->order(), ErrorCode::Validation, "G-action needs one row per group element");
      for (std::size_t x = 0; x < g->order(); ++x) {
        require(o.gact[j][x].size() == o.card(j), ErrorCode::Validation, "G-action row has wrong length");
        for (std::size_t y = 0; y < g->order(); ++y)
          for (std::size_t e = 0; e < o.card(j); ++e)
            if (!(o.gact[j][x][o.gact[j][y][e]] == o.gact[j][g->mul(x, y)][e])) fail(ErrorCode::Validation,
                    "G-action is not an action in arity " + std::to_string(j));
        for (std::size_t e = 0; e < o.card(j); ++e)
          for (std::size_t s = 0; s < factorial(j); ++s)
            if (!(o.gact[j][x][o.act_rank(j, e, s)] == o.act_rank(j, o.gact[j][x][e], s))) fail(ErrorCode::Validation,
                    "G-action does not commute with the symmetric group action in arity " + std::to_string(j));
      }
    }
    for (const auto& key : arity_tuples(o.bound())) {
      std::vector<std::size_t> rad = gamma_radix(o.cards(), key);
      for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
        std::vector<std::size_t> ds(cd.begin() + 1, cd.end());
        std::size_t v = o.gamma(cd[0], key, ds);
        for (std::size_t x = 0; x < g->order(); ++x) {
          std::vector<std::size_t> gds(ds.size());
          for (std::size_t r = 0; r < ds.size(); ++r) gds[r] = o.gaction(key[r], x, ds[r]);
          if (!(o.gaction(sum_of(key), x, v) == o.gamma(o.gaction(key.size(), x, cd[0]), key, gds))) fail(ErrorCode::Validation, "G-action is not compatible with gamma at arities " + key_str(key));
        }
      });
    }
  }
  return GOperad(std::move(c), std::move(g));
}

Operad restrict_goperad(const GOperad& p) {
  const Operad& b = p.base();
  const std::size_t J = p.bound();
  GroupPtr g = p.group();
  std::vector<std::size_t> card(J + 1), triv(J + 1);
  for (std::size_t n = 0; n <= J; ++n) {
    triv[n] = p.hom_index(trivial_hom(g, n));
    card[n] = p.card(n, triv[n]);
  }
  Operad::SigmaTables sigma(J + 1);
  for (std::size_t n = 0; n <= J; ++n) {
    const auto& ps = all_perms(n);
    sigma[n].assign(ps.size(), std::vector<std::size_t>(card[n]));
    for (std::size_t s = 0; s < ps.size(); ++s)
      for (std::size_t c = 0; c < card[n]; ++c) sigma[n][s][c] = p.right(n, c, ps[s]);
  }
  Operad::GammaTables gamma;
  for (const auto& key : arity_tuples(J)) {
    std::vector<std::size_t> alphas;
    for (std::size_t j : key) alphas.push_back(triv[j]);
    std::vector<std::size_t> rad = gamma_radix(card, key);
    std::vector<std::size_t> table;
    for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
      auto r = p.gamma(triv[key.size()], key, alphas, cd[0], std::vector<std::size_t>(cd.begin() + 1, cd.end()));
      table.push_back(r.element);
    });
    gamma[key] = std::move(table);
  }
  Operad o(b.name(), J, std::move(card), b.unit(), std::move(sigma), std::move(gamma));
  o.names = b.names;
  if (!b.gact.empty()) {
    o.group = g;
    o.gact.resize(J + 1);
    for (std::size_t n = 0; n <= J; ++n) {
      o.gact[n].assign(g->order(), std::vector<std::size_t>(o.card(n)));
      for (std::size_t x = 0; x < g->order(); ++x)
        for (std::size_t c = 0; c < o.card(n); ++c) o.gact[n][x][c] = p.act(n, triv[n], x, c);
    }
  }
  return o;
}

Report check_goperad(const GOperad& p) {
  const Operad& b = p.base();
  const FiniteGroup& G = *p.group();
  const std::size_t J = p.bound();
  Report rep("G-operad " + b.name() + " over " + G.name());
  rep.info()["arity_bound"] = J;
  std::vector<std::size_t> nhoms;
  for (std::size_t n = 0; n <= J; ++n) nhoms.push_back(p.homs(n).size());
  rep.info()["homs_per_arity"] = nhoms;

  auto& act = rep.check("left_action");
  auto& semi = rep.check("semidirect");
  for (std::size_t n = 0; n <= J; ++n)
    for (std::size_t a = 0; a < p.homs(n).size(); ++a) {
      const HomToSym& al = p.homs(n)[a];
      for (std::size_t c = 0; c < p.card(n, a); ++c) {
        act.expect(p.act(n, a, G.identity(), c) == c, "identity moves c=" + std::to_string(c));
        for (std::size_t x = 0; x < G.order(); ++x) {
          for (std::size_t y = 0; y < G.order(); ++y)
            act.expect_lazy(p.act(n, a, x, p.act(n, a, y, c)) == p.act(n, a, G.mul(x, y), c), [&] {
              return "arity " + std::to_string(n) + " hom " + std::to_string(a) + ": g(hc) != (gh)c at c=" +
                     std::to_string(c) + " g=" + std::to_string(x) + " h=" + std::to_string(y);
            });
          for (const Perm& s : all_perms(n)) {
            Perm conj = perm_compose(perm_compose(al(x), s), perm_inverse(al(x)));
            std::size_t lhs = p.act(n, a, x, p.right(n, c, s));
            std::size_t rhs = p.right(n, p.act(n, a, x, c), conj);
            semi.expect_lazy(lhs == rhs, [&] {
              return "arity " + std::to_string(n) + " hom " + std::to_string(a) + ": g(cσ) != (gc)(α(g)σα(g)⁻¹) at c=" +
                     std::to_string(c) + " g=" + std::to_string(x) + " σ=" + bracket(s);
            });
          }
        }
      }
    }

  // all composable (β; α_1..α_k) for a key
  auto composable_tuples = [&](const std::vector<std::size_t>& key) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    std::size_t k = key.size();
    std::vector<std::size_t> rad;
    for (std::size_t j : key) rad.push_back(p.homs(j).size());
    for (std::size_t be = 0; be < p.homs(k).size(); ++be)
      for_each_digits(rad, [&](const std::vector<std::size_t>& as) {
        std::vector<HomToSym> hs;
        for (std::size_t r = 0; r < k; ++r) hs.push_back(p.homs(key[r])[as[r]]);
        if (composable(p.homs(k)[be], hs)) out.emplace_back(be, as);
      });
    return out;
  };

  auto& geq = rep.check("gamma_equivariance");
  auto& unit = rep.check("unit");
  for (std::size_t a = 0; a < p.homs(1).size(); ++a)
    for (std::size_t x = 0; x < G.order(); ++x)
      unit.expect(p.act(1, a, x, b.unit()) == b.unit(), "unit not fixed by g=" + std::to_string(x));
  for (const auto& key : arity_tuples(J)) {
    std::size_t k = key.size();
    std::vector<std::size_t> rad = gamma_radix(b.cards(), key);
    for (const auto& [be, as] : composable_tuples(key)) {
      const HomToSym& beta = p.homs(k)[be];
      if (k == 1 && as[0] < p.homs(key[0]).size()) {
        // γ(1; d) keeps the hom of d when β is trivial
        auto r = p.gamma(be, key, as, b.unit(), {0});
        unit.expect(r.alpha == as[0], "γ_G(1;d) changes the hom of d");
      }
      for_each_digits(rad, [&](const std::vector<std::size_t>& cd) {
        std::vector<std::size_t> ds(cd.begin() + 1, cd.end());
        auto res = p.gamma(be, key, as, cd[0], ds);
        for (std::size_t x = 0; x < G.order(); ++x) {
          Perm bi = beta(G.inverse(x));
          std::vector<std::size_t> gds(k);
          for (std::size_t s = 1; s <= k; ++s) gds[s - 1] = p.act(key[s - 1], as[s - 1], x, ds[bi[s] - 1]);
          std::size_t lhs = p.act(res.arity, res.alpha, x, res.element);
          auto r2 = p.gamma(be, key, as, p.act(k, be, x, cd[0]), gds);
          geq.expect_lazy(lhs == r2.element && r2.alpha == res.alpha, [&] {
            return "arities " + key_str(key) + " β=" + std::to_string(be) + " α=" + bracket(as) + " c=" +
                   std::to_string(cd[0]) + " d=" + bracket(ds) + " g=" + std::to_string(x);
          });
        }
      });
    }
  }

  // hom-level and element-level associativity on composable chains
  auto& assoc = rep.check("associativity");
  for (const auto& outer : arity_tuples(J)) {
    std::size_t k = outer.size(), j = sum_of(outer);
    if (k == 0) continue;
    for (const auto& [be, as] : composable_tuples(outer)) {
      std::vector<std::size_t> rad_outer = gamma_radix(b.cards(), outer);
      auto mid = p.gamma(be, outer, as, 0, std::vector<std::size_t>(k, 0));
      for (const auto& inner : tuples_of_length(j, J)) {
        for (const auto& [mb, ds_h] : composable_tuples(inner)) {
          if (mb != mid.alpha) continue;
          // RHS: each block (α_r; δ's of block r) must be composable
          std::vector<std::size_t> bsum(k), balpha(k);
          std::vector<std::vector<std::size_t>> bkeys(k), bhoms(k);
          std::size_t pos = 0;
          bool ok = true;
          for (std::size_t r = 0; r < k; ++r) {
            std::vector<HomToSym> hs;
            for (std::size_t t = 0; t < outer[r]; ++t, ++pos) {
              bkeys[r].push_back(inner[pos]);
              bhoms[r].push_back(ds_h[pos]);
              hs.push_back(p.homs(inner[pos])[ds_h[pos]]);
            }
            bsum[r] = sum_of(bkeys[r]);
            if (!composable(p.homs(outer[r])[as[r]], hs)) {
              ok = false;
              break;
            }
            balpha[r] = p.hom_index(gamma_hom(p.homs(outer[r])[as[r]], hs));
          }
          if (!ok) {
            assoc.fail("composable on the left but not blockwise: arities " + key_str(outer) + " then " + key_str(inner));
            continue;
          }
          std::vector<HomToSym> rh;
          for (std::size_t r = 0; r < k; ++r) rh.push_back(p.homs(bsum[r])[balpha[r]]);
          if (!composable(p.homs(k)[be], rh)) {
            assoc.fail("right side not composable: arities " + key_str(outer) + " then " + key_str(inner));
            continue;
          }
          std::vector<std::size_t> rad_inner;
          for (std::size_t i : inner) rad_inner.push_back(b.card(i));
          for_each_digits(rad_outer, [&](const std::vector<std::size_t>& cd) {
            std::vector<std::size_t> ds(cd.begin() + 1, cd.end());
            auto l1 = p.gamma(be, outer, as, cd[0], ds);
            for_each_digits(rad_inner, [&](const std::vector<std::size_t>& e) {
              auto lhs = p.gamma(l1.alpha, inner, ds_h, l1.element, e);
              std::vector<std::size_t> rel(k);
              std::size_t q = 0;
              for (std::size_t r = 0; r < k; ++r) {
                std::vector<std::size_t> eb(e.begin() + q, e.begin() + q + outer[r]);
                q += outer[r];
                rel[r] = p.gamma(as[r], bkeys[r], bhoms[r], ds[r], eb).element;
              }
              auto rhs = p.gamma(be, bsum, balpha, cd[0], rel);
              assoc.expect_lazy(lhs.element == rhs.element && lhs.alpha == rhs.alpha, [&] {
                return "arities " + key_str(outer) + " then " + key_str(inner) + " c=" + std::to_string(cd[0]) +
                       " d=" + bracket(ds) + " e=" + bracket(e);
              });
            });
          });
        }
      }
    }
  }
  return rep;
}

// ---- operad pairs ----

std::vector<std::vector<std::size_t>> pair_domain(const Operad& j, const Operad& c) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= j.bound(); ++k) {
    std::vector<std::size_t> rad(k, c.bound() + 1);
    for_each_digits(rad, [&](const std::vector<std::size_t>& t) {
      std::size_t prod = 1;
      bool zero = false;
      for (std::size_t x : t) {
        if (x == 0) zero = true;
        else prod *= x;
      }
      if (zero || prod <= c.bound()) out.push_back(t);
    });
  }
  return out;
}

namespace {

std::size_t tuple_product(const std::vector<std::size_t>& t) {
  std::size_t p = 1;
  for (std::size_t x : t) p *= x;
  return p;
}

std::vector<std::size_t> pair_radix(const Operad& j, const Operad& c, const std::vector<std::size_t>& key) {
  std::vector<std::size_t> r{j.card(key.size())};
  for (std::size_t x : key) r.push_back(c.card(x));
  return r;
}

std::size_t lam_at(const Operad& j, const Operad& c, const PairAction& lam, std::size_t g,
                   const std::vector<std::size_t>& key, const std::vector<std::size_t>& cs) {
  auto it = lam.entries.find(key);
  if (!(it != lam.entries.end())) fail(ErrorCode::Domain, "lambda undefined at " + key_str(key));
  std::size_t idx = g;
  for (std::size_t r = 0; r < key.size(); ++r) idx = idx * c.card(key[r]) + cs[r];
  (void)j;
  return it->second.table[idx];
}

// lexicographic position of digits q under radices
std::size_t lex(const std::vector<std::size_t>& radix, const std::vector<std::size_t>& q) { return mixed_index(radix, q); }

}  // namespace

PairAction pair_action_to_points(const Operad& j, const Operad& c) {
  PairAction lam;
  for (const auto& key : pair_domain(j, c)) {
    std::size_t target = tuple_product(key);
    require(c.card(target) == 1, ErrorCode::Domain, "pair_action_to_points needs point carriers in C");
    std::size_t size = 1;
    for (std::size_t r : pair_radix(j, c, key)) size *= r;
    lam.entries[key] = PairAction::Entry{target, std::vector<std::size_t>(size, 0)};
  }
  return lam;
}

void validate_pair_action(const Operad& j, const Operad& c, const PairAction& lam) {
  auto dom = pair_domain(j, c);
  for (const auto& key : dom) {
    auto it = lam.entries.find(key);
    if (!(it != lam.entries.end())) fail(ErrorCode::Domain, "lambda: missing entry for " + key_str(key));
    std::size_t want = tuple_product(key);
    if (!(it->second.target == want)) fail(ErrorCode::Domain,
            "lambda: entry " + key_str(key) + " has target arity " + std::to_string(it->second.target) +
                ", expected " + std::to_string(want));
    std::size_t size = 1;
    for (std::size_t r : pair_radix(j, c, key)) size *= r;
    if (!(it->second.table.size() == size)) fail(ErrorCode::Domain, "lambda: entry " + key_str(key) + " has wrong size");
    for (std::size_t v : it->second.table)
      if (!(v < c.card(want))) fail(ErrorCode::Domain, "lambda: value out of range in entry " + key_str(key));
  }
  require(lam.entries.size() == dom.size(), ErrorCode::Domain, "lambda: entries outside the defined domain");
}

Report check_pair_action(const Operad& J, const Operad& C, const PairAction& lam) {
  validate_pair_action(J, C, lam);
  Report rep("pair action of " + J.name() + " on " + C.name());
  const auto dom = pair_domain(J, C);
  const std::size_t B = C.bound();
  auto in_dom = [&](const std::vector<std::size_t>& key) {
    if (key.size() > J.bound()) return false;
    bool zero = false;
    std::size_t prod = 1;
    for (std::size_t x : key) {
      if (x > B) return false;
      if (x == 0) zero = true;
      else prod *= x;
    }
    return zero || prod <= B;
  };

  auto& unity = rep.check("unity");
  for (std::size_t j = 0; j <= B; ++j)
    for (std::size_t c = 0; c < C.card(j); ++c)
      unity.expect(lam_at(J, C, lam, J.unit(), {j}, {c}) == c, "λ(1;c) != c at arity " + std::to_string(j));
  for (std::size_t k = 1; k <= J.bound(); ++k)
    for (std::size_t g = 0; g < J.card(k); ++g)
      unity.expect(lam_at(J, C, lam, g, std::vector<std::size_t>(k, 1), std::vector<std::size_t>(k, C.unit())) == C.unit(),
                   "λ(g;1..1) != 1 for g=" + std::to_string(g) + " in arity " + std::to_string(k));

  auto& nullity = rep.check("nullity");
  nullity.expect(lam_at(J, C, lam, 0, {}, {}) == C.unit(), "λ(*;) is not the unit");
  for (const auto& key : dom)
    if (std::find(key.begin(), key.end(), 0) != key.end()) {
      const auto& e = lam.entries.at(key);
      nullity.expect(e.target == 0, "entry " + key_str(key) + " does not land in arity 0");
    }

  auto& eq = rep.check("equivariance");
  for (const auto& key : dom) {
    std::size_t k = key.size(), tgt = tuple_product(key);
    std::vector<std::size_t> rad = pair_radix(J, C, key);
    for (const Perm& s : all_perms(k)) {
      Perm si = perm_inverse(s);
      std::vector<std::size_t> pkey(k);
      for (std::size_t q = 1; q <= k; ++q) pkey[q - 1] = key[si[q] - 1];
      // lexicographic-product permutation: position (q_1..q_k) ↦ position (q_{σ⁻¹(1)}..q_{σ⁻¹(k)})
      Perm lp(tgt + 1, 0);
      if (tgt > 0)
        for_each_digits(key, [&](const std::vector<std::size_t>& q) {
          std::vector<std::size_t> pq(k);
          for (std::size_t t = 1; t <= k; ++t) pq[t - 1] = q[si[t] - 1];
          lp[lex(key, q) + 1] = lex(pkey, pq) + 1;
        });
      std::size_t lrank = perm_rank(lp);
      for_each_digits(rad, [&](const std::vector<std::size_t>& gc) {
        std::vector<std::size_t> cs(gc.begin() + 1, gc.end()), pcs(k);
        for (std::size_t q = 1; q <= k; ++q) pcs[q - 1] = cs[si[q] - 1];
        std::size_t lhs = lam_at(J, C, lam, J.act_rank(k, gc[0], perm_rank(s)), key, cs);
        std::size_t rhs = C.act_rank(tgt, lam_at(J, C, lam, gc[0], pkey, pcs), lrank);
        eq.expect_lazy(lhs == rhs, [&] { return "λ(gσ;c) mismatch at " + key_str(key) + " σ=" + bracket(s); });
      });
    }
    // λ(g; c_1τ_1..c_kτ_k) = λ(g;c)·(τ_1⊗…⊗τ_k)
    std::vector<std::size_t> trad;
    for (std::size_t x : key) trad.push_back(factorial(x));
    for_each_digits(trad, [&](const std::vector<std::size_t>& taus) {
      Perm tp(tgt + 1, 0);
      if (tgt > 0)
        for_each_digits(key, [&](const std::vector<std::size_t>& q) {
          std::vector<std::size_t> tq(k);
          for (std::size_t r = 0; r < k; ++r) tq[r] = all_perms(key[r])[taus[r]][q[r] + 1] - 1;
          tp[lex(key, q) + 1] = lex(key, tq) + 1;
        });
      std::size_t trank = perm_rank(tp);
      for_each_digits(rad, [&](const std::vector<std::size_t>& gc) {
        std::vector<std::size_t> cs(gc.begin() + 1, gc.end()), tcs(k);
        for (std::size_t r = 0; r < k; ++r) tcs[r] = C.act_rank(key[r], cs[r], taus[r]);
        std::size_t lhs = lam_at(J, C, lam, gc[0], key, tcs);
        std::size_t rhs = C.act_rank(tgt, lam_at(J, C, lam, gc[0], key, cs), trank);
        eq.expect_lazy(lhs == rhs, [&] { return "λ(g;cτ) mismatch at " + key_str(key) + " τ ranks=" + bracket(taus); });
      });
    });
  }

  // λ(g; γ(c_1;d_1·), …, γ(c_k;d_k·)) = γ(λ(g;c); (λ(g; d_{1,q_1}, …, d_{k,q_k}))_Q)·ν
  auto& dist = rep.check("distributivity");
  for (const auto& key : dom) {
    std::size_t k = key.size();
    if (k == 0 || std::find(key.begin(), key.end(), 0) != key.end()) continue;
    // inner arities per r: tuples of length key[r] summing to at most B
    std::vector<std::vector<std::vector<std::size_t>>> choices(k);
    std::vector<std::size_t> crad(k);
    for (std::size_t r = 0; r < k; ++r) {
      choices[r] = tuples_of_length(key[r], B);
      crad[r] = choices[r].size();
    }
    for_each_digits(crad, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::vector<std::size_t>> I(k);
      std::vector<std::size_t> a(k);
      for (std::size_t r = 0; r < k; ++r) {
        I[r] = choices[r][pick[r]];
        a[r] = sum_of(I[r]);
      }
      if (!in_dom(a)) return;
      std::size_t A = tuple_product(a);
      // RHS arities in lex order over Q
      std::vector<std::size_t> rkey;
      std::vector<std::vector<std::size_t>> qkeys;
      for_each_digits(key, [&](const std::vector<std::size_t>& Q) {
        std::vector<std::size_t> ik(k);
        for (std::size_t r = 0; r < k; ++r) ik[r] = I[r][Q[r]];
        qkeys.push_back(ik);
        rkey.push_back(tuple_product(ik));
      });
      if (!C.gamma_defined(rkey)) return;
      for (const auto& ik : qkeys)
        if (!in_dom(ik)) return;
      // ν: LHS lex position (p_1..p_k) over a ↦ RHS block position
      std::vector<std::size_t> roff(rkey.size() + 1, 0);
      for (std::size_t t = 0; t < rkey.size(); ++t) roff[t + 1] = roff[t] + rkey[t];
      Perm nu(A + 1, 0);
      if (A > 0)
        for_each_digits(a, [&](const std::vector<std::size_t>& pp) {
          std::vector<std::size_t> Q(k), u(k);
          for (std::size_t r = 0; r < k; ++r) {
            std::size_t rem = pp[r], q = 0;
            while (rem >= I[r][q]) rem -= I[r][q++];
            Q[r] = q;
            u[r] = rem;
          }
          std::size_t qi = lex(key, Q);
          nu[lex(a, pp) + 1] = roff[qi] + lex(qkeys[qi], u) + 1;
        });
      std::size_t nrank = perm_rank(nu);
      // element loops
      std::vector<std::size_t> erad{J.card(k)};
      for (std::size_t r = 0; r < k; ++r) {
        erad.push_back(C.card(key[r]));
        for (std::size_t i : I[r]) erad.push_back(C.card(i));
      }
      for_each_digits(erad, [&](const std::vector<std::size_t>& el) {
        std::size_t g = el[0], pos = 1;
        std::vector<std::size_t> cs(k), gs(k);
        std::vector<std::vector<std::size_t>> ds(k);
        for (std::size_t r = 0; r < k; ++r) {
          cs[r] = el[pos++];
          for (std::size_t t = 0; t < key[r]; ++t) ds[r].push_back(el[pos++]);
          gs[r] = C.gamma(cs[r], I[r], ds[r]);
        }
        std::size_t lhs = lam_at(J, C, lam, g, a, gs);
        std::vector<std::size_t> inner;
        std::size_t qi = 0;
        for_each_digits(key, [&](const std::vector<std::size_t>& Q) {
          std::vector<std::size_t> dq(k);
          for (std::size_t r = 0; r < k; ++r) dq[r] = ds[r][Q[r]];
          inner.push_back(lam_at(J, C, lam, g, qkeys[qi++], dq));
        });
        std::size_t rhs = C.act_rank(A, C.gamma(lam_at(J, C, lam, g, key, cs), rkey, inner), nrank);
        dist.expect_lazy(lhs == rhs, [&] { return "distributivity fails at " + key_str(key) + " g=" + std::to_string(g); });
      });
    });
  }

  // λ(γ(g; h_1..h_j); c) = λ(g; λ(h_1; c_block1), …, λ(h_j; c_blockj))
  auto& outer = rep.check("distributivity_outer");
  for (const auto& mkey : arity_tuples(J.bound())) {
    std::size_t j = mkey.size(), m = sum_of(mkey);
    if (j == 0) continue;
    std::vector<std::size_t> crad(m, B + 1);
    for_each_digits(crad, [&](const std::vector<std::size_t>& ckey) {
      if (!in_dom(ckey)) return;
      std::vector<std::vector<std::size_t>> bkeys(j);
      std::vector<std::size_t> bt(j);
      std::size_t pos = 0;
      for (std::size_t s = 0; s < j; ++s) {
        for (std::size_t t = 0; t < mkey[s]; ++t) bkeys[s].push_back(ckey[pos++]);
        if (!in_dom(bkeys[s])) return;
        bt[s] = tuple_product(bkeys[s]);
      }
      if (!in_dom(bt)) return;
      std::vector<std::size_t> erad{J.card(j)};
      for (std::size_t s : mkey) erad.push_back(J.card(s));
      for (std::size_t x : ckey) erad.push_back(C.card(x));
      for_each_digits(erad, [&](const std::vector<std::size_t>& el) {
        std::vector<std::size_t> hs(el.begin() + 1, el.begin() + 1 + j), cs(el.begin() + 1 + j, el.end());
        std::size_t lhs = lam_at(J, C, lam, J.gamma(el[0], mkey, hs), ckey, cs);
        std::vector<std::size_t> inner(j);
        std::size_t q = 0;
        for (std::size_t s = 0; s < j; ++s) {
          std::vector<std::size_t> cb(cs.begin() + q, cs.begin() + q + mkey[s]);
          q += mkey[s];
          inner[s] = lam_at(J, C, lam, hs[s], bkeys[s], cb);
        }
        std::size_t rhs = lam_at(J, C, lam, el[0], bt, inner);
        outer.expect_lazy(lhs == rhs, [&] { return "outer distributivity fails at " + key_str(ckey) + " over " + key_str(mkey); });
      });
    });
  }
  return rep;
}

}  // namespace opcat
