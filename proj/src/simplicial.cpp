#include "opcat/simplicial.hpp"

#include "opcat/error.hpp"

namespace opcat {

namespace {

void cmp(CheckResult& cr, const Mor& a, const Mor& b, const std::function<std::string()>& what) {
  bool bad = false;
  for (std::size_t l = 0; l < a.level.size(); ++l)
    for (std::size_t i = 0; i < a.level[l].size(); ++i) {
      std::size_t u = a.level[l][i], v = b.level[l][i];
      if (u == kUndef || v == kUndef) {
        ++cr.partial;
        continue;
      }
      bad = bad || u != v;
    }
  cr.expect_lazy(!bad, what);
}

std::string at(const char* rel, std::size_t q, std::size_t i, std::size_t j) {
  return std::string(rel) + " at level " + std::to_string(q) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
}

}  // namespace

Report check_simplicial(const SimplicialObject& k) {
  const Category& c = *k.cat;
  Report r("simplicial identities");
  for (const char* n : {"d_d", "d_s_below", "d_s_identity", "d_s_above", "s_s", "maps_are_morphisms"}) r.check(n);
  const std::size_t Q = k.top();
  for (std::size_t q = 1; q <= Q; ++q)
    for (std::size_t i = 0; i <= q; ++i) {
      std::string why;
      r.check("maps_are_morphisms").expect_lazy(!k.face[q][i].total() || c.is_mor(k.level[q], k.level[q - 1], k.face[q][i], &why),
                                                [&] { return "d_" + std::to_string(i) + ": " + why; });
    }
  for (std::size_t q = 0; q < Q; ++q)
    for (std::size_t i = 0; i <= q; ++i) {
      std::string why;
      r.check("maps_are_morphisms").expect_lazy(!k.degen[q][i].total() || c.is_mor(k.level[q], k.level[q + 1], k.degen[q][i], &why),
                                                [&] { return "s_" + std::to_string(i) + ": " + why; });
    }
  // d_i d_j = d_{j-1} d_i on K_q, i < j ≤ q.
  for (std::size_t q = 2; q <= Q; ++q)
    for (std::size_t j = 1; j <= q; ++j)
      for (std::size_t i = 0; i < j; ++i)
        cmp(r.check("d_d"), c.compose(k.face[q - 1][i], k.face[q][j]), c.compose(k.face[q - 1][j - 1], k.face[q][i]),
            [&] { return at("d_i d_j", q, i, j); });
  // Relations between d on K_{q+1} and s on K_q.
  for (std::size_t q = 0; q < Q; ++q)
    for (std::size_t j = 0; j <= q; ++j) {
      const Mor& sj = k.degen[q][j];
      Mor id = c.identity(k.level[q]);
      cmp(r.check("d_s_identity"), c.compose(k.face[q + 1][j], sj), id, [&] { return at("d_j s_j", q, j, j); });
      cmp(r.check("d_s_identity"), c.compose(k.face[q + 1][j + 1], sj), id, [&] { return at("d_{j+1} s_j", q, j, j); });
      for (std::size_t i = 0; i < j; ++i)
        cmp(r.check("d_s_below"), c.compose(k.face[q + 1][i], sj), c.compose(k.degen[q - 1][j - 1], k.face[q][i]),
            [&] { return at("d_i s_j", q, i, j); });
      for (std::size_t i = j + 2; i <= q + 1; ++i)
        cmp(r.check("d_s_above"), c.compose(k.face[q + 1][i], sj), c.compose(k.degen[q - 1][j], k.face[q][i - 1]),
            [&] { return at("d_i s_j", q, i, j); });
    }
  // s_i s_j = s_{j+1} s_i on K_q, i ≤ j, into K_{q+2}.
  for (std::size_t q = 0; q + 2 <= Q; ++q)
    for (std::size_t j = 0; j <= q; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        cmp(r.check("s_s"), c.compose(k.degen[q + 1][i], k.degen[q][j]), c.compose(k.degen[q + 1][j + 1], k.degen[q][i]),
            [&] { return at("s_i s_j", q, i, j); });
  r.info()["levels"] = Q + 1;
  return r;
}

std::vector<Obj> iterates(const Monad& c, const Obj& x, std::size_t q) {
  std::vector<Obj> out{x};
  for (std::size_t i = 0; i < q; ++i) out.push_back(c.apply(out.back()));
  return out;
}

Mor iterate_fmap(const Monad& c, const std::vector<Obj>& ca, const std::vector<Obj>& cb, const Mor& h, std::size_t k) {
  require(ca.size() > k && cb.size() > k, ErrorCode::Internal, "iterate_fmap: not enough iterates");
  Mor out = h;
  for (std::size_t j = 1; j <= k; ++j) out = c.fmap(ca[j - 1], cb[j - 1], ca[j], cb[j], out);
  return out;
}

namespace {

std::vector<Obj> slice(const std::vector<Obj>& o, std::size_t from) { return {o.begin() + static_cast<std::ptrdiff_t>(from), o.end()}; }

}  // namespace

SimplicialObject bar(const CFunctor& f, const Monad& c, const Algebra& y, std::size_t q_max) {
  SimplicialObject b;
  b.cat = f.functor.dst;
  std::vector<Obj> o = iterates(c, y.carrier, q_max);
  for (const Obj& x : o) b.level.push_back(f.functor.apply(x));
  auto F = [&](std::size_t s, std::size_t t, const Mor& h) { return f.functor.fmap(o[s], o[t], b.level[s], b.level[t], h); };
  b.face.resize(q_max + 1);
  b.degen.resize(q_max + 1);
  Mor theta = y.theta;
  for (std::size_t q = 1; q <= q_max; ++q) {
    b.face[q].push_back(f.beta(o[q - 1], o[q], b.level[q], b.level[q - 1]));
    for (std::size_t i = 1; i < q; ++i) {
      std::size_t base = q - i - 1;  // μ at C^{base} Y
      Mor mu = c.mult(o[base], o[base + 1], o[base + 2]);
      b.face[q].push_back(F(q, q - 1, iterate_fmap(c, slice(o, base + 2), slice(o, base + 1), mu, i - 1)));
    }
    b.face[q].push_back(F(q, q - 1, iterate_fmap(c, slice(o, 1), slice(o, 0), theta, q - 1)));
  }
  for (std::size_t q = 0; q < q_max; ++q)
    for (std::size_t i = 0; i <= q; ++i) {
      std::size_t base = q - i;  // η at C^{base} Y
      Mor eta = c.unit(o[base], o[base + 1]);
      b.degen[q].push_back(F(q, q + 1, iterate_fmap(c, slice(o, base), slice(o, base + 1), eta, i)));
    }
  return b;
}

Report check_contraction(const Monad& c, const Algebra& y, std::size_t q_max) {
  const Category& t = *c.cat;
  Report r("contraction of B(C, C, Y)");
  for (const char* n : {"zeta_nu_id", "zeta_simplicial", "zeta_algebra_map", "extra_d0", "extra_faces", "augmentation"})
    r.check(n);
  SimplicialObject b = bar(self_cfunctor(c), c, y, q_max);
  r.merge(check_simplicial(b), "bar.");
  std::vector<Obj> o = iterates(c, y.carrier, q_max + 2);
  std::vector<Mor> zeta, nu;
  for (std::size_t q = 0; q <= q_max; ++q) {
    if (q == 0) {
      zeta.push_back(y.theta);
      nu.push_back(c.unit(o[0], o[1]));
    } else {
      zeta.push_back(t.compose(y.theta, c.fmap(o[q], o[0], o[q + 1], o[1], zeta[q - 1])));
      nu.push_back(t.compose(c.unit(o[q], o[q + 1]), nu[q - 1]));
    }
    auto lv = [q] { return " at level " + std::to_string(q); };
    cmp(r.check("zeta_nu_id"), t.compose(zeta[q], nu[q]), t.identity(y.carrier), [&] { return "zeta nu != id" + lv(); });
    Algebra free{o[q + 1], o[q + 2], c.mult(o[q], o[q + 1], o[q + 2])};
    std::string why;
    r.check("zeta_algebra_map").expect_lazy(is_algebra_map(c, free, y, zeta[q], &why), [&] { return why + lv(); });
    if (q >= 1) {
      for (std::size_t i = 0; i <= q; ++i)
        cmp(r.check("zeta_simplicial"), t.compose(zeta[q - 1], b.face[q][i]), zeta[q],
            [&] { return "zeta d_" + std::to_string(i) + " != zeta" + lv(); });
      for (std::size_t i = 0; i < q; ++i)
        cmp(r.check("zeta_simplicial"), t.compose(zeta[q], b.degen[q - 1][i]), zeta[q - 1],
            [&] { return "zeta s_" + std::to_string(i) + " != zeta" + lv(); });
    }
  }
  // Extra degeneracy s_{-1} = η_{C^{q+1} Y} from level q to q+1, and η_Y below level 0.
  cmp(r.check("augmentation"), t.compose(y.theta, c.unit(o[0], o[1])), t.identity(y.carrier),
      [] { return "theta eta != id"; });
  for (std::size_t q = 0; q < q_max; ++q) {
    Mor e = c.unit(o[q + 1], o[q + 2]);
    auto lv = [q] { return " at level " + std::to_string(q); };
    cmp(r.check("extra_d0"), t.compose(b.face[q + 1][0], e), t.identity(o[q + 1]), [&] { return "d_0 s_-1 != id" + lv(); });
    for (std::size_t i = 0; i <= q; ++i) {
      Mor lower = q == 0 ? t.compose(c.unit(o[0], o[1]), y.theta) : t.compose(c.unit(o[q], o[q + 1]), b.face[q][i]);
      cmp(r.check("extra_faces"), t.compose(b.face[q + 1][i + 1], e), lower,
          [&] { return "d_" + std::to_string(i + 1) + " s_-1 != s_-1 d_" + std::to_string(i) + lv(); });
    }
  }
  return r;
}

Report check_free_collapse(const CFunctor& f, const Monad& c, const Obj& x, std::size_t q_max) {
  const Category& s = *f.functor.dst;
  Report r("free collapse of B(F, C, C X)");
  for (const char* n : {"augmentation_unit", "extra_last_face", "extra_faces", "kappa_simplicial", "kappa_nu_id"}) r.check(n);
  Algebra y = free_algebra(c, x);
  SimplicialObject b = bar(f, c, y, q_max);
  r.merge(check_simplicial(b), "bar.");
  std::vector<Obj> o = iterates(c, x, q_max + 2);  // level q is F o[q+1]
  Obj fx = f.functor.apply(x);
  std::vector<Obj> fo;
  for (const Obj& z : o) fo.push_back(f.functor.apply(z));
  Mor aug = f.beta(x, o[1], fo[1], fx);
  Mor feta = f.functor.fmap(x, o[1], fx, fo[1], c.unit(x, o[1]));
  cmp(r.check("augmentation_unit"), s.compose(aug, feta), s.identity(fx), [] { return "beta F eta != id"; });
  // s⁺_q = F C^{q+1} η_X: level q -> q+1.
  std::vector<Mor> extra;
  for (std::size_t q = 0; q < q_max; ++q) {
    Mor ce = iterate_fmap(c, o, slice(o, 1), c.unit(x, o[1]), q + 1);
    extra.push_back(f.functor.fmap(o[q + 1], o[q + 2], fo[q + 1], fo[q + 2], ce));
  }
  for (std::size_t q = 0; q < q_max; ++q) {
    auto lv = [q] { return " at level " + std::to_string(q); };
    cmp(r.check("extra_last_face"), s.compose(b.face[q + 1][q + 1], extra[q]), s.identity(b.level[q]),
        [&] { return "d_last s+ != id" + lv(); });
    for (std::size_t i = 0; i <= q; ++i) {
      Mor lower = q == 0 ? s.compose(feta, aug) : s.compose(extra[q - 1], b.face[q][i]);
      cmp(r.check("extra_faces"), s.compose(b.face[q + 1][i], extra[q]), lower,
          [&] { return "d_" + std::to_string(i) + " s+ != s+ d_" + std::to_string(i) + lv(); });
    }
  }
  std::vector<Mor> kappa{aug};
  Mor nu = feta;
  cmp(r.check("kappa_nu_id"), s.compose(kappa[0], nu), s.identity(fx), [] { return "kappa nu != id at level 0"; });
  for (std::size_t q = 1; q <= q_max; ++q) {
    kappa.push_back(s.compose(kappa[q - 1], b.face[q][0]));
    for (std::size_t i = 1; i <= q; ++i)
      cmp(r.check("kappa_simplicial"), s.compose(kappa[q - 1], b.face[q][i]), kappa[q],
          [&] { return "kappa d_" + std::to_string(i) + " != kappa at level " + std::to_string(q); });
    nu = s.compose(extra[q - 1], nu);
    cmp(r.check("kappa_nu_id"), s.compose(kappa[q], nu), s.identity(fx),
        [&] { return "kappa nu != id at level " + std::to_string(q); });
  }
  return r;
}

Report check_levelwise_sigma(const Monad& c, const Adjunction& a, const Action& act, const Algebra& y,
                             std::size_t q_max) {
  const Category& s = *a.left.dst;
  Report r("Sigma_C of B(C, C, Y) against B(Sigma, C, Y)");
  for (const char* n : {"faces_are_algebra_maps", "psi_iso", "faces_commute", "degeneracies_commute", "d0_is_beta"}) r.check(n);
  CFunctor f = adjoint_cfunctor(c, a, act);
  SimplicialObject b1 = bar(self_cfunctor(c), c, y, q_max);
  SimplicialObject b2 = bar(f, c, y, q_max);
  r.merge(check_simplicial(b2), "sigma_bar.");
  std::vector<Obj> o = iterates(c, y.carrier, q_max + 2);
  std::vector<Algebra> alg;
  std::vector<Coequalized> coeq;
  std::vector<Mor> psi;
  for (std::size_t q = 0; q <= q_max; ++q) {
    alg.push_back({o[q + 1], o[q + 2], c.mult(o[q], o[q + 1], o[q + 2])});
    coeq.push_back(coequalized_sigma(f, c, alg[q]));
    Mor beta = f.beta(o[q], o[q + 1], coeq[q].fy, b2.level[q]);
    psi.push_back(factor_through(s, coeq[q], b2.level[q], beta));
    std::string why;
    r.check("psi_iso").expect_lazy(s.is_iso(coeq[q].object, b2.level[q], psi[q], &why),
                                   [&] { return why + " at level " + std::to_string(q); });
  }
  auto sigma_c = [&](std::size_t q1, std::size_t q2, const Mor& h) {
    Mor sh = a.left.fmap(o[q1 + 1], o[q2 + 1], coeq[q1].fy, coeq[q2].fy, h);
    return induced_map(s, coeq[q1], coeq[q2], sh);
  };
  for (std::size_t q = 1; q <= q_max; ++q)
    for (std::size_t i = 0; i <= q; ++i) {
      const Mor& d = b1.face[q][i];
      std::string why;
      r.check("faces_are_algebra_maps").expect_lazy(is_algebra_map(c, alg[q], alg[q - 1], d, &why), [&] { return why; });
      Mor lhs = s.compose(psi[q - 1], sigma_c(q, q - 1, d));
      Mor rhs = s.compose(b2.face[q][i], psi[q]);
      auto w = [&] { return "d_" + std::to_string(i) + " at level " + std::to_string(q); };
      cmp(r.check("faces_commute"), lhs, rhs, w);
      if (i == 0) cmp(r.check("d0_is_beta"), lhs, rhs, w);
    }
  for (std::size_t q = 0; q < q_max; ++q)
    for (std::size_t i = 0; i <= q; ++i) {
      Mor lhs = s.compose(psi[q + 1], sigma_c(q, q + 1, b1.degen[q][i]));
      Mor rhs = s.compose(b2.degen[q][i], psi[q]);
      cmp(r.check("degeneracies_commute"), lhs, rhs, [&] { return "s_" + std::to_string(i) + " at level " + std::to_string(q); });
    }
  return r;
}

}  // namespace opcat
