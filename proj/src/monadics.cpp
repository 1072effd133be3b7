#include "opcat/monadics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opcat/error.hpp"
#include "opcat/util.hpp"

namespace opcat {

namespace {

Value pair_value(std::size_t g, const Value& x) {
  return Value::node(tag::Pair, {Value::atom(static_cast<std::int64_t>(g)), x});
}

std::size_t pair_g(const Value& v) { return static_cast<std::size_t>(v[0].atom_value()); }

Obj forget_to(const Category& t, const Obj& z) { return set_obj(t, z.at(0).elems()); }

Mor single(const Mor& h) { return Mor{{h.level[0]}}; }

// Elementwise comparison; entries undefined on either side count as partial.
void cmp_mor(CheckResult& cr, const Mor& a, const Mor& b, const Obj& dom, const std::string& what) {
  for (std::size_t l = 0; l < a.level.size(); ++l)
    for (std::size_t i = 0; i < a.level[l].size(); ++i) {
      std::size_t u = a.level[l][i], v = b.level[l][i];
      if (u == kUndef || v == kUndef) {
        ++cr.partial;
        continue;
      }
      cr.expect_lazy(u == v, [&] { return what + " at " + dom.at(l)[i].str(); });
    }
}

bool same_obj(const Obj& a, const Obj& b) {
  if (a.levels.size() != b.levels.size() || a.arrows != b.arrows || a.product != b.product || a.unit != b.unit)
    return false;
  for (std::size_t l = 0; l < a.levels.size(); ++l)
    if (a.at(l).elems() != b.at(l).elems()) return false;
  return true;
}

}  // namespace

// ---- adjunctions ----

Adjunction free_gset_adjunction(GroupPtr g, bool based) {
  CatPtr t = based ? pointed_category() : set_category();
  CatPtr s = gset_category(g, based);
  Adjunction a;
  a.name = std::string(based ? "G+^-" : "Gx-") + "(" + g->name() + ")";
  a.left.name = "Sigma";
  a.left.src = t;
  a.left.dst = s;
  a.left.apply = [g, s, based](const Obj& x) {
    std::vector<Value> el;
    if (based) el.push_back(Value::base());
    for (std::size_t e = 0; e < g->order(); ++e)
      for (const auto& v : x.at(0).elems())
        if (!v.is_base()) el.push_back(pair_value(e, v));
    std::sort(el.begin(), el.end());
    return s->make({std::move(el)}, [&](std::size_t a, const Value& v) {
      if (v.is_base()) return v;
      return pair_value(g->mul(a, pair_g(v)), v[1]);
    });
  };
  a.left.fmap = [t, s](const Obj& x, const Obj& y, const Obj& fx, const Obj& fy, const Mor& f) {
    LevelFn fn = t->as_fn(x, y, f);
    return s->tabulate(fx, fy, [&](std::size_t, const Value& v) -> std::optional<Value> {
      if (v.is_base()) return v;
      auto w = fn(0, v[1]);
      if (!w) return std::nullopt;
      if (w->is_base()) return *w;
      return pair_value(pair_g(v), *w);
    });
  };
  a.right.name = "Omega";
  a.right.src = s;
  a.right.dst = t;
  a.right.apply = [t](const Obj& z) { return forget_to(*t, z); };
  a.right.fmap = [](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& h) { return single(h); };
  a.unit = [t, g](const Obj& x, const Obj&, const Obj& osx) {
    return t->tabulate(x, osx, [&](std::size_t, const Value& v) {
      return v.is_base() ? v : pair_value(g->identity(), v);
    });
  };
  a.counit = [s](const Obj& z, const Obj&, const Obj& soz) {
    return s->tabulate(soz, z, [&](std::size_t, const Value& v) -> std::optional<Value> {
      if (v.is_base()) return v;
      return z.at(0)[z.arrows[pair_g(v)][z.at(0).index(v[1])]];
    });
  };
  return a;
}

Adjunction free_pointed_adjunction() {
  CatPtr t = set_category();
  CatPtr s = pointed_category();
  auto cell = [](const Value& v) { return Value::node(tag::Cell, {v}); };
  Adjunction a;
  a.name = "(-)+";
  a.left = {"plus", t, s,
            [s, cell](const Obj& x) {
              std::vector<Value> el{Value::base()};
              for (const auto& v : x.at(0).elems()) el.push_back(cell(v));
              std::sort(el.begin(), el.end());
              return set_obj(*s, std::move(el));
            },
            [t, s, cell](const Obj& x, const Obj& y, const Obj& fx, const Obj& fy, const Mor& f) {
              LevelFn fn = t->as_fn(x, y, f);
              return s->tabulate(fx, fy, [&](std::size_t, const Value& v) -> std::optional<Value> {
                if (v.is_base()) return v;
                auto w = fn(0, v[0]);
                if (!w) return std::nullopt;
                return cell(*w);
              });
            }};
  a.right = {"forget", s, t, [t](const Obj& z) { return forget_to(*t, z); },
             [](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& h) { return single(h); }};
  a.unit = [t, cell](const Obj& x, const Obj&, const Obj& osx) {
    return t->tabulate(x, osx, [&](std::size_t, const Value& v) { return cell(v); });
  };
  a.counit = [s](const Obj& z, const Obj&, const Obj& soz) {
    return s->tabulate(soz, z, [&](std::size_t, const Value& v) { return v.is_base() ? v : v[0]; });
  };
  return a;
}

namespace {

struct OrbitArrows {
  std::shared_ptr<const OrbitCategory> oc;
  std::map<std::array<std::size_t, 3>, std::size_t> index;
  explicit OrbitArrows(const Category& psh) : oc(psh.shape().orbits) {
    const auto& oa = psh.shape().orbit_arrows;
    for (std::size_t a = 0; a < oa.size(); ++a) index[oa[a]] = a;
  }
  std::size_t at(std::size_t h, std::size_t k, std::size_t c) const { return index.at({h, k, c}); }
};

}  // namespace

Adjunction presheaf_reflection(std::shared_ptr<const OrbitCategory> oc) {
  CatPtr t = presheaf_category(oc);
  CatPtr s = gset_category(oc->group_ptr(), true);
  auto arrows = std::make_shared<const OrbitArrows>(*t);
  std::size_t e = oc->trivial_object();
  Adjunction a;
  a.name = "L-|R(" + oc->group().name() + ")";
  a.left.name = "L";
  a.left.src = t;
  a.left.dst = s;
  a.left.apply = [s, oc, arrows, e](const Obj& p) {
    const auto& pe = p.at(e);
    return s->make({pe.elems()}, [&](std::size_t g, const Value& v) {
      return pe[p.arrows[arrows->at(e, e, oc->coset_of(e, g))][pe.index(v)]];
    });
  };
  a.left.fmap = [e](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& f) { return Mor{{f.level[e]}}; };
  a.right.name = "R";
  a.right.src = s;
  a.right.dst = t;
  a.right.apply = [t, oc](const Obj& z) {
    const auto& g = oc->group();
    std::vector<std::vector<Value>> levels(oc->num_objects());
    for (std::size_t h = 0; h < oc->num_objects(); ++h)
      for (std::size_t i = 0; i < z.at(0).size(); ++i) {
        bool fixed = true;
        for (std::size_t x : oc->subgroup(h)) fixed = fixed && z.arrows[x][i] == i;
        if (fixed) levels[h].push_back(z.at(0)[i]);
      }
    (void)g;
    return t->make(std::move(levels), [&](std::size_t a, const Value& v) {
      const auto& [h, k, c] = t->shape().orbit_arrows[a];
      return z.at(0)[z.arrows[oc->rep(k, c)][z.at(0).index(v)]];
    });
  };
  a.right.fmap = [t](const Obj& z, const Obj& w, const Obj& rz, const Obj& rw, const Mor& h) {
    // h may be a partial map while algebra structures are being solved
    return t->tabulate(rz, rw, [&](std::size_t, const Value& v) -> std::optional<Value> {
      std::size_t j = h.level[0][z.at(0).index(v)];
      if (j >= w.at(0).size()) return std::nullopt;
      return w.at(0)[j];
    });
  };
  a.unit = [t, oc, arrows, e](const Obj& p, const Obj&, const Obj& rlp) {
    return t->tabulate(p, rlp, [&](std::size_t h, const Value& v) {
      std::size_t ar = arrows->at(e, h, oc->projection(h));
      return p.at(e)[p.arrows[ar][p.at(h).index(v)]];
    });
  };
  a.counit = [s](const Obj& z, const Obj&, const Obj& lrz) {
    return s->tabulate(lrz, z, [](std::size_t, const Value& v) { return v; });
  };
  return a;
}

Adjunction free_partial_monoid_adjunction(std::size_t k) {
  CatPtr t = pointed_category();
  CatPtr s = monoid_category();
  TermMonadPtr words = free_monoid_terms(k, true);
  Adjunction a;
  a.name = "M" + std::to_string(k) + "-|U";
  a.left.name = "M";
  a.left.src = t;
  a.left.dst = s;
  a.left.apply = [s, words, k](const Obj& x) {
    bool complete = true;
    auto el = words->enumerate(x.at(0).elems(), SIZE_MAX, complete);
    return s->make_monoid(
        std::move(el),
        [k](const Value& u, const Value& v) -> std::optional<Value> {
          if (u.is_base()) return v;
          if (v.is_base()) return u;
          if (u.size() + v.size() > k) return std::nullopt;
          std::vector<Value> w = u.kids();
          w.insert(w.end(), v.kids().begin(), v.kids().end());
          return Value::node(tag::Word, std::move(w));
        },
        Value::base());
  };
  a.left.fmap = [t, s, words](const Obj& x, const Obj& y, const Obj& fx, const Obj& fy, const Mor& f) {
    LevelFn fn = t->as_fn(x, y, f);
    return s->tabulate(fx, fy, [&](std::size_t, const Value& v) {
      return words->fmap([&](const Value& u) { return fn(0, u); }, v);
    });
  };
  a.right.name = "U";
  a.right.src = s;
  a.right.dst = t;
  a.right.apply = [t](const Obj& z) {
    require(z.unit == 0 && z.at(0)[0].is_base(), ErrorCode::Validation,
            "monoid probe: the unit must be the basepoint");
    return forget_to(*t, z);
  };
  a.right.fmap = [](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& h) { return single(h); };
  a.unit = [t](const Obj& x, const Obj&, const Obj& osx) {
    return t->tabulate(x, osx, [](std::size_t, const Value& v) {
      return v.is_base() ? v : Value::node(tag::Word, {v});
    });
  };
  a.counit = [s](const Obj& z, const Obj&, const Obj& soz) {
    return s->tabulate(soz, z, [&](std::size_t, const Value& w) -> std::optional<Value> {
      std::size_t acc = z.unit;
      if (w.is_base()) return z.at(0)[acc];
      for (const auto& u : w.kids()) {
        acc = z.product[acc][z.at(0).index(u)];
        if (acc == kUndef) return std::nullopt;
      }
      return z.at(0)[acc];
    });
  };
  return a;
}

Adjunction identity_adjunction(CatPtr c) {
  Adjunction a;
  a.name = "Id-|Id";
  a.left = identity_functor(c);
  a.right = identity_functor(c);
  a.unit = [c](const Obj& x, const Obj&, const Obj&) { return c->identity(x); };
  a.counit = [c](const Obj& z, const Obj&, const Obj&) { return c->identity(z); };
  return a;
}

std::vector<Obj> monoid_probes(std::size_t max_order) {
  const Category& s = *monoid_category();
  auto name = [](std::size_t i) { return i == 0 ? Value::base() : Value::atom(static_cast<std::int64_t>(i)); };
  std::vector<Obj> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<Value> el;
    for (std::size_t i = 0; i < n; ++i) el.push_back(name(i));
    out.push_back(s.make_monoid(
        el,
        [n, name](const Value& u, const Value& v) -> std::optional<Value> {
          std::size_t i = u.is_base() ? 0 : static_cast<std::size_t>(u.atom_value());
          std::size_t j = v.is_base() ? 0 : static_cast<std::size_t>(v.atom_value());
          return name((i + j) % n);
        },
        Value::base()));
  }
  out.push_back(s.make_monoid({Value::base(), Value::atom(1)},
                              [](const Value& u, const Value& v) -> std::optional<Value> {
                                return u.is_base() ? v : u;
                              },
                              Value::base()));
  return out;
}

Action adjunction_action(const Adjunction& a) {
  Functor left = a.left, right = a.right;
  auto counit = a.counit;
  return [left, right, counit](const Obj& z, const Obj& oz, const Obj& coz) {
    Obj soz = left.apply(oz);
    return right.fmap(soz, z, coz, oz, counit(z, oz, soz));
  };
}

Action trivial_action(const Adjunction& a) {
  CatPtr t = a.right.dst;
  return [t](const Obj&, const Obj& oz, const Obj&) { return t->identity(oz); };
}

// ---- split coequalizers ----

Report verify_split_coequalizer(const SplitDiagram& d) {
  const Category& c = *d.cat;
  Report r("split coequalizer");
  for (const char* n : {"qf_eq_qg", "qi_id", "fj_eq_iq", "gj_id"}) r.check(n);
  cmp_mor(r.check("qf_eq_qg"), c.compose(d.q, d.f), c.compose(d.q, d.g), d.a, "qf != qg");
  cmp_mor(r.check("qi_id"), c.compose(d.q, d.i), c.identity(d.c), d.c, "qi != id");
  cmp_mor(r.check("fj_eq_iq"), c.compose(d.f, d.j), c.compose(d.i, d.q), d.b, "fj != iq");
  cmp_mor(r.check("gj_id"), c.compose(d.g, d.j), c.identity(d.b), d.b, "gj != id");
  return r;
}

SplitDiagram canonical_split(const Monad& m, const Algebra& y) {
  SplitDiagram d;
  d.cat = m.cat;
  d.c = y.carrier;
  d.b = y.tx;
  d.a = m.apply(y.tx);
  d.f = m.fmap(y.tx, y.carrier, d.a, d.b, y.theta);
  d.g = m.mult(y.carrier, y.tx, d.a);
  d.q = y.theta;
  d.i = m.unit(y.carrier, y.tx);
  d.j = m.unit(y.tx, d.a);
  return d;
}

// ---- Σ_C ----

Mor alpha_map(const Monad& c, const Adjunction& a, const Action& act, const Obj& x, const Obj& cx) {
  const Category& t = *a.left.src;
  Obj sx = a.left.apply(x);
  Obj osx = a.right.apply(sx);
  Obj cosx = c.apply(osx);
  Mor eta = a.unit(x, sx, osx);
  Mor ceta = c.fmap(x, osx, cx, cosx, eta);
  return t.compose(act(sx, osx, cosx), ceta);
}

CFunctor adjoint_cfunctor(const Monad& c, const Adjunction& a, const Action& act) {
  CFunctor f;
  f.name = a.left.name + " over " + c.name;
  f.functor = a.left;
  Adjunction adj = a;
  Monad cm = c;
  f.beta = [adj, cm, act](const Obj& x, const Obj& cx, const Obj& fcx, const Obj& fx) {
    const Category& s = *adj.left.dst;
    Obj osx = adj.right.apply(fx);
    Obj sosx = adj.left.apply(osx);
    Mor alpha = alpha_map(cm, adj, act, x, cx);
    Mor salpha = adj.left.fmap(cx, osx, fcx, sosx, alpha);
    return s.compose(adj.counit(fx, osx, sosx), salpha);
  };
  return f;
}

Coequalized coequalized_sigma(const CFunctor& f, const Monad& c, const Algebra& y) {
  const Category& s = *f.functor.dst;
  Coequalized out;
  out.fy = f.functor.apply(y.carrier);
  out.fcy = f.functor.apply(y.tx);
  Mor beta = f.beta(y.carrier, y.tx, out.fcy, out.fy);
  Mor ftheta = f.functor.fmap(y.tx, y.carrier, out.fcy, out.fy, y.theta);
  (void)c;
  auto q = s.coequalizer(out.fcy, out.fy, beta, ftheta);
  out.object = std::move(q.object);
  out.q = std::move(q.q);
  return out;
}

Mor factor_through(const Category& s, const Coequalized& src, const Obj& z, const Mor& h) {
  Mor out;
  out.level.resize(s.num_levels());
  for (std::size_t l = 0; l < s.num_levels(); ++l) {
    out.level[l].assign(src.object.at(l).size(), kUndef);
    for (std::size_t i = 0; i < src.fy.at(l).size(); ++i) {
      std::size_t cls = src.q.level[l][i], v = h.level[l][i];
      if (!(v != kUndef)) fail(ErrorCode::Domain, "factor_through: map undefined at " + src.fy.at(l)[i].str());
      if (out.level[l][cls] == kUndef) out.level[l][cls] = v;
      if (!(out.level[l][cls] == v)) fail(ErrorCode::Domain,
              "map does not factor through the quotient at " + src.fy.at(l)[i].str());
    }
  }
  (void)z;
  return out;
}

Mor induced_map(const Category& s, const Coequalized& src, const Coequalized& dst, const Mor& h) {
  return factor_through(s, src, dst.object, s.compose(dst.q, h));
}

Report sigma_adjunction_check(const Monad& c, const Adjunction& a, const Action& act, const std::vector<Algebra>& ys,
                              const std::vector<Obj>& zs, const std::vector<Obj>& free_probes,
                              const CheckOptions& opt) {
  const Category& t = *a.left.src;
  const Category& s = *a.left.dst;
  Report r("Sigma_C adjunction for " + c.name + " and " + a.name);
  for (const char* n : {"hom_cardinality", "bijection_injective", "images_are_algebra_maps", "inverse_factors",
                        "round_trip", "free_sigma_iso"})
    r.check(n);
  CFunctor f = adjoint_cfunctor(c, a, act);
  std::size_t instances = 0;
  nlohmann::json cards = nlohmann::json::array();
  for (const Algebra& y : ys) {
    Coequalized q = coequalized_sigma(f, c, y);
    Obj osy = a.right.apply(q.fy);
    Mor eta = a.unit(y.carrier, q.fy, osy);
    for (const Obj& z : zs) {
      ++instances;
      Algebra oz = omega_c(c, a, act, z);
      std::string where = describe(t, y.carrier) + " / " + describe(s, z);
      auto left = s.homs(q.object, z, opt.max_maps * 10);
      auto right = enumerate_algebra_maps(c, y, oz, {}, opt.max_maps * 10);
      cards.push_back({{"sigma_c_y", q.object.total_size()}, {"left", left.size()}, {"right", right.size()}});
      r.check("hom_cardinality").expect(left.size() == right.size(), "|S(Sigma_C Y, Z)| = " +
                                                                         std::to_string(left.size()) + " but " +
                                                                         std::to_string(right.size()) +
                                                                         " algebra maps at " + where);
      std::vector<Mor> images;
      for (const Mor& h : left) {
        Mor hq = s.compose(h, q.q);
        Mor img = t.compose(a.right.fmap(q.fy, z, osy, oz.carrier, hq), eta);
        std::string why;
        r.check("images_are_algebra_maps").expect_lazy(is_algebra_map(c, y, oz, img, &why),
                                                       [&] { return why + " at " + where; });
        images.push_back(std::move(img));
      }
      std::vector<Mor> sorted = images;
      std::sort(sorted.begin(), sorted.end(), [](const Mor& u, const Mor& v) { return u.level < v.level; });
      r.check("bijection_injective")
          .expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "two maps agree at " + where);
      // The inverse: g ↦ ε∘Σg factored through q.
      Obj soz = a.left.apply(oz.carrier);
      Mor eps = a.counit(z, oz.carrier, soz);
      for (const Mor& g : right) {
        Mor adj = s.compose(eps, a.left.fmap(y.carrier, oz.carrier, q.fy, soz, g));
        try {
          Mor h = factor_through(s, q, z, adj);
          r.check("inverse_factors").pass();
          Mor back = t.compose(a.right.fmap(q.fy, z, osy, oz.carrier, s.compose(h, q.q)), eta);
          r.check("round_trip").expect(back == g, "g -> h -> g differs at " + where);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Domain) throw;
          r.check("inverse_factors").fail(std::string(e.what()) + " at " + where);
        }
      }
    }
  }
  for (const Obj& x : free_probes) {
    Algebra y = free_algebra(c, x);
    Coequalized q = coequalized_sigma(f, c, y);
    Obj sx = a.left.apply(x);
    Mor beta = f.beta(x, y.carrier, q.fy, sx);
    std::string why;
    try {
      Mor psi = factor_through(s, q, sx, beta);
      r.check("free_sigma_iso").expect_lazy(s.is_iso(q.object, sx, psi, &why),
                                            [&] { return why + " at " + describe(t, x); });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Domain) throw;
      r.check("free_sigma_iso").fail(e.what());
    }
  }
  r.info()["instances"] = instances;
  r.info()["free_probes"] = free_probes.size();
  r.info()["cardinalities"] = cards;
  return r;
}

// ---- Beck ----

Report beck_check(const Adjunction& a, const std::vector<Obj>& t_probes, const std::vector<Obj>& s_probes,
                  const CheckOptions& opt) {
  const Category& t = *a.left.src;
  const Category& s = *a.left.dst;
  Report r("Beck monadicity for " + a.name);
  for (const char* n : {"algebra_laws", "omega_split", "eta_gamma_iso", "eta_gamma_algebra_map", "eps_gamma_iso"})
    r.check(n);
  Monad gamma = monad_of(a);
  CFunctor f;
  f.name = a.left.name;
  f.functor = a.left;
  auto counit = a.counit;
  f.beta = [counit](const Obj&, const Obj& cx, const Obj& fcx, const Obj& fx) { return counit(fx, cx, fcx); };
  std::size_t algebras = 0;
  nlohmann::json per = nlohmann::json::array();
  for (const Obj& y : t_probes) {
    bool complete = true;
    auto algs = enumerate_algebras(gamma, y, 100000, opt, &complete);
    per.push_back({{"probe", describe(t, y)}, {"algebras", algs.size()}, {"complete", complete}});
    for (const Algebra& alg : algs) {
      ++algebras;
      std::string where = describe(t, y);
      r.merge(check_algebra(gamma, alg, opt), "algebra_laws.");
      Report split = verify_split_coequalizer(canonical_split(gamma, alg));
      r.check("omega_split").expect(split.ok(), "Omega image is not split at " + where);
      Coequalized q = coequalized_sigma(f, gamma, alg);
      Obj osy = a.right.apply(q.fy);
      Obj osq = a.right.apply(q.object);
      Mor eta = a.unit(y, q.fy, osy);
      Mor eg = t.compose(a.right.fmap(q.fy, q.object, osy, osq, q.q), eta);
      std::string why;
      r.check("eta_gamma_iso").expect_lazy(t.is_iso(y, osq, eg, &why), [&] { return why + " at " + where; });
      Algebra target{osq, gamma.apply(osq), Mor{}};
      target.theta = adjunction_action(a)(q.object, osq, target.tx);
      r.check("eta_gamma_algebra_map")
          .expect_lazy(is_algebra_map(gamma, alg, target, eg, &why), [&] { return why + " at " + where; });
    }
  }
  for (const Obj& z : s_probes) {
    Obj oz = a.right.apply(z);
    Obj goz = gamma.apply(oz);
    Algebra alg{oz, goz, adjunction_action(a)(z, oz, goz)};
    Coequalized q = coequalized_sigma(f, gamma, alg);
    Mor eps = a.counit(z, oz, q.fy);
    std::string why;
    try {
      Mor eg = factor_through(s, q, z, eps);
      r.check("eps_gamma_iso").expect_lazy(s.is_iso(q.object, z, eg, &why),
                                           [&] { return why + " at " + describe(s, z); });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Domain) throw;
      r.check("eps_gamma_iso").fail(e.what());
    }
  }
  r.check("algebra_laws");
  r.info()["monadic"] = r.ok();
  r.info()["algebras"] = algebras;
  r.info()["per_probe"] = per;
  r.info()["coverage"] = {{"omega_split_pairs", algebras},
                          {"note", "only the canonical pairs (epsilon Sigma, Sigma theta) of probe algebras are examined"}};
  return r;
}

// ---- monad maps ----

namespace {

std::optional<Obj> fits(const Monad& m, const Obj& x, std::size_t limit) {
  if (x.total_size() > limit) return std::nullopt;
  try {
    Obj y = m.apply(x);
    if (y.total_size() > limit) return std::nullopt;
    return y;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Bound) return std::nullopt;
    throw;
  }
}

}  // namespace

Report check_monad_map(const Monad& s, const Monad& t, const MonadMap& phi, const std::vector<Obj>& probes,
                       const CheckOptions& opt) {
  const Category& c = *s.cat;
  Report r("monad map " + s.name + " -> " + t.name);
  for (const char* n : {"is_morphism", "unit", "mult", "naturality"}) r.check(n);
  struct D {
    Obj sx, tx;
    Mor phi;
  };
  std::vector<D> d;
  for (const Obj& x : probes) {
    D e{s.apply(x), t.apply(x), {}};
    e.phi = phi(x, e.sx, e.tx);
    std::string where = describe(c, x);
    std::string why;
    if (e.phi.total())
      r.check("is_morphism").expect_lazy(c.is_mor(e.sx, e.tx, e.phi, &why), [&] { return why + " at " + where; });
    else
      ++r.check("is_morphism").partial;
    cmp_mor(r.check("unit"), c.compose(e.phi, s.unit(x, e.sx)), t.unit(x, e.tx), x, "phi eta != eta on " + where);
    auto ssx = fits(s, e.sx, opt.tabulate_limit);
    auto tsx = ssx ? fits(t, e.sx, opt.tabulate_limit) : std::nullopt;
    auto ttx = tsx ? fits(t, e.tx, opt.tabulate_limit) : std::nullopt;
    std::optional<Mor> phi_s;
    if (ttx) try {
        phi_s = phi(e.sx, *ssx, *tsx);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::Bound) throw;
      }
    if (phi_s) {
      Mor lhs = c.compose(e.phi, s.mult(x, e.sx, *ssx));
      Mor tphi = t.fmap(e.sx, e.tx, *tsx, *ttx, e.phi);
      Mor rhs = c.compose(t.mult(x, e.tx, *ttx), c.compose(tphi, *phi_s));
      cmp_mor(r.check("mult"), lhs, rhs, *ssx, "phi mu != mu T phi phi on " + where);
    } else {
      ++r.check("mult").partial;
      r.info()["mult_skipped"] = true;
    }
    d.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      for (const Mor& f : c.homs(probes[i], probes[j], opt.max_maps)) {
        Mor sf = s.fmap(probes[i], probes[j], d[i].sx, d[j].sx, f);
        Mor tf = t.fmap(probes[i], probes[j], d[i].tx, d[j].tx, f);
        cmp_mor(r.check("naturality"), c.compose(d[j].phi, sf), c.compose(tf, d[i].phi), d[i].sx,
                "phi not natural on " + describe(c, probes[i]) + " -> " + describe(c, probes[j]));
      }
  return r;
}

Report alpha_beta_check(const Monad& c, const Adjunction& a, const Action& act, const std::vector<Obj>& t_probes,
                        const std::vector<Obj>& s_probes, const CheckOptions& opt) {
  const Category& t = *a.left.src;
  const Category& s = *a.left.dst;
  Report r("alpha and beta for " + c.name + " and " + a.name);
  for (const char* n : {"action_naturality", "alpha_unique", "pullback_action_recovered", "pullback_alpha_round_trip",
                        "eta_c_on_free_equals_alpha"})
    r.check(n);
  // θ̄ is an action, naturally in Z.
  std::vector<Algebra> oz;
  for (const Obj& z : s_probes) {
    oz.push_back(omega_c(c, a, act, z));
    r.merge(check_algebra(c, oz.back(), opt), "action.");
  }
  for (std::size_t i = 0; i < s_probes.size(); ++i)
    for (std::size_t j = 0; j < s_probes.size(); ++j)
      for (const Mor& h : s.homs(s_probes[i], s_probes[j], opt.max_maps)) {
        Mor oh = a.right.fmap(s_probes[i], s_probes[j], oz[i].carrier, oz[j].carrier, h);
        Mor coh = c.fmap(oz[i].carrier, oz[j].carrier, oz[i].tx, oz[j].tx, oh);
        cmp_mor(r.check("action_naturality"), t.compose(oz[j].theta, coh), t.compose(oh, oz[i].theta), oz[i].tx,
                "theta-bar not natural");
      }
  Monad gamma = monad_of(a);
  Monad cm = c;
  Adjunction adj = a;
  r.merge(check_monad_map(c, gamma, [cm, adj, act](const Obj& x, const Obj& cx, const Obj&) {
            return alpha_map(cm, adj, act, x, cx);
          }, t_probes, opt),
          "alpha_monad_map.");
  CFunctor f = adjoint_cfunctor(c, a, act);
  try {
    r.merge(check_cfunctor(f, c, t_probes, opt), "beta_cfunctor.");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Bound) throw;
    ++r.check("beta_cfunctor").partial;
    r.info()["beta_cfunctor_skipped"] = e.what();
  }
  for (const Obj& x : t_probes) {
    std::string where = describe(t, x);
    Algebra free = free_algebra(c, x);
    Mor alpha = alpha_map(c, a, act, x, free.carrier);
    Obj sx = a.left.apply(x);
    Algebra target = omega_c(c, a, act, sx);
    Mor eta_c = c.unit(x, free.carrier);
    Mor eta_a = a.unit(x, sx, target.carrier);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fixed(t.num_levels());
    for (std::size_t l = 0; l < t.num_levels(); ++l)
      for (std::size_t i = 0; i < x.at(l).size(); ++i)
        if (eta_c.level[l][i] != kUndef) fixed[l].push_back({eta_c.level[l][i], eta_a.level[l][i]});
    auto maps = enumerate_algebra_maps(c, free, target, fixed, opt.max_maps * 10, opt);
    r.check("alpha_unique").expect(maps.size() == 1 && maps[0] == alpha,
                                   std::to_string(maps.size()) + " algebra maps restrict to eta at " + where);
    // Pullback of Ωε along α, then α again.
    Obj osx = target.carrier;
    Obj sosx = a.left.apply(osx);
    Mor ceta = c.fmap(x, osx, free.carrier, target.tx, eta_a);
    try {
      Mor pulled_sx = t.compose(a.right.fmap(sosx, sx, gamma.apply(osx), osx, a.counit(sx, osx, sosx)),
                                alpha_map(c, a, act, osx, target.tx));
      cmp_mor(r.check("pullback_alpha_round_trip"), t.compose(pulled_sx, ceta), alpha, free.carrier,
              "alpha from the pullback action differs at " + where);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Bound) throw;
      ++r.check("pullback_alpha_round_trip").partial;
    }
    // η_C on the free algebra through Σ_C(CX) ≅ ΣX. Needs coequalizers in S.
    if (s.shape().monoid) {
      ++r.check("eta_c_on_free_equals_alpha").partial;
      r.info()["no_coequalizers_in"] = s.name();
      continue;
    }
    Coequalized q = coequalized_sigma(f, c, free);
    Obj osq = a.right.apply(q.object);
    Obj ocx = a.right.apply(q.fy);
    Mor eta_c_free = t.compose(a.right.fmap(q.fy, q.object, ocx, osq, q.q), a.unit(free.carrier, q.fy, ocx));
    Mor psi = factor_through(s, q, sx, f.beta(x, free.carrier, q.fy, sx));
    Mor opsi = a.right.fmap(q.object, sx, osq, osx, psi);
    cmp_mor(r.check("eta_c_on_free_equals_alpha"), t.compose(opsi, eta_c_free), alpha, free.carrier,
            "eta_C on the free algebra differs from alpha at " + where);
  }
  for (std::size_t i = 0; i < s_probes.size(); ++i) {
    const Obj& z = s_probes[i];
    Obj soz = a.left.apply(oz[i].carrier);
    try {
      Mor pulled = t.compose(
          a.right.fmap(soz, z, gamma.apply(oz[i].carrier), oz[i].carrier, a.counit(z, oz[i].carrier, soz)),
          alpha_map(c, a, act, oz[i].carrier, oz[i].tx));
      cmp_mor(r.check("pullback_action_recovered"), pulled, oz[i].theta, oz[i].tx,
              "pullback action differs at " + describe(s, z));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Bound) throw;
      ++r.check("pullback_action_recovered").partial;
    }
  }
  return r;
}

// ---- monad pairs ----

namespace {

std::vector<Value> spread(const std::vector<Value>& elems, std::size_t count) {
  std::vector<Value> v;
  for (const auto& e : elems)
    if (!e.is_base()) v.push_back(e);
  if (v.size() <= count) return elems;
  std::stable_sort(v.begin(), v.end(), [](const Value& a, const Value& b) { return a.weight() < b.weight(); });
  std::size_t head = count / 2, rest = count - head;
  std::vector<Value> out(v.begin(), v.begin() + head);
  out.push_back(Value::base());
  for (std::size_t i = 0; i < rest; ++i)
    out.push_back(v[head + (rest == 1 ? v.size() - 1 - head : i * (v.size() - 1 - head) / (rest - 1))]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Sampler {
  const PairOptions& opt;
  bool complete = true;
  std::vector<Value> over(const TermMonad& t, const std::vector<Value>& letters) {
    auto l = spread(letters, opt.letters);
    if (l.size() < letters.size()) complete = false;
    return t.enumerate(l, opt.cap, complete);
  }
  std::vector<Value> all(const TermMonad& t, const std::vector<Value>& letters) {
    return t.enumerate(letters, opt.cap, complete);
  }
};

using OptV = std::optional<Value>;

void cmpv(CheckResult& cr, const OptV& a, const OptV& b, const std::function<std::string()>& w) {
  if (!a || !b) {
    ++cr.partial;
    return;
  }
  if (*a == *b) cr.pass();
  else cr.fail(w());
}

// A total or partial table CX -> X as a value function.
TermMonad::Fn table_fn(const Obj& src, const Obj& dst, const Mor& m) {
  return [&src, &dst, &m](const Value& v) -> OptV {
    auto i = src.at(0).find(v);
    if (!i || m.level[0][*i] == kUndef) return std::nullopt;
    return dst.at(0)[m.level[0][*i]];
  };
}

}  // namespace

Report check_monad_pair(const MonadPair& p, CatPtr cat, const std::vector<Obj>& probes, const PairOptions& opt) {
  const TermMonad& C = *p.c;
  const TermMonad& J = *p.j;
  TermMonadPtr cj_ptr = composite_terms(p);
  const TermMonad& CJ = *cj_ptr;
  const auto& rho = p.rho;
  Report r("monad pair " + p.name);
  for (const char* n : {"rho_lands_in_CJ", "unit_J_eta_C", "unit_eta_J_C", "pentagon_mu_C", "pentagon_mu_J",
                        "rho_naturality", "C_eta_J_unit", "C_eta_J_mult", "eta_C_J_unit", "eta_C_J_mult",
                        "identity_composite"})
    r.check(n);
  Sampler sm{opt};
  auto show = [](const Value& v) { return v.str(); };
  for (const Obj& x : probes) {
    for (std::size_t l = 0; l < x.levels.size(); ++l) {
      const auto& X = x.at(l).elems();
      auto jx = sm.all(J, X);
      auto cx = sm.all(C, X);
      auto cjx = sm.all(CJ, X);
      std::set<Value> cjset(cjx.begin(), cjx.end());
      auto jcx = sm.over(J, cx);
      auto jccx = sm.over(J, sm.over(C, cx));
      auto jjcx = sm.over(J, sm.over(J, cx));
      for (const auto& w : jcx) {
        auto v = rho(w);
        if (!v) {
          ++r.check("rho_lands_in_CJ").partial;
          continue;
        }
        r.check("rho_lands_in_CJ").expect_lazy(cjset.count(*v) || !sm.complete, [&] { return show(*v); });
      }
      for (const auto& t : jx)
        cmpv(r.check("unit_J_eta_C"), [&]() -> OptV {
          auto u = J.fmap(C.unit, t);
          return u ? rho(*u) : std::nullopt;
        }(), C.unit(t), [&] { return "rho J eta != eta J at " + show(t); });
      for (const auto& s : cx)
        cmpv(r.check("unit_eta_J_C"), [&]() -> OptV {
          auto u = J.unit(s);
          return u ? rho(*u) : std::nullopt;
        }(), C.fmap(J.unit, s), [&] { return "rho eta C != C eta at " + show(s); });
      for (const auto& w : jccx) {
        auto u = J.fmap(C.mult, w);
        OptV lhs = u ? rho(*u) : std::nullopt;
        auto r1 = rho(w);
        auto r2 = r1 ? C.fmap(rho, *r1) : std::nullopt;
        OptV rhs = r2 ? C.mult(*r2) : std::nullopt;
        cmpv(r.check("pentagon_mu_C"), lhs, rhs, [&] { return "at " + show(w); });
      }
      for (const auto& w : jjcx) {
        auto u = J.mult(w);
        OptV lhs = u ? rho(*u) : std::nullopt;
        auto r1 = J.fmap(rho, w);
        auto r2 = r1 ? rho(*r1) : std::nullopt;
        OptV rhs = r2 ? C.fmap(J.mult, *r2) : std::nullopt;
        cmpv(r.check("pentagon_mu_J"), lhs, rhs, [&] { return "at " + show(w); });
      }
      // C η_J and η_C J are maps of monads.
      auto jcj = [&](const Value& u) { return C.fmap(J.unit, u); };  // C η_J
      for (const auto& v : X) {
        auto e = C.unit(v);
        cmpv(r.check("C_eta_J_unit"), e ? jcj(*e) : std::nullopt, CJ.unit(v), [&] { return "at " + show(v); });
        auto je = J.unit(v);
        cmpv(r.check("eta_C_J_unit"), je ? C.unit(*je) : std::nullopt, CJ.unit(v), [&] { return "at " + show(v); });
      }
      for (const auto& s2 : sm.over(C, cx)) {
        auto m = C.mult(s2);
        OptV lhs = m ? jcj(*m) : std::nullopt;
        auto in = C.fmap(jcj, s2);
        auto out = in ? C.fmap(J.unit, *in) : std::nullopt;
        OptV rhs = out ? CJ.mult(*out) : std::nullopt;
        cmpv(r.check("C_eta_J_mult"), lhs, rhs, [&] { return "at " + show(s2); });
      }
      for (const auto& w : sm.over(J, jx)) {
        auto m = J.mult(w);
        OptV lhs = m ? C.unit(*m) : std::nullopt;
        auto in = J.fmap(C.unit, w);
        auto out = in ? C.unit(*in) : std::nullopt;
        OptV rhs = out ? CJ.mult(*out) : std::nullopt;
        cmpv(r.check("eta_C_J_mult"), lhs, rhs, [&] { return "at " + show(w); });
      }
      // μ ∘ Cη_J CJ ∘ Cη_C J = id.
      for (const auto& t : cjx) {
        auto s = C.fmap(C.unit, t);
        auto u = s ? C.fmap(J.unit, *s) : std::nullopt;
        cmpv(r.check("identity_composite"), u ? CJ.mult(*u) : std::nullopt, t, [&] { return "at " + show(t); });
      }
    }
  }
  // Naturality of ρ on maps among the probes.
  const Category& c = *cat;
  for (const Obj& x : probes)
    for (const Obj& y : probes)
      for (const Mor& f : c.homs(x, y, 2000)) {
        LevelFn fn = c.as_fn(x, y, f);
        for (std::size_t l = 0; l < x.levels.size(); ++l) {
          auto fl = [&](const Value& v) { return fn(l, v); };
          for (const auto& w : sm.over(J, sm.all(C, x.at(l).elems()))) {
            auto u = J.fmap([&](const Value& s) { return C.fmap(fl, s); }, w);
            OptV lhs = u ? rho(*u) : std::nullopt;
            auto rw = rho(w);
            OptV rhs = rw ? CJ.fmap(fl, *rw) : std::nullopt;
            cmpv(r.check("rho_naturality"), lhs, rhs, [&] { return "at " + show(w); });
          }
        }
      }
  Monad cjm = lift(cj_ptr, cat);
  CheckOptions co;
  co.sample_letters = opt.letters;
  co.sample_cap = opt.cap;
  r.merge(check_monad(cjm, probes, co), "composite.");
  if (opt.algebras) {
    Monad cm = lift(p.c, cat), jm = lift(p.j, cat);
    r.check("pairs_to_composite");
    r.check("correspondence_cardinality");
    r.check("correspondence_round_trip");
    nlohmann::json cards = nlohmann::json::array();
    for (const Obj& x : probes) {
      bool c1 = true, c2 = true, c3 = true;
      auto jalgs = enumerate_algebras(jm, x, opt.alg_limit, co, &c1);
      auto calgs = enumerate_algebras(cm, x, opt.alg_limit, co, &c2);
      auto cjalgs = enumerate_algebras(cjm, x, opt.alg_limit, co, &c3);
      Obj cx = cm.apply(x), jx = jm.apply(x), cjx = cjm.apply(x);
      std::vector<Value> jcx;
      {
        bool complete = true;
        jcx = J.enumerate(cx.at(0).elems(), opt.cap, complete);
        c1 = c1 && complete;
      }
      std::size_t compatible = 0;
      std::set<std::vector<std::size_t>> images;
      std::set<std::vector<std::size_t>> cj_tables;
      for (const auto& a : cjalgs) cj_tables.insert(a.theta.level[0]);
      for (const auto& xi : jalgs)
        for (const auto& th : calgs) {
          auto xif = table_fn(jx, x, xi.theta);
          auto thf = table_fn(cx, x, th.theta);
          bool ok = true;
          for (const auto& w : jcx) {
            auto rw = rho(w);
            auto a1 = rw ? C.fmap(xif, *rw) : std::nullopt;
            auto lhs = a1 ? thf(*a1) : std::nullopt;
            auto b1 = J.fmap(thf, w);
            auto rhs = b1 ? xif(*b1) : std::nullopt;
            if (lhs && rhs && *lhs != *rhs) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          ++compatible;
          Mor big = c.tabulate(cjx, x, [&](std::size_t, const Value& t) -> OptV {
            auto u = C.fmap(xif, t);
            return u ? thf(*u) : std::nullopt;
          });
          r.check("pairs_to_composite")
              .expect(cj_tables.count(big.level[0]) != 0, "theta C xi is not a CJ-algebra on " + describe(c, x));
          images.insert(big.level[0]);
          // Θ ↦ (Θ η_C J, Θ C η_J) recovers the pair.
          auto bigf = table_fn(cjx, x, big);
          Mor xi2 = c.tabulate(jx, x, [&](std::size_t, const Value& t) -> OptV {
            auto u = C.unit(t);
            return u ? bigf(*u) : std::nullopt;
          });
          Mor th2 = c.tabulate(cx, x, [&](std::size_t, const Value& t) -> OptV {
            auto u = C.fmap(J.unit, t);
            return u ? bigf(*u) : std::nullopt;
          });
          r.check("correspondence_round_trip")
              .expect(xi2 == xi.theta && th2 == th.theta, "round trip fails on " + describe(c, x));
        }
      r.check("correspondence_cardinality")
          .expect(compatible == cjalgs.size() && images.size() == compatible,
                  std::to_string(compatible) + " compatible pairs, " + std::to_string(images.size()) + " images, " +
                      std::to_string(cjalgs.size()) + " CJ-algebras on " + describe(c, x));
      cards.push_back({{"probe", describe(c, x)},
                       {"J_algebras", jalgs.size()},
                       {"C_algebras", calgs.size()},
                       {"compatible_pairs", compatible},
                       {"CJ_algebras", cjalgs.size()},
                       {"exhaustive", c1 && c2 && c3}});
    }
    r.info()["algebras"] = cards;
  }
  r.info()["exhaustive_diagrams"] = sm.complete;
  return r;
}

// ---- conjugate monads ----

Obj unit_object(const Adjunction& lr, const Obj& p) { return lr.right.apply(lr.left.apply(p)); }

Mor adjunction_unit(const Adjunction& lr, const Obj& p) {
  Obj lp = lr.left.apply(p);
  return lr.unit(p, lp, lr.right.apply(lp));
}

Monad conjugate_monad(const Monad& c, const Adjunction& lr) {
  Monad d;
  d.name = "R" + c.name + "L";
  d.cat = lr.left.src;
  d.truncated = c.truncated;
  Functor L = lr.left, R = lr.right;
  Monad cm = c;
  Adjunction adj = lr;
  d.apply = [L, R, cm](const Obj& p) { return R.apply(cm.apply(L.apply(p))); };
  d.fmap = [L, R, cm](const Obj& x, const Obj& y, const Obj& dx, const Obj& dy, const Mor& f) {
    Obj lx = L.apply(x), ly = L.apply(y);
    Obj clx = cm.apply(lx), cly = cm.apply(ly);
    return R.fmap(clx, cly, dx, dy, cm.fmap(lx, ly, clx, cly, L.fmap(x, y, lx, ly, f)));
  };
  d.unit = [adj, cm](const Obj& p, const Obj& dp) {
    const Category& t = *adj.left.src;
    Obj lp = adj.left.apply(p);
    Obj rlp = adj.right.apply(lp);
    Obj clp = cm.apply(lp);
    Mor eta = adj.unit(p, lp, rlp);
    return t.compose(adj.right.fmap(lp, clp, rlp, dp, cm.unit(lp, clp)), eta);
  };
  d.mult = [adj, cm](const Obj& p, const Obj& dp, const Obj& ddp) {
    const Category& s = *adj.left.dst;
    Obj lp = adj.left.apply(p);
    Obj clp = cm.apply(lp);
    Obj ldp = adj.left.apply(dp);  // L R C L P
    Obj cldp = cm.apply(ldp);
    Obj cclp = cm.apply(clp);
    Mor eps = adj.counit(clp, dp, ldp);
    Mor ceps = cm.fmap(ldp, clp, cldp, cclp, eps);
    Mor mu = cm.mult(lp, clp, cclp);
    return adj.right.fmap(cldp, clp, ddp, dp, s.compose(mu, ceps));
  };
  return d;
}

Report check_lr_identity(const Adjunction& lr, const std::vector<Obj>& s_probes) {
  const Category& s = *lr.left.dst;
  Report r("LR = Id for " + lr.name);
  r.check("lr_is_identity");
  r.check("counit_is_identity");
  for (const Obj& z : s_probes) {
    Obj rz = lr.right.apply(z);
    Obj lrz = lr.left.apply(rz);
    r.check("lr_is_identity").expect(same_obj(lrz, z), "L R Z != Z at " + describe(s, z));
    if (same_obj(lrz, z))
      r.check("counit_is_identity").expect(lr.counit(z, rz, lrz) == s.identity(z), "counit != id at " + describe(s, z));
  }
  return r;
}

TermMonadPtr group_smash_terms(GroupPtr k) {
  auto m = std::make_shared<TermMonad>();
  m->name = k->name() + "+^-";
  m->based = true;
  m->enumerate = [k](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    std::vector<Value> nb;
    for (const auto& v : letters)
      if (!v.is_base()) nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    std::vector<Value> out{Value::base()};
    for (std::size_t g = 0; g < k->order(); ++g)
      for (const auto& v : nb) {
        if (out.size() >= cap) {
          complete = false;
          return out;
        }
        out.push_back(pair_value(g, v));
      }
    return out;
  };
  m->unit = [k](const Value& x) -> OptV { return x.is_base() ? x : pair_value(k->identity(), x); };
  m->mult = [k](const Value& t) -> OptV {
    if (t.is_base()) return t;
    const Value& in = t[1];
    if (in.is_base()) return Value::base();
    return pair_value(k->mul(pair_g(t), pair_g(in)), in[1]);
  };
  m->fmap = [](const TermMonad::Fn& f, const Value& t) -> OptV {
    if (t.is_base()) return t;
    auto v = f(t[1]);
    if (!v) return std::nullopt;
    if (v->is_base()) return Value::base();
    return pair_value(pair_g(t), *v);
  };
  return m;
}

MonadMap iota_map(const Adjunction& lr, const Monad& d, const Monad& rcl) {
  Adjunction adj = lr;
  Monad dm = d;
  (void)rcl;
  return [adj, dm](const Obj& p, const Obj& dp, const Obj& rclp) {
    const Category& t = *adj.left.src;
    Obj rlp = unit_object(adj, p);
    Mor eta = adjunction_unit(adj, p);
    Obj drlp = dm.apply(rlp);
    Mor deta = dm.fmap(p, rlp, dp, drlp, eta);
    // ω_{LP}: D R L P -> R C L P is the identity on elements.
    Mor omega = t.tabulate(drlp, rclp, [](std::size_t, const Value& v) { return v; });
    return t.compose(omega, deta);
  };
}

bool is_strictly_special(const Adjunction& lr, const Obj& p, std::string* why) {
  return lr.left.src->is_iso(p, unit_object(lr, p), adjunction_unit(lr, p), why);
}

Report conjugate_check(const Monad& c, const Monad& d, const Adjunction& lr, const std::vector<Obj>& t_probes,
                       const std::vector<Obj>& s_probes, const CheckOptions& opt) {
  const Category& t = *lr.left.src;
  const Category& s = *lr.left.dst;
  Report r("conjugate monad R" + c.name + "L");
  for (const char* n : {"omega_identity", "r_preserves_algebras", "d_preserves_special", "rcl_preserves_special"})
    r.check(n);
  r.merge(check_lr_identity(lr, s_probes));
  Monad rcl = conjugate_monad(c, lr);
  r.merge(check_monad(rcl, t_probes, opt), "rcl.");
  r.merge(check_monad(d, t_probes, opt), "d.");
  for (const Obj& z : s_probes) {
    Obj rz = lr.right.apply(z);
    r.check("omega_identity").expect(same_obj(d.apply(rz), lr.right.apply(c.apply(z))),
                                     "D R Z != R C Z at " + describe(s, z));
    for (const Algebra& a : enumerate_algebras(c, z, 100000, opt)) {
      // R Z with R θ ∘ R C ε.
      Obj drz = rcl.apply(rz);
      Obj lrz = lr.left.apply(rz);
      Obj clrz = c.apply(lrz);
      Mor ceps = c.fmap(lrz, z, clrz, a.tx, lr.counit(z, rz, lrz));
      Algebra ra{rz, drz, lr.right.fmap(clrz, z, drz, rz, s.compose(a.theta, ceps))};
      Report ar = check_algebra(rcl, ra, opt);
      r.check("r_preserves_algebras").expect(ar.ok(), "R of a C-algebra fails the laws at " + describe(s, z));
    }
  }
  r.merge(check_monad_map(d, rcl, iota_map(lr, d, rcl), t_probes, opt), "iota.");
  std::size_t special = 0;
  for (const Obj& p : t_probes) {
    if (!is_strictly_special(lr, p)) continue;
    ++special;
    std::string why;
    r.check("d_preserves_special").expect_lazy(is_strictly_special(lr, d.apply(p), &why),
                                               [&] { return why + " at " + describe(t, p); });
    r.check("rcl_preserves_special").expect_lazy(is_strictly_special(lr, rcl.apply(p), &why),
                                                 [&] { return why + " at " + describe(t, p); });
  }
  r.info()["strictly_special_probes"] = special;
  r.info()["probes"] = t_probes.size();
  return r;
}

}  // namespace opcat
