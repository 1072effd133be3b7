#include "opcat/pi_objects.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opcat/error.hpp"
#include "opcat/terms.hpp"
#include "opcat/util.hpp"

namespace opcat {

Value tuple_value(std::vector<Value> ys) {
  if (std::all_of(ys.begin(), ys.end(), [](const Value& v) { return v.is_base(); })) return Value::base();
  return Value::node(tag::Tuple, std::move(ys));
}

std::vector<Value> tuple_entries(const Value& v, std::size_t n) {
  if (v.is_base()) return std::vector<Value>(n, Value::base());
  if (!(v.is_node() && v.tag() == tag::Tuple && v.size() == n)) fail(ErrorCode::Domain,
          "not a " + std::to_string(n) + "-tuple: " + v.str());
  return v.kids();
}

std::size_t pi_arrow(const Category& pi, const BasedMap& f) {
  const auto& maps = pi.shape().pi_maps;
  auto it = std::find(maps.begin(), maps.end(), f);
  if (!(it != maps.end())) fail(ErrorCode::Domain, "no arrow " + to_string(f) + " in " + pi.name());
  return static_cast<std::size_t>(it - maps.begin());
}

namespace {

Value apply_pi(const BasedMap& f, const Value& v) {
  auto ys = tuple_entries(v, f.source());
  std::vector<Value> out(f.target(), Value::base());
  for (std::size_t i = 1; i <= f.source(); ++i)
    if (f(i) != 0) out[f(i) - 1] = ys[i - 1];
  return tuple_value(std::move(out));
}

}  // namespace

Obj pi_sub_power(const Category& pi, const Obj& y, const std::vector<std::vector<Value>>& levels) {
  if (!(!pi.shape().pi_maps.empty() || pi.num_levels() == 1)) fail(ErrorCode::Validation,
          "pi_power: " + pi.name() + " is not a Π category");
  (void)y;
  auto lv = levels;
  return pi.make(std::move(lv), [&](std::size_t a, const Value& v) { return apply_pi(pi.shape().pi_maps[a], v); });
}

Obj pi_power(const Category& pi, const Obj& y) {
  const auto& ys = y.at(0).elems();
  std::vector<std::vector<Value>> levels(pi.num_levels());
  for (std::size_t n = 0; n < pi.num_levels(); ++n) {
    std::vector<std::size_t> dims(n, ys.size());
    for_each_digits(dims, [&](const std::vector<std::size_t>& d) {
      std::vector<Value> t;
      for (std::size_t i : d) t.push_back(ys[i]);
      levels[n].push_back(tuple_value(std::move(t)));
    });
    std::sort(levels[n].begin(), levels[n].end());
  }
  return pi_sub_power(pi, y, levels);
}

Report segal_special(const Category& pi, const Obj& x) {
  Report r("Segal maps");
  CheckResult& ck = r.check("delta_bijective");
  std::size_t N = pi.num_levels() - 1;
  nlohmann::json per = nlohmann::json::array();
  bool all = true;
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<std::size_t> deltas;
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<std::size_t> t(n + 1, 0);
      t[j] = 1;
      deltas.push_back(pi_arrow(pi, BasedMap(n, 1, t)));
    }
    std::set<std::vector<std::size_t>> images;
    for (std::size_t i = 0; i < x.at(n).size(); ++i) {
      std::vector<std::size_t> img;
      for (std::size_t a : deltas) img.push_back(x.arrows[a][i]);
      images.insert(std::move(img));
    }
    std::size_t target = 1;
    for (std::size_t j = 0; j < n; ++j) target *= x.at(1).size();
    bool inj = images.size() == x.at(n).size();
    bool bij = inj && images.size() == target;
    per.push_back({{"n", n}, {"size", x.at(n).size()}, {"target", target}, {"injective", inj}, {"bijective", bij}});
    ck.expect(bij, "delta at n = " + std::to_string(n) + ": " + std::to_string(x.at(n).size()) + " elements, " +
                       std::to_string(images.size()) + " distinct images, " + std::to_string(target) + " targets");
    all = all && bij;
  }
  r.info()["strictly_special"] = all;
  r.info()["per_level"] = per;
  return r;
}

namespace {

struct CoData {
  std::shared_ptr<const CatOfOperators> d;
  CompositionTables tables;
  CatPtr pi;
  std::vector<std::size_t> iota;  // per pi arrow: index of ι(f) in D(src, dst)

  explicit CoData(std::shared_ptr<const CatOfOperators> dd) : d(std::move(dd)), tables(*d), pi(pi_category(d->bound())) {
    for (std::size_t a = 0; a < pi->shape().pi_maps.size(); ++a) {
      const BasedMap& f = pi->shape().pi_maps[a];
      iota.push_back(d->index(f.source(), f.target(), co_iota(d->operad(), f)));
    }
  }
  std::size_t N() const { return d->bound(); }
  std::size_t hom(std::size_t m, std::size_t n) const { return d->homs(m, n).size(); }
  // a ∘ b for a ∈ D(n,p), b ∈ D(m,n).
  std::size_t comp(std::size_t m, std::size_t n, std::size_t p, std::size_t a, std::size_t b) const {
    return tables.table(m, n, p)[a * hom(m, n) + b];
  }
  std::size_t id(std::size_t n) const { return d->index(n, n, co_identity(d->operad(), n)); }
};

// Classes of ∐_m D(m,n) × X(m) per level n.
struct Quotient {
  const CoData& cd;
  const Obj& x;
  std::vector<std::vector<std::size_t>> off;
  std::vector<UnionFind> uf;

  Quotient(const CoData& c, const Obj& xx) : cd(c), x(xx) {
    std::size_t N = cd.N();
    const Category& pi = *cd.pi;
    require(x.levels.size() == N + 1, ErrorCode::Validation, "co_monad: object has the wrong number of levels");
    off.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      std::size_t t = 0;
      for (std::size_t m = 0; m <= N; ++m) {
        off[n].push_back(t);
        t += cd.hom(m, n) * x.at(m).size();
      }
      off[n].push_back(t);
      uf.emplace_back(t);
      for (std::size_t ar = 0; ar < pi.shape().pi_maps.size(); ++ar) {
        const BasedMap& f = pi.shape().pi_maps[ar];
        std::size_t m1 = f.source(), m = f.target();
        std::size_t xs = x.at(m1).size(), xt = x.at(m).size();
        for (std::size_t a = 0; a < cd.hom(m, n); ++a) {
          std::size_t af = cd.comp(m1, m, n, a, cd.iota[ar]);
          for (std::size_t i = 0; i < xs; ++i)
            uf[n].unite(off[n][m1] + af * xs + i, off[n][m] + a * xt + x.arrows[ar][i]);
        }
      }
    }
  }
  std::size_t gen(std::size_t n, std::size_t m, std::size_t a, std::size_t i) const {
    return off[n][m] + a * x.at(m).size() + i;
  }
  Value name_of_root(std::size_t n, std::size_t r) const {
    if (r == 0) return Value::base();
    std::size_t m = 0;
    while (off[n][m + 1] <= r) ++m;
    std::size_t k = r - off[n][m], xs = x.at(m).size();
    return Value::node(tag::Co, {Value::atom(static_cast<std::int64_t>(m)), Value::atom(static_cast<std::int64_t>(k / xs)),
                                 x.at(m)[k % xs]});
  }
  Value name(std::size_t n, std::size_t m, std::size_t a, std::size_t i) { return name_of_root(n, uf[n].find(gen(n, m, a, i))); }
  std::vector<Value> level(std::size_t n) {
    std::set<std::size_t> roots;
    for (std::size_t g = 0; g < off[n].back(); ++g) roots.insert(uf[n].find(g));
    std::vector<Value> out;
    for (std::size_t r : roots) out.push_back(name_of_root(n, r));
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct Gen {
  std::size_t m, a;
  Value x;
};

// Base decodes as the level-0 generator.
Gen decode(const Value& v) {
  if (v.is_base()) return {0, 0, Value::base()};
  return {static_cast<std::size_t>(v[0].atom_value()), static_cast<std::size_t>(v[1].atom_value()), v[2]};
}

Obj build(const CoData& cd, const Obj& x) {
  Quotient q(cd, x);
  std::size_t N = cd.N();
  std::vector<std::vector<Value>> levels;
  for (std::size_t n = 0; n <= N; ++n) levels.push_back(q.level(n));
  const Category& pi = *cd.pi;
  return pi.make(std::move(levels), [&](std::size_t ar, const Value& v) {
    const BasedMap& g = pi.shape().pi_maps[ar];
    Gen e = decode(v);
    std::size_t a2 = cd.comp(e.m, g.source(), g.target(), cd.iota[ar], e.a);
    return q.name(g.target(), e.m, a2, x.at(e.m).index(e.x));
  });
}

}  // namespace

Monad co_monad(std::shared_ptr<const CatOfOperators> d) {
  auto cd = std::make_shared<const CoData>(std::move(d));
  Monad m;
  m.name = "D(" + cd->d->operad().name() + ")";
  m.cat = cd->pi;
  m.apply = [cd](const Obj& x) { return build(*cd, x); };
  m.fmap = [cd](const Obj& x, const Obj& y, const Obj& dx, const Obj&, const Mor& f) {
    Quotient qy(*cd, y);
    Mor out;
    for (std::size_t n = 0; n <= cd->N(); ++n) {
      out.level.emplace_back();
      for (const Value& v : dx.at(n).elems()) {
        Gen e = decode(v);
        std::size_t yi = f.level[e.m][x.at(e.m).index(e.x)];
        out.level.back().push_back(yi == kUndef ? kUndef : qy.uf[n].find(qy.gen(n, e.m, e.a, yi)));
      }
    }
    // Roots to indices in d y.
    Obj dy = build(*cd, y);
    for (std::size_t n = 0; n <= cd->N(); ++n)
      for (auto& i : out.level[n])
        if (i != kUndef) i = dy.at(n).index(qy.name_of_root(n, i));
    return out;
  };
  m.unit = [cd](const Obj& x, const Obj& dx) {
    Quotient q(*cd, x);
    Mor out;
    for (std::size_t n = 0; n <= cd->N(); ++n) {
      out.level.emplace_back();
      std::size_t id = cd->id(n);
      for (std::size_t i = 0; i < x.at(n).size(); ++i) out.level.back().push_back(dx.at(n).index(q.name(n, n, id, i)));
    }
    return out;
  };
  m.mult = [cd](const Obj& x, const Obj& dx, const Obj& ddx) {
    Quotient q(*cd, x);
    Mor out;
    for (std::size_t n = 0; n <= cd->N(); ++n) {
      out.level.emplace_back();
      for (const Value& v : ddx.at(n).elems()) {
        Gen outer = decode(v);
        Gen inner = decode(outer.x);
        std::size_t ab = cd->comp(inner.m, outer.m, n, outer.a, inner.a);
        out.level.back().push_back(dx.at(n).index(q.name(n, inner.m, ab, x.at(inner.m).index(inner.x))));
      }
    }
    return out;
  };
  return m;
}

Report check_omega(std::shared_ptr<const CatOfOperators> d, const Obj& y) {
  CoData cd(d);
  const Operad& op = d->operad();
  std::size_t N = cd.N();
  const Category& pi = *cd.pi;
  Report r("omega: D R = R C for " + op.name());
  for (const char* n : {"well_defined", "injective", "surjective", "pi_natural", "level_one_is_CY"}) r.check(n);
  Obj ry = pi_power(pi, y);
  Quotient q(cd, ry);
  Obj dry = build(cd, ry);
  Obj cy = lift(operad_terms(d->operad_ptr(), N), pointed_category()).apply(y);
  auto arity = [](const Value& t) { return t.is_base() ? std::size_t{0} : static_cast<std::size_t>(t[0].atom_value()); };
  auto omega = [&](std::size_t n, std::size_t m, std::size_t a, const Value& yv) {
    const COMorphism& mor = d->homs(m, n)[a];
    auto ys = tuple_entries(yv, m);
    std::vector<Value> out;
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<Value> letters;
      for (std::size_t i : mor.phi.fiber(j)) letters.push_back(ys[i - 1]);
      std::size_t len = letters.size();
      out.push_back(operad_normal_form(op, len, mor.c[j - 1], std::move(letters)));
    }
    return tuple_value(std::move(out));
  };
  std::vector<std::map<Value, Value>> images(N + 1);  // class name -> ω
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t a = 0; a < cd.hom(m, n); ++a)
        for (std::size_t i = 0; i < ry.at(m).size(); ++i) {
          Value cls = q.name(n, m, a, i);
          Value w = omega(n, m, a, ry.at(m)[i]);
          auto [it, fresh] = images[n].emplace(cls, w);
          if (!fresh)
            r.check("well_defined").expect_lazy(it->second == w, [&] { return "class " + cls.str() + " at n = " + std::to_string(n); });
        }
    std::set<Value> seen;
    for (const auto& [cls, w] : images[n]) seen.insert(w);
    r.check("injective").expect(seen.size() == images[n].size(), "two classes share an image at n = " + std::to_string(n));
    // Tuples of C-terms of total arity ≤ N.
    std::size_t target = 0;
    std::vector<std::size_t> dims(n, cy.at(0).size());
    bool all_hit = true;
    for_each_digits(dims, [&](const std::vector<std::size_t>& dgt) {
      std::size_t tot = 0;
      std::vector<Value> t;
      for (std::size_t k : dgt) {
        tot += arity(cy.at(0)[k]);
        t.push_back(cy.at(0)[k]);
      }
      if (tot > N) return;
      ++target;
      all_hit = all_hit && seen.count(tuple_value(t)) != 0;
    });
    r.check("surjective").expect(all_hit && target == seen.size(),
                                 std::to_string(seen.size()) + " images vs " + std::to_string(target) + " tuples at n = " +
                                     std::to_string(n));
  }
  for (std::size_t ar = 0; ar < pi.shape().pi_maps.size(); ++ar) {
    const BasedMap& g = pi.shape().pi_maps[ar];
    for (std::size_t i = 0; i < dry.at(g.source()).size(); ++i) {
      const Value& v = dry.at(g.source())[i];
      const Value& gv = dry.at(g.target())[dry.arrows[ar][i]];
      r.check("pi_natural").expect_lazy(images[g.target()].at(gv) == apply_pi(g, images[g.source()].at(v)),
                                        [&] { return "at " + v.str() + " under " + to_string(g); });
    }
  }
  std::set<Value> level_one;
  for (const auto& [cls, w] : images[std::min<std::size_t>(1, N)]) level_one.insert(tuple_entries(w, 1)[0]);
  std::set<Value> cset(cy.at(0).elems().begin(), cy.at(0).elems().end());
  r.check("level_one_is_CY").expect(N >= 1 && level_one == cset, "(D R Y)(1) differs from C Y");
  r.info()["sizes"] = nlohmann::json::array();
  for (std::size_t n = 0; n <= N; ++n) r.info()["sizes"].push_back(dry.at(n).size());
  r.info()["CY"] = cy.at(0).size();
  return r;
}

}  // namespace opcat
