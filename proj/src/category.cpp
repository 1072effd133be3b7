#include "opcat/category.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/error.hpp"
#include "opcat/util.hpp"

namespace opcat {

std::size_t Obj::total_size() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l->size();
  return n;
}

bool Mor::total() const {
  for (const auto& l : level)
    for (std::size_t v : l)
      if (v == kUndef) return false;
  return true;
}

Category::Category(Shape s) : shape_(std::move(s)) {
  require(!shape_.level_names.empty(), ErrorCode::Validation, "category: no levels");
  for (const auto& a : shape_.arrows)
    if (!(a.src < num_levels() && a.dst < num_levels())) fail(ErrorCode::Validation,
            "category: arrow " + a.label + " out of range");
  require(!shape_.monoid || num_levels() == 1, ErrorCode::Validation,
          "category: a monoid shape has one level");
}

Obj Category::make(std::vector<std::vector<Value>> levels,
                   const std::function<Value(std::size_t, const Value&)>& arrow_fn) const {
  require(levels.size() == num_levels(), ErrorCode::Validation, "object: wrong number of levels");
  Obj x;
  for (auto& l : levels) x.levels.push_back(make_carrier(std::move(l)));
  x.arrows.resize(shape_.arrows.size());
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& src = x.at(shape_.arrows[a].src);
    const auto& dst = x.at(shape_.arrows[a].dst);
    x.arrows[a].resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      Value v = arrow_fn(a, src[i]);
      auto j = dst.find(v);
      if (!j.has_value()) fail(ErrorCode::Validation,
              "object: arrow " + shape_.arrows[a].label + " sends " + src[i].str() + " to " + v.str() +
                  " outside its target level");
      x.arrows[a][i] = *j;
    }
  }
  validate(x);
  return x;
}

Obj Category::make_monoid(std::vector<Value> elems,
                          const std::function<std::optional<Value>(const Value&, const Value&)>& mul,
                          const Value& unit) const {
  require(shape_.monoid, ErrorCode::Validation, "object: not a monoid category");
  Obj x;
  x.levels.push_back(make_carrier(std::move(elems)));
  const auto& c = x.at(0);
  x.unit = c.index(unit);
  if (!(c.size() <= 2000)) fail(ErrorCode::Bound, "monoid object with " + std::to_string(c.size()) + " elements exceeds 2000");
  x.product.assign(c.size(), std::vector<std::size_t>(c.size(), kUndef));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (auto v = mul(c[i], c[j])) x.product[i][j] = c.index(*v);
  validate(x);
  return x;
}

void Category::validate(const Obj& x) const {
  require(x.levels.size() == num_levels(), ErrorCode::Validation, "object: wrong number of levels");
  for (std::size_t l = 0; l < num_levels(); ++l) {
    require(x.levels[l] != nullptr, ErrorCode::Validation, "object: missing level");
    if (shape_.based)
      if (!(x.at(l).size() > 0 && x.at(l)[0].is_base())) fail(ErrorCode::Validation,
              "object: level " + shape_.level_names[l] + " lacks the basepoint");
  }
  require(x.arrows.size() == shape_.arrows.size(), ErrorCode::Validation, "object: wrong number of arrows");
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& ar = shape_.arrows[a];
    if (!(x.arrows[a].size() == x.at(ar.src).size())) fail(ErrorCode::Validation,
            "object: arrow " + ar.label + " has the wrong length");
    for (std::size_t v : x.arrows[a])
      if (!(v < x.at(ar.dst).size())) fail(ErrorCode::Validation, "object: arrow " + ar.label + " out of range");
    if (shape_.based)
      if (!(x.arrows[a][0] == 0)) fail(ErrorCode::Validation, "object: arrow " + ar.label + " moves the basepoint");
  }
  for (std::size_t a : shape_.identities)
    for (std::size_t i = 0; i < x.arrows[a].size(); ++i)
      if (!(x.arrows[a][i] == i)) fail(ErrorCode::Validation,
              "object: identity arrow " + shape_.arrows[a].label + " acts nontrivially");
  for (const auto& [a, b, c] : shape_.relations)
    for (std::size_t i = 0; i < x.arrows[b].size(); ++i)
      if (!(x.arrows[a][x.arrows[b][i]] == x.arrows[c][i])) fail(ErrorCode::Validation,
              "object: relation " + shape_.arrows[c].label + " = " + shape_.arrows[a].label + " after " +
                  shape_.arrows[b].label + " fails at " + x.at(shape_.arrows[b].src)[i].str());
  if (shape_.monoid) {
    std::size_t n = x.at(0).size();
    require(x.product.size() == n && x.unit < n, ErrorCode::Validation, "monoid: malformed product");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(x.product[x.unit][i] == i && x.product[i][x.unit] == i)) fail(ErrorCode::Validation,
              "monoid: unit law fails at " + x.at(0)[i].str());
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t ij = x.product[i][j];
        if (ij == kUndef) continue;
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t jk = x.product[j][k];
          if (jk == kUndef) continue;
          std::size_t l = x.product[ij][k], r = x.product[i][jk];
          if (l != kUndef && r != kUndef)
            if (!(l == r)) fail(ErrorCode::Validation, "monoid: associativity fails at " + x.at(0)[i].str() + "," +
                                                       x.at(0)[j].str() + "," + x.at(0)[k].str());
        }
      }
    }
  }
}

Mor Category::tabulate(const Obj& x, const Obj& y, const LevelFn& f) const {
  Mor m;
  m.level.resize(num_levels());
  for (std::size_t l = 0; l < num_levels(); ++l) {
    const auto& src = x.at(l);
    m.level[l].resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto v = f(l, src[i]);
      if (!v) {
        m.level[l][i] = kUndef;
        continue;
      }
      auto j = y.at(l).find(*v);
      if (!j.has_value()) fail(ErrorCode::Domain,
              "map sends " + src[i].str() + " to " + v->str() + ", which is not in the target");
      m.level[l][i] = *j;
    }
  }
  return m;
}

LevelFn Category::as_fn(const Obj& x, const Obj& y, const Mor& f) const {
  return [&x, &y, &f](std::size_t l, const Value& v) -> std::optional<Value> {
    auto i = x.at(l).find(v);
    if (!i || f.level[l][*i] == kUndef) return std::nullopt;
    return y.at(l)[f.level[l][*i]];
  };
}

bool Category::is_mor(const Obj& x, const Obj& y, const Mor& f, std::string* why) const {
  auto no = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (f.level.size() != num_levels()) return no("wrong number of levels");
  for (std::size_t l = 0; l < num_levels(); ++l) {
    if (f.level[l].size() != x.at(l).size()) return no("wrong table length");
    for (std::size_t i = 0; i < f.level[l].size(); ++i)
      if (f.level[l][i] == kUndef) return no("undefined at " + x.at(l)[i].str());
      else if (f.level[l][i] >= y.at(l).size()) return no("out of range");
    if (shape_.based && f.level[l][0] != 0) return no("basepoint not preserved");
  }
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& ar = shape_.arrows[a];
    for (std::size_t i = 0; i < x.at(ar.src).size(); ++i)
      if (f.level[ar.dst][x.arrows[a][i]] != y.arrows[a][f.level[ar.src][i]])
        return no("does not commute with " + ar.label + " at " + x.at(ar.src)[i].str());
  }
  if (shape_.monoid) {
    const auto& t = f.level[0];
    if (t[x.unit] != y.unit) return no("unit not preserved");
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::size_t ij = x.product[i][j];
        if (ij == kUndef) continue;
        if (y.product[t[i]][t[j]] != t[ij])
          return no("product not preserved at " + x.at(0)[i].str() + "," + x.at(0)[j].str());
      }
  }
  return true;
}

bool Category::is_iso(const Obj& x, const Obj& y, const Mor& f, std::string* why) const {
  if (!is_mor(x, y, f, why)) return false;
  Mor inv;
  inv.level.resize(num_levels());
  for (std::size_t l = 0; l < num_levels(); ++l) {
    if (x.at(l).size() != y.at(l).size()) {
      if (why) *why = "level " + shape_.level_names[l] + " sizes differ";
      return false;
    }
    inv.level[l].assign(y.at(l).size(), kUndef);
    for (std::size_t i = 0; i < f.level[l].size(); ++i) {
      if (inv.level[l][f.level[l][i]] != kUndef) {
        if (why) *why = "not injective at level " + shape_.level_names[l];
        return false;
      }
      inv.level[l][f.level[l][i]] = i;
    }
  }
  // Arrow structure transports automatically; products need the inverse to preserve them.
  return is_mor(y, x, inv, why);
}

Mor Category::identity(const Obj& x) const {
  Mor m;
  for (const auto& l : x.levels) {
    std::vector<std::size_t> t(l->size());
    std::iota(t.begin(), t.end(), 0);
    m.level.push_back(std::move(t));
  }
  return m;
}

Mor Category::compose(const Mor& g, const Mor& f) const {
  Mor m;
  m.level.resize(f.level.size());
  for (std::size_t l = 0; l < f.level.size(); ++l) {
    m.level[l].resize(f.level[l].size());
    for (std::size_t i = 0; i < f.level[l].size(); ++i) {
      std::size_t v = f.level[l][i];
      m.level[l][i] = v == kUndef ? kUndef : g.level[l][v];
    }
  }
  return m;
}

void Category::for_each_hom(const Obj& x, const Obj& y, std::size_t limit,
                            const std::function<void(const Mor&)>& visit) const {
  // Backtracking with forced propagation along arrows and products.
  std::size_t nl = num_levels();
  std::vector<std::size_t> off(nl + 1, 0);
  for (std::size_t l = 0; l < nl; ++l) off[l + 1] = off[l] + x.at(l).size();
  std::size_t nv = off[nl];
  std::vector<std::size_t> level_of(nv);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t i = off[l]; i < off[l + 1]; ++i) level_of[i] = l;

  struct Out {
    std::size_t arrow, target;
  };
  std::vector<std::vector<Out>> outs(nv);
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& ar = shape_.arrows[a];
    for (std::size_t i = 0; i < x.at(ar.src).size(); ++i)
      outs[off[ar.src] + i].push_back({a, off[ar.dst] + x.arrows[a][i]});
  }
  struct Prod {
    std::size_t a, b, c;
  };
  std::vector<Prod> prods;
  std::vector<std::vector<std::size_t>> prods_of(nv);
  if (shape_.monoid) {
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        if (x.product[i][j] != kUndef) {
          std::size_t id = prods.size();
          prods.push_back({i, j, x.product[i][j]});
          prods_of[i].push_back(id);
          if (j != i) prods_of[j].push_back(id);
          if (x.product[i][j] != i && x.product[i][j] != j) prods_of[x.product[i][j]].push_back(id);
        }
  }

  std::vector<std::size_t> val(nv, kUndef);
  std::vector<std::size_t> trail;
  std::size_t found = 0;

  // Assigns v := c and propagates; returns false on conflict (assignments stay on the trail).
  auto assign = [&](std::size_t v0, std::size_t c0) {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{v0, c0}};
    while (!queue.empty()) {
      auto [v, c] = queue.back();
      queue.pop_back();
      if (val[v] != kUndef) {
        if (val[v] != c) return false;
        continue;
      }
      val[v] = c;
      trail.push_back(v);
      std::size_t l = level_of[v];
      if (shape_.based && v == off[l] && c != 0) return false;
      for (const auto& o : outs[v]) queue.push_back({o.target, y.arrows[o.arrow][c]});
      for (std::size_t pid : prods_of[v]) {
        const auto& p = prods[pid];
        if (val[p.a] == kUndef || val[p.b] == kUndef) continue;
        std::size_t prod = y.product[val[p.a]][val[p.b]];
        if (prod == kUndef) return false;
        queue.push_back({p.c, prod});
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()] = kUndef;
      trail.pop_back();
    }
  };

  bool ok = true;
  if (shape_.based)
    for (std::size_t l = 0; l < nl && ok; ++l) ok = assign(off[l], 0);
  if (shape_.monoid && ok && nv > 0) ok = assign(x.unit, y.unit);
  if (!ok) return;

  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    while (v < nv && val[v] != kUndef) ++v;
    if (v == nv) {
      if (!(++found <= limit)) fail(ErrorCode::Bound, "hom enumeration exceeds " + std::to_string(limit));
      Mor m;
      m.level.resize(nl);
      for (std::size_t l = 0; l < nl; ++l) m.level[l].assign(val.begin() + off[l], val.begin() + off[l + 1]);
      visit(m);
      return;
    }
    std::size_t l = level_of[v];
    for (std::size_t c = 0; c < y.at(l).size(); ++c) {
      std::size_t mark = trail.size();
      if (assign(v, c)) rec(v + 1);
      undo(mark);
    }
  };
  rec(0);
}

std::vector<Mor> Category::homs(const Obj& x, const Obj& y, std::size_t limit) const {
  std::vector<Mor> out;
  for_each_hom(x, y, limit, [&](const Mor& m) { out.push_back(m); });
  return out;
}

std::size_t Category::count_homs(const Obj& x, const Obj& y, std::size_t limit) const {
  std::size_t n = 0;
  for_each_hom(x, y, limit, [&](const Mor&) { ++n; });
  return n;
}


Category::Coequalizer Category::coequalizer(const Obj& x, const Obj& y, const Mor& f, const Mor& g) const {
  require(!shape_.monoid, ErrorCode::Domain, "coequalizers of partial monoids are not supported");
  require(f.total() && g.total(), ErrorCode::Domain, "coequalizer needs total maps");
  std::size_t nl = num_levels();
  std::vector<UnionFind> uf;
  for (std::size_t l = 0; l < nl; ++l) uf.emplace_back(y.at(l).size());
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t i = 0; i < x.at(l).size(); ++i) uf[l].unite(f.level[l][i], g.level[l][i]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
      const auto& ar = shape_.arrows[a];
      for (std::size_t i = 0; i < y.at(ar.src).size(); ++i) {
        std::size_t r = uf[ar.src].find(i);
        if (r != i) changed |= uf[ar.dst].unite(y.arrows[a][i], y.arrows[a][r]);
      }
    }
  }
  Coequalizer out;
  out.q.level.resize(nl);
  std::vector<std::vector<Value>> levels(nl);
  std::vector<std::vector<std::size_t>> rep_pos(nl);
  for (std::size_t l = 0; l < nl; ++l) {
    rep_pos[l].assign(y.at(l).size(), kUndef);
    for (std::size_t i = 0; i < y.at(l).size(); ++i)
      if (uf[l].find(i) == i) {
        rep_pos[l][i] = levels[l].size();
        levels[l].push_back(y.at(l)[i]);
      }
    out.q.level[l].resize(y.at(l).size());
    for (std::size_t i = 0; i < y.at(l).size(); ++i) out.q.level[l][i] = rep_pos[l][uf[l].find(i)];
  }
  // Representatives are in increasing order, so carrier indices equal rep_pos.
  out.object.levels.resize(nl);
  for (std::size_t l = 0; l < nl; ++l) out.object.levels[l] = make_carrier(levels[l]);
  out.object.arrows.resize(shape_.arrows.size());
  for (std::size_t a = 0; a < shape_.arrows.size(); ++a) {
    const auto& ar = shape_.arrows[a];
    for (std::size_t i = 0; i < y.at(ar.src).size(); ++i)
      if (uf[ar.src].find(i) == i) out.object.arrows[a].push_back(out.q.level[ar.dst][y.arrows[a][i]]);
  }
  validate(out.object);
  return out;
}

CatPtr set_category() {
  static CatPtr c = std::make_shared<const Category>(Shape{.name = "Set", .level_names = {"X"}});
  return c;
}

CatPtr pointed_category() {
  static CatPtr c = std::make_shared<const Category>(Shape{.name = "Set*", .level_names = {"X"}, .based = true});
  return c;
}

CatPtr gset_category(GroupPtr g, bool based) {
  Shape s;
  s.name = std::string(based ? "GSet*" : "GSet") + "(" + g->name() + ")";
  s.level_names = {"X"};
  s.based = based;
  for (std::size_t a = 0; a < g->order(); ++a) s.arrows.push_back({0, 0, "g" + std::to_string(a)});
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b) s.relations.push_back({a, b, g->mul(a, b)});
  s.identities = {g->identity()};
  s.group = std::move(g);
  return std::make_shared<const Category>(std::move(s));
}

CatPtr presheaf_category(std::shared_ptr<const OrbitCategory> oc) {
  Shape s;
  s.name = "Psh(O_" + oc->group().name() + ")";
  s.based = true;
  std::size_t n = oc->num_objects();
  for (std::size_t h = 0; h < n; ++h) s.level_names.push_back("G/H" + std::to_string(h));
  // arrow id for the i-th morphism G/H -> G/K, acting P(K) -> P(H)
  std::vector<std::vector<std::size_t>> first(n, std::vector<std::size_t>(n));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) {
      first[h][k] = s.arrows.size();
      for (std::size_t c : oc->homs(h, k)) {
        s.arrows.push_back({k, h, "f" + std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(c)});
        s.orbit_arrows.push_back({h, k, c});
      }
    }
  auto pos = [&](std::size_t h, std::size_t k, std::size_t c) {
    const auto& hs = oc->homs(h, k);
    return first[h][k] + static_cast<std::size_t>(std::lower_bound(hs.begin(), hs.end(), c) - hs.begin());
  };
  for (std::size_t h = 0; h < n; ++h) {
    s.identities.push_back(pos(h, h, oc->identity(h)));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t f : oc->homs(h, k))
          for (std::size_t fp : oc->homs(k, l))
            s.relations.push_back({pos(h, k, f), pos(k, l, fp), pos(h, l, oc->compose(h, k, l, fp, f))});
  }
  s.orbits = std::move(oc);
  return std::make_shared<const Category>(std::move(s));
}

CatPtr pi_category(std::size_t n) {
  Shape s;
  s.name = "Pi<=" + std::to_string(n);
  s.based = true;
  for (std::size_t m = 0; m <= n; ++m) s.level_names.push_back(std::to_string(m));
  std::vector<std::vector<std::vector<BasedMap>>> maps(n + 1, std::vector<std::vector<BasedMap>>(n + 1));
  std::vector<std::vector<std::size_t>> first(n + 1, std::vector<std::size_t>(n + 1));
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t k = 0; k <= n; ++k) {
      maps[m][k] = enumerate_homs(Kind::Pi, m, k);
      first[m][k] = s.arrows.size();
      for (const auto& f : maps[m][k]) {
        s.arrows.push_back({m, k, to_string(f)});
        s.pi_maps.push_back(f);
      }
    }
  auto pos = [&](const BasedMap& f) {
    const auto& v = maps[f.source()][f.target()];
    return first[f.source()][f.target()] + static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), f) - v.begin());
  };
  for (std::size_t m = 0; m <= n; ++m) {
    s.identities.push_back(pos(BasedMap::identity(m)));
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t l = 0; l <= n; ++l)
        for (const auto& f : maps[m][k])
          for (const auto& g : maps[k][l]) s.relations.push_back({pos(g), pos(f), pos(compose(g, f))});
  }
  return std::make_shared<const Category>(std::move(s));
}

CatPtr monoid_category() {
  static CatPtr c = std::make_shared<const Category>(Shape{.name = "PMon", .level_names = {"M"}, .monoid = true});
  return c;
}

Obj set_obj(const Category& c, std::vector<Value> elems) {
  if (!(c.num_levels() == 1 && c.shape().arrows.empty() && !c.shape().monoid)) fail(ErrorCode::Validation,
          "set_obj: category " + c.name() + " is not a plain set category");
  return c.make({std::move(elems)}, [](std::size_t, const Value& v) { return v; });
}

Obj gset_obj(const Category& c, const BasedGSet& x) {
  require(c.based() && c.shape().group && *c.shape().group == *x.group, ErrorCode::Validation,
          "gset_obj: group mismatch");
  return c.make({atoms(x.size, true)}, [&](std::size_t a, const Value& v) {
    std::size_t i = v.is_base() ? 0 : static_cast<std::size_t>(v.atom_value());
    std::size_t j = x(a, i);
    return j == 0 ? Value::base() : Value::atom(static_cast<std::int64_t>(j));
  });
}

Obj gset_obj(const Category& c, const HomToSym& alpha) {
  require(!c.based() && c.shape().group && *c.shape().group == *alpha.group, ErrorCode::Validation,
          "gset_obj: group mismatch");
  return c.make({atoms(alpha.degree, false)}, [&](std::size_t a, const Value& v) {
    return Value::atom(static_cast<std::int64_t>(alpha(a)[static_cast<std::size_t>(v.atom_value())]));
  });
}

Obj presheaf_obj(const Category& c, const OrbitalPresheaf& p) {
  const auto& oc = c.shape().orbits;
  require(oc != nullptr, ErrorCode::Validation, "presheaf_obj: not a presheaf category");
  validate_presheaf(*oc, p);
  std::size_t n = oc->num_objects();
  auto name = [&](std::size_t h, std::size_t i) {
    if (i == 0) return Value::base();
    return Value::atom(static_cast<std::int64_t>(p.labels.empty() ? i : p.labels[h][i]));
  };
  std::vector<std::vector<Value>> levels(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i <= p.sizes[h]; ++i) levels[h].push_back(name(h, i));
  Obj x;
  for (auto& l : levels) x.levels.push_back(make_carrier(l));
  // Carrier order may differ from index order when labels are present.
  std::vector<std::vector<std::size_t>> where(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i <= p.sizes[h]; ++i) where[h].push_back(x.at(h).index(name(h, i)));
  x.arrows.resize(c.shape().arrows.size());
  std::size_t a = 0;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < oc->homs(h, k).size(); ++i, ++a) {
        x.arrows[a].resize(p.sizes[k] + 1);
        for (std::size_t e = 0; e <= p.sizes[k]; ++e) x.arrows[a][where[k][e]] = where[h][p.restrict[h][k][i][e]];
      }
  c.validate(x);
  return x;
}

BasedGSet to_based_gset(const Category& c, const Obj& x) {
  require(c.based() && c.shape().group != nullptr, ErrorCode::Validation, "to_based_gset: not a based G-set category");
  std::vector<std::vector<std::size_t>> act = x.arrows;
  return validate_gset(c.shape().group, x.at(0).size() - 1, std::move(act));
}

std::string describe(const Category& c, const Obj& x) {
  std::string s = "{";
  for (std::size_t l = 0; l < c.num_levels(); ++l) {
    if (l) s += "; ";
    if (c.num_levels() > 1) s += c.shape().level_names[l] + ":";
    std::vector<std::string> names;
    for (const auto& v : x.at(l).elems()) names.push_back(v.str());
    s += join(names, ",");
  }
  return s + "}";
}

}  // namespace opcat
