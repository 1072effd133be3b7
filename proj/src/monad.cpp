#include "opcat/monad.hpp"

#include <algorithm>

#include "opcat/error.hpp"

namespace opcat {

Functor identity_functor(CatPtr c) {
  Functor f;
  f.name = "Id";
  f.src = c;
  f.dst = c;
  f.apply = [](const Obj& x) { return x; };
  f.fmap = [](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& m) { return m; };
  return f;
}

Monad lift(TermMonadPtr t, CatPtr c, std::size_t limit) {
  Monad m;
  m.name = t->name;
  m.cat = c;
  m.terms = t;
  m.truncated = true;
  m.apply = [t, c, limit](const Obj& x) {
    std::vector<std::vector<Value>> levels(c->num_levels());
    for (std::size_t l = 0; l < c->num_levels(); ++l) {
      bool complete = true;
      levels[l] = t->enumerate(x.at(l).elems(), limit + 1, complete);
      if (!(complete && levels[l].size() <= limit)) fail(ErrorCode::Bound,
              t->name + ": carrier exceeds " + std::to_string(limit) + " elements");
    }
    return c->make(std::move(levels), [&](std::size_t a, const Value& v) {
      const auto& ar = c->shape().arrows[a];
      auto r = t->fmap(
          [&](const Value& letter) -> std::optional<Value> {
            return x.at(ar.dst)[x.arrows[a][x.at(ar.src).index(letter)]];
          },
          v);
      if (!r.has_value()) fail(ErrorCode::Internal, t->name + ": structure map undefined at " + v.str());
      return *r;
    });
  };
  m.fmap = [t, c](const Obj& x, const Obj& y, const Obj& tx, const Obj& ty, const Mor& f) {
    LevelFn fn = c->as_fn(x, y, f);
    return c->tabulate(tx, ty, [&](std::size_t l, const Value& v) {
      return t->fmap([&](const Value& a) { return fn(l, a); }, v);
    });
  };
  m.unit = [t, c](const Obj& x, const Obj& tx) {
    return c->tabulate(x, tx, [&](std::size_t, const Value& v) { return t->unit(v); });
  };
  m.mult = [t, c](const Obj&, const Obj& tx, const Obj& ttx) {
    return c->tabulate(ttx, tx, [&](std::size_t, const Value& v) { return t->mult(v); });
  };
  return m;
}

Monad identity_monad(CatPtr c) {
  Monad m;
  m.name = "Id";
  m.cat = c;
  m.apply = [](const Obj& x) { return x; };
  m.fmap = [](const Obj&, const Obj&, const Obj&, const Obj&, const Mor& f) { return f; };
  m.unit = [c](const Obj& x, const Obj&) { return c->identity(x); };
  m.mult = [c](const Obj& x, const Obj&, const Obj&) { return c->identity(x); };
  return m;
}

namespace {

// Letters spread evenly over the elements ordered by weight.
std::vector<Value> pick_letters(const std::vector<Value>& elems, std::size_t count, bool lightest = false) {
  std::vector<Value> v = elems;
  std::stable_sort(v.begin(), v.end(), [](const Value& a, const Value& b) { return a.weight() < b.weight(); });
  if (v.size() <= count) return v;
  // Half the lightest (these keep truncated products defined), half spread over the rest.
  std::size_t head = lightest ? count : count / 2;
  std::vector<Value> out(v.begin(), v.begin() + head);
  std::size_t rest = count - head;
  for (std::size_t i = 0; i < rest; ++i)
    out.push_back(v[head + (rest == 1 ? v.size() - 1 - head : i * (v.size() - 1 - head) / (rest - 1))]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Value>> sample_terms(const TermMonad& t, const std::vector<std::vector<Value>>& letters,
                                             const CheckOptions& opt) {
  std::vector<std::vector<Value>> out;
  for (const auto& l : letters) {
    bool complete = true;
    out.push_back(t.enumerate(pick_letters(l, opt.sample_letters, opt.lightest_letters), opt.sample_cap, complete));
  }
  return out;
}

std::vector<std::vector<Value>> elems_of(const Obj& x) {
  std::vector<std::vector<Value>> out;
  for (const auto& l : x.levels) out.push_back(l->elems());
  return out;
}

// Tabulates T y when it fits the limit.
std::optional<Obj> try_apply(const Monad& m, const Obj& y, std::size_t limit) {
  if (y.total_size() > limit) return std::nullopt;
  if (m.terms) {
    for (const auto& l : y.levels) {
      bool complete = true;
      auto v = m.terms->enumerate(l->elems(), limit + 1, complete);
      if (!complete || v.size() > limit) return std::nullopt;
    }
  }
  try {
    return m.apply(y);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Bound) return std::nullopt;
    throw;
  }
}

// Arrow commutation where both sides are defined.
void check_partial_mor(const Category& c, const Obj& x, const Obj& y, const Mor& f, CheckResult& cr,
                       const std::string& what) {
  std::string why;
  bool shape_ok = f.level.size() == c.num_levels();
  for (std::size_t l = 0; shape_ok && l < c.num_levels(); ++l) shape_ok = f.level[l].size() == x.at(l).size();
  if (!shape_ok) {
    cr.fail(what + ": malformed table");
    return;
  }
  if (c.based())
    for (std::size_t l = 0; l < c.num_levels(); ++l)
      cr.expect_lazy(f.level[l][0] == 0, [&] { return what + ": basepoint not preserved"; });
  for (std::size_t a = 0; a < c.shape().arrows.size(); ++a) {
    const auto& ar = c.shape().arrows[a];
    for (std::size_t i = 0; i < x.at(ar.src).size(); ++i) {
      std::size_t u = f.level[ar.src][i];
      std::size_t lhs = u == kUndef ? kUndef : y.arrows[a][u];
      std::size_t rhs = f.level[ar.dst][x.arrows[a][i]];
      if (lhs == kUndef || rhs == kUndef) {
        if (lhs != rhs) ++cr.partial;
        continue;
      }
      cr.expect_lazy(lhs == rhs, [&] {
        return what + ": does not commute with " + ar.label + " at " + x.at(ar.src)[i].str();
      });
    }
  }
  if (c.shape().monoid) {
    const auto& t = f.level[0];
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::size_t ij = x.product[i][j];
        if (ij == kUndef) continue;
        if (t[i] == kUndef || t[j] == kUndef || t[ij] == kUndef) {
          ++cr.partial;
          continue;
        }
        cr.expect_lazy(y.product[t[i]][t[j]] == t[ij], [&] {
          return what + ": product not preserved at " + x.at(0)[i].str() + "," + x.at(0)[j].str();
        });
      }
  }
}

// Compares two partial values; one-sided undefinedness counts as partial.
template <class T>
void compare(CheckResult& cr, const std::optional<T>& a, const std::optional<T>& b,
             const std::function<std::string()>& witness) {
  if (!a || !b) {
    ++cr.partial;
    return;
  }
  if (*a == *b) cr.pass();
  else cr.fail(witness());
}

std::optional<Value> at(const Obj& y, std::size_t l, std::size_t i) {
  if (i == kUndef) return std::nullopt;
  return y.at(l)[i];
}

// Elementwise evaluators for the first three iterates of a monad at one probe.
struct Iterates {
  const Monad& m;
  const CheckOptions& opt;
  Obj x, tx;
  std::optional<Obj> ttx, tttx;
  std::vector<std::vector<Value>> ttx_elems, tttx_elems;
  Mor eta_x, mu_x, eta_tx, t_eta_x, mu_tx, t_mu_x;
  bool sampled = false;
  bool assoc_available = true;

  Iterates(const Monad& mm, const Obj& xx, const CheckOptions& o) : m(mm), opt(o), x(xx) {
    const Category& c = *m.cat;
    tx = m.apply(x);
    eta_x = m.unit(x, tx);
    ttx = try_apply(m, tx, opt.tabulate_limit);
    if (ttx) {
      ttx_elems = elems_of(*ttx);
      mu_x = m.mult(x, tx, *ttx);
      eta_tx = m.unit(tx, *ttx);
      t_eta_x = m.fmap(x, tx, tx, *ttx, eta_x);
      tttx = try_apply(m, *ttx, opt.tabulate_limit);
      if (tttx) {
        tttx_elems = elems_of(*tttx);
        mu_tx = m.mult(tx, *ttx, *tttx);
        t_mu_x = m.fmap(*ttx, tx, *tttx, *ttx, mu_x);
      } else if (m.terms) {
        tttx_elems = sample_terms(*m.terms, ttx_elems, opt);
        sampled = true;
      } else {
        assoc_available = false;
      }
    } else {
      if (!(m.terms != nullptr)) fail(ErrorCode::Bound,
              m.name + ": T T X exceeds the tabulation limit on probe " + describe(c, x));
      ttx_elems = sample_terms(*m.terms, elems_of(tx), opt);
      tttx_elems = sample_terms(*m.terms, ttx_elems, opt);
      sampled = true;
    }
  }

  // Term-level fallbacks use the evaluators directly.
  std::optional<Value> mu1(std::size_t l, const Value& s) const {
    if (ttx) {
      auto i = ttx->at(l).find(s);
      if (i) return at(tx, l, mu_x.level[l][*i]);
    }
    if (!m.terms) return std::nullopt;
    auto v = m.terms->mult(s);
    if (v && !tx.at(l).contains(*v)) return std::nullopt;
    return v;
  }
  std::optional<Value> eta2(std::size_t l, std::size_t i) const {  // η_{TX} on T X
    if (ttx) return at(*ttx, l, eta_tx.level[l][i]);
    return m.terms->unit(tx.at(l)[i]);
  }
  std::optional<Value> teta(std::size_t l, std::size_t i) const {  // Tη_X on T X
    if (ttx) return at(*ttx, l, t_eta_x.level[l][i]);
    return m.terms->fmap(m.terms->unit, tx.at(l)[i]);
  }
  std::optional<Value> mu2(std::size_t l, std::size_t i) const {  // μ_{TX} on TTTX
    if (tttx) return at(*ttx, l, mu_tx.level[l][i]);
    return m.terms->mult(tttx_elems[l][i]);
  }
  std::optional<Value> tmu(std::size_t l, std::size_t i) const {  // Tμ_X on TTTX
    if (tttx) return at(*ttx, l, t_mu_x.level[l][i]);
    return m.terms->fmap([&](const Value& s) { return mu1(l, s); }, tttx_elems[l][i]);
  }
};

}  // namespace

Report check_monad(const Monad& m, const std::vector<Obj>& probes, const CheckOptions& opt) {
  Report r("monad " + m.name);
  const Category& c = *m.cat;
  const char* names[] = {"unit_is_morphism", "mult_is_morphism", "left_unit",         "right_unit",
                         "associativity",    "fmap_is_morphism", "functor_identity",  "functor_composition",
                         "unit_naturality",  "mult_naturality"};
  for (const char* n : names) r.check(n);
  auto ck = [&](const char* n) -> CheckResult& { return r.check(n); };

  std::vector<std::unique_ptr<Iterates>> its;
  std::size_t sampled = 0;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    c.validate(probes[p]);
    its.push_back(std::make_unique<Iterates>(m, probes[p], opt));
    Iterates& it = *its.back();
    std::string where = "probe " + describe(c, it.x);
    sampled += it.sampled ? 1 : 0;
    check_partial_mor(c, it.x, it.tx, it.eta_x, ck("unit_is_morphism"), "eta at " + where);
    if (it.ttx) check_partial_mor(c, *it.ttx, it.tx, it.mu_x, ck("mult_is_morphism"), "mu at " + where);
    for (std::size_t l = 0; l < c.num_levels(); ++l)
      for (std::size_t i = 0; i < it.tx.at(l).size(); ++i) {
        const Value& t = it.tx.at(l)[i];
        auto e2 = it.eta2(l, i);
        compare<Value>(ck("left_unit"), e2 ? it.mu1(l, *e2) : std::nullopt, t,
                       [&] { return where + ": mu(eta_T(" + t.str() + ")) != itself"; });
        auto te = it.teta(l, i);
        compare<Value>(ck("right_unit"), te ? it.mu1(l, *te) : std::nullopt, t,
                       [&] { return where + ": mu(T eta(" + t.str() + ")) != itself"; });
      }
    if (!it.assoc_available) {
      ++ck("associativity").partial;
      continue;
    }
    for (std::size_t l = 0; l < c.num_levels(); ++l)
      for (std::size_t i = 0; i < it.tttx_elems[l].size(); ++i) {
        auto a = it.mu2(l, i), b = it.tmu(l, i);
        compare<Value>(ck("associativity"), a ? it.mu1(l, *a) : std::nullopt, b ? it.mu1(l, *b) : std::nullopt,
                       [&] { return where + ": associativity fails at " + it.tttx_elems[l][i].str(); });
      }
  }

  // Maps among the probes.
  std::vector<std::vector<std::vector<Mor>>> maps(probes.size(), std::vector<std::vector<Mor>>(probes.size()));
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j) {
      try {
        maps[i][j] = c.homs(probes[i], probes[j], opt.max_maps);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Bound) throw;
        r.info()["maps_truncated"] = true;
      }
    }
  std::vector<std::vector<std::vector<Mor>>> tmaps(probes.size(), std::vector<std::vector<Mor>>(probes.size()));
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const Iterates& a = *its[i];
      const Iterates& b = *its[j];
      std::string where = describe(c, a.x) + " -> " + describe(c, b.x);
      for (const Mor& f : maps[i][j]) {
        Mor tf = m.fmap(a.x, b.x, a.tx, b.tx, f);
        check_partial_mor(c, a.tx, b.tx, tf, ck("fmap_is_morphism"), "T f on " + where);
        Mor lhs = c.compose(tf, a.eta_x), rhs = c.compose(b.eta_x, f);
        for (std::size_t l = 0; l < c.num_levels(); ++l)
          for (std::size_t k = 0; k < a.x.at(l).size(); ++k)
            compare<std::size_t>(
                ck("unit_naturality"), lhs.level[l][k] == kUndef ? std::nullopt : std::optional(lhs.level[l][k]),
                rhs.level[l][k] == kUndef ? std::nullopt : std::optional(rhs.level[l][k]),
                [&] { return where + ": eta not natural at " + a.x.at(l)[k].str(); });
        // T f ∘ μ = μ ∘ T T f on T T X.
        std::optional<Mor> ttf;
        if (a.ttx && b.ttx) ttf = m.fmap(a.tx, b.tx, *a.ttx, *b.ttx, tf);
        LevelFn tf_fn = c.as_fn(a.tx, b.tx, tf);
        for (std::size_t l = 0; l < c.num_levels(); ++l)
          for (std::size_t k = 0; k < a.ttx_elems[l].size(); ++k) {
            const Value& s = a.ttx_elems[l][k];
            auto ms = a.mu1(l, s);
            std::optional<Value> left = ms ? tf_fn(l, *ms) : std::nullopt;
            std::optional<Value> tts;
            if (ttf) tts = at(*b.ttx, l, ttf->level[l][k]);
            else if (m.terms) tts = m.terms->fmap([&](const Value& u) { return tf_fn(l, u); }, s);
            std::optional<Value> right = tts ? b.mu1(l, *tts) : std::nullopt;
            compare<Value>(ck("mult_naturality"), left, right,
                           [&] { return where + ": mu not natural at " + s.str(); });
          }
        tmaps[i][j].push_back(std::move(tf));
      }
    }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    Mor tid = m.fmap(its[i]->x, its[i]->x, its[i]->tx, its[i]->tx, c.identity(its[i]->x));
    ck("functor_identity").expect(tid == c.identity(its[i]->tx), "T id != id on " + describe(c, its[i]->x));
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      for (std::size_t k = 0; k < probes.size(); ++k)
        for (std::size_t a = 0; a < maps[i][j].size(); ++a)
          for (std::size_t b = 0; b < maps[j][k].size(); ++b) {
            if (++pairs > 200000) {
              r.info()["composition_pairs_truncated"] = true;
              goto done;
            }
            Mor gf = c.compose(maps[j][k][b], maps[i][j][a]);
            Mor tgf = m.fmap(its[i]->x, its[k]->x, its[i]->tx, its[k]->tx, gf);
            ck("functor_composition")
                .expect_lazy(tgf == c.compose(tmaps[j][k][b], tmaps[i][j][a]), [&] {
                  return "T(g f) != T g T f on " + describe(c, its[i]->x) + " -> " + describe(c, its[k]->x);
                });
          }
done:
  r.info()["probes"] = probes.size();
  r.info()["sampled_probes"] = sampled;
  r.info()["truncated"] = m.truncated;
  return r;
}

SecondIterate::SecondIterate(const Monad& m, const Obj& x, const Obj& tx, const CheckOptions& opt)
    : m_(m), x_(x), tx_(tx) {
  auto t = try_apply(m, tx, opt.tabulate_limit);
  if (t) {
    full_ = true;
    ttx_ = std::move(*t);
    elems_ = elems_of(ttx_);
    mu_ = m.mult(x, tx, ttx_).level;
    return;
  }
  if (!(m.terms != nullptr)) fail(ErrorCode::Bound, m.name + ": T T X exceeds the tabulation limit");
  elems_ = sample_terms(*m.terms, elems_of(tx), opt);
  mu_.resize(elems_.size());
  letters_.resize(elems_.size());
  for (std::size_t l = 0; l < elems_.size(); ++l)
    for (const auto& s : elems_[l]) {
      auto v = m.terms->mult(s);
      std::optional<std::size_t> i = v ? tx.at(l).find(*v) : std::nullopt;
      mu_[l].push_back(i ? *i : kUndef);
      std::vector<std::size_t> ls;
      m.terms->fmap([&](const Value& u) -> std::optional<Value> {
        if (auto k = tx.at(l).find(u)) ls.push_back(*k);
        return u;
      }, s);
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      letters_[l].push_back(std::move(ls));
    }
}

std::size_t SecondIterate::tmap_one(std::size_t l, std::size_t i, const Obj& tb, const Mor& f) const {
  auto v = m_.terms->fmap([&](const Value& u) -> std::optional<Value> {
    auto k = tx_.at(l).find(u);
    if (!k || f.level[l][*k] == kUndef) return std::nullopt;
    return x_.at(l)[f.level[l][*k]];
  }, elems_[l][i]);
  std::optional<std::size_t> k = v ? tb.at(l).find(*v) : std::nullopt;
  return k ? *k : kUndef;
}

std::vector<std::vector<std::size_t>> SecondIterate::tmap(const Obj& b, const Obj& tb, const Mor& f) const {
  if (full_) return m_.fmap(tx_, b, ttx_, tb, f).level;
  LevelFn fn = m_.cat->as_fn(tx_, b, f);
  std::vector<std::vector<std::size_t>> out(elems_.size());
  for (std::size_t l = 0; l < elems_.size(); ++l)
    for (const auto& s : elems_[l]) {
      auto v = m_.terms->fmap([&](const Value& u) { return fn(l, u); }, s);
      std::optional<std::size_t> i = v ? tb.at(l).find(*v) : std::nullopt;
      out[l].push_back(i ? *i : kUndef);
    }
  return out;
}

Report check_algebra(const Monad& m, const Algebra& a, const CheckOptions& opt) {
  const Category& c = *m.cat;
  Report r("algebra over " + m.name);
  r.check("action_is_morphism");
  r.check("unit");
  r.check("associativity");
  std::string why;
  if (a.theta.total())
    r.check("action_is_morphism").expect_lazy(c.is_mor(a.tx, a.carrier, a.theta, &why), [&] { return why; });
  else
    check_partial_mor(c, a.tx, a.carrier, a.theta, r.check("action_is_morphism"), "theta");
  Mor eta = m.unit(a.carrier, a.tx);
  for (std::size_t l = 0; l < c.num_levels(); ++l)
    for (std::size_t i = 0; i < a.carrier.at(l).size(); ++i) {
      std::size_t e = eta.level[l][i];
      if (e == kUndef || a.theta.level[l][e] == kUndef) {
        ++r.check("unit").partial;
        continue;
      }
      r.check("unit").expect_lazy(a.theta.level[l][e] == i,
                                  [&] { return "theta(eta(" + a.carrier.at(l)[i].str() + ")) != itself"; });
    }
  SecondIterate s(m, a.carrier, a.tx, opt);
  auto tt = s.tmap(a.carrier, a.tx, a.theta);
  CheckResult& as = r.check("associativity");
  for (std::size_t l = 0; l < c.num_levels(); ++l)
    for (std::size_t i = 0; i < s.elems(l).size(); ++i) {
      std::size_t u = s.mu(l, i), w = tt[l][i];
      if (u == kUndef || w == kUndef || a.theta.level[l][u] == kUndef || a.theta.level[l][w] == kUndef) {
        ++as.partial;
        continue;
      }
      as.expect_lazy(a.theta.level[l][u] == a.theta.level[l][w],
                     [&] { return "theta mu != theta T theta at " + s.elems(l)[i].str(); });
    }
  r.info()["sampled"] = !s.full();
  return r;
}

Algebra free_algebra(const Monad& m, const Obj& x) {
  Algebra a;
  a.carrier = m.apply(x);
  a.tx = m.apply(a.carrier);
  a.theta = m.mult(x, a.carrier, a.tx);
  return a;
}

namespace {

// f(u) = v (var = false, v a target index) or f(u) = f(v) (var = true, v a source index).
struct Req {
  std::size_t level, u, v;
  bool var;
};

// Enumerates the morphisms src -> dst satisfying extra requirements produced from the
// current partial assignment. Propagates forced values before branching.
std::vector<Mor> solve_maps(const Category& c, const Obj& src, const Obj& dst,
                            const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& fixed,
                            const std::function<void(const Mor&, std::vector<Req>&)>& relate, std::size_t limit) {
  std::size_t nl = c.num_levels();
  Mor f;
  f.level.resize(nl);
  for (std::size_t l = 0; l < nl; ++l) f.level[l].assign(src.at(l).size(), kUndef);
  std::vector<std::pair<std::size_t, std::size_t>> trail;
  // Outgoing arrows per level.
  std::vector<std::vector<std::size_t>> outs(nl);
  for (std::size_t a = 0; a < c.shape().arrows.size(); ++a) outs[c.shape().arrows[a].src].push_back(a);

  auto assign = [&](std::size_t l0, std::size_t u0, std::size_t v0) {
    std::vector<std::array<std::size_t, 3>> queue{{l0, u0, v0}};
    while (!queue.empty()) {
      auto [l, u, v] = queue.back();
      queue.pop_back();
      if (f.level[l][u] != kUndef) {
        if (f.level[l][u] != v) return false;
        continue;
      }
      if (c.based() && u == 0 && v != 0) return false;
      f.level[l][u] = v;
      trail.push_back({l, u});
      for (std::size_t a : outs[l]) {
        const auto& ar = c.shape().arrows[a];
        queue.push_back({ar.dst, src.arrows[a][u], dst.arrows[a][v]});
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      f.level[trail.back().first][trail.back().second] = kUndef;
      trail.pop_back();
    }
  };
  auto propagate = [&]() {
    std::vector<Req> reqs;
    while (true) {
      reqs.clear();
      relate(f, reqs);
      std::size_t before = trail.size();
      for (const auto& q : reqs) {
        std::size_t fu = f.level[q.level][q.u];
        if (!q.var) {
          if (!assign(q.level, q.u, q.v)) return false;
          continue;
        }
        std::size_t fv = f.level[q.level][q.v];
        if (fu != kUndef && fv != kUndef) {
          if (fu != fv) return false;
        } else if (fu != kUndef) {
          if (!assign(q.level, q.v, fu)) return false;
        } else if (fv != kUndef) {
          if (!assign(q.level, q.u, fv)) return false;
        }
      }
      if (trail.size() == before) return true;
    }
  };

  std::vector<Mor> out;
  bool ok = true;
  if (c.based())
    for (std::size_t l = 0; l < nl && ok; ++l) ok = src.at(l).size() > 0 && assign(l, 0, 0);
  for (std::size_t l = 0; l < fixed.size() && ok; ++l)
    for (const auto& [u, v] : fixed[l])
      if (ok) ok = assign(l, u, v);
  if (!ok) return out;

  std::function<void()> rec = [&]() {
    if (!propagate()) return;
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t u = 0; u < src.at(l).size(); ++u) {
        if (f.level[l][u] != kUndef) continue;
        for (std::size_t v = 0; v < dst.at(l).size(); ++v) {
          std::size_t mark = trail.size();
          if (assign(l, u, v)) rec();
          undo(mark);
        }
        return;
      }
    if (!(out.size() < limit)) fail(ErrorCode::Bound, "map enumeration exceeds " + std::to_string(limit));
    if (c.is_mor(src, dst, f)) out.push_back(f);
  };
  rec();
  return out;
}

}  // namespace

std::vector<Algebra> enumerate_algebras(const Monad& m, const Obj& x, std::size_t limit, const CheckOptions& opt,
                                        bool* complete) {
  const Category& c = *m.cat;
  Obj tx = m.apply(x);
  Mor eta = m.unit(x, tx);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fixed(c.num_levels());
  for (std::size_t l = 0; l < c.num_levels(); ++l)
    for (std::size_t i = 0; i < x.at(l).size(); ++i)
      if (eta.level[l][i] != kUndef) fixed[l].push_back({eta.level[l][i], i});
  CheckOptions light = opt;
  light.lightest_letters = true;
  SecondIterate s(m, x, tx, light);
  if (complete) *complete = s.full();
  std::function<void(const Mor&, std::vector<Req>&)> relate = [&](const Mor& theta, std::vector<Req>& out) {
    auto tt = s.tmap(x, tx, theta);
    for (std::size_t l = 0; l < c.num_levels(); ++l)
      for (std::size_t i = 0; i < s.elems(l).size(); ++i)
        if (s.mu(l, i) != kUndef && tt[l][i] != kUndef) out.push_back({l, s.mu(l, i), tt[l][i], true});
  };
  // Sampled: evaluate a term only once all its letters are assigned, remembering the answer
  // for that assignment.
  std::vector<std::vector<std::pair<std::vector<std::size_t>, std::size_t>>> memo(c.num_levels());
  if (!s.full()) {
    for (std::size_t l = 0; l < c.num_levels(); ++l) memo[l].resize(s.elems(l).size(), {{}, kUndef});
    relate = [&](const Mor& theta, std::vector<Req>& out) {
      std::vector<std::size_t> key;
      for (std::size_t l = 0; l < c.num_levels(); ++l)
        for (std::size_t i = 0; i < s.elems(l).size(); ++i) {
          if (s.mu(l, i) == kUndef) continue;
          key.clear();
          bool ready = true;
          for (std::size_t k : s.letters(l, i)) {
            if (theta.level[l][k] == kUndef) {
              ready = false;
              break;
            }
            key.push_back(theta.level[l][k]);
          }
          if (!ready) continue;
          auto& [mk, mv] = memo[l][i];
          if (mv == kUndef || mk != key) {
            mk = key;
            mv = s.tmap_one(l, i, tx, theta);
            if (mv == kUndef) mv = kUndef - 1;
          }
          if (mv != kUndef - 1) out.push_back({l, s.mu(l, i), mv, true});
        }
    };
  }
  std::vector<Algebra> algs;
  for (Mor& theta : solve_maps(c, tx, x, fixed, relate, limit)) algs.push_back({x, tx, std::move(theta)});
  return algs;
}

std::vector<Mor> enumerate_algebra_maps(const Monad& m, const Algebra& a, const Algebra& b,
                                        const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& fixed,
                                        std::size_t limit, const CheckOptions&) {
  const Category& c = *m.cat;
  auto relate = [&](const Mor& f, std::vector<Req>& out) {
    Mor tf = m.fmap(a.carrier, b.carrier, a.tx, b.tx, f);
    for (std::size_t l = 0; l < c.num_levels(); ++l)
      for (std::size_t t = 0; t < a.tx.at(l).size(); ++t) {
        std::size_t w = tf.level[l][t];
        if (w == kUndef || a.theta.level[l][t] == kUndef || b.theta.level[l][w] == kUndef) continue;
        out.push_back({l, a.theta.level[l][t], b.theta.level[l][w], false});
      }
  };
  auto maps = solve_maps(c, a.carrier, b.carrier, fixed, relate, limit);
  // Truncation may leave some equations unchecked by the solver; keep only genuine maps.
  std::vector<Mor> out;
  for (auto& f : maps)
    if (is_algebra_map(m, a, b, f)) out.push_back(std::move(f));
  return out;
}

bool is_algebra_map(const Monad& m, const Algebra& a, const Algebra& b, const Mor& f, std::string* why) {
  const Category& c = *m.cat;
  if (!c.is_mor(a.carrier, b.carrier, f, why)) return false;
  Mor tf = m.fmap(a.carrier, b.carrier, a.tx, b.tx, f);
  for (std::size_t l = 0; l < c.num_levels(); ++l)
    for (std::size_t t = 0; t < a.tx.at(l).size(); ++t) {
      std::size_t w = tf.level[l][t];
      if (w == kUndef || a.theta.level[l][t] == kUndef || b.theta.level[l][w] == kUndef) continue;
      if (f.level[l][a.theta.level[l][t]] != b.theta.level[l][w]) {
        if (why) *why = "f theta != theta T f at " + a.tx.at(l)[t].str();
        return false;
      }
    }
  return true;
}

namespace {

void expect_equal_mor(CheckResult& cr, const Mor& a, const Mor& b, const std::string& what) {
  cr.expect(a == b, what);
}

}  // namespace

Report check_adjunction(const Adjunction& a, const std::vector<Obj>& t_probes, const std::vector<Obj>& s_probes,
                        const CheckOptions& opt) {
  const Category& t = *a.left.src;
  const Category& s = *a.left.dst;
  Report r("adjunction " + a.name);
  for (const char* n : {"unit_is_morphism", "counit_is_morphism", "triangle_sigma", "triangle_omega",
                        "unit_naturality", "counit_naturality", "left_functor", "right_functor", "hom_bijection"})
    r.check(n);
  std::vector<Obj> sx, osx;
  std::vector<Mor> eta;
  for (const Obj& x : t_probes) {
    sx.push_back(a.left.apply(x));
    osx.push_back(a.right.apply(sx.back()));
    eta.push_back(a.unit(x, sx.back(), osx.back()));
    std::string why;
    r.check("unit_is_morphism").expect_lazy(t.is_mor(x, osx.back(), eta.back(), &why), [&] { return why; });
    Obj sosx = a.left.apply(osx.back());
    Mor eps = a.counit(sx.back(), osx.back(), sosx);
    Mor seta = a.left.fmap(x, osx.back(), sx.back(), sosx, eta.back());
    expect_equal_mor(r.check("triangle_sigma"), s.compose(eps, seta), s.identity(sx.back()),
                     "eps Sigma . Sigma eta != id at " + describe(t, x));
  }
  std::vector<Obj> oz, soz;
  std::vector<Mor> eps;
  for (const Obj& z : s_probes) {
    oz.push_back(a.right.apply(z));
    soz.push_back(a.left.apply(oz.back()));
    eps.push_back(a.counit(z, oz.back(), soz.back()));
    std::string why;
    r.check("counit_is_morphism").expect_lazy(s.is_mor(soz.back(), z, eps.back(), &why), [&] { return why; });
    Obj osoz = a.right.apply(soz.back());
    Mor eta_o = a.unit(oz.back(), soz.back(), osoz);
    Mor oeps = a.right.fmap(soz.back(), z, osoz, oz.back(), eps.back());
    expect_equal_mor(r.check("triangle_omega"), t.compose(oeps, eta_o), t.identity(oz.back()),
                     "Omega eps . eta Omega != id at " + describe(s, z));
  }
  for (std::size_t i = 0; i < t_probes.size(); ++i)
    for (std::size_t j = 0; j < t_probes.size(); ++j)
      for (const Mor& f : t.homs(t_probes[i], t_probes[j], opt.max_maps)) {
        Mor sf = a.left.fmap(t_probes[i], t_probes[j], sx[i], sx[j], f);
        Mor osf = a.right.fmap(sx[i], sx[j], osx[i], osx[j], sf);
        expect_equal_mor(r.check("unit_naturality"), t.compose(osf, eta[i]), t.compose(eta[j], f),
                         "eta not natural on " + describe(t, t_probes[i]) + " -> " + describe(t, t_probes[j]));
        r.check("left_functor")
            .expect(s.is_mor(sx[i], sx[j], sf), "Sigma f is not a morphism on " + describe(t, t_probes[i]));
        for (std::size_t k = 0; k < t_probes.size(); ++k)
          for (const Mor& g : t.homs(t_probes[j], t_probes[k], opt.max_maps)) {
            Mor sg = a.left.fmap(t_probes[j], t_probes[k], sx[j], sx[k], g);
            Mor sgf = a.left.fmap(t_probes[i], t_probes[k], sx[i], sx[k], t.compose(g, f));
            r.check("left_functor").expect(sgf == s.compose(sg, sf), "Sigma(g f) != Sigma g Sigma f");
          }
      }
  for (std::size_t i = 0; i < t_probes.size(); ++i)
    r.check("left_functor")
        .expect(a.left.fmap(t_probes[i], t_probes[i], sx[i], sx[i], t.identity(t_probes[i])) == s.identity(sx[i]),
                "Sigma id != id");
  for (std::size_t i = 0; i < s_probes.size(); ++i) {
    r.check("right_functor")
        .expect(a.right.fmap(s_probes[i], s_probes[i], oz[i], oz[i], s.identity(s_probes[i])) == t.identity(oz[i]),
                "Omega id != id");
    for (std::size_t j = 0; j < s_probes.size(); ++j)
      for (const Mor& h : s.homs(s_probes[i], s_probes[j], opt.max_maps)) {
        Mor oh = a.right.fmap(s_probes[i], s_probes[j], oz[i], oz[j], h);
        r.check("right_functor").expect(t.is_mor(oz[i], oz[j], oh), "Omega h is not a morphism");
        Mor soh = a.left.fmap(oz[i], oz[j], soz[i], soz[j], oh);
        expect_equal_mor(r.check("counit_naturality"), s.compose(h, eps[i]), s.compose(eps[j], soh),
                         "eps not natural on " + describe(s, s_probes[i]) + " -> " + describe(s, s_probes[j]));
        for (std::size_t k = 0; k < s_probes.size(); ++k)
          for (const Mor& g : s.homs(s_probes[j], s_probes[k], opt.max_maps)) {
            Mor og = a.right.fmap(s_probes[j], s_probes[k], oz[j], oz[k], g);
            Mor ogh = a.right.fmap(s_probes[i], s_probes[k], oz[i], oz[k], s.compose(g, h));
            r.check("right_functor").expect(ogh == t.compose(og, oh), "Omega(g h) != Omega g Omega h");
          }
      }
  }
  // S(ΣX, Z) -> T(X, ΩZ), h ↦ Ωh∘η, is a bijection.
  for (std::size_t i = 0; i < t_probes.size(); ++i)
    for (std::size_t j = 0; j < s_probes.size(); ++j) {
      auto left = s.homs(sx[i], s_probes[j], opt.max_maps * 10);
      std::size_t right = t.count_homs(t_probes[i], oz[j], opt.max_maps * 10);
      std::vector<Mor> images;
      for (const Mor& h : left)
        images.push_back(t.compose(a.right.fmap(sx[i], s_probes[j], osx[i], oz[j], h), eta[i]));
      std::sort(images.begin(), images.end(), [](const Mor& p, const Mor& q) { return p.level < q.level; });
      bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      r.check("hom_bijection")
          .expect_lazy(injective && left.size() == right, [&] {
            return "|S(Sigma X, Z)| = " + std::to_string(left.size()) + ", |T(X, Omega Z)| = " + std::to_string(right) +
                   " at " + describe(t, t_probes[i]) + ", " + describe(s, s_probes[j]);
          });
    }
  return r;
}

Monad monad_of(const Adjunction& a) {
  Monad m;
  m.name = a.name + ".monad";
  m.cat = a.left.src;
  Functor left = a.left, right = a.right;
  m.apply = [left, right](const Obj& x) { return right.apply(left.apply(x)); };
  m.fmap = [left, right](const Obj& x, const Obj& y, const Obj& tx, const Obj& ty, const Mor& f) {
    Obj sx = left.apply(x), sy = left.apply(y);
    return right.fmap(sx, sy, tx, ty, left.fmap(x, y, sx, sy, f));
  };
  auto unit = a.unit;
  m.unit = [left, unit](const Obj& x, const Obj& tx) { return unit(x, left.apply(x), tx); };
  auto counit = a.counit;
  m.mult = [left, right, counit](const Obj& x, const Obj& tx, const Obj& ttx) {
    Obj sx = left.apply(x);
    Obj stx = left.apply(tx);
    return right.fmap(stx, sx, ttx, tx, counit(sx, tx, stx));
  };
  return m;
}

Report check_cfunctor(const CFunctor& f, const Monad& c, const std::vector<Obj>& probes, const CheckOptions& opt) {
  const Category& s = *f.functor.dst;
  const Category& t = *c.cat;
  Report r("C-functor " + f.name + " over " + c.name);
  for (const char* n : {"beta_is_morphism", "unit", "associativity", "naturality"}) r.check(n);
  struct Data {
    Obj cx, fx, fcx;
    Mor beta;
  };
  std::vector<Data> d;
  for (const Obj& x : probes) {
    Data e;
    e.cx = c.apply(x);
    e.fx = f.functor.apply(x);
    e.fcx = f.functor.apply(e.cx);
    e.beta = f.beta(x, e.cx, e.fcx, e.fx);
    std::string why;
    r.check("beta_is_morphism").expect_lazy(s.is_mor(e.fcx, e.fx, e.beta, &why), [&] { return why; });
    Mor eta = c.unit(x, e.cx);
    Mor feta = f.functor.fmap(x, e.cx, e.fx, e.fcx, eta);
    r.check("unit").expect(s.compose(e.beta, feta) == s.identity(e.fx), "beta F eta != id at " + describe(t, x));
    auto ccx = try_apply(c, e.cx, opt.tabulate_limit);
    if (ccx) {
      Obj fccx = f.functor.apply(*ccx);
      Mor mu = c.mult(x, e.cx, *ccx);
      Mor fmu = f.functor.fmap(*ccx, e.cx, fccx, e.fcx, mu);
      Mor beta_c = f.beta(e.cx, *ccx, fccx, e.fcx);
      Mor lhs = s.compose(e.beta, fmu), rhs = s.compose(e.beta, beta_c);
      CheckResult& as = r.check("associativity");
      for (std::size_t l = 0; l < s.num_levels(); ++l)
        for (std::size_t i = 0; i < lhs.level[l].size(); ++i) {
          if (lhs.level[l][i] == kUndef || rhs.level[l][i] == kUndef) {
            ++as.partial;
            continue;
          }
          as.expect_lazy(lhs.level[l][i] == rhs.level[l][i],
                         [&] { return "beta F mu != beta beta C at " + fccx.at(l)[i].str(); });
        }
    } else {
      ++r.check("associativity").partial;
    }
    d.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      for (const Mor& g : t.homs(probes[i], probes[j], opt.max_maps)) {
        Mor fg = f.functor.fmap(probes[i], probes[j], d[i].fx, d[j].fx, g);
        Mor cg = c.fmap(probes[i], probes[j], d[i].cx, d[j].cx, g);
        Mor fcg = f.functor.fmap(d[i].cx, d[j].cx, d[i].fcx, d[j].fcx, cg);
        r.check("naturality")
            .expect(s.compose(fg, d[i].beta) == s.compose(d[j].beta, fcg),
                    "beta not natural on " + describe(t, probes[i]) + " -> " + describe(t, probes[j]));
      }
  return r;
}

CFunctor self_cfunctor(const Monad& c) {
  CFunctor f;
  f.name = c.name;
  f.functor.name = c.name;
  f.functor.src = c.cat;
  f.functor.dst = c.cat;
  f.functor.apply = c.apply;
  f.functor.fmap = c.fmap;
  auto mult = c.mult;
  f.beta = [mult](const Obj& x, const Obj& cx, const Obj& ccx, const Obj&) { return mult(x, cx, ccx); };
  return f;
}

Algebra omega_c(const Monad& c, const Adjunction& a, const Action& act, const Obj& z) {
  Algebra alg;
  alg.carrier = a.right.apply(z);
  alg.tx = c.apply(alg.carrier);
  alg.theta = act(z, alg.carrier, alg.tx);
  return alg;
}

std::vector<Obj> set_probes(std::size_t max_size, bool based) {
  const Category& c = based ? *pointed_category() : *set_category();
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= max_size; ++n) out.push_back(set_obj(c, atoms(n, based)));
  return out;
}

std::vector<Obj> gset_probes(const Category& c, std::size_t max_size) {
  GroupPtr g = c.shape().group;
  require(g != nullptr, ErrorCode::Validation, "gset_probes: not a G-set category");
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= max_size; ++n)
    for (const HomToSym& alpha : enumerate_homs_to_sym(g, n))
      out.push_back(c.based() ? gset_obj(c, gset_from_hom(alpha)) : gset_obj(c, alpha));
  return out;
}

std::vector<Obj> presheaf_probes(const Category& c, std::size_t max_size) {
  const auto& oc = c.shape().orbits;
  require(oc != nullptr, ErrorCode::Validation, "presheaf_probes: not a presheaf category");
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= max_size; ++n)
    for (const HomToSym& alpha : enumerate_homs_to_sym(oc->group_ptr(), n)) {
      BasedGSet x = gset_from_hom(alpha);
      out.push_back(presheaf_obj(c, fixed_point_presheaf(*oc, x)));
      // The same G-set at G/e with only the basepoint above it; special only when X has no fixed points.
      if (n == 0 || oc->num_objects() == 1) continue;
      std::vector<std::vector<Value>> levels(oc->num_objects(), std::vector<Value>{Value::base()});
      levels[oc->trivial_object()] = atoms(n, true);
      out.push_back(c.make(std::move(levels), [&](std::size_t a, const Value& v) {
        const auto& [h, k, coset] = c.shape().orbit_arrows[a];
        if (v.is_base() || h != oc->trivial_object() || k != oc->trivial_object()) return Value::base();
        std::size_t j = x(oc->rep(k, coset), static_cast<std::size_t>(v.atom_value()));
        return Value::atom(static_cast<std::int64_t>(j));
      }));
    }
  return out;
}

}  // namespace opcat
