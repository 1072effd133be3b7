#include "opcat/james.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "opcat/error.hpp"
#include "opcat/terms.hpp"

namespace opcat {

using boost::multiprecision::cpp_int;

namespace {

void require_based_sset(const SimplicialObject& x) {
  require(x.cat && x.cat->based() && x.cat->num_levels() == 1 && x.cat->shape().arrows.empty(), ErrorCode::Validation,
          "expected a based simplicial set");
}

std::size_t word_length(const Value& v) { return v.is_base() ? 0 : v.size(); }

}  // namespace

SimplicialObject james_filtration(const SimplicialObject& x, std::size_t k) {
  require_based_sset(x);
  require(k >= 1, ErrorCode::Validation, "james_filtration: word length bound must be at least 1");
  Monad m = lift(free_monoid_terms(k, true), x.cat);
  SimplicialObject j;
  j.cat = x.cat;
  for (const Obj& l : x.level) j.level.push_back(m.apply(l));
  j.face.resize(x.level.size());
  j.degen.resize(x.level.size());
  for (std::size_t q = 0; q < x.level.size(); ++q) {
    for (const Mor& d : x.face[q]) j.face[q].push_back(m.fmap(x.level[q], x.level[q - 1], j.level[q], j.level[q - 1], d));
    for (const Mor& s : x.degen[q]) j.degen[q].push_back(m.fmap(x.level[q], x.level[q + 1], j.level[q], j.level[q + 1], s));
  }
  return j;
}

Report check_first_stage(const SimplicialObject& x) {
  Report r("F_1 J X = X");
  for (const char* n : {"bijective", "faces", "degeneracies"}) r.check(n);
  SimplicialObject j = james_filtration(x, 1);
  const Category& c = *x.cat;
  Monad m = lift(free_monoid_terms(1, true), x.cat);
  std::vector<Mor> eta;
  for (std::size_t q = 0; q <= x.top(); ++q) {
    eta.push_back(m.unit(x.level[q], j.level[q]));
    std::string why;
    r.check("bijective").expect_lazy(c.is_iso(x.level[q], j.level[q], eta[q], &why), [&] { return why; });
  }
  for (std::size_t q = 1; q <= x.top(); ++q)
    for (std::size_t i = 0; i <= q; ++i)
      r.check("faces").expect(c.compose(eta[q - 1], x.face[q][i]) == c.compose(j.face[q][i], eta[q]),
                              "d_" + std::to_string(i) + " at level " + std::to_string(q));
  for (std::size_t q = 0; q < x.top(); ++q)
    for (std::size_t i = 0; i <= q; ++i)
      r.check("degeneracies").expect(c.compose(eta[q + 1], x.degen[q][i]) == c.compose(j.degen[q][i], eta[q]),
                                     "s_" + std::to_string(i) + " at level " + std::to_string(q));
  return r;
}

FiniteSSet filtration_quotient(const SimplicialObject& fk, std::size_t k) {
  FiniteSSet full = underlying(fk);
  std::vector<std::vector<std::size_t>> idx(full.size.size());
  FiniteSSet out;
  for (std::size_t q = 0; q < full.size.size(); ++q) {
    const Carrier& car = fk.level[q].at(0);
    idx[q].assign(car.size(), 0);  // 0 is the basepoint
    std::size_t n = 1;
    for (std::size_t x = 0; x < car.size(); ++x)
      if (word_length(car[x]) == k) idx[q][x] = n++;
    out.size.push_back(n);
  }
  auto collapse = [&](const std::vector<std::size_t>& t, std::size_t from, std::size_t to) {
    std::vector<std::size_t> r(out.size[from], 0);
    for (std::size_t x = 0; x < t.size(); ++x)
      if (idx[from][x] != 0) r[idx[from][x]] = idx[to][t[x]];
    return r;
  };
  out.face.resize(full.size.size());
  out.degen.resize(full.size.size());
  for (std::size_t q = 0; q < full.size.size(); ++q) {
    for (const auto& d : full.face[q]) out.face[q].push_back(collapse(d, q, q - 1));
    for (const auto& s : full.degen[q]) out.degen[q].push_back(collapse(s, q, q + 1));
  }
  return out;
}

FiniteSSet smash_power(const SimplicialObject& x, std::size_t k) {
  require_based_sset(x);
  FiniteSSet base = underlying(x);
  FiniteSSet out;
  std::vector<std::vector<std::size_t>> nonbase(base.size.size());
  std::vector<std::vector<std::size_t>> pos(base.size.size());
  for (std::size_t q = 0; q < base.size.size(); ++q) {
    const Carrier& car = x.level[q].at(0);
    pos[q].assign(car.size(), kUndef);
    for (std::size_t i = 0; i < car.size(); ++i)
      if (!car[i].is_base()) {
        pos[q][i] = nonbase[q].size();
        nonbase[q].push_back(i);
      }
    std::size_t n = 1;
    for (std::size_t t = 0; t < k; ++t) n *= nonbase[q].size();
    out.size.push_back(1 + n);
  }
  // Tuple (t_1..t_k) over m letters is 1 + Σ t_i m^{k-i}; 0 is the basepoint.
  auto apply = [&](const std::vector<std::size_t>& f, std::size_t from, std::size_t to) {
    std::size_t m = nonbase[from].size(), m2 = nonbase[to].size();
    std::vector<std::size_t> r(out.size[from], 0);
    for (std::size_t code = 1; code < out.size[from]; ++code) {
      std::size_t rest = code - 1, image = 0, scale = 1;
      bool collapsed = false;
      for (std::size_t t = 0; t < k; ++t) {
        std::size_t letter = rest % m;
        rest /= m;
        std::size_t y = pos[to][f[nonbase[from][letter]]];
        if (y == kUndef) collapsed = true;
        else image += y * scale;
        scale *= m2;
      }
      r[code] = collapsed ? 0 : 1 + image;
    }
    return r;
  };
  out.face.resize(base.size.size());
  out.degen.resize(base.size.size());
  for (std::size_t q = 0; q < base.size.size(); ++q) {
    for (const auto& d : base.face[q]) out.face[q].push_back(apply(d, q, q - 1));
    for (const auto& s : base.degen[q]) out.degen[q].push_back(apply(s, q, q + 1));
  }
  return out;
}

std::vector<std::size_t> tensor_algebra_ranks(const std::vector<AbelianGroup>& hx, std::size_t n) {
  std::vector<std::size_t> reduced(n + 1, 0), t(n + 1, 0);
  for (std::size_t q = 1; q <= n && q < hx.size(); ++q) reduced[q] = hx[q].rank;
  t[0] = 1;
  for (std::size_t q = 1; q <= n; ++q)
    for (std::size_t i = 1; i <= q; ++i) t[q] += reduced[i] * t[q - i];
  return t;
}

JamesHomology james_homology(const SimplicialObject& x, std::size_t n) {
  require_based_sset(x);
  if (!(x.top() >= n + 1)) fail(ErrorCode::Bound,
          "james_homology through degree " + std::to_string(n) + " needs X through level " + std::to_string(n + 1));
  JamesHomology out;
  out.degree = n;
  out.base = homology(underlying(x), n);
  if (!(out.base[0].is_z())) fail(ErrorCode::Domain,
          "james_homology: X is not connected (H_0 = " + out.base[0].str() +
              "); the comparison with the tensor algebra only holds for connected X");
  SimplicialObject cut = x;
  cut.level.resize(n + 2);
  cut.face.resize(n + 2);
  cut.degen.resize(n + 2);
  cut.degen[n + 1].clear();
  out.stage = n + 1;
  SimplicialObject f = james_filtration(cut, n + 1);
  for (const Obj& l : f.level) out.level_sizes.push_back(l.at(0).size());
  out.homology = homology(underlying(f), n);
  if (n >= 1) {
    out.previous = homology(underlying(james_filtration(cut, n)), n);
    for (std::size_t q = 0; q <= n; ++q) out.agrees.push_back(out.previous[q] == out.homology[q]);
  }
  out.tensor = tensor_algebra_ranks(out.base, n);
  bool torsion_free = true;
  for (const auto& g : out.base) torsion_free = torsion_free && g.torsion.empty();
  out.tensor_algebra_match = true;
  for (std::size_t q = 0; q <= n; ++q) {
    bool ok = out.homology[q].rank == out.tensor[q] && (!torsion_free || out.homology[q].torsion.empty());
    out.tensor_algebra_match = out.tensor_algebra_match && ok;
  }
  return out;
}

namespace {

// Smith form D = U A V of a dense integer matrix, keeping U.
struct DenseSmith {
  std::vector<cpp_int> diag;
  std::vector<std::vector<cpp_int>> u;
};

DenseSmith dense_smith(std::vector<std::vector<cpp_int>> a, std::size_t rows) {
  const std::size_t m = rows, n = a.empty() ? 0 : a[0].size();
  DenseSmith s;
  s.u.assign(m, std::vector<cpp_int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) s.u[i][i] = 1;
  auto row_op = [&](std::size_t i, std::size_t t, const cpp_int& q) {  // row_i -= q row_t
    for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
    for (std::size_t j = 0; j < m; ++j) s.u[i][j] -= q * s.u[t][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t t) {
    std::swap(a[i], a[t]);
    std::swap(s.u[i], s.u[t]);
  };
  auto col_swap = [&](std::size_t i, std::size_t t) {
    for (auto& row : a) std::swap(row[i], row[t]);
  };
  auto absv = [](const cpp_int& v) { return v < 0 ? cpp_int(-v) : v; };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = kUndef, pj = kUndef;
    cpp_int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == kUndef || absv(a[i][j]) < best)) {
          best = absv(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == kUndef) break;
    row_swap(t, pi);
    col_swap(t, pj);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m && !changed; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) {
          row_swap(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n && !changed; ++j) {
        if (a[t][j] == 0) continue;
        cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          col_swap(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      for (std::size_t i = t + 1; i < m && !changed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_op(t, i, -1);
            changed = true;
            break;
          }
      if (!changed) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < m; ++j) s.u[t][j] = -s.u[t][j];
    }
    s.diag.push_back(a[t][t]);
  }
  return s;
}

}  // namespace

GroupCompletion grothendieck(const MonoidPresentation& p) {
  require(p.commutative, ErrorCode::Domain, "grothendieck: the presentation is not commutative");
  const std::size_t n = p.generators;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(p.relations.size(), 0));
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& [lhs, rhs] = p.relations[r];
    require(lhs.size() == n && rhs.size() == n, ErrorCode::Validation, "grothendieck: relation has the wrong length");
    for (std::size_t i = 0; i < n; ++i) a[i][r] = cpp_int(lhs[i]) - cpp_int(rhs[i]);
  }
  DenseSmith s = dense_smith(std::move(a), n);
  GroupCompletion g;
  const std::size_t rank = s.diag.size();
  g.group.rank = n - rank;
  std::vector<std::size_t> cyclic;
  for (std::size_t t = 0; t < rank; ++t)
    if (s.diag[t] != 1) {
      cyclic.push_back(t);
      g.group.torsion.push_back(s.diag[t].str());
    }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> img;
    for (std::size_t t : cyclic) {
      cpp_int v = s.u[t][i] % s.diag[t];
      if (v < 0) v += s.diag[t];
      img.push_back(v.str());
    }
    for (std::size_t t = rank; t < n; ++t) img.push_back(s.u[t][i].str());
    g.images.push_back(std::move(img));
  }
  return g;
}

MonoidPresentation table_presentation(const std::vector<std::vector<std::size_t>>& table, std::size_t unit) {
  const std::size_t n = table.size();
  require(unit < n, ErrorCode::Validation, "table_presentation: unit out of range");
  MonoidPresentation p;
  p.generators = n;
  auto e = [n](std::size_t i) {
    std::vector<std::int64_t> v(n, 0);
    if (i != kUndef) v[i] = 1;
    return v;
  };
  p.relations.push_back({e(unit), e(kUndef)});
  for (std::size_t a = 0; a < n; ++a) {
    require(table[a].size() == n, ErrorCode::Validation, "table_presentation: table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) p.commutative = false;
      if (table[a][b] == kUndef) continue;
      auto lhs = e(a);
      lhs[b] += 1;
      p.relations.push_back({lhs, e(table[a][b])});
    }
  }
  return p;
}

std::vector<std::size_t> pi0_classes(const FiniteSSet& k, std::size_t* count) {
  std::vector<std::size_t> parent(k.size.at(0));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (k.top() >= 1)
    for (std::size_t e = 0; e < k.size[1]; ++e) {
      std::size_t a = find(k.face[1][0][e]), b = find(k.face[1][1][e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> cls(parent.size()), id(parent.size(), kUndef);
  std::size_t n = 0;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    std::size_t r = find(v);
    if (id[r] == kUndef) id[r] = n++;
    cls[v] = id[r];
  }
  if (count) *count = n;
  return cls;
}

Pi0Monoid pi0_james_s0(std::size_t k) {
  auto cat = pointed_category();
  Obj s0 = set_obj(*cat, atoms(1, true));
  SimplicialObject x;
  x.cat = cat;
  x.level = {s0, s0};
  x.face = {{}, {cat->identity(s0), cat->identity(s0)}};
  x.degen = {{cat->identity(s0)}, {}};
  SimplicialObject f = james_filtration(x, k);
  Pi0Monoid out;
  out.k = k;
  std::vector<std::size_t> cls = pi0_classes(underlying(f), &out.classes);
  const Carrier& vertices = f.level[0].at(0);
  // Class of each word length.
  std::vector<std::size_t> of_length(k + 1, kUndef);
  for (std::size_t v = 0; v < vertices.size(); ++v) of_length[word_length(vertices[v])] = cls[v];
  out.table.assign(out.classes, std::vector<std::size_t>(out.classes, kUndef));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      std::size_t len = word_length(vertices[i]) + word_length(vertices[j]);
      if (len <= k) out.table[cls[i]][cls[j]] = of_length[len];
    }
  out.is_truncated_naturals = out.classes == k + 1;
  for (std::size_t i = 0; i <= k && out.is_truncated_naturals; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      std::size_t want = i + j <= k ? of_length[i + j] : kUndef;
      if (of_length[i] == kUndef || out.table[of_length[i]][of_length[j]] != want) out.is_truncated_naturals = false;
    }
  out.completion = grothendieck(table_presentation(out.table, of_length[0]));
  return out;
}

}  // namespace opcat
