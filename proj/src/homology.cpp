#include "opcat/homology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "opcat/error.hpp"

namespace opcat {

using boost::multiprecision::cpp_int;

FiniteSSet underlying(const SimplicialObject& k) {
  require(k.cat->num_levels() == 1, ErrorCode::Validation, "underlying: simplicial object is not levelwise a set");
  FiniteSSet s;
  for (const Obj& x : k.level) s.size.push_back(x.at(0).size());
  s.face.resize(k.level.size());
  s.degen.resize(k.level.size());
  for (std::size_t q = 0; q < k.level.size(); ++q) {
    for (const Mor& d : k.face[q]) {
      require(d.total(), ErrorCode::Domain, "underlying: undefined face map");
      s.face[q].push_back(d.level[0]);
    }
    for (const Mor& d : k.degen[q]) {
      require(d.total(), ErrorCode::Domain, "underlying: undefined degeneracy");
      s.degen[q].push_back(d.level[0]);
    }
  }
  return s;
}

FiniteSSet permuted(const FiniteSSet& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> p(k.size.size());
  for (std::size_t q = 0; q < k.size.size(); ++q) {
    p[q].resize(k.size[q]);
    std::iota(p[q].begin(), p[q].end(), 0);
    std::shuffle(p[q].begin(), p[q].end(), rng);
  }
  FiniteSSet out = k;
  auto relabel = [&](const std::vector<std::size_t>& t, std::size_t from, std::size_t to) {
    std::vector<std::size_t> r(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) r[p[from][x]] = p[to][t[x]];
    return r;
  };
  for (std::size_t q = 0; q < k.size.size(); ++q) {
    for (std::size_t i = 0; i < k.face[q].size(); ++i) out.face[q][i] = relabel(k.face[q][i], q, q - 1);
    for (std::size_t i = 0; i < k.degen[q].size(); ++i) out.degen[q][i] = relabel(k.degen[q][i], q, q + 1);
  }
  return out;
}

FiniteSSet point_sset(std::size_t q_max) {
  FiniteSSet s;
  s.size.assign(q_max + 1, 1);
  s.face.resize(q_max + 1);
  s.degen.resize(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q) {
    if (q > 0) s.face[q].assign(q + 1, {0});
    if (q < q_max) s.degen[q].assign(q + 1, {0});
  }
  return s;
}

namespace {

// Monotone sequences of length len onto {0..n}.
std::vector<Value> onto_sequences(std::size_t n, std::size_t len) {
  std::vector<Value> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> go = [&](std::int64_t last) {
    if (cur.size() == len) {
      if (last == static_cast<std::int64_t>(n)) {
        std::vector<Value> kids;
        for (auto a : cur) kids.push_back(Value::atom(a));
        out.push_back(Value::node(tag::Cell, std::move(kids)));
      }
      return;
    }
    for (std::int64_t a = cur.empty() ? 0 : last; a <= last + 1 && a <= static_cast<std::int64_t>(n); ++a) {
      if (cur.empty() && a != 0) break;
      cur.push_back(a);
      go(a);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

std::optional<Value> cell_of(std::size_t n, std::vector<Value> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::int64_t want = i == 0 ? 0 : seq[i - 1].atom_value();
    std::int64_t a = seq[i].atom_value();
    if (a != want && a != want + 1) return Value::base();
    if (i == 0 && a != 0) return Value::base();
  }
  if (seq.empty() || seq.back().atom_value() != static_cast<std::int64_t>(n)) return Value::base();
  return Value::node(tag::Cell, std::move(seq));
}

}  // namespace

SimplicialObject sphere_model(std::size_t n, std::size_t q_max) {
  require(n >= 1, ErrorCode::Validation, "sphere_model: dimension must be positive");
  SimplicialObject k;
  k.cat = pointed_category();
  for (std::size_t q = 0; q <= q_max; ++q) {
    std::vector<Value> elems{Value::base()};
    for (Value& v : onto_sequences(n, q + 1)) elems.push_back(std::move(v));
    k.level.push_back(set_obj(*k.cat, std::move(elems)));
  }
  k.face.resize(q_max + 1);
  k.degen.resize(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q) {
    for (std::size_t i = 0; q > 0 && i <= q; ++i)
      k.face[q].push_back(k.cat->tabulate(k.level[q], k.level[q - 1], [&](std::size_t, const Value& v) -> std::optional<Value> {
        if (v.is_base()) return v;
        std::vector<Value> s = v.kids();
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        return cell_of(n, std::move(s));
      }));
    for (std::size_t i = 0; q < q_max && i <= q; ++i)
      k.degen[q].push_back(k.cat->tabulate(k.level[q], k.level[q + 1], [&](std::size_t, const Value& v) -> std::optional<Value> {
        if (v.is_base()) return v;
        std::vector<Value> s = v.kids();
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
        return cell_of(n, std::move(s));
      }));
  }
  return k;
}

namespace {

ChainComplex chains(const FiniteSSet& k, bool normalized) {
  const std::size_t Q = k.top();
  std::vector<std::vector<std::size_t>> idx(Q + 1);  // simplex -> basis index or kUndef
  ChainComplex c;
  for (std::size_t q = 0; q <= Q; ++q) {
    std::vector<char> degenerate(k.size[q], 0);
    if (normalized && q > 0)
      for (const auto& s : k.degen[q - 1])
        for (std::size_t y : s) degenerate[y] = 1;
    idx[q].assign(k.size[q], kUndef);
    std::size_t n = 0;
    for (std::size_t x = 0; x < k.size[q]; ++x)
      if (!degenerate[x]) idx[q][x] = n++;
    c.rank.push_back(n);
  }
  c.boundary.resize(Q + 1);
  c.boundary[0].rows = 0;
  c.boundary[0].cols.resize(c.rank[0]);
  for (std::size_t q = 1; q <= Q; ++q) {
    SparseColumnMatrix& m = c.boundary[q];
    m.rows = c.rank[q - 1];
    m.cols.resize(c.rank[q]);
    for (std::size_t x = 0; x < k.size[q]; ++x) {
      if (idx[q][x] == kUndef) continue;
      std::vector<std::pair<std::size_t, std::int64_t>> col;
      for (std::size_t i = 0; i <= q; ++i) {
        std::size_t r = idx[q - 1][k.face[q][i][x]];
        if (r != kUndef) col.push_back({r, i % 2 == 0 ? 1 : -1});
      }
      std::sort(col.begin(), col.end());
      std::vector<std::pair<std::size_t, std::int64_t>> merged;
      for (auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      m.cols[idx[q][x]] = std::move(merged);
    }
  }
  return c;
}

}  // namespace

ChainComplex normalized_chains(const FiniteSSet& k) { return chains(k, true); }
ChainComplex unnormalized_chains(const FiniteSSet& k) { return chains(k, false); }

std::size_t boundary_squared_defects(const ChainComplex& c) {
  std::size_t bad = 0;
  for (std::size_t q = 2; q < c.boundary.size(); ++q) {
    const auto& hi = c.boundary[q];
    const auto& lo = c.boundary[q - 1];
    for (const auto& col : hi.cols) {
      std::vector<std::pair<std::size_t, std::int64_t>> acc;
      for (auto [r, v] : col)
        for (auto [r2, w] : lo.cols[r]) acc.push_back({r2, v * w});
      std::sort(acc.begin(), acc.end());
      for (std::size_t i = 0; i < acc.size();) {
        std::int64_t s = 0;
        std::size_t j = i;
        for (; j < acc.size() && acc[j].first == acc[i].first; ++j) s += acc[j].second;
        bad += s != 0;
        i = j;
      }
    }
  }
  return bad;
}

namespace {

struct Overflow {};

template <class T>
T mul(const T& a, const T& b) {
  return a * b;
}
template <class T>
T sub(const T& a, const T& b) {
  return a - b;
}
template <class T>
T add(const T& a, const T& b) {
  return a + b;
}
template <>
std::int64_t mul(const std::int64_t& a, const std::int64_t& b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
template <>
std::int64_t sub(const std::int64_t& a, const std::int64_t& b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
template <>
std::int64_t add(const std::int64_t& a, const std::int64_t& b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <class T>
T absval(const T& a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? T(-a) : a;
}
template <>
cpp_int absval(const cpp_int& a) {
  return a < 0 ? cpp_int(-a) : a;
}

std::string dec(std::int64_t v) { return std::to_string(v); }
std::string dec(const cpp_int& v) { return v.str(); }

constexpr std::size_t kDenseLimit = 3000;

template <class T>
SmithSummary smith_impl(const SparseColumnMatrix& in) {
  using Col = std::vector<std::pair<std::size_t, T>>;
  std::vector<Col> cols(in.cols.size());
  std::vector<std::unordered_set<std::size_t>> row_cols(in.rows);
  for (std::size_t c = 0; c < in.cols.size(); ++c)
    for (auto [r, v] : in.cols[c]) {
      cols[c].push_back({r, T(v)});
      row_cols[r].insert(c);
    }
  SmithSummary out;
  std::vector<char> alive(cols.size(), 1), stuck(cols.size(), 0);
  using Item = std::pair<std::size_t, std::size_t>;  // (length, column)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t c = 0; c < cols.size(); ++c) pq.push({cols[c].size(), c});
  while (!pq.empty()) {
    auto [len, c] = pq.top();
    pq.pop();
    if (!alive[c] || stuck[c] || len != cols[c].size()) continue;
    if (cols[c].empty()) {
      alive[c] = 0;
      continue;
    }
    std::size_t best = kUndef, best_cost = kUndef;
    T u = 0;
    for (const auto& [r, v] : cols[c])
      if (v == 1 || v == -1)
        if (row_cols[r].size() < best_cost) {
          best = r;
          best_cost = row_cols[r].size();
          u = v;
        }
    if (best == kUndef) {
      stuck[c] = 1;
      continue;
    }
    ++out.rank;
    const Col pivot = cols[c];
    std::vector<std::size_t> others;
    for (std::size_t c2 : row_cols[best])
      if (c2 != c) others.push_back(c2);
    for (std::size_t c2 : others) {
      Col& tgt = cols[c2];
      auto it = std::lower_bound(tgt.begin(), tgt.end(), best, [](const auto& e, std::size_t r) { return e.first < r; });
      T f = mul(it->second, u);  // u is its own inverse
      Col merged;
      merged.reserve(tgt.size() + pivot.size());
      std::size_t i = 0, j = 0;
      while (i < tgt.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < tgt.size() && tgt[i].first < pivot[j].first)) {
          merged.push_back(tgt[i++]);
        } else if (i == tgt.size() || pivot[j].first < tgt[i].first) {
          T v = sub(T(0), mul(f, pivot[j].second));
          row_cols[pivot[j].first].insert(c2);
          merged.push_back({pivot[j].first, v});
          ++j;
        } else {
          T v = sub(tgt[i].second, mul(f, pivot[j].second));
          if (v != 0) merged.push_back({tgt[i].first, v});
          else row_cols[tgt[i].first].erase(c2);
          ++i, ++j;
        }
      }
      tgt = std::move(merged);
      if (stuck[c2]) stuck[c2] = 0;
      pq.push({tgt.size(), c2});
    }
    for (const auto& [r, v] : pivot) row_cols[r].erase(c);
    alive[c] = 0;
    cols[c].clear();
    row_cols[best].clear();
  }
  // Dense remainder.
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (alive[c] && !cols[c].empty()) rest.push_back(c);
  if (rest.empty()) return out;
  std::vector<std::size_t> row_id(in.rows, kUndef);
  std::size_t nr = 0;
  for (std::size_t c : rest)
    for (const auto& [r, v] : cols[c])
      if (row_id[r] == kUndef) row_id[r] = nr++;
  if (!(nr <= kDenseLimit && rest.size() <= kDenseLimit)) fail(ErrorCode::Bound,
          "Smith form: dense remainder " + std::to_string(nr) + "x" + std::to_string(rest.size()) + " too large");
  std::vector<std::vector<T>> a(nr, std::vector<T>(rest.size(), T(0)));
  for (std::size_t j = 0; j < rest.size(); ++j)
    for (const auto& [r, v] : cols[rest[j]]) a[row_id[r]][j] = v;
  const std::size_t m = nr, n = rest.size();
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = kUndef, pj = kUndef;
    T best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == kUndef || absval(a[i][j]) < best)) {
          best = absval(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == kUndef) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m && !changed; ++i) {
        if (a[i][t] == 0) continue;
        T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] = sub(a[i][j], mul(q, a[t][j]));
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n && !changed; ++j) {
        if (a[t][j] == 0) continue;
        T q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          changed = true;
        }
      }
      if (changed) continue;
      for (std::size_t i = t + 1; i < m && !changed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = add(a[t][k], a[i][k]);
            changed = true;
            break;
          }
      if (!changed) break;
    }
    diag.push_back(absval(a[t][t]));
  }
  for (const T& d : diag) {
    ++out.rank;
    if (d != 1) out.factors.push_back(dec(d));
  }
  return out;
}

}  // namespace

SmithSummary smith(const SparseColumnMatrix& m, bool force_wide) {
  if (!force_wide) {
    try {
      return smith_impl<std::int64_t>(m);
    } catch (const Overflow&) {
    }
  }
  SmithSummary s = smith_impl<cpp_int>(m);
  s.wide = true;
  return s;
}

std::string AbelianGroup::str() const {
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t);
  return s.empty() ? "0" : s;
}

std::vector<AbelianGroup> homology(const ChainComplex& c, std::size_t n) {
  if (!(c.rank.size() >= n + 2)) fail(ErrorCode::Bound,
          "homology through degree " + std::to_string(n) + " needs simplices through level " + std::to_string(n + 1));
  std::vector<SmithSummary> s(n + 2);
  for (std::size_t q = 1; q <= n + 1; ++q) s[q] = smith(c.boundary[q]);
  std::vector<AbelianGroup> h;
  for (std::size_t q = 0; q <= n; ++q) {
    AbelianGroup g;
    g.rank = c.rank[q] - s[q].rank - s[q + 1].rank;
    g.torsion = s[q + 1].factors;
    h.push_back(std::move(g));
  }
  return h;
}

std::vector<AbelianGroup> homology(const FiniteSSet& k, std::size_t n) {
  if (!(k.size.size() >= n + 2)) fail(ErrorCode::Bound,
          "homology through degree " + std::to_string(n) + " needs simplices through level " + std::to_string(n + 1));
  FiniteSSet cut = k;
  cut.size.resize(n + 2);
  cut.face.resize(n + 2);
  cut.degen.resize(n + 2);
  cut.degen[n + 1].clear();
  return homology(normalized_chains(cut), n);
}

AbelianGroup cokernel(std::size_t gens, const std::vector<std::vector<std::int64_t>>& relations) {
  SparseColumnMatrix m;
  m.rows = gens;
  for (const auto& rel : relations) {
    require(rel.size() == gens, ErrorCode::Validation, "cokernel: relation has the wrong length");
    std::vector<std::pair<std::size_t, std::int64_t>> col;
    for (std::size_t i = 0; i < gens; ++i)
      if (rel[i] != 0) col.push_back({i, rel[i]});
    m.cols.push_back(std::move(col));
  }
  SmithSummary s = smith(m);
  return {gens - s.rank, s.factors};
}

}  // namespace opcat
