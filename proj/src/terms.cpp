#include "opcat/terms.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/error.hpp"
#include "opcat/perm.hpp"

namespace opcat {

namespace {

std::vector<Value> nonbase(const std::vector<Value>& letters) {
  std::vector<Value> v;
  for (const auto& a : letters)
    if (!a.is_base()) v.push_back(a);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Appends words (or nondecreasing words) of lengths lo..hi in increasing order.
// Returns false once cap is reached with words remaining.
bool append_words(const std::vector<Value>& letters, std::size_t lo, std::size_t hi, bool commutative,
                  std::uint32_t t, std::size_t cap, std::vector<Value>& out) {
  std::size_t n = letters.size();
  for (std::size_t len = lo; len <= hi; ++len) {
    if (len > 0 && n == 0) break;
    std::vector<std::size_t> d(len, 0);
    while (true) {
      if (out.size() >= cap) return false;
      std::vector<Value> w;
      w.reserve(len);
      for (std::size_t i : d) w.push_back(letters[i]);
      out.push_back(Value::node(t, std::move(w)));
      // next tuple
      std::size_t i = len;
      while (i > 0 && d[i - 1] + 1 == n) --i;
      if (i == 0) break;
      ++d[i - 1];
      for (std::size_t r = i; r < len; ++r) d[r] = commutative ? d[i - 1] : 0;
    }
  }
  return true;
}

TermMonadPtr make_list(std::size_t k, bool based, bool commutative) {
  auto m = std::make_shared<TermMonad>();
  std::uint32_t t = commutative ? tag::Bag : tag::Word;
  m->name = std::string(commutative ? "N" : "M") + (based ? "" : "+") + "_" + std::to_string(k);
  m->based = based;
  auto finish = [t, based, commutative](std::vector<Value> w) -> Value {
    if (commutative) std::sort(w.begin(), w.end());
    if (based && w.empty()) return Value::base();
    return Value::node(t, std::move(w));
  };
  m->enumerate = [=](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    std::vector<Value> out;
    if (based) out.push_back(Value::base());
    complete = append_words(nonbase(letters), based ? 1 : 0, k, commutative, t, cap, out) && complete;
    return out;
  };
  m->unit = [=](const Value& x) -> std::optional<Value> {
    if (based && x.is_base()) return Value::base();
    return Value::node(t, {x});
  };
  m->mult = [=](const Value& s) -> std::optional<Value> {
    if (s.is_base()) return Value::base();
    std::vector<Value> w;
    for (const auto& inner : s.kids()) {
      if (inner.is_base()) continue;
      for (const auto& a : inner.kids()) w.push_back(a);
    }
    if (w.size() > k) return std::nullopt;
    return finish(std::move(w));
  };
  m->fmap = [=](const TermMonad::Fn& f, const Value& s) -> std::optional<Value> {
    if (s.is_base()) return Value::base();
    std::vector<Value> w;
    for (const auto& a : s.kids()) {
      auto v = f(a);
      if (!v) return std::nullopt;
      if (based && v->is_base()) continue;
      w.push_back(*v);
    }
    return finish(std::move(w));
  };
  return m;
}

}  // namespace

TermMonadPtr identity_terms(bool based) {
  auto m = std::make_shared<TermMonad>();
  m->name = "Id";
  m->based = based;
  m->enumerate = [based](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    std::vector<Value> v = letters;
    if (based) v.push_back(Value::base());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() > cap) {
      v.resize(cap);
      complete = false;
    }
    return v;
  };
  m->unit = [](const Value& x) -> std::optional<Value> { return x; };
  m->mult = [](const Value& x) -> std::optional<Value> { return x; };
  m->fmap = [](const TermMonad::Fn& f, const Value& x) { return f(x); };
  return m;
}

TermMonadPtr free_monoid_terms(std::size_t k, bool based) { return make_list(k, based, false); }
TermMonadPtr multiset_terms(std::size_t k, bool based) { return make_list(k, based, true); }

TermMonadPtr monoid_with_zero_terms(std::size_t k) {
  auto m = std::make_shared<TermMonad>();
  m->name = "J0_" + std::to_string(k);
  m->based = true;
  m->enumerate = [k](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    std::vector<Value> out{Value::base()};
    complete = append_words(nonbase(letters), 0, k, false, tag::Word, cap, out) && complete;
    return out;
  };
  m->unit = [](const Value& x) -> std::optional<Value> {
    if (x.is_base()) return Value::base();
    return Value::node(tag::Word, {x});
  };
  m->mult = [k](const Value& s) -> std::optional<Value> {
    if (s.is_base()) return Value::base();
    std::vector<Value> w;
    for (const auto& inner : s.kids()) {
      if (inner.is_base()) return Value::base();
      for (const auto& a : inner.kids()) w.push_back(a);
    }
    if (w.size() > k) return std::nullopt;
    return Value::node(tag::Word, std::move(w));
  };
  m->fmap = [](const TermMonad::Fn& f, const Value& s) -> std::optional<Value> {
    if (s.is_base()) return Value::base();
    std::vector<Value> w;
    bool zero = false;
    for (const auto& a : s.kids()) {
      auto v = f(a);
      if (!v) return std::nullopt;
      zero = zero || v->is_base();
      w.push_back(*v);
    }
    if (zero) return Value::base();
    return Value::node(tag::Word, std::move(w));
  };
  return m;
}

Value operad_normal_form(const Operad& op, std::size_t j, std::size_t c, std::vector<Value> letters) {
  require(letters.size() == j, ErrorCode::Internal, "operad term: arity mismatch");
  // Basepoint deletion: (c; …, *, …) ~ (γ(c; 1, …, 0, …, 1); …).
  for (std::size_t i = 0; i < letters.size();) {
    if (!letters[i].is_base()) {
      ++i;
      continue;
    }
    std::vector<std::size_t> ar(j, 1), ds(j, op.unit());
    ar[i] = 0;
    ds[i] = 0;
    c = op.gamma(c, ar, ds);
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
    --j;
  }
  if (j == 0) return Value::base();
  // Least (σ⁻¹x, c·σ) over σ ∈ Σ_j.
  std::vector<Value> best_y;
  std::size_t best_c = 0;
  bool have = false;
  for (const Perm& s : all_perms(j)) {
    std::vector<Value> y(j);
    for (std::size_t i = 1; i <= j; ++i) y[i - 1] = letters[s[i] - 1];
    if (have && y > best_y) continue;
    std::size_t cs = op.act(j, c, s);
    if (!have || y < best_y || cs < best_c) {
      best_y = std::move(y);
      best_c = cs;
      have = true;
    }
  }
  std::vector<Value> kids;
  kids.push_back(Value::atom(static_cast<std::int64_t>(j)));
  for (auto& v : best_y) kids.push_back(std::move(v));
  kids.push_back(Value::atom(static_cast<std::int64_t>(best_c)));
  return Value::node(tag::Op, std::move(kids));
}

namespace {

struct OpTerm {
  std::size_t j = 0, c = 0;
  std::vector<Value> letters;
};

std::optional<OpTerm> read_op(const Value& t) {
  if (t.is_base()) return OpTerm{};
  if (!t.is_node() || t.tag() != tag::Op || t.size() < 2) return std::nullopt;
  OpTerm o;
  o.j = static_cast<std::size_t>(t[0].atom_value());
  if (t.size() != o.j + 2) return std::nullopt;
  o.letters.assign(t.kids().begin() + 1, t.kids().begin() + 1 + static_cast<std::ptrdiff_t>(o.j));
  o.c = static_cast<std::size_t>(t[o.j + 1].atom_value());
  return o;
}

}  // namespace

TermMonadPtr operad_terms(OperadPtr op, std::size_t k) {
  require(k <= op->bound(), ErrorCode::Bound, "operad monad: truncation above the operad's arity bound");
  require(op->card(0) == 1, ErrorCode::Domain, "operad monad: the operad must be reduced");
  auto m = std::make_shared<TermMonad>();
  m->name = op->name() + "-monad_" + std::to_string(k);
  m->based = true;
  m->enumerate = [op, k](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    std::vector<Value> out{Value::base()};
    std::vector<Value> nb = nonbase(letters);
    for (std::size_t j = 1; j <= k; ++j) {
      if (nb.empty()) break;
      std::vector<Value> tuples;
      append_words(nb, j, j, true, tag::Tuple, SIZE_MAX, tuples);
      for (const auto& tup : tuples) {
        std::vector<Value> forms;
        for (std::size_t c = 0; c < op->card(j); ++c) forms.push_back(operad_normal_form(*op, j, c, tup.kids()));
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        for (auto& f : forms) {
          if (out.size() >= cap) {
            complete = false;
            return out;
          }
          out.push_back(std::move(f));
        }
      }
    }
    return out;
  };
  m->unit = [op](const Value& x) -> std::optional<Value> {
    if (x.is_base()) return Value::base();
    return Value::node(tag::Op, {Value::atom(1), x, Value::atom(static_cast<std::int64_t>(op->unit()))});
  };
  m->mult = [op, k](const Value& s) -> std::optional<Value> {
    auto outer = read_op(s);
    if (!outer) return std::nullopt;
    if (outer->j == 0) return Value::base();
    std::vector<std::size_t> ar, ds;
    std::vector<Value> letters;
    for (const auto& t : outer->letters) {
      auto in = read_op(t);
      if (!in) return std::nullopt;
      ar.push_back(in->j);
      ds.push_back(in->c);
      for (auto& v : in->letters) letters.push_back(std::move(v));
    }
    if (letters.size() > k || !op->gamma_defined(ar)) return std::nullopt;
    std::size_t n = letters.size();
    return operad_normal_form(*op, n, op->gamma(outer->c, ar, ds), std::move(letters));
  };
  m->fmap = [op](const TermMonad::Fn& f, const Value& s) -> std::optional<Value> {
    auto t = read_op(s);
    if (!t) return std::nullopt;
    if (t->j == 0) return Value::base();
    std::vector<Value> letters;
    for (const auto& a : t->letters) {
      auto v = f(a);
      if (!v) return std::nullopt;
      letters.push_back(*v);
    }
    return operad_normal_form(*op, t->j, t->c, std::move(letters));
  };
  return m;
}

std::size_t operad_quotient_check(const Operad& op, std::size_t k, const std::vector<Value>& letters, Report& r) {
  std::vector<Value> L = nonbase(letters);
  L.insert(L.begin(), Value::base());
  std::size_t n = L.size();
  // Element (j, c, x) ↦ offset[j] + c * n^j + mixed(x).
  std::vector<std::size_t> offset(k + 2, 0), pw(k + 1, 1);
  for (std::size_t j = 1; j <= k; ++j) pw[j] = pw[j - 1] * n;
  for (std::size_t j = 0; j <= k; ++j) offset[j + 1] = offset[j] + op.card(j) * pw[j];
  std::size_t total = offset[k + 1];
  require(total <= 5000000, ErrorCode::Bound, "operad quotient: disjoint union too large");
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  };
  auto index = [&](std::size_t j, std::size_t c, const std::vector<std::size_t>& x) {
    std::size_t m = 0;
    for (std::size_t v : x) m = m * n + v;
    return offset[j] + c * pw[j] + m;
  };
  auto decode = [&](std::size_t e, std::size_t& j, std::size_t& c, std::vector<std::size_t>& x) {
    j = 0;
    while (offset[j + 1] <= e) ++j;
    std::size_t rest = e - offset[j];
    c = rest / pw[j];
    rest %= pw[j];
    x.assign(j, 0);
    for (std::size_t i = j; i > 0; --i) {
      x[i - 1] = rest % n;
      rest /= n;
    }
  };
  for (std::size_t e = 0; e < total; ++e) {
    std::size_t j, c;
    std::vector<std::size_t> x;
    decode(e, j, c, x);
    // (cσ; y) ~ (c; σy) with y = x.
    for (const Perm& s : all_perms(j)) {
      std::vector<std::size_t> sy(j);
      for (std::size_t i = 1; i <= j; ++i) sy[s[i] - 1] = x[i - 1];  // (σy)_{σ(i)} = y_i
      unite(index(j, op.act(j, c, s), x), index(j, c, sy));
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (x[i] != 0) continue;
      std::vector<std::size_t> ar(j, 1), ds(j, op.unit());
      ar[i] = 0;
      ds[i] = 0;
      std::vector<std::size_t> y = x;
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
      unite(e, index(j - 1, op.gamma(c, ar, ds), y));
    }
  }
  std::vector<std::optional<Value>> form_of_root(total);
  std::vector<std::pair<Value, std::size_t>> forms;
  CheckResult* constant = &r.check("normal_form_constant_on_classes");
  for (std::size_t e = 0; e < total; ++e) {
    std::size_t j, c;
    std::vector<std::size_t> x;
    decode(e, j, c, x);
    std::vector<Value> lx;
    for (std::size_t v : x) lx.push_back(L[v]);
    Value nf = operad_normal_form(op, j, c, lx);
    std::size_t root = find(e);
    if (!form_of_root[root]) {
      form_of_root[root] = nf;
      forms.push_back({nf, root});
    } else {
      constant->expect_lazy(*form_of_root[root] == nf, [&] { return "class of " + nf.str() + " has two forms"; });
    }
  }
  std::sort(forms.begin(), forms.end());
  std::size_t dup = 0;
  for (std::size_t i = 1; i < forms.size(); ++i) dup += forms[i].first == forms[i - 1].first;
  r.check("normal_form_injective_on_classes")
      .expect(dup == 0, std::to_string(dup) + " normal forms shared between classes");
  r.info()["classes"] = forms.size();
  r.info()["disjoint_union_size"] = total;
  return forms.size();
}

MonadPair trivial_pair_outer(TermMonadPtr j) {
  return {"Id." + j->name, identity_terms(j->based), j, [](const Value& v) -> std::optional<Value> { return v; }};
}

MonadPair trivial_pair_inner(TermMonadPtr c) {
  return {c->name + ".Id", c, identity_terms(c->based), [](const Value& v) -> std::optional<Value> { return v; }};
}

MonadPair distributive_pair(std::size_t k) {
  MonadPair p;
  p.name = "N_" + std::to_string(k) + ".J0_" + std::to_string(k);
  p.c = multiset_terms(k, true);
  p.j = monoid_with_zero_terms(k);
  // A product of sums multiplied out: [m_1, …, m_r] ↦ Σ over choices of [y_1, …, y_r].
  p.rho = [k](const Value& w) -> std::optional<Value> {
    if (w.is_base()) return Value::base();
    std::vector<std::vector<Value>> sums;
    std::size_t terms = 1;
    for (const auto& m : w.kids()) {
      if (m.is_base()) return Value::base();
      sums.push_back(m.kids());
      terms *= m.size();
      if (terms > k) return std::nullopt;
    }
    std::vector<Value> out;
    std::vector<std::size_t> d(sums.size(), 0);
    while (true) {
      std::vector<Value> word;
      for (std::size_t i = 0; i < sums.size(); ++i) word.push_back(sums[i][d[i]]);
      out.push_back(Value::node(tag::Word, std::move(word)));
      std::size_t i = sums.size();
      while (i > 0 && d[i - 1] + 1 == sums[i - 1].size()) d[--i] = 0;
      if (i == 0) break;
      ++d[i - 1];
    }
    std::sort(out.begin(), out.end());
    return Value::node(tag::Bag, std::move(out));
  };
  return p;
}

TermMonadPtr composite_terms(const MonadPair& p) {
  auto m = std::make_shared<TermMonad>();
  m->name = p.c->name + "." + p.j->name;
  m->based = p.c->based;
  TermMonadPtr c = p.c, j = p.j;
  Interchange rho = p.rho;
  m->enumerate = [c, j](const std::vector<Value>& letters, std::size_t cap, bool& complete) {
    auto inner = j->enumerate(letters, cap, complete);
    return c->enumerate(inner, cap, complete);
  };
  m->unit = [c, j](const Value& x) -> std::optional<Value> {
    auto v = j->unit(x);
    if (!v) return std::nullopt;
    return c->unit(*v);
  };
  m->fmap = [c, j](const TermMonad::Fn& f, const Value& t) {
    return c->fmap([&](const Value& u) { return j->fmap(f, u); }, t);
  };
  m->mult = [c, j, rho](const Value& t) -> std::optional<Value> {
    auto s = c->fmap(rho, t);  // C ρ J
    if (!s) return std::nullopt;
    auto u = c->fmap([&](const Value& v) { return c->fmap(j->mult, v); }, *s);  // C C μ^J
    if (!u) return std::nullopt;
    return c->mult(*u);
  };
  return m;
}

}  // namespace opcat
