#include "opcat/finset.hpp"

#include <sstream>

#include "opcat/error.hpp"

namespace opcat {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Sigma: return "Sigma";
    case Kind::Lambda: return "Lambda";
    case Kind::Pi: return "Pi";
    case Kind::F: return "F";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "Sigma") return Kind::Sigma;
  if (s == "Lambda") return Kind::Lambda;
  if (s == "Pi") return Kind::Pi;
  if (s == "F") return Kind::F;
  fail(ErrorCode::Parse, "kind: expected one of Sigma, Lambda, Pi, F, got '" + s + "'");
}

BasedMap::BasedMap(std::size_t source, std::size_t target, std::vector<std::size_t> table)
    : source_(source), target_(target), table_(std::move(table)) {
  if (!(table_.size() == source_ + 1)) fail(ErrorCode::Validation,
          "table: expected " + std::to_string(source_ + 1) + " entries");
  require(table_[0] == 0, ErrorCode::Validation, "table: basepoint must map to 0");
  for (std::size_t v : table_)
    require(v <= target_, ErrorCode::Validation, "table: entry out of range");
}

BasedMap BasedMap::identity(std::size_t n) {
  std::vector<std::size_t> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = i;
  return BasedMap(n, n, std::move(t));
}

std::size_t BasedMap::fiber_size(std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t i = 1; i <= source_; ++i)
    if (table_[i] == j) ++c;
  return c;
}

std::vector<std::size_t> BasedMap::fiber(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= source_; ++i)
    if (table_[i] == j) out.push_back(i);
  return out;
}

bool is_member(Kind kind, const BasedMap& f) {
  std::size_t m = f.source(), n = f.target();
  switch (kind) {
    case Kind::F:
      return true;
    case Kind::Pi:
      for (std::size_t j = 1; j <= n; ++j)
        if (f.fiber_size(j) > 1) return false;
      return true;
    case Kind::Lambda:
      for (std::size_t i = 1; i <= m; ++i)
        if (f(i) == 0) return false;
      return is_member(Kind::Pi, f);
    case Kind::Sigma:
      return m == n && is_member(Kind::Lambda, f);
  }
  return false;
}

std::vector<BasedMap> enumerate_homs(Kind kind, std::size_t m, std::size_t n) {
  std::vector<BasedMap> out;
  std::vector<std::size_t> t(m + 1, 0);
  while (true) {
    BasedMap f(m, n, t);
    if (is_member(kind, f)) out.push_back(std::move(f));
    // lexicographic successor on entries 1..m
    std::size_t i = m;
    while (i >= 1 && t[i] == n) {
      t[i] = 0;
      --i;
    }
    if (i == 0) break;
    ++t[i];
  }
  return out;
}

BasedMap compose(const BasedMap& f, const BasedMap& g) {
  if (!(g.target() == f.source())) fail(ErrorCode::Domain,
          "compose: source/target mismatch (" + std::to_string(g.target()) + " vs " +
              std::to_string(f.source()) + ")");
  std::vector<std::size_t> t(g.source() + 1);
  for (std::size_t i = 0; i <= g.source(); ++i) t[i] = f(g(i));
  return BasedMap(g.source(), f.target(), std::move(t));
}

BasedMap wedge(const BasedMap& f, const BasedMap& g) {
  std::size_t m = f.source() + g.source(), n = f.target() + g.target();
  std::vector<std::size_t> t(m + 1, 0);
  for (std::size_t i = 1; i <= f.source(); ++i) t[i] = f(i);
  for (std::size_t i = 1; i <= g.source(); ++i)
    t[f.source() + i] = g(i) == 0 ? 0 : g(i) + f.target();
  return BasedMap(m, n, std::move(t));
}

BasedMap wedge_all(const std::vector<BasedMap>& fs) {
  BasedMap acc = BasedMap::identity(0);
  for (const BasedMap& f : fs) acc = wedge(acc, f);
  return acc;
}

BasedMap smash(const BasedMap& f, const BasedMap& g) {
  std::size_t m1 = f.source(), m2 = g.source(), n2 = g.target();
  std::vector<std::size_t> t(m1 * m2 + 1, 0);
  for (std::size_t i = 1; i <= m1; ++i)
    for (std::size_t j = 1; j <= m2; ++j) {
      std::size_t a = f(i), b = g(j);
      t[smash_index(i, j, m2)] = (a == 0 || b == 0) ? 0 : smash_index(a, b, n2);
    }
  return BasedMap(m1 * m2, f.target() * n2, std::move(t));
}

BasedMap phi(std::size_t n) {
  std::vector<std::size_t> t(n + 1, 1);
  t[0] = 0;
  return BasedMap(n, 1, std::move(t));
}

BasedMap delta(std::size_t n, std::size_t j) {
  require(j >= 1 && j <= n, ErrorCode::Domain, "delta: index out of range");
  std::vector<std::size_t> t(n + 1, 0);
  t[j] = 1;
  return BasedMap(n, 1, std::move(t));
}

std::string to_string(const BasedMap& f) {
  std::ostringstream os;
  os << f.source() << "->" << f.target() << "[";
  for (std::size_t i = 0; i < f.table().size(); ++i) os << (i ? "," : "") << f(i);
  os << "]";
  return os.str();
}

}  // namespace opcat
