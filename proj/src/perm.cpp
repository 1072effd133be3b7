#include "opcat/perm.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/error.hpp"

namespace opcat {

namespace {
constexpr std::size_t kMaxCachedDegree = 8;
}

Perm perm_identity(std::size_t n) {
  Perm p(n + 1);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  require(a.size() == b.size(), ErrorCode::Domain, "permutation degree mismatch");
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

bool is_perm(const Perm& p) {
  if (p.empty() || p[0] != 0) return false;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::size_t perm_degree(const Perm& p) { return p.empty() ? 0 : p.size() - 1; }

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

const std::vector<Perm>& all_perms(std::size_t n) {
  static const std::vector<std::vector<Perm>> cache = [] {
    std::vector<std::vector<Perm>> c(kMaxCachedDegree + 1);
    for (std::size_t d = 0; d <= kMaxCachedDegree; ++d) {
      Perm p = perm_identity(d);
      do {
        c[d].push_back(p);
      } while (std::next_permutation(p.begin() + 1, p.end()));
    }
    return c;
  }();
  require(n <= kMaxCachedDegree, ErrorCode::Bound, "permutation degree too large");
  return cache[n];
}

std::size_t perm_rank(const Perm& p) {
  std::size_t n = perm_degree(p);
  std::size_t rank = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j <= n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial(n - i);
  }
  return rank;
}

Perm perm_block_sum(const std::vector<Perm>& blocks) {
  Perm out{0};
  std::size_t offset = 0;
  for (const Perm& b : blocks) {
    for (std::size_t i = 1; i < b.size(); ++i) out.push_back(b[i] + offset);
    offset += perm_degree(b);
  }
  return out;
}

Perm perm_block(const Perm& sigma, const std::vector<std::size_t>& lengths) {
  std::size_t k = perm_degree(sigma);
  require(lengths.size() == k, ErrorCode::Domain, "block permutation: length mismatch");
  std::vector<std::size_t> old_off(k + 1, 0), new_off(k + 1, 0);
  for (std::size_t r = 1; r <= k; ++r) old_off[r] = (r == 1 ? 0 : old_off[r - 1] + lengths[r - 2]);
  Perm inv = perm_inverse(sigma);
  std::size_t acc = 0;
  for (std::size_t slot = 1; slot <= k; ++slot) {
    std::size_t r = inv[slot];
    new_off[r] = acc;
    acc += lengths[r - 1];
  }
  Perm out(acc + 1, 0);
  for (std::size_t r = 1; r <= k; ++r)
    for (std::size_t t = 1; t <= lengths[r - 1]; ++t) out[old_off[r] + t] = new_off[r] + t;
  return out;
}

}  // namespace opcat
