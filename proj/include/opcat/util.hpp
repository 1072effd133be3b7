#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace opcat {

// Calls f(digits) for every tuple with 0 <= digits[i] < radix[i], last digit fastest.
template <class F>
void for_each_digits(const std::vector<std::size_t>& radix, F&& f) {
  for (std::size_t r : radix)
    if (r == 0) return;
  std::vector<std::size_t> d(radix.size(), 0);
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(d));
    std::size_t i = radix.size();
    while (i > 0 && d[i - 1] + 1 == radix[i - 1]) d[--i] = 0;
    if (i == 0) return;
    ++d[i - 1];
  }
}

inline std::size_t mixed_index(const std::vector<std::size_t>& radix, const std::vector<std::size_t>& d) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + d[i];
  return idx;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    p[b] = a;  // least index is the root
    return true;
  }
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

template <class T>
std::string bracket(const std::vector<T>& v) {
  return "[" + join(v) + "]";
}

}  // namespace opcat
