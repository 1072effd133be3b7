#include "opcat/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opcat/error.hpp"

namespace opcat {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> mult, std::string name) {
  std::size_t n = mult.size();
  require(n > 0, ErrorCode::Validation, "mult: group must be nonempty");
  for (const auto& row : mult) {
    require(row.size() == n, ErrorCode::Validation, "mult: table must be square");
    for (std::size_t v : row) require(v < n, ErrorCode::Validation, "mult: entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!(mult[mult[a][b]][c] == mult[a][mult[b][c]])) fail(ErrorCode::Validation,
                "mult: not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.mult_ = std::move(mult);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.mult_[e][x] == x && g.mult_[x][e] == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  require(found, ErrorCode::Validation, "mult: no identity element");
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mult_[a][b] == g.identity_ && g.mult_[b][a] == g.identity_) g.inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (!(g.inverse_[a] < n)) fail(ErrorCode::Validation, "mult: element " + std::to_string(a) + " has no inverse");
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_perm_gens(const std::vector<Perm>& gens, std::string name) {
  require(!gens.empty(), ErrorCode::Validation, "perm_gens: need at least one generator");
  std::size_t deg = perm_degree(gens[0]);
  for (const Perm& p : gens) {
    require(is_perm(p), ErrorCode::Validation, "perm_gens: not a permutation");
    require(perm_degree(p) == deg, ErrorCode::Validation, "perm_gens: degree mismatch");
  }
  std::vector<Perm> elems{perm_identity(deg)};
  std::map<Perm, std::size_t> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& s : gens) {
      Perm p = perm_compose(elems[i], s);
      if (!index.count(p)) {
        index[p] = elems.size();
        elems.push_back(p);
      }
    }
  std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = index.at(perm_compose(elems[a], elems[b]));
  return from_table(std::move(mult), std::move(name));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  require(n > 0, ErrorCode::Validation, "cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return from_table(std::move(mult), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  const auto& ps = all_perms(n);
  std::vector<std::vector<std::size_t>> mult(ps.size(), std::vector<std::size_t>(ps.size()));
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b) mult[a][b] = perm_rank(perm_compose(ps[a], ps[b]));
  return from_table(std::move(mult), "S" + std::to_string(n));
}

std::vector<std::size_t> FiniteGroup::closure(const std::vector<std::size_t>& elems) const {
  std::set<std::size_t> s{identity_};
  std::vector<std::size_t> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a : frontier)
      for (std::size_t g : elems) {
        std::size_t p = mul(a, g);
        if (s.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

std::vector<std::size_t> FiniteGroup::generators(const std::vector<std::size_t>& subgroup) const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{identity_};
  for (std::size_t g : subgroup) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(gens);
  }
  return gens;
}

void FiniteGroup::finish() {
  // Every subgroup is reached from {e} by repeatedly adjoining one element and closing.
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{{identity_}};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<std::size_t> base = queue[i];
    for (std::size_t g = 0; g < order(); ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<std::size_t> gens = base;
      gens.push_back(g);
      std::vector<std::size_t> c = closure(gens);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  subgroups_.assign(seen.begin(), seen.end());
  std::stable_sort(subgroups_.begin(), subgroups_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
}

bool HomToSym::is_trivial() const {
  for (const Perm& p : images)
    if (p != perm_identity(degree)) return false;
  return true;
}

HomToSym validate_hom(GroupPtr g, std::size_t n, std::vector<Perm> images) {
  require(g != nullptr, ErrorCode::Validation, "hom: missing group");
  require(images.size() == g->order(), ErrorCode::Validation,
          "images: expected one permutation per group element");
  for (std::size_t a = 0; a < images.size(); ++a)
    if (!(is_perm(images[a]) && perm_degree(images[a]) == n)) fail(ErrorCode::Validation,
            "images: entry " + std::to_string(a) + " is not a permutation of degree " + std::to_string(n));
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = 0; b < images.size(); ++b)
      if (images[g->mul(a, b)] != perm_compose(images[a], images[b]))
        fail(ErrorCode::Validation, "not a homomorphism: failing pair g=" + std::to_string(a) +
                                        ", h=" + std::to_string(b));
  return HomToSym{std::move(g), n, std::move(images)};
}

HomToSym trivial_hom(GroupPtr g, std::size_t n) {
  std::vector<Perm> images(g->order(), perm_identity(n));
  return HomToSym{std::move(g), n, std::move(images)};
}

std::vector<std::vector<Perm>> homs_on_subgroup(const FiniteGroup& g,
                                                const std::vector<std::size_t>& elems,
                                                std::size_t n) {
  std::vector<std::size_t> gens = g.generators(elems);
  const auto& ps = all_perms(n);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::vector<Perm>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<Perm> img(elems.size());
    std::vector<bool> set(elems.size(), false);
    img[pos.at(g.identity())] = perm_identity(n);
    set[pos.at(g.identity())] = true;
    std::vector<std::size_t> frontier{g.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<std::size_t> next;
      for (std::size_t h : frontier) {
        for (std::size_t s = 0; s < gens.size() && ok; ++s) {
          std::size_t hs = g.mul(h, gens[s]);
          Perm v = perm_compose(img[pos.at(h)], ps[choice[s]]);
          std::size_t k = pos.at(hs);
          if (!set[k]) {
            img[k] = v;
            set[k] = true;
            next.push_back(hs);
          } else if (img[k] != v) {
            ok = false;
          }
        }
      }
      frontier = std::move(next);
    }
    if (ok) out.push_back(std::move(img));
    std::size_t i = 0;
    while (i < choice.size() && choice[i] + 1 == ps.size()) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomToSym> enumerate_homs_to_sym(GroupPtr g, std::size_t n) {
  std::vector<std::size_t> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<HomToSym> out;
  for (auto& imgs : homs_on_subgroup(*g, all, n)) out.push_back(HomToSym{g, n, std::move(imgs)});
  return out;
}

}  // namespace opcat
