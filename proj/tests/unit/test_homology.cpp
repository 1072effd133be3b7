#include "doctest.h"

#include <limits>

#include "opcat/homology.hpp"

using namespace opcat;

namespace {
std::vector<std::string> strs(const std::vector<AbelianGroup>& h) {
  std::vector<std::string> s;
  for (const auto& g : h) s.push_back(g.str());
  return s;
}
}  // namespace

TEST_CASE("homology of a point") {
  FiniteSSet p = point_sset(5);
  CHECK(strs(homology(p, 4)) == std::vector<std::string>{"Z", "0", "0", "0", "0"});
  CHECK(strs(homology(unnormalized_chains(p), 4)) == std::vector<std::string>{"Z", "0", "0", "0", "0"});
  CHECK_THROWS(homology(p, 5));
}

TEST_CASE("sphere models: normalized chains agree with the unnormalized oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    SimplicialObject s = sphere_model(n, 5);
    CHECK(check_simplicial(s).ok());
    FiniteSSet k = underlying(s);
    ChainComplex nc = normalized_chains(k), uc = unnormalized_chains(k);
    CHECK(boundary_squared_defects(nc) == 0);
    CHECK(boundary_squared_defects(uc) == 0);
    auto h = homology(nc, 4);
    CHECK(h == homology(uc, 4));
    for (std::size_t q = 0; q <= 4; ++q) CHECK(h[q].rank == (q == 0 || q == n ? 1u : 0u));
    // Only the basepoint and the top cell are nondegenerate.
    for (std::size_t q = 0; q <= 5; ++q) CHECK(nc.rank[q] == (q == 0 || q == n ? 1u : 0u));
  }
  // Δ¹/∂ at level 2 has the basepoint and the sequences 001, 011.
  CHECK(sphere_model(1, 2).level[2].at(0).size() == 3);
}

TEST_CASE("homology does not depend on the order of simplices") {
  for (std::size_t n = 1; n <= 2; ++n) {
    FiniteSSet k = underlying(sphere_model(n, 5));
    auto h = homology(k, 4);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      FiniteSSet p = permuted(k, seed);
      CHECK(homology(p, 4) == h);
      CHECK(homology(unnormalized_chains(p), 4) == h);
    }
  }
}

TEST_CASE("Smith form and cokernels") {
  CHECK(cokernel(1, {}).str() == "Z");
  CHECK(cokernel(1, {{2}}).str() == "Z/2");
  CHECK(cokernel(2, {{2, 0}, {0, 3}}).str() == "Z/6");
  CHECK(cokernel(2, {{2, 0}, {0, 4}}).str() == "Z/2 + Z/4");
  CHECK(cokernel(3, {{1, 1, 0}}).str() == "Z^2");
  CHECK(cokernel(2, {{4, 6}, {6, 4}}).str() == "Z/2 + Z/10");
  SparseColumnMatrix m;
  m.rows = 1;
  m.cols.push_back({{0, std::numeric_limits<std::int64_t>::min()}});
  SmithSummary s = smith(m);
  CHECK(s.wide);
  CHECK(s.factors == std::vector<std::string>{"9223372036854775808"});
  SparseColumnMatrix d;
  d.rows = 3;
  d.cols = {{{0, 4}, {1, 6}}, {{0, 6}, {2, 9}}, {{1, 2}, {2, 3}}};
  SmithSummary a = smith(d), b = smith(d, true);
  CHECK(a.rank == b.rank);
  CHECK(a.factors == b.factors);
  CHECK(b.wide);
}
