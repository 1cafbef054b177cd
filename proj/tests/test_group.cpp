#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "zappa/group.hpp"

using namespace zappa;

namespace {

Permutation random_perm_on(const std::vector<point>& pts, point degree, std::mt19937_64& rng) {
  std::vector<point> shuffled(pts);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<point> img(degree);
  std::iota(img.begin(), img.end(), point{1});
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i] - 1] = shuffled[i];
  return Permutation(std::move(img));
}

/// Pseudo-random groups of bounded order: generators supported inside a
/// random 7-point window, so the order divides 7! and stays under 10^4
/// whenever the closure says so.
PermutationGroup random_small_group(std::mt19937_64& rng, point degree = 10) {
  std::vector<point> window(degree);
  std::iota(window.begin(), window.end(), point{1});
  std::shuffle(window.begin(), window.end(), rng);
  window.resize(7);
  std::sort(window.begin(), window.end());
  std::uniform_int_distribution<int> gen_count(2, 3);
  std::vector<Permutation> gens;
  for (int i = 0, m = gen_count(rng); i < m; ++i)
    gens.push_back(random_perm_on(window, degree, rng));
  return PermutationGroup(degree, std::move(gens));
}

}  // namespace

TEST_CASE("breadth-first closure") {
  PermutationGroup s3(3, {parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  CHECK(close_group(s3.generators()).size() == 6);
  CHECK(close_group({identity(4)}).size() == 1);
  CHECK_THROWS_AS(close_group(symmetric_group(8).generators(), 1000), limit_error);
}

TEST_CASE("chain orders match closure and known values") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(PermutationGroup(5, {parse_cycles("(1,2,3,4,5)", 5)}).order() == 5);

  PermutationGroup a4(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)});
  CHECK(a4.order() == close_group(a4.generators()).size());
  CHECK(a4.order() == 12);

  // Sylow 2-subgroup of S_8 via its tower generators: order 2^7.
  PermutationGroup p3(8, {parse_cycles("(1,2)", 8), parse_cycles("(1,3)(2,4)", 8),
                          parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8)});
  CHECK(p3.order() == 128);

  CHECK(symmetric_group(1).order() == 1);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(7).order() == 2520);
}

TEST_CASE("membership by sifting") {
  PermutationGroup s3(3, {parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  CHECK(s3.contains(parse_cycles("(1,3)", 3)));
  PermutationGroup c3(3, {parse_cycles("(1,2,3)", 3)});
  CHECK_FALSE(c3.contains(parse_cycles("(1,2)", 3)));
  CHECK_THROWS_AS(s3.contains(identity(4)), error);
}

TEST_CASE("chain vs closure cross-oracle on random groups") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    PermutationGroup g = random_small_group(rng);
    auto elements = close_group(g.generators(), 20'000);
    REQUIRE(g.order() == elements.size());
    for (const auto& e : elements) CHECK(g.contains(e));
    // A handful of non-members.
    std::vector<Permutation> sorted(elements);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 20; ++i) {
      std::vector<point> img(g.degree());
      std::iota(img.begin(), img.end(), point{1});
      std::shuffle(img.begin(), img.end(), rng);
      Permutation candidate(img);
      bool in_closure = std::binary_search(sorted.begin(), sorted.end(), candidate);
      CHECK(g.contains(candidate) == in_closure);
    }
  }
}

TEST_CASE("deterministic chains and element enumeration") {
  auto gens = std::vector<Permutation>{parse_cycles("(1,2,3,4)", 6), parse_cycles("(3,4,5)", 6)};
  StabilizerChain c1(gens, 6), c2(gens, 6);
  CHECK(c1.base() == c2.base());
  CHECK(c1.order() == c2.order());
  REQUIRE(c1.levels().size() == c2.levels().size());
  for (std::size_t i = 0; i < c1.levels().size(); ++i)
    CHECK(c1.levels()[i].orbit == c2.levels()[i].orbit);

  std::vector<Permutation> e1 = c1.elements(), e2 = c2.elements();
  CHECK(e1 == e2);
  CHECK(e1[0].is_identity());
  std::set<Permutation> unique(e1.begin(), e1.end());
  CHECK(unique.size() == e1.size());
}

TEST_CASE("right transversals") {
  PermutationGroup s3 = symmetric_group(3);
  PermutationGroup c3(3, {parse_cycles("(1,2,3)", 3)});
  RightCosetSystem sys = right_transversal(s3, c3);
  CHECK(sys.representatives.size() == 2);
  CHECK(sys.representatives[0].is_identity());

  PermutationGroup s4 = symmetric_group(4);
  PermutationGroup p2(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,3)(2,4)", 4)});
  RightCosetSystem sys2 = right_transversal(s4, p2);
  CHECK(sys2.representatives.size() == 3);

  // Exhaustive disjoint-cover oracle.
  std::set<Permutation> covered;
  const auto& p_elems = p2.elements();
  for (const auto& rep : sys2.representatives)
    for (const auto& e : p_elems) {
      auto [it, fresh] = covered.insert(compose(e, rep));
      CHECK(fresh);
    }
  CHECK(covered.size() == 24);

  CHECK_THROWS_AS(right_transversal(c3, s3), error);
  CHECK_THROWS_AS(right_transversal(symmetric_group(7), PermutationGroup(7, {}), 100),
                  limit_error);

  // Lagrange consistency on a few subgroup pairs.
  for (point n : {4, 5, 6}) {
    PermutationGroup g = symmetric_group(n);
    PermutationGroup h = alternating_group(n);
    CHECK(g.order() % h.order() == 0);
    CHECK(right_transversal(g, h).representatives.size() == g.order() / h.order());
  }
}

TEST_CASE("uniform random elements") {
  PermutationGroup trivial(5, {});
  UniformElementStream s(trivial, 99);
  CHECK(s.next().is_identity());

  PermutationGroup s4 = symmetric_group(4);
  const auto& elems = s4.elements();
  std::map<Permutation, int> counts;
  UniformElementStream stream(s4, 12345);
  const int draws = 100'000;
  for (int i = 0; i < draws; ++i) {
    Permutation g = stream.next();
    CHECK(s4.contains(g));
    ++counts[g];
  }
  CHECK(counts.size() == 24);
  double expected = draws / 24.0;
  double chi2 = 0;
  for (const auto& e : elems) {
    double d = counts[e] - expected;
    chi2 += d * d / expected;
  }
  // 23 degrees of freedom; chi^2 below the 0.999 quantile.
  CHECK(chi2 < 49.728);

  UniformElementStream a(s4, 7), b(s4, 7);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("group orbits") {
  PermutationGroup g(4, {parse_cycles("(1,2)", 4)});
  OrbitPartition part = g.orbits();
  REQUIRE(part.blocks.size() == 3);
  CHECK(part.blocks[0] == std::vector<point>{1, 2});

  // Blocks are closed under every generator.
  PermutationGroup h(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5)", 6)});
  OrbitPartition hp = h.orbits();
  for (const auto& block : hp.blocks)
    for (point x : block)
      for (const auto& gen : h.generators())
        CHECK(std::binary_search(block.begin(), block.end(), gen[x]));
}
