#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "zappa/perm.hpp"

using namespace zappa;

namespace {

Permutation random_perm(point n, std::mt19937_64& rng) {
  std::vector<point> img(n);
  std::iota(img.begin(), img.end(), point{1});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

/// Order by repeated multiplication, the brute-force oracle.
std::uint64_t order_by_multiplication(const Permutation& a) {
  Permutation acc = a;
  std::uint64_t m = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, a);
    ++m;
  }
  return m;
}

std::multiset<std::size_t> cycle_type(const Permutation& a) {
  std::multiset<std::size_t> type;
  for (const auto& c : cycle_decomposition(a).cycles) type.insert(c.size());
  return type;
}

}  // namespace

TEST_CASE("identity basics") {
  CHECK(identity(3).images() == std::vector<point>{1, 2, 3});
  CHECK(identity(1).images() == std::vector<point>{1});
  CHECK_THROWS_AS(identity(0), error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Permutation g = random_perm(4, rng);
    CHECK(compose(identity(4), g) == g);
    CHECK(compose(g, identity(4)) == g);
  }
}

TEST_CASE("composition applies the left factor first") {
  // The single most error-prone convention in the library: x^(ab) = (x^a)^b.
  Permutation a = parse_cycles("(1,2,3)", 3);
  Permutation b = parse_cycles("(1,2)", 3);
  Permutation ab = compose(a, b);
  for (point x = 1; x <= 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK(ab == parse_cycles("(2,3)", 3));
  CHECK(compose(b, b).is_identity());
  CHECK_THROWS_AS(compose(a, identity(4)), error);
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10'000; ++i) {
    Permutation a = random_perm(8, rng), b = random_perm(8, rng), c = random_perm(8, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(parse_cycles("(1,2,3)", 3)) == parse_cycles("(1,3,2)", 3));
  CHECK(inverse(identity(5)) == identity(5));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10'000; ++i) {
    Permutation g = random_perm(7, rng);
    CHECK(compose(g, inverse(g)).is_identity());
    CHECK(inverse(inverse(g)) == g);
  }
}

TEST_CASE("order matches the repeated-multiplication oracle on all of S_n") {
  for (point n = 1; n <= 6; ++n) {
    std::vector<point> img(n);
    std::iota(img.begin(), img.end(), point{1});
    do {
      Permutation a(img);
      CHECK(order(a) == order_by_multiplication(a));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  CHECK(order(parse_cycles("(1,2)(3,4,5)", 5)) == 6);
  CHECK(order(identity(4)) == 1);
}

TEST_CASE("p-elements") {
  CHECK(is_p_element(identity(5), 7));
  CHECK(is_p_element(parse_cycles("(1,2,3,4)", 4), 2));
  CHECK_FALSE(is_p_element(parse_cycles("(1,2)(3,4,5)", 5), 2));
  CHECK_THROWS_AS(is_p_element(identity(3), 4), error);

  // Equivalent characterization: every cycle length is a power of p.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2'000; ++i) {
    Permutation g = random_perm(9, rng);
    for (std::uint64_t p : {2, 3, 5}) {
      bool by_cycles = true;
      for (const auto& c : cycle_decomposition(g).cycles)
        by_cycles = by_cycles && is_power_of(c.size(), p);
      CHECK(is_p_element(g, p) == by_cycles);
    }
  }
}

TEST_CASE("cycle decomposition") {
  // x -> x + 2 cyclically on {1..4}.
  Permutation a(std::vector<point>{3, 4, 1, 2});
  auto dec = cycle_decomposition(a);
  REQUIRE(dec.cycles.size() == 2);
  CHECK(dec.cycles[0] == std::vector<point>{1, 3});
  CHECK(dec.cycles[1] == std::vector<point>{2, 4});
  CHECK(dec.fixed_points.empty());

  auto id_dec = cycle_decomposition(identity(5));
  CHECK(id_dec.cycles.empty());
  CHECK(id_dec.fixed_points.size() == 5);

  // Reassembly oracle: rebuilding from cycles reproduces the permutation.
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10'000; ++i) {
    Permutation g = random_perm(9, rng);
    auto d = cycle_decomposition(g);
    std::vector<point> img(9);
    std::iota(img.begin(), img.end(), point{1});
    for (const auto& c : d.cycles)
      for (std::size_t j = 0; j < c.size(); ++j) img[c[j] - 1] = c[(j + 1) % c.size()];
    CHECK(Permutation(img) == g);
    std::size_t covered = d.fixed_points.size();
    for (const auto& c : d.cycles) covered += c.size();
    CHECK(covered == 9);
  }
}

TEST_CASE("cyclic orbit") {
  CHECK(cyclic_orbit(parse_cycles("(1,2,3)", 3), 2) == std::vector<point>{2, 3, 1});
  CHECK(cyclic_orbit(identity(4), 4) == std::vector<point>{4});
  CHECK_THROWS_AS(cyclic_orbit(identity(4), 5), error);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2'000; ++i) {
    Permutation g = random_perm(8, rng);
    std::uniform_int_distribution<point> pick(1, 8);
    CHECK(order(g) % cyclic_orbit(g, pick(rng)).size() == 0);
  }
}

TEST_CASE("parity") {
  CHECK(parity(parse_cycles("(1,2)", 2)) == Parity::odd);
  CHECK(parity(parse_cycles("(1,2,3)", 3)) == Parity::even);
  CHECK(parity(identity(6)) == Parity::even);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10'000; ++i) {
    Permutation a = random_perm(7, rng), b = random_perm(7, rng);
    bool even_product = (parity(a) == parity(b));
    CHECK((parity(compose(a, b)) == Parity::even) == even_product);
  }
}

TEST_CASE("restriction to an invariant set") {
  Permutation a = parse_cycles("(1,3)(2,4)", 4);
  Permutation r = restrict_to(a, {1, 3});
  CHECK(r == parse_cycles("(1,2)", 2));

  std::vector<point> all{1, 2, 3, 4};
  CHECK(restrict_to(a, all) == a);
  CHECK_THROWS_AS(restrict_to(a, std::vector<point>{1, 2}), error);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 2'000; ++i) {
    Permutation g = random_perm(8, rng);
    auto dec = cycle_decomposition(g);
    if (dec.cycles.empty()) continue;
    std::vector<point> s(dec.cycles[0].begin(), dec.cycles[0].end());
    CHECK(order(g) % order(restrict_to(g, s)) == 0);
  }
}

TEST_CASE("restrict respects composition on a common invariant set") {
  std::mt19937_64 rng(37);
  std::vector<point> s{2, 3, 5, 7};
  for (int i = 0; i < 2'000; ++i) {
    // Build two permutations of degree 8 both leaving {2,3,5,7} invariant.
    std::vector<point> inside(s);
    std::shuffle(inside.begin(), inside.end(), rng);
    std::vector<point> outside{1, 4, 6, 8};
    std::vector<point> outside_img(outside);
    std::shuffle(outside_img.begin(), outside_img.end(), rng);
    auto make = [&](const std::vector<point>& in_img, const std::vector<point>& out_img) {
      std::vector<point> img(8);
      for (std::size_t j = 0; j < s.size(); ++j) img[s[j] - 1] = in_img[j];
      for (std::size_t j = 0; j < outside.size(); ++j) img[outside[j] - 1] = out_img[j];
      return Permutation(img);
    };
    Permutation a = make(inside, outside_img);
    std::shuffle(inside.begin(), inside.end(), rng);
    std::shuffle(outside_img.begin(), outside_img.end(), rng);
    Permutation b = make(inside, outside_img);
    CHECK(restrict_to(compose(a, b), s) == compose(restrict_to(a, s), restrict_to(b, s)));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3)) ==
        parse_cycles("(1,3)", 3));
  Permutation a = parse_cycles("(1,2,3)(4,5)", 5);
  CHECK(conjugate(a, identity(5)) == a);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10'000; ++i) {
    Permutation x = random_perm(7, rng), g = random_perm(7, rng);
    Permutation c = conjugate(x, g);
    CHECK(cycle_type(c) == cycle_type(x));
    CHECK(order(c) == order(x));
  }
}

TEST_CASE("cycle notation round-trips and parses loosely") {
  CHECK(format_cycles(identity(5)) == "()");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles(" ( 1 , 2 , 3 ) (4,5) ", 5) == parse_cycles("(1,2,3)(4,5)", 5));

  std::mt19937_64 rng(43);
  for (int i = 0; i < 10'000; ++i) {
    Permutation g = random_perm(9, rng);
    std::string text = format_cycles(g);
    CHECK(parse_cycles(text, 9) == g);
    CHECK(format_cycles(parse_cycles(text, 9)) == text);
  }

  CHECK_THROWS_AS(parse_cycles("(1,2", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,2,1)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("1,2)", 4), parse_error);

  // Overlapping cycles multiply left to right.
  CHECK(parse_cycles("(1,2)(1,3)", 3) == compose(parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3)));
}

TEST_CASE("orbit partition") {
  OrbitPartition part = orbit_partition({parse_cycles("(1,2)", 4)}, 4);
  REQUIRE(part.blocks.size() == 3);
  CHECK(part.blocks[0] == std::vector<point>{1, 2});
  CHECK(part.blocks[1] == std::vector<point>{3});
  CHECK(part.blocks[2] == std::vector<point>{4});
  CHECK(part.block_of(2) == 0);
}
