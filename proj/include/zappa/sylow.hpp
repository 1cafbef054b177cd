#ifndef ZAPPA_SYLOW_HPP
#define ZAPPA_SYLOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/group.hpp"
#include "zappa/numeric.hpp"
#include "zappa/perm.hpp"

namespace zappa {

/// Builders refuse degrees beyond this rather than thrash.
inline constexpr std::uint64_t default_degree_cap = 4096;

/// v_p(n!) by the base-p digit formula: sum over i >= 1 of
/// a_i * (p^i - 1) / (p - 1), where n = a_0 + a_1 p + ... + a_m p^m.
inline std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "legendre_valuation");
  std::uint64_t total = 0;
  std::uint64_t geometric = 0;  // (p^i - 1) / (p - 1) = 1 + p + ... + p^(i-1)
  std::uint64_t power = 1;
  while (n > 0) {
    std::uint64_t digit = n % p;
    n /= p;
    geometric += power;
    power *= p;
    total += digit * geometric;
  }
  return total;
}

/// The block shift of order p on {1..p^k}: x -> x + p^(k-1), wrapping
/// modulo p^k with representatives in {1..p^k}. Its cycles are the columns
/// of the p x p^(k-1) layout of {1..p^k}.
inline Permutation make_sigma(std::uint64_t p, unsigned k,
                              std::uint64_t degree_cap = default_degree_cap) {
  require_prime(p, "make_sigma");
  if (k == 0) throw error("make_sigma: k must be >= 1");
  std::uint64_t pk = checked_pow(p, k);
  if (pk > degree_cap)
    throw limit_error("make_sigma: degree " + std::to_string(pk) + " exceeds cap " +
                      std::to_string(degree_cap));
  std::uint64_t step = pk / p;
  std::vector<point> img(pk);
  for (std::uint64_t x = 1; x <= pk; ++x) {
    std::uint64_t y = x + step;
    if (y > pk) y -= pk;
    img[x - 1] = static_cast<point>(y);
  }
  return Permutation(std::move(img));
}

/// Embed perm into a larger domain translated by offset; everything else
/// is fixed.
inline Permutation shift_block(const Permutation& perm, point offset, point ambient_degree) {
  if (static_cast<std::uint64_t>(offset) + perm.degree() > ambient_degree)
    throw error("shift_block: block [" + std::to_string(offset + 1) + ".." +
                std::to_string(offset + perm.degree()) + "] does not fit in degree " +
                std::to_string(ambient_degree));
  std::vector<point> img(ambient_degree);
  std::iota(img.begin(), img.end(), point{1});
  for (point x = 1; x <= perm.degree(); ++x) img[offset + x - 1] = perm[x] + offset;
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// The iterated wreath tower: P_k = <sigma_1, ..., sigma_k> is a Sylow
// p-subgroup of S_{p^k}, of order p^((p^k - 1)/(p - 1)), transitive on
// {1..p^k}. The identity sigma_0 is never emitted as a generator.
// ---------------------------------------------------------------------------

struct SylowTower {
  std::uint64_t p;
  unsigned k;
  std::vector<Permutation> sigma_list;  // sigma_1..sigma_k on p^k points
  PermutationGroup group;
};

inline SylowTower build_P_k(std::uint64_t p, unsigned k,
                            std::uint64_t degree_cap = default_degree_cap) {
  require_prime(p, "build_P_k");
  std::uint64_t pk = checked_pow(p, k);
  if (pk > degree_cap)
    throw limit_error("build_P_k: degree " + std::to_string(pk) + " exceeds cap " +
                      std::to_string(degree_cap));
  point degree = static_cast<point>(pk);
  std::vector<Permutation> sigmas;
  sigmas.reserve(k);
  for (unsigned j = 1; j <= k; ++j)
    sigmas.push_back(shift_block(make_sigma(p, j, degree_cap), 0, degree));
  PermutationGroup group(degree, sigmas);
  return SylowTower{p, k, std::move(sigmas), std::move(group)};
}

/// The point-stabilizer tower: Q_1 = {id}; Q_k is generated by Q_{k-1}
/// together with the conjugates P_{k-1}^(sigma_k^i), i = 1..p-1. Every
/// element fixes point 1, and Q_k is a Sylow p-subgroup of the symmetric
/// group on {2..p^k}.
inline PermutationGroup build_Q_k(std::uint64_t p, unsigned k,
                                  std::uint64_t degree_cap = default_degree_cap) {
  require_prime(p, "build_Q_k");
  if (k == 0) throw error("build_Q_k: k must be >= 1");
  std::uint64_t pk = checked_pow(p, k);
  if (pk > degree_cap)
    throw limit_error("build_Q_k: degree " + std::to_string(pk) + " exceeds cap " +
                      std::to_string(degree_cap));
  point degree = static_cast<point>(pk);
  std::vector<Permutation> gens;
  if (k > 1) {
    for (const auto& g : build_Q_k(p, k - 1, degree_cap).generators())
      gens.push_back(shift_block(g, 0, degree));
    SylowTower lower = build_P_k(p, k - 1, degree_cap);
    Permutation sigma_k = make_sigma(p, k, degree_cap);
    Permutation twist = sigma_k;
    for (std::uint64_t i = 1; i < p; ++i) {
      for (const auto& g : lower.sigma_list)
        gens.push_back(conjugate(shift_block(g, 0, degree), twist));
      twist = compose(twist, sigma_k);
    }
  }
  return PermutationGroup(degree, std::move(gens));
}

/// Exponent of |Q_k| per the telescoped p-part of (p^k - 1)!:
/// (p-1) * sum_{j=1}^{k-1} (p^j - 1)/(p - 1) = sum_{j=1}^{k-1} (p^j - 1).
inline std::uint64_t q_k_order_exponent(std::uint64_t p, unsigned k) {
  std::uint64_t total = 0;
  std::uint64_t power = p;
  for (unsigned j = 1; j + 1 <= k; ++j) {
    total += power - 1;
    power *= p;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sylow subgroups of S_n and A_n for arbitrary n: write n in base p and
// lay out one block of size p^i per unit of each digit a_i, larger blocks
// first, the a_0 leftover points fixed at the end. The direct product of
// shifted towers over the blocks is a Sylow p-subgroup of S_n.
// ---------------------------------------------------------------------------

struct BlockLayout {
  std::uint64_t p;
  std::uint64_t n;
  std::vector<std::uint32_t> digits;  // digits[i] = a_i in n = sum a_i p^i

  struct Block {
    point offset;   // block occupies {offset+1 .. offset+size}
    point size;     // p^level
    unsigned level;  // i with size == p^i
  };
  std::vector<Block> blocks;
};

inline BlockLayout block_layout(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "block_layout");
  BlockLayout layout{p, n, {}, {}};
  for (std::uint64_t m = n; m > 0; m /= p) layout.digits.push_back(static_cast<std::uint32_t>(m % p));
  if (layout.digits.empty()) layout.digits.push_back(0);
  point at = 0;
  for (unsigned i = static_cast<unsigned>(layout.digits.size()); i-- > 1;) {
    point size = static_cast<point>(checked_pow(p, i));
    for (std::uint32_t c = 0; c < layout.digits[i]; ++c) {
      layout.blocks.push_back({at, size, i});
      at += size;
    }
  }
  return layout;
}

enum class SylowProvenance { constructed, searched };

struct SylowSubgroup {
  PermutationGroup group;
  std::uint64_t p;
  std::string ambient;  // "sym:<n>", "alt:<n>", or a catalog id
  SylowProvenance provenance;
};

inline SylowSubgroup build_sylow_symmetric(std::uint64_t n, std::uint64_t p,
                                           std::uint64_t degree_cap = default_degree_cap) {
  require_prime(p, "build_sylow_symmetric");
  if (n == 0) throw error("build_sylow_symmetric: n must be >= 1");
  if (n > degree_cap)
    throw limit_error("build_sylow_symmetric: degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(degree_cap));
  point degree = static_cast<point>(n);
  std::vector<Permutation> gens;
  for (const auto& block : block_layout(n, p).blocks) {
    for (unsigned j = 1; j <= block.level; ++j)
      gens.push_back(shift_block(make_sigma(p, j, degree_cap), block.offset, degree));
  }
  return SylowSubgroup{PermutationGroup(degree, std::move(gens)), p, "sym:" + std::to_string(n),
                       SylowProvenance::constructed};
}

namespace detail {

/// Even-element subgroup of a generated group, via Schreier generators for
/// the index-2 kernel of the sign map: with t the first odd generator, take
/// {g, t g t^-1} for even g and {g t^-1, t g} for odd g.
inline std::vector<Permutation> even_subgroup_generators(const std::vector<Permutation>& gens,
                                                         point degree) {
  const Permutation* odd = nullptr;
  for (const auto& g : gens)
    if (!is_even(g)) {
      odd = &g;
      break;
    }
  if (!odd) return gens;
  Permutation t = *odd;
  Permutation t_inv = inverse(t);
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    if (is_even(g)) {
      out.push_back(g);
      out.push_back(compose(compose(t, g), t_inv));
    } else {
      out.push_back(compose(g, t_inv));
      out.push_back(compose(t, g));
    }
  }
  std::erase_if(out, [](const Permutation& g) { return g.is_identity(); });
  if (out.empty()) out.push_back(identity(degree));
  return out;
}

}  // namespace detail

inline SylowSubgroup build_sylow_alternating(std::uint64_t n, std::uint64_t p,
                                             std::uint64_t degree_cap = default_degree_cap) {
  SylowSubgroup sym = build_sylow_symmetric(n, p, degree_cap);
  std::string ambient = "alt:" + std::to_string(n);
  if (p != 2) {
    // Odd p: p-cycles are even, so the symmetric Sylow already lies in A_n.
    return SylowSubgroup{std::move(sym.group), p, std::move(ambient),
                         SylowProvenance::constructed};
  }
  point degree = static_cast<point>(n);
  PermutationGroup even(degree,
                        detail::even_subgroup_generators(sym.group.generators(), degree));
  // Not assumed: the intersection must hit the full 2-part of |A_n|.
  std::uint64_t expect = n >= 2 ? checked_pow(2, static_cast<unsigned>(legendre_valuation(n, 2) -
                                                                       (n >= 2 ? 1 : 0)))
                                : 1;
  if (even.order() != expect)
    throw error("build_sylow_alternating: even-part order " + std::to_string(even.order()) +
                " does not match the 2-part " + std::to_string(expect) + " of |A_" +
                std::to_string(n) + "|");
  return SylowSubgroup{std::move(even), p, std::move(ambient), SylowProvenance::constructed};
}

}  // namespace zappa

#endif
