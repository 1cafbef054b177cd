#ifndef ZAPPA_SCAN_HPP
#define ZAPPA_SCAN_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/group.hpp"
#include "zappa/numeric.hpp"
#include "zappa/perm.hpp"
#include "zappa/sylow.hpp"

namespace zappa {

// ---------------------------------------------------------------------------
// Coset torsion checks. The hot loop never materializes g*alpha: it walks
// the cycles of the composite directly and bails on the first cycle whose
// length is not a power of p.
// ---------------------------------------------------------------------------

namespace detail {

class CycleScratch {
 public:
  explicit CycleScratch(point degree) : mark_(degree + 1, 0), stamp_(0) {}

  /// True iff every cycle of x -> alpha[g[x]] has p-power length.
  bool composite_is_p_element(const Permutation& g, const Permutation& alpha, std::uint64_t p) {
    ++stamp_;
    const auto& gi = g.images();
    const auto& ai = alpha.images();
    point n = static_cast<point>(gi.size());
    for (point s = 1; s <= n; ++s) {
      if (mark_[s] == stamp_) continue;
      std::uint64_t len = 0;
      point x = s;
      do {
        mark_[x] = stamp_;
        x = ai[gi[x - 1] - 1];
        ++len;
      } while (x != s);
      while (len % p == 0) len /= p;
      if (len != 1) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_;
};

}  // namespace detail

/// True iff every element of the right coset P*alpha is a p-element.
/// Iterates P's elements in their (sorted, deterministic) order and
/// short-circuits on the first failure.
inline bool coset_is_p_torsion(const std::vector<Permutation>& p_elements,
                               const Permutation& alpha, std::uint64_t p) {
  require_prime(p, "coset_is_p_torsion");
  if (p_elements.empty()) throw error("coset_is_p_torsion: empty element set");
  detail::CycleScratch scratch(alpha.degree());
  for (const auto& g : p_elements) {
    if (g.degree() != alpha.degree()) throw error("coset_is_p_torsion: degree mismatch");
    if (!scratch.composite_is_p_element(g, alpha, p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Randomized Sylow search for catalog groups: draw uniform elements, keep
// the p-power part g^(m) with m the non-p-part of o(g), and adjoin whenever
// the enlarged closure is still a p-group, until the full p-part is reached.
// ---------------------------------------------------------------------------

struct SylowSearchBudget {
  std::uint64_t max_random_draws = 4000;
  std::uint64_t seed = 1;
};

inline SylowSubgroup find_sylow(const PermutationGroup& g, std::uint64_t p,
                                SylowSearchBudget budget = {},
                                const std::string& ambient = "searched") {
  require_prime(p, "find_sylow");
  if (budget.max_random_draws < 1) throw error("find_sylow: budget must allow >= 1 draw");
  std::uint64_t target = p_part(g.order(), p);
  if (target == 1) throw error("find_sylow: p does not divide the group order");

  std::vector<Permutation> gens;
  std::uint64_t current_order = 1;
  UniformElementStream stream(g, budget.seed);
  for (std::uint64_t draw = 0; draw < budget.max_random_draws; ++draw) {
    Permutation x = stream.next();
    std::uint64_t o = order(x);
    Permutation h = power(x, o / p_part(o, p));
    if (h.is_identity()) continue;
    std::vector<Permutation> candidate = gens;
    candidate.push_back(h);
    StabilizerChain chain(candidate, g.degree());
    if (!is_power_of(chain.order(), p) || chain.order() % current_order != 0) continue;
    if (chain.order() == current_order) continue;
    gens = std::move(candidate);
    current_order = chain.order();
    if (current_order == target)
      return SylowSubgroup{PermutationGroup(g.degree(), std::move(gens)), p, ambient,
                           SylowProvenance::searched};
  }
  throw limit_error("find_sylow: budget of " + std::to_string(budget.max_random_draws) +
                    " draws exhausted at order " + std::to_string(current_order) + " of " +
                    std::to_string(target) + "; retry with a different seed");
}

// ---------------------------------------------------------------------------
// The exhaustive coset scan.
// ---------------------------------------------------------------------------

struct ZappaWitness {
  Permutation representative;
  std::map<std::uint64_t, std::uint64_t> order_histogram;  // order -> count over the coset
};

struct ZappaReport {
  std::string ambient;
  std::uint64_t p = 0;
  std::uint64_t order_g = 0;
  std::uint64_t order_p = 0;
  std::uint64_t cosets_scanned = 0;
  std::vector<ZappaWitness> witnesses;  // sorted by representative image sequence
  bool trivial_coset_confirmed = false;
  std::vector<std::string> flags;
  double duration_seconds = 0.0;  // run metadata, not part of the serialized report
  unsigned parallelism = 1;

  bool theorem_consistent() const { return witnesses.empty(); }
};

struct ScanLimits {
  std::size_t max_cosets = 1'000'000;
  std::size_t cache_cap = 1 << 20;
};

/// Scan every right coset of P in G for the Zappa property (all elements
/// p-elements). Exhaustive over a right transversal; the trivial coset is
/// checked separately and never reported as a witness. Witness order is
/// lexicographic in the representative image sequence, independent of
/// the parallelism level.
inline ZappaReport scan_zappa(const PermutationGroup& g, const SylowSubgroup& sylow,
                              unsigned parallelism = 1, ScanLimits limits = {}) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t p = sylow.p;
  require_prime(p, "scan_zappa");
  if (parallelism < 1) parallelism = 1;

  ZappaReport report;
  report.ambient = sylow.ambient;
  report.p = p;
  report.parallelism = parallelism;
  report.order_g = g.order();
  report.order_p = sylow.group.order();
  if (report.order_g % p != 0) report.flags.push_back("vacuous_prime");
  if (report.order_p == 1) report.flags.push_back("trivial_sylow");
  if (p_part(report.order_g, p) != report.order_p)
    throw error("scan_zappa: P has order " + std::to_string(report.order_p) +
                ", not the full p-part of |G| = " + std::to_string(report.order_g));

  RightCosetSystem cosets = right_transversal(g, sylow.group, limits.max_cosets, limits.cache_cap);
  const auto& p_elements = sylow.group.elements(limits.cache_cap);
  report.cosets_scanned = cosets.representatives.size();

  report.trivial_coset_confirmed = true;
  for (const auto& e : p_elements)
    if (!is_p_element(e, p)) report.trivial_coset_confirmed = false;
  if (!report.trivial_coset_confirmed)
    throw error("scan_zappa: subgroup is not p-torsion; it cannot be a Sylow p-subgroup");

  const auto& reps = cosets.representatives;
  std::vector<std::vector<Permutation>> found(parallelism);
  auto worker = [&](unsigned w) {
    detail::CycleScratch scratch(g.degree());
    for (std::size_t i = 1 + w; i < reps.size(); i += parallelism) {
      bool all = true;
      for (const auto& e : p_elements) {
        if (!scratch.composite_is_p_element(e, reps[i], p)) {
          all = false;
          break;
        }
      }
      if (all) found[w].push_back(reps[i]);
    }
  };
  if (parallelism == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < parallelism; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  std::vector<Permutation> hits;
  for (auto& part : found) hits.insert(hits.end(), part.begin(), part.end());
  std::sort(hits.begin(), hits.end());
  for (const auto& alpha : hits) {
    if (sylow.group.contains(alpha))
      throw error("scan_zappa: internal error, witness representative lies in P");
    ZappaWitness w{alpha, {}};
    for (const auto& e : p_elements) ++w.order_histogram[order(compose(e, alpha))];
    report.witnesses.push_back(std::move(w));
  }

  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

/// Transfer a coset along conjugation: if P*alpha is a Zappa coset then so
/// is P^g * alpha^g; the return value is alpha^g.
inline Permutation zappa_conjugation_transfer(const Permutation& witness_alpha,
                                              const Permutation& g) {
  return conjugate(witness_alpha, g);
}

struct TheoremVerification {
  bool holds;
  ZappaReport report;
};

/// Scan all cosets of the constructed Sylow p-subgroup in S_n. The theorem
/// under test: a coset of p-elements forces its representative into P,
/// i.e. zero witnesses.
inline TheoremVerification verify_theorem_symmetric(std::uint64_t n, std::uint64_t p,
                                                    unsigned parallelism = 1,
                                                    ScanLimits limits = {}) {
  PermutationGroup g = symmetric_group(static_cast<point>(n));
  SylowSubgroup sylow = build_sylow_symmetric(n, p);
  ZappaReport report = scan_zappa(g, sylow, parallelism, limits);
  return TheoremVerification{report.theorem_consistent(), std::move(report)};
}

inline TheoremVerification verify_theorem_alternating(std::uint64_t n, std::uint64_t p,
                                                      unsigned parallelism = 1,
                                                      ScanLimits limits = {}) {
  if (n < 3) throw error("verify_theorem_alternating: n must be >= 3");
  PermutationGroup g = alternating_group(static_cast<point>(n));
  SylowSubgroup sylow = build_sylow_alternating(n, p);
  ZappaReport report = scan_zappa(g, sylow, parallelism, limits);
  return TheoremVerification{report.theorem_consistent(), std::move(report)};
}

}  // namespace zappa

#endif
