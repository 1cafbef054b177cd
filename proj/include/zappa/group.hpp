#ifndef ZAPPA_GROUP_HPP
#define ZAPPA_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/numeric.hpp"
#include "zappa/perm.hpp"

namespace zappa {

/// Breadth-first closure of a generator set under composition. Test oracle
/// for chain order/membership; throws limit_error past max_size.
inline std::vector<Permutation> close_group(const std::vector<Permutation>& generators,
                                            std::size_t max_size = 10'000'000) {
  if (generators.empty()) throw error("close_group: need at least one generator");
  point degree = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw error("close_group: generators have mixed degrees");

  std::vector<Permutation> elements{identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements[0]};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = compose(elements[i], g);
      if (seen.insert(next).second) {
        if (elements.size() >= max_size)
          throw limit_error("close_group: closure exceeds cap of " + std::to_string(max_size));
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

// ---------------------------------------------------------------------------
// Stabilizer chain (base and strong generating set, deterministic
// Schreier-Sims). Base points are chosen smallest-moved-first; orbits and
// transversals are built breadth-first scanning generators in insertion
// order, so identical generator lists reproduce identical chains.
// ---------------------------------------------------------------------------

class StabilizerChain {
 public:
  struct Level {
    point base_point;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<point> orbit;             // BFS discovery order; orbit[0] == base_point
    std::vector<Permutation> reps;        // reps[i]: base_point^reps[i] == orbit[i]
    std::vector<std::int32_t> slot;       // point -> index into orbit, or -1
  };

  StabilizerChain(std::vector<Permutation> generators, point degree)
      : degree_(degree) {
    for (auto& g : generators)
      if (!g.is_identity()) add_generator_to_levels(0, std::move(g));
    complete();
    order_ = 1;
    for (const auto& lvl : levels_) order_ = checked_mul(order_, lvl.orbit.size());
  }

  point degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Level>& levels() const { return levels_; }

  const std::vector<point>& base() const { return base_; }

  /// Sift g through the chain. Returns the residue and the level at which
  /// sifting stopped (levels_.size() when it ran through all of them).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const {
    Permutation h = g;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const Level& lvl = levels_[i];
      point x = h[lvl.base_point];
      std::int32_t s = lvl.slot[x];
      if (s < 0) return {std::move(h), i};
      h = compose(h, inverse(lvl.reps[static_cast<std::size_t>(s)]));
    }
    return {std::move(h), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw error("contains: degree mismatch");
    auto [residue, level] = sift(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Visit every element exactly once, in a fixed order: the odometer over
  /// per-level transversals, level 0 most significant, orbit points in BFS
  /// discovery order. The first element visited is the identity.
  template <typename Visitor>
  void for_each_element(Visitor&& visit) const {
    Permutation acc = identity(degree_);
    walk(levels_.empty() ? 0 : levels_.size(), acc, visit);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(order_);
    for_each_element([&](const Permutation& g) { out.push_back(g); });
    return out;
  }

 private:
  template <typename Visitor>
  void walk(std::size_t depth, const Permutation& acc, Visitor&& visit) const {
    if (depth == 0) {
      visit(acc);
      return;
    }
    // Element factorization g = u_k * ... * u_1 (deepest level applied
    // first); depth counts down to level 0, which is composed last.
    const Level& lvl = levels_[depth - 1];
    for (const auto& rep : lvl.reps) walk(depth - 1, compose(acc, rep), visit);
  }

  static point min_moved(const Permutation& g) {
    for (point x = 1; x <= g.degree(); ++x)
      if (g[x] != x) return x;
    return 0;
  }

  void rebuild_orbit(Level& lvl) {
    lvl.orbit.assign(1, lvl.base_point);
    lvl.reps.assign(1, identity(degree_));
    lvl.slot.assign(degree_ + 1, -1);
    lvl.slot[lvl.base_point] = 0;
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      for (const auto& g : lvl.generators) {
        point y = g[lvl.orbit[i]];
        if (lvl.slot[y] < 0) {
          lvl.slot[y] = static_cast<std::int32_t>(lvl.orbit.size());
          lvl.orbit.push_back(y);
          lvl.reps.push_back(compose(lvl.reps[i], g));
        }
      }
    }
  }

  /// Install g as a strong generator at every level from `from` down to the
  /// deepest level whose base point it moves, extending the base if needed.
  void add_generator_to_levels(std::size_t from, Permutation g) {
    std::size_t last = from;
    while (true) {
      if (last == levels_.size()) {
        point b = min_moved(g);
        Level lvl;
        lvl.base_point = b;
        base_.push_back(b);
        levels_.push_back(std::move(lvl));
      }
      if (g[levels_[last].base_point] != levels_[last].base_point) break;
      ++last;
    }
    for (std::size_t i = from; i <= last; ++i) {
      levels_[i].generators.push_back(g);
      rebuild_orbit(levels_[i]);
    }
  }

  /// Schreier-Sims main loop: verify closure level by level from the bottom,
  /// adding sifted Schreier generator residues until everything strips.
  void complete() {
    if (levels_.empty()) return;
    std::size_t i = levels_.size();
    while (i > 0) {
      --i;
      restart_level:
      const Level& lvl = levels_[i];
      for (std::size_t oi = 0; oi < lvl.orbit.size(); ++oi) {
        for (std::size_t gi = 0; gi < lvl.generators.size(); ++gi) {
          const Permutation& s = lvl.generators[gi];
          point image = s[lvl.orbit[oi]];
          Permutation schreier =
              compose(compose(lvl.reps[oi], s),
                      inverse(lvl.reps[static_cast<std::size_t>(lvl.slot[image])]));
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift_from(schreier, i + 1);
          if (!residue.is_identity()) {
            add_generator_to_levels(i + 1, std::move(residue));
            i = stop <= levels_.size() - 1 ? stop : levels_.size() - 1;
            goto restart_level;
          }
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& lvl = levels_[i];
      point x = g[lvl.base_point];
      std::int32_t s = lvl.slot[x];
      if (s < 0) return {std::move(g), i};
      g = compose(g, inverse(lvl.reps[static_cast<std::size_t>(s)]));
    }
    return {std::move(g), levels_.size()};
  }

  point degree_;
  std::vector<point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_;
};

// ---------------------------------------------------------------------------
// PermutationGroup: generators plus a lazily built chain. Values are cheap
// to copy (the chain and element cache are shared). Chain construction is
// not thread-safe; build it (any query does) before sharing across threads.
// ---------------------------------------------------------------------------

class PermutationGroup {
 public:
  static constexpr std::size_t default_cache_cap = 10'000'000;

  PermutationGroup(point degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    if (degree_ == 0) throw error("PermutationGroup: degree must be >= 1");
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw error("PermutationGroup: generator degree mismatch");
  }

  explicit PermutationGroup(std::vector<Permutation> generators)
      : PermutationGroup(generators.empty()
                             ? throw error("PermutationGroup: need generators or a degree")
                             : generators[0].degree(),
                         std::move(generators)) {}

  point degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const {
    if (!chain_) chain_ = std::make_shared<StabilizerChain>(generators_, degree_);
    return *chain_;
  }

  std::uint64_t order() const { return chain().order(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw error("contains: degree mismatch");
    return chain().contains(g);
  }

  bool is_subgroup_of(const PermutationGroup& parent) const {
    if (degree_ != parent.degree()) return false;
    for (const auto& g : generators_)
      if (!parent.contains(g)) return false;
    return true;
  }

  /// Materialized element set, sorted by image sequence (so elements()[0]
  /// is the identity). Cached after the first call.
  const std::vector<Permutation>& elements(std::size_t cache_cap = default_cache_cap) const {
    if (!element_cache_) {
      if (order() > cache_cap)
        throw limit_error("elements: group order " + std::to_string(order()) +
                          " exceeds cache cap " + std::to_string(cache_cap));
      auto elems = std::make_shared<std::vector<Permutation>>(chain().elements());
      std::sort(elems->begin(), elems->end());
      element_cache_ = std::move(elems);
    }
    return *element_cache_;
  }

  OrbitPartition orbits() const { return orbit_partition(generators_, degree_); }

 private:
  point degree_;
  std::vector<Permutation> generators_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
  mutable std::shared_ptr<const std::vector<Permutation>> element_cache_;
};

inline PermutationGroup symmetric_group(point n) {
  if (n == 0) throw error("symmetric_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<point> t(n);
    std::iota(t.begin(), t.end(), point{1});
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (n >= 3) {
    std::vector<point> c(n);
    for (point i = 0; i < n; ++i) c[i] = (i + 1) % n + 1;
    gens.emplace_back(std::move(c));
  }
  return PermutationGroup(n, std::move(gens));
}

inline PermutationGroup alternating_group(point n) {
  if (n == 0) throw error("alternating_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(parse_cycles("(1,2,3)", n));
  if (n >= 4) {
    // (1,2,...,n) for odd n, (2,3,...,n) for even n.
    std::string cyc = "(";
    for (point x = (n % 2 == 1) ? 1 : 2; x <= n; ++x) {
      if (cyc.size() > 1) cyc += ',';
      cyc += std::to_string(x);
    }
    cyc += ')';
    gens.push_back(parse_cycles(cyc, n));
  }
  return PermutationGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Right cosets.
// ---------------------------------------------------------------------------

struct RightCosetSystem {
  PermutationGroup parent;
  PermutationGroup subgroup;
  std::vector<Permutation> representatives;  // representatives[0] is the identity
};

namespace detail {

struct ImageVectorHash {
  std::size_t operator()(const std::vector<point>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (point x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Canonical label of the right coset P*alpha: the lexicographically
/// smallest image table among {g*alpha : g in P}.
inline std::vector<point> coset_key(const std::vector<Permutation>& p_elements,
                                    const Permutation& alpha) {
  const auto& ai = alpha.images();
  std::vector<point> best;
  std::vector<point> cur(ai.size());
  for (const auto& g : p_elements) {
    const auto& gi = g.images();
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = ai[gi[i] - 1];
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

}  // namespace detail

/// One representative per right coset P\G, found by breadth-first search on
/// the coset graph (right multiplication by G's generators) from the trivial
/// coset; each coset's representative is the first word that reaches it.
/// Deterministic for a fixed pair of generator lists.
inline RightCosetSystem right_transversal(const PermutationGroup& g, const PermutationGroup& p,
                                          std::size_t max_cosets = 1'000'000,
                                          std::size_t cache_cap = PermutationGroup::default_cache_cap) {
  if (g.degree() != p.degree()) throw error("right_transversal: degree mismatch");
  if (!p.is_subgroup_of(g)) throw error("right_transversal: P is not a subgroup of G");
  std::uint64_t index = g.order() / p.order();
  if (index > max_cosets)
    throw limit_error("right_transversal: index " + std::to_string(index) +
                      " exceeds coset cap " + std::to_string(max_cosets));

  const auto& p_elements = p.elements(cache_cap);
  RightCosetSystem sys{g, p, {}};
  sys.representatives.reserve(index);
  std::unordered_set<std::vector<point>, detail::ImageVectorHash> seen;

  sys.representatives.push_back(identity(g.degree()));
  seen.insert(detail::coset_key(p_elements, sys.representatives[0]));
  for (std::size_t i = 0; i < sys.representatives.size(); ++i) {
    for (const auto& gen : g.generators()) {
      Permutation next = compose(sys.representatives[i], gen);
      auto key = detail::coset_key(p_elements, next);
      if (seen.insert(std::move(key)).second) sys.representatives.push_back(std::move(next));
    }
  }
  if (sys.representatives.size() != index)
    throw error("right_transversal: internal error, found " +
                std::to_string(sys.representatives.size()) + " cosets, expected " +
                std::to_string(index));
  return sys;
}

// ---------------------------------------------------------------------------
// Exactly uniform random elements via independent uniform transversal picks
// at each chain level. One stream per consumer; reproducible per seed.
// ---------------------------------------------------------------------------

class UniformElementStream {
 public:
  UniformElementStream(const PermutationGroup& group, std::uint64_t seed)
      : chain_(&group.chain()), rng_(seed) {}

  Permutation next() {
    const auto& levels = chain_->levels();
    Permutation acc = identity(chain_->degree());
    for (std::size_t i = levels.size(); i > 0; --i) {
      const auto& reps = levels[i - 1].reps;
      std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
      acc = compose(acc, reps[pick(rng_)]);
    }
    return acc;
  }

 private:
  const StabilizerChain* chain_;
  std::mt19937_64 rng_;
};

inline Permutation random_element(const PermutationGroup& group, std::uint64_t seed) {
  return UniformElementStream(group, seed).next();
}

}  // namespace zappa

#endif
