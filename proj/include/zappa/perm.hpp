#ifndef ZAPPA_PERM_HPP
#define ZAPPA_PERM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/numeric.hpp"

namespace zappa {

/// Points are 1-based everywhere in the public interface.
using point = std::uint32_t;

/// An immutable bijection of {1..n}. The composition convention throughout
/// the library is "left factor acts first": x^(a*b) = (x^a)^b.
class Permutation {
 public:
  /// Identity on {1..n}.
  explicit Permutation(point n) : img_(n) {
    if (n == 0) throw error("Permutation: degree must be >= 1");
    std::iota(img_.begin(), img_.end(), point{1});
  }

  /// From an image table: images[i] is the image of point i+1.
  explicit Permutation(std::vector<point> images) : img_(std::move(images)) {
    if (img_.empty()) throw error("Permutation: degree must be >= 1");
    std::vector<bool> seen(img_.size(), false);
    for (point v : img_) {
      if (v < 1 || v > img_.size() || seen[v - 1])
        throw error("Permutation: image table is not a bijection of {1..n}");
      seen[v - 1] = true;
    }
  }

  point degree() const { return static_cast<point>(img_.size()); }

  /// Image of a 1-based point.
  point operator[](point x) const { return img_[x - 1]; }

  const std::vector<point>& images() const { return img_; }

  bool is_identity() const {
    for (point i = 0; i < img_.size(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<point> img_;
};

inline Permutation identity(point n) { return Permutation(n); }

/// x^(a*b) = (x^a)^b: apply a first, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw error("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                std::to_string(b.degree()) + ")");
  std::vector<point> img(a.degree());
  const auto& ai = a.images();
  const auto& bi = b.images();
  for (point i = 0; i < img.size(); ++i) img[i] = bi[ai[i] - 1];
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& a) {
  std::vector<point> img(a.degree());
  const auto& ai = a.images();
  for (point i = 0; i < img.size(); ++i) img[ai[i] - 1] = i + 1;
  return Permutation(std::move(img));
}

/// a^g = g^-1 * a * g. Preserves cycle type.
inline Permutation conjugate(const Permutation& a, const Permutation& g) {
  return compose(compose(inverse(g), a), g);
}

inline Permutation power(const Permutation& a, std::uint64_t e) {
  Permutation r = identity(a.degree());
  Permutation base = a;
  while (e > 0) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

/// Ordered orbit [x, x^a, x^(a^2), ...], stopping just before x recurs.
inline std::vector<point> cyclic_orbit(const Permutation& a, point x) {
  if (x < 1 || x > a.degree())
    throw error("cyclic_orbit: point " + std::to_string(x) + " out of range");
  std::vector<point> orbit{x};
  for (point y = a[x]; y != x; y = a[y]) orbit.push_back(y);
  return orbit;
}

/// Disjoint cycles (length >= 2, each starting at its minimal point, listed
/// in increasing order of that point) plus the fixed points.
struct CycleDecomposition {
  std::vector<std::vector<point>> cycles;
  std::vector<point> fixed_points;
};

inline CycleDecomposition cycle_decomposition(const Permutation& a) {
  CycleDecomposition dec;
  std::vector<bool> seen(a.degree(), false);
  for (point x = 1; x <= a.degree(); ++x) {
    if (seen[x - 1]) continue;
    if (a[x] == x) {
      seen[x - 1] = true;
      dec.fixed_points.push_back(x);
      continue;
    }
    std::vector<point> cyc;
    for (point y = x; !seen[y - 1]; y = a[y]) {
      seen[y - 1] = true;
      cyc.push_back(y);
    }
    dec.cycles.push_back(std::move(cyc));
  }
  return dec;
}

/// Order as the lcm of cycle lengths.
inline std::uint64_t order(const Permutation& a) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(a.degree(), false);
  for (point x = 1; x <= a.degree(); ++x) {
    if (seen[x - 1]) continue;
    std::uint64_t len = 0;
    for (point y = x; !seen[y - 1]; y = a[y]) {
      seen[y - 1] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// True iff order(a) is a power of p (the identity counts, p^0).
/// Equivalently, every cycle length is a power of p.
inline bool is_p_element(const Permutation& a, std::uint64_t p) {
  require_prime(p, "is_p_element");
  std::vector<bool> seen(a.degree(), false);
  for (point x = 1; x <= a.degree(); ++x) {
    if (seen[x - 1]) continue;
    std::uint64_t len = 0;
    for (point y = x; !seen[y - 1]; y = a[y]) {
      seen[y - 1] = true;
      ++len;
    }
    if (!is_power_of(len, p)) return false;
  }
  return true;
}

enum class Parity { even, odd };

/// Sign via (degree - #cycles), counting fixed points as cycles.
inline Parity parity(const Permutation& a) {
  std::size_t ncycles = 0;
  std::vector<bool> seen(a.degree(), false);
  for (point x = 1; x <= a.degree(); ++x) {
    if (seen[x - 1]) continue;
    ++ncycles;
    for (point y = x; !seen[y - 1]; y = a[y]) seen[y - 1] = true;
  }
  return ((a.degree() - ncycles) % 2 == 0) ? Parity::even : Parity::odd;
}

inline bool is_even(const Permutation& a) { return parity(a) == Parity::even; }

/// Restriction to an invariant point set, relabeled to {1..|S|} by
/// increasing original point order.
inline Permutation restrict_to(const Permutation& a, const std::vector<point>& s) {
  std::vector<point> pts(s);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw error("restrict_to: empty point set");
  auto index_of = [&](point x) -> point {
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (it == pts.end() || *it != x)
      throw error("restrict_to: set is not invariant under the permutation");
    return static_cast<point>(it - pts.begin()) + 1;
  };
  std::vector<point> img(pts.size());
  for (point i = 0; i < pts.size(); ++i) {
    point x = pts[i];
    if (x < 1 || x > a.degree()) throw error("restrict_to: point out of range");
    img[i] = index_of(a[x]);
  }
  return Permutation(std::move(img));
}

/// Points moved by a, in increasing order.
inline std::vector<point> support(const Permutation& a) {
  std::vector<point> s;
  for (point x = 1; x <= a.degree(); ++x)
    if (a[x] != x) s.push_back(x);
  return s;
}

/// True iff a's nontrivial cycles form exactly one cycle of length len.
inline bool is_single_cycle(const Permutation& a, std::size_t len) {
  auto dec = cycle_decomposition(a);
  return dec.cycles.size() == 1 && dec.cycles[0].size() == len;
}

// ---------------------------------------------------------------------------
// Cycle notation: "(1,2,3)(4,5)"; "()" is the identity. Parsing ignores
// whitespace; the printer is canonical (cycles sorted by minimal point,
// each starting there), so print(parse(print(a))) == print(a) byte for byte.
// ---------------------------------------------------------------------------

inline std::string format_cycles(const Permutation& a) {
  auto dec = cycle_decomposition(a);
  if (dec.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : dec.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

namespace detail {

struct CycleTextCursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;
  int base_column;

  explicit CycleTextCursor(const std::string& t, int line_ = 1, int column_ = 1)
      : text(t), line(line_), base_column(column_) {}

  int column() const { return base_column + static_cast<int>(pos); }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw parse_error(what, line, column());
    ++pos;
  }
  point number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a point number", line, column());
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw parse_error("point number too large", line, column());
      ++pos;
    }
    return static_cast<point>(v);
  }
};

}  // namespace detail

/// Parse cycle notation into a permutation of the given degree. Cycles are
/// applied left to right (overlap between cycles is allowed; a repeated
/// point within one cycle is an error).
inline Permutation parse_cycles(const std::string& text, point degree, int line = 1,
                                int column = 1) {
  if (degree == 0) throw error("parse_cycles: degree must be >= 1");
  detail::CycleTextCursor cur(text, line, column);
  Permutation result = identity(degree);
  bool any = false;
  while (!cur.done()) {
    cur.expect('(', "expected '('");
    any = true;
    std::vector<point> cyc;
    if (cur.peek() != ')') {
      for (;;) {
        int col = cur.column();
        point x = cur.number();
        if (x < 1 || x > degree)
          throw parse_error("point " + std::to_string(x) + " out of range for degree " +
                                std::to_string(degree),
                            cur.line, col);
        if (std::find(cyc.begin(), cyc.end(), x) != cyc.end())
          throw parse_error("duplicate point " + std::to_string(x) + " within a cycle",
                            cur.line, col);
        cyc.push_back(x);
        if (cur.peek() == ',') {
          cur.expect(',', "expected ','");
          continue;
        }
        break;
      }
    }
    cur.expect(')', "expected ')' or ','");
    if (cyc.size() >= 2) {
      std::vector<point> img(degree);
      std::iota(img.begin(), img.end(), point{1});
      for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      result = compose(result, Permutation(std::move(img)));
    }
  }
  if (!any) throw parse_error("expected cycle notation", cur.line, cur.column());
  return result;
}

/// Hash over the image table, for unordered containers of permutations.
struct PermutationHash {
  std::size_t operator()(const Permutation& a) const {
    std::size_t h = 1469598103934665603ull;
    for (point v : a.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Orbit partitions under a set of generators.
// ---------------------------------------------------------------------------

struct OrbitPartition {
  std::vector<std::vector<point>> blocks;  // sorted internally and by min point
  std::vector<std::size_t> point_to_block;  // index 0 unused; 1-based points

  std::size_t block_of(point x) const { return point_to_block[x]; }
};

inline OrbitPartition orbit_partition(const std::vector<Permutation>& generators, point degree) {
  OrbitPartition part;
  part.point_to_block.assign(degree + 1, SIZE_MAX);
  for (point x = 1; x <= degree; ++x) {
    if (part.point_to_block[x] != SIZE_MAX) continue;
    std::size_t id = part.blocks.size();
    std::vector<point> block{x};
    part.point_to_block[x] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (const auto& g : generators) {
        point y = g[block[i]];
        if (part.point_to_block[y] == SIZE_MAX) {
          part.point_to_block[y] = id;
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

}  // namespace zappa

#endif
