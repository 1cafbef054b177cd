#ifndef ZAPPA_PROJECTIVE_HPP
#define ZAPPA_PROJECTIVE_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zappa/errors.hpp"
#include "zappa/field.hpp"
#include "zappa/group.hpp"
#include "zappa/perm.hpp"

namespace zappa {

/// A point of PG(2,q): nonzero coordinate triple normalized so the first
/// nonzero coordinate is 1. Equal points have identical triples.
struct ProjectivePoint {
  std::array<FieldTable::elem, 3> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline ProjectivePoint normalize_point(const FieldTable& field,
                                       std::array<FieldTable::elem, 3> v) {
  unsigned lead = 0;
  while (lead < 3 && v[lead] == 0) ++lead;
  if (lead == 3) throw error("normalize_point: zero vector");
  FieldTable::elem scale = field.inv(v[lead]);
  for (auto& c : v) c = field.mul(c, scale);
  return ProjectivePoint{v};
}

/// All q^2+q+1 canonical points of PG(2,q), in lexicographic coordinate
/// order.
inline std::vector<ProjectivePoint> projective_points(const FieldTable& field) {
  std::vector<ProjectivePoint> points;
  unsigned q = field.size();
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        std::array<FieldTable::elem, 3> v{static_cast<FieldTable::elem>(a),
                                          static_cast<FieldTable::elem>(b),
                                          static_cast<FieldTable::elem>(c)};
        ProjectivePoint pt = normalize_point(field, v);
        if (pt.coords == v) points.push_back(pt);
      }
  if (points.size() != static_cast<std::size_t>(q) * q + q + 1)
    throw error("projective_points: internal count mismatch");
  return points;
}

using Matrix3 = std::array<std::array<FieldTable::elem, 3>, 3>;

inline Matrix3 matrix_mul(const FieldTable& field, const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      FieldTable::elem acc = 0;
      for (unsigned k = 0; k < 3; ++k) acc = field.add(acc, field.mul(a[i][k], b[k][j]));
      r[i][j] = acc;
    }
  return r;
}

/// The permutation a matrix induces on the canonical point list, acting on
/// row vectors on the right: index of normalize(v * M).
inline Permutation matrix_to_point_permutation(const FieldTable& field,
                                               const std::vector<ProjectivePoint>& points,
                                               const Matrix3& m) {
  std::vector<point> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& v = points[i].coords;
    std::array<FieldTable::elem, 3> w{};
    for (unsigned j = 0; j < 3; ++j) {
      FieldTable::elem acc = 0;
      for (unsigned k = 0; k < 3; ++k) acc = field.add(acc, field.mul(v[k], m[k][j]));
      w[j] = acc;
    }
    ProjectivePoint target = normalize_point(field, w);
    auto it = std::lower_bound(points.begin(), points.end(), target);
    if (it == points.end() || !(*it == target))
      throw error("matrix_to_point_permutation: image point not in list");
    img[i] = static_cast<point>(it - points.begin()) + 1;
  }
  return Permutation(std::move(img));
}

inline std::uint64_t psl3_order(unsigned q) {
  std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  return q3 * (q3 - 1) * (static_cast<std::uint64_t>(q) * q - 1) /
         std::gcd<std::uint64_t>(3, q - 1);
}

/// Permutations of the q^2+q+1 projective points generating PSL(3,q): the
/// images of a transvection and a cyclic shift matrix. SL(3,q)'s center is
/// the scalar matrices, which fix every point, so the induced group is the
/// projective quotient. The generating pair is not taken on faith: the
/// caller-visible contract is the post-hoc order check in psl3_group.
inline std::vector<Permutation> psl3_generators(const FieldTable& field) {
  auto points = projective_points(field);
  // Transvection parameter: any nonzero label does for prime q (the root
  // subgroup is generated additively); label q-1 also covers GF(4), where
  // it generates the multiplicative group.
  FieldTable::elem lambda = static_cast<FieldTable::elem>(field.size() > 2 ? field.size() - 1 : 1);
  Matrix3 transvection{{{1, lambda, 0}, {0, 1, 0}, {0, 0, 1}}};
  Matrix3 shift{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  return {matrix_to_point_permutation(field, points, transvection),
          matrix_to_point_permutation(field, points, shift)};
}

/// PSL(3,q) as a permutation group on PG(2,q); aborts if the generated
/// order does not match q^3 (q^3-1)(q^2-1) / gcd(3, q-1).
inline PermutationGroup psl3_group(unsigned q) {
  FieldTable field = build_field(q);
  PermutationGroup group(psl3_generators(field));
  if (group.order() != psl3_order(q))
    throw error("psl3_group: generated order " + std::to_string(group.order()) +
                " does not match " + std::to_string(psl3_order(q)) + " for q=" +
                std::to_string(q));
  return group;
}

}  // namespace zappa

#endif
