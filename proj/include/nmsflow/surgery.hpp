#pragma once

#include <array>
#include <utility>
#include <vector>

#include "nmsflow/arith.hpp"
#include "nmsflow/manifold.hpp"

namespace nmsflow {

/// Surgery coefficients (beta, alpha) of an equipped knot; coprime.
struct Framing {
  Int beta = 0;
  Int alpha = 1;
  auto operator<=>(const Framing&) const = default;
};

bool valid_framing(const Framing& f);

/// 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  Int det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  auto operator<=>(const Mat2&) const = default;
};

/// Boundary gluing map of a surgery in the layout
///   [[xi, -nu], [beta, alpha]],  xi alpha + nu beta = 1.
struct GluingMatrix {
  Mat2 m;

  Int xi() const { return m.a; }
  Int nu() const { return -m.b; }
  Framing framing() const { return {m.c, m.d}; }
  bool in_sl2() const { return m.det() == 1; }
  auto operator<=>(const GluingMatrix&) const = default;
};

/// beta = beta' and alpha = alpha' (mod beta). Modulus 0 means equality.
bool framing_equivalent(const Framing& a, const Framing& b);

/// Framing of the core of the reglued solid torus: (-beta, xi) with
/// xi alpha + nu beta = 1 and xi the least nonnegative residue mod |beta|
/// (xi = alpha when beta = 0).
Framing invert_framing(const Framing& f);

/// Full gluing matrix for a framing with the same xi convention.
GluingMatrix gluing_matrix(const Framing& f);

/// Saddle-orbit surgery: the longitude goes to (2, 1), which with
/// determinant 1 forces the framing (-1, 0).
std::pair<GluingMatrix, Framing> saddle_framing();

/// SL(2,Z) matrix with first column (a, c). The second column (x, y) solves
/// a y - c x = 1 with y in [0, |c|) when c != 0. Throws NonCoprime.
Mat2 complete_to_sl2(Int a, Int c);

/// Surgery on S^3 along a meridian with framing (q, p) gives L(p, q).
Manifold meridian_surgery(Int q, Int p);

/// Surgery on a trivial link in `base` with framings (q_i, p_i):
/// base # L(p_1, q_1) # ... # L(p_r, q_r).
Manifold trivial_link_surgery(const Manifold& base, const std::vector<std::pair<Int, Int>>& framings);

}  // namespace nmsflow
