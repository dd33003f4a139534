#include "nmsflow/surgery.hpp"

#include <string>

#include "nmsflow/errors.hpp"

namespace nmsflow {

bool valid_framing(const Framing& f) { return gcd(f.beta, f.alpha) == 1; }

bool framing_equivalent(const Framing& a, const Framing& b) {
  if (a.beta != b.beta) return false;
  if (a.beta == 0) return a.alpha == b.alpha;
  return floor_mod(a.alpha - b.alpha, a.beta) == 0;
}

GluingMatrix gluing_matrix(const Framing& f) {
  if (!valid_framing(f)) {
    throw NonCoprime("framing (" + std::to_string(f.beta) + "," + std::to_string(f.alpha) +
                     ") is not coprime");
  }
  Int xi;
  Int nu;
  if (f.beta == 0) {
    xi = f.alpha;  // alpha = +-1
    nu = 0;
  } else {
    xi = mod_inverse(f.alpha, f.beta);
    nu = (1 - checked_mul(xi, f.alpha)) / f.beta;
  }
  return GluingMatrix{{xi, -nu, f.beta, f.alpha}};
}

Framing invert_framing(const Framing& f) {
  GluingMatrix g = gluing_matrix(f);
  return {-f.beta, g.xi()};
}

std::pair<GluingMatrix, Framing> saddle_framing() {
  // Longitude image (2, 1) fills the first row; 2 alpha - beta = 1 with
  // the smallest |alpha| gives beta = -1, alpha = 0.
  GluingMatrix g{{2, 1, -1, 0}};
  return {g, g.framing()};
}

Mat2 complete_to_sl2(Int a, Int c) {
  if (gcd(a, c) != 1) {
    throw NonCoprime("(" + std::to_string(a) + "," + std::to_string(c) + ") is not coprime");
  }
  if (c == 0) return {a, 0, 0, a};  // a = +-1
  // a y == 1 (mod c); x = (a y - 1) / c
  Int y = mod_inverse(a, c);
  Int x = (checked_mul(a, y) - 1) / c;
  return {a, x, c, y};
}

Manifold meridian_surgery(Int q, Int p) { return lens_canonical(p, q); }

Manifold trivial_link_surgery(const Manifold& base, const std::vector<std::pair<Int, Int>>& framings) {
  std::vector<Manifold> parts{base};
  for (const auto& [q, p] : framings) parts.push_back(lens_canonical(p, q));
  return sum_normalize(parts);
}

}  // namespace nmsflow
