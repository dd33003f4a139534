#pragma once

#include <cstdint>

namespace nmsflow {

using Int = std::int64_t;

struct BezoutResult {
  Int gcd;  // always >= 0
  Int x;
  Int y;    // a*x + b*y == gcd
};

Int gcd(Int a, Int b);

/// Extended Euclid. For gcd(a, b) = g returns (g, x, y) with a*x + b*y = g.
BezoutResult extended_gcd(Int a, Int b);

/// Least nonnegative residue of a modulo |m|. m must be nonzero.
Int floor_mod(Int a, Int m);

/// Floor division for m > 0.
Int floor_div(Int a, Int m);

/// Inverse of a modulo |m| in [0, |m|); returns 0 for |m| == 1.
/// Throws NonCoprime if gcd(a, m) != 1 or m == 0.
Int mod_inverse(Int a, Int m);

/// True when gcd(a, b) == 1 (so (0, ±1) counts as coprime).
inline bool coprime(Int a, Int b) { return gcd(a, b) == 1; }

/// Checked multiply/add; throw Overflow instead of wrapping.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

}  // namespace nmsflow
