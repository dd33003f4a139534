#pragma once

#include <compare>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nmsflow/arith.hpp"

namespace nmsflow {

using Rational = boost::multiprecision::cpp_rational;

/// One fiber pair (alpha, beta) of a Seifert invariant. alpha is the
/// multiplicity; alpha == 1 is an ordinary fiber carrying an integer twist.
struct Fiber {
  Int alpha = 1;
  Int beta = 0;

  bool exceptional() const { return alpha >= 2; }
  auto operator<=>(const Fiber&) const = default;
};

/// Unnormalized Seifert invariant over the base S^2.
struct SeifertData {
  std::vector<Fiber> fibers;

  auto operator<=>(const SeifertData&) const = default;

  std::vector<Fiber> exceptional_fibers() const;
  std::size_t exceptional_count() const;
  /// Sum of beta over fibers with alpha == 1.
  Int integer_term() const;
};

/// Orbital invariants (alpha, nu) of a fibered solid torus.
struct OrbitalInvariants {
  Int alpha = 1;
  Int nu = 0;
  auto operator<=>(const OrbitalInvariants&) const = default;
};

/// Checks alpha >= 1 everywhere and gcd(alpha, beta) == 1 on exceptional
/// fibers. Throws InvalidFiber.
void validate(const SeifertData& s);

/// Reduces every exceptional beta into (0, alpha), collects the integer
/// excess (and all alpha == 1 terms) into a single (1, b) fiber, drops it when
/// b == 0 and sorts. Exactly preserves the Euler number. Idempotent.
SeifertData seifert_normalize(const SeifertData& s);

/// Exact sum of beta_i / alpha_i, including the (1, b) term.
Rational euler_number(const SeifertData& s);

/// Orientation-of-fibers isomorphism test: a multiplicity-preserving
/// bijection of exceptional fibers with beta' == +-beta (mod alpha) on each
/// matched pair, together with equal Euler numbers.
bool seifert_isomorphic(const SeifertData& a, const SeifertData& b);

/// nu is the representative of beta^{-1} (mod alpha) in (0, alpha); for an
/// ordinary fiber nu = 0.
OrbitalInvariants orbital_invariants(const Fiber& f);

}  // namespace nmsflow
