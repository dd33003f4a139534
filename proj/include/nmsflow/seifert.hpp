#pragma once

#include "nmsflow/manifold.hpp"
#include "nmsflow/seifert_data.hpp"

namespace nmsflow {

/// Lens space (or S2xS1 / S3 / RP3) of a Seifert space over S^2 with at most
/// two exceptional fibers. The integer term is first folded into the first
/// exceptional fiber as beta_1 + b * alpha_1. For two fibers
///   p = beta_1 alpha_2 - alpha_1 beta_2,  q = beta_1 nu_2 + alpha_1 xi_2,
/// with alpha_2 xi_2 + nu_2 beta_2 = 1 and nu_2 in (0, alpha_2).
/// Throws NotALens for three or more exceptional fibers.
Manifold seifert_to_lens(const SeifertData& s);

/// True iff s has at least three exceptional fibers, which certifies that it
/// is not a lens space.
bool not_lens_obstruction(const SeifertData& s);

enum class PrimeException {
  None,
  Literal,     // (2,1),(2,1),(2,1),(2,1)
  EulerZero,   // (2,1),(2,1),(2,-1),(2,-1)
};

/// Which reading of the RP3 # RP3 exception a Seifert space matches. The two
/// candidates differ by an Euler-number convention; both are reported.
PrimeException prime_exception(const SeifertData& s);

bool is_prime(const Manifold& m);

}  // namespace nmsflow
