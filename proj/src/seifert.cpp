#include "nmsflow/seifert.hpp"

#include <string>

#include "nmsflow/errors.hpp"

namespace nmsflow {

Manifold seifert_to_lens(const SeifertData& s) {
  validate(s);
  auto fibers = s.exceptional_fibers();
  Int b = s.integer_term();
  if (fibers.size() > 2) {
    throw NotALens("Seifert space with " + std::to_string(fibers.size()) +
                   " exceptional fibers over S2 is not a lens space");
  }
  if (fibers.empty()) {
    // M(S2, (1, b)) = L(b, 1)
    return lens_canonical(b, 1);
  }
  Fiber first = fibers[0];
  first.beta = checked_add(first.beta, checked_mul(b, first.alpha));
  if (fibers.size() == 1) return lens_canonical(first.beta, first.alpha);

  const Fiber& second = fibers[1];
  Int nu2 = mod_inverse(second.beta, second.alpha);
  Int xi2 = (1 - checked_mul(nu2, second.beta)) / second.alpha;
  Int p = checked_mul(first.beta, second.alpha) - checked_mul(first.alpha, second.beta);
  Int q = checked_mul(first.beta, nu2) + checked_mul(first.alpha, xi2);
  return lens_canonical(p, q);
}

bool not_lens_obstruction(const SeifertData& s) { return s.exceptional_count() >= 3; }

PrimeException prime_exception(const SeifertData& s) {
  SeifertData n = seifert_normalize(s);
  const SeifertData literal{{{2, 1}, {2, 1}, {2, 1}, {2, 1}}};
  if (n == literal) return PrimeException::Literal;
  const SeifertData euler_zero = seifert_normalize({{{2, 1}, {2, 1}, {2, -1}, {2, -1}}});
  if (n == euler_zero) return PrimeException::EulerZero;
  return PrimeException::None;
}

bool is_prime(const Manifold& m) {
  if (m.is<ConnectedSum>()) return false;
  if (m.is<SeifertOverS2>()) return prime_exception(m.as<SeifertOverS2>().data) == PrimeException::None;
  return true;
}

}  // namespace nmsflow
