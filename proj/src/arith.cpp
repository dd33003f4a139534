#include "nmsflow/arith.hpp"

#include <string>

#include "nmsflow/errors.hpp"

namespace nmsflow {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BezoutResult extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int floor_mod(Int a, Int m) {
  if (m < 0) m = -m;
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int a, Int m) {
  Int q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

Int mod_inverse(Int a, Int m) {
  if (m < 0) m = -m;
  if (m == 0) throw NonCoprime("no inverse modulo 0");
  auto [g, x, y] = extended_gcd(floor_mod(a, m), m);
  (void)y;
  if (g != 1) {
    throw NonCoprime(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return floor_mod(x, m);
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication overflow");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition overflow");
  return r;
}

}  // namespace nmsflow
