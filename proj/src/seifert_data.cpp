#include "nmsflow/seifert_data.hpp"

#include <algorithm>
#include <string>

#include "nmsflow/errors.hpp"

namespace nmsflow {

std::vector<Fiber> SeifertData::exceptional_fibers() const {
  std::vector<Fiber> out;
  for (const auto& f : fibers)
    if (f.exceptional()) out.push_back(f);
  return out;
}

std::size_t SeifertData::exceptional_count() const {
  return static_cast<std::size_t>(
      std::count_if(fibers.begin(), fibers.end(), [](const Fiber& f) { return f.exceptional(); }));
}

Int SeifertData::integer_term() const {
  Int b = 0;
  for (const auto& f : fibers)
    if (f.alpha == 1) b = checked_add(b, f.beta);
  return b;
}

void validate(const SeifertData& s) {
  for (const auto& f : s.fibers) {
    if (f.alpha < 1) {
      throw InvalidFiber("fiber multiplicity must be positive, got (" + std::to_string(f.alpha) +
                         "," + std::to_string(f.beta) + ")");
    }
    if (f.exceptional() && gcd(f.alpha, f.beta) != 1) {
      throw InvalidFiber("exceptional fiber (" + std::to_string(f.alpha) + "," +
                         std::to_string(f.beta) + ") is not coprime");
    }
  }
}

SeifertData seifert_normalize(const SeifertData& s) {
  validate(s);
  Int b = 0;
  SeifertData out;
  for (const auto& f : s.fibers) {
    if (f.alpha == 1) {
      b = checked_add(b, f.beta);
      continue;
    }
    Int k = floor_div(f.beta, f.alpha);
    b = checked_add(b, k);
    out.fibers.push_back({f.alpha, f.beta - k * f.alpha});
  }
  if (b != 0) out.fibers.push_back({1, b});
  std::sort(out.fibers.begin(), out.fibers.end());
  return out;
}

Rational euler_number(const SeifertData& s) {
  Rational e = 0;
  for (const auto& f : s.fibers) e += Rational(f.beta, f.alpha);
  return e;
}

namespace {

bool match_fibers(const std::vector<Fiber>& a, const std::vector<Fiber>& b, std::size_t i,
                  std::vector<bool>& used) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || b[j].alpha != a[i].alpha) continue;
    Int m = a[i].alpha;
    bool same = floor_mod(a[i].beta - b[j].beta, m) == 0;
    bool opposite = floor_mod(a[i].beta + b[j].beta, m) == 0;
    if (!same && !opposite) continue;
    used[j] = true;
    if (match_fibers(a, b, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool seifert_isomorphic(const SeifertData& a, const SeifertData& b) {
  validate(a);
  validate(b);
  if (euler_number(a) != euler_number(b)) return false;
  auto ea = a.exceptional_fibers();
  auto eb = b.exceptional_fibers();
  if (ea.size() != eb.size()) return false;
  std::vector<bool> used(eb.size(), false);
  return match_fibers(ea, eb, 0, used);
}

OrbitalInvariants orbital_invariants(const Fiber& f) {
  if (f.alpha < 1) throw InvalidFiber("fiber multiplicity must be positive");
  if (f.alpha == 1) return {1, 0};
  if (gcd(f.alpha, f.beta) != 1) throw InvalidFiber("exceptional fiber is not coprime");
  return {f.alpha, mod_inverse(f.beta, f.alpha)};
}

}  // namespace nmsflow
