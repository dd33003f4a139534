#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "nmsflow/arith.hpp"
#include "nmsflow/seifert_data.hpp"

namespace nmsflow {

/// Lens parameters (p, q): the meridian of one solid torus is glued to the
/// (p, q) curve of the other. Valid when gcd(|p|, q) = 1, or p = 0, q = +-1.
struct LensParams {
  Int p = 1;
  Int q = 0;
  auto operator<=>(const LensParams&) const = default;
};

bool valid_lens_params(const LensParams& l);

struct Sphere {
  auto operator<=>(const Sphere&) const = default;
};
struct S2xS1 {
  auto operator<=>(const S2xS1&) const = default;
};
struct RP3 {
  auto operator<=>(const RP3&) const = default;
};

/// Canonical lens space: p >= 3, 0 < q <= p - q.
struct Lens {
  LensParams params;
  auto operator<=>(const Lens&) const = default;
};

/// Seifert fibered space over S^2 with a normalized, nonempty fiber list.
struct SeifertOverS2 {
  SeifertData data;
  auto operator<=>(const SeifertOverS2&) const = default;
};

class Manifold;

/// Sorted list of at least two non-sphere, non-sum summands.
struct ConnectedSum {
  std::vector<Manifold> summands;
};

/// A closed orientable 3-manifold in canonical form. The alternative order
/// fixes the total order used to sort connected-sum summands.
class Manifold {
 public:
  using Variant = std::variant<Sphere, S2xS1, Lens, RP3, SeifertOverS2, ConnectedSum>;

  Manifold() : v_(Sphere{}) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  template <typename T>
    requires std::is_constructible_v<Variant, T&&>
  Manifold(T&& alt) : v_(std::forward<T>(alt)) {}

  const Variant& variant() const { return v_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(v_);
  }

  friend bool operator==(const Manifold& a, const Manifold& b);
  friend std::strong_ordering operator<=>(const Manifold& a, const Manifold& b);

 private:
  Variant v_;
};

bool operator==(const ConnectedSum& a, const ConnectedSum& b);
std::strong_ordering operator<=>(const ConnectedSum& a, const ConnectedSum& b);

/// Canonical representative of L(p, q): p -> |p|, q -> min(q mod p, -q mod p),
/// with p = 0, 1, 2 collapsing to S2xS1, S3 and RP3.
/// Throws InvalidLensParameters for non-coprime input.
Manifold lens_canonical(Int p, Int q);
inline Manifold lens_canonical(const LensParams& l) { return lens_canonical(l.p, l.q); }

/// p = +-p' and q = +-q' (mod |p|).
bool lens_equivalent(const LensParams& a, const LensParams& b);

/// lens_equivalent, additionally accepting q q' = +-1 (mod p). Not used by
/// any other operation.
bool lens_homeomorphic_unoriented(const LensParams& a, const LensParams& b);

/// Canonical Seifert space from arbitrary valid data. An empty normalized
/// list is S2xS1.
Manifold seifert_space(const SeifertData& s);

/// Flattens nested sums, drops spheres, sorts. Empty -> S3, singleton -> itself.
Manifold sum_normalize(const std::vector<Manifold>& summands);

/// Re-canonicalizes any manifold value (the identity on canonical input).
Manifold canonicalize(const Manifold& m);

/// Homeomorphism test on canonical forms. Seifert spaces with at most two
/// exceptional fibers are bridged to lens spaces first; Seifert spaces with
/// three or more are compared by seifert_isomorphic and never equal a lens
/// space; sums are compared as multisets.
bool homeomorphic(const Manifold& a, const Manifold& b);

}  // namespace nmsflow
