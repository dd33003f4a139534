#include "nmsflow/manifold.hpp"

#include <algorithm>
#include <string>

#include "nmsflow/errors.hpp"
#include "nmsflow/seifert.hpp"

namespace nmsflow {

bool operator==(const Manifold& a, const Manifold& b) { return a.v_ == b.v_; }

std::strong_ordering operator<=>(const Manifold& a, const Manifold& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.v_);
      },
      a.v_);
}

bool operator==(const ConnectedSum& a, const ConnectedSum& b) { return a.summands == b.summands; }

std::strong_ordering operator<=>(const ConnectedSum& a, const ConnectedSum& b) {
  return std::lexicographical_compare_three_way(a.summands.begin(), a.summands.end(),
                                                b.summands.begin(), b.summands.end());
}

bool valid_lens_params(const LensParams& l) {
  if (l.p == 0) return l.q == 1 || l.q == -1;
  return gcd(l.p, l.q) == 1;
}

Manifold lens_canonical(Int p, Int q) {
  if (!valid_lens_params({p, q})) {
    throw InvalidLensParameters("L(" + std::to_string(p) + "," + std::to_string(q) +
                                ") requires gcd(|p|,q) = 1");
  }
  if (p == 0) return S2xS1{};
  if (p < 0) p = -p;
  if (p == 1) return Sphere{};
  if (p == 2) return RP3{};
  Int r = floor_mod(q, p);
  return Lens{{p, std::min(r, p - r)}};
}

bool lens_equivalent(const LensParams& a, const LensParams& b) {
  if (a.p != b.p && a.p != -b.p) return false;
  Int m = a.p < 0 ? -a.p : a.p;
  if (m == 0) return a.q == b.q || a.q == -b.q;
  return floor_mod(a.q - b.q, m) == 0 || floor_mod(a.q + b.q, m) == 0;
}

bool lens_homeomorphic_unoriented(const LensParams& a, const LensParams& b) {
  if (lens_equivalent(a, b)) return true;
  if (a.p != b.p && a.p != -b.p) return false;
  Int m = a.p < 0 ? -a.p : a.p;
  if (m == 0) return false;
  Int prod = floor_mod(checked_mul(floor_mod(a.q, m), floor_mod(b.q, m)), m);
  return prod == floor_mod(1, m) || prod == floor_mod(-1, m);
}

Manifold seifert_space(const SeifertData& s) {
  SeifertData n = seifert_normalize(s);
  if (n.fibers.empty()) return S2xS1{};
  return SeifertOverS2{std::move(n)};
}

namespace {

void flatten_into(const Manifold& m, std::vector<Manifold>& out) {
  if (m.is<ConnectedSum>()) {
    for (const auto& s : m.as<ConnectedSum>().summands) flatten_into(s, out);
  } else if (!m.is<Sphere>()) {
    out.push_back(m);
  }
}

}  // namespace

Manifold sum_normalize(const std::vector<Manifold>& summands) {
  std::vector<Manifold> flat;
  for (const auto& m : summands) flatten_into(canonicalize(m), flat);
  if (flat.empty()) return Sphere{};
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  return ConnectedSum{std::move(flat)};
}

Manifold canonicalize(const Manifold& m) {
  return std::visit(
      [&](const auto& x) -> Manifold {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lens>) {
          return lens_canonical(x.params);
        } else if constexpr (std::is_same_v<T, SeifertOverS2>) {
          return seifert_space(x.data);
        } else if constexpr (std::is_same_v<T, ConnectedSum>) {
          return sum_normalize(x.summands);
        } else {
          return x;
        }
      },
      m.variant());
}

namespace {

// Replaces Seifert spaces that are lens spaces by their lens form.
Manifold bridge(const Manifold& m) {
  if (m.is<SeifertOverS2>()) {
    const auto& s = m.as<SeifertOverS2>().data;
    if (s.exceptional_count() <= 2) return seifert_to_lens(s);
    return m;
  }
  if (m.is<ConnectedSum>()) {
    std::vector<Manifold> parts;
    for (const auto& s : m.as<ConnectedSum>().summands) parts.push_back(bridge(s));
    return sum_normalize(parts);
  }
  return m;
}

bool prime_homeomorphic(const Manifold& a, const Manifold& b) {
  if (a.is<SeifertOverS2>() && b.is<SeifertOverS2>()) {
    return seifert_isomorphic(a.as<SeifertOverS2>().data, b.as<SeifertOverS2>().data);
  }
  return a == b;
}

bool match_summands(const std::vector<Manifold>& a, const std::vector<Manifold>& b, std::size_t i,
                    std::vector<bool>& used) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || !prime_homeomorphic(a[i], b[j])) continue;
    used[j] = true;
    if (match_summands(a, b, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool homeomorphic(const Manifold& a, const Manifold& b) {
  Manifold x = bridge(a);
  Manifold y = bridge(b);
  if (x.is<ConnectedSum>() != y.is<ConnectedSum>()) return false;
  if (!x.is<ConnectedSum>()) return prime_homeomorphic(x, y);
  const auto& xs = x.as<ConnectedSum>().summands;
  const auto& ys = y.as<ConnectedSum>().summands;
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  return match_summands(xs, ys, 0, used);
}

}  // namespace nmsflow
