#include "nmsflow/homology.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "nmsflow/errors.hpp"

namespace nmsflow {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged-matrix", "IntMatrix rows must have equal length");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= k * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= k * m(r, src);
}

// Moves the smallest nonzero |entry| of the lower-right block at t to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  bool found = false;
  BigInt best;
  std::size_t br = t, bc = t;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      BigInt a = abs(m(r, c));
      if (!found || a < best) {
        found = true;
        best = a;
        br = r;
        bc = c;
      }
    }
  if (!found) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        add_row(m, r, t, m(r, t) / m(t, t));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        add_col(m, c, t, m(t, c) / m(t, t));
        if (m(t, c) != 0) clean = false;
      }
      if (clean) {
        // Pivot must divide the rest of the block.
        std::size_t bad_row = 0;
        for (std::size_t r = t + 1; r < m.rows() && bad_row == 0; ++r)
          for (std::size_t c = t + 1; c < m.cols(); ++c)
            if (m(r, c) % m(t, t) != 0) {
              bad_row = r;
              break;
            }
        if (bad_row == 0) break;
        add_row(m, t, bad_row, BigInt(-1));
        continue;
      }
      place_pivot(m, t);
    }
  }
  std::vector<BigInt> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = abs(m(i, i));
  return diag;
}

BigInt AbelianGroup::order() const {
  if (free_rank != 0) return 0;
  BigInt o = 1;
  for (Int d : torsion) o *= d;
  return o;
}

AbelianGroup cokernel(const IntMatrix& relations) {
  auto diag = smith_normal_form(relations);
  AbelianGroup g;
  Int nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d == 1) continue;
    if (d > BigInt(std::numeric_limits<Int>::max())) throw Overflow("invariant factor exceeds 64 bits");
    g.torsion.push_back(d.convert_to<Int>());
  }
  g.free_rank = static_cast<Int>(relations.cols()) - nonzero;
  return g;
}

IntMatrix seifert_relation_matrix(const SeifertData& s) {
  validate(s);
  const std::size_t r = s.fibers.size();
  IntMatrix m(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    m(i, i) = s.fibers[i].alpha;
    m(i, r) = s.fibers[i].beta;
    m(r, i) = 1;
  }
  return m;
}

AbelianGroup h1_seifert_presentation(const SeifertData& s) {
  return cokernel(seifert_relation_matrix(s));
}

namespace {

AbelianGroup cyclic(Int n) {
  if (n == 0) return {1, {}};
  if (n < 0) n = -n;
  if (n == 1) return {};
  return {0, {n}};
}

}  // namespace

AbelianGroup h1(const Manifold& m) {
  return std::visit(
      [](const auto& x) -> AbelianGroup {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return {};
        } else if constexpr (std::is_same_v<T, S2xS1>) {
          return cyclic(0);
        } else if constexpr (std::is_same_v<T, RP3>) {
          return cyclic(2);
        } else if constexpr (std::is_same_v<T, Lens>) {
          return cyclic(x.params.p);
        } else if constexpr (std::is_same_v<T, SeifertOverS2>) {
          return h1_seifert_presentation(x.data);
        } else {
          // Block-diagonal relation matrix of the summands' normal forms.
          std::vector<AbelianGroup> parts;
          std::size_t gens = 0;
          for (const auto& s : x.summands) {
            parts.push_back(h1(s));
            gens += static_cast<std::size_t>(parts.back().free_rank) + parts.back().torsion.size();
          }
          IntMatrix rel(gens, gens);
          std::size_t k = 0;
          for (const auto& g : parts) {
            for (Int d : g.torsion) {
              rel(k, k) = d;
              ++k;
            }
            k += static_cast<std::size_t>(g.free_rank);
          }
          return cokernel(rel);
        }
      },
      m.variant());
}

std::string to_string(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank == 1) {
    out = "Z";
  } else if (g.free_rank > 1) {
    out = "Z^" + std::to_string(g.free_rank);
  }
  for (Int d : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace nmsflow
