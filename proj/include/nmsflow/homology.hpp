#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nmsflow/arith.hpp"
#include "nmsflow/manifold.hpp"
#include "nmsflow/seifert_data.hpp"

namespace nmsflow {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Diagonal of the Smith normal form: min(rows, cols) entries d_1 | d_2 | ...,
/// all nonnegative, zeros last.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with
/// d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool finite() const { return free_rank == 0; }
  /// Order of a finite group; 0 for infinite groups.
  BigInt order() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of the relation matrix: generators are columns, relations rows.
AbelianGroup cokernel(const IntMatrix& relations);

/// Relation matrix of the standard presentation over S^2: generators
/// x_1..x_r, h; relations alpha_i x_i + beta_i h = 0 and sum x_i = 0.
IntMatrix seifert_relation_matrix(const SeifertData& s);

AbelianGroup h1_seifert_presentation(const SeifertData& s);

/// First homology; connected sums take the direct sum, renormalized to an
/// invariant-factor chain.
AbelianGroup h1(const Manifold& m);

/// "Z^r + Z/d1 + ...", "0" for the trivial group, "Z" for rank one.
std::string to_string(const AbelianGroup& g);

}  // namespace nmsflow
