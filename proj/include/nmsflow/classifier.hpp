#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nmsflow/arith.hpp"
#include "nmsflow/manifold.hpp"
#include "nmsflow/seifert_data.hpp"

namespace nmsflow {

enum class KnotKind { Essential, Inessential };

/// Validated flow invariant (l1, m1, l2, m2). (l1, m1) belongs to the
/// repelling side, (l2, m2) to the attracting side.
struct FlowInvariant {
  Int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
  KnotKind kind = KnotKind::Essential;

  std::array<Int, 4> quadruple() const { return {l1, m1, l2, m2}; }
  auto operator<=>(const FlowInvariant&) const = default;
};

/// Essential: both pairs coprime. Inessential: (l1, m1) = (0, 2) and
/// (l2, m2) coprime. Anything else throws InvalidQuadruple.
FlowInvariant validate_invariant(Int l1, Int m1, Int l2, Int m2);

struct ClassificationResult {
  int case_number = 0;
  Manifold manifold;
  /// Present iff l1 * l2 != 0.
  std::optional<SeifertData> intermediate;
  /// The lens summand's raw parameters in cases 1-3.
  std::optional<LensParams> lens_before_rp3_sum;
  /// Signs of l1, l2 (the multiplicities use |l_i|).
  std::array<int, 2> l_signs{0, 0};

  bool operator==(const ClassificationResult&) const = default;
};

/// The seven case conditions, each evaluated on its own.
std::array<bool, 7> case_predicates(const FlowInvariant& c);

/// Ambient manifold of the flow with invariant c.
ClassificationResult classify(const FlowInvariant& c);

/// [(2,1), (|l1|, beta_1), (|l2|, beta_2)] with beta_i the inverse of m_i
/// modulo |l_i| taken in (0, |l_i|) (0 when |l_i| = 1). Not normalized.
SeifertData intermediate_seifert(const FlowInvariant& c);

/// All valid quadruples with every entry bounded by `bound` in absolute
/// value, in lexicographic order of (l1, m1, l2, m2).
std::vector<FlowInvariant> valid_invariants(Int bound);

struct ClassifiedInvariant {
  FlowInvariant invariant;
  ClassificationResult result;
};

struct HomeomorphismClass {
  Manifold representative;
  std::vector<ClassifiedInvariant> members;
};

/// Classifies every valid quadruple up to `bound` and groups the results by
/// homeomorphism. Groups are ordered by representative, members by input.
std::vector<HomeomorphismClass> enumerate(Int bound);

}  // namespace nmsflow
