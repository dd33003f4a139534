#include "nmsflow/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "nmsflow/errors.hpp"

namespace nmsflow {

namespace {

Int abs_int(Int x) { return x < 0 ? -x : x; }

std::string pair_text(Int a, Int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int sign(Int x) { return (x > 0) - (x < 0); }

}  // namespace

FlowInvariant validate_invariant(Int l1, Int m1, Int l2, Int m2) {
  if (gcd(l2, m2) != 1) {
    throw InvalidQuadruple("non-coprime-pair-2", "pair (l2,m2) = " + pair_text(l2, m2) + " is not coprime");
  }
  if (l1 == 0 && m1 == 2) return {l1, m1, l2, m2, KnotKind::Inessential};
  if (gcd(l1, m1) != 1) {
    if (l1 == 0) {
      throw InvalidQuadruple("malformed-inessential-marker",
                             "pair (l1,m1) = " + pair_text(l1, m1) +
                                 " is neither coprime nor the inessential marker (0,2)");
    }
    throw InvalidQuadruple("non-coprime-pair-1", "pair (l1,m1) = " + pair_text(l1, m1) + " is not coprime");
  }
  return {l1, m1, l2, m2, KnotKind::Essential};
}

std::array<bool, 7> case_predicates(const FlowInvariant& c) {
  Int a1 = abs_int(c.l1), a2 = abs_int(c.l2);
  return {
      c.l1 == 0 && c.l2 != 0,
      c.l1 != 0 && c.l2 == 0,
      c.l1 == 0 && c.l2 == 0,
      a1 == 1 && a2 > 1,
      a2 == 1 && a1 > 1,
      checked_mul(a1, a2) == 1,
      a1 > 1 && a2 > 1,
  };
}

SeifertData intermediate_seifert(const FlowInvariant& c) {
  if (c.l1 == 0 || c.l2 == 0) {
    throw InvalidQuadruple("zero-multiplicity", "intermediate Seifert data needs l1 * l2 != 0");
  }
  auto fiber = [](Int l, Int m) {
    Int alpha = abs_int(l);
    return Fiber{alpha, mod_inverse(m, alpha)};
  };
  return {{{2, 1}, fiber(c.l1, c.m1), fiber(c.l2, c.m2)}};
}

ClassificationResult classify(const FlowInvariant& c) {
  // Re-validate: FlowInvariant is a plain aggregate.
  FlowInvariant v = validate_invariant(c.l1, c.m1, c.l2, c.m2);
  auto cases = case_predicates(v);
  ClassificationResult r;
  r.l_signs = {sign(v.l1), sign(v.l2)};
  if (v.l1 != 0 && v.l2 != 0) r.intermediate = intermediate_seifert(v);

  if (cases[0]) {
    r.case_number = 1;
    r.lens_before_rp3_sum = LensParams{v.l2, v.m2};
    r.manifold = sum_normalize({lens_canonical(v.l2, v.m2), RP3{}});
  } else if (cases[1]) {
    r.case_number = 2;
    r.lens_before_rp3_sum = LensParams{v.l1, v.m1};
    r.manifold = sum_normalize({lens_canonical(v.l1, v.m1), RP3{}});
  } else if (cases[2]) {
    r.case_number = 3;
    r.lens_before_rp3_sum = LensParams{0, 1};
    r.manifold = sum_normalize({S2xS1{}, RP3{}});
  } else if (cases[3]) {
    r.case_number = 4;
    r.manifold = lens_canonical(checked_add(checked_mul(2, v.m2), -v.l2), v.m2);
  } else if (cases[4]) {
    r.case_number = 5;
    r.manifold = lens_canonical(checked_add(checked_mul(2, v.m1), -v.l1), v.m1);
  } else if (cases[5]) {
    r.case_number = 6;
    r.manifold = Sphere{};
  } else {
    r.case_number = 7;
    r.manifold = seifert_space(*r.intermediate);
  }
  return r;
}

std::vector<FlowInvariant> valid_invariants(Int bound) {
  std::vector<FlowInvariant> out;
  for (Int l1 = -bound; l1 <= bound; ++l1)
    for (Int m1 = -bound; m1 <= bound; ++m1) {
      bool inessential = l1 == 0 && m1 == 2;
      if (!inessential && gcd(l1, m1) != 1) continue;
      for (Int l2 = -bound; l2 <= bound; ++l2)
        for (Int m2 = -bound; m2 <= bound; ++m2) {
          if (gcd(l2, m2) != 1) continue;
          out.push_back({l1, m1, l2, m2, inessential ? KnotKind::Inessential : KnotKind::Essential});
        }
    }
  return out;
}

std::vector<HomeomorphismClass> enumerate(Int bound) {
  std::map<Manifold, std::vector<ClassifiedInvariant>> by_form;
  for (const auto& inv : valid_invariants(bound)) {
    auto r = classify(inv);
    by_form[r.manifold].push_back({inv, std::move(r)});
  }

  // Distinct canonical forms can still be homeomorphic; merge them.
  std::vector<HomeomorphismClass> classes;
  for (auto& [form, members] : by_form) {
    HomeomorphismClass* target = nullptr;
    for (auto& cls : classes) {
      if (homeomorphic(cls.representative, form)) {
        target = &cls;
        break;
      }
    }
    if (target == nullptr) {
      classes.push_back({form, {}});
      target = &classes.back();
    }
    target->members.insert(target->members.end(), members.begin(), members.end());
  }
  for (auto& cls : classes) {
    std::sort(cls.members.begin(), cls.members.end(),
              [](const ClassifiedInvariant& a, const ClassifiedInvariant& b) {
                return a.invariant.quadruple() < b.invariant.quadruple();
              });
  }
  return classes;
}

}  // namespace nmsflow
