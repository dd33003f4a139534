#include "nmsflow/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "nmsflow/classifier.hpp"
#include "nmsflow/errors.hpp"
#include "nmsflow/expr.hpp"
#include "nmsflow/homology.hpp"
#include "nmsflow/seifert.hpp"
#include "nmsflow/surgery.hpp"

namespace nmsflow {

std::size_t SelfcheckReport::hard_failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures;
  return n;
}

namespace {

constexpr std::size_t kMaxSamples = 5;

std::string quad_text(const FlowInvariant& c) {
  std::ostringstream os;
  os << "(" << c.l1 << "," << c.m1 << "," << c.l2 << "," << c.m2 << ")";
  return os.str();
}

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

// Z/a + Z/b as an invariant-factor chain, written out by hand.
AbelianGroup sum_of_cyclics(Int a, Int b) {
  AbelianGroup g;
  std::vector<Int> factors;
  for (Int n : {a, b}) {
    if (n == 0) {
      ++g.free_rank;
    } else if (n != 1 && n != -1) {
      factors.push_back(n < 0 ? -n : n);
    }
  }
  if (factors.size() == 2) {
    Int d = gcd(factors[0], factors[1]);
    Int l = factors[0] / d * factors[1];
    factors.clear();
    if (d > 1) factors.push_back(d);
    factors.push_back(l);
  }
  g.torsion = factors;
  return g;
}

BigInt seifert_order_formula(const SeifertData& s) {
  BigInt total = 0;
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    BigInt term = s.fibers[i].beta;
    for (std::size_t j = 0; j < s.fibers.size(); ++j)
      if (j != i) term *= s.fibers[j].alpha;
    total += term;
  }
  return abs(total);
}

}  // namespace

SelfcheckReport run_selfcheck(Int bound) {
  SelfcheckReport report;
  report.bound = bound;

  std::vector<ClassifiedInvariant> outputs;
  for (const auto& inv : valid_invariants(bound)) outputs.push_back({inv, classify(inv)});

  std::vector<Manifold> forms;
  {
    std::set<Manifold> seen;
    for (const auto& o : outputs) seen.insert(o.result.manifold);
    forms.assign(seen.begin(), seen.end());
  }

  {
    Checker c("case predicates partition the valid quadruples");
    for (const auto& o : outputs) {
      auto p = case_predicates(o.invariant);
      auto fired = std::count(p.begin(), p.end(), true);
      c.expect(fired == 1, [&] { return quad_text(o.invariant) + " fires " + std::to_string(fired); });
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("classify is deterministic");
    for (const auto& o : outputs) {
      c.expect(classify(o.invariant) == o.result, [&] { return quad_text(o.invariant); });
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("H1 matches the case formulas");
    for (const auto& o : outputs) {
      const auto& inv = o.invariant;
      AbelianGroup got = h1(o.result.manifold);
      bool ok = false;
      switch (o.result.case_number) {
        case 1: ok = got == sum_of_cyclics(inv.l2, 2); break;
        case 2: ok = got == sum_of_cyclics(inv.l1, 2); break;
        case 3: ok = got == sum_of_cyclics(0, 2); break;
        case 4: ok = got == sum_of_cyclics(2 * inv.m2 - inv.l2, 1); break;
        case 5: ok = got == sum_of_cyclics(2 * inv.m1 - inv.l1, 1); break;
        case 6: ok = got.trivial(); break;
        case 7:
          ok = got.order() ==
               seifert_order_formula(o.result.manifold.as<SeifertOverS2>().data);
          break;
      }
      c.expect(ok, [&] { return quad_text(inv) + " gives " + to_string(got); });
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("render/parse round trip");
    for (const auto& m : forms) {
      c.expect(parse_manifold(render(m)) == m, [&] { return render(m); });
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("homeomorphic is reflexive, symmetric and preserves H1");
    std::vector<AbelianGroup> groups;
    for (const auto& m : forms) groups.push_back(h1(m));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      c.expect(homeomorphic(forms[i], forms[i]), [&] { return render(forms[i]); });
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        bool ab = homeomorphic(forms[i], forms[j]);
        bool ba = homeomorphic(forms[j], forms[i]);
        c.expect(ab == ba && (!ab || groups[i] == groups[j]),
                 [&] { return render(forms[i]) + " vs " + render(forms[j]); });
      }
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("case 7 outputs are prime and not lens spaces");
    std::vector<Manifold> lenses;
    for (const auto& m : forms)
      if (!m.is<SeifertOverS2>() && !m.is<ConnectedSum>()) lenses.push_back(m);
    std::set<Manifold> case7;
    for (const auto& o : outputs)
      if (o.result.case_number == 7) case7.insert(o.result.manifold);
    for (const auto& m : case7) {
      const auto& s = m.as<SeifertOverS2>().data;
      bool ok = is_prime(m) && not_lens_obstruction(s);
      for (const auto& l : lenses) ok = ok && !homeomorphic(m, l);
      c.expect(ok, [&] { return render(m); });
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("lens canonical form decides lens equivalence");
    const Int r = std::max<Int>(bound, 12);
    std::vector<LensParams> params;
    for (Int p = -r; p <= r; ++p)
      for (Int q = -r; q <= r; ++q)
        if (valid_lens_params({p, q})) params.push_back({p, q});
    for (const auto& a : params) {
      Manifold ca = lens_canonical(a);
      c.expect(canonicalize(ca) == ca, [&] { return render(ca) + " not idempotent"; });
      for (const auto& b : params) {
        bool eq = lens_equivalent(a, b);
        c.expect(eq == (ca == lens_canonical(b)), [&] {
          return "L(" + std::to_string(a.p) + "," + std::to_string(a.q) + ") vs L(" +
                 std::to_string(b.p) + "," + std::to_string(b.q) + ")";
        });
      }
    }
    report.checks.push_back(c.done());
  }
  {
    Checker c("framing inversion is an involution up to equivalence");
    for (Int beta = -50; beta <= 50; ++beta)
      for (Int alpha = -50; alpha <= 50; ++alpha) {
        Framing f{beta, alpha};
        if (!valid_framing(f)) continue;
        bool ok = gluing_matrix(f).in_sl2() &&
                  framing_equivalent(invert_framing(invert_framing(f)), f);
        c.expect(ok, [&] { return "(" + std::to_string(beta) + "," + std::to_string(alpha) + ")"; });
      }
    auto [g, f] = saddle_framing();
    c.expect(g.in_sl2() && framing_equivalent(invert_framing(f), {1, 2}),
             [] { return std::string("saddle framing"); });
    report.checks.push_back(c.done());
  }
  {
    Checker c("Seifert normalization preserves Euler number and H1");
    for (Int a1 = 1; a1 <= 9; ++a1)
      for (Int b1 = -9; b1 <= 9; ++b1)
        for (Int a2 = 1; a2 <= 9; ++a2)
          for (Int b2 = -9; b2 <= 9; ++b2) {
            if (gcd(a1, b1) != 1 || gcd(a2, b2) != 1) continue;
            SeifertData s{{{a1, b1}, {a2, b2}}};
            SeifertData n = seifert_normalize(s);
            bool ok = euler_number(s) == euler_number(n) && seifert_normalize(n) == n &&
                      h1_seifert_presentation(s) == h1_seifert_presentation(n) &&
                      seifert_isomorphic(s, n);
            c.expect(ok, [&] { return render_fibers(s); });
          }
    report.checks.push_back(c.done());
  }

  // Convention-sensitive comparisons.
  {
    Diagnostic d{"case 4/5 formula vs lens conversion of the intermediate Seifert data", 0, 0, {}};
    for (const auto& o : outputs) {
      if (o.result.case_number != 4 && o.result.case_number != 5) continue;
      Manifold via_seifert = seifert_to_lens(*o.result.intermediate);
      ++d.compared;
      if (homeomorphic(via_seifert, o.result.manifold)) {
        ++d.agreements;
      } else if (d.samples.size() < kMaxSamples) {
        d.samples.push_back(quad_text(o.invariant) + ": theorem " + render(o.result.manifold) +
                            ", conversion " + render(via_seifert));
      }
    }
    report.diagnostics.push_back(d);
  }
  {
    Diagnostic d{"two-fiber lens conversion vs presentation H1 order", 0, 0, {}};
    for (Int a1 = 2; a1 <= 9; ++a1)
      for (Int b1 = 1; b1 < a1; ++b1)
        for (Int a2 = 2; a2 <= 9; ++a2)
          for (Int b2 = 1; b2 < a2; ++b2) {
            if (gcd(a1, b1) != 1 || gcd(a2, b2) != 1) continue;
            SeifertData s{{{a1, b1}, {a2, b2}}};
            AbelianGroup via_lens = h1(seifert_to_lens(s));
            AbelianGroup presented = h1_seifert_presentation(s);
            ++d.compared;
            if (via_lens.order() == presented.order()) {
              ++d.agreements;
            } else if (d.samples.size() < kMaxSamples) {
              d.samples.push_back(render_fibers(s) + ": conversion " + to_string(via_lens) +
                                  ", presentation " + to_string(presented));
            }
          }
    report.diagnostics.push_back(d);
  }
  {
    Diagnostic d{"prime exception tuple vs H1(RP3 # RP3)", 0, 0, {}};
    AbelianGroup target = h1(sum_normalize({RP3{}, RP3{}}));
    for (const SeifertData& s : {SeifertData{{{2, 1}, {2, 1}, {2, 1}, {2, 1}}},
                                 SeifertData{{{2, 1}, {2, 1}, {2, -1}, {2, -1}}}}) {
      AbelianGroup g = h1_seifert_presentation(s);
      ++d.compared;
      if (g == target) ++d.agreements;
      d.samples.push_back("SFS(S2; " + render_fibers(s) + "): " + to_string(g) + ", RP3 # RP3: " +
                          to_string(target));
    }
    report.diagnostics.push_back(d);
  }
  {
    Diagnostic d{"case 7 Seifert class under the adjacent beta representative", 0, 0, {}};
    for (const auto& o : outputs) {
      if (o.result.case_number != 7) continue;
      SeifertData shifted = *o.result.intermediate;
      shifted.fibers[1].beta += shifted.fibers[1].alpha;
      ++d.compared;
      if (seifert_isomorphic(*o.result.intermediate, shifted)) {
        ++d.agreements;
      } else if (d.samples.size() < kMaxSamples) {
        std::ostringstream os;
        os << quad_text(o.invariant) << ": Euler " << euler_number(*o.result.intermediate)
           << " vs " << euler_number(shifted);
        d.samples.push_back(os.str());
      }
    }
    report.diagnostics.push_back(d);
  }
  return report;
}

std::string format_report(const SelfcheckReport& r) {
  std::ostringstream os;
  os << "selfcheck bound " << r.bound << "\n\nHARD INVARIANTS\n";
  for (const auto& c : r.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked";
    if (!c.passed()) os << ", " << c.failures << " failed, first: " << c.first_failure;
    os << ")\n";
  }
  os << "\nDIAGNOSTICS (convention-sensitive, not failures)\n";
  for (const auto& d : r.diagnostics) {
    os << "NOTE " << d.name << ": " << d.agreements << "/" << d.compared << " agree\n";
    for (const auto& s : d.samples) os << "     " << s << "\n";
  }
  os << "\n" << r.hard_failures() << " hard failures\n";
  return os.str();
}

}  // namespace nmsflow
