// nmsflow: ambient manifolds of non-singular Morse-Smale flows with a single
// twisted saddle orbit.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nmsflow/classifier.hpp"
#include "nmsflow/errors.hpp"
#include "nmsflow/expr.hpp"
#include "nmsflow/homology.hpp"
#include "nmsflow/seifert.hpp"
#include "nmsflow/selfcheck.hpp"

using nlohmann::json;
using namespace nmsflow;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitInvalidInvariant = 2;
constexpr int kExitSelfcheck = 3;

json group_json(const AbelianGroup& g) {
  return json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

json fibers_json(const SeifertData& s) {
  json out = json::array();
  for (const auto& f : s.fibers) out.push_back({f.alpha, f.beta});
  return out;
}

json classify_json(const FlowInvariant& inv, const ClassificationResult& r) {
  return json{
      {"input", inv.quadruple()},
      {"kind", inv.kind == KnotKind::Essential ? "essential" : "inessential"},
      {"case", r.case_number},
      {"canonical", render(r.manifold)},
      {"h1", group_json(h1(r.manifold))},
      {"prime", is_prime(r.manifold)},
      {"intermediate_seifert", r.intermediate ? fibers_json(*r.intermediate) : json(nullptr)},
  };
}

int run_classify(const std::vector<Int>& q, bool as_json) {
  FlowInvariant inv;
  try {
    inv = validate_invariant(q[0], q[1], q[2], q[3]);
  } catch (const InvalidQuadruple& e) {
    std::cerr << "invalid flow invariant [" << e.rule() << "]: " << e.what() << "\n";
    return kExitInvalidInvariant;
  }
  auto r = classify(inv);
  if (as_json) {
    std::cout << classify_json(inv, r).dump() << "\n";
    return 0;
  }
  std::cout << "case " << r.case_number << ": " << render(r.manifold) << "\n";
  std::cout << "kind: " << (inv.kind == KnotKind::Essential ? "essential" : "inessential") << "\n";
  std::cout << "H1: " << to_string(h1(r.manifold)) << "\n";
  std::cout << "prime: " << (is_prime(r.manifold) ? "true" : "false") << "\n";
  if (r.intermediate) std::cout << "intermediate Seifert data: " << render_fibers(*r.intermediate) << "\n";
  return 0;
}

int run_enumerate(Int bound, bool group, bool as_json) {
  auto classes = enumerate(bound);
  if (as_json) {
    json out = json::array();
    for (const auto& cls : classes) {
      json members = json::array();
      for (const auto& m : cls.members) members.push_back(classify_json(m.invariant, m.result));
      out.push_back({{"manifold", render(cls.representative)}, {"members", members}});
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& cls : classes) {
    if (group) {
      std::cout << render(cls.representative) << "  [" << cls.members.size() << " quadruples]\n";
      for (const auto& m : cls.members) {
        auto q = m.invariant.quadruple();
        std::cout << "  (" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ") case "
                  << m.result.case_number << "\n";
      }
    } else {
      for (const auto& m : cls.members) {
        auto q = m.invariant.quadruple();
        std::cout << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\tcase "
                  << m.result.case_number << "\t" << render(m.result.manifold) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ambient 3-manifolds of NMS flows with one twisted saddle orbit"};
  app.require_subcommand(1);

  std::vector<Int> quad;
  bool classify_as_json = false;
  auto* cmd_classify = app.add_subcommand("classify", "Classify a flow invariant l1 m1 l2 m2");
  cmd_classify->add_option("quadruple", quad, "l1 m1 l2 m2")->expected(4)->required();
  cmd_classify->add_flag("--json", classify_as_json, "Emit JSON");

  std::string expr_a, expr_b;
  auto* cmd_homeo = app.add_subcommand("homeo", "Decide whether two manifolds are homeomorphic");
  cmd_homeo->add_option("expr1", expr_a)->required();
  cmd_homeo->add_option("expr2", expr_b)->required();

  std::string expr_h1;
  bool h1_as_json = false;
  auto* cmd_h1 = app.add_subcommand("h1", "First homology of a manifold expression");
  cmd_h1->add_option("expr", expr_h1)->required();
  cmd_h1->add_flag("--json", h1_as_json, "Emit JSON");

  Int enum_bound = 3;
  bool enum_group = false;
  bool enum_as_json = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "Classify every quadruple up to a bound");
  cmd_enum->add_option("--bound", enum_bound, "Maximum |entry|")->check(CLI::PositiveNumber);
  cmd_enum->add_flag("--group", enum_group, "Group by homeomorphism class");
  cmd_enum->add_flag("--json", enum_as_json, "Emit JSON");

  Int check_bound = 6;
  auto* cmd_check = app.add_subcommand("selfcheck", "Run the cross-validation suite");
  cmd_check->add_option("--bound", check_bound, "Maximum |entry|")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*cmd_classify) return run_classify(quad, classify_as_json);
    if (*cmd_homeo) {
      bool eq = homeomorphic(parse_manifold(expr_a), parse_manifold(expr_b));
      std::cout << (eq ? "true" : "false") << "\n";
      return 0;
    }
    if (*cmd_h1) {
      auto g = h1(parse_manifold(expr_h1));
      if (h1_as_json) {
        std::cout << group_json(g).dump() << "\n";
      } else {
        std::cout << to_string(g) << "\n";
      }
      return 0;
    }
    if (*cmd_enum) return run_enumerate(enum_bound, enum_group, enum_as_json);
    if (*cmd_check) {
      auto report = run_selfcheck(check_bound);
      std::cout << format_report(report);
      return report.ok() ? 0 : kExitSelfcheck;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "invalid parameters [" << e.rule() << "]: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
