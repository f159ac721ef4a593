// Command-line front end: validate and classify generator-set instances,
// solve for the connecting element T, verify solutions, run the identity
// selftest, and generate seeded random instances.
//
// Exit codes: 0 success, 2 relation violation, 3 parse error,
// 4 solve/verify failure, 5 selftest failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "cliff/errors.hpp"
#include "cliff/instances.hpp"
#include "cliff/io.hpp"
#include "cliff/reynolds.hpp"
#include "cliff/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRelation = 2;
constexpr int kExitParse = 3;
constexpr int kExitSolve = 4;
constexpr int kExitSelftest = 5;

std::string classification_text(const cliff::BasisClassification& c) {
  switch (c.kind) {
    case cliff::BasisKind::VolumeBasis:
      return std::string("VolumeBasis(") + (c.sign > 0 ? "+1" : "-1") + ")";
    case cliff::BasisKind::ScalarCentral:
      return std::string("ScalarCentral(") + (c.sign > 0 ? "+1" : "-1") + ")";
    case cliff::BasisKind::ImaginaryCentral:
      return std::string("ImaginaryCentral(") + (c.sign > 0 ? "+i" : "-i") + ")";
  }
  return "?";
}

std::string case_text(int case_id) {
  return case_id == cliff::kEvenCase ? std::string("even") : std::to_string(case_id);
}

struct IoOptions {
  std::string input;
  double tolerance = 1e-9;
};

cliff::io::InstanceFile load_instance(const IoOptions& opt) {
  return cliff::io::instance_from_json(cliff::io::load_json_file(opt.input), opt.tolerance);
}

int cmd_validate(const IoOptions& opt) {
  const char* which = "gamma";
  try {
    const auto j = cliff::io::load_json_file(opt.input);
    // Validate the two sets one at a time so the failing set can be named.
    auto one = [&](const char* key) {
      cliff::io::json set = j;
      set.erase("gamma");
      set.erase("beta");
      set["generators"] = j.at(key);
      return cliff::io::generator_set_from_json(set, opt.tolerance);
    };
    const cliff::GeneratorSet gamma = one("gamma");
    which = "beta";
    const cliff::GeneratorSet beta = one("beta");
    std::cout << "gamma: valid, " << classification_text(cliff::classify_basis(gamma))
              << "\n";
    std::cout << "beta: valid, " << classification_text(cliff::classify_basis(beta)) << "\n";
    return kExitOk;
  } catch (const cliff::RelationViolation& e) {
    std::cerr << which << ": invalid, " << e.what() << "\n";
    return kExitRelation;
  } catch (const cliff::UnclassifiableVolume& e) {
    std::cerr << which << ": " << e.what() << "\n";
    return kExitRelation;
  }
}

int cmd_classify(const IoOptions& opt) {
  const auto inst = load_instance(opt);
  std::cout << "gamma: " << classification_text(cliff::classify_basis(inst.gamma)) << "\n";
  std::cout << "beta: " << classification_text(cliff::classify_basis(inst.beta)) << "\n";
  if ((inst.gamma.sig().n() & 1) == 0) {
    std::cout << "case: even\n";
  } else {
    const auto odd_case = cliff::classify_odd(inst.gamma, inst.beta);
    std::cout << "case: " << odd_case.id
              << ", central_factor: " << cliff::io::mv_to_json(odd_case.central).dump()
              << "\n";
  }
  return kExitOk;
}

int cmd_solve(const IoOptions& opt, const std::string& output) {
  const auto inst = load_instance(opt);
  const cliff::SolveResult result = cliff::solve(inst.gamma, inst.beta);
  cliff::io::write_json_file(output, cliff::io::solve_result_to_json(result));
  const auto candidate = cliff::io::solve_result_to_json(result).at("candidate");
  std::cout << "case: " << case_text(result.case_id) << ", candidate: " << candidate.dump()
            << ", residual: " << result.residual << "\n";
  return kExitOk;
}

int cmd_verify(const IoOptions& opt, const std::string& solution_path) {
  const auto inst = load_instance(opt);
  const auto sol = cliff::io::solution_from_json(cliff::io::load_json_file(solution_path),
                                                 inst.gamma.sig(), inst.gamma.kind());
  const double residual =
      cliff::verify_intertwiner(inst.gamma, inst.beta, sol.t, sol.central);
  const double limit = inst.gamma.kind().exact() ? 0.0 : inst.gamma.kind().tolerance;
  std::cout << "residual: " << residual << " (limit " << limit << ")\n";
  if (residual > limit) {
    std::cerr << "verification failed\n";
    return kExitSolve;
  }
  return kExitOk;
}

int cmd_selftest(int p, int q, const std::string& field, double tolerance,
                 std::uint64_t seed, int trials) {
  const cliff::Signature sig(p, q);
  const cliff::FieldKind kind{cliff::io::parse_field(field), tolerance};
  const cliff::SelftestReport report = cliff::run_selftest(sig, kind, seed, trials);
  for (const auto& entry : report.entries) {
    if (entry.pass) {
      std::cout << "PASS " << entry.name << "\n";
    } else {
      std::cout << "FAIL " << entry.name << ": " << entry.detail << "\n";
    }
  }
  if (!report.all_pass()) {
    const auto* first = report.first_failure();
    std::cerr << "selftest failed at '" << first->name << "': " << first->detail << "\n";
    return kExitSelftest;
  }
  return kExitOk;
}

int cmd_gen(int p, int q, const std::string& field, double tolerance, std::uint64_t seed,
            std::optional<int> target_case, long bound, const std::string& output) {
  const cliff::Signature sig(p, q);
  const cliff::FieldKind kind{cliff::io::parse_field(field), tolerance};
  const cliff::Instance inst = cliff::make_instance({sig, kind, seed, target_case, bound});

  cliff::io::write_json_file(output,
                             cliff::io::instance_to_json({inst.gamma, inst.beta}));

  cliff::io::json truth;
  truth["seed"] = seed;
  truth["case"] = inst.constructed_case == 0 ? cliff::io::json("even")
                                             : cliff::io::json(inst.constructed_case);
  truth["S"] = cliff::io::mv_to_json(inst.ground_truth);
  cliff::io::write_json_file(output + ".truth", truth);

  std::cout << "wrote " << output << " (case " << case_text(inst.constructed_case)
            << ", seed " << seed << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford algebra toolkit: classify generator-set pairs and compute "
               "the connecting element T"};
  app.require_subcommand(1);

  IoOptions io_opt;
  std::string output;
  std::string solution;
  int p = 0;
  int q = 0;
  std::string field = "real-exact";
  std::uint64_t seed = 0;
  int trials = 10;
  long bound = 3;
  int target_case = 0;

  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input", io_opt.input, "instance file")->required();
    sub->add_option("--tolerance", io_opt.tolerance,
                    "comparison tolerance (complex-float only)");
  };

  auto* validate = app.add_subcommand("validate", "check relations and classify each set");
  add_io(validate, true);

  auto* classify = app.add_subcommand("classify", "classify the pair without solving");
  add_io(classify, true);

  auto* solve = app.add_subcommand("solve", "compute the connecting element T");
  add_io(solve, true);
  solve->add_option("--output", output, "solution file")->required();

  auto* verify = app.add_subcommand("verify", "recheck a solution file");
  add_io(verify, true);
  verify->add_option("--solution", solution, "solution file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the identity suite");
  selftest->add_option("--p", p, "positive metric dimensions")->required();
  selftest->add_option("--q", q, "negative metric dimensions")->required();
  selftest->add_option("--field", field, "real-exact | complex-exact | complex-float");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--trials", trials, "number of random instances");
  add_io(selftest, false);

  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--p", p, "positive metric dimensions")->required();
  gen->add_option("--q", q, "negative metric dimensions")->required();
  gen->add_option("--field", field, "real-exact | complex-exact | complex-float");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--case", target_case, "target case 1..6 (odd n only)")
      ->check(CLI::Range(1, 6));
  gen->add_option("--bound", bound, "coefficient bound");
  gen->add_option("--output", output, "instance file to write")->required();
  add_io(gen, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(io_opt);
    if (classify->parsed()) return cmd_classify(io_opt);
    if (solve->parsed()) return cmd_solve(io_opt, output);
    if (verify->parsed()) return cmd_verify(io_opt, solution);
    if (selftest->parsed()) {
      return cmd_selftest(p, q, field, io_opt.tolerance, seed, trials);
    }
    if (gen->parsed()) {
      std::optional<int> target;
      if (gen->count("--case") > 0) target = target_case;
      return cmd_gen(p, q, field, io_opt.tolerance, seed, target, bound, output);
    }
  } catch (const cliff::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cliff::io::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cliff::RelationViolation& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitRelation;
  } catch (const cliff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolve;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolve;
  }
  return kExitOk;
}
