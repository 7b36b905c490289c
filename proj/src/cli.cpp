#include "rankone/cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "rankone/assign.hpp"
#include "rankone/io.hpp"
#include "rankone/jordan.hpp"
#include "rankone/oracle.hpp"

namespace rankone::cli {

namespace {

using io::json;

template <ExactField K>
struct Problem {
  K field;
  Mat<K> a;
  Poly<K> q;
};

template <ExactField K>
Problem<K> materialize(const K& k, const io::ProblemFile& file) {
  Problem<K> p{k, io::parse_matrix(k, file.matrix), io::parse_poly(k, file.target)};
  if (!p.q.is_monic() || *p.q.degree() != static_cast<std::size_t>(p.a.rows())) {
    throw ParseError("target must be monic of degree n");
  }
  return p;
}

template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime_field()) return fn(PrimeField(spec));
  return fn(RationalField{});
}

int check(const io::ProblemFile& file, std::ostream& out, std::ostream& err) {
  return with_field(file.field, [&](const auto& k) {
    const auto p = materialize(k, file);
    const auto report = feasibility(eigen_structure(k, p.a), p.q);
    out << io::report_to_json(k, report).dump() << '\n';
    if (!report.verdict) {
      err << "infeasible: the target violates the multiplicity bound\n";
      return kInfeasible;
    }
    return kOk;
  });
}

int solve(const io::ProblemFile& file, bool dump_jordan, const std::string& out_path, std::ostream& out,
          std::ostream& err) {
  return with_field(file.field, [&](const auto& k) {
    const auto p = materialize(k, file);
    const auto jd = jordan_basis(k, p.a);

    json doc = {{"field", file.field.name()}};
    if (dump_jordan) doc["jordan"] = io::jordan_to_json(k, jd);

    int code = kOk;
    try {
      const auto pert = construct_general(k, p.a, p.q, jd);
      const auto check = verify_assignment(k, p.a, pert, p.q);
      doc.update(io::perturbation_to_json(k, pert));
      doc["rank"] = check.rank;
      doc["verification"] = check.pass ? "pass" : "fail";
      if (!check.pass) {
        err << "verification failed: " << check.failure << '\n';
        code = kVerificationFailed;
      }
    } catch (const Infeasible<std::decay_t<decltype(k)>>& e) {
      doc["feasibility"] = io::report_to_json(k, e.report());
      err << "infeasible: " << e.what() << '\n';
      code = kInfeasible;
    }

    if (out_path.empty()) {
      out << doc.dump() << '\n';
    } else {
      std::ofstream f(out_path);
      if (!f) {
        err << "cannot write '" << out_path << "'\n";
        return static_cast<int>(kParseError);
      }
      f << doc.dump(2) << '\n';
    }
    return code;
  });
}

int certify(std::size_t n, std::uint64_t p, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  const PrimeField k(FieldSpec::prime(p));
  const auto reps = jordan_representatives(k, n);
  std::size_t disagreements = 0;
  for (const auto& rep : reps) {
    const auto report = certify_representative(k, rep, budget);
    if (!report.agree) ++disagreements;
    out << io::oracle_report_to_json(report).dump() << '\n';
    out.flush();
  }
  err << reps.size() << " Jordan representatives over F_" << p << " with n = " << n << ", " << disagreements
      << " disagreements\n";
  return disagreements == 0 ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-one characteristic polynomial assignment", "rankone"};
  app.require_subcommand(1);

  std::string problem_path;
  bool dump_jordan = false;
  std::string out_path;
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t budget = kDefaultBudget;

  auto* check_cmd = app.add_subcommand("check", "Decide whether a rank-one witness exists");
  check_cmd->add_option("file", problem_path, "Problem file (JSON)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Construct and verify a rank-one witness");
  solve_cmd->add_option("file", problem_path, "Problem file (JSON)")->required();
  solve_cmd->add_flag("--dump-jordan", dump_jordan, "Include the Jordan decomposition of A");
  solve_cmd->add_option("--out", out_path, "Write the result to this file instead of stdout");

  auto* certify_cmd = app.add_subcommand("certify", "Brute-force check of the feasibility criterion over F_p");
  certify_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(1, 16));
  certify_cmd->add_option("--p", p, "Prime characteristic")->required();
  certify_cmd->add_option("--budget", budget, "Maximum number of (v, w) pairs per matrix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (check_cmd->parsed()) return check(io::load_problem(problem_path), out, err);
    if (solve_cmd->parsed()) return solve(io::load_problem(problem_path), dump_jordan, out_path, out, err);
    return certify(n, p, budget, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotSplit& e) {
    err << "not split: " << e.what() << '\n';
    return kNotSplit;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const AssertionFailure& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace rankone::cli
