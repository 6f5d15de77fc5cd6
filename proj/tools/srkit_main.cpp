// Batch front end: build and verify grid witnesses, run the exact degree
// oracles, generate pattern matrices, and evaluate the bound formulas. Every
// output file embeds a reproducibility manifest; repeated invocations with
// the same arguments produce byte-identical files.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "srkit/degree.hpp"
#include "srkit/errors.hpp"
#include "srkit/patternmatrix.hpp"
#include "srkit/rsbound.hpp"
#include "srkit/serialize.hpp"
#include "srkit/upp.hpp"
#include "srkit/version.hpp"

namespace {

using namespace srkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailed = 2;
constexpr int kExitUndecided = 3;

int report_exit(const PropertyReport& report) {
  if (report.all_pass()) {
    std::cout << report.items.size() << " checks: all passed\n";
    return kExitOk;
  }
  if (const CheckItem* f = report.first_failure()) {
    std::cout << (f->status == CheckStatus::Undecided ? "UNDECIDED: "
                                                      : "FAIL: ")
              << f->check << " at point " << f->point << " (aux " << f->aux
              << "), margin " << f->margin << "\n";
  }
  return report.any_fail() ? kExitPropertyFailed : kExitUndecided;
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::string outcome_string(const PropertyReport& report) {
  if (report.all_pass()) return "pass";
  return report.any_fail() ? "fail" : "undecided";
}

void emit(const std::string& out_path, const Json& j) {
  if (out_path.empty())
    std::cout << dump_canonical(j);
  else
    write_file(out_path, dump_canonical(j));
}

Json enclosure_json(const Enclosure& e) {
  Json j;
  j["lo"] = rational_json(e.lo);
  j["hi"] = rational_json(e.hi);
  return j;
}

Json polynomial_json(const Polynomial& p) {
  Json elems = Json::array();
  for (const auto& e : p.elems) {
    switch (p.basis) {
      case FnSpec::Kind::Explicit: elems.push_back(e.mask); break;
      case FnSpec::Kind::Symmetric: elems.push_back(e.j1); break;
      case FnSpec::Kind::BlockSymmetric:
        elems.push_back(Json::array({e.j1, e.j2}));
        break;
    }
  }
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(rational_json(c));
  Json j;
  j["elems"] = std::move(elems);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(rational_json(v));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{
      "srkit: exact dual witnesses, threshold/rational degree oracles, "
      "pattern matrices, and sign-rank bound formulas"};
  app.require_subcommand(1);

  unsigned precision = kDefaultBits;
  app.add_option("--precision", precision,
                 "starting enclosure precision in bits (doubles up to 4096)")
      ->capture_default_str();

  long n = 0, d = 1, big_n = 0;
  long d0 = -1, d1 = -1, log2n = 0;
  std::string out, fn_arg, eps_arg, beta_arg, gamma_arg, delta_frac_arg;
  std::string input_file, n_decimal, format = "csv";

  auto* c_build = app.add_subcommand("build", "construct a grid witness");
  c_build->add_option("--n", n, "grid radius (odd)")->required();
  c_build->add_option("--d", d, "pure-high-degree target")->required();
  c_build->add_option("-o,--output", out, "witness file");

  auto* c_verify =
      app.add_subcommand("verify", "re-verify a witness file's properties");
  c_verify->add_option("file", input_file, "witness file")->required();
  c_verify->add_option("-o,--output", out, "verification report file");

  auto* c_claims =
      app.add_subcommand("claims", "check the per-block inequalities");
  c_claims->add_option("--n", n, "grid radius (odd)")->required();
  c_claims->add_option("--d", d, "pure-high-degree target")->required();
  c_claims->add_option("-o,--output", out, "claims report file");

  auto* c_lift = app.add_subcommand("lift", "lift a witness to weight classes");
  c_lift->add_option("file", input_file, "witness file")->required();
  c_lift->add_option("-o,--output", out, "lifted function file");

  auto* c_psi = app.add_subcommand("psi", "build and verify the dual pair");
  c_psi->add_option("file", input_file, "witness file")->required();
  c_psi->add_option("-o,--output", out, "pair file");

  auto* c_thrdeg = app.add_subcommand("thrdeg", "threshold degree oracle");
  c_thrdeg->add_option("--fn", fn_arg, "builtin name:bits or spec file")
      ->required();
  c_thrdeg->add_option("-o,--output", out, "result file");

  auto* c_ratdeg =
      app.add_subcommand("ratdeg", "rational degree feasibility / search");
  c_ratdeg->add_option("--fn", fn_arg, "builtin name:bits or spec file")
      ->required();
  c_ratdeg->add_option("--eps", eps_arg, "margin p/q")->required();
  c_ratdeg->add_option("--d0", d0, "numerator-side degree (with --d1)");
  c_ratdeg->add_option("--d1", d1, "denominator-side degree (with --d0)");
  c_ratdeg->add_option("-o,--output", out, "result file");

  auto* c_pattern = app.add_subcommand("pattern", "pattern matrix export");
  c_pattern->add_option("--N", big_n, "row-side bits")->required();
  c_pattern->add_option("--n", n, "base function arity")->required();
  c_pattern->add_option("--fn", fn_arg, "base function")->required();
  c_pattern->add_option("--format", format, "csv or json")
      ->capture_default_str();
  c_pattern->add_option("-o,--output", out, "export file");

  auto* c_bound = app.add_subcommand("bound", "sign-rank bound formula");
  c_bound->add_option("--gamma", gamma_arg, "smoothness floor p/q")->required();
  c_bound->add_option("--delta-frac", delta_frac_arg, "exception fraction p/q")
      ->required();
  c_bound->add_option("--d", d, "orthogonality degree")->required();
  c_bound->add_option("--n", n, "base arity")->required();
  c_bound->add_option("--N", big_n, "matrix parameter")->required();
  c_bound->add_option("-o,--output", out, "report file");

  auto* c_pipeline =
      app.add_subcommand("pipeline", "composed-majority bound instantiation");
  c_pipeline->add_option("--log2n", log2n, "k with n = 2^k");
  c_pipeline->add_option("--n", n_decimal, "n as a decimal power of two");
  c_pipeline->add_option("-o,--output", out, "report file");

  auto* c_upp = app.add_subcommand("upp", "protocol validity check");
  c_upp->add_option("--n", n, "half input length (2n <= 16)")->required();
  c_upp->add_option("--beta", beta_arg, "tie-break probability p/q");
  c_upp->add_option("-o,--output", out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage or help text
    return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
  }
  const std::string command = command_line(argc, argv);

  int exit_code = kExitOk;
  try {
    if (c_build->parsed()) {
      WitnessCert cert = build_witness(witness_params(n, d, precision));
      cert.report = verify_witness(cert, precision);
      Json params;
      params["n"] = n;
      params["d"] = d;
      Json j = witness_json(
          cert, manifest_json(command, params, precision,
                              outcome_string(cert.report)));
      if (!out.empty()) write_file(out, dump_canonical(j));
      std::cout << "witness n=" << n << " d=" << d
                << " delta=" << cert.params.delta_int
                << " u_max=" << cert.params.u_max
                << " support=" << cert.R.support().size()
                << " checks=" << cert.report.items.size() << "\n";
      exit_code = report_exit(cert.report);
    } else if (c_verify->parsed()) {
      WitnessCert cert = witness_from_json(Json::parse(read_file(input_file)));
      const PropertyReport report = verify_witness(cert, precision);
      Json params;
      params["file"] = input_file;
      Json j;
      j["report"] = report_json(report);
      j["manifest"] = manifest_json(command, params, precision,
                                    outcome_string(report));
      emit(out, j);
      exit_code = report_exit(report);
    } else if (c_claims->parsed()) {
      const WitnessParams params = witness_params(n, d, precision);
      const PropertyReport report = verify_claims(params, precision);
      Json p;
      p["n"] = n;
      p["d"] = d;
      Json j;
      j["report"] = report_json(report);
      j["manifest"] =
          manifest_json(command, p, precision, outcome_string(report));
      emit(out, j);
      exit_code = report_exit(report);
    } else if (c_lift->parsed()) {
      WitnessCert cert = witness_from_json(Json::parse(read_file(input_file)));
      const SymFn lifted = lift_witness(cert);
      const PropertyReport report = verify_lift(cert, lifted, precision);
      Json p;
      p["file"] = input_file;
      Json j;
      j["symfn"] = symfn_json(lifted, cert.params.delta_int);
      j["report"] = report_json(report);
      j["manifest"] =
          manifest_json(command, p, precision, outcome_string(report));
      emit(out, j);
      exit_code = report_exit(report);
    } else if (c_psi->parsed()) {
      WitnessCert cert = witness_from_json(Json::parse(read_file(input_file)));
      const PsiPair pair = build_psi_pair(cert);
      const PsiVerifyResult result = verify_psi_pair(pair, precision);
      Json p;
      p["file"] = input_file;
      Json j;
      j["psi0"] = symfn_json(pair.psi0, pair.delta_int);
      j["psi1"] = symfn_json(pair.psi1, pair.delta_int);
      j["phd_target"] = pair.phd_target;
      j["orientation"] = result.orientation;
      j["report"] = report_json(result.report);
      j["manifest"] =
          manifest_json(command, p, precision, outcome_string(result.report));
      emit(out, j);
      exit_code = report_exit(result.report);
    } else if (c_thrdeg->parsed()) {
      const FnSpec f = fnspec_from_arg(fn_arg);
      const ThresholdDegreeResult result = threshold_degree(f);
      Json p;
      p["fn"] = fn_arg;
      Json j;
      j["fn"] = fnspec_json(f);
      j["degree"] = result.degree;
      j["primal"] = polynomial_json(result.primal);
      if (result.dual) {
        j["dual"] = rationals_json(result.dual->values);
        j["dual_phd"] = result.dual->phd;
        j["dual_report"] = report_json(verify_threshold_witness(f, *result.dual));
      }
      j["manifest"] = manifest_json(command, p, precision, "pass");
      emit(out, j);
      std::cout << "threshold degree: " << result.degree << "\n";
    } else if (c_ratdeg->parsed()) {
      const FnSpec f = fnspec_from_arg(fn_arg);
      const Rational eps = rational_from_string(eps_arg);
      Json p;
      p["fn"] = fn_arg;
      p["eps"] = eps_arg;
      Json j;
      j["fn"] = fnspec_json(f);
      j["eps"] = rational_json(eps);
      if (d0 >= 0 || d1 >= 0) {
        if (d0 < 0 || d1 < 0)
          throw UsageError("feasibility mode needs both --d0 and --d1");
        const RationalFeasibility r = rational_degree_feasible(f, d0, d1, eps);
        j["d0"] = d0;
        j["d1"] = d1;
        j["feasible"] = r.feasible;
        if (r.feasible) {
          j["p0"] = polynomial_json(*r.p0);
          j["p1"] = polynomial_json(*r.p1);
        } else {
          j["psi0"] = rationals_json(r.dual->psi0);
          j["psi1"] = rationals_json(r.dual->psi1);
        }
        j["certificate_report"] = report_json(r.certificate_report);
        std::cout << (r.feasible ? "feasible" : "infeasible") << "\n";
      } else {
        const long degree = rational_degree_search(f, eps);
        j["degree"] = degree;
        std::cout << "rational degree: " << degree << "\n";
      }
      j["manifest"] = manifest_json(command, p, precision, "pass");
      emit(out, j);
    } else if (c_pattern->parsed()) {
      const PatternMatrixSpec spec(big_n, n, fnspec_from_arg(fn_arg));
      Json p;
      p["N"] = big_n;
      p["n"] = n;
      p["fn"] = fn_arg;
      if (format == "csv") {
        const std::string csv = spec.dense_csv();
        if (out.empty())
          std::cout << csv;
        else
          write_file(out, csv);
      } else if (format == "json") {
        Json j;
        j["N"] = big_n;
        j["n"] = n;
        j["rows"] = spec.rows().get_str();
        j["cols"] = spec.cols().get_str();
        if (spec.rows() * spec.cols() <= Integer(1) << 20) {
          Json rows = Json::array();
          for (unsigned long r = 0; r < spec.rows().get_ui(); ++r) {
            Json row = Json::array();
            for (unsigned long c = 0; c < spec.cols().get_ui(); ++c)
              row.push_back(spec.entry(r, c));
            rows.push_back(std::move(row));
          }
          j["entries"] = std::move(rows);
        }
        j["manifest"] = manifest_json(command, p, precision, "pass");
        emit(out, j);
      } else {
        throw UsageError("format must be csv or json");
      }
    } else if (c_bound->parsed()) {
      BoundInputs inputs;
      inputs.gamma = Enclosure(rational_from_string(gamma_arg));
      inputs.delta_frac = rational_from_string(delta_frac_arg);
      inputs.d = d;
      inputs.n = n;
      inputs.N = big_n;
      const Enclosure result = rs_bound(inputs, precision);
      Json j;
      j["gamma"] = rational_json(inputs.gamma.lo);
      j["delta_frac"] = rational_json(inputs.delta_frac);
      j["d"] = inputs.d;
      j["n"] = inputs.n;
      j["N"] = inputs.N;
      j["log2_bound"] = enclosure_json(result);
      j["manifest"] = manifest_json(command, Json::object(), precision, "pass");
      emit(out, j);
    } else if (c_pipeline->parsed()) {
      PipelineBound result;
      if (!n_decimal.empty())
        result = pipeline_bound(Integer(n_decimal, 10), precision);
      else
        result = pipeline_bound_log2(log2n, precision);
      Json j;
      j["log2n"] = result.log2_n;
      j["d"] = result.d;
      j["log2_bound"] = enclosure_json(result.log2_bound);
      j["vacuous"] = result.vacuous;
      j["translated_slack"] = upp_translate(result.log2_bound).slack;
      j["manifest"] = manifest_json(command, Json::object(), precision, "pass");
      emit(out, j);
    } else if (c_upp->parsed()) {
      const Rational beta = beta_arg.empty() ? Rational(1) / (8 * Rational(n))
                                             : rational_from_string(beta_arg);
      const UppValidation v = upp_validate(n, beta);
      Json j;
      j["n"] = n;
      j["beta"] = rational_json(beta);
      j["pass"] = v.pass;
      j["worst_margin"] = rational_json(v.worst_margin);
      j["worst_class"] = v.worst_class;
      j["failing_classes"] = v.failing_classes;
      j["cost_bits"] = v.cost_bits;
      j["manifest"] = manifest_json(command, Json::object(), precision,
                                    v.pass ? "pass" : "fail");
      emit(out, j);
      if (!v.pass) {
        std::cout << "FAIL: majority agreement not strict on "
                  << v.failing_classes.size() << " weight class(es)\n";
        exit_code = kExitPropertyFailed;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input file (" << e.what() << ")\n";
    return kExitUsage;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "[srkit " << kArtifactVersion << "] finished in "
            << elapsed.count() << " ms\n";
  return exit_code;
}
