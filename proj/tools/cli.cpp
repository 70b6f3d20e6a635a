#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "ibcq/adversary.hpp"
#include "ibcq/circuits.hpp"
#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"
#include "ibcq/info.hpp"
#include "ibcq/instances.hpp"
#include "ibcq/perr.hpp"
#include "ibcq/qsim.hpp"
#include "ibcq/serialize.hpp"

#ifndef IBCQ_VERSION
#define IBCQ_VERSION "0.0.0"
#endif

namespace ibcq::cli {
namespace {

namespace fs = std::filesystem;

// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string line(const std::string& s) { return s + "\n"; }

Design design_arg(const std::string& text) {
  if (!text.empty() && text.front() != '[' && fs::is_regular_file(text)) {
    return design_from_json(read_json_file(text));
  }
  return Design(parse_real_list(text));
}

std::vector<double> nonempty_list(const std::string& text, const char* what) {
  std::vector<double> v = parse_real_list(text);
  if (v.empty()) {
    throw ValidationError(std::string(what) + " list is empty");
  }
  return v;
}

std::string complexity_table(const std::vector<double>& ls, const std::vector<double>& epss, double cost) {
  std::string csv = "L,eps,m,comp,m_3eps,qubit_lb\n";
  for (double l : ls) {
    for (double eps : epss) {
      csv += format_real(l) + "," + format_real(eps) + "," + std::to_string(m_eps(l, eps)) + "," +
             format_real(query_complexity(l, eps, cost)) + "," + std::to_string(m_eps(l, 3.0 * eps)) + "," +
             format_real(qubit_lower_bound(l, eps, cost)) + "\n";
    }
  }
  return csv;
}

struct HarnessSummary {
  std::string csv;
  std::size_t failures = 0;
};

HarnessSummary extraction_harness(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  HarnessSummary s;
  s.csv = "trial,truth,eps,value,error,pass\n";
  for (std::size_t i = 0; i < trials; ++i) {
    const PlantedInstance inst = planted_instance(rng);
    const Extraction ex = extract(inst.dist, inst.eps);
    const double err = std::abs(ex.value - inst.truth);
    const bool pass = err <= 3.0 * inst.eps + 1e-12 * std::max(1.0, std::abs(inst.truth));
    s.failures += pass ? 0 : 1;
    s.csv += std::to_string(i) + "," + format_real(inst.truth) + "," + format_real(inst.eps) + "," +
             format_real(ex.value) + "," + format_real(err) + "," + (pass ? "1" : "0") + "\n";
  }
  return s;
}

HarnessSummary setform_harness(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  HarnessSummary s;
  s.csv = "trial,outcomes,truth,greedy,setform,pass\n";
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t m = 1 + rng.below(12);
    const OutcomeDistribution d = random_distribution(m, rng);
    const double truth = rng.uniform(-1.0, 1.0);
    const double greedy = local_error(d, truth);
    const double brute = local_error_setform(d, truth);
    const bool pass = std::abs(greedy - brute) <= 1e-12;
    s.failures += pass ? 0 : 1;
    s.csv += std::to_string(i) + "," + std::to_string(m) + "," + format_real(truth) + "," + format_real(greedy) +
             "," + format_real(brute) + "," + (pass ? "1" : "0") + "\n";
  }
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worst-case integration complexity and quantum query simulation"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("ibcq ") + IBCQ_VERSION + " (schema " +
                                        std::to_string(kSchemaVersion) + ")");

  std::function<int()> action;
  std::string out_path;
  std::string format = "plain";
  int max_qubits = kDefaultMaxQubits;

  auto add_out = [&](CLI::App* sub, const char* help) { sub->add_option("--out", out_path, help); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  };

  // radius
  std::string design_text;
  std::string data_text;
  double lipschitz = 1.0;
  auto* radius = app.add_subcommand("radius", "Radius of information for a design (worst case, or for given data)");
  radius->add_option("--design", design_text, "Design points: comma list, JSON array, or JSON file")->required();
  radius->add_option("--L", lipschitz, "Lipschitz bound")->required();
  radius->add_option("--data", data_text, "Observed values y_f; default is the worst case y = 0");
  add_format(radius);
  add_out(radius, "Write the report here instead of stdout");
  radius->callback([&] {
    action = [&] {
      const Design d = design_arg(design_text);
      const DataVector y = data_text.empty() ? DataVector(d.size(), 0.0) : parse_real_list(data_text);
      const RadiusReport r = interval_h(envelopes(d, y, lipschitz));
      emit(out_path, format == "json" ? dump_json(to_json(r)) : line(format_real(r.radius)), out);
      return kOk;
    };
  });

  // design
  std::size_t design_n = 1;
  auto* design = app.add_subcommand("design", "Optimal (midpoint) design of n points");
  design->add_option("--n", design_n, "Number of points")->required();
  add_out(design, "Write the JSON array here instead of stdout");
  design->callback([&] {
    action = [&] {
      emit(out_path, line(to_json(optimal_design(design_n)).dump()), out);
      return kOk;
    };
  });

  // meps
  double eps = 0.0;
  auto* meps = app.add_subcommand("meps", "Minimal number of evaluations m(eps) for the Lipschitz class");
  meps->add_option("--L", lipschitz, "Lipschitz bound")->required();
  meps->add_option("--eps", eps, "Target worst-case error")->required();
  meps->callback([&] {
    action = [&] {
      out << m_eps(lipschitz, eps) << "\n";
      return kOk;
    };
  });

  // complexity-table
  std::string l_list;
  std::string eps_list;
  double cost = 1.0;
  auto* table = app.add_subcommand("complexity-table", "CSV of m(eps), comp(eps), m(3 eps) and the qubit bound");
  table->add_option("--L", l_list, "Lipschitz bounds (comma list)")->required();
  table->add_option("--eps", eps_list, "Accuracies (comma list)")->required();
  table->add_option("--c", cost, "Cost per query");
  add_out(table, "Write the CSV here instead of stdout");
  table->callback([&] {
    action = [&] {
      const std::string csv =
          complexity_table(nonempty_list(l_list, "L"), nonempty_list(eps_list, "eps"), cost);
      emit(out_path, csv, out);
      if (!out_path.empty()) out << "wrote " << out_path << "\n";
      return kOk;
    };
  });

  // fooling-pair
  auto* pair = app.add_subcommand("fooling-pair", "Adversary pair +-L min_i |x - t_i| for a design");
  pair->add_option("--design", design_text, "Design points")->required();
  pair->add_option("--L", lipschitz, "Lipschitz bound")->required();
  add_out(pair, "Write the pair JSON here instead of stdout");
  pair->callback([&] {
    action = [&] {
      const FoolingPair fp = fooling_pair(design_arg(design_text), lipschitz);
      emit(out_path, dump_json(to_json(fp)), out);
      if (!out_path.empty()) out << "gap " << format_real(fp.gap) << "\n";
      return kOk;
    };
  });

  // foil
  std::string quad_path;
  auto* foil_cmd = app.add_subcommand("foil", "Certified worst-case error lower bound for a linear quadrature");
  foil_cmd->add_option("--quadrature", quad_path, "Quadrature JSON {\"design\":[...],\"weights\":[...]}")->required();
  foil_cmd->add_option("--L", lipschitz, "Lipschitz bound")->required();
  foil_cmd->callback([&] {
    action = [&] {
      out << format_real(foil(quadrature_from_json(read_json_file(quad_path)), lipschitz)) << "\n";
      return kOk;
    };
  });

  // simulate
  std::string alg_path;
  std::string f_path;
  auto* simulate = app.add_subcommand("simulate", "Run an algorithm on a function and write its outcome distribution");
  simulate->add_option("--alg", alg_path, "AlgorithmSpec JSON")->required();
  simulate->add_option("--f", f_path, "FunctionSpec JSON")->required();
  simulate->add_option("--max-qubits", max_qubits, "Dense simulation cap");
  add_out(simulate, "Write the CSV here instead of stdout");
  simulate->callback([&] {
    action = [&] {
      const AlgorithmSpec a = algorithm_from_json(read_json_file(alg_path));
      const FunctionSpec f = function_from_json(read_json_file(f_path));
      const RunResult r = run(a, f, max_qubits);
      emit(out_path, distribution_to_csv(measure(r.state, a)), out);
      if (!out_path.empty()) {
        out << "nu " << a.nu << " queries " << r.queries << " evaluations " << r.evaluations << " outcomes "
            << a.outcome_count() << "\n";
      }
      return kOk;
    };
  });

  // error
  std::string dist_path;
  double truth = 0.0;
  bool brute_force = false;
  auto* error = app.add_subcommand("error", "Local error of a distribution against the true value");
  error->add_option("--dist", dist_path, "Distribution CSV (j,p,phi)")->required();
  error->add_option("--truth", truth, "True value S(f)")->required();
  error->add_flag("--brute-force", brute_force, "Minimize over outcome subsets instead of the sorted prefix");
  error->callback([&] {
    action = [&] {
      const OutcomeDistribution d = distribution_from_csv(read_text_file(dist_path));
      out << format_real(brute_force ? local_error_setform(d, truth) : local_error(d, truth)) << "\n";
      return kOk;
    };
  });

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "Deterministic 3 eps-accurate value from a distribution");
  extract_cmd->add_option("--dist", dist_path, "Distribution CSV (j,p,phi)")->required();
  extract_cmd->add_option("--eps", eps, "Accuracy the generating algorithm achieves")->required();
  add_format(extract_cmd);
  extract_cmd->callback([&] {
    action = [&] {
      const Extraction ex = extract(distribution_from_csv(read_text_file(dist_path)), eps);
      out << (format == "json" ? dump_json(to_json(ex)) : line(format_real(ex.value)));
      return kOk;
    };
  });

  // verify-bound
  std::string family_dir;
  std::uint64_t classical_evals = 0;
  auto* verify = app.add_subcommand("verify-bound", "Check the qubit lower bound for an algorithm on a family");
  verify->add_option("--alg", alg_path, "AlgorithmSpec JSON")->required();
  verify->add_option("--family", family_dir, "Directory of FunctionSpec JSON files")->required();
  verify->add_option("--L", lipschitz, "Lipschitz bound")->required();
  verify->add_option("--eps", eps, "Accuracy")->required();
  verify->add_option("--c", cost, "Cost per query");
  verify->add_option("--classical-evals", classical_evals, "Evaluations used by classical components");
  verify->add_option("--max-qubits", max_qubits, "Dense simulation cap");
  add_out(verify, "Write the report here instead of stdout");
  verify->callback([&] {
    action = [&] {
      const AlgorithmSpec a = algorithm_from_json(read_json_file(alg_path));
      const auto family = load_family(family_dir);
      const BoundReport r = verify_bound(a, family, lipschitz, eps, cost, classical_evals, max_qubits);
      emit(out_path, dump_json(to_json(r)), out);
      if (!out_path.empty()) {
        out << "satisfied " << (r.satisfied ? "true" : "false") << " status "
            << (r.status == BoundStatus::Ok ? "ok" : "not-applicable") << "\n";
      }
      if (r.status == BoundStatus::NotApplicable) {
        err << "accuracy premise unmet: worst probabilistic error " << format_real(r.worst_prob_error)
            << " > eps " << format_real(eps) << "\n";
        return kPremise;
      }
      return kOk;
    };
  });

  // example-midpoint
  std::string out_dir;
  auto* example = app.add_subcommand("example-midpoint", "Write a midpoint circuit sized for eps and its test family");
  example->add_option("--eps", eps, "Accuracy")->required();
  example->add_option("--L", lipschitz, "Lipschitz bound")->required();
  example->add_option("--out-dir", out_dir, "Directory for alg.json and family/")->required();
  example->callback([&] {
    action = [&] {
      const MidpointExample ex = midpoint_example(eps, lipschitz);
      fs::create_directories(out_dir);
      write_text_file(fs::path(out_dir) / "alg.json", dump_json(to_json(ex.algorithm)));
      save_family(fs::path(out_dir) / "family", ex.family);
      out << "nu " << ex.algorithm.nu << " m_prime " << ex.algorithm.query.m_prime << " m_double_prime "
          << ex.algorithm.query.m_double_prime << " family " << ex.family.size() << "\n";
      return kOk;
    };
  });

  // build-ae
  int m_prime = 3;
  int readout = 6;
  std::string range_text = "0,1";
  auto* ae = app.add_subcommand("build-ae", "Amplitude-estimation circuit for the mean of a threshold oracle");
  ae->add_option("--m-prime", m_prime, "Index qubits (grid of 2^m' points)");
  ae->add_option("--readout", readout, "Phase-estimation readout qubits t");
  ae->add_option("--range", range_text, "Query range lo,hi; the threshold is its midpoint");
  ae->add_option("--max-qubits", max_qubits, "Dense simulation cap");
  add_out(ae, "Write the AlgorithmSpec JSON here instead of stdout");
  ae->callback([&] {
    action = [&] {
      const auto range = parse_real_list(range_text);
      if (range.size() != 2) throw ValidationError("--range needs two values");
      emit(out_path, dump_json(to_json(build_ae_mean(m_prime, readout, range[0], range[1], max_qubits))), out);
      if (!out_path.empty()) out << "wrote " << out_path << "\n";
      return kOk;
    };
  });

  // harness
  std::string property = "extraction";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  auto* harness = app.add_subcommand("harness", "Seeded randomized property check");
  harness->add_option("--property", property, "extraction | setform")
      ->check(CLI::IsMember({"extraction", "setform"}));
  harness->add_option("--trials", trials, "Number of random instances");
  harness->add_option("--seed", seed, "Generator seed");
  add_out(harness, "Per-trial CSV");
  harness->callback([&] {
    action = [&] {
      const HarnessSummary s =
          property == "extraction" ? extraction_harness(trials, seed) : setform_harness(trials, seed);
      if (!out_path.empty()) write_text_file(out_path, s.csv);
      out << "property " << property << " trials " << trials << " seed " << seed << " failures " << s.failures
          << "\n";
      return s.failures == 0 ? kOk : kFailure;
    };
  });

  std::vector<const char*> argv{"ibcq"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  if (!action) {
    err << app.help();
    return kValidation;
  }
  try {
    return action();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const PremiseViolation& e) {
    err << "premise violated: " << e.what() << "\n";
    return kPremise;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace ibcq::cli
