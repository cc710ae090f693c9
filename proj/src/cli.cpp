#include "chipgame/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chipgame/error.hpp"
#include "chipgame/prob.hpp"
#include "chipgame/reachability.hpp"
#include "chipgame/report.hpp"
#include "chipgame/verify.hpp"

namespace chipgame::cli {

namespace {

struct GameArgs {
  std::uint64_t a = 0, b = 0, m = 0, n = 0;
};

void add_game_options(CLI::App* sub, GameArgs& g) {
  sub->add_option("-a", g.a, "Low chip amount")->required();
  sub->add_option("-b", g.b, "High chip amount")->required();
  sub->add_option("-m", g.m, "Alice's modulus")->required();
  sub->add_option("-n", g.n, "Bob's modulus")->required();
}

std::vector<Rational> parse_bias_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::Domain, "bias list is empty");
  return out;
}

void require_open_unit(const Rational& bias) {
  if (sgn(bias) <= 0 || cmp(bias, 1) >= 0) {
    throw Error(ErrorCode::Domain,
                "coin bias must lie strictly between 0 and 1, got " + format_rational(bias));
  }
}

void require_scan_bound(std::uint64_t bound, const char* name) {
  if (bound < 3) {
    throw Error(ErrorCode::Domain, std::string(name) + " must be at least 3");
  }
}

int exit_for(ErrorCode code) {
  return code == ErrorCode::Resource ? kResourceError : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis toolkit for the modulo dependent chip-collecting game", "chipgame"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output_path;
  app.add_option("-f,--format", format_name, "Output encoding")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("-o,--output", output_path, "Write results to this path instead of stdout");

  GameArgs game;
  std::string bias_text = "1/2";
  std::uint64_t target_x = 0, target_y = 0;
  std::uint64_t trials = 10000, seed = 0, move_cap = 0;
  std::string scan_kind;
  std::uint64_t n_max = 0, m_max = 0;
  std::string biases_text = "1/2,1/3";
  bool serial = false;

  auto* reach = app.add_subcommand("reach", "Reachable-set summary of one game");
  add_game_options(reach, game);

  auto* witness = app.add_subcommand("witness", "Shortest move word landing on a position");
  add_game_options(witness, game);
  witness->add_option("-x", target_x, "Alice's residue")->required();
  witness->add_option("-y", target_y, "Bob's residue")->required();

  auto* grid = app.add_subcommand("grid", "Reachability matrix, one row per x");
  add_game_options(grid, game);

  auto* prob = app.add_subcommand("prob", "Exact winning probabilities");
  add_game_options(prob, game);
  prob->add_option("--bias", bias_text, "Probability of (+a,+b) as an exact fraction p/q");

  auto* sim = app.add_subcommand("sim", "Seeded Monte Carlo of the game");
  add_game_options(sim, game);
  sim->add_option("--bias", bias_text, "Probability of (+a,+b) as an exact fraction p/q");
  sim->add_option("--trials", trials, "Number of walks")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Generator seed");
  sim->add_option("--cap", move_cap, "Move cap per walk (default 10*m*n)");

  auto* scan = app.add_subcommand("scan", "Exhaustive check of a characterization");
  scan->add_option("kind", scan_kind, "Which statement to scan")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "conj2", "corollary", "invariants",
                             "never-reachable-pair", "eq1", "q-bijection", "diagonal"}));
  scan->add_option("--n-max", n_max, "Largest n (and m for square scans)");
  scan->add_option("--m-max", m_max, "Largest m");
  scan->add_option("--biases", biases_text, "Comma-separated p/q biases for the corollary scan");
  scan->add_flag("--serial", serial, "Use the single-threaded reference path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: usage: " << what << " (run with --help for usage)\n";
    return kDomainError;
  }

  const Format format = format_name == "structured" ? Format::Structured : Format::Text;
  std::ostringstream buffer;
  int status = kOk;
  try {
    if (scan->parsed()) {
      const Execution exec = serial ? Execution::Serial : Execution::Parallel;
      std::vector<ScanReport> reports;
      if (scan_kind == "thm1") {
        if (n_max == 0) n_max = 30;
        require_scan_bound(n_max, "--n-max");
        reports.push_back(scan_thm1(n_max, exec));
      } else if (scan_kind == "thm2" || scan_kind == "conj2" || scan_kind == "corollary") {
        const std::uint64_t fallback = scan_kind == "corollary" ? 14 : 20;
        if (n_max == 0) n_max = fallback;
        if (m_max == 0) m_max = fallback;
        require_scan_bound(n_max, "--n-max");
        require_scan_bound(m_max, "--m-max");
        if (scan_kind == "thm2") {
          reports.push_back(scan_thm2(m_max, n_max, exec));
        } else if (scan_kind == "conj2") {
          reports.push_back(scan_conjecture2(m_max, n_max, exec));
        } else {
          const std::vector<Rational> biases = parse_bias_list(biases_text);
          for (const Rational& bias : biases) require_open_unit(bias);
          reports.push_back(scan_corollary(m_max, n_max, biases, exec));
        }
      } else {
        if (n_max == 0) n_max = 30;
        require_scan_bound(n_max, "--n-max");
        if (scan_kind == "invariants") {
          reports = scan_invariants(n_max, exec);
        } else if (scan_kind == "never-reachable-pair") {
          reports.push_back(scan_never_reachable_pair(n_max, exec));
        } else if (scan_kind == "eq1") {
          reports.push_back(scan_eq1_lemma(n_max, exec));
        } else if (scan_kind == "q-bijection") {
          reports.push_back(scan_q_bijection(n_max, exec));
        } else {
          reports.push_back(scan_diagonal_containment(n_max, exec));
        }
      }
      for (const ScanReport& r : reports) {
        write_scan(buffer, r, format);
        if (!r.passed()) status = kCounterexample;
      }
    } else {
      const GameParams params(game.a, game.b, game.m, game.n);
      if (reach->parsed()) {
        write_reach(buffer, reachable_set(params), format);
      } else if (grid->parsed()) {
        write_grid(buffer, reachable_set(params), format);
      } else if (witness->parsed()) {
        if (target_x >= params.m() || target_y >= params.n()) {
          throw Error(ErrorCode::Domain, "target must satisfy 0 <= x < m and 0 <= y < n");
        }
        const ReachabilityReport report = reachable_set(params);
        write_witness(buffer, params, witness_path(report, {target_x, target_y}), format);
      } else if (prob->parsed()) {
        write_probability(buffer, solve_probabilities(params, parse_rational(bias_text)), format);
      } else if (sim->parsed()) {
        const Rational bias = parse_rational(bias_text);
        SimulationOptions options;
        options.move_cap = move_cap;
        options.execution = Execution::Parallel;
        const SimulationCounts counts = simulate(params, bias, trials, seed, options);
        const std::uint64_t cap = move_cap != 0 ? move_cap : 10 * params.m() * params.n();
        write_simulation(buffer, {params, bias, trials, seed, cap, counts}, format);
      }
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: resource_error: out of memory\n";
    return kResourceError;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: resource_error: cannot write " << output_path << '\n';
      return kResourceError;
    }
  }
  return status;
}

}  // namespace chipgame::cli
