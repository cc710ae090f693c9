#include "chipgame/report.hpp"

#include <json.hpp>
#include <ostream>

namespace chipgame {

namespace {

using nlohmann::ordered_json;

ordered_json record(std::string_view kind) {
  ordered_json j;
  j["schema"] = kSchema;
  j["record"] = kind;
  return j;
}

ordered_json params_json(const GameParams& p) {
  return {{"a", p.a()}, {"b", p.b()}, {"m", p.m()}, {"n", p.n()}};
}

void emit(std::ostream& os, const ordered_json& j) { os << j.dump() << '\n'; }

void text_game(std::ostream& os, const GameParams& p) {
  os << "game a=" << p.a() << " b=" << p.b() << " m=" << p.m() << " n=" << p.n() << '\n';
}

ordered_json rational_json(const Rational& r) {
  return {{"exact", format_rational(r)}, {"approx", format_decimal(r)}};
}

}  // namespace

std::string move_word(const WitnessPath& path) {
  std::string out;
  out.reserve(path.moves.size());
  for (MoveKind mv : path.moves) out.push_back(move_letter(mv));
  return out;
}

void write_reach(std::ostream& os, const ReachabilityReport& report, Format format) {
  const GameParams& p = report.params();
  std::uint64_t interior = 0, alice = 0, bob = 0;
  for (Position pos : report.discovery_order()) {
    switch (classify(p, pos)) {
      case PositionClass::AliceWin:
        ++alice;
        break;
      case PositionClass::BobWin:
        ++bob;
        break;
      default:
        ++interior;
    }
  }
  const bool alice_only = all_wins_alice(report);
  if (format == Format::Structured) {
    ordered_json j = record("reach");
    j["params"] = params_json(p);
    j["cells"] = p.state_count();
    j["reachable"] = report.reachable_count();
    j["interior"] = interior;
    j["alice_wins"] = alice;
    j["bob_wins"] = bob;
    j["max_depth"] = report.max_depth();
    j["all_wins_alice"] = alice_only;
    if (p.is_square()) j["full_reachability"] = full_reachability_square(report);
    emit(os, j);
    return;
  }
  text_game(os, p);
  os << "cells " << p.state_count() << '\n';
  os << "reachable " << report.reachable_count() << '\n';
  os << "interior " << interior << '\n';
  os << "alice_wins " << alice << '\n';
  os << "bob_wins " << bob << '\n';
  os << "max_depth " << report.max_depth() << '\n';
  os << "all_wins_alice=" << (alice_only ? "true" : "false") << '\n';
  if (p.is_square()) {
    os << "full_reachability=" << (full_reachability_square(report) ? "true" : "false") << '\n';
  }
}

void write_witness(std::ostream& os, const GameParams& params, const WitnessPath& path,
                   Format format) {
  if (format == Format::Structured) {
    ordered_json j = record("witness");
    j["params"] = params_json(params);
    j["target"] = {path.landing.x, path.landing.y};
    j["length"] = path.moves.size();
    j["moves"] = move_word(path);
    j["landing_class"] = to_string(classify(params, path.landing));
    emit(os, j);
    return;
  }
  text_game(os, params);
  os << "target " << path.landing << ' ' << to_string(classify(params, path.landing)) << '\n';
  os << "length " << path.moves.size() << '\n';
  os << "moves " << move_word(path) << '\n';
  Position pos{};
  os << "path " << pos;
  for (MoveKind mv : path.moves) {
    pos = step(params, pos, mv);
    os << ' ' << move_letter(mv) << ' ' << pos;
  }
  os << '\n';
}

void write_grid(std::ostream& os, const ReachabilityReport& report, Format format) {
  if (format == Format::Text) {
    write_grid(os, report);
    return;
  }
  const GameParams& p = report.params();
  ordered_json j = record("grid");
  j["params"] = params_json(p);
  ordered_json rows = ordered_json::array();
  for (std::uint64_t x = 0; x < p.m(); ++x) {
    std::string row;
    for (std::uint64_t y = 0; y < p.n(); ++y) row.push_back(grid_cell(report, {x, y}));
    rows.push_back(row);
  }
  j["rows"] = rows;
  emit(os, j);
}

void write_probability(std::ostream& os, const ProbabilityReport& report, Format format) {
  if (format == Format::Structured) {
    ordered_json j = record("probability");
    j["params"] = params_json(report.params);
    j["bias"] = format_rational(report.coin_bias);
    j["transient_states"] = report.transient.size();
    j["p_alice"] = rational_json(report.p_alice);
    j["p_bob"] = rational_json(report.p_bob);
    j["p_nonterminating"] = rational_json(report.p_nonterminating);
    emit(os, j);
    return;
  }
  text_game(os, report.params);
  os << "bias " << format_rational(report.coin_bias) << '\n';
  os << "transient_states " << report.transient.size() << '\n';
  const std::pair<const char*, const Rational*> rows[] = {
      {"p_alice", &report.p_alice},
      {"p_bob", &report.p_bob},
      {"p_nonterminating", &report.p_nonterminating}};
  for (const auto& [name, value] : rows) os << name << " = " << format_rational(*value) << '\n';
  for (const auto& [name, value] : rows) {
    os << name << " ~ " << format_decimal(*value) << " (approximate)\n";
  }
}

void write_simulation(std::ostream& os, const SimulationRun& run, Format format) {
  if (format == Format::Structured) {
    ordered_json j = record("simulation");
    j["params"] = params_json(run.params);
    j["bias"] = format_rational(run.coin_bias);
    j["trials"] = run.trials;
    j["seed"] = run.seed;
    j["move_cap"] = run.move_cap;
    j["generator"] = "mt19937_64";
    j["alice_wins"] = run.counts.alice_wins;
    j["bob_wins"] = run.counts.bob_wins;
    j["truncated"] = run.counts.truncated;
    emit(os, j);
    return;
  }
  text_game(os, run.params);
  os << "bias " << format_rational(run.coin_bias) << '\n';
  os << "trials " << run.trials << " seed " << run.seed << " move_cap " << run.move_cap << '\n';
  os << "alice_wins " << run.counts.alice_wins << '\n';
  os << "bob_wins " << run.counts.bob_wins << '\n';
  os << "truncated " << run.counts.truncated << '\n';
}

void write_scan(std::ostream& os, const ScanReport& report, Format format) {
  if (format == Format::Structured) {
    for (const Counterexample& c : report.counterexamples) {
      ordered_json j = record("counterexample");
      j["scan"] = to_string(report.kind);
      j["params"] = {{"a", c.a}, {"b", c.b}, {"m", c.m}, {"n", c.n}};
      j["predicted"] = c.predicted;
      j["observed"] = c.observed;
      j["detail"] = c.detail;
      emit(os, j);
    }
    ordered_json j = record("scan_summary");
    j["scan"] = to_string(report.kind);
    j["range"] = {{"m_max", report.range.m_max}, {"n_max", report.range.n_max}};
    if (!report.range.biases.empty()) {
      ordered_json biases = ordered_json::array();
      for (const Rational& b : report.range.biases) biases.push_back(format_rational(b));
      j["range"]["biases"] = biases;
    }
    j["tuples_checked"] = report.tuples_checked;
    j["tuples_skipped"] = report.tuples_skipped;
    j["counterexamples"] = report.counterexamples.size();
    emit(os, j);
    return;
  }
  os << "scan " << to_string(report.kind) << " m_max=" << report.range.m_max
     << " n_max=" << report.range.n_max;
  if (!report.range.biases.empty()) {
    os << " biases=";
    for (std::size_t i = 0; i < report.range.biases.size(); ++i) {
      os << (i ? "," : "") << format_rational(report.range.biases[i]);
    }
  }
  os << '\n';
  for (const Counterexample& c : report.counterexamples) {
    os << "counterexample a=" << c.a << " b=" << c.b << " m=" << c.m << " n=" << c.n
       << " predicted=" << (c.predicted ? "true" : "false")
       << " observed=" << (c.observed ? "true" : "false");
    if (!c.detail.empty()) os << ' ' << c.detail;
    os << '\n';
  }
  os << "tuples_checked " << report.tuples_checked << '\n';
  os << "tuples_skipped " << report.tuples_skipped << '\n';
  os << report.counterexamples.size() << " counterexamples\n";
}

}  // namespace chipgame
