#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "chipgame/prob.hpp"
#include "chipgame/reachability.hpp"
#include "chipgame/verify.hpp"

namespace chipgame {

/// Text is for people; Structured is newline-delimited JSON, one record per
/// line, each carrying "schema" and "record" fields.
enum class Format { Text, Structured };

inline constexpr std::string_view kSchema = "chipgame.v1";

void write_reach(std::ostream& os, const ReachabilityReport& report, Format format);
void write_witness(std::ostream& os, const GameParams& params, const WitnessPath& path,
                   Format format);
void write_grid(std::ostream& os, const ReachabilityReport& report, Format format);
void write_probability(std::ostream& os, const ProbabilityReport& report, Format format);

struct SimulationRun {
  GameParams params;
  Rational coin_bias;
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t move_cap;
  SimulationCounts counts;
};
void write_simulation(std::ostream& os, const SimulationRun& run, Format format);

/// Counterexample records first, then one summary record.
void write_scan(std::ostream& os, const ScanReport& report, Format format);

/// Move word rendered as letters, e.g. "LH".
std::string move_word(const WitnessPath& path);

}  // namespace chipgame
