#pragma once

// Search runner for the open statement "a mixed cell has no internal edges
// iff it is concordant". Every analyzed cell with two matroidal layers lands
// in one of four quadrants; the two off-diagonal quadrants are recorded in
// full as counterexample records. Nothing is asserted about the statement.

#include "flagdress/matroid.hpp"
#include "flagdress/tropical.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagdress {

enum class ExperimentMode { random_weights, realizable };

std::string_view to_string(ExperimentMode m);
// "random-weights" or "realizable"; throws DomainError otherwise.
ExperimentMode parse_mode(std::string_view text);

struct Quadrants {
    long no_internal_concordant = 0;
    long no_internal_not_concordant = 0; // off-diagonal
    long internal_concordant = 0;        // off-diagonal
    long internal_not_concordant = 0;
    long not_applicable = 0; // a layer is empty
    long non_matroidal = 0;  // a layer fails exchange

    Quadrants& operator+=(const Quadrants& o);
    long off_diagonal() const { return no_internal_not_concordant + internal_concordant; }
    friend bool operator==(const Quadrants&, const Quadrants&) = default;
};

struct CounterexampleRecord {
    int trial = 0;
    std::uint64_t seed = 0; // the trial's own seed
    ExperimentMode mode = ExperimentMode::random_weights;
    FlagInstance instance;  // two layers
    CellAnalysis analysis;
    std::string kind;       // "no-internal-edges-not-concordant" or "internal-edges-concordant"
};

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    int attempts = 1; // generator draws (random-weights mode)
    Quadrants tally;
    int cells = 0;
    std::vector<CounterexampleRecord> counterexamples;
};

struct ExperimentReport {
    int n = 0, p = 0, q = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    ExperimentMode mode = ExperimentMode::random_weights;
    Quadrants totals;
    long cells = 0;
    long generator_draws = 0;
    std::vector<CounterexampleRecord> counterexamples; // by trial, then cell
};

// One trial with seed `trial_seed`. Throws GenerationError (with the trial
// index) if no instance could be produced.
TrialResult run_trial(int n, int p, int q, ExperimentMode mode, int trial, std::uint64_t trial_seed,
                      const DeltaEdges* base = nullptr);

// Trial k uses seed + k. `threads` = 0 picks the hardware concurrency; the
// report does not depend on it. Throws DomainError unless 1 <= p < q <= n-1
// and trials >= 0.
ExperimentReport possibility_experiment(int n, int p, int q, int trials, std::uint64_t seed, ExperimentMode mode,
                                        unsigned threads = 0);

// Re-analyzes the record's instance and rebuilds the record for the cell with
// the same vertex set; nullopt if that cell no longer exists.
std::optional<CounterexampleRecord> replay(const CounterexampleRecord& record);

} // namespace flagdress
