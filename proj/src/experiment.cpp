#include "flagdress/experiment.hpp"

#include "flagdress/errors.hpp"
#include "flagdress/generate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace flagdress {

namespace {

std::optional<std::string> classify(const CellAnalysis& a, Quadrants& tally) {
    if (a.layer_p.empty() || a.layer_q.empty()) {
        ++tally.not_applicable;
        return std::nullopt;
    }
    if (!a.concordance) {
        ++tally.non_matroidal;
        return std::nullopt;
    }
    const bool clean = a.internal.empty();
    const bool concordant = a.concordance->ok;
    if (clean && concordant) ++tally.no_internal_concordant;
    if (!clean && !concordant) ++tally.internal_not_concordant;
    if (clean && !concordant) {
        ++tally.no_internal_not_concordant;
        return "no-internal-edges-not-concordant";
    }
    if (!clean && concordant) {
        ++tally.internal_concordant;
        return "internal-edges-concordant";
    }
    return std::nullopt;
}

} // namespace

Quadrants& Quadrants::operator+=(const Quadrants& o) {
    no_internal_concordant += o.no_internal_concordant;
    no_internal_not_concordant += o.no_internal_not_concordant;
    internal_concordant += o.internal_concordant;
    internal_not_concordant += o.internal_not_concordant;
    not_applicable += o.not_applicable;
    non_matroidal += o.non_matroidal;
    return *this;
}

std::string_view to_string(ExperimentMode m) {
    return m == ExperimentMode::realizable ? "realizable" : "random-weights";
}

ExperimentMode parse_mode(std::string_view text) {
    if (text == "random-weights") return ExperimentMode::random_weights;
    if (text == "realizable") return ExperimentMode::realizable;
    throw DomainError("unknown mode '" + std::string(text) + "' (expected random-weights or realizable)");
}

TrialResult run_trial(int n, int p, int q, ExperimentMode mode, int trial, std::uint64_t trial_seed,
                      const DeltaEdges* base) {
    TrialResult out;
    out.trial = trial;
    out.seed = trial_seed;
    FlagInstance flag;
    try {
        if (mode == ExperimentMode::realizable)
            flag = realizable_instance(n, {p, q}, trial_seed);
        else
            flag = valid_instance(n, {p, q}, trial_seed, 1000, &out.attempts);
    } catch (const GenerationError& e) {
        throw GenerationError("trial " + std::to_string(trial) + ": " + e.what());
    }
    const auto cfg = WeightedConfig::from_flag(flag);
    for (auto& a : analyze_cells(cfg, base)) {
        ++out.cells;
        if (auto kind = classify(a, out.tally))
            out.counterexamples.push_back({trial, trial_seed, mode, flag, std::move(a), *kind});
    }
    return out;
}

ExperimentReport possibility_experiment(int n, int p, int q, int trials, std::uint64_t seed, ExperimentMode mode,
                                        unsigned threads) {
    if (trials < 0) throw DomainError("trial count must be non-negative");
    ExperimentReport report;
    report.n = n;
    report.p = p;
    report.q = q;
    report.trials = trials;
    report.seed = seed;
    report.mode = mode;
    if (trials == 0) {
        delta_vertices(p, q, n); // still validates the shape
        return report;
    }
    const DeltaEdges base = delta_edges(p, q, n);

    std::vector<std::optional<TrialResult>> results(trials);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int k = next++; k < trials; k = next++) {
            try {
                results[k] = run_trial(n, p, q, mode, k, seed + static_cast<std::uint64_t>(k), &base);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = trials;
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& r : results) {
        report.totals += r->tally;
        report.cells += r->cells;
        report.generator_draws += r->attempts;
        for (auto& c : r->counterexamples) report.counterexamples.push_back(std::move(c));
    }
    return report;
}

std::optional<CounterexampleRecord> replay(const CounterexampleRecord& record) {
    const auto cfg = WeightedConfig::from_flag(record.instance);
    for (auto& a : analyze_cells(cfg)) {
        if (a.vertices != record.analysis.vertices) continue;
        Quadrants scratch;
        auto kind = classify(a, scratch);
        return CounterexampleRecord{record.trial, record.seed, record.mode, record.instance, std::move(a),
                                    kind.value_or("none")};
    }
    return std::nullopt;
}

} // namespace flagdress
