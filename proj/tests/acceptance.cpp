// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "flagdress/builtin.hpp"
#include "flagdress/errors.hpp"
#include "flagdress/experiment.hpp"
#include "flagdress/generate.hpp"
#include "flagdress/geometry.hpp"
#include "flagdress/io.hpp"
#include "flagdress/matroid.hpp"
#include "flagdress/tropical.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace flagdress;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    int reported = 0;

    // Records a failure; the first few details are kept for the summary line.
    void fail(const std::string& what) {
        pass = false;
        if (reported++ < 3) note << " [" << what << "]";
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Subset> family(int n, std::initializer_list<const char*> keys) {
    std::vector<Subset> out;
    for (const char* k : keys) out.push_back(parse_subset(k, n));
    return out;
}

std::string text(const Subset& s) { return "{" + format_subset(s) + "}"; }

QMatrix indicator_rows(const std::vector<Subset>& sets, int n) {
    QMatrix m(static_cast<Eigen::Index>(sets.size()), n);
    for (std::size_t r = 0; r < sets.size(); ++r)
        for (int i = 0; i < n; ++i) m(static_cast<Eigen::Index>(r), i) = Rational(sets[r].contains(i + 1) ? 1 : 0);
    return m;
}

// Shared between criteria 4–6 and 10.
struct Corpus {
    std::vector<WeightedConfig> sweep;      // criterion 4
    std::vector<WeightedConfig> single;     // criterion 5
    std::vector<FlagInstance> realizable;   // criteria 6, 7
};

Corpus& corpus() {
    static Corpus c;
    return c;
}

const std::vector<std::array<int, 3>> kSweepShapes{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {2, 3, 5}};

const DeltaEdges& cached_delta(int p, int q, int n) {
    static std::map<std::array<int, 3>, DeltaEdges> cache;
    auto it = cache.find({p, q, n});
    if (it == cache.end()) it = cache.emplace(std::array<int, 3>{p, q, n}, delta_edges(p, q, n)).first;
    return it->second;
}

void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    const auto low = family(4, {"12", "13", "24", "34"});
    const auto high = family(4, {"123", "124", "134"});
    const auto r = is_quotient(Matroid(4, 2, low), Matroid(4, 3, high));
    o.expect(!r.ok, "the non-quotient pair is reported as a quotient");
    o.expect(r.witness && format_subset(r.witness->basis) == "123" && r.witness->element == 4,
             "witness is not (123, 4)");
    auto low23 = low;
    low23.push_back(parse_subset("23", 4));
    o.expect(is_quotient(Matroid(4, 2, low23), Matroid(4, 3, high)).ok, "adding 23 does not repair");
    auto high234 = high;
    high234.push_back(parse_subset("234", 4));
    o.expect(is_quotient(Matroid(4, 2, low), Matroid(4, 3, high234)).ok, "adding 234 does not repair");
    o.expect(seconds_since(t0) < 1.0, "over 1 s");
}

void criterion2(Outcome& o) {
    const auto t0 = Clock::now();
    std::vector<Subset> verts = family(4, {"12", "13", "24", "34", "123", "124", "134"});
    const auto internal = internal_edges(verts, 2, 3, 4);
    if (!internal.empty()) {
        std::string list;
        for (const auto& [a, b] : internal) list += " " + format_subset(a) + "-" + format_subset(b);
        o.fail("internal edges:" + list);
    }
    const auto edges = edges_of_polytope(indicator_rows(verts, 4));
    o.expect(edges.size() == 13, "edges_of_polytope gives " + std::to_string(edges.size()) + " edges, expected 13");
    o.expect(seconds_since(t0) < 1.0, "over 1 s");
}

void criterion3(Outcome& o) {
    const FlagInstance bad = builtin_instance("paper-ex1-invalid");
    o.expect(!check_incidence(bad.layers[0], bad.layers[1]).empty(), "invalid instance passes incidence");
    for (const char* name : {"paper-ex1-x23", "paper-ex1-y234"}) {
        const FlagInstance f = builtin_instance(name);
        o.expect(check_plucker(f.layers[0]).empty() && check_plucker(f.layers[1]).empty(),
                 std::string(name) + " fails Plücker");
        o.expect(check_incidence(f.layers[0], f.layers[1]).empty(), std::string(name) + " fails incidence");
    }
}

void criterion4(Outcome& o) {
    const auto t0 = Clock::now();
    long agree = 0, total = 0, valid = 0;
    for (std::size_t s = 0; s < kSweepShapes.size(); ++s) {
        const auto [p, q, n] = kSweepShapes[s];
        const EdgeList base = cached_delta(p, q, n).all();
        for (int k = 0; k < 200; ++k) {
            const std::uint64_t seed = 4000 + 1000 * s + k;
            const FlagInstance f = mixed_instance(n, {p, q}, seed);
            const auto cfg = WeightedConfig::from_flag(f);
            const bool holds = check_flag(f).valid();
            const bool equal = skeleton_equal(cfg, &base).equal;
            ++total;
            valid += holds;
            if (holds == equal)
                ++agree;
            else
                o.fail("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ") seed " +
                       std::to_string(seed));
            corpus().sweep.push_back(cfg);
        }
    }
    const double secs = seconds_since(t0);
    o.expect(secs < 600, "over 10 min");
    o.note << " " << agree << "/" << total << " agree, " << valid << " satisfy the relations";
}

void criterion5(Outcome& o) {
    long agree = 0, total = 0, valid = 0;
    for (int n : {4, 5}) {
        const EdgeList base = hypersimplex_edges(2, n);
        for (int k = 0; k < 200; ++k) {
            const std::uint64_t seed = 5000 + 1000 * n + k;
            const PluckerVector x = mixed_instance(n, {2}, seed).layers[0];
            const auto cfg = WeightedConfig::single_layer(x);
            const bool holds = check_plucker(x).empty();
            const bool equal = skeleton_equal(cfg, &base).equal;
            ++total;
            valid += holds;
            if (holds == equal)
                ++agree;
            else
                o.fail("n=" + std::to_string(n) + " seed " + std::to_string(seed));
            corpus().single.push_back(cfg);
        }
    }
    o.note << " " << agree << "/" << total << " agree, " << valid << " tropical Plücker vectors";
}

void build_realizable() {
    const std::vector<std::vector<int>> dims{{1, 2}, {2, 3}, {1, 3}};
    for (int k = 0; k < 100; ++k) {
        const int n = 4 + (k / 3) % 3;
        corpus().realizable.push_back(realizable_instance(n, dims[k % 3], 6000 + k));
    }
}

void criterion6(Outcome& o) {
    long mixed = 0, concordant = 0;
    for (std::size_t k = 0; k < corpus().realizable.size(); ++k) {
        const FlagInstance& f = corpus().realizable[k];
        const auto cfg = WeightedConfig::from_flag(f);
        const DeltaEdges& base = cached_delta(cfg.p(), cfg.q(), cfg.n());
        for (const auto& a : analyze_cells(cfg, &base)) {
            if (a.layer_p.empty() || a.layer_q.empty()) continue;
            ++mixed;
            const bool ok = a.matroid_p.ok && a.matroid_q.ok && a.concordance && a.concordance->ok;
            if (ok)
                ++concordant;
            else
                o.fail("flag " + std::to_string(k) + " has a non-concordant mixed cell");
        }
    }
    o.note << " " << concordant << "/" << mixed << " mixed cells concordant";
}

void criterion7(Outcome& o) {
    long flags_ok = 0, cocircuits = 0;
    for (std::size_t k = 0; k < corpus().realizable.size(); ++k) {
        const FlagInstance& f = corpus().realizable[k];
        const bool incidence = check_incidence(f.layers[0], f.layers[1]).empty();
        o.expect(incidence, "flag " + std::to_string(k) + " fails incidence");
        bool members = true;
        for (const Subset& kset : enumerate_subsets(f.n, f.layers[0].d() - 1)) {
            ++cocircuits;
            if (!point_in_space(f.layers[1], cocircuit(f.layers[0], kset))) {
                members = false;
                o.fail("flag " + std::to_string(k) + " cocircuit " + text(kset) + " outside the larger space");
            }
        }
        flags_ok += incidence && members;
    }
    o.note << " " << flags_ok << "/" << corpus().realizable.size() << " flags, " << cocircuits << " cocircuits";
}

void criterion8(Outcome& o) {
    std::mt19937_64 rng(8);
    long valid = 0;
    for (int k = 0; k < 500; ++k) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int d = 1 + static_cast<int>(rng() % (n - 1));
        const PluckerVector x = mixed_instance(n, {d}, rng()).layers[0];
        const PluckerVector y = dualize(x);
        o.expect(y.d() == n - d, "dual rank");
        o.expect(dualize(y).weights() == x.weights(), "involution fails for draw " + std::to_string(k));
        const bool vx = check_plucker(x).empty();
        valid += vx;
        o.expect(vx == check_plucker(y).empty(), "validity changes under duality for draw " + std::to_string(k));
    }
    o.note << " 500 vectors, " << valid << " valid";
}

void criterion9(Outcome& o) {
    long pairs = 0;
    auto compare = [&](const Matroid& a, const Matroid& b) {
        ++pairs;
        const auto def = is_quotient(a, b);
        const auto fl = is_quotient_via_flats(a, b);
        if (def.ok == fl.ok) return;
        std::string what = "disagreement: ";
        for (const auto& s : a.bases()) what += text(s);
        what += " vs ";
        for (const auto& s : b.bases()) what += text(s);
        if (def.witness) what += "; exchange witness (" + text(def.witness->basis) + "," + std::to_string(def.witness->element) + ")";
        if (fl.missing) what += "; flat " + text(*fl.missing) + " not a flat of the larger matroid";
        o.fail(what);
    };
    const auto low4 = enumerate_matroids(4, 2), high4 = enumerate_matroids(4, 3);
    for (const auto& a : low4)
        for (const auto& b : high4) compare(a, b);
    const auto low5 = enumerate_matroids(5, 2), high5 = enumerate_matroids(5, 3);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 500; ++k) compare(low5[rng() % low5.size()], high5[rng() % high5.size()]);
    o.note << " " << pairs << " pairs";
}

void criterion10(Outcome& o) {
    long configs = 0;
    auto check = [&](const WeightedConfig& cfg, const std::string& tag) {
        ++configs;
        const QMatrix pts = cfg.points();
        const Subdivision sub = subdivision_cells(cfg);
        o.expect(cell_edges(pts, sub) == subdivision_edges(cfg), tag + ": cell edges differ from lower edges");
        o.expect(is_polyhedral_complex(pts, cfg.weights(), sub), tag + ": not a polyhedral complex");
    };
    for (std::size_t k = 0; k < corpus().sweep.size(); ++k) check(corpus().sweep[k], "sweep " + std::to_string(k));
    for (std::size_t k = 0; k < corpus().single.size(); ++k) check(corpus().single[k], "single " + std::to_string(k));
    for (std::size_t k = 0; k < corpus().realizable.size(); ++k)
        check(WeightedConfig::from_flag(corpus().realizable[k]), "realizable " + std::to_string(k));

    long st = 0, st_ok = 0, st_contained = 0, pn = 0, pn_ok = 0;
    for (int n = 3; n <= 5; ++n)
        for (int p = 1; p < n - 1; ++p)
            for (int q = p + 1; q <= n - 1; ++q)
                for (const Subset& s : enumerate_subsets(n, p - 1))
                    for (const Subset& t : enumerate_subsets(n, q + 1)) {
                        ++st;
                        st_contained += s.is_subset_of(t);
                        if (face_ST(s, t, p, q, n).verified)
                            ++st_ok;
                        else
                            o.fail("Δ_{S,T} certificate fails for S=" + text(s) + " T=" + text(t) + " in Δ(" +
                                   std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(n) + ")");
                        ++pn;
                        pn_ok += pn_transform(s, t).verified;
                    }
    o.expect(pn_ok == pn, "affine map to P_m fails");
    o.note << " " << configs << " configurations; Δ_{S,T}: " << st_ok << "/" << st << " verified (" << st_contained
           << " with S ⊆ T); P_m maps " << pn_ok << "/" << pn;
}

void criterion11(Outcome& o) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> w(-3, 3);
    long agree = 0, total = 0;
    for (int m : {2, 3, 4}) {
        const QMatrix pts = cross_polytope(m);
        for (int k = 0; k < 200; ++k) {
            std::vector<Rational> plus(m), minus(m);
            for (auto& v : plus) v = Rational(w(rng));
            for (auto& v : minus) v = Rational(w(rng));
            std::vector<Rational> lift(plus);
            lift.insert(lift.end(), minus.begin(), minus.end());
            std::vector<int> lp;
            for (auto [a, b] : lower_edges(pts, lift))
                if (b == a + m) lp.push_back(a + 1);
            ++total;
            if (lp == pn_edge_profile(plus, minus))
                ++agree;
            else
                o.fail("m=" + std::to_string(m) + " draw " + std::to_string(k));
        }
    }
    o.note << " " << agree << "/" << total << " agree";
}

void criterion12(Outcome& o) {
    long records = 0, cells = 0, probes = 0;
    for (const auto& [n, p, q] : std::vector<std::array<int, 3>>{{4, 2, 3}, {5, 2, 3}})
        for (auto mode : {ExperimentMode::random_weights, ExperimentMode::realizable}) {
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q) + ") " +
                                    std::string(to_string(mode));
            const auto report = possibility_experiment(n, p, q, 50, 12, mode);
            const Json j = to_json(report);
            const std::string dump = j.dump();
            o.expect(Json::parse(dump) == j, tag + ": report does not round-trip");
            for (const char* key : {"n", "p", "q", "trials", "seed", "mode", "quadrants", "cells", "counterexamples"})
                o.expect(j.contains(key), tag + ": report lacks " + key);
            const Quadrants& t = report.totals;
            o.expect(t.no_internal_concordant + t.no_internal_not_concordant + t.internal_concordant +
                             t.internal_not_concordant + t.not_applicable + t.non_matroidal ==
                         report.cells,
                     tag + ": quadrants do not sum to the cell count");
            o.expect(static_cast<long>(report.counterexamples.size()) == t.off_diagonal(),
                     tag + ": record count differs from the off-diagonal tally");
            for (const auto& rec : report.counterexamples) {
                ++records;
                const auto again = replay(record_from_json(to_json(rec)));
                o.expect(again && to_json(*again).dump() == to_json(rec).dump(),
                         tag + ": record for trial " + std::to_string(rec.trial) + " does not replay");
            }
            o.expect(to_json(possibility_experiment(n, p, q, 50, 12, mode)).dump() == dump,
                     tag + ": rerun differs");
            // No assertion about off-diagonal cells, so also replay a probe record
            // built from a real cell of this shape.
            const FlagInstance probe = mode == ExperimentMode::realizable ? realizable_instance(n, {p, q}, 12)
                                                                          : valid_instance(n, {p, q}, 12);
            const auto cells_of_probe = analyze_cells(WeightedConfig::from_flag(probe));
            const CounterexampleRecord rec{0, 12, mode, probe, cells_of_probe.back(), "none"};
            const auto again = replay(record_from_json(to_json(rec)));
            o.expect(again && to_json(*again).dump() == to_json(rec).dump(), tag + ": probe record does not replay");
            ++probes;
            cells += report.cells;
            o.note << " " << tag << ": " << t.no_internal_concordant << "/" << t.no_internal_not_concordant << "/"
                   << t.internal_concordant << "/" << t.internal_not_concordant << ";";
        }
    o.note << " " << cells << " cells, " << records << " records replayed (+" << probes << " probes)";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"built-in pair concordance", criterion1},
        {"built-in pair geometry", criterion2},
        {"built-in flag relations", criterion3},
        {"skeleton criterion sweep", criterion4},
        {"single-layer skeleton criterion", criterion5},
        {"realizable mixed cells are concordant", criterion6},
        {"realizable flags satisfy incidence; cocircuit membership", criterion7},
        {"duality", criterion8},
        {"quotient oracle equivalence", criterion9},
        {"geometry self-consistency", criterion10},
        {"cross-polytope edge profile", criterion11},
        {"possibility experiment", criterion12},
    };
    build_realizable();
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first << ", "
                  << std::fixed << std::setprecision(2) << seconds_since(t0) << " s):" << o.note.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
