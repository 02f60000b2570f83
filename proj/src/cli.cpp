#include "flagdress/cli.hpp"

#include "flagdress/builtin.hpp"
#include "flagdress/errors.hpp"
#include "flagdress/experiment.hpp"
#include "flagdress/generate.hpp"
#include "flagdress/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace flagdress::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    int trials = 50;
    std::string mode = "random-weights";
    bool allow_large = false;
    int n = 0, p = 0, q = 0, rank = -1;
    std::string method = "dd";
    bool all_pairs = false;
    unsigned threads = 0;
    bool no_timing = false;
    std::string example;
};

// Largest ground set the geometric commands accept without --allow-large.
constexpr int kDefaultMaxN = 6;

std::string read_input(const std::string& path) {
    if (path.empty()) throw DomainError("--input is required");
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

class Command {
public:
    Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out), start_(std::chrono::steady_clock::now()) {}

    int emit(Json report, int code) {
        if (!opt_.no_timing) {
            const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start_;
            report["timing"] = {{"wall_seconds", secs.count()}};
        }
        const std::string text = report.dump(2) + "\n";
        if (opt_.output.empty()) {
            out_ << text;
        } else {
            std::ofstream file(opt_.output, std::ios::binary);
            if (!file) throw DomainError("cannot write '" + opt_.output + "'");
            file << text;
        }
        return code;
    }

    // Instance files carry no timing.
    int emit_instance(const Json& doc) {
        Options quiet = opt_;
        quiet.no_timing = true;
        return Command(quiet, out_).emit(doc, kHolds);
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
};

struct LoadedInstance {
    InstanceFile file;
    std::string digest;
};

LoadedInstance load_instance(const Options& opt) {
    const std::string text = read_input(opt.input);
    LoadedInstance li{parse_instance(text), fnv1a_hex(text)};
    if (li.file.flag.n > kDefaultMaxN && !opt.allow_large)
        throw BudgetError("n=" + std::to_string(li.file.flag.n) + " exceeds " + std::to_string(kDefaultMaxN) +
                          "; pass --allow-large");
    return li;
}

Json header(const char* command, const LoadedInstance& li) {
    Json r;
    r["command"] = command;
    r["input_digest"] = li.digest;
    r["instance"] = instance_to_json(li.file.flag, li.file.metadata);
    return r;
}

WeightedConfig config_of(const FlagInstance& flag) {
    if (flag.layers.size() == 1) return WeightedConfig::single_layer(flag.layers[0]);
    if (flag.layers.size() == 2) return WeightedConfig::from_flag(flag);
    throw DomainError("expected one or two layers, got " + std::to_string(flag.layers.size()));
}

int cmd_check(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const auto li = load_instance(opt);
    const FlagReport rep = check_flag(li.file.flag, opt.all_pairs);
    Json r = header("check", li);
    r["result"] = to_json(rep, li.file.flag);
    const bool ok = rep.valid() && (!opt.all_pairs || rep.all_pairs_valid());
    r["verdict"] = ok ? "valid" : "invalid";
    return cmd.emit(std::move(r), ok ? kHolds : kFails);
}

int cmd_skeleton(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const auto li = load_instance(opt);
    if (li.file.flag.layers.size() != 2)
        throw DomainError("skeleton needs a two-layer instance, got " + std::to_string(li.file.flag.layers.size()));
    const auto cfg = WeightedConfig::from_flag(li.file.flag);
    const auto cmp = skeleton_equal(cfg);
    const bool relations = check_flag(li.file.flag).valid();
    const bool consistent = cmp.equal == relations;
    Json r = header("skeleton", li);
    r["equal"] = cmp.equal;
    r["new_edges"] = edges_to_json(cfg, cmp.new_edges);
    r["missing_edges"] = edges_to_json(cfg, cmp.missing_edges);
    r["relations_hold"] = relations;
    r["agreement"] = consistent ? "consistent" : "inconsistent";
    return cmd.emit(std::move(r), cmp.equal && consistent ? kHolds : kFails);
}

CellMethod method_of(const std::string& m) {
    if (m == "dd") return CellMethod::double_description;
    if (m == "brute-force") return CellMethod::brute_force;
    throw DomainError("unknown --method '" + m + "' (expected dd or brute-force)");
}

int cmd_cells(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const auto li = load_instance(opt);
    const auto cfg = config_of(li.file.flag);
    const auto sub = subdivision_cells(cfg, method_of(opt.method));
    Json r = header("cells", li);
    r["method"] = opt.method;
    r["cell_count"] = sub.cells.size();
    r["cells"] = to_json(cfg, sub);
    return cmd.emit(std::move(r), kHolds);
}

int cmd_matroids(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    if (opt.input.empty()) {
        if (opt.n < 1 || opt.rank < 0) throw DomainError("matroids needs --input, or --n and --rank to enumerate");
        const auto all = enumerate_matroids(opt.n, opt.rank, opt.allow_large);
        Json r;
        r["command"] = "matroids";
        r["n"] = opt.n;
        r["rank"] = opt.rank;
        r["count"] = all.size();
        Json list = Json::array();
        for (const auto& m : all) list.push_back(to_json(m).at("bases"));
        r["matroids"] = std::move(list);
        return cmd.emit(std::move(r), kHolds);
    }
    const auto li = load_instance(opt);
    const auto cfg = config_of(li.file.flag);
    const auto cells = analyze_cells(cfg);
    long mixed = 0, concordant = 0, non_matroidal = 0, with_internal = 0, oracle_disagreements = 0;
    Json list = Json::array();
    for (const auto& a : cells) {
        const bool has_p = !a.layer_p.empty(), has_q = !a.layer_q.empty();
        if ((has_p && !a.matroid_p.ok) || (has_q && !a.matroid_q.ok)) ++non_matroidal;
        if (has_p && has_q) ++mixed;
        if (a.concordance && a.concordance->ok) ++concordant;
        if (a.concordance && a.flats_oracle && a.concordance->ok != a.flats_oracle->ok) ++oracle_disagreements;
        if (!a.internal.empty()) ++with_internal;
        list.push_back(to_json(a));
    }
    Json r = header("matroids", li);
    r["summary"] = {{"cells", cells.size()},
                    {"mixed_cells", mixed},
                    {"concordant_cells", concordant},
                    {"non_matroidal_cells", non_matroidal},
                    {"cells_with_internal_edges", with_internal},
                    {"flats_oracle_disagreements", oracle_disagreements}};
    r["cells"] = std::move(list);
    const bool ok = non_matroidal == 0 && concordant == mixed && oracle_disagreements == 0;
    return cmd.emit(std::move(r), ok ? kHolds : kFails);
}

int cmd_realize(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const std::string text = read_input(opt.input);
    const FlagMatrix fm = parse_matrix_file(text);
    try {
        const FlagInstance flag = tropicalize_flag(fm);
        return cmd.emit_instance(instance_to_json(flag, {{"source", "realize"}, {"input_digest", fnv1a_hex(text)}}));
    } catch (const ZeroMinorError& e) {
        Json r;
        r["command"] = "realize";
        r["input_digest"] = fnv1a_hex(text);
        r["matrix"] = matrix_to_json(fm);
        Json zeros = Json::array();
        for (const Subset& s : e.zero_minors()) zeros.push_back(format_subset(s));
        r["zero_minors"] = std::move(zeros);
        return cmd.emit(std::move(r), kFails);
    }
}

std::vector<int> dims_of(const Options& opt) {
    if (opt.n < 2) throw DomainError("--n is required");
    if (opt.p < 1) throw DomainError("--p is required");
    std::vector<int> dims{opt.p};
    if (opt.q > 0) dims.push_back(opt.q);
    if (opt.n > kDefaultMaxN && !opt.allow_large)
        throw BudgetError("n=" + std::to_string(opt.n) + " exceeds " + std::to_string(kDefaultMaxN) + "; pass --allow-large");
    return dims;
}

int cmd_gen(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const auto dims = dims_of(opt);
    const ExperimentMode mode = parse_mode(opt.mode);
    const FlagInstance flag = mode == ExperimentMode::realizable ? realizable_instance(opt.n, dims, opt.seed)
                                                                 : uniform_instance(opt.n, dims, opt.seed);
    return cmd.emit_instance(
        instance_to_json(flag, {{"source", "gen"}, {"mode", std::string(to_string(mode))}, {"seed", opt.seed}}));
}

int cmd_experiment(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const auto dims = dims_of(opt);
    if (dims.size() != 2) throw DomainError("experiment needs --q");
    const auto rep = possibility_experiment(opt.n, opt.p, opt.q, opt.trials, opt.seed, parse_mode(opt.mode), opt.threads);
    Json r;
    r["command"] = "experiment";
    r["result"] = to_json(rep);
    return cmd.emit(std::move(r), kHolds);
}

// Accepts an experiment report (re-runs it and replays every record) or a
// single counterexample record.
int cmd_replay(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    const std::string text = read_input(opt.input);
    const Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ParseError("replay input is not a JSON object");

    Json r;
    r["command"] = "replay";
    r["input_digest"] = fnv1a_hex(text);
    bool identical = true;
    Json records = Json::array();
    if (doc.contains("result")) {
        const Json& res = doc.at("result");
        const auto rerun = possibility_experiment(res.at("n").get<int>(), res.at("p").get<int>(), res.at("q").get<int>(),
                                                  res.at("trials").get<int>(), res.at("seed").get<std::uint64_t>(),
                                                  parse_mode(res.at("mode").get<std::string>()), opt.threads);
        const bool same = to_json(rerun) == res;
        r["experiment_identical"] = same;
        identical = identical && same;
        for (const Json& rec : res.at("counterexamples")) records.push_back(rec);
    } else {
        records.push_back(doc);
    }
    Json verdicts = Json::array();
    for (const Json& rec : records) {
        const auto again = replay(record_from_json(rec));
        const bool same = again && to_json(*again) == rec;
        identical = identical && same;
        verdicts.push_back({{"trial", rec.at("trial")}, {"identical", same}});
    }
    r["records"] = std::move(verdicts);
    r["identical"] = identical;
    return cmd.emit(std::move(r), identical ? kHolds : kFails);
}

int cmd_example(const Options& opt, std::ostream& out) {
    Command cmd(opt, out);
    return cmd.emit_instance(instance_to_json(builtin_instance(opt.example), {{"example", opt.example}}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Flag Dressian membership, weight-polytope subdivisions and concordance analysis", "flagdress"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--input,-i", opt.input, "input file ('-' for stdin)");
    app.add_option("--output,-o", opt.output, "write the report here instead of stdout");
    app.add_option("--seed", opt.seed, "base seed");
    app.add_option("--trials", opt.trials, "experiment trials")->check(CLI::NonNegativeNumber);
    app.add_option("--mode", opt.mode, "random-weights or realizable");
    app.add_flag("--allow-large", opt.allow_large, "lift the size guards");
    app.add_option("--n", opt.n, "ground set size");
    app.add_option("--p", opt.p, "lower rank");
    app.add_option("--q", opt.q, "upper rank (omit for one layer in gen)");
    app.add_option("--rank", opt.rank, "matroid rank for enumeration");
    app.add_option("--method", opt.method, "cell enumeration: dd or brute-force");
    app.add_flag("--all-pairs", opt.all_pairs, "check incidence between every pair of layers");
    app.add_option("--threads", opt.threads, "experiment worker threads (0 = all cores)");
    app.add_flag("--no-timing", opt.no_timing, "omit the timing block from reports");

    using Handler = int (*)(const Options&, std::ostream&);
    std::vector<std::pair<CLI::App*, Handler>> commands{
        {app.add_subcommand("check", "check Plücker and incidence relations"), cmd_check},
        {app.add_subcommand("skeleton", "compare the subdivision's 1-skeleton with Δ(p,q;n)'s"), cmd_skeleton},
        {app.add_subcommand("cells", "list the maximal cells of the regular subdivision"), cmd_cells},
        {app.add_subcommand("matroids", "matroid analysis per cell, or enumerate matroids"), cmd_matroids},
        {app.add_subcommand("realize", "tropicalize a flag matrix file"), cmd_realize},
        {app.add_subcommand("gen", "generate an instance"), cmd_gen},
        {app.add_subcommand("experiment", "search for cells separating internal edges from concordance"), cmd_experiment},
        {app.add_subcommand("replay", "re-run an experiment report or counterexample record"), cmd_replay},
        {app.add_subcommand("example", "emit a built-in instance"), cmd_example},
    };
    commands.back().first->add_option("name", opt.example, "paper-ex1-invalid, paper-ex1-x23 or paper-ex1-y234")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        for (auto& [sub, handler] : commands)
            if (sub->parsed()) return handler(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

} // namespace flagdress::cli
