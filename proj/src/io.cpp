#include "flagdress/io.hpp"

#include "flagdress/errors.hpp"

#include <cstdio>
#include <map>
#include <optional>
#include <set>

namespace flagdress {

namespace {

// Offset of the `occurrence`-th (0-based) appearance of "key" used as an
// object key, or -1. Only used to point diagnostics at the right place.
long key_position(std::string_view text, const std::string& key, int occurrence = 0) {
    const std::string quoted = Json(key).dump();
    std::size_t from = 0;
    while (true) {
        const std::size_t at = text.find(quoted, from);
        if (at == std::string_view::npos) return -1;
        std::size_t k = at + quoted.size();
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k < text.size() && text[k] == ':' && occurrence-- == 0) return static_cast<long>(at);
        from = at + 1;
    }
}

Json parse_document(std::string_view text) {
    std::vector<std::set<std::string>> open;
    std::optional<std::string> duplicate;
    auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
        switch (event) {
        case Json::parse_event_t::object_start: open.emplace_back(); break;
        case Json::parse_event_t::object_end:
            if (!open.empty()) open.pop_back();
            break;
        case Json::parse_event_t::key:
            if (!open.empty() && !open.back().insert(parsed.get<std::string>()).second && !duplicate)
                duplicate = parsed.get<std::string>();
            break;
        default: break;
        }
        return true;
    };
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end(), callback);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? static_cast<long>(e.byte) - 1 : 0);
    }
    if (duplicate) throw ParseError("duplicate key \"" + *duplicate + "\"", key_position(text, *duplicate, 1));
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object", 0);
    return doc;
}

const Json& member(const Json& obj, const char* key, std::string_view text, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string(where) + " is missing \"" + key + "\"");
    (void)text;
    return *it;
}

int integer_field(const Json& obj, const char* key, std::string_view text, std::string_view where) {
    const Json& v = member(obj, key, text, where);
    if (!v.is_number_integer()) throw ParseError(std::string(where) + ": \"" + key + "\" must be an integer", key_position(text, key));
    const auto value = v.get<std::int64_t>();
    if (value < -1000000 || value > 1000000) throw ParseError(std::string(where) + ": \"" + key + "\" out of range", key_position(text, key));
    return static_cast<int>(value);
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, std::string_view text,
                    std::string_view where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw ParseError(std::string(where) + ": unknown key \"" + it.key() + "\"", key_position(text, it.key()));
    }
}

Rational rational_value(const Json& v, std::string_view text, const std::string& key, std::string_view what) {
    const long pos = key_position(text, key);
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            throw ParseError(std::string(what) + " out of range", pos);
        return Rational(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(std::string(what) + " for \"" + key + "\": " + e.what(), pos);
        }
    }
    throw ParseError(std::string(what) + " for \"" + key + "\" must be an integer or a rational string", pos);
}

Json keys(const std::vector<Subset>& subsets) {
    Json out = Json::array();
    for (const Subset& s : subsets) out.push_back(format_subset(s));
    return out;
}

Json members(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

Json edge_pairs(const std::vector<SubsetEdge>& edges) {
    Json out = Json::array();
    for (const auto& [a, b] : edges) out.push_back(Json::array({format_subset(a), format_subset(b)}));
    return out;
}

} // namespace

InstanceFile parse_instance(std::string_view text) {
    const Json doc = parse_document(text);
    reject_unknown(doc, {"n", "layers", "metadata"}, text, "instance");
    InstanceFile out;
    const int n = integer_field(doc, "n", text, "instance");
    if (n < 2 || n > kMaxGroundSet) throw ParseError("instance: n=" + std::to_string(n) + " out of range", key_position(text, "n"));
    const Json& layers = member(doc, "layers", text, "instance");
    if (!layers.is_array() || layers.empty())
        throw ParseError("instance: \"layers\" must be a non-empty array", key_position(text, "layers"));

    out.flag.n = n;
    int layer_index = 0;
    for (const Json& layer : layers) {
        const std::string where = "layer " + std::to_string(layer_index);
        if (!layer.is_object()) throw ParseError(where + " must be an object", key_position(text, "layers"));
        reject_unknown(layer, {"d", "weights"}, text, where);
        const int d = integer_field(layer, "d", text, where);
        if (d < 1 || d > n - 1)
            throw ParseError(where + ": d=" + std::to_string(d) + " outside 1.." + std::to_string(n - 1),
                             key_position(text, "d", layer_index));
        if (!out.flag.layers.empty() && d <= out.flag.layers.back().d())
            throw ParseError(where + ": layer dims must increase strictly", key_position(text, "d", layer_index));
        const Json& weights = member(layer, "weights", text, where);
        if (!weights.is_object()) throw ParseError(where + ": \"weights\" must be an object", key_position(text, "weights", layer_index));

        const std::size_t count = binomial(n, d);
        std::vector<std::optional<Rational>> slots(count);
        std::vector<std::string> spelled(count);
        for (auto it = weights.begin(); it != weights.end(); ++it) {
            const std::string& key = it.key();
            Subset s;
            try {
                s = parse_subset(key, n);
            } catch (const ParseError& e) {
                throw ParseError(where + ": bad subset key \"" + key + "\": " + e.what(), key_position(text, key));
            }
            if (s.size() != d)
                throw ParseError(where + ": subset \"" + key + "\" has " + std::to_string(s.size()) +
                                     " elements, expected " + std::to_string(d),
                                 key_position(text, key));
            const std::size_t idx = lex_rank(s);
            if (slots[idx])
                throw ParseError(where + ": subset key \"" + key + "\" duplicates \"" + spelled[idx] + "\"",
                                 key_position(text, key));
            slots[idx] = rational_value(*it, text, key, "weight");
            spelled[idx] = key;
        }
        std::vector<Rational> values;
        values.reserve(count);
        const auto subsets = enumerate_subsets(n, d);
        for (std::size_t i = 0; i < count; ++i) {
            if (!slots[i])
                throw ParseError(where + ": missing weight for subset \"" + format_subset(subsets[i]) + "\"",
                                 key_position(text, "weights", layer_index));
            values.push_back(std::move(*slots[i]));
        }
        out.flag.layers.emplace_back(n, d, std::move(values));
        ++layer_index;
    }
    if (auto it = doc.find("metadata"); it != doc.end()) out.metadata = *it;
    out.flag.validate();
    return out;
}

Json instance_to_json(const FlagInstance& flag, const Json& metadata) {
    Json out;
    out["n"] = flag.n;
    Json layers = Json::array();
    for (const auto& layer : flag.layers) {
        Json w = Json::object();
        for (const Subset& s : layer.subsets()) w[format_subset(s)] = layer[s].str();
        Json l;
        l["d"] = layer.d();
        l["weights"] = std::move(w);
        layers.push_back(std::move(l));
    }
    out["layers"] = std::move(layers);
    if (!metadata.is_null()) out["metadata"] = metadata;
    return out;
}

FlagMatrix parse_matrix_file(std::string_view text) {
    const Json doc = parse_document(text);
    reject_unknown(doc, {"n", "dims", "entries", "metadata"}, text, "matrix file");
    FlagMatrix fm;
    fm.n = integer_field(doc, "n", text, "matrix file");
    if (fm.n < 2 || fm.n > kMaxGroundSet) throw ParseError("matrix file: n out of range", key_position(text, "n"));
    const Json& dims = member(doc, "dims", text, "matrix file");
    if (!dims.is_array() || dims.empty()) throw ParseError("matrix file: \"dims\" must be a non-empty array", key_position(text, "dims"));
    for (const Json& d : dims) {
        if (!d.is_number_integer()) throw ParseError("matrix file: dims must be integers", key_position(text, "dims"));
        fm.dims.push_back(d.get<int>());
    }
    const Json& entries = member(doc, "entries", text, "matrix file");
    const long where = key_position(text, "entries");
    if (!entries.is_array()) throw ParseError("matrix file: \"entries\" must be an array of rows", where);
    const int rows = static_cast<int>(entries.size());
    if (rows < 1) throw ParseError("matrix file: no rows", where);
    fm.matrix = PolyMatrix(rows, fm.n);
    for (int r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || static_cast<int>(row.size()) != fm.n)
            throw ParseError("matrix file: row " + std::to_string(r) + " must have " + std::to_string(fm.n) + " entries", where);
        for (int c = 0; c < fm.n; ++c) {
            const Json& e = row[c];
            try {
                if (e.is_number_integer())
                    fm.matrix(r, c) = LaurentPoly(Rational(e.get<std::int64_t>()));
                else if (e.is_string())
                    fm.matrix(r, c) = LaurentPoly::parse(e.get<std::string>());
                else
                    throw ParseError("entry must be a polynomial string or an integer");
            } catch (const ParseError& err) {
                throw ParseError("matrix file: entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + err.what(), where);
            }
        }
    }
    try {
        fm.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("matrix file: ") + e.what(), where);
    }
    return fm;
}

Json matrix_to_json(const FlagMatrix& fm) {
    Json out;
    out["n"] = fm.n;
    out["dims"] = members(fm.dims);
    Json rows = Json::array();
    for (int r = 0; r < fm.matrix.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < fm.matrix.cols(); ++c) row.push_back(fm.matrix(r, c).str());
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const RelationViolation& v) {
    Json out;
    out["kind"] = v.kind == RelationKind::plucker ? "plucker" : "incidence";
    out["S"] = format_subset(v.s);
    if (v.kind == RelationKind::incidence) out["T"] = format_subset(v.t);
    out["indices"] = members(v.indices);
    Json terms = Json::array();
    for (const auto& t : v.terms) terms.push_back(t.str());
    out["terms"] = std::move(terms);
    return out;
}

Json to_json(const FlagReport& r, const FlagInstance& flag) {
    auto list = [](const std::vector<RelationViolation>& vs) {
        Json out = Json::array();
        for (const auto& v : vs) out.push_back(to_json(v));
        return out;
    };
    Json out;
    out["valid"] = r.valid();
    Json layers = Json::array();
    for (std::size_t i = 0; i < r.plucker.size(); ++i)
        layers.push_back({{"d", flag.layers[i].d()}, {"violations", list(r.plucker[i])}});
    out["plucker"] = std::move(layers);
    Json inc = Json::array();
    for (std::size_t i = 0; i < r.incidence.size(); ++i)
        inc.push_back({{"d_low", flag.layers[i].d()}, {"d_high", flag.layers[i + 1].d()}, {"violations", list(r.incidence[i])}});
    out["incidence"] = std::move(inc);
    if (!r.incidence_all.empty()) {
        Json all = Json::array();
        std::size_t k = 0;
        for (std::size_t i = 0; i < flag.layers.size(); ++i)
            for (std::size_t j = i + 1; j < flag.layers.size(); ++j, ++k)
                all.push_back({{"d_low", flag.layers[i].d()}, {"d_high", flag.layers[j].d()}, {"violations", list(r.incidence_all[k])}});
        out["all_pairs_valid"] = r.all_pairs_valid();
        out["incidence_all_pairs"] = std::move(all);
    }
    return out;
}

Json edges_to_json(const WeightedConfig& cfg, const EdgeList& edges) {
    Json out = Json::array();
    for (auto [a, b] : edges)
        out.push_back(Json::array({format_subset(cfg.vertices()[a].subset), format_subset(cfg.vertices()[b].subset)}));
    return out;
}

Json to_json(const WeightedConfig& cfg, const Subdivision& sub) {
    Json cells = Json::array();
    for (const Cell& c : sub.cells) {
        Json verts = Json::array();
        for (int v : c.vertices) verts.push_back(format_subset(cfg.vertices()[v].subset));
        Json a = Json::array();
        for (Eigen::Index i = 0; i < c.functional.a.size(); ++i) a.push_back(c.functional.a(i).str());
        cells.push_back({{"vertices", std::move(verts)}, {"functional", {{"a", std::move(a)}, {"b", c.functional.b.str()}}}});
    }
    return cells;
}

Json to_json(const Matroid& m) {
    return {{"n", m.n()}, {"rank", m.rank()}, {"bases", keys(m.bases())}};
}

Json to_json(const MatroidCheck& c) {
    Json out;
    out["ok"] = c.ok;
    if (c.witness)
        out["witness"] = {{"B1", format_subset(c.witness->b1)}, {"B2", format_subset(c.witness->b2)}, {"x", c.witness->x}};
    else
        out["witness"] = nullptr;
    return out;
}

Json to_json(const QuotientResult& r) {
    Json out;
    out["ok"] = r.ok;
    if (r.witness) {
        Json cands = Json::array();
        for (const auto& [bp, low] : r.witness->candidates)
            cands.push_back({{"B_low", format_subset(bp)}, {"low_set", format_subset(low)}});
        out["witness"] = {{"B", format_subset(r.witness->basis)},
                          {"i", r.witness->element},
                          {"high_set", format_subset(r.witness->high_set)},
                          {"candidates", std::move(cands)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const FlatsResult& r) {
    Json out;
    out["ok"] = r.ok;
    out["missing_flat"] = r.missing ? Json(format_subset(*r.missing)) : Json(nullptr);
    return out;
}

Json to_json(const CellAnalysis& a) {
    Json out;
    out["cell"] = a.cell;
    out["vertices"] = members(a.vertices);
    out["layer_p"] = keys(a.layer_p);
    out["layer_q"] = keys(a.layer_q);
    out["matroidal_p"] = a.layer_p.empty() ? Json("n/a") : to_json(a.matroid_p);
    out["matroidal_q"] = a.layer_q.empty() ? Json("n/a") : to_json(a.matroid_q);
    out["concordant"] = a.concordance ? to_json(*a.concordance) : Json("n/a");
    out["flats_oracle"] = a.flats_oracle ? to_json(*a.flats_oracle) : Json("n/a");
    out["internal_edges"] = edge_pairs(a.internal);
    return out;
}

Json to_json(const Quadrants& q) {
    Json out;
    out["no_internal_concordant"] = q.no_internal_concordant;
    out["no_internal_not_concordant"] = q.no_internal_not_concordant;
    out["internal_concordant"] = q.internal_concordant;
    out["internal_not_concordant"] = q.internal_not_concordant;
    out["not_applicable"] = q.not_applicable;
    out["non_matroidal"] = q.non_matroidal;
    return out;
}

Json to_json(const CounterexampleRecord& r) {
    Json out;
    out["trial"] = r.trial;
    out["seed"] = r.seed;
    out["mode"] = std::string(to_string(r.mode));
    out["kind"] = r.kind;
    out["instance"] = instance_to_json(r.instance);
    out["cell"] = to_json(r.analysis);
    return out;
}

Json to_json(const ExperimentReport& r) {
    Json out;
    out["n"] = r.n;
    out["p"] = r.p;
    out["q"] = r.q;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["mode"] = std::string(to_string(r.mode));
    out["cells"] = r.cells;
    out["generator_draws"] = r.generator_draws;
    out["quadrants"] = to_json(r.totals);
    out["off_diagonal"] = r.totals.off_diagonal();
    Json recs = Json::array();
    for (const auto& c : r.counterexamples) recs.push_back(to_json(c));
    out["counterexamples"] = std::move(recs);
    return out;
}

CounterexampleRecord record_from_json(const Json& j) {
    try {
        CounterexampleRecord r;
        r.trial = j.at("trial").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.mode = parse_mode(j.at("mode").get<std::string>());
        r.kind = j.at("kind").get<std::string>();
        r.instance = parse_instance(j.at("instance").dump()).flag;
        r.analysis.vertices = j.at("cell").at("vertices").get<std::vector<int>>();
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed counterexample record: ") + e.what());
    }
}

} // namespace flagdress
