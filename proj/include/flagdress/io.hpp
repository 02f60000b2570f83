#pragma once

// JSON file formats: instance files, matrix files, and the report fragments
// the CLI assembles. Rationals are written as reduced "a/b" strings or bare
// integer strings; subsets use format_subset keys. Key order is fixed.

#include "flagdress/experiment.hpp"
#include "flagdress/geometry.hpp"
#include "flagdress/matroid.hpp"
#include "flagdress/realization.hpp"
#include "flagdress/tropical.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace flagdress {

using Json = nlohmann::ordered_json;

struct InstanceFile {
    FlagInstance flag;
    Json metadata; // null when absent
};

// {"n": 4, "layers": [{"d": 2, "weights": {"12": "0", "13": 1, ...}}, ...],
//  "metadata": {...}}. Weights may be integers or rational strings; every
// d-subset must appear exactly once (also up to spelling, so "12" and "1,2"
// collide). Throws ParseError with a character offset where one is known.
InstanceFile parse_instance(std::string_view text);
Json instance_to_json(const FlagInstance& flag, const Json& metadata = nullptr);

// {"n": 3, "dims": [1, 2], "entries": [["1", "0", "t"], ["0", "1", "1"]]}.
FlagMatrix parse_matrix_file(std::string_view text);
Json matrix_to_json(const FlagMatrix& fm);

// 64-bit FNV-1a of the raw input, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

Json to_json(const RelationViolation& v);
Json to_json(const FlagReport& r, const FlagInstance& flag);
Json edges_to_json(const WeightedConfig& cfg, const EdgeList& edges);
Json to_json(const WeightedConfig& cfg, const Subdivision& sub);
Json to_json(const Matroid& m);
Json to_json(const MatroidCheck& c);
Json to_json(const QuotientResult& r);
Json to_json(const FlatsResult& r);
Json to_json(const CellAnalysis& a);
Json to_json(const Quadrants& q);
Json to_json(const CounterexampleRecord& r);
Json to_json(const ExperimentReport& r);

// Inverse of to_json(CounterexampleRecord) for the fields replay needs
// (trial, seed, mode, instance, cell vertices, kind).
CounterexampleRecord record_from_json(const Json& j);

} // namespace flagdress
