#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ibcq/adversary.hpp"
#include "ibcq/circuits.hpp"
#include "ibcq/func.hpp"
#include "ibcq/info.hpp"
#include "ibcq/perr.hpp"
#include "ibcq/qsim.hpp"

// JSON mirrors the in-memory types. Doubles are written in the shortest
// form that round-trips exactly; CSV uses 17 significant digits. Every
// parse failure surfaces as ibcq::ValidationError.
namespace ibcq {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const FunctionSpec& f);
FunctionSpec function_from_json(const Json& j);

Json to_json(const Promise& p);
Promise promise_from_json(const Json& j);

Json to_json(const Design& d);
Design design_from_json(const Json& j);

Json to_json(const Quadrature& q);
Quadrature quadrature_from_json(const Json& j);

Json to_json(const FoolingPair& pair);
Json to_json(const RadiusReport& r);

Json to_json(const GateOp& g);
GateOp gate_from_json(const Json& j);

Json to_json(const QuerySpec& q);
QuerySpec query_from_json(const Json& j);

Json to_json(const Decode& d);
Decode decode_from_json(const Json& j);

Json to_json(const AlgorithmSpec& a);
AlgorithmSpec algorithm_from_json(const Json& j);

Json to_json(const BoundReport& r);
Json to_json(const Extraction& e);

// Comma-separated or JSON-array list of reals.
std::vector<double> parse_real_list(std::string_view text);

// "j,p,phi" header, one row per outcome.
std::string distribution_to_csv(const OutcomeDistribution& d);
OutcomeDistribution distribution_from_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
Json read_json_file(const std::filesystem::path& path);
// Two-space indent plus a trailing newline.
std::string dump_json(const Json& j);

// *.json files in a directory, ordered by filename. Truth is the integral.
std::vector<FamilyMember> load_family(const std::filesystem::path& dir);
void save_family(const std::filesystem::path& dir, std::span<const NamedFunction> family);

}  // namespace ibcq
