#pragma once

#include <json.hpp>

#include "qlift/datum.hpp"
#include "qlift/hopf.hpp"

namespace qlift {

using Json = nlohmann::json;

// Parsed input file: datum + lifting parameters + run options.
struct ParsedInput {
    std::shared_ptr<Datum> datum;
    LiftingParams params;
    long degree_cap = 0;  // 0 = default
    bool verify_full = true;
    std::uint64_t seed = 1;
};

// Scalar literals: "p/q", {"root": [E, k]}, {"root": [E, k], "coeff": "p/q"},
// or a list of these (sum). Roots of order dividing the session order embed.
Scalar parse_scalar(const Json& j, const CycloField* F, const std::string& pointer);

// Datum files per the external schema; errors carry JSON-pointer-style paths.
ParsedInput parse_datum(const Json& j);
ParsedInput parse_datum_text(const std::string& text);

Json scalar_to_json(const Scalar& s);
Json element_to_json(const Hopf& H, const SparseVec& v);

// Report skeleton: schema id, command, input echo, conventions in force.
Json make_report(const std::string& command, const ParsedInput& in);
Json datum_echo(const Datum& d, const LiftingParams& p);

// byte-deterministic serialization (sorted keys, fixed spacing)
std::string dump_report(const Json& j);

}  // namespace qlift
