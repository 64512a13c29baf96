#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace vortex::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *kVersion = "vortexoam 1.0.0";

//! Versioned physics/numerics defaults echoed into every record.
Json defaults_block();

/// One output record:
///   { subcommand, version, defaults, input, outputs, diagnostics }
/// `outputs` and `diagnostics` are flat objects of scalars; their keys (in
/// order) form the CSV header of the subcommand.
struct ResultRecord {
  std::string subcommand;
  Json input = Json::object();
  Json outputs = Json::object();
  Json diagnostics = Json::object();

  Json to_json() const;
};

enum class Format { csv, json };
Format parse_format(const std::string &s);

//! JSON: a single top-level array. Floating-point values carry 17
//! significant digits so they round-trip bit-exactly.
std::string emit_json(const std::vector<ResultRecord> &records);
//! RFC-4180 CSV: header row of output keys then diagnostic keys, CRLF-free
//! ("\n") line endings, fields quoted when they contain , " or newline.
std::string emit_csv(const std::vector<ResultRecord> &records);
std::string emit(const std::vector<ResultRecord> &records, Format format);

//! Compact JSON writer with %.17g doubles.
std::string dump_json(const Json &j);

} // namespace vortex::cli
