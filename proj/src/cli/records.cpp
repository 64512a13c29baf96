#include "vortex/records.hpp"
#include "vortex/errors.hpp"
#include "vortex/ev_coupling.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vortex::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v))
    return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // keep a marker that this is floating point so it parses back as double
  if (s.find_first_of(".eE") == std::string::npos)
    s += ".0";
  return s;
}

void write_json(std::ostringstream &os, const Json &j) {
  switch (j.type()) {
  case Json::value_t::object: {
    os << '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first)
        os << ',';
      first = false;
      os << Json(it.key()).dump() << ':';
      write_json(os, it.value());
    }
    os << '}';
    break;
  }
  case Json::value_t::array: {
    os << '[';
    bool first = true;
    for (const auto &e : j) {
      if (!first)
        os << ',';
      first = false;
      write_json(os, e);
    }
    os << ']';
    break;
  }
  case Json::value_t::number_float:
    os << format_double(j.get<double>());
    break;
  default:
    os << j.dump();
  }
}

std::string csv_field(const Json &v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_number_float())
    s = format_double(v.get<double>());
  else if (v.is_null())
    s = "";
  else
    s = v.dump();
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

} // namespace

Json defaults_block() {
  Json d = Json::object();
  d["defaults_version"] = 1;
  d["units"] = "atomic (hbar = m_e = e = 4 pi eps0 = 1)";
  d["speed_of_light"] = 137.035999084;
  d["r_max_times_k_perp"] = 20.0;
  d["l_z"] = "2 pi / k_z";
  d["singular_margin"] = ev::kDefaultSingularMargin;
  d["abs_tol"] = 1e-10;
  d["rel_tol"] = 1e-8;
  d["max_depth"] = 40;
  d["y_alpha_abs_tol"] = ev::kYAlphaTolerance.abs_tol;
  d["y_alpha_rel_tol"] = ev::kYAlphaTolerance.rel_tol;
  d["radial_element"] = 1.0;
  return d;
}

Json ResultRecord::to_json() const {
  Json j = Json::object();
  j["subcommand"] = subcommand;
  j["version"] = kVersion;
  j["defaults"] = defaults_block();
  j["input"] = input;
  j["outputs"] = outputs;
  j["diagnostics"] = diagnostics;
  return j;
}

Format parse_format(const std::string &s) {
  if (s == "csv")
    return Format::csv;
  if (s == "json")
    return Format::json;
  throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

std::string dump_json(const Json &j) {
  std::ostringstream os;
  write_json(os, j);
  return os.str();
}

std::string emit_json(const std::vector<ResultRecord> &records) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < records.size(); ++i) {
    os << (i ? ",\n" : "\n");
    write_json(os, records[i].to_json());
  }
  os << (records.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string emit_csv(const std::vector<ResultRecord> &records) {
  if (records.empty())
    return "";
  std::ostringstream os;
  const auto &first = records.front();
  bool lead = true;
  for (const auto *block : {&first.outputs, &first.diagnostics})
    for (auto it = block->begin(); it != block->end(); ++it) {
      os << (lead ? "" : ",") << csv_field(it.key());
      lead = false;
    }
  os << '\n';
  for (const auto &r : records) {
    lead = true;
    for (const auto *block : {&r.outputs, &r.diagnostics})
      for (auto it = block->begin(); it != block->end(); ++it) {
        os << (lead ? "" : ",") << csv_field(it.value());
        lead = false;
      }
    os << '\n';
  }
  return os.str();
}

std::string emit(const std::vector<ResultRecord> &records, Format format) {
  return format == Format::csv ? emit_csv(records) : emit_json(records);
}

} // namespace vortex::cli
