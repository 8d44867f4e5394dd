#pragma once

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bilie/errors.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

inline constexpr int kSchemaVersion = 1;

/// Machine-readable result of one command invocation. Serialization is
/// lossless and deterministic: identical records render byte-identically.
struct OutputRecord {
  struct Row {
    std::optional<MultiDegree> bidegree;  // exactly one of the two keys is set
    std::optional<int> total_degree;
    Int value = 0;

    friend bool operator==(const Row&, const Row&) = default;
  };

  int schema_version = kSchemaVersion;
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Row> table;
  std::vector<std::string> elements;                    // basis listings
  std::vector<std::pair<std::string, bool>> provenance;  // checks run: name, passed

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["parameters"] = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["table"] = nlohmann::json::array();
  for (const auto& row : r.table) {
    nlohmann::json jr;
    if (row.bidegree) {
      jr["kind"] = "bidegree";
      jr["m1"] = row.bidegree->m1;
      jr["m2"] = row.bidegree->m2;
    } else {
      jr["kind"] = "total";
      jr["degree"] = row.total_degree.value();
    }
    jr["value"] = row.value.str();  // string: values may exceed 64 bits
    j["table"].push_back(std::move(jr));
  }
  j["elements"] = r.elements;
  j["provenance"] = nlohmann::json::array();
  for (const auto& [name, passed] : r.provenance)
    j["provenance"].push_back({{"check", name}, {"passed", passed}});
  return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items())
    r.parameters[k] = v.get<std::string>();
  for (const auto& jr : j.at("table")) {
    OutputRecord::Row row;
    if (jr.at("kind") == "bidegree")
      row.bidegree = MultiDegree{jr.at("m1").get<int>(), jr.at("m2").get<int>()};
    else
      row.total_degree = jr.at("degree").get<int>();
    row.value = Int(jr.at("value").get<std::string>());
    r.table.push_back(std::move(row));
  }
  r.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& jp : j.at("provenance"))
    r.provenance.emplace_back(jp.at("check").get<std::string>(), jp.at("passed").get<bool>());
  return r;
}

inline std::string render_json(const OutputRecord& r) { return to_json(r).dump(2) + "\n"; }

/// Four fixed columns; no field ever contains a comma, so no quoting.
inline std::string render_csv(const OutputRecord& r) {
  std::ostringstream os;
  os << "kind,key,degree,value\n";
  for (const auto& row : r.table) {
    if (row.bidegree)
      os << "bidegree," << row.bidegree->m1 << ":" << row.bidegree->m2 << ","
         << row.bidegree->total() << "," << row.value.str() << "\n";
    else
      os << "total,," << *row.total_degree << "," << row.value.str() << "\n";
  }
  for (std::size_t i = 0; i < r.elements.size(); ++i)
    os << "element," << i << ",," << r.elements[i] << "\n";
  for (const auto& [name, passed] : r.provenance)
    os << "check," << name << ",," << (passed ? "pass" : "fail") << "\n";
  return os.str();
}

inline std::string render_table(const OutputRecord& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.parameters) os << "  " << k << " = " << v << "\n";
  bool has_bidegree = false, has_total = false;
  for (const auto& row : r.table) {
    has_bidegree = has_bidegree || row.bidegree.has_value();
    has_total = has_total || row.total_degree.has_value();
  }
  if (has_bidegree) {
    os << "bidegree table:\n";
    for (const auto& row : r.table)
      if (row.bidegree)
        os << "  " << std::setw(8) << row.bidegree->str() << "  " << row.value.str() << "\n";
  }
  if (has_total) {
    os << "totals by degree:\n";
    for (const auto& row : r.table)
      if (row.total_degree)
        os << "  " << std::setw(8) << *row.total_degree << "  " << row.value.str() << "\n";
  }
  if (!r.elements.empty()) {
    os << "elements:\n";
    for (std::size_t i = 0; i < r.elements.size(); ++i)
      os << "  [" << i << "] " << r.elements[i] << "\n";
  }
  if (!r.provenance.empty()) {
    os << "checks:\n";
    for (const auto& [name, passed] : r.provenance)
      os << "  " << (passed ? "pass" : "FAIL") << "  " << name << "\n";
  }
  return os.str();
}

inline std::string render(const OutputRecord& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "csv") return render_csv(r);
  if (format == "table") return render_table(r);
  throw DomainError("unknown output format \"" + format + "\"");
}

}  // namespace bilie
