/**
 * @file report_json.hpp
 * @brief JSON and text renderings of Report. Numbers are decimal strings.
 *
 * Schema:
 *   {"claim": str, "params": {name: "int", ...}, "verdict": str,
 *    "steps": [{"description": str,
 *               "values": [{"name": str, "type": "integer"|"vector"|"text",
 *                           "value": "int" | ["int", ...] | str}]}]}
 */
#pragma once

#include "jetk/report.hpp"

#include <json.hpp>

#include <string>

namespace jetk {

using Json = nlohmann::ordered_json;

inline Json to_json(const StepValue& v) {
  Json j;
  if (const auto* i = std::get_if<BigInt>(&v)) {
    j["type"] = "integer";
    j["value"] = i->str();
  } else if (const auto* vec = std::get_if<std::vector<BigInt>>(&v)) {
    j["type"] = "vector";
    j["value"] = Json::array();
    for (const auto& x : *vec) j["value"].push_back(x.str());
  } else {
    j["type"] = "text";
    j["value"] = std::get<std::string>(v);
  }
  return j;
}

inline Json to_json(const Report& r) {
  Json j;
  j["claim"] = r.claim;
  j["params"] = Json::object();
  for (const auto& [name, value] : r.params) j["params"][name] = std::to_string(value);
  j["verdict"] = to_string(r.verdict);
  j["steps"] = Json::array();
  for (const auto& s : r.steps) {
    Json js;
    js["description"] = s.description;
    js["values"] = Json::array();
    for (const auto& nv : s.values) {
      Json v = to_json(nv.value);
      Json entry;
      entry["name"] = nv.name;
      entry["type"] = v["type"];
      entry["value"] = v["value"];
      js["values"].push_back(std::move(entry));
    }
    j["steps"].push_back(std::move(js));
  }
  return j;
}

inline std::string emit_json(const Report& r) { return to_json(r).dump(2); }

inline Report report_from_json(const Json& j) {
  Report r;
  r.claim = j.at("claim").get<std::string>();
  for (const auto& [name, value] : j.at("params").items())
    r.params.emplace_back(name, std::stoll(value.get<std::string>()));
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const auto& js : j.at("steps")) {
    ReportStep s{js.at("description").get<std::string>(), {}};
    for (const auto& v : js.at("values")) {
      const auto type = v.at("type").get<std::string>();
      StepValue value;
      if (type == "integer") {
        value = BigInt(v.at("value").get<std::string>());
      } else if (type == "vector") {
        std::vector<BigInt> vec;
        for (const auto& x : v.at("value")) vec.emplace_back(x.get<std::string>());
        value = std::move(vec);
      } else if (type == "text") {
        value = v.at("value").get<std::string>();
      } else {
        throw ArgumentError("report value of unknown type '" + type + "'");
      }
      s.values.push_back({v.at("name").get<std::string>(), std::move(value)});
    }
    r.steps.push_back(std::move(s));
  }
  return r;
}

inline Report report_from_json(const std::string& text) { return report_from_json(Json::parse(text)); }

inline std::string value_text(const StepValue& v) {
  if (const auto* i = std::get_if<BigInt>(&v)) return i->str();
  if (const auto* vec = std::get_if<std::vector<BigInt>>(&v)) {
    std::string out = "[";
    for (std::size_t k = 0; k < vec->size(); ++k) out += (k ? ", " : "") + (*vec)[k].str();
    return out + "]";
  }
  return std::get<std::string>(v);
}

inline std::string emit_text(const Report& r) {
  std::string out = "claim: " + r.claim + "\nparams:";
  for (const auto& [name, value] : r.params) out += " " + name + "=" + std::to_string(value);
  out += "\nverdict: " + to_string(r.verdict) + "\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    out += std::to_string(i + 1) + ". " + r.steps[i].description + "\n";
    for (const auto& nv : r.steps[i].values) {
      std::string text = value_text(nv.value);
      // indent continuation lines of multi-line values (matrices)
      for (std::size_t p = text.find('\n'); p != std::string::npos && p + 1 < text.size(); p = text.find('\n', p + 1))
        text.insert(p + 1, "       ");
      if (!text.empty() && text.back() == '\n') text.pop_back();
      out += "   " + nv.name + " = " + text + "\n";
    }
  }
  return out;
}

}  // namespace jetk
