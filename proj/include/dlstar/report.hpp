#ifndef DLSTAR_REPORT_HPP
#define DLSTAR_REPORT_HPP

#include <string>

#include <json.hpp>

#include "dlstar/certificate.hpp"
#include "dlstar/derived.hpp"
#include "dlstar/harness.hpp"
#include "dlstar/ingest.hpp"

namespace dlstar {

/// JSON records. Every record carries `schema_version`; group orders are
/// decimal strings. The schema is documented in README.md.
inline constexpr int report_schema_version = 1;

using Json = nlohmann::ordered_json;

namespace detail {
inline Json integer_list(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}
}  // namespace detail

inline Json series_to_json(const std::string& name, std::size_t degree, const DerivedSeriesReport& r) {
  Json j;
  j["schema_version"] = report_schema_version;
  j["name"] = name;
  j["degree"] = degree;
  j["order"] = r.orders.front().str();
  j["derived_orders"] = detail::integer_list(r.orders);
  j["dlstar"] = r.dlstar;
  j["perfect_core_order"] = r.perfect_core_order.str();
  j["flags"] = {{"solvable", r.is_solvable}, {"perfect", r.is_perfect}};
  return j;
}

/// Inverse of series_to_json; throws ParseError on schema violations.
inline DerivedSeriesReport series_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != report_schema_version) throw ParseError("unsupported schema_version");
    DerivedSeriesReport r;
    for (const auto& s : j.at("derived_orders")) r.orders.emplace_back(s.get<std::string>());
    if (r.orders.empty() || r.orders.front() != Integer(j.at("order").get<std::string>())) {
      throw ParseError("order does not match derived_orders");
    }
    r.dlstar = j.at("dlstar").get<std::size_t>();
    r.perfect_core_order = Integer(j.at("perfect_core_order").get<std::string>());
    r.is_solvable = j.at("flags").at("solvable").get<bool>();
    r.is_perfect = j.at("flags").at("perfect").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("report: ") + e.what());  // malformed decimal string
  }
}

inline Json certificate_body(const BoundCertificate& c) {
  Json j;
  j["value"] = c.value;
  j["rule"] = c.rule;
  Json in = Json::object();
  for (const auto& [k, v] : c.inputs) in[k] = v;
  j["inputs"] = in;
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(certificate_body(p));
  j["parts"] = parts;
  return j;
}

inline Json certificate_to_json(const BoundCertificate& c) {
  Json j;
  j["schema_version"] = report_schema_version;
  j.update(certificate_body(c));
  return j;
}

inline BoundCertificate certificate_from_json(const Json& j) {
  try {
    BoundCertificate c;
    c.value = j.at("value").get<std::uint64_t>();
    c.rule = j.at("rule").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) c.inputs.emplace_back(k, v.get<std::string>());
    for (const auto& p : j.at("parts")) c.parts.push_back(certificate_from_json(p));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

inline Json dlstar_max_to_json(const DlstarMaxReport& r) {
  Json j;
  j["schema_version"] = report_schema_version;
  j["name"] = r.name;
  j["degree"] = r.degree;
  j["order"] = r.order.str();
  Json ms = Json::array();
  for (const auto& m : r.maximals) ms.push_back({{"name", m.name}, {"order", m.order.str()}, {"dlstar", m.dlstar}});
  j["maximals"] = ms;
  j["dlstar_max"] = r.dlstar_max;
  j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
  j["flags"] = {{"lower_bound_only", r.lower_bound_only}};
  return j;
}

inline Json suite_to_json(const SuiteReport& r) {
  Json j;
  j["schema_version"] = report_schema_version;
  j["filter"] = r.filter;
  j["seed"] = r.seed;
  Json rs = Json::array();
  for (const auto& s : r.results) {
    Json v = Json::object();
    for (const auto& [k, x] : s.outcome.values) v[k] = x;
    rs.push_back({{"id", s.id},
                  {"tag", to_string(s.tag)},
                  {"claim", s.claim},
                  {"status", to_string(s.outcome.status)},
                  {"values", v},
                  {"message", s.outcome.message},
                  {"seconds", s.seconds}});
  }
  j["scenarios"] = rs;
  j["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)}};
  return j;
}

}  // namespace dlstar

#endif  // DLSTAR_REPORT_HPP
