#include "muposet/report.hpp"

#include <sstream>

#include "json.hpp"
#include "muposet/error.hpp"

namespace muposet {

namespace {

nlohmann::json mismatch_to_json(const Mismatch& m) {
  nlohmann::json j;
  j["pi"] = m.pi;
  if (m.sigma)
    j["sigma"] = *m.sigma;
  else
    j["sigma"] = nullptr;
  j["formula_value"] = m.formula_value;
  j["oracle_value"] = m.oracle_value;
  if (m.case_label)
    j["case_label"] = *m.case_label;
  else
    j["case_label"] = nullptr;
  return j;
}

// RFC 4180 quoting, needed once permutations grow past nine letters and pick
// up commas of their own.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["campaign"] = report.campaign;
  j["parameters"] = nlohmann::json::object();
  for (const auto& [key, value] : report.parameters) j["parameters"][key] = value;
  j["total_checked"] = report.total_checked;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["mismatches"] = nlohmann::json::array();
  for (const auto& m : report.mismatches) j["mismatches"].push_back(mismatch_to_json(m));
  j["runtime_ms"] = report.runtime_ms;
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::invalid_word, std::string("report_from_json: ") + e.what());
  }
  VerificationReport report;
  try {
    report.campaign = j.at("campaign").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items())
      report.parameters[key] = value.get<long long>();
    report.total_checked = j.at("total_checked").get<long long>();
    report.passed = j.at("passed").get<long long>();
    report.failed = j.at("failed").get<long long>();
    for (const auto& jm : j.at("mismatches")) {
      Mismatch m;
      m.pi = jm.at("pi").get<std::string>();
      if (!jm.at("sigma").is_null()) m.sigma = jm.at("sigma").get<std::string>();
      m.formula_value = jm.at("formula_value").get<long long>();
      m.oracle_value = jm.at("oracle_value").get<long long>();
      if (!jm.at("case_label").is_null())
        m.case_label = jm.at("case_label").get<std::string>();
      report.mismatches.push_back(std::move(m));
    }
    report.runtime_ms = j.at("runtime_ms").get<long long>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::invalid_word, std::string("report_from_json: ") + e.what());
  }
  return report;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "# campaign=" << report.campaign << " total=" << report.total_checked
      << " passed=" << report.passed << " failed=" << report.failed << "\n";
  out << "pi,sigma,formula_value,oracle_value,case_label\n";
  for (const auto& m : report.mismatches) {
    out << csv_field(m.pi) << ',' << csv_field(m.sigma.value_or("")) << ','
        << m.formula_value << ',' << m.oracle_value << ','
        << csv_field(m.case_label.value_or("")) << "\n";
  }
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "campaign: " << report.campaign << "\n";
  for (const auto& [key, value] : report.parameters)
    out << "  " << key << " = " << value << "\n";
  out << "checked: " << report.total_checked << ", passed: " << report.passed
      << ", failed: " << report.failed << " (" << report.runtime_ms << " ms)\n";
  for (const auto& m : report.mismatches) {
    out << "  mismatch pi=" << m.pi;
    if (m.sigma) out << " sigma=" << *m.sigma;
    out << " formula=" << m.formula_value << " oracle=" << m.oracle_value;
    if (m.case_label) out << " [" << *m.case_label << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace muposet
