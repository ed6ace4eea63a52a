#include "residuum/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace residuum {

Report::Report(std::string command, std::string inputs_digest)
    : command_(std::move(command)), digest_(std::move(inputs_digest)) {}

void Report::info(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, Status::info});
}

void Report::check(const std::string& key, bool ok, const std::string& value) {
  entries_.push_back({key, value, ok ? Status::pass : Status::fail});
  if (!ok) ++failures_;
}

void Report::skip(const std::string& key, const std::string& why) {
  entries_.push_back({key, why, Status::skip});
}

void Report::warn(const std::string& id, const std::string& message) {
  warnings_.push_back({id, message});
}

namespace {
const char* status_tag(Report::Status s) {
  switch (s) {
    case Report::Status::info: return "    ";
    case Report::Status::pass: return "PASS";
    case Report::Status::fail: return "FAIL";
    case Report::Status::skip: return "SKIP";
  }
  return "????";
}
} // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "residuum report: " << command_ << "\n";
  os << "inputs: " << digest_ << "\n";
  for (const auto& e : entries_) {
    os << "  [" << status_tag(e.status) << "] " << e.key;
    if (!e.value.empty()) os << " = " << e.value;
    os << "\n";
  }
  for (const auto& w : warnings_) {
    os << "  warning " << w.id << ": " << w.message << "\n";
  }
  os << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["inputs_digest"] = digest_;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json v;
    v["key"] = e.key;
    if (!e.value.empty()) v["value"] = e.value;
    switch (e.status) {
      case Status::info: v["status"] = "info"; break;
      case Status::pass: v["status"] = "pass"; break;
      case Status::fail: v["status"] = "fail"; break;
      case Status::skip: v["status"] = "skip"; break;
    }
    verdicts.push_back(v);
  }
  j["verdicts"] = verdicts;
  nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
  for (const auto& w : warnings_) {
    nlohmann::ordered_json v;
    v["id"] = w.id;
    v["message"] = w.message;
    warnings.push_back(v);
  }
  j["warnings"] = warnings;
  j["pass"] = all_passed();
  return j.dump(2) + "\n";
}

std::string fnv1a_digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

} // namespace residuum
