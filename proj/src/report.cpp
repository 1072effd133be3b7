#include "opcat/report.hpp"

namespace opcat {

namespace {
constexpr std::size_t kMaxWitnesses = 8;
}

void CheckResult::fail(const std::string& witness) {
  ++cases;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
}

CheckResult& Report::check(const std::string& name) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  checks_.push_back(CheckResult{name});
  return checks_.back();
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.ok()) return false;
  return true;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckResult& mine = check(prefix + c.name);
    mine.cases += c.cases;
    mine.failures += c.failures;
    mine.partial += c.partial;
    for (const auto& w : c.witnesses)
      if (mine.witnesses.size() < kMaxWitnesses) mine.witnesses.push_back(w);
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject_;
  j["pass"] = ok();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["name"] = c.name;
    e["pass"] = c.ok();
    e["cases"] = c.cases;
    e["failures"] = c.failures;
    if (c.partial) e["skipped_undefined"] = c.partial;
    if (!c.witnesses.empty()) e["witnesses"] = c.witnesses;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (!info_.empty()) j["info"] = info_;
  return j;
}

}  // namespace opcat
