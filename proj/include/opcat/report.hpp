#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace opcat {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;     // instances compared
  std::size_t failures = 0;  // instances that disagreed
  std::size_t partial = 0;   // instances skipped because one side was undefined
  std::vector<std::string> witnesses;

  bool ok() const { return failures == 0; }
  void pass() { ++cases; }
  void fail(const std::string& witness);
  void expect(bool ok, const std::string& witness) { ok ? pass() : fail(witness); }
  template <class F>
  void expect_lazy(bool ok, F&& witness) {
    if (ok) pass(); else fail(witness());
  }
};

class Report {
 public:
  explicit Report(std::string subject = "") : subject_(std::move(subject)) {}

  CheckResult& check(const std::string& name);
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  bool ok() const;
  void merge(const Report& other, const std::string& prefix = "");

  nlohmann::json& info() { return info_; }
  const nlohmann::json& info() const { return info_; }
  const std::string& subject() const { return subject_; }

  nlohmann::json to_json() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  nlohmann::json info_ = nlohmann::json::object();
};

}  // namespace opcat
