// Replayable construction traces: named parameters, named elements, and
// checked identities, serialized to a line-oriented text form.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/perm.hpp"

namespace houghton {

struct TraceCheck {
  std::string description;
  bool passed = false;
  std::string witness;  // shown on failure (or extra detail on success)
};

namespace trace_detail {
inline std::string repr(const std::string& s) { return s; }
inline std::string repr(std::int64_t v) { return std::to_string(v); }
inline std::string repr(std::uint64_t v) { return std::to_string(v); }
inline std::string repr(int v) { return std::to_string(v); }
inline std::string repr(bool v) { return v ? "true" : "false"; }
inline std::string repr(const HoughtonElement& g) { return to_string(g); }
inline std::string repr(const FinitePermutation& p) { return to_string(p); }
}  // namespace trace_detail

class ConstructionTrace {
 public:
  explicit ConstructionTrace(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  void add_param(const std::string& key, std::int64_t value) {
    params_.emplace_back(key, value);
  }
  void add_elem(const std::string& key, const HoughtonElement& g) {
    elems_.emplace_back(key, to_string(g));
  }
  void add_elem(const std::string& key, const FinitePermutation& p) {
    elems_.emplace_back(key, to_string(p));
  }
  void add_check(const std::string& description, bool passed,
                 const std::string& witness = "") {
    checks_.push_back(TraceCheck{description, passed, witness});
  }
  // Convenience: record an exact-equality check with an automatic witness.
  template <class T>
  void check_equal(const std::string& description, const T& got,
                   const T& expected) {
    if (got == expected) {
      add_check(description, true);
    } else {
      add_check(description, false, "got " + trace_detail::repr(got) +
                                        ", expected " +
                                        trace_detail::repr(expected));
    }
  }

  std::int64_t param(const std::string& key) const {
    for (const auto& [k, v] : params_)
      if (k == key) return v;
    fail(errc::internal, "trace has no parameter " + key);
  }

  const std::vector<std::pair<std::string, std::int64_t>>& params() const {
    return params_;
  }
  const std::vector<std::pair<std::string, std::string>>& elems() const {
    return elems_;
  }
  const std::vector<TraceCheck>& checks() const { return checks_; }

  bool all_passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  std::string to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : params_) os << "PARAM " << k << '=' << v << '\n';
    for (const auto& [k, v] : elems_) os << "ELEM " << k << '=' << v << '\n';
    for (const auto& c : checks_) {
      os << "CHECK \"" << c.description << "\" "
         << (c.passed ? "PASS" : "FAIL");
      if (!c.witness.empty()) os << ' ' << c.witness;
      os << '\n';
    }
    return os.str();
  }

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::int64_t>> params_;
  std::vector<std::pair<std::string, std::string>> elems_;
  std::vector<TraceCheck> checks_;
};

}  // namespace houghton
