// Error taxonomy shared by all components.
#pragma once

#include <stdexcept>
#include <string>

namespace houghton {

enum class errc {
  malformed_cycles,   // overlapping cycles, repeated points, cycle of length < 2
  domain_mismatch,    // mixing ray-mode and line-mode permutations
  ambient_mismatch,   // combining elements over different n
  invalid_argument,   // parameter outside its documented range
  not_finitary,       // finitary-only operation applied to a translating element
  window_violation,   // generator support escapes the supplied window
  oracle_overflow,    // brute-force enumeration exceeded its element budget
  unsupported,        // input outside the supported class (e.g. infinite index)
  not_applicable,     // construction has no output for these parameters
  parse_error,        // malformed text input
  internal            // invariant breach: indicates a bug, not a user error
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_cycles: return "malformed-cycles";
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::ambient_mismatch: return "ambient-mismatch";
    case errc::invalid_argument: return "invalid-argument";
    case errc::not_finitary: return "not-finitary";
    case errc::window_violation: return "window-violation";
    case errc::oracle_overflow: return "oracle-overflow";
    case errc::unsupported: return "unsupported";
    case errc::not_applicable: return "not-applicable";
    case errc::parse_error: return "parse-error";
    case errc::internal: return "internal-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace houghton
