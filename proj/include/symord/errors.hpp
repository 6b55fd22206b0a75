#pragma once

#include <stdexcept>
#include <string>

namespace symord {

// Error taxonomy.  Input-shaped problems (bad text, bad indices, unknown
// names) are distinct from structural problems (cycles, missing bottom,
// exceeded enumeration guards) and from contract violations (calling an
// operation outside its stated domain).

struct InvalidLevelError : std::out_of_range {
  explicit InvalidLevelError(const std::string& msg) : std::out_of_range(msg) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct OrderError : std::invalid_argument {
  explicit OrderError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BottomError : std::invalid_argument {
  explicit BottomError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct LookupError : std::out_of_range {
  explicit LookupError(const std::string& msg) : std::out_of_range(msg) {}
};

struct SizeError : std::length_error {
  explicit SizeError(const std::string& msg) : std::length_error(msg) {}
};

struct CapabilityError : std::logic_error {
  explicit CapabilityError(const std::string& msg) : std::logic_error(msg) {}
};

struct PrecondError : std::logic_error {
  explicit PrecondError(const std::string& msg) : std::logic_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MismatchError : std::invalid_argument {
  explicit MismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace symord
