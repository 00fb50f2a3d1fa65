#ifndef C2INV_ERROR_HPP
#define C2INV_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace c2inv {

enum class ErrorCode {
  invalid_argument,  // bad value or type mismatch at an API boundary
  parse,             // malformed input text
  precondition,      // a documented hypothesis of the operation fails
  budget,            // exact computation would exceed the configured budget
  internal,          // invariant violation; indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Budget rejections carry the amount the caller would have to configure.
class BudgetError : public Error {
public:
  BudgetError(const std::string& msg, std::uint64_t required, std::uint64_t allowed)
      : Error(ErrorCode::budget, msg), required_(required), allowed_(allowed) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t allowed() const { return allowed_; }

private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace c2inv

#endif
