#pragma once

#include <stdexcept>
#include <string>

namespace incdec {

enum class ErrorKind {
  Input,         // bad argument, mismatched ground sets, out-of-range subset
  Parse,         // malformed instance/option JSON
  Capacity,      // request exceeds an enumeration cap
  Precondition,  // a documented precondition does not hold (e.g. non-monotone)
  Io,            // file system failure
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace incdec
