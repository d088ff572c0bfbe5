#ifndef RSCRAM_ERRORS_HPP_
#define RSCRAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rscram {

// Caller violated a precondition (bad index, size mismatch, bad flag combo).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (PHC string, graph JSON).
class DecodeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// The environment failed us (entropy source, allocation limits).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A should-never-happen condition, e.g. the shuffle exceeding its round cap.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rscram

#endif  // RSCRAM_ERRORS_HPP_
