#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

enum class ErrorKind {
  domain,
  pole,
  indeterminate,
  order_overflow,
  uncancelled_singularity,
  range,
  contract,
  no_limit,
  resolution,
  degenerate,
  window,
  propagation,
};

const char* to_string(ErrorKind kind) noexcept;

// Every numeric failure is reported through this type; no operation returns
// a silent NaN. `where` carries the offending integer (pole location, series
// index, ...) when there is one.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, long long where = 0)
      : std::runtime_error(what), kind_(kind), where_(where) {}

  ErrorKind kind() const noexcept { return kind_; }
  long long where() const noexcept { return where_; }

private:
  ErrorKind kind_;
  long long where_;
};

}  // namespace cesaro
