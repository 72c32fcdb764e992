#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorKind {
  BadMatrix,
  NonFiniteGroup,
  SystemMismatch,
  NotDivisible,
  NotInP,
  NotDistinguished,
  OutOfRange,
  NoExpansion,
  NotInImage,
  NotInSpan,
  NotCovering,
  NonTermination,
  UnsupportedTorsion,
  StuckPath,
  BadPath,
  BadInput,
  CacheMismatch,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hecke
