#pragma once

#include <stdexcept>
#include <string>

namespace forms {

enum class Errc {
  InvalidTable,
  InvalidRing,
  InvalidHom,
  InvalidSubobject,
  NotAdditiveSubgroup,
  NotAnIdeal,
  ParentMismatch,
  NotNormal,
  NotConormal,
  NotAnIsomorphism,
  NotInducible,
  NormalityViolation,
  HypothesisViolation,
  ModelCapability,
  OutOfRange,
  Syntax,
  UndefinedName,
  Arity,
  Internal,
};

// Stable kebab-case tag, used verbatim in CLI failure lines.
const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);

  Errc code() const { return code_; }
  // Message without the "<tag>: " prefix that what() carries.
  const std::string& detail() const { return detail_; }

private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace forms
