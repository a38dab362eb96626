#include "forms/error.hpp"

namespace forms {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidTable: return "invalid-table";
    case Errc::InvalidRing: return "invalid-ring";
    case Errc::InvalidHom: return "invalid-hom";
    case Errc::InvalidSubobject: return "invalid-subobject";
    case Errc::NotAdditiveSubgroup: return "not-an-additive-subgroup";
    case Errc::NotAnIdeal: return "not-an-ideal";
    case Errc::ParentMismatch: return "parent-mismatch";
    case Errc::NotNormal: return "not-normal";
    case Errc::NotConormal: return "not-conormal";
    case Errc::NotAnIsomorphism: return "not-an-isomorphism";
    case Errc::NotInducible: return "not-inducible";
    case Errc::NormalityViolation: return "normality-violation";
    case Errc::HypothesisViolation: return "hypothesis-violation";
    case Errc::ModelCapability: return "model-capability";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::Syntax: return "syntax";
    case Errc::UndefinedName: return "undefined-name";
    case Errc::Arity: return "arity";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(message) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace forms
