#pragma once

#include <stdexcept>
#include <string>

namespace g2kit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define G2KIT_ERROR(Name, tag)                                     \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(tag, what) {}   \
  };

G2KIT_ERROR(ConfigError, "config")
G2KIT_ERROR(ConfigMismatchError, "config-mismatch")
G2KIT_ERROR(DivisionByZeroError, "division-by-zero")
G2KIT_ERROR(PrecisionError, "precision")
G2KIT_ERROR(NotInDomainError, "not-in-domain")
G2KIT_ERROR(ParseError, "parse")
G2KIT_ERROR(InvalidDoublingError, "invalid-doubling")
G2KIT_ERROR(InvalidPairError, "invalid-pair")
G2KIT_ERROR(WrongKindError, "wrong-kind")
G2KIT_ERROR(InvalidLiftError, "invalid-lift")
G2KIT_ERROR(InvalidWitnessError, "invalid-witness")
G2KIT_ERROR(DomainError, "domain")
G2KIT_ERROR(InvalidTripleError, "invalid-triple")
G2KIT_ERROR(DegeneracyError, "degeneracy")
G2KIT_ERROR(VolumeError, "volume")
G2KIT_ERROR(DualityError, "duality")
G2KIT_ERROR(SingularityError, "singularity")
G2KIT_ERROR(PreconditionError, "precondition")
G2KIT_ERROR(LatticeMembershipError, "lattice-membership")
G2KIT_ERROR(UnsupportedError, "unsupported")
G2KIT_ERROR(InvalidInputError, "invalid-input")

#undef G2KIT_ERROR

}  // namespace g2kit
