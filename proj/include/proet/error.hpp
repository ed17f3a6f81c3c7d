#pragma once

#include <stdexcept>
#include <string>

namespace proet {

// Base of every error raised by the library. The concrete subclasses carry
// the name of the failed contract so callers can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PROET_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

// field
PROET_DEFINE_ERROR(DivisionByZero);
PROET_DEFINE_ERROR(FieldMismatch);
PROET_DEFINE_ERROR(NotPrime);
PROET_DEFINE_ERROR(DimensionMismatch);
PROET_DEFINE_ERROR(SingularBasis);
PROET_DEFINE_ERROR(SingularMatrix);
PROET_DEFINE_ERROR(ParseError);

// groups
PROET_DEFINE_ERROR(GroupAxiomViolation);
PROET_DEFINE_ERROR(BadFactorIndex);
PROET_DEFINE_ERROR(BadElementIndex);
PROET_DEFINE_ERROR(SignatureMismatch);
PROET_DEFINE_ERROR(ExponentOverflow);
PROET_DEFINE_ERROR(NotAHomomorphism);

// curve
PROET_DEFINE_ERROR(InvalidCurve);
PROET_DEFINE_ERROR(DisconnectedCurve);

// representations
PROET_DEFINE_ERROR(InvalidRepresentation);
PROET_DEFINE_ERROR(PresentationMismatch);

// covering
PROET_DEFINE_ERROR(FreenessViolation);
PROET_DEFINE_ERROR(NoComplement);
PROET_DEFINE_ERROR(TrivialW);
PROET_DEFINE_ERROR(NotInKernel);

// descent
PROET_DEFINE_ERROR(CocycleViolation);
PROET_DEFINE_ERROR(ScopeMismatch);
PROET_DEFINE_ERROR(TransportConflict);
PROET_DEFINE_ERROR(EquivarianceViolation);
PROET_DEFINE_ERROR(KernelNotTrivial);

// stratified / specialization
PROET_DEFINE_ERROR(ModeMismatch);
PROET_DEFINE_ERROR(SquareViolation);

// hull
PROET_DEFINE_ERROR(AxiomViolation);
PROET_DEFINE_ERROR(RoundtripFailure);
PROET_DEFINE_ERROR(NonInjectiveDual);

// cli
PROET_DEFINE_ERROR(SpecParseError);
PROET_DEFINE_ERROR(CertificateFailure);

#undef PROET_DEFINE_ERROR

}  // namespace proet
