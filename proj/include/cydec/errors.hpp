#ifndef CYDEC_ERRORS_HPP
#define CYDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cydec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct NonPrimitivePolynomial : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct CoefficientOutsideSubfield : Error { using Error::Error; };
struct NotFixedByFrobeniusPower : Error { using Error::Error; };

// code construction
struct BadOrder : Error { using Error::Error; };
struct OverlappingCosets : Error { using Error::Error; };
struct GeneratorNotOverSubfield : Error { using Error::Error; };

// polynomials / interpolation
struct ArityMismatch : Error { using Error::Error; };
struct DuplicatePoints : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// representations / decoding
struct InjectivityViolated : Error { using Error::Error; };
struct TargetInDefiningSet : Error { using Error::Error; };
struct MissingArtifact : Error { using Error::Error; };
struct ZeroDerivativeAtRoot : Error { using Error::Error; };
struct StructureTheoremViolated : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

}  // namespace cydec

#endif
