#ifndef FERMAT_TYPES_HPP
#define FERMAT_TYPES_HPP

#include <Eigen/Core>

#include <limits>
#include <stdexcept>
#include <string>

namespace fermat {

using Scalar = double;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Arr = Eigen::ArrayXd;
using Index = Eigen::Index;

// Extended nonnegative reals: +inf is the distinguished unreachable value,
// arithmetic saturates.
inline constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

inline bool finite(Scalar x) { return std::isfinite(x); }

inline Scalar ext_add(Scalar a, Scalar b) {
  if (a == kInf || b == kInf) return kInf;
  return a + b;
}

// Three-valued answer for condition checks that may not terminate decisively.
enum class Tri { False, True, Indeterminate };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "indeterminate";
  }
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFieldError : Error { using Error::Error; };
struct DegenerateEdgeError : Error { using Error::Error; };
struct LookupError : Error { using Error::Error; };
struct InvalidInputError : Error { using Error::Error; };
struct NotCauchyError : Error { using Error::Error; };
struct InvalidProfileError : Error { using Error::Error; };
struct UnsolvableError : Error { using Error::Error; };
struct NotTimelikeError : Error { using Error::Error; };
struct InvalidMetricError : Error { using Error::Error; };
struct MissingClassError : Error { using Error::Error; };
struct IncompatibleError : Error { using Error::Error; };
struct UndecidableError : Error { using Error::Error; };
struct NotSPairableError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace fermat

#endif
