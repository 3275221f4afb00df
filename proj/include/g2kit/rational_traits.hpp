#pragma once

#include <Eigen/Core>

#include "g2kit/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<g2kit::Rational> : GenericNumTraits<g2kit::Rational> {
  typedef g2kit::Rational Real;
  typedef g2kit::Rational NonInteger;
  typedef g2kit::Rational Literal;
  typedef g2kit::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int digits() { return 0; }
};
}  // namespace Eigen
