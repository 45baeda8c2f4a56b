#ifndef SPSOLVE_RATIONAL_HPP
#define SPSOLVE_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>

namespace spsolve {

/// Exact arbitrary-precision rational. mpq_class keeps values canonical
/// (coprime, positive denominator), which the coefficient invariants require.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
  // accepts "p", "p/q" and decimal literals like "-1.25"
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad decimal literal: " + s);
    Integer num(digits, 10);
    Integer den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::complex<double> to_complex(const Rational& q) {
  return {q.get_d(), 0.0};
}

}  // namespace spsolve

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
