#ifndef SPSOLVE_POLYNOMIAL_HPP
#define SPSOLVE_POLYNOMIAL_HPP

#include "spsolve/exponent.hpp"
#include "spsolve/rational.hpp"

#include <complex>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace spsolve {

/// Coefficient of a term: exact rational by default, complex double when a
/// computation has already crossed the floating boundary.
class Coefficient {
 public:
  Coefficient() : value_(Rational(0)) {}
  Coefficient(Rational q) : value_(std::move(q)) {}
  Coefficient(std::complex<double> z) : value_(z) {}
  Coefficient(long n) : value_(Rational(n)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_zero() const;
  const Rational& exact() const { return std::get<Rational>(value_); }
  std::complex<double> numeric() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator-() const;
  bool operator==(const Coefficient& o) const { return value_ == o.value_; }

 private:
  std::variant<Rational, std::complex<double>> value_;
};

/// Sparse Laurent polynomial: finitely many terms, no stored zeros, all
/// exponents of a shared length. Terms live in a sorted map so iteration
/// order (and every matrix layout built from it) is deterministic.
class SparsePoly {
 public:
  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Coefficient>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Coefficient& c);
  Coefficient coeff(const Exponent& e) const;

  std::set<Exponent> support() const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& p) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Rational& c) const;
  SparsePoly shifted(const Exponent& beta) const;  // multiply by x^beta

  /// total degree of the support (Laurent: max coordinate sum), 0 for f = 0
  std::int64_t total_degree() const;

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, Coefficient> terms_;
};

struct PolySystem {
  std::size_t nvars = 0;
  std::vector<SparsePoly> polys;
  std::vector<std::string> vars;
};

/// Parses a +/- separated sum of terms `coeff*v1^e1*...`. Coefficients are
/// rationals (`p/q`) or decimals; exponents are integers, possibly negative.
/// Throws std::invalid_argument with the offending position on bad syntax.
SparsePoly parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars);

std::string print_polynomial(const SparsePoly& f,
                             const std::vector<std::string>& vars);

}  // namespace spsolve

#endif
