#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udeform/rational.hpp"

namespace udeform {

/// Exponent vector; entry i is the exponent of variables()[i].
using ExpVec = std::vector<int>;

/// The deformation parameter is an ordinary variable with this name; a degree
/// cap in it models series truncation.
inline const std::string kDeformVar = "t";

/// Exact multivariate polynomial over named variables with Rational
/// coefficients. Immutable value type: all operations return new values.
///
/// Canonical form: variables sorted ascending and deduplicated, no stored
/// zero coefficients, every exponent vector sized to the variable list.
/// Monomials compare lexicographically against that variable order, which
/// fixes both equality testing and text emission.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  Poly(const Rational& c, const std::string& var, int exp = 1);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly var(const std::string& name) { return Poly(Rational(1), name); }
  static Poly constant(const Rational& c) { return Poly(c); }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  std::optional<int> tcap() const { return tcap_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the all-zero monomial).
  Rational constant_term() const;

  /// Total degree, and degree in one variable. Zero polynomial has degree -1.
  int total_degree() const;
  int degree_in(const std::string& var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order (for use as a map key); refines equality.
  bool operator<(const Poly& o) const;

  Poly scale(const Rational& c) const;
  Poly pow(unsigned e) const;

  /// order-fold partial derivative. Unknown variable names are rejected for
  /// order >= 1 (the derivative of something genuinely constant in var is
  /// zero, but a typo should not silently vanish).
  Poly diff(const std::string& var, unsigned order = 1) const;

  /// Simultaneous substitution var -> replacement. Variables not in the map
  /// are kept. Exact composition.
  Poly substitute(const std::map<std::string, Poly>& repl) const;

  /// Rename variables (helper for tensor-leg tagging). Renaming must not
  /// collide with a retained variable.
  Poly rename(const std::map<std::string, std::string>& names) const;

  /// Evaluate some variables at rational points; the rest remain symbolic.
  Poly eval(const std::map<std::string, Rational>& point) const;

  /// Returns the coefficient of var^k as a polynomial in the other variables.
  Poly coefficient_of(const std::string& var, int k) const;

  /// Copy with the given cap on the t-degree (dropping higher terms), or with
  /// the cap removed if nullopt.
  Poly with_tcap(std::optional<int> cap) const;

  /// Canonical text form, e.g. "3/2*q1^2*p1 + t*q1 - 1". Zero prints "0".
  std::string str() const;

  /// Builds a polynomial from raw parts (normalizes). Used by the parser.
  static Poly from_terms(std::vector<std::string> vars,
                         std::map<ExpVec, Rational> terms,
                         std::optional<int> tcap = std::nullopt);

 private:
  void prune();  // drop zeros and over-cap t terms

  std::vector<std::string> vars_;
  std::map<ExpVec, Rational> terms_;
  std::optional<int> tcap_;
};

Poly operator*(const Rational& c, const Poly& p);

/// Re-expresses both polynomials over the union of their variable lists.
std::pair<Poly, Poly> align(const Poly& a, const Poly& b);

/// Monomial of an aligned polynomial as (vars, exponents, coefficient).
struct MonomialRef {
  const std::vector<std::string>* vars;
  const ExpVec* exps;
  const Rational* coeff;
};

}  // namespace udeform
