#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfactor/algebra.hpp"

namespace gfactor {

/// Element of a G-algebra in the PBW basis. Terms are kept sorted by the
/// algebra's ordering, largest first, with no zero coefficients; two equal
/// elements therefore have identical term vectors.
class NcPolynomial {
 public:
  explicit NcPolynomial(AlgebraPtr algebra);

  static NcPolynomial constant(AlgebraPtr algebra, const Rational& value);
  static NcPolynomial variable(AlgebraPtr algebra, std::size_t index);
  static NcPolynomial monomial(AlgebraPtr algebra, ExponentVector exponents,
                               const Rational& coeff = 1);
  /// Combines repeated exponent vectors and drops zeros.
  static NcPolynomial from_terms(AlgebraPtr algebra, TermList terms);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const TermList& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// True for zero and for nonzero scalars.
  bool is_constant() const;

  /// Throws DomainError on the zero polynomial.
  const Term& leading_term() const;
  const ExponentVector& lm() const { return leading_term().exponents; }
  const Rational& lc() const { return leading_term().coeff; }
  /// Coefficient of x^e (zero if absent).
  Rational coefficient(const ExponentVector& e) const;

  /// Same element viewed in `target`, which must share this algebra's
  /// relations; terms are re-sorted by the target ordering.
  NcPolynomial rebase(const AlgebraPtr& target) const;

  NcPolynomial operator-() const;
  NcPolynomial& operator+=(const NcPolynomial& other);
  NcPolynomial& operator-=(const NcPolynomial& other);
  NcPolynomial& operator*=(const Rational& scalar);

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) {
    return a += b;
  }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) {
    return a -= b;
  }
  friend NcPolynomial operator*(NcPolynomial a, const Rational& s) {
    return a *= s;
  }
  friend NcPolynomial operator*(const Rational& s, NcPolynomial a) {
    return a *= s;
  }
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);

  /// Canonical-form equality; operands from different presentations are
  /// never equal.
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b);

 private:
  void check_compatible(const NcPolynomial& other) const;
  void sort_terms();

  AlgebraPtr algebra_;
  TermList terms_;
};

/// PBW normal form of f * g. Throws DomainError for mixed-algebra operands.
NcPolynomial multiply(const NcPolynomial& f, const NcPolynomial& g);

/// Product of a non-empty sequence, left to right.
NcPolynomial product(std::span<const NcPolynomial> factors);

/// Leading exponent vector and coefficient under `ordering`. Throws
/// DomainError on zero.
Term leading(const NcPolynomial& f, const MonomialOrdering& ordering);

/// (unit, monic) with unit * monic = f and lc(monic) = 1 under the algebra's
/// ordering. Throws DomainError on zero.
std::pair<Rational, NcPolynomial> normalize_monic(const NcPolynomial& f);

/// Human-readable form: terms largest first, monomials in PBW variable order,
/// e.g. "x^2*d - 3/2*x + 1". Re-parses to the same element.
std::string to_string(const NcPolynomial& f);

/// Formats terms in the given order with the same conventions as to_string.
std::string format_terms(const TermList& terms,
                         const std::vector<std::string>& names);

/// Total order on canonical text; used wherever output order must be
/// reproducible.
bool canonical_less(const NcPolynomial& a, const NcPolynomial& b);

}  // namespace gfactor
