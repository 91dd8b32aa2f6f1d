#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfactor/ordering.hpp"
#include "gfactor/rational.hpp"

namespace gfactor {

struct CommTerm {
  ExponentVector exponents;
  Rational coeff;

  friend bool operator==(const CommTerm&, const CommTerm&) = default;
};

/// Term orders on unknowns; unknown 0 is the largest variable in both.
enum class CommOrder : unsigned char { lex, grevlex };

/// a < b in the given order.
bool comm_less(CommOrder order, const ExponentVector& a,
               const ExponentVector& b);

/// Commutative polynomial over Q in a fixed number of unknowns. Terms are
/// sorted descending in the polynomial's term order (lex by default).
/// Arithmetic between polynomials of different orders follows the left
/// operand.
class CommPolynomial {
 public:
  explicit CommPolynomial(std::size_t nvars = 0,
                          CommOrder order = CommOrder::lex)
      : nvars_(nvars), order_(order) {}

  static CommPolynomial constant(std::size_t nvars, const Rational& value,
                                 CommOrder order = CommOrder::lex);
  static CommPolynomial variable(std::size_t nvars, std::size_t index,
                                 CommOrder order = CommOrder::lex);
  static CommPolynomial from_terms(std::size_t nvars,
                                   std::vector<CommTerm> terms,
                                   CommOrder order = CommOrder::lex);

  std::size_t nvars() const { return nvars_; }
  CommOrder order() const { return order_; }
  /// Same polynomial with terms re-sorted for `order`.
  CommPolynomial with_order(CommOrder order) const;
  const std::vector<CommTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const CommTerm& leading_term() const;
  const ExponentVector& lm() const { return leading_term().exponents; }
  const Rational& lc() const { return leading_term().coeff; }

  bool involves(std::size_t var) const;
  std::size_t degree_in(std::size_t var) const;
  /// The single unknown this polynomial depends on; nullopt if it is a
  /// constant or involves several unknowns.
  std::optional<std::size_t> univariate_variable() const;
  /// Dense coefficient list, lowest degree first, of a polynomial in `var`
  /// only.
  std::vector<Rational> univariate_coefficients(std::size_t var) const;

  Rational evaluate(std::span<const Rational> values) const;
  CommPolynomial substitute(std::size_t var, const Rational& value) const;
  CommPolynomial substitute(std::size_t var, const CommPolynomial& expr) const;
  CommPolynomial monic() const;

  CommPolynomial operator-() const;
  CommPolynomial& operator+=(const CommPolynomial& other);
  CommPolynomial& operator-=(const CommPolynomial& other);
  CommPolynomial& operator*=(const Rational& scalar);
  friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) {
    return a += b;
  }
  friend CommPolynomial operator-(CommPolynomial a, const CommPolynomial& b) {
    return a -= b;
  }
  friend CommPolynomial operator*(CommPolynomial a, const Rational& s) {
    return a *= s;
  }
  friend CommPolynomial operator*(const CommPolynomial& a,
                                  const CommPolynomial& b);
  /// a - coeff * x^shift * b, in place.
  void subtract_multiple(const Rational& coeff, const ExponentVector& shift,
                         const CommPolynomial& b);

  friend bool operator==(const CommPolynomial&,
                         const CommPolynomial&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  friend CommPolynomial comm_normal_form(const CommPolynomial& f,
                                         std::span<const CommPolynomial> basis);

  std::size_t nvars_;
  CommOrder order_;
  std::vector<CommTerm> terms_;
};

/// Generators over named unknowns; the lex precedence is the unknown index
/// order (index 0 largest).
struct CommIdeal {
  std::vector<std::string> names;
  std::vector<CommPolynomial> generators;

  std::size_t nvars() const { return names.size(); }
};

/// Full reduction of f modulo G (every term, not just the leading one). The
/// result is in the term order of the basis.
CommPolynomial comm_normal_form(const CommPolynomial& f,
                                std::span<const CommPolynomial> basis);

/// Reduced, monic Groebner basis in `order`, sorted by leading monomial
/// descending. Returns {1} for the unit ideal and an empty list for the zero
/// ideal.
std::vector<CommPolynomial> comm_groebner(
    std::span<const CommPolynomial> generators,
    CommOrder order = CommOrder::lex);
std::vector<CommPolynomial> comm_groebner(const CommIdeal& ideal,
                                          CommOrder order = CommOrder::lex);

/// All rational roots of a nonzero polynomial given by coefficients (lowest
/// degree first), ascending and without multiplicity. Throws DomainError for
/// the zero polynomial.
std::vector<Rational> rational_roots(std::span<const Rational> coefficients);
/// Same for a polynomial in at most one unknown.
std::vector<Rational> rational_roots(const CommPolynomial& p);

struct RationalPoint {
  std::vector<Rational> values;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct PointSet {
  /// Sorted lexicographically by coordinates.
  std::vector<RationalPoint> points;
  /// Set when some branch had no univariate eliminant and was dropped.
  bool positive_dimensional_branch_discarded = false;
};

/// Rational points of V(I). Each returned point annihilates every generator
/// (checked by exact evaluation). Branches that are not zero-dimensional are
/// dropped and reported through the flag.
PointSet rational_points(const CommIdeal& ideal);

}  // namespace gfactor
