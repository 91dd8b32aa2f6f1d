#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gfactor/comm.hpp"
#include "gfactor/ncpoly.hpp"

namespace gfactor {

/// Candidate leading monomials for the two factors: left + right = lm(g).
struct Splitting {
  ExponentVector left;
  ExponentVector right;

  friend bool operator==(const Splitting&, const Splitting&) = default;
};

/// All (b, c) with b + c = alpha and both nonzero; there are
/// prod(alpha_i + 1) - 2 of them. Throws DomainError on the zero vector.
std::vector<Splitting> splittings(const ExponentVector& alpha);

/// Which coefficient an ansatz unknown stands for.
struct AnsatzSlot {
  bool in_left = false;
  ExponentVector monomial;
};

/// Bilinear system for a * b = lambda * g, with a = x^left + sum u_m x^m over
/// all m below x^left, and b likewise. lambda is the leading coefficient of
/// x^left * x^right (1 unless some c_ij differs from 1).
struct AnsatzSystem {
  Splitting split;
  CommIdeal ideal;
  std::vector<AnsatzSlot> slots;  // parallel to ideal.names
  Rational lambda = 1;
  AlgebraPtr working;  // algebra carrying the weighted ordering
};

/// Builds the ansatz in the weighted ordering wdeglex(weights) (ties broken by
/// the precedence of g's algebra). g must be monic there with leading
/// exponent split.left + split.right.
AnsatzSystem ansatz_system(const NcPolynomial& g, const Splitting& split,
                           const std::vector<Exponent>& weights);

/// Both factors monic in the ordering of their algebra; left * right equals
/// the target up to a nonzero scalar, which is 1 whenever all c_ij are 1.
struct Bipartition {
  NcPolynomial left;
  NcPolynomial right;
};

/// unit * factors[0] * ... * factors[m-1] equals the factored element; every
/// factor is monic and irreducible.
struct Factorization {
  Rational unit;
  std::vector<NcPolynomial> factors;
};

/// Factorization engine bound to one algebra. Results are memoized on the
/// monic form of the input; all entry points are safe to call concurrently.
class Factorizer {
 public:
  /// Throws DomainError if no positive weight vector exists within the bound.
  explicit Factorizer(AlgebraPtr algebra, Exponent max_weight = 12);

  const AlgebraPtr& algebra() const { return algebra_; }
  const AlgebraPtr& working_algebra() const { return working_; }
  const std::vector<Exponent>& weights() const { return weights_; }

  /// All (a, b) with a, b nonconstant and a * b = g up to a scalar. Throws
  /// DomainError on constant input.
  std::vector<Bipartition> bipartitions(const NcPolynomial& g);

  /// All distinct factorizations into irreducibles, up to scalars in each
  /// factor, ordered by factor count and then by factor text.
  std::vector<Factorization> factorize(const NcPolynomial& f);

  bool is_irreducible(const NcPolynomial& f);

  /// Pairs (irreducible monic left factor, monic right cofactor) of f. Empty
  /// for irreducible f.
  std::vector<Bipartition> irreducible_left_divisors(const NcPolynomial& f);

  /// Accumulated diagnostics, e.g. discarded positive-dimensional branches.
  std::vector<std::string> warnings() const;

 private:
  using Chain = std::vector<NcPolynomial>;

  NcPolynomial to_working(const NcPolynomial& f) const;
  NcPolynomial to_display(const NcPolynomial& f) const;
  void check_nonconstant(const NcPolynomial& f, const char* what) const;
  void warn(std::string message);

  // Internals operate on monic elements of the working algebra.
  std::vector<std::pair<NcPolynomial, NcPolynomial>> split_monic(
      const NcPolynomial& g);
  std::vector<Chain> factor_monic(const NcPolynomial& g);

  AlgebraPtr algebra_;
  AlgebraPtr working_;
  std::vector<Exponent> weights_;

  mutable std::mutex mu_;
  std::map<std::string, std::vector<std::pair<NcPolynomial, NcPolynomial>>>
      split_memo_;
  std::map<std::string, std::vector<Chain>> factor_memo_;
  std::vector<std::string> warnings_;
};

/// One-shot convenience wrappers around a temporary Factorizer.
std::vector<Factorization> factorize(const NcPolynomial& f);
bool is_irreducible(const NcPolynomial& f);

}  // namespace gfactor
