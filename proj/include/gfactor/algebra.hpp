#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfactor/ordering.hpp"
#include "gfactor/rational.hpp"

namespace gfactor {

struct Term {
  ExponentVector exponents;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

using TermList = std::vector<Term>;

/// x_j * x_i = c * x_i * x_j + d for i < j (0-based indices). The support of
/// d is read as PBW monomials.
struct Relation {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational c = 1;
  TermList d;
};

/// Generators, commutation data and ordering of a G-algebra. Pairs without an
/// explicit relation commute (c = 1, d = 0).
struct AlgebraPresentation {
  std::string name;
  std::vector<std::string> names;
  std::vector<Relation> relations;
  MonomialOrdering ordering;

  std::size_t size() const { return names.size(); }
};

struct PresentationViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

/// Empty result means the presentation is admissible: every c_ij is nonzero
/// and every nonzero d_ij has leading monomial below x_i x_j.
std::vector<PresentationViolation> validate_presentation(
    const AlgebraPresentation& p);

/// Smallest (by weight sum, then lexicographically) vector w in
/// [1, max_weight]^n with wdeg(d_ij) < w_i + w_j for every nonzero d_ij.
std::optional<std::vector<Exponent>> find_positive_weights(
    const AlgebraPresentation& p, Exponent max_weight = 12);

/// Runtime handle on a validated presentation. Holds the memoized PBW product
/// table, which is shared between an algebra and its reorderings since the
/// product does not depend on the ordering.
class Algebra {
 public:
  /// Throws AdmissibilityError if validate_presentation reports a violation,
  /// std::invalid_argument on structural problems.
  static std::shared_ptr<const Algebra> create(AlgebraPresentation p);

  /// Same relations and product cache, different ordering. Throws
  /// AdmissibilityError if the relations are not admissible under `ordering`.
  std::shared_ptr<const Algebra> with_ordering(MonomialOrdering ordering) const;

  std::size_t size() const;
  const std::string& name() const;
  const std::vector<std::string>& names() const;
  const MonomialOrdering& ordering() const { return ordering_; }
  const AlgebraPresentation& presentation() const;

  /// c and d of x_j x_i = c x_i x_j + d, for i < j.
  const Rational& c(std::size_t i, std::size_t j) const;
  const TermList& d(std::size_t i, std::size_t j) const;
  bool is_commutative() const;

  /// PBW normal form of x^a * x^b, as an unsorted list without repeats.
  std::shared_ptr<const TermList> monomial_product(const ExponentVector& a,
                                                   const ExponentVector& b) const;

  /// True iff both handles come from the same presentation (possibly
  /// reordered).
  bool same_relations(const Algebra& other) const {
    return core_ == other.core_;
  }

  struct Core;

 private:
  Algebra(std::shared_ptr<Core> core, MonomialOrdering ordering)
      : core_(std::move(core)), ordering_(std::move(ordering)) {}

  std::shared_ptr<Core> core_;
  MonomialOrdering ordering_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace gfactor
