#pragma once

#include <span>
#include <vector>

#include "gfactor/ncpoly.hpp"

namespace gfactor {

/// Generators of a left ideal, in the ordering of their algebra.
struct LeftBasis {
  std::vector<NcPolynomial> elements;
  bool reduced = false;
};

/// Left S-polynomial: x^(l-a) f / lc(x^(l-a) f) - x^(l-b) g / lc(x^(l-b) g)
/// with l = lcm(lm f, lm g). Throws DomainError on zero operands.
NcPolynomial spoly(const NcPolynomial& f, const NcPolynomial& g);

/// Full left normal form: no term of the result is divisible by lm(g) for any
/// g in `basis`, and f - result lies in the left ideal of `basis`.
NcPolynomial nf_left(const NcPolynomial& f,
                     std::span<const NcPolynomial> basis);
inline NcPolynomial nf_left(const NcPolynomial& f, const LeftBasis& basis) {
  return nf_left(f, std::span<const NcPolynomial>(basis.elements));
}

/// Reduced monic left Groebner basis of the left ideal generated by
/// `generators`, sorted by leading monomial ascending. {1} for the whole
/// ring. Throws DomainError on an empty or all-zero input.
LeftBasis left_groebner(std::span<const NcPolynomial> generators);

/// Minimal, tail-reduced and monic form of a left Groebner basis.
LeftBasis reduce_left_basis(std::vector<NcPolynomial> basis);

/// Buchberger criterion: every pairwise S-polynomial reduces to zero.
bool is_left_groebner(std::span<const NcPolynomial> basis);

}  // namespace gfactor
