#include "gfactor/ncgb.hpp"

#include <algorithm>
#include <deque>

#include "gfactor/errors.hpp"

namespace gfactor {

namespace {

/// x^shift * g, normalized so its leading coefficient is 1.
NcPolynomial monic_left_multiple(const ExponentVector& shift,
                                 const NcPolynomial& g) {
  NcPolynomial m = NcPolynomial::monomial(g.algebra_ptr(), shift);
  return normalize_monic(multiply(m, g)).second;
}

}  // namespace

NcPolynomial spoly(const NcPolynomial& f, const NcPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw DomainError("S-polynomial of a zero operand");
  if (f.algebra_ptr() != g.algebra_ptr())
    throw DomainError("operands belong to different algebras");
  ExponentVector l = lcm(f.lm(), g.lm());
  return monic_left_multiple(l - f.lm(), f) -
         monic_left_multiple(l - g.lm(), g);
}

NcPolynomial nf_left(const NcPolynomial& f,
                     std::span<const NcPolynomial> basis) {
  NcPolynomial rest = f;
  TermList remainder;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    const NcPolynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.lm(), lead.exponents)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      remainder.push_back(lead);
      rest -= NcPolynomial::monomial(rest.algebra_ptr(), lead.exponents,
                                     lead.coeff);
      continue;
    }
    if (divisor->algebra_ptr() != rest.algebra_ptr())
      throw DomainError("operands belong to different algebras");
    NcPolynomial q = monic_left_multiple(lead.exponents - divisor->lm(), *divisor);
    rest -= q * Rational(lead.coeff);
  }
  return NcPolynomial::from_terms(f.algebra_ptr(), std::move(remainder));
}

LeftBasis reduce_left_basis(std::vector<NcPolynomial> basis) {
  std::erase_if(basis, [](const NcPolynomial& g) { return g.is_zero(); });
  for (const auto& g : basis)
    if (g.is_constant())
      return {{NcPolynomial::constant(g.algebra_ptr(), 1)}, true};
  if (basis.empty()) return {{}, true};
  const auto& ord = basis.front().algebra().ordering();
  std::stable_sort(basis.begin(), basis.end(),
                   [&](const NcPolynomial& a, const NcPolynomial& b) {
                     return ord.less(a.lm(), b.lm());
                   });
  std::vector<NcPolynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(
        minimal.begin(), minimal.end(),
        [&](const NcPolynomial& h) { return divides(h.lm(), g.lm()); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<NcPolynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<NcPolynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(m < k ? reduced[m] : minimal[m]);
    reduced.push_back(normalize_monic(nf_left(minimal[k], others)).second);
  }
  return {std::move(reduced), true};
}

LeftBasis left_groebner(std::span<const NcPolynomial> generators) {
  std::vector<NcPolynomial> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!basis.empty() && basis.front().algebra_ptr() != g.algebra_ptr())
      throw DomainError("operands belong to different algebras");
    if (g.is_constant())
      return {{NcPolynomial::constant(g.algebra_ptr(), 1)}, true};
    basis.push_back(normalize_monic(g).second);
  }
  if (basis.empty()) throw DomainError("left_groebner needs a nonzero generator");

  // The commutative product criterion does not carry over to G-algebras, so
  // every pair is reduced.
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    NcPolynomial h = nf_left(spoly(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    if (h.is_constant())
      return {{NcPolynomial::constant(h.algebra_ptr(), 1)}, true};
    std::size_t idx = basis.size();
    basis.push_back(normalize_monic(h).second);
    for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }
  return reduce_left_basis(std::move(basis));
}

bool is_left_groebner(std::span<const NcPolynomial> basis) {
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!nf_left(spoly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace gfactor
