#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfactor/factor.hpp"
#include "gfactor/ncgb.hpp"

namespace gfactor {

/// A left Groebner basis together with elements that must stay outside its
/// ideal. Constraints are monic.
struct ConstrainedTuple {
  LeftBasis basis;
  std::vector<NcPolynomial> constraints;
};

/// Factorized Groebner bases with non-membership constraints. Inputs are
/// normalized to monic form; zero or scalar elements in either list throw
/// DomainError. Every returned tuple has a reduced basis, its constraints
/// avoid the ideal, and each basis element is irreducible or has a unique
/// irreducible left divisor. Each generator of B lies in every returned
/// ideal. Constraints implied by another constraint (g with some other
/// constraint in A*g) are dropped from the output. Tuples are sorted by their
/// text form.
std::vector<ConstrainedTuple> fgbg(const std::vector<NcPolynomial>& B,
                                   const std::vector<NcPolynomial>& C,
                                   Factorizer& factorizer);

/// Like fgbg but stops after the first completed tuple in branch order.
std::optional<ConstrainedTuple> fgbg_first(const std::vector<NcPolynomial>& B,
                                           const std::vector<NcPolynomial>& C,
                                           Factorizer& factorizer);

/// Empty when the tuple is a factorized constrained Groebner tuple whose
/// ideal contains every element of original_B; otherwise a description of
/// the first failed check.
std::optional<std::string> verify_tuple(
    const ConstrainedTuple& t, const std::vector<NcPolynomial>& original_B,
    Factorizer& factorizer);

/// "basis: [..] constraints: [..]" on one line.
std::string to_string(const ConstrainedTuple& t);

}  // namespace gfactor
