#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfactor/algebra.hpp"
#include "gfactor/ncpoly.hpp"

namespace gfactor {

/// Reads the line-oriented algebra format:
///
///   # comment
///   algebra weyl1
///   field QQ
///   vars x, d
///   rel d*x = x*d + 1
///   order deglex
///
/// `rel` lines must have the form x_j*x_i = ... with x_j declared after x_i;
/// the right-hand side is read commutatively with variables in declaration
/// order. `order` is lex, deglex or wdeglex(w1,...,wn) and defaults to
/// deglex. Throws ParseError for syntax problems and unsupported fields.
AlgebraPresentation parse_algebra(std::string_view text);

/// parse_algebra followed by Algebra::create (may throw AdmissibilityError).
AlgebraPtr load_algebra(std::string_view text);
AlgebraPtr load_algebra_file(const std::string& path);

/// Writes a presentation back in the file format.
std::string format_algebra(const AlgebraPresentation& p);

/// Parses poly := term (('+'|'-') term)*, term := item ('*' item)*,
/// item := int ['/' nat] | var ['^' nat]. Products are evaluated in the
/// algebra, so "d*x" in the Weyl algebra yields x*d + 1.
NcPolynomial parse_poly(std::string_view text, const AlgebraPtr& algebra);

/// Semicolon-separated list of polynomials.
std::vector<NcPolynomial> parse_poly_list(std::string_view text,
                                          const AlgebraPtr& algebra);

}  // namespace gfactor
