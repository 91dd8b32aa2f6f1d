#pragma once

#include <string>
#include <vector>

#include "gfactor/io.hpp"

namespace fixtures {

inline gfactor::AlgebraPtr weyl() {
  static auto a = gfactor::load_algebra_file(GFACTOR_DATA_DIR "/weyl1.alg");
  return a;
}

inline gfactor::AlgebraPtr sl2() {
  static auto a = gfactor::load_algebra_file(GFACTOR_DATA_DIR "/sl2.alg");
  return a;
}

inline gfactor::NcPolynomial W(const std::string& s) {
  return gfactor::parse_poly(s, weyl());
}

inline gfactor::NcPolynomial S(const std::string& s) {
  return gfactor::parse_poly(s, sl2());
}

// U(sl2) element with two factorizations into irreducibles.
inline const std::string sl2_p =
    "e^3*f + e^2*f^2 - e^3 + e^2*f + 2*e*f^2 - 3*e^2*h - 2*e*f*h - 8*e^2"
    " + e*f + f^2 - 4*e*h - 2*f*h - 7*e + f - h";
inline const std::string sl2_p_two_a = "e^2*f + e*f^2 - 2*e*h - e^2 + f^2 - 3*e - f - 2*h";
inline const std::string sl2_p_two_b = "e + 1";
inline const std::string sl2_p_three_a = "e + 1";
inline const std::string sl2_p_three_b = "e*f - e + f - 2*h - 3";
inline const std::string sl2_p_three_c = "e + f";
// The three two-factor products found from the splittings e|e^2 f and e^2 f|e.
inline const std::vector<std::pair<std::string, std::string>> sl2_p_bipartitions = {
    {"e + 1", "e^2*f + e*f^2 - 3*e*h - 2*f*h - e^2 + f^2 - 7*e + f - h"},
    {"e^2*f + 2*e*f - 2*e*h - e^2 - 4*e + f - 2*h - 3", "e + f"},
    {"e^2*f + e*f^2 - 2*e*h - e^2 + f^2 - 3*e - f - 2*h", "e + 1"},
};

// Second-order operator in A1 with two factorizations.
inline const std::string op2_p =
    "x^6*d^2 + 2*x^4*d^2 - 3*x^2*d^2 - 4*x^5*d + 4*x^4*d + 12*x^2*d + 12*x*d"
    " + 6*x^4 - 12*x^3 - 6*x^2 - 24*x - 12";
inline const std::string op2_left1 =
    "x^4*d - x^3*d - 3*x^3 + 3*x^2*d + 6*x^2 - 3*x*d - 3*x + 12";
inline const std::string op2_right1 = "x^2*d + x*d - 3*x - 1";
inline const std::string op2_left2 =
    "x^4*d + x^3*d - 4*x^3 + 3*x^2*d - 3*x^2 + 3*x*d - 6*x - 3";
inline const std::string op2_right2 = "x^2*d - x*d - 2*x + 4";
// Generators of the intersection of the left ideals of the two right factors.
inline const std::string op2_gb1 =
    "3*x^5*d^2 + 2*x^4*d^3 - x^4*d^2 - 12*x^4*d + x^3*d^2 - 2*x^2*d^3 + 16*x^3*d"
    " + 9*x^2*d^2 + 18*x^3 + 4*x^2*d + 4*x*d^2 - 42*x^2 - 4*x*d - 12*x - 12";
inline const std::string op2_gb2 =
    "2*x^4*d^4 - 2*x^4*d^3 + 11*x^4*d^2 + 12*x^3*d^3 - 2*x^2*d^4 - 2*x^3*d^2"
    " + 10*x^2*d^3 - 44*x^3*d - 17*x^2*d^2 + 64*x^2*d + 12*x*d^2 + 66*x^2"
    " + 52*x*d + 4*d^2 - 168*x - 16*d - 60";

// Generators of <d^2 + x> ∩ <d - 1>.
inline const std::string fgbg_f1 = "d^4 + x*d^2 - 2*d^3 - 2*x*d + d^2 + x + 2*d - 2";
inline const std::string fgbg_f2 =
    "x*d^3 + x^2*d - x*d^2 + d^3 - x^2 + x*d - 2*d^2 - x + 1";
inline const std::string fgbg_b1 = "d^3 + x*d - d^2 - x + 1";

}  // namespace fixtures
