#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gfactor {

using Exponent = std::uint32_t;
/// Exponent vector alpha of the PBW monomial x_1^alpha_1 ... x_n^alpha_n.
using ExponentVector = std::vector<Exponent>;

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// a - b; requires divides(b, a).
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
/// Componentwise a <= b.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
std::uint64_t total_degree(const ExponentVector& a);
bool is_zero(const ExponentVector& a);
ExponentVector unit_vector(std::size_t n, std::size_t i, Exponent power = 1);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// Admissible total order on exponent vectors of a fixed length.
/// lex compares variables by precedence; deglex and wdeglex first compare
/// the (weighted) total degree and break ties by lex.
class MonomialOrdering {
 public:
  enum class Kind { lex, deglex, wdeglex };

  MonomialOrdering() = default;

  static MonomialOrdering lex(std::size_t n);
  static MonomialOrdering deglex(std::size_t n);
  /// Throws std::invalid_argument unless all weights are positive.
  static MonomialOrdering wdeglex(std::vector<Exponent> weights);

  /// precedence[0] is the most significant variable. Must be a permutation.
  MonomialOrdering with_precedence(std::vector<std::size_t> precedence) const;

  Kind kind() const { return kind_; }
  std::size_t size() const { return precedence_.size(); }
  const std::vector<Exponent>& weights() const { return weights_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  std::uint64_t degree(const ExponentVector& a) const;
  std::strong_ordering compare(const ExponentVector& a,
                               const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) < 0;
  }

  /// "lex", "deglex" or "wdeglex(w1,...,wn)".
  std::string describe() const;

  friend bool operator==(const MonomialOrdering&,
                         const MonomialOrdering&) = default;

 private:
  Kind kind_ = Kind::deglex;
  std::vector<Exponent> weights_;
  std::vector<std::size_t> precedence_;
};

}  // namespace gfactor
