#include "gfactor/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gfactor {

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

std::uint64_t total_degree(const ExponentVector& a) {
  return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

bool is_zero(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](Exponent e) { return e == 0; });
}

ExponentVector unit_vector(std::size_t n, std::size_t i, Exponent power) {
  ExponentVector r(n, 0);
  r[i] = power;
  return r;
}

std::size_t ExponentVectorHash::operator()(
    const ExponentVector& v) const noexcept {
  std::size_t h = v.size();
  for (Exponent e : v) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

}  // namespace

MonomialOrdering MonomialOrdering::lex(std::size_t n) {
  MonomialOrdering o;
  o.kind_ = Kind::lex;
  o.precedence_ = identity(n);
  return o;
}

MonomialOrdering MonomialOrdering::deglex(std::size_t n) {
  MonomialOrdering o;
  o.kind_ = Kind::deglex;
  o.precedence_ = identity(n);
  return o;
}

MonomialOrdering MonomialOrdering::wdeglex(std::vector<Exponent> weights) {
  if (std::any_of(weights.begin(), weights.end(),
                  [](Exponent w) { return w == 0; }))
    throw std::invalid_argument("wdeglex weights must be positive");
  MonomialOrdering o;
  o.kind_ = Kind::wdeglex;
  o.precedence_ = identity(weights.size());
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrdering MonomialOrdering::with_precedence(
    std::vector<std::size_t> precedence) const {
  auto sorted = precedence;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity(size()))
    throw std::invalid_argument("variable precedence is not a permutation");
  MonomialOrdering o = *this;
  o.precedence_ = std::move(precedence);
  return o;
}

std::uint64_t MonomialOrdering::degree(const ExponentVector& a) const {
  switch (kind_) {
    case Kind::lex:
      return 0;
    case Kind::deglex:
      return total_degree(a);
    case Kind::wdeglex: {
      std::uint64_t d = 0;
      for (std::size_t k = 0; k < a.size(); ++k)
        d += std::uint64_t{weights_[k]} * a[k];
      return d;
    }
  }
  return 0;
}

std::strong_ordering MonomialOrdering::compare(const ExponentVector& a,
                                               const ExponentVector& b) const {
  if (kind_ != Kind::lex) {
    auto da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
  }
  for (std::size_t v : precedence_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::string MonomialOrdering::describe() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::deglex:
      return "deglex";
    case Kind::wdeglex: {
      std::string s = "wdeglex(";
      for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(weights_[k]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace gfactor
