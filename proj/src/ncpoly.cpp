#include "gfactor/ncpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "gfactor/errors.hpp"

namespace gfactor {

namespace {

using Accumulator =
    std::unordered_map<ExponentVector, Rational, ExponentVectorHash>;

}  // namespace

NcPolynomial::NcPolynomial(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw DomainError("polynomial without algebra");
}

NcPolynomial NcPolynomial::constant(AlgebraPtr algebra, const Rational& value) {
  NcPolynomial p(std::move(algebra));
  if (!gfactor::is_zero(value))
    p.terms_.push_back({ExponentVector(p.algebra_->size(), 0), value});
  return p;
}

NcPolynomial NcPolynomial::variable(AlgebraPtr algebra, std::size_t index) {
  std::size_t n = algebra->size();
  if (index >= n) throw DomainError("variable index out of range");
  return monomial(std::move(algebra), unit_vector(n, index));
}

NcPolynomial NcPolynomial::monomial(AlgebraPtr algebra,
                                    ExponentVector exponents,
                                    const Rational& coeff) {
  NcPolynomial p(std::move(algebra));
  if (exponents.size() != p.algebra_->size())
    throw DomainError("exponent vector has wrong length");
  if (!gfactor::is_zero(coeff)) p.terms_.push_back({std::move(exponents), coeff});
  return p;
}

NcPolynomial NcPolynomial::from_terms(AlgebraPtr algebra, TermList terms) {
  NcPolynomial p(std::move(algebra));
  Accumulator acc;
  for (auto& t : terms) {
    if (t.exponents.size() != p.algebra_->size())
      throw DomainError("exponent vector has wrong length");
    acc[t.exponents] += t.coeff;
  }
  for (auto& [e, q] : acc)
    if (!gfactor::is_zero(q)) p.terms_.push_back({e, std::move(q)});
  p.sort_terms();
  return p;
}

void NcPolynomial::sort_terms() {
  const auto& ord = algebra_->ordering();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.less(b.exponents, a.exponents);
  });
}

bool NcPolynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && gfactor::is_zero(terms_.front().exponents));
}

const Term& NcPolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Rational NcPolynomial::coefficient(const ExponentVector& e) const {
  for (const auto& t : terms_)
    if (t.exponents == e) return t.coeff;
  return 0;
}

NcPolynomial NcPolynomial::rebase(const AlgebraPtr& target) const {
  if (!target || !algebra_->same_relations(*target))
    throw DomainError("cannot rebase onto a different presentation");
  NcPolynomial p(target);
  p.terms_ = terms_;
  if (!(target->ordering() == algebra_->ordering())) p.sort_terms();
  return p;
}

void NcPolynomial::check_compatible(const NcPolynomial& other) const {
  if (algebra_ != other.algebra_)
    throw DomainError("operands belong to different algebras");
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
  check_compatible(other);
  const auto& ord = algebra_->ordering();
  TermList merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae || b != be) {
    if (b == be) {
      merged.push_back(std::move(*a++));
      continue;
    }
    if (a == ae) {
      merged.push_back(*b++);
      continue;
    }
    auto cmp = ord.compare(a->exponents, b->exponents);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (!gfactor::is_zero(s)) merged.push_back({std::move(a->exponents), s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
  return *this += -other;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& scalar) {
  if (gfactor::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  return multiply(a, b);
}

bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
  if (!a.algebra_->same_relations(*b.algebra_)) return false;
  if (a.algebra_->ordering() == b.algebra_->ordering())
    return a.terms_ == b.terms_;
  return a.terms_ == b.rebase(a.algebra_).terms_;
}

NcPolynomial multiply(const NcPolynomial& f, const NcPolynomial& g) {
  if (f.algebra_ptr() != g.algebra_ptr())
    throw DomainError("operands belong to different algebras");
  const Algebra& alg = f.algebra();
  Accumulator acc;
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) {
      Rational st = s.coeff * t.coeff;
      for (const auto& r : *alg.monomial_product(s.exponents, t.exponents))
        acc[r.exponents] += st * r.coeff;
    }
  TermList terms;
  terms.reserve(acc.size());
  for (auto& [e, q] : acc)
    if (!is_zero(q)) terms.push_back({e, std::move(q)});
  return NcPolynomial::from_terms(f.algebra_ptr(), std::move(terms));
}

NcPolynomial product(std::span<const NcPolynomial> factors) {
  if (factors.empty()) throw DomainError("empty product");
  NcPolynomial p = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) p = multiply(p, factors[k]);
  return p;
}

Term leading(const NcPolynomial& f, const MonomialOrdering& ordering) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ordering.less(best->exponents, t.exponents)) best = &t;
  return *best;
}

std::pair<Rational, NcPolynomial> normalize_monic(const NcPolynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial cannot be made monic");
  Rational unit = f.lc();
  NcPolynomial monic = f;
  if (unit != 1) monic *= Rational(1 / unit);
  return {unit, std::move(monic)};
}

std::string to_string(const NcPolynomial& f) {
  return format_terms(f.terms(), f.algebra().names());
}

std::string format_terms(const TermList& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    bool negative = sgn(t.coeff) < 0;
    Rational magnitude = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      Exponent e = t.exponents[v];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += to_string(magnitude) + "*" + mono;
  }
  return out;
}

bool canonical_less(const NcPolynomial& a, const NcPolynomial& b) {
  return to_string(a) < to_string(b);
}

}  // namespace gfactor
