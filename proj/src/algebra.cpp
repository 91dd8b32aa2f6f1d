#include "gfactor/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "gfactor/errors.hpp"

namespace gfactor {

namespace {

using Accumulator =
    std::unordered_map<ExponentVector, Rational, ExponentVectorHash>;

TermList drain(Accumulator& acc) {
  TermList out;
  out.reserve(acc.size());
  for (auto& [e, q] : acc)
    if (!is_zero(q)) out.push_back({e, std::move(q)});
  return out;
}

void check_structure(const AlgebraPresentation& p) {
  std::size_t n = p.size();
  if (n == 0) throw std::invalid_argument("algebra has no variables");
  if (p.ordering.size() != n)
    throw std::invalid_argument("ordering size does not match variable count");
  std::vector<bool> seen(n * n, false);
  for (const auto& r : p.relations) {
    if (!(r.i < r.j && r.j < n))
      throw std::invalid_argument("relation indices out of range");
    if (seen[r.i * n + r.j])
      throw std::invalid_argument("duplicate relation for " + p.names[r.j] +
                                  "*" + p.names[r.i]);
    seen[r.i * n + r.j] = true;
    for (const auto& t : r.d)
      if (t.exponents.size() != n)
        throw std::invalid_argument("relation term has wrong arity");
  }
}

std::optional<ExponentVector> leading_of(const TermList& terms,
                                         const MonomialOrdering& ord) {
  std::optional<ExponentVector> best;
  for (const auto& t : terms) {
    if (is_zero(t.coeff)) continue;
    if (!best || ord.less(*best, t.exponents)) best = t.exponents;
  }
  return best;
}

}  // namespace

std::vector<PresentationViolation> validate_presentation(
    const AlgebraPresentation& p) {
  std::vector<PresentationViolation> out;
  std::size_t n = p.size();
  for (const auto& r : p.relations) {
    if (is_zero(r.c)) {
      out.push_back({r.i, r.j,
                     "c is zero in relation " + p.names[r.j] + "*" +
                         p.names[r.i]});
      continue;
    }
    auto lead = leading_of(r.d, p.ordering);
    if (!lead) continue;
    ExponentVector xixj(n, 0);
    xixj[r.i] += 1;
    xixj[r.j] += 1;
    if (!p.ordering.less(*lead, xixj))
      out.push_back({r.i, r.j,
                     "leading monomial of d is not below " + p.names[r.i] +
                         "*" + p.names[r.j] + " under " +
                         p.ordering.describe()});
  }
  return out;
}

std::optional<std::vector<Exponent>> find_positive_weights(
    const AlgebraPresentation& p, Exponent max_weight) {
  std::size_t n = p.size();
  if (n == 0 || max_weight == 0) return std::nullopt;

  auto feasible = [&](const std::vector<Exponent>& w) {
    for (const auto& r : p.relations) {
      std::uint64_t bound = std::uint64_t{w[r.i]} + w[r.j];
      for (const auto& t : r.d) {
        if (is_zero(t.coeff)) continue;
        std::uint64_t deg = 0;
        for (std::size_t k = 0; k < n; ++k)
          deg += std::uint64_t{w[k]} * t.exponents[k];
        if (deg >= bound) return false;
      }
    }
    return true;
  };

  // Enumerate vectors with a fixed entry sum, lexicographically.
  std::vector<Exponent> w(n);
  std::optional<std::vector<Exponent>> found;
  auto fill = [&](auto& self, std::size_t pos, std::uint64_t remaining) -> bool {
    std::size_t left = n - pos - 1;
    if (left == 0) {
      if (remaining < 1 || remaining > max_weight) return false;
      w[pos] = static_cast<Exponent>(remaining);
      if (feasible(w)) {
        found = w;
        return true;
      }
      return false;
    }
    for (Exponent v = 1; v <= max_weight; ++v) {
      if (remaining < v + left) break;
      if (remaining - v > std::uint64_t{left} * max_weight) continue;
      w[pos] = v;
      if (self(self, pos + 1, remaining - v)) return true;
    }
    return false;
  };
  for (std::uint64_t sum = n; sum <= std::uint64_t{n} * max_weight; ++sum)
    if (fill(fill, 0, sum)) return found;
  return std::nullopt;
}

struct Algebra::Core {
  AlgebraPresentation presentation;
  std::vector<Rational> c;  // row-major n x n, used for i < j
  std::vector<TermList> d;
  bool commutative = true;

  std::mutex mu;
  std::unordered_map<ExponentVector, std::shared_ptr<const TermList>,
                     ExponentVectorHash>
      products;

  std::size_t n() const { return presentation.size(); }

  std::shared_ptr<const TermList> product(const ExponentVector& a,
                                          const ExponentVector& b) {
    ExponentVector key = a;
    key.insert(key.end(), b.begin(), b.end());
    {
      std::lock_guard lock(mu);
      if (auto it = products.find(key); it != products.end()) return it->second;
    }
    auto value = std::make_shared<const TermList>(compute(a, b));
    std::lock_guard lock(mu);
    return products.try_emplace(std::move(key), std::move(value)).first->second;
  }

  TermList compute(const ExponentVector& a, const ExponentVector& b) {
    std::size_t size = n();
    std::size_t k = size, j = size;
    for (std::size_t v = size; v-- > 0;)
      if (a[v]) {
        k = v;
        break;
      }
    for (std::size_t v = 0; v < size; ++v)
      if (b[v]) {
        j = v;
        break;
      }
    if (k == size || j == size || k <= j) return {{a + b, Rational(1)}};

    Exponent pa = a[k], pb = b[j];
    ExponentVector rest_a = a, rest_b = b;
    rest_a[k] = 0;
    rest_b[j] = 0;
    Accumulator acc;

    if (is_zero(rest_a) && is_zero(rest_b)) {
      const Rational& cjk = c[j * size + k];
      const TermList& djk = d[j * size + k];
      ExponentVector ek = unit_vector(size, k), ej = unit_vector(size, j);
      if (pa == 1 && pb == 1) {
        TermList out = djk;
        out.push_back({ej + ek, cjk});
        return merge(out);
      }
      if (pa == 1) {
        // x_k x_j^pb = c x_j (x_k x_j^(pb-1)) + d x_j^(pb-1)
        ExponentVector lower = unit_vector(size, j, pb - 1);
        for (const auto& t : *product(ek, lower))
          for (const auto& s : *product(ej, t.exponents))
            acc[s.exponents] += cjk * t.coeff * s.coeff;
        for (const auto& t : djk)
          for (const auto& s : *product(t.exponents, lower))
            acc[s.exponents] += t.coeff * s.coeff;
        return drain(acc);
      }
      // x_k^pa x_j^pb = x_k (x_k^(pa-1) x_j^pb)
      for (const auto& t : *product(unit_vector(size, k, pa - 1), b))
        for (const auto& s : *product(ek, t.exponents))
          acc[s.exponents] += t.coeff * s.coeff;
      return drain(acc);
    }

    // x^a x^b = x^rest_a (x_k^pa x_j^pb) x^rest_b
    for (const auto& t :
         *product(unit_vector(size, k, pa), unit_vector(size, j, pb)))
      for (const auto& q : *product(rest_a, t.exponents))
        for (const auto& r : *product(q.exponents, rest_b))
          acc[r.exponents] += t.coeff * q.coeff * r.coeff;
    return drain(acc);
  }

  static TermList merge(const TermList& terms) {
    Accumulator acc;
    for (const auto& t : terms) acc[t.exponents] += t.coeff;
    return drain(acc);
  }
};

std::shared_ptr<const Algebra> Algebra::create(AlgebraPresentation p) {
  check_structure(p);
  auto violations = validate_presentation(p);
  if (!violations.empty())
    throw AdmissibilityError("inadmissible presentation: " +
                             violations.front().message);
  auto core = std::make_shared<Core>();
  std::size_t n = p.size();
  core->c.assign(n * n, Rational(1));
  core->d.assign(n * n, TermList{});
  for (const auto& r : p.relations) {
    core->c[r.i * n + r.j] = r.c;
    core->d[r.i * n + r.j] = Core::merge(r.d);
    if (r.c != 1 || !core->d[r.i * n + r.j].empty()) core->commutative = false;
  }
  MonomialOrdering ord = p.ordering;
  core->presentation = std::move(p);
  return std::shared_ptr<const Algebra>(new Algebra(std::move(core), ord));
}

std::shared_ptr<const Algebra> Algebra::with_ordering(
    MonomialOrdering ordering) const {
  if (ordering.size() != size())
    throw std::invalid_argument("ordering size does not match variable count");
  AlgebraPresentation probe = core_->presentation;
  probe.ordering = ordering;
  auto violations = validate_presentation(probe);
  if (!violations.empty())
    throw AdmissibilityError("ordering " + ordering.describe() +
                             " is not admissible: " +
                             violations.front().message);
  return std::shared_ptr<const Algebra>(new Algebra(core_, std::move(ordering)));
}

std::size_t Algebra::size() const { return core_->n(); }
const std::string& Algebra::name() const { return core_->presentation.name; }
const std::vector<std::string>& Algebra::names() const {
  return core_->presentation.names;
}
const AlgebraPresentation& Algebra::presentation() const {
  return core_->presentation;
}
const Rational& Algebra::c(std::size_t i, std::size_t j) const {
  return core_->c[i * size() + j];
}
const TermList& Algebra::d(std::size_t i, std::size_t j) const {
  return core_->d[i * size() + j];
}
bool Algebra::is_commutative() const { return core_->commutative; }

std::shared_ptr<const TermList> Algebra::monomial_product(
    const ExponentVector& a, const ExponentVector& b) const {
  return core_->product(a, b);
}

}  // namespace gfactor
