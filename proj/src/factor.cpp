#include "gfactor/factor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gfactor/errors.hpp"

namespace gfactor {

std::vector<Splitting> splittings(const ExponentVector& alpha) {
  if (is_zero(alpha)) throw DomainError("splittings of the zero exponent");
  std::vector<Splitting> out;
  ExponentVector left(alpha.size(), 0);
  // Odometer over 0 <= left <= alpha.
  while (true) {
    if (!is_zero(left) && left != alpha) out.push_back({left, alpha - left});
    std::size_t k = 0;
    while (k < alpha.size() && left[k] == alpha[k]) left[k++] = 0;
    if (k == alpha.size()) break;
    ++left[k];
  }
  return out;
}

namespace {

/// Every exponent vector strictly below `top` in a positive-weight ordering,
/// largest first.
std::vector<ExponentVector> monomials_below(const ExponentVector& top,
                                            const MonomialOrdering& ord) {
  std::uint64_t bound = ord.degree(top);
  const auto& w = ord.weights();
  std::vector<ExponentVector> out;
  ExponentVector e(top.size(), 0);
  auto rec = [&](auto& self, std::size_t v, std::uint64_t used) -> void {
    if (v == e.size()) {
      if (ord.less(e, top)) out.push_back(e);
      return;
    }
    for (Exponent k = 0; used + std::uint64_t{k} * w[v] <= bound; ++k) {
      e[v] = k;
      self(self, v + 1, used + std::uint64_t{k} * w[v]);
    }
    e[v] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(),
            [&](const ExponentVector& a, const ExponentVector& b) {
              return ord.less(b, a);
            });
  return out;
}

MonomialOrdering weighted_ordering(const Algebra& alg,
                                   const std::vector<Exponent>& weights) {
  return MonomialOrdering::wdeglex(weights).with_precedence(
      alg.ordering().precedence());
}

std::string monomial_label(const ExponentVector& e,
                           const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (!e[v]) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

std::size_t ansatz_size(const Splitting& s, const MonomialOrdering& ord) {
  return monomials_below(s.left, ord).size() +
         monomials_below(s.right, ord).size();
}

}  // namespace

AnsatzSystem ansatz_system(const NcPolynomial& g, const Splitting& split,
                           const std::vector<Exponent>& weights) {
  const Algebra& base = g.algebra();
  if (weights.size() != base.size())
    throw DomainError("weight vector has wrong length");
  MonomialOrdering ord = weighted_ordering(base, weights);
  AlgebraPtr working = base.ordering() == ord ? g.algebra_ptr()
                                              : base.with_ordering(ord);
  NcPolynomial target = g.rebase(working);
  if (target.is_constant()) throw DomainError("ansatz for a scalar");
  if (target.lm() != split.left + split.right)
    throw DomainError("splitting does not match the leading monomial");
  if (target.lc() != 1) throw DomainError("ansatz target must be monic");

  AnsatzSystem sys;
  sys.split = split;
  sys.working = working;
  auto below_left = monomials_below(split.left, ord);
  auto below_right = monomials_below(split.right, ord);
  const auto& names = base.names();
  // Unknown precedence: right factor's coefficients first, then the left's,
  // each by descending monomial.
  for (const auto& m : below_right) {
    sys.slots.push_back({false, m});
    sys.ideal.names.push_back("b[" + monomial_label(m, names) + "]");
  }
  for (const auto& m : below_left) {
    sys.slots.push_back({true, m});
    sys.ideal.names.push_back("a[" + monomial_label(m, names) + "]");
  }
  std::size_t nvars = sys.slots.size();
  constexpr std::size_t kNone = SIZE_MAX;

  struct Slot {
    ExponentVector monomial;
    std::size_t unknown;
  };
  std::vector<Slot> a{{split.left, kNone}}, b{{split.right, kNone}};
  for (std::size_t u = 0; u < nvars; ++u)
    (sys.slots[u].in_left ? a : b).push_back({sys.slots[u].monomial, u});

  std::unordered_map<ExponentVector, std::vector<CommTerm>, ExponentVectorHash>
      equations;
  for (const auto& sa : a)
    for (const auto& sb : b) {
      ExponentVector unknowns(nvars, 0);
      if (sa.unknown != kNone) ++unknowns[sa.unknown];
      if (sb.unknown != kNone) ++unknowns[sb.unknown];
      for (const auto& t : *base.monomial_product(sa.monomial, sb.monomial))
        equations[t.exponents].push_back({unknowns, t.coeff});
    }
  for (const auto& t : *base.monomial_product(split.left, split.right))
    if (t.exponents == target.lm()) sys.lambda = t.coeff;
  for (const auto& t : target.terms())
    equations[t.exponents].push_back(
        {ExponentVector(nvars, 0), Rational(-sys.lambda * t.coeff)});

  // Deterministic generator order: by PBW monomial, descending.
  std::vector<std::pair<ExponentVector, CommPolynomial>> gens;
  for (auto& [e, terms] : equations) {
    auto p = CommPolynomial::from_terms(nvars, std::move(terms));
    if (!p.is_zero()) gens.emplace_back(e, std::move(p));
  }
  std::sort(gens.begin(), gens.end(), [&](const auto& x, const auto& y) {
    return ord.less(y.first, x.first);
  });
  for (auto& [e, p] : gens) sys.ideal.generators.push_back(std::move(p));
  return sys;
}

// ---------------------------------------------------------------------------

Factorizer::Factorizer(AlgebraPtr algebra, Exponent max_weight)
    : algebra_(std::move(algebra)) {
  auto w = find_positive_weights(algebra_->presentation(), max_weight);
  if (!w)
    throw DomainError("no positive weight vector with entries up to " +
                      std::to_string(max_weight) + " bounds the relations");
  weights_ = *w;
  MonomialOrdering ord = weighted_ordering(*algebra_, weights_);
  working_ = algebra_->ordering() == ord ? algebra_
                                         : algebra_->with_ordering(ord);
}

NcPolynomial Factorizer::to_working(const NcPolynomial& f) const {
  return f.rebase(working_);
}

NcPolynomial Factorizer::to_display(const NcPolynomial& f) const {
  return f.rebase(algebra_);
}

void Factorizer::check_nonconstant(const NcPolynomial& f,
                                   const char* what) const {
  if (f.is_zero()) throw DomainError(std::string(what) + ": zero input");
  if (f.is_constant()) throw DomainError(std::string(what) + ": scalar input");
  if (!f.algebra().same_relations(*algebra_))
    throw DomainError(std::string(what) + ": element of a different algebra");
}

void Factorizer::warn(std::string message) {
  std::lock_guard lock(mu_);
  if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end())
    warnings_.push_back(std::move(message));
}

std::vector<std::string> Factorizer::warnings() const {
  std::lock_guard lock(mu_);
  return warnings_;
}

std::vector<std::pair<NcPolynomial, NcPolynomial>> Factorizer::split_monic(
    const NcPolynomial& g) {
  std::string key = to_string(g);
  {
    std::lock_guard lock(mu_);
    if (auto it = split_memo_.find(key); it != split_memo_.end())
      return it->second;
  }

  const auto& ord = working_->ordering();
  auto splits = splittings(g.lm());
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (size, index)
  for (std::size_t k = 0; k < splits.size(); ++k)
    order.emplace_back(ansatz_size(splits[k], ord), k);
  std::sort(order.begin(), order.end());

  std::map<std::pair<std::string, std::string>,
           std::pair<NcPolynomial, NcPolynomial>>
      found;
  for (auto [size, k] : order) {
    AnsatzSystem sys = ansatz_system(g, splits[k], weights_);
    PointSet points = rational_points(sys.ideal);
    if (points.positive_dimensional_branch_discarded)
      warn("positive-dimensional ansatz branch discarded while splitting " +
           key);
    NcPolynomial target = g * sys.lambda;
    for (const auto& p : points.points) {
      TermList ta{{splits[k].left, Rational(1)}};
      TermList tb{{splits[k].right, Rational(1)}};
      for (std::size_t u = 0; u < sys.slots.size(); ++u)
        (sys.slots[u].in_left ? ta : tb)
            .push_back({sys.slots[u].monomial, p.values[u]});
      auto a = NcPolynomial::from_terms(working_, std::move(ta));
      auto b = NcPolynomial::from_terms(working_, std::move(tb));
      if (!(multiply(a, b) == target))
        throw std::logic_error("ansatz solution does not multiply back");
      found.try_emplace({to_string(a), to_string(b)}, a, b);
    }
  }
  std::vector<std::pair<NcPolynomial, NcPolynomial>> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));

  std::lock_guard lock(mu_);
  split_memo_.try_emplace(key, out);
  return out;
}

std::vector<Factorizer::Chain> Factorizer::factor_monic(const NcPolynomial& g) {
  std::string key = to_string(g);
  {
    std::lock_guard lock(mu_);
    if (auto it = factor_memo_.find(key); it != factor_memo_.end())
      return it->second;
  }
  std::map<std::vector<std::string>, Chain> chains;
  auto parts = split_monic(g);
  if (parts.empty()) {
    chains.try_emplace({key}, Chain{g});
  } else {
    for (const auto& [a, b] : parts) {
      auto fa = factor_monic(a);
      auto fb = factor_monic(b);
      for (const auto& x : fa)
        for (const auto& y : fb) {
          Chain c = x;
          c.insert(c.end(), y.begin(), y.end());
          std::vector<std::string> k;
          for (const auto& p : c) k.push_back(to_string(p));
          chains.try_emplace(std::move(k), std::move(c));
        }
    }
  }
  std::vector<Chain> out;
  for (auto& [k, c] : chains) out.push_back(std::move(c));
  std::lock_guard lock(mu_);
  factor_memo_.try_emplace(key, out);
  return out;
}

std::vector<Bipartition> Factorizer::bipartitions(const NcPolynomial& g) {
  check_nonconstant(g, "bipartitions");
  auto monic = normalize_monic(to_working(g)).second;
  std::map<std::pair<std::string, std::string>, Bipartition> out;
  for (const auto& [a, b] : split_monic(monic)) {
    auto left = normalize_monic(to_display(a)).second;
    auto right = normalize_monic(to_display(b)).second;
    out.try_emplace({to_string(left), to_string(right)},
                    Bipartition{left, right});
  }
  std::vector<Bipartition> v;
  for (auto& [k, p] : out) v.push_back(std::move(p));
  return v;
}

std::vector<Factorization> Factorizer::factorize(const NcPolynomial& f) {
  check_nonconstant(f, "factorize");
  NcPolynomial display = to_display(f);
  auto monic = normalize_monic(to_working(f)).second;
  std::vector<std::pair<std::vector<std::string>, Factorization>> out;
  for (const auto& chain : factor_monic(monic)) {
    Factorization fac;
    std::vector<std::string> key;
    for (const auto& p : chain) {
      fac.factors.push_back(normalize_monic(to_display(p)).second);
      key.push_back(to_string(fac.factors.back()));
    }
    NcPolynomial prod = product(fac.factors);
    fac.unit = display.lc() / prod.lc();
    if (!(prod * fac.unit == display))
      throw std::logic_error("factorization does not multiply back");
    out.emplace_back(std::move(key), std::move(fac));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size())
      return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<Factorization> result;
  for (auto& [k, fac] : out) result.push_back(std::move(fac));
  return result;
}

bool Factorizer::is_irreducible(const NcPolynomial& f) {
  check_nonconstant(f, "is_irreducible");
  return split_monic(normalize_monic(to_working(f)).second).empty();
}

std::vector<Bipartition> Factorizer::irreducible_left_divisors(
    const NcPolynomial& f) {
  check_nonconstant(f, "irreducible_left_divisors");
  std::map<std::pair<std::string, std::string>, Bipartition> out;
  for (const auto& fac : factorize(f)) {
    if (fac.factors.size() < 2) continue;
    std::vector<NcPolynomial> tail(fac.factors.begin() + 1, fac.factors.end());
    auto right = normalize_monic(product(tail)).second;
    out.try_emplace({to_string(fac.factors.front()), to_string(right)},
                    Bipartition{fac.factors.front(), right});
  }
  std::vector<Bipartition> v;
  for (auto& [k, p] : out) v.push_back(std::move(p));
  return v;
}

std::vector<Factorization> factorize(const NcPolynomial& f) {
  return Factorizer(f.algebra_ptr()).factorize(f);
}

bool is_irreducible(const NcPolynomial& f) {
  return Factorizer(f.algebra_ptr()).is_irreducible(f);
}

}  // namespace gfactor
