#include "gfactor/comm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gfactor/errors.hpp"

namespace gfactor {

// ---------------------------------------------------------------------------
// CommPolynomial

bool comm_less(CommOrder order, const ExponentVector& a,
               const ExponentVector& b) {
  if (order == CommOrder::lex) return a < b;
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

CommPolynomial CommPolynomial::constant(std::size_t nvars,
                                        const Rational& value,
                                        CommOrder order) {
  CommPolynomial p(nvars, order);
  if (!gfactor::is_zero(value))
    p.terms_.push_back({ExponentVector(nvars, 0), value});
  return p;
}

CommPolynomial CommPolynomial::variable(std::size_t nvars, std::size_t index,
                                        CommOrder order) {
  CommPolynomial p(nvars, order);
  p.terms_.push_back({unit_vector(nvars, index), Rational(1)});
  return p;
}

CommPolynomial CommPolynomial::from_terms(std::size_t nvars,
                                          std::vector<CommTerm> terms,
                                          CommOrder order) {
  auto greater = [order](const ExponentVector& a, const ExponentVector& b) {
    return comm_less(order, b, a);
  };
  std::map<ExponentVector, Rational, decltype(greater)> acc(greater);
  for (auto& t : terms) {
    if (t.exponents.size() != nvars)
      throw DomainError("exponent vector has wrong length");
    acc[t.exponents] += t.coeff;
  }
  CommPolynomial p(nvars, order);
  p.terms_.reserve(acc.size());
  for (auto& [e, q] : acc)
    if (!gfactor::is_zero(q)) p.terms_.push_back({e, q});
  return p;
}

CommPolynomial CommPolynomial::with_order(CommOrder order) const {
  if (order == order_) return *this;
  CommPolynomial p(nvars_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [order](const CommTerm& a, const CommTerm& b) {
              return comm_less(order, b.exponents, a.exponents);
            });
  return p;
}

bool CommPolynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && gfactor::is_zero(terms_.front().exponents));
}

const CommTerm& CommPolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

bool CommPolynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const CommTerm& t) { return t.exponents[var] > 0; });
}

std::size_t CommPolynomial::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.exponents[var]);
  return d;
}

std::optional<std::size_t> CommPolynomial::univariate_variable() const {
  std::optional<std::size_t> found;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (!t.exponents[v]) continue;
      if (found && *found != v) return std::nullopt;
      found = v;
    }
  return found;
}

std::vector<Rational> CommPolynomial::univariate_coefficients(
    std::size_t var) const {
  std::vector<Rational> c(degree_in(var) + 1);
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v)
      if (v != var && t.exponents[v])
        throw DomainError("polynomial is not univariate");
    c[t.exponents[var]] += t.coeff;
  }
  return c;
}

Rational CommPolynomial::evaluate(std::span<const Rational> values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (Exponent k = 0; k < t.exponents[v]; ++k) m *= values[v];
    sum += m;
  }
  return sum;
}

CommPolynomial CommPolynomial::substitute(std::size_t var,
                                          const Rational& value) const {
  std::vector<CommTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (Exponent k = 0; k < t.exponents[var]; ++k) c *= value;
    ExponentVector e = t.exponents;
    e[var] = 0;
    out.push_back({std::move(e), std::move(c)});
  }
  return from_terms(nvars_, std::move(out), order_);
}

CommPolynomial CommPolynomial::substitute(std::size_t var,
                                          const CommPolynomial& expr) const {
  std::vector<CommPolynomial> powers{constant(nvars_, 1, order_)};
  CommPolynomial result(nvars_, order_);
  // Group terms by their power of var: p = sum_k p_k var^k.
  std::map<Exponent, std::vector<CommTerm>> groups;
  for (const auto& t : terms_) {
    ExponentVector e = t.exponents;
    Exponent k = e[var];
    e[var] = 0;
    groups[k].push_back({std::move(e), t.coeff});
  }
  for (auto& [k, ts] : groups) {
    while (powers.size() <= k) powers.push_back(powers.back() * expr);
    result += from_terms(nvars_, std::move(ts), order_) * powers[k];
  }
  return result;
}

CommPolynomial CommPolynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / lc());
}

CommPolynomial CommPolynomial::operator-() const {
  CommPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

CommPolynomial& CommPolynomial::operator+=(const CommPolynomial& other) {
  subtract_multiple(Rational(-1), ExponentVector(nvars_, 0), other);
  return *this;
}

CommPolynomial& CommPolynomial::operator-=(const CommPolynomial& other) {
  subtract_multiple(Rational(1), ExponentVector(nvars_, 0), other);
  return *this;
}

CommPolynomial& CommPolynomial::operator*=(const Rational& scalar) {
  if (gfactor::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
  std::vector<CommTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      out.push_back({s.exponents + t.exponents, s.coeff * t.coeff});
  return CommPolynomial::from_terms(a.nvars_, std::move(out), a.order_);
}

void CommPolynomial::subtract_multiple(const Rational& coeff,
                                       const ExponentVector& shift,
                                       const CommPolynomial& b) {
  if (gfactor::is_zero(coeff) || b.terms_.empty()) return;
  if (b.order_ != order_) {
    subtract_multiple(coeff, shift, b.with_order(order_));
    return;
  }
  std::vector<CommTerm> merged;
  merged.reserve(terms_.size() + b.terms_.size());
  auto it = terms_.begin(), end = terms_.end();
  for (const auto& t : b.terms_) {
    ExponentVector e = t.exponents + shift;
    while (it != end && comm_less(order_, e, it->exponents))
      merged.push_back(std::move(*it++));
    Rational c = -coeff * t.coeff;
    if (it != end && it->exponents == e) {
      c += it->coeff;
      ++it;
    }
    if (!gfactor::is_zero(c)) merged.push_back({std::move(e), std::move(c)});
  }
  while (it != end) merged.push_back(std::move(*it++));
  terms_ = std::move(merged);
}

std::string CommPolynomial::to_string(
    std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    Rational magnitude = abs(t.coeff);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (!t.exponents[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "u" + std::to_string(v);
      if (t.exponents[v] > 1) mono += "^" + std::to_string(t.exponents[v]);
    }
    if (mono.empty())
      out += gfactor::to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += gfactor::to_string(magnitude) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groebner bases

CommPolynomial comm_normal_form(const CommPolynomial& f,
                                std::span<const CommPolynomial> basis) {
  CommPolynomial rest =
      basis.empty() ? f : f.with_order(basis.front().order());
  std::vector<CommTerm> remainder;
  while (!rest.terms_.empty()) {
    const CommTerm& lead = rest.terms_.front();
    const CommPolynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.lm(), lead.exponents)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      rest.subtract_multiple(lead.coeff / divisor->lc(),
                             lead.exponents - divisor->lm(), *divisor);
    } else {
      remainder.push_back(std::move(rest.terms_.front()));
      rest.terms_.erase(rest.terms_.begin());
    }
  }
  CommPolynomial r(f.nvars(), rest.order());
  r.terms_ = std::move(remainder);
  return r;
}

namespace {

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g) {
  ExponentVector l = lcm(f.lm(), g.lm());
  CommPolynomial s(f.nvars(), f.order());
  s.subtract_multiple(Rational(-1) / f.lc(), l - f.lm(), f);
  s.subtract_multiple(Rational(1) / g.lc(), l - g.lm(), g);
  return s;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

std::vector<CommPolynomial> reduce_basis(std::vector<CommPolynomial> basis) {
  CommOrder ord = basis.front().order();
  std::sort(basis.begin(), basis.end(),
            [ord](const CommPolynomial& a, const CommPolynomial& b) {
              return comm_less(ord, a.lm(), b.lm());
            });
  std::vector<CommPolynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(
        minimal.begin(), minimal.end(),
        [&](const CommPolynomial& h) { return divides(h.lm(), g.lm()); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<CommPolynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<CommPolynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(m < k ? reduced[m] : minimal[m]);
    reduced.push_back(comm_normal_form(minimal[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [ord](const CommPolynomial& a, const CommPolynomial& b) {
              return comm_less(ord, b.lm(), a.lm());
            });
  return reduced;
}

}  // namespace

std::vector<CommPolynomial> comm_groebner(
    std::span<const CommPolynomial> generators, CommOrder order) {
  std::vector<CommPolynomial> basis;
  std::size_t nvars = 0;
  for (const auto& g : generators) {
    nvars = g.nvars();
    if (g.is_zero()) continue;
    if (g.is_constant()) return {CommPolynomial::constant(nvars, 1, order)};
    basis.push_back(g.with_order(order).monic());
  }
  if (basis.empty()) return {};

  // Pending pairs (i, j) with i < j.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree first, ties by insertion order.
    auto best = pending.begin();
    std::uint64_t best_degree = UINT64_MAX;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      auto deg = total_degree(lcm(basis[it->first].lm(), basis[it->second].lm()));
      if (deg < best_degree) {
        best_degree = deg;
        best = it;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const auto& fi = basis[i].lm();
    const auto& fj = basis[j].lm();
    if (coprime(fi, fj)) continue;
    ExponentVector l = lcm(fi, fj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k)
      chain = k != i && k != j && divides(basis[k].lm(), l) &&
              !is_pending(i, k) && !is_pending(j, k);
    if (chain) continue;

    CommPolynomial h = comm_normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {CommPolynomial::constant(nvars, 1, order)};
    std::size_t idx = basis.size();
    basis.push_back(h.monic());
    for (std::size_t k = 0; k < idx; ++k) pending.insert({k, idx});
  }
  return reduce_basis(std::move(basis));
}

std::vector<CommPolynomial> comm_groebner(const CommIdeal& ideal,
                                          CommOrder order) {
  return comm_groebner(std::span<const CommPolynomial>(ideal.generators),
                       order);
}

// ---------------------------------------------------------------------------
// Rational roots

namespace {

void factor_into(Integer n, std::map<Integer, unsigned>& out);

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      return Integer(r % n);
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p)
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, unsigned> f;
  factor_into(abs(n), f);
  std::vector<Integer> out{1};
  for (const auto& [p, k] : f) {
    std::size_t count = out.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t m = 0; m < count; ++m) out.push_back(out[m] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer coefficients, primitive, lowest degree first.
std::vector<Integer> to_primitive_integers(std::span<const Rational> coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : coeffs) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0 && content != 1)
    for (auto& v : out) v /= content;
  return out;
}

// q^n f(p/q)
Integer homogeneous_value(const std::vector<Integer>& a, const Integer& p,
                          const Integer& q) {
  std::size_t n = a.size() - 1;
  Integer s = a[n], qpow = q;
  for (std::size_t i = n; i-- > 0;) {
    s = s * p + a[i] * qpow;
    qpow *= q;
  }
  return s;
}

// Divides by (t - r), r a root; result stays integral after re-normalization.
std::vector<Integer> deflate(const std::vector<Integer>& a, const Rational& r) {
  std::size_t n = a.size() - 1;
  std::vector<Rational> b(n);
  Rational carry = 0;
  for (std::size_t k = n; k >= 1; --k) {
    carry = Rational(a[k]) + r * carry;
    b[k - 1] = carry;
  }
  return to_primitive_integers(b);
}

}  // namespace

std::vector<Rational> rational_roots(std::span<const Rational> coefficients) {
  std::size_t top = coefficients.size();
  while (top > 0 && gfactor::is_zero(coefficients[top - 1])) --top;
  if (top == 0) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Integer> a = to_primitive_integers(coefficients.first(top));

  std::set<Rational> roots;
  if (a[0] == 0) {
    roots.insert(Rational(0));
    std::size_t shift = 0;
    while (a[shift] == 0) ++shift;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  }

  bool progress = true;
  while (a.size() > 1 && progress) {
    progress = false;
    if (a.size() == 2) {
      Rational r(-a[0], a[1]);
      r.canonicalize();
      roots.insert(r);
      break;
    }
    auto ps = divisors(a.front());
    auto qs = divisors(a.back());
    for (const auto& q : qs) {
      for (const auto& p : ps) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Integer sp = sign * p;
          if (homogeneous_value(a, sp, q) != 0) continue;
          Rational r(sp, q);
          r.canonicalize();
          roots.insert(r);
          while (a.size() > 1 && homogeneous_value(a, sp, q) == 0)
            a = deflate(a, r);
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<Rational> rational_roots(const CommPolynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  if (p.is_constant()) return {};
  auto var = p.univariate_variable();
  if (!var) throw DomainError("rational_roots needs a univariate polynomial");
  auto coeffs = p.univariate_coefficients(*var);
  return rational_roots(std::span<const Rational>(coeffs));
}

// ---------------------------------------------------------------------------
// Rational points

namespace {

enum class Status : unsigned char { active, fixed, eliminated };

struct Branch {
  std::vector<CommPolynomial> generators;
  std::vector<Status> status;
  std::vector<Rational> values;
  // In elimination order; back-substitution runs in reverse.
  std::vector<std::pair<std::size_t, CommPolynomial>> eliminated;
};

class PointSolver {
 public:
  explicit PointSolver(const CommIdeal& ideal) : ideal_(ideal) {}

  PointSet run() {
    Branch root;
    root.generators = ideal_.generators;
    root.status.assign(ideal_.nvars(), Status::active);
    root.values.assign(ideal_.nvars(), Rational(0));
    solve(std::move(root));
    PointSet out;
    out.positive_dimensional_branch_discarded = discarded_;
    for (const auto& v : points_) out.points.push_back({v});
    return out;
  }

 private:
  // Drops zeros; false if a nonzero constant appears.
  static bool clean(std::vector<CommPolynomial>& gens) {
    std::vector<CommPolynomial> kept;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.is_constant()) return false;
      kept.push_back(std::move(g));
    }
    gens = std::move(kept);
    return true;
  }

  // Finds g = c*u + r with c constant and u absent from r.
  static std::optional<std::pair<std::size_t, std::size_t>> linear_candidate(
      const std::vector<CommPolynomial>& gens) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto& terms = gens[g].terms();
      if (terms.size() >= best_size) continue;
      std::size_t n = gens[g].nvars();
      std::vector<unsigned> count(n, 0);
      std::vector<bool> pure(n, false);
      // Only affine generators: substituting higher-degree expressions
      // inflates the remaining system.
      if (std::any_of(terms.begin(), terms.end(), [](const CommTerm& t) {
            return total_degree(t.exponents) > 1;
          }))
        continue;
      for (const auto& t : terms) {
        std::uint64_t deg = total_degree(t.exponents);
        for (std::size_t v = 0; v < n; ++v)
          if (t.exponents[v]) {
            ++count[v];
            pure[v] = deg == 1;
          }
      }
      for (std::size_t v = n; v-- > 0;)
        if (count[v] == 1 && pure[v]) {
          best = {g, v};
          best_size = terms.size();
          break;
        }
    }
    return best;
  }

  static std::optional<std::size_t> monomial_generator(
      const std::vector<CommPolynomial>& gens) {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].terms().size() == 1) return g;
    return std::nullopt;
  }

  void branch_on_monomial(const Branch& b, const CommPolynomial& mono) {
    const auto& e = mono.lm();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      Branch next = b;
      fix(next, v, Rational(0));
      solve(std::move(next));
    }
  }

  static void fix(Branch& b, std::size_t var, const Rational& value) {
    b.status[var] = Status::fixed;
    b.values[var] = value;
    for (auto& g : b.generators) g = g.substitute(var, value);
  }

  void emit(Branch& b) {
    for (auto it = b.eliminated.rbegin(); it != b.eliminated.rend(); ++it)
      b.values[it->first] = it->second.evaluate(b.values);
    for (const auto& g : ideal_.generators)
      if (!gfactor::is_zero(g.evaluate(b.values))) return;
    points_.insert(b.values);
  }

  void solve(Branch b) {
    if (!clean(b.generators)) return;

    while (auto cand = linear_candidate(b.generators)) {
      auto [gi, var] = *cand;
      CommPolynomial g = std::move(b.generators[gi]);
      b.generators.erase(b.generators.begin() + static_cast<std::ptrdiff_t>(gi));
      Rational c = 0;
      CommPolynomial rest(g.nvars());
      for (const auto& t : g.terms()) {
        if (t.exponents[var])
          c = t.coeff;
        else
          rest += CommPolynomial::from_terms(g.nvars(), {t});
      }
      CommPolynomial expr = rest * Rational(-1 / c);
      for (auto& h : b.generators) h = h.substitute(var, expr);
      b.status[var] = Status::eliminated;
      b.eliminated.emplace_back(var, std::move(expr));
      if (!clean(b.generators)) return;
    }

    if (auto m = monomial_generator(b.generators)) {
      branch_on_monomial(b, b.generators[*m]);
      return;
    }

    if (b.generators.empty()) {
      if (std::find(b.status.begin(), b.status.end(), Status::active) !=
          b.status.end()) {
        discarded_ = true;
        return;
      }
      emit(b);
      return;
    }

    auto basis = comm_groebner(std::span<const CommPolynomial>(b.generators),
                               CommOrder::grevlex);
    if (basis.size() == 1 && basis.front().is_constant()) return;

    if (auto m = monomial_generator(basis)) {
      b.generators = std::move(basis);
      branch_on_monomial(b, b.generators[*m]);
      return;
    }
    if (linear_candidate(basis)) {
      b.generators = std::move(basis);
      solve(std::move(b));
      return;
    }

    // Univariate eliminant by linear algebra on normal forms, the least
    // active unknown first.
    std::optional<std::pair<std::size_t, std::vector<Rational>>> eliminant;
    std::size_t bound = dependency_bound(basis, b.status);
    for (std::size_t v = b.status.size(); v-- > 0 && !eliminant;)
      if (b.status[v] == Status::active)
        if (auto mp = minimal_polynomial(basis, v, bound))
          eliminant.emplace(v, std::move(*mp));
    if (!eliminant) {
      discarded_ = true;
      return;
    }

    auto [var, coeffs] = std::move(*eliminant);
    for (const auto& r : rational_roots(std::span<const Rational>(coeffs))) {
      Branch next = b;
      next.generators = basis;
      fix(next, var, r);
      solve(std::move(next));
    }
  }

  // Upper bound on the degree of a univariate eliminant: the number of
  // standard monomials when the active unknowns are all bounded by pure-power
  // leading monomials, a fixed search depth otherwise.
  static std::size_t dependency_bound(const std::vector<CommPolynomial>& basis,
                                      const std::vector<Status>& status) {
    constexpr std::size_t kOpenSearch = 48;
    constexpr std::size_t kMaxBound = 4096;
    std::size_t bound = 1;
    for (std::size_t v = 0; v < status.size(); ++v) {
      if (status[v] != Status::active) continue;
      std::size_t pure = 0;
      for (const auto& g : basis) {
        const auto& e = g.lm();
        if (e[v] && total_degree(e) == e[v] && (!pure || e[v] < pure))
          pure = e[v];
      }
      if (!pure) return kOpenSearch;
      bound = std::min(kMaxBound, bound * pure);
    }
    return bound;
  }

  static const Rational* coefficient_at(const CommPolynomial& p,
                                        const ExponentVector& e) {
    for (const auto& t : p.terms())
      if (t.exponents == e) return &t.coeff;
    return nullptr;
  }

  // Coefficients (lowest first) of the monic generator of I ∩ Q[var], found
  // as the first linear dependency among NF(var^k), k <= bound.
  static std::optional<std::vector<Rational>> minimal_polynomial(
      const std::vector<CommPolynomial>& basis, std::size_t var,
      std::size_t bound) {
    std::size_t n = basis.front().nvars();
    struct Row {
      CommPolynomial vec;
      std::vector<Rational> combo;
    };
    std::vector<Row> rows;
    CommPolynomial power = CommPolynomial::constant(n, 1, CommOrder::grevlex);
    CommPolynomial x = CommPolynomial::variable(n, var, CommOrder::grevlex);
    for (std::size_t k = 0; k <= bound; ++k) {
      if (k > 0) power = comm_normal_form(power * x, basis);
      CommPolynomial vec = power;
      std::vector<Rational> combo(k + 1);
      combo[k] = 1;
      for (const auto& row : rows) {
        const Rational* c = coefficient_at(vec, row.vec.lm());
        if (!c) continue;
        Rational f = *c;
        vec.subtract_multiple(f, ExponentVector(n, 0), row.vec);
        for (std::size_t i = 0; i < row.combo.size(); ++i)
          combo[i] -= f * row.combo[i];
      }
      if (vec.is_zero()) return combo;
      Rational inv = 1 / vec.lc();
      vec *= inv;
      for (auto& c : combo) c *= inv;
      rows.push_back({std::move(vec), std::move(combo)});
    }
    return std::nullopt;
  }

  const CommIdeal& ideal_;
  std::set<std::vector<Rational>> points_;
  bool discarded_ = false;
};

}  // namespace

PointSet rational_points(const CommIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (g.nvars() != ideal.nvars())
      throw DomainError("generator arity does not match the unknown count");
  return PointSolver(ideal).run();
}

}  // namespace gfactor
