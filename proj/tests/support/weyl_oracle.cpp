#include "weyl_oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>


namespace oracle {

namespace {

using gfactor::Rational;

// Polynomial in the parameters (v, w): (deg v, deg w) -> coefficient.
using Param = std::map<std::pair<unsigned, unsigned>, Rational>;
// x^i d^j -> coefficient.
using Key = std::pair<unsigned, unsigned>;
using Weyl = std::map<Key, Param>;

void add_to(Param& p, const Param& q, const Rational& s) {
  for (const auto& [k, c] : q) {
    Rational& t = p[k];
    t += s * c;
    if (t == 0) p.erase(k);
  }
}

Param mul(const Param& p, const Param& q) {
  Param r;
  for (const auto& [a, c] : p)
    for (const auto& [b, e] : q) {
      Key k{a.first + b.first, a.second + b.second};
      Rational& t = r[k];
      t += c * e;
      if (t == 0) r.erase(k);
    }
  return r;
}

Rational falling(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

Rational binom(unsigned n, unsigned k) {
  return falling(n, k) / falling(k, k);
}

// (x^a d^b)(x^c d^e) = sum_k C(b,k) c!/(c-k)! x^(a+c-k) d^(b+e-k).
Weyl mul(const Weyl& f, const Weyl& g) {
  Weyl r;
  for (const auto& [m1, c1] : f)
    for (const auto& [m2, c2] : g) {
      Param c = mul(c1, c2);
      auto [a, b] = m1;
      auto [cc, e] = m2;
      for (unsigned k = 0; k <= std::min(b, cc); ++k) {
        Rational s = binom(b, k) * falling(cc, k);
        Key key{a + cc - k, b + e - k};
        add_to(r[key], c, s);
        if (r[key].empty()) r.erase(key);
      }
    }
  return r;
}

// deglex, x > d.
bool key_less(const Key& a, const Key& b) {
  unsigned da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

Param constant(const Rational& c) {
  if (c == 0) return {};
  return {{{0, 0}, c}};
}

Weyl from_poly(const gfactor::NcPolynomial& f) {
  Weyl r;
  for (const auto& t : f.terms())
    r[{t.exponents[0], t.exponents[1]}] = constant(t.coeff);
  return r;
}

struct Division {
  Weyl quotient;
  Weyl remainder;
};

// Reduces f by a monic degree-one element q with leading monomial `lead`,
// using q on the right (f = a*q + r) or on the left (f = q*a + r).
Division divide(Weyl f, const Weyl& q, const Key& lead, bool q_on_right) {
  Division out;
  while (true) {
    std::optional<Key> top;
    for (const auto& [k, c] : f)
      if (!c.empty() && k.first >= lead.first && k.second >= lead.second &&
          (!top || key_less(*top, k)))
        top = k;
    if (!top) break;
    Key shift{top->first - lead.first, top->second - lead.second};
    Param c = f[*top];
    Weyl m{{shift, c}};
    Weyl sub = q_on_right ? mul(m, q) : mul(q, m);
    for (const auto& [k, p] : sub) {
      add_to(f[k], p, Rational(-1));
      if (f[k].empty()) f.erase(k);
    }
    add_to(out.quotient[shift], c, Rational(1));
  }
  for (auto& [k, c] : f)
    if (!c.empty()) out.remainder[k] = c;
  return out;
}

Rational eval(const Param& p, const Rational& v, const Rational& w) {
  Rational s = 0;
  for (const auto& [k, c] : p) {
    Rational t = c;
    for (unsigned i = 0; i < k.first; ++i) t *= v;
    for (unsigned i = 0; i < k.second; ++i) t *= w;
    s += t;
  }
  return s;
}

unsigned deg_v(const Param& p) {
  unsigned d = 0;
  for (const auto& [k, c] : p) d = std::max(d, k.first);
  return d;
}

unsigned deg_w(const Param& p) {
  unsigned d = 0;
  for (const auto& [k, c] : p) d = std::max(d, k.second);
  return d;
}

// Dense coefficients in w (lowest first) of p at v = value, with formal
// length deg_w(p) + 1.
std::vector<Rational> in_w(const Param& p, const Rational& v) {
  std::vector<Rational> c(deg_w(p) + 1);
  for (const auto& [k, q] : p) {
    Rational t = q;
    for (unsigned i = 0; i < k.first; ++i) t *= v;
    c[k.second] += t;
  }
  return c;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Sylvester resultant of two polynomials given low-first with formal degrees
// a.size()-1 and b.size()-1.
Rational resultant(const std::vector<Rational>& a,
                   const std::vector<Rational>& b) {
  std::size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0 && n == 0) return 1;
  std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return determinant(std::move(s));
}

// Univariate polynomial (low first) through the points (i, values[i]).
std::vector<Rational> interpolate(const std::vector<Rational>& values) {
  std::size_t n = values.size();
  std::vector<Rational> result(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= Rational(static_cast<long>(j)) * basis[k];
      }
      basis = std::move(next);
      denom *= Rational(static_cast<long>(i) - static_cast<long>(j));
    }
    for (std::size_t k = 0; k < n; ++k) result[k] += values[i] * basis[k] / denom;
  }
  return result;
}

bool all_zero(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
}

std::vector<gfactor::Integer> divisors_of(gfactor::Integer n) {
  if (n < 0) n = -n;
  if (n > gfactor::Integer("100000000000000"))
    throw std::runtime_error("oracle: constant too large for trial division");
  std::vector<gfactor::Integer> out;
  for (gfactor::Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  return out;
}

// Rational roots by the rational root theorem, tested by exact evaluation.
std::vector<Rational> roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::runtime_error("oracle: zero polynomial");
  std::set<Rational> found;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) found.insert(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() > 1) {
    gfactor::Integer den = 1;
    for (const auto& q : c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    gfactor::Integer a0 = c.front().get_num() * (den / c.front().get_den());
    gfactor::Integer an = c.back().get_num() * (den / c.back().get_den());
    for (const auto& p : divisors_of(a0))
      for (const auto& q : divisors_of(an))
        for (int sign : {1, -1}) {
          Rational r(sign * p, q);
          r.canonicalize();
          Rational value = 0;
          for (std::size_t k = c.size(); k-- > 0;) value = value * r + c[k];
          if (value == 0) found.insert(r);
        }
  }
  return {found.begin(), found.end()};
}

// Common rational zeros of polynomials in w alone.
std::vector<Rational> common_w_roots(const std::vector<Param>& eqs,
                                     const Rational& v) {
  std::optional<std::vector<Rational>> candidates;
  for (const auto& p : eqs) {
    auto c = in_w(p, v);
    if (all_zero(c)) continue;
    candidates = roots(c);
    break;
  }
  if (!candidates) throw std::runtime_error("oracle: free parameter w");
  std::vector<Rational> out;
  for (const auto& w : *candidates)
    if (std::all_of(eqs.begin(), eqs.end(),
                    [&](const Param& p) { return eval(p, v, w) == 0; }))
      out.push_back(w);
  return out;
}

// Common rational zeros (v, w) of the remainder coefficients.
std::vector<std::pair<Rational, Rational>> solve(const std::vector<Param>& eqs,
                                                 bool two_params) {
  std::vector<std::pair<Rational, Rational>> out;
  if (!two_params) {
    for (const auto& w : common_w_roots(eqs, Rational(0))) out.emplace_back(0, w);
    return out;
  }
  // Candidate v values: roots of some nonzero Res_w(P, Q), computed by
  // interpolation at v = 0, 1, ..., or of a v-only equation.
  std::optional<std::vector<Rational>> vs;
  for (const auto& p : eqs)
    if (deg_w(p) == 0) {
      std::vector<Rational> c(deg_v(p) + 1);
      for (const auto& [k, q] : p) c[k.first] += q;
      vs = roots(c);
      break;
    }
  for (std::size_t i = 0; i < eqs.size() && !vs; ++i)
    for (std::size_t j = i + 1; j < eqs.size() && !vs; ++j) {
      const Param &p = eqs[i], &q = eqs[j];
      std::size_t bound = deg_w(p) * deg_v(q) + deg_w(q) * deg_v(p);
      std::vector<Rational> samples;
      for (std::size_t s = 0; s <= bound; ++s) {
        Rational v(static_cast<long>(s));
        samples.push_back(resultant(in_w(p, v), in_w(q, v)));
      }
      auto r = interpolate(samples);
      if (!all_zero(r)) vs = roots(r);
    }
  if (!vs) throw std::runtime_error("oracle: all resultants vanish");
  for (const auto& v : *vs)
    for (const auto& w : common_w_roots(eqs, v)) out.emplace_back(v, w);
  return out;
}

// Degree-one monic factor shapes: d + w, or x + v d + w.
Weyl shape(bool lead_x) {
  Weyl q;
  if (lead_x) {
    q[{1, 0}] = constant(1);
    q[{0, 1}] = Param{{{1, 0}, Rational(1)}};
  } else {
    q[{0, 1}] = constant(1);
  }
  q[{0, 0}] = Param{{{0, 1}, Rational(1)}};
  return q;
}

Weyl specialize(const Weyl& f, const Rational& v, const Rational& w) {
  Weyl r;
  for (const auto& [k, c] : f) {
    Rational s = eval(c, v, w);
    if (s != 0) r[k] = constant(s);
  }
  return r;
}

gfactor::NcPolynomial to_poly(const Weyl& f, const gfactor::AlgebraPtr& a) {
  gfactor::TermList t;
  for (const auto& [k, c] : f) {
    if (c.empty()) continue;
    if (c.size() != 1 || c.begin()->first != std::pair<unsigned, unsigned>{0, 0})
      throw std::logic_error("oracle: unspecialized coefficient");
    t.push_back({{k.first, k.second}, c.begin()->second});
  }
  return gfactor::NcPolynomial::from_terms(a, std::move(t));
}

Key leading_key(const Weyl& f) {
  std::optional<Key> top;
  for (const auto& [k, c] : f)
    if (!c.empty() && (!top || key_less(*top, k))) top = k;
  return *top;
}

}  // namespace

std::set<std::string> right_cofactors(const gfactor::NcPolynomial& f) {
  const auto& alg = f.algebra_ptr();
  Weyl F = from_poly(f);
  Key top = leading_key(F);
  std::set<std::string> out;

  for (bool lead_x : {false, true}) {
    Key lead = lead_x ? Key{1, 0} : Key{0, 1};
    if (top.first < lead.first || top.second < lead.second || top == lead)
      continue;
    Weyl q = shape(lead_x);
    for (bool q_on_right : {true, false}) {
      Division div = divide(F, q, lead, q_on_right);
      std::vector<Param> eqs;
      for (const auto& [k, c] : div.remainder) eqs.push_back(c);
      if (eqs.empty())
        throw std::runtime_error("oracle: division exact for all parameters");
      for (const auto& [v, w] : solve(eqs, lead_x)) {
        Weyl qs = specialize(q, v, w);
        Weyl as = specialize(div.quotient, v, w);
        Weyl back = q_on_right ? mul(as, qs) : mul(qs, as);
        if (to_poly(back, alg) != f)
          throw std::logic_error("oracle: factor pair does not multiply back");
        Weyl right = q_on_right ? qs : as;
        auto r = gfactor::normalize_monic(to_poly(right, alg)).second;
        out.insert(gfactor::to_string(r));
      }
    }
  }
  return out;
}

std::vector<gfactor::NcPolynomial> random_weyl_elements(
    const gfactor::AlgebraPtr& a1, std::uint32_t seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&](unsigned max_deg, bool monic_top) {
    gfactor::TermList t;
    for (unsigned i = 0; i <= max_deg; ++i)
      for (unsigned j = 0; i + j <= max_deg; ++j)
        if (int c = coef(rng); c != 0 && (rng() % 3 != 0))
          t.push_back({{i, j}, Rational(c)});
    if (monic_top) {
      unsigned i = rng() % (max_deg + 1);
      t.push_back({{i, max_deg - i}, Rational(1 + static_cast<int>(rng() % 3))});
    }
    auto p = gfactor::NcPolynomial::from_terms(a1, std::move(t));
    return p;
  };
  auto nonconstant = [&](unsigned deg) {
    while (true) {
      auto p = random_poly(deg, true);
      if (gfactor::total_degree(p.lm()) == deg) return p;
    }
  };
  std::vector<gfactor::NcPolynomial> out;
  while (out.size() < count) {
    gfactor::NcPolynomial f(a1);
    auto times = [&](const gfactor::NcPolynomial& a,
                     const gfactor::NcPolynomial& b) {
      return to_poly(mul(from_poly(a), from_poly(b)), a1);
    };
    switch (out.size() % 5) {
      case 0: f = times(nonconstant(1), nonconstant(1)); break;
      case 1: f = times(nonconstant(1), nonconstant(2)); break;
      case 2: f = times(nonconstant(2), nonconstant(1)); break;
      case 3: f = times(times(nonconstant(1), nonconstant(1)), nonconstant(1)); break;
      default: f = nonconstant(2 + static_cast<unsigned>(rng() % 2)); break;
    }
    auto d = gfactor::total_degree(f.lm());
    if (d < 2 || d > 3) continue;
    out.push_back(gfactor::normalize_monic(f).second);
  }
  return out;
}

}  // namespace oracle
