#include "gfactor/fgbg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "gfactor/errors.hpp"

namespace gfactor {

namespace {

using Polys = std::vector<NcPolynomial>;

/// Monic, duplicate-free copy preserving first occurrence order.
Polys normalized(const Polys& in, const AlgebraPtr& alg, const char* what) {
  Polys out;
  std::set<std::string> seen;
  for (const auto& f : in) {
    if (f.is_zero()) throw DomainError(std::string(what) + ": zero input");
    if (f.is_constant())
      throw DomainError(std::string(what) + ": scalar input");
    if (!f.algebra().same_relations(*alg))
      throw DomainError(std::string(what) + ": element of a different algebra");
    NcPolynomial g = normalize_monic(f.rebase(alg)).second;
    if (seen.insert(to_string(g)).second) out.push_back(std::move(g));
  }
  return out;
}

Polys sorted_unique(Polys v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const NcPolynomial& a, const NcPolynomial& b) {
                        return to_string(a) == to_string(b);
                      }),
          v.end());
  return v;
}

std::string join(const Polys& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? ", " : "") + to_string(v[k]);
  return s + "]";
}

bool any_in_ideal(const Polys& C, const Polys& B) {
  return std::any_of(C.begin(), C.end(), [&](const NcPolynomial& g) {
    return nf_left(g, B).is_zero();
  });
}

/// Drops g when another constraint lies in A*g: that one avoiding the ideal
/// already forces g to avoid it.
Polys minimize_constraints(const Polys& C) {
  Polys out;
  for (std::size_t k = 0; k < C.size(); ++k) {
    bool implied = false;
    for (std::size_t m = 0; m < C.size() && !implied; ++m)
      if (m != k) {
        NcPolynomial single[] = {C[k]};
        implied = nf_left(C[m], single).is_zero();
      }
    if (!implied) out.push_back(C[k]);
  }
  return out;
}

bool has_unique_left_divisor(const std::vector<Bipartition>& divs) {
  return std::all_of(divs.begin(), divs.end(), [&](const Bipartition& p) {
    return p.left == divs.front().left;
  });
}

class Search {
 public:
  Search(Factorizer& f, bool first_only) : fac_(f), first_only_(first_only) {}

  void explore(Polys B, Polys C) {
    if (done()) return;
    B = dedupe(std::move(B));
    C = sorted_unique(std::move(C));
    if (!mark(B, C)) return;

    for (std::size_t i = 0; i < B.size(); ++i) {
      if (B[i].is_constant()) continue;
      auto divs = fac_.irreducible_left_divisors(B[i]);
      if (divs.empty() || has_unique_left_divisor(divs)) continue;
      std::sort(divs.begin(), divs.end(),
                [](const Bipartition& a, const Bipartition& b) {
                  return std::pair(to_string(a.right), to_string(a.left)) <
                         std::pair(to_string(b.right), to_string(b.left));
                });
      for (const auto& [a, b] : divs) {
        Polys nb = B;
        nb[i] = b;
        Polys nc = C;
        for (const auto& other : divs)
          if (!(other.right == b)) nc.push_back(other.right);
        explore(std::move(nb), std::move(nc));
        if (done()) return;
      }
      return;
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < B.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
      auto [i, j] = pairs.front();
      pairs.pop_front();
      NcPolynomial h = nf_left(spoly(B[i], B[j]), B);
      if (!h.is_zero()) {
        h = normalize_monic(h).second;
        if (h.is_constant()) {
          B = {h};
          break;
        }
        if (!fac_.is_irreducible(h)) {
          Polys nb = B;
          nb.push_back(h);
          explore(std::move(nb), C);
          return;
        }
        std::size_t idx = B.size();
        B.push_back(std::move(h));
        for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
      }
      if (any_in_ideal(C, B)) return;
    }
    if (any_in_ideal(C, B)) return;

    LeftBasis reduced = reduce_left_basis(B);
    for (const auto& r : reduced.elements) {
      if (r.is_constant()) continue;
      if (!has_unique_left_divisor(fac_.irreducible_left_divisors(r))) {
        explore(reduced.elements, C);
        return;
      }
    }
    record({std::move(reduced), minimize_constraints(C)});
  }

  std::vector<ConstrainedTuple> results() const {
    std::vector<ConstrainedTuple> v;
    for (const auto& [k, t] : results_) v.push_back(t);
    return v;
  }

 private:
  static Polys dedupe(Polys v) {
    Polys out;
    std::set<std::string> seen;
    for (auto& f : v)
      if (seen.insert(to_string(f)).second) out.push_back(std::move(f));
    return out;
  }

  bool done() const {
    std::lock_guard lock(mu_);
    return first_only_ && !results_.empty();
  }

  bool mark(const Polys& B, const Polys& C) {
    std::string key = join(sorted_unique(B)) + "|" + join(C);
    std::lock_guard lock(mu_);
    return explored_.insert(std::move(key)).second;
  }

  void record(ConstrainedTuple t) {
    std::string key = to_string(t);
    std::lock_guard lock(mu_);
    if (first_only_ && !results_.empty()) return;
    results_.try_emplace(std::move(key), std::move(t));
  }

  Factorizer& fac_;
  bool first_only_;
  mutable std::mutex mu_;
  std::set<std::string> explored_;
  std::map<std::string, ConstrainedTuple> results_;
};

std::vector<ConstrainedTuple> run_search(const Polys& B, const Polys& C,
                                         Factorizer& factorizer,
                                         bool first_only) {
  if (B.empty()) throw DomainError("fgbg: empty generator list");
  const AlgebraPtr& alg = factorizer.algebra();
  Search s(factorizer, first_only);
  s.explore(normalized(B, alg, "fgbg"), normalized(C, alg, "fgbg"));
  return s.results();
}

}  // namespace

std::vector<ConstrainedTuple> fgbg(const Polys& B, const Polys& C,
                                   Factorizer& factorizer) {
  return run_search(B, C, factorizer, false);
}

std::optional<ConstrainedTuple> fgbg_first(const Polys& B, const Polys& C,
                                           Factorizer& factorizer) {
  auto r = run_search(B, C, factorizer, true);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::optional<std::string> verify_tuple(const ConstrainedTuple& t,
                                        const Polys& original_B,
                                        Factorizer& factorizer) {
  const Polys& basis = t.basis.elements;
  if (basis.empty()) return "empty basis";
  if (!is_left_groebner(basis)) return "basis is not a left Groebner basis";
  for (const auto& f : original_B)
    if (!nf_left(f.rebase(basis.front().algebra_ptr()), basis).is_zero())
      return "generator " + to_string(f) + " is not in the ideal";
  for (const auto& g : t.constraints)
    if (nf_left(g.rebase(basis.front().algebra_ptr()), basis).is_zero())
      return "constraint " + to_string(g) + " lies in the ideal";
  for (const auto& b : basis) {
    if (b.is_constant()) continue;
    if (!has_unique_left_divisor(factorizer.irreducible_left_divisors(b)))
      return "basis element " + to_string(b) +
             " has several irreducible left divisors";
  }
  return std::nullopt;
}

std::string to_string(const ConstrainedTuple& t) {
  return "basis: " + join(t.basis.elements) +
         " constraints: " + join(t.constraints);
}

}  // namespace gfactor
