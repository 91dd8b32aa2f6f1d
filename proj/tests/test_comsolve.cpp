#include <doctest.h>

#include <random>

#include "gfactor/comm.hpp"
#include "gfactor/errors.hpp"
#include "gfactor/factor.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace gfactor;

namespace {

using P = CommPolynomial;

P var(std::size_t n, std::size_t i) { return P::variable(n, i); }
P cst(std::size_t n, const Rational& v) { return P::constant(n, v); }

const std::vector<std::string> xy = {"x", "y"};

std::vector<std::string> texts(const std::vector<P>& v) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(p.to_string(xy));
  return s;
}

std::vector<Rational> Q(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int k : v) out.emplace_back(k);
  return out;
}

}  // namespace

TEST_CASE("term orders on unknowns") {
  ExponentVector x{1, 0, 0}, y{0, 1, 0}, yz{0, 1, 1}, xz{1, 0, 1}, xx{2, 0, 0};
  CHECK(comm_less(CommOrder::lex, y, x));
  CHECK(comm_less(CommOrder::lex, yz, x));
  CHECK(comm_less(CommOrder::grevlex, x, yz));
  // Equal degree: smaller exponent in the last unknown wins.
  CHECK(comm_less(CommOrder::grevlex, xz, xx));
  CHECK(comm_less(CommOrder::grevlex, yz, xz));
}

TEST_CASE("comm_groebner small bases") {
  auto x = var(2, 0), y = var(2, 1);
  std::vector<P> g1 = {x - cst(2, 1), y - x};
  CHECK(texts(comm_groebner(g1)) == std::vector<std::string>{"x - 1", "y - 1"});

  std::vector<P> g2 = {x * x, x};
  CHECK(texts(comm_groebner(g2)) == std::vector<std::string>{"x"});

  std::vector<P> unit = {x * y - cst(2, 1), y};
  CHECK(texts(comm_groebner(unit)) == std::vector<std::string>{"1"});

  std::vector<P> zero = {P(2)};
  CHECK(comm_groebner(zero).empty());

  SUBCASE("grevlex agrees on the ideal") {
    std::vector<P> g = {x * x - y, x * y - cst(2, 1)};
    auto lex = comm_groebner(g, CommOrder::lex);
    auto grl = comm_groebner(g, CommOrder::grevlex);
    for (const auto& p : g) {
      CHECK(comm_normal_form(p, lex).is_zero());
      CHECK(comm_normal_form(p, grl).is_zero());
    }
    for (const auto& p : lex) CHECK(comm_normal_form(p, grl).is_zero());
    for (const auto& p : grl) CHECK(comm_normal_form(p, lex).is_zero());
    // lex basis of a zero-dimensional ideal ends in a univariate eliminant.
    CHECK(lex.back().univariate_variable() == std::size_t{1});
  }
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(std::vector<Rational>{1, -3, 2}) ==
        std::vector<Rational>{Rational(1, 2), Rational(1)});
  CHECK(rational_roots(Q({1, 0, 1})).empty());
  CHECK(rational_roots(Q({0, 0, 0, 1})) == Q({0}));
  CHECK(rational_roots(Q({5})).empty());
  CHECK(rational_roots(std::vector<Rational>{Rational(-1, 4), 0, 1}) ==
        std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(rational_roots(Q({6, -11, 6, -1})) == Q({1, 2, 3}));
  CHECK_THROWS_AS(rational_roots(Q({0, 0})), DomainError);

  auto t = var(1, 0);
  CHECK(rational_roots(t * t - cst(1, 4)) == Q({-2, 2}));
}

TEST_CASE("rational_points small systems") {
  auto x = var(2, 0), y = var(2, 1);
  CommIdeal a{xy, {x - cst(2, 1), y - cst(2, 1)}};
  auto pa = rational_points(a);
  REQUIRE(pa.points.size() == 1);
  CHECK(pa.points[0].values == Q({1, 1}));
  CHECK_FALSE(pa.positive_dimensional_branch_discarded);

  CommIdeal b{xy, {x * x - cst(2, 1), y - x}};
  auto pb = rational_points(b);
  REQUIRE(pb.points.size() == 2);
  CHECK(pb.points[0].values == Q({-1, -1}));
  CHECK(pb.points[1].values == Q({1, 1}));

  CommIdeal unit{xy, {cst(2, 1)}};
  CHECK(rational_points(unit).points.empty());

  CommIdeal irrational{xy, {x * x - cst(2, 2), y}};
  CHECK(rational_points(irrational).points.empty());

  CommIdeal line{xy, {x - y}};
  auto pl = rational_points(line);
  CHECK(pl.points.empty());
  CHECK(pl.positive_dimensional_branch_discarded);

  // A line through an isolated point: whatever is returned must be sound,
  // and the line must be reported.
  CommIdeal mixed{xy, {x * (x - cst(2, 1)), x * (y - cst(2, 2))}};
  auto pm = rational_points(mixed);
  CHECK(pm.points.size() <= 1);
  CHECK(pm.positive_dimensional_branch_discarded);
  CHECK(props::points_sound(mixed, pm) == "");
}

TEST_CASE("brute-force oracle on grid systems") {
  // Ideals <prod (x - a), prod (y - b), f> have all zeros on a known grid,
  // so exhaustive evaluation gives the exact rational point set.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int round = 0; round < 40; ++round) {
    std::size_t n = 2;
    auto x = var(n, 0), y = var(n, 1);
    std::vector<Rational> as, bs;
    P px = cst(n, 1), py = cst(n, 1);
    for (int k = 0; k < 1 + round % 3; ++k) {
      Rational a(small(rng), 1 + (round % 2));
      a.canonicalize();
      as.push_back(a);
      px = px * (x - cst(n, a));
    }
    for (int k = 0; k < 1 + (round / 3) % 3; ++k) {
      Rational b(small(rng));
      bs.push_back(b);
      py = py * (y - cst(n, b));
    }
    P f = cst(n, small(rng)) * Rational(1) + x * Rational(small(rng)) +
          y * Rational(small(rng)) + x * y * Rational(small(rng)) +
          y * y * Rational(small(rng));
    std::vector<Rational> at{as[0], bs[0]};
    f -= cst(n, f.evaluate(at));  // force at least one common zero

    CommIdeal ideal{xy, {px, py, f}};
    std::vector<RationalPoint> expected;
    for (const auto& a : as)
      for (const auto& b : bs) {
        std::vector<Rational> v{a, b};
        if (is_zero(f.evaluate(v))) expected.push_back({v});
      }
    std::sort(expected.begin(), expected.end(),
              [](const auto& p, const auto& q) { return p.values < q.values; });
    expected.erase(std::unique(expected.begin(), expected.end()),
                   expected.end());

    auto got = rational_points(ideal);
    CAPTURE(round);
    CAPTURE(f.to_string(xy));
    CHECK(got.points == expected);
    CHECK_FALSE(got.positive_dimensional_branch_discarded);
  }
}

TEST_CASE("ansatz for the U(sl2) element has the expected point") {
  using fixtures::S;
  Factorizer fac(fixtures::sl2());
  auto monic = S(fixtures::sl2_p).rebase(fac.working_algebra());
  Splitting split{{1, 0, 0}, {2, 1, 0}};
  auto sys = ansatz_system(monic, split, fac.weights());
  CHECK(sys.lambda == 1);
  CHECK(sys.ideal.names.size() == sys.slots.size());
  // b's unknowns come first.
  CHECK_FALSE(sys.slots.front().in_left);
  CHECK(sys.slots.back().in_left);

  auto pts = rational_points(sys.ideal);
  CHECK(props::points_sound(sys.ideal, pts) == "");
  bool found = false;
  for (const auto& p : pts.points) {
    TermList ta{{split.left, Rational(1)}}, tb{{split.right, Rational(1)}};
    for (std::size_t u = 0; u < sys.slots.size(); ++u)
      (sys.slots[u].in_left ? ta : tb).push_back({sys.slots[u].monomial, p.values[u]});
    auto a = NcPolynomial::from_terms(sys.working, ta);
    auto b = NcPolynomial::from_terms(sys.working, tb);
    CHECK(a * b == monic);
    if (a == S("e + 1") &&
        b == S("e^2*f + e*f^2 - 3*e*h - 2*f*h - e^2 + f^2 - 7*e + f - h"))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("ansatz rejects mismatched input") {
  using fixtures::W;
  Factorizer fac(fixtures::weyl());
  CHECK_THROWS_AS(ansatz_system(W("x*d + 1"), {{1, 0}, {1, 0}}, fac.weights()),
                  DomainError);
  CHECK_THROWS_AS(ansatz_system(W("2*x*d + 1"), {{1, 0}, {0, 1}}, fac.weights()),
                  DomainError);
  CHECK_THROWS_AS(ansatz_system(W("7"), {{1, 0}, {0, 1}}, fac.weights()),
                  DomainError);
}
