#include "doctest.h"
#include "support.hpp"
#include "tf/limits.hpp"

using namespace tft;

namespace {

// Plain division algorithm: strike any term divisible by some lead monomial
// until none is left. Slow and obviously correct.
template <class F>
tf::Polynomial<F> naive_reduce(tf::Polynomial<F> f, const std::vector<tf::Polynomial<F>>& g) {
  const F& k = f.field();
  tf::Polynomial<F> rest(f.ring());
  while (!f.is_zero()) {
    const auto& lead = f.terms().front();
    bool hit = false;
    for (const auto& d : g) {
      if (tf::divides(d.lead_monomial(), lead.monomial)) {
        auto m = tf::divide(lead.monomial, d.lead_monomial());
        f -= d.times_term(m, k.div(lead.coefficient, d.lead_coefficient()));
        hit = true;
        break;
      }
    }
    if (!hit) {
      rest += tf::Polynomial<F>::term(f.ring(), lead.monomial, lead.coefficient);
      f -= tf::Polynomial<F>::term(f.ring(), lead.monomial, lead.coefficient);
    }
  }
  return rest;
}

template <class F>
tf::Polynomial<F> s_poly(const tf::Polynomial<F>& a, const tf::Polynomial<F>& b) {
  const auto& r = a.ring();
  auto l = r->lcm(a.lead_monomial(), b.lead_monomial());
  const F& k = a.field();
  return a.times_term(tf::divide(l, a.lead_monomial()), k.inv(a.lead_coefficient())) -
         b.times_term(tf::divide(l, b.lead_monomial()), k.inv(b.lead_coefficient()));
}

/// Checks that `gb` is the reduced basis of (gens): closure under S-pairs,
/// reducedness, and equality of the two ideals.
template <class F>
void check_reduced_basis(const std::vector<tf::Polynomial<F>>& gens, const tf::GroebnerBasis<F>& gb) {
  const auto& b = gb.elements();
  const F& k = gb.ring()->field();
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(k.is_one(b[i].lead_coefficient()));
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[i].terms()) CHECK_FALSE(tf::divides(b[j].lead_monomial(), t.monomial));
      if (j > i) CHECK(naive_reduce(s_poly(b[i], b[j]), b).is_zero());
    }
  }
  for (const auto& g : gens) CHECK(naive_reduce(g, b).is_zero());
  REQUIRE(gb.has_cofactors());
  for (std::size_t i = 0; i < b.size(); ++i) {
    tf::Polynomial<F> combo(gb.ring());
    for (std::size_t j = 0; j < gens.size(); ++j) combo += gb.cofactors()[i][j] * gens[j];
    CHECK(combo == b[i]);
  }
}

}  // namespace

TEST_CASE("reduced bases of random ideals over GF(p)") {
  std::mt19937 rng(2024);
  tf::GroebnerOptions opt;
  opt.track_cofactors = true;
  for (auto order : {tf::MonomialOrder::degrevlex(), tf::MonomialOrder::lex(), tf::MonomialOrder::elimination(2)}) {
    auto r = ring(numbered(4))->with_order(order);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Poly> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 2, 3, trial % 2 == 0));
      auto gb = tf::buchberger(r, gens, opt);
      check_reduced_basis(gens, gb);
    }
  }
}

TEST_CASE("reduced basis over the rationals") {
  auto r = ring<Q>({"x", "y", "z"});
  auto gens = polys(r, "x^2 + 1/2*y*z - 1, x*y - 3*z, y^2 - x + z");
  tf::GroebnerOptions opt;
  opt.track_cofactors = true;
  check_reduced_basis(gens, tf::buchberger(r, gens, opt));
}

TEST_CASE("bases in different orders describe the same ideal") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x^2 - y*z, y^2 - x*z, z^2 - x*y + x");
  auto a = tf::buchberger(r, gens);
  auto rl = r->with_order(tf::MonomialOrder::lex());
  std::vector<Poly> moved;
  for (const auto& g : gens) moved.push_back(tf::parse_polynomial(rl, g.to_string()));
  auto b = tf::buchberger(rl, moved);
  for (const auto& g : b.elements()) CHECK(a.contains(tf::parse_polynomial(r, g.to_string())));
  for (const auto& g : a.elements()) CHECK(b.contains(tf::parse_polynomial(rl, g.to_string())));
}

TEST_CASE("unit ideal and empty input") {
  auto r = ring({"x", "y"});
  auto gb = tf::buchberger(r, polys(r, "x*y - 1, x"));
  CHECK(gb.is_unit());
  CHECK(tf::buchberger(r, std::vector<Poly>{}).size() == 0);
}

TEST_CASE("Hilbert function from the basis agrees with linear algebra") {
  std::mt19937 rng(5);
  auto r = ring(numbered(4));
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 2 + i % 2, 4));
    tf::Ideal<K> I(r, gens);
    auto hs = I.hilbert_series();
    auto series = hs.expand(6);
    for (int d = 0; d <= 6; ++d) CHECK(series[static_cast<std::size_t>(d)] == brute_hilbert_function(r, gens, d));
  }
}

TEST_CASE("syzygies generate the kernel degree by degree") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x^2, x*y, y*z^2, x*z + y^2");
  auto row = tf::PolyMatrix<K>::row(r, gens);
  auto syz = tf::syzygies(row);
  CHECK((row * syz).is_zero());
  std::vector<int> src;
  for (const auto& g : gens) src.push_back(g.degree());
  for (int d = 2; d <= 6; ++d) {
    // Kernel of the degree-d map, by dense elimination.
    auto target = monomials_of_degree(r, d);
    std::vector<std::vector<K::Element>> cols;  // images of source basis vectors
    std::vector<std::pair<int, tf::Monomial>> source;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& m : monomials_of_degree(r, d - src[j])) {
        source.push_back({static_cast<int>(j), m});
        cols.push_back(coordinates(gens[j].times_term(m, 1), target));
      }
    }
    // rows of the transpose: one equation per target monomial.
    std::vector<std::vector<K::Element>> eqs(target.size(), std::vector<K::Element>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < target.size(); ++i) eqs[i][c] = cols[c][i];
    K k;
    long long kernel = static_cast<long long>(cols.size()) - tf::matrix_rank(k, eqs);
    // Degree-d span of the returned syzygies.
    std::vector<std::vector<K::Element>> span;
    for (int c = 0; c < syz.cols(); ++c) {
      int cd = -1;
      for (int j = 0; j < syz.rows(); ++j) {
        if (!syz.at(j, c).is_zero()) cd = syz.at(j, c).degree() + src[static_cast<std::size_t>(j)];
      }
      if (cd < 0 || cd > d) continue;
      for (const auto& m : monomials_of_degree(r, d - cd)) {
        std::vector<K::Element> v(source.size(), 0);
        for (int j = 0; j < syz.rows(); ++j) {
          auto e = syz.at(j, c).times_term(m, 1);
          for (const auto& t : e.terms()) {
            for (std::size_t s = 0; s < source.size(); ++s) {
              if (source[s].first == j && source[s].second == t.monomial) v[s] = t.coefficient;
            }
          }
        }
        span.push_back(std::move(v));
      }
    }
    long long spanned = span.empty() ? 0 : tf::matrix_rank(k, span);
    CHECK(spanned == kernel);
  }
}

TEST_CASE("minimal syzygies of a regular sequence are the Koszul relations") {
  auto r = ring({"x", "y", "z"});
  auto row = tf::PolyMatrix<K>::row(r, polys(r, "x, y, z"));
  std::vector<int> shifts{0};
  auto syz = tf::syzygies(row, shifts, true);
  CHECK(syz.cols() == 3);
  CHECK((row * syz).is_zero());
}

TEST_CASE("minimal generators drop redundant elements") {
  auto r = ring({"x", "y"});
  auto gens = polys(r, "x^2, x*y, x^2 + x*y, x^3 + y^3, y^3");
  auto keep = tf::minimal_generator_indices(r, gens);
  CHECK(keep == std::vector<int>{0, 1, 3});
}

TEST_CASE("lift returns cofactors") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x*y - z^2, y^2 - x*z");
  auto f = poly(r, "x*y^3 - y*z^2*y + x*z*z^2 - x^2*z*y + 5*(x*y - z^2)");
  auto c = tf::lift(r, gens, f);
  REQUIRE(c);
  CHECK((*c)[0] * gens[0] + (*c)[1] * gens[1] == f);
  CHECK_FALSE(tf::lift(r, gens, poly(r, "x")));
}

TEST_CASE("module bases of column spans") {
  auto r = ring({"x", "y"});
  auto m = tf::PolyMatrix<K>::from_rows(r, {{poly(r, "x"), poly(r, "y")}, {poly(r, "y"), poly(r, "0")}});
  auto gb = tf::module_buchberger(m);
  for (const auto& c : m.columns()) CHECK(gb.contains(c));
  // y^2 e_2 = y * col1 - x * col2
  CHECK(gb.contains(poly(r, "y^2").in_component(1)));
  CHECK_FALSE(gb.contains(poly(r, "y").in_component(1)));
}

TEST_CASE("degree cap and deadline are enforced") {
  auto r = ring(numbered(4));
  auto gens = polys(r, "x1^3 - x2*x3*x4, x2^3 - x1*x3^2, x3^3 - x4^2*x1 + x2^3");
  {
    tf::ScopedLimits lim(tf::ComputeLimits{std::nullopt, 4});
    CHECK_THROWS_AS(tf::buchberger(r, gens), tf::DegreeCapExceeded);
  }
  {
    tf::ScopedLimits lim(tf::ComputeLimits::with_timeout(std::chrono::duration<double>(-1.0)));
    CHECK_THROWS_AS(tf::buchberger(r, gens), tf::Timeout);
  }
  CHECK_NOTHROW(tf::buchberger(r, gens));
}

TEST_CASE("work counters are reproducible") {
  auto r = ring(numbered(5));
  auto gens = tf::minors(tf::generic_matrix(r, 2, 2), 2);
  gens.push_back(poly(r, "x5^2 - x1*x2"));
  auto a = tf::buchberger(r, gens);
  auto b = tf::buchberger(r, gens);
  CHECK(a == b);
  CHECK(a.stats().pairs == b.stats().pairs);
  CHECK(a.stats().reductions == b.stats().reductions);
  tf::thread_work_counters() = {};
  tf::buchberger(r, gens);
  CHECK(tf::thread_work_counters().pairs == a.stats().pairs);
}

TEST_CASE("truncated bases are correct up to the bound") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x^2 - y*z, x*y - z^2, y^3 - x*z^2");
  tf::GroebnerOptions opt;
  opt.degree_bound = 3;
  auto t = tf::buchberger(r, gens, opt);
  auto full = tf::buchberger(r, gens);
  CHECK(t.is_truncated());
  for (const auto& g : full.elements()) {
    if (g.degree() <= 3) CHECK(t.contains(g));
  }
}
