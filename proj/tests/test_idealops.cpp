#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "tf/hilbert.hpp"

using namespace tft;

TEST_CASE("sum, product and containment") {
  auto r = ring({"x", "y", "z"});
  auto I = ideal(r, "x*y, z^2");
  auto J = ideal(r, "x");
  CHECK((I + J).contains(poly(r, "z^2 + x*z")));
  CHECK((I * J).contains(poly(r, "x^2*y")));
  CHECK_FALSE((I * J).contains(poly(r, "z^2")));
  CHECK((I + J) == ideal(r, "x, z^2"));
  CHECK(I.contains(I * J));
  CHECK(tf::Ideal<K>::unit(r).is_unit());
  CHECK(tf::Ideal<K>::zero(r).is_zero());
}

TEST_CASE("intersection dimension count") {
  // dim (I cap J)_d = dim I_d + dim J_d - dim (I + J)_d
  std::mt19937 rng(3);
  auto r = ring(numbered(4));
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Poly> a{random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)};
    std::vector<Poly> b{random_poly(r, rng, 2, 3), random_poly(r, rng, 3, 3)};
    tf::Ideal<K> I(r, a), J(r, b);
    auto meet = I.intersect(J);
    std::vector<Poly> both = a;
    both.insert(both.end(), b.begin(), b.end());
    for (int d = 2; d <= 5; ++d) {
      long long expect = brute_ideal_dim(r, a, d) + brute_ideal_dim(r, b, d) - brute_ideal_dim(r, both, d);
      CHECK(meet.degree_part_dim(d) == expect);
    }
    for (const auto& g : meet.generators()) {
      CHECK(I.contains(g));
      CHECK(J.contains(g));
    }
  }
}

TEST_CASE("colon ideal degree by degree") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x^2*y, x*y*z, z^3");
  tf::Ideal<K> I(r, gens);
  auto g = poly(r, "x*z + y^2");
  auto colon = I.quotient(g);
  K k;
  for (int d = 0; d <= 4; ++d) {
    // (I : g)_d = { f in R_d : f g in I }, as the preimage of I_{d+2}.
    auto src = monomials_of_degree(r, d);
    auto tgt = monomials_of_degree(r, d + 2);
    std::vector<std::vector<K::Element>> rows;
    for (const auto& p : degree_piece_spanning_set(r, gens, d + 2)) rows.push_back(coordinates(p, tgt));
    auto ideal_rank = rows.empty() ? 0 : tf::matrix_rank(k, rows);
    // f g in I iff the images of g*m, modulo I_{d+2}, are dependent. Count
    // dim of preimage = |src| - rank(images mod I).
    std::vector<std::vector<K::Element>> ext = rows;
    for (const auto& m : src) ext.push_back(coordinates(g.times_term(m, 1), tgt));
    long long img = tf::matrix_rank(k, ext) - ideal_rank;
    CHECK(colon.degree_part_dim(d) == static_cast<long long>(src.size()) - img);
  }
}

TEST_CASE("saturation methods agree and report the chain length") {
  auto r = ring({"x", "y", "z"});
  auto I = ideal(r, "x^3*y, x^2*z^2, y*z");
  auto a = I.saturate(poly(r, "x"), tf::SaturationMethod::IteratedColon);
  auto b = I.saturate(poly(r, "x"), tf::SaturationMethod::ExtraVariable);
  CHECK(a.ideal == b.ideal);
  CHECK(a.ideal == ideal(r, "y, z^2"));
  CHECK(a.steps == 3);
  CHECK(I.quotient(poly(r, "x^3")) == a.ideal);
  CHECK_FALSE(I.quotient(poly(r, "x^2")) == a.ideal);
}

TEST_CASE("elimination recovers the twisted cubic") {
  auto r = ring({"s", "t", "a", "b", "c", "d"});
  auto I = ideal(r, "a - s^3, b - s^2*t, c - s*t^2, d - t^3");
  auto E = I.eliminate({2, 3, 4, 5});
  auto rc = ring({"a", "b", "c", "d"});
  std::vector<Poly> moved;
  for (const auto& g : E.basis()) {
    for (const auto& t : g.terms()) {
      CHECK(t.monomial[0] == 0);
      CHECK(t.monomial[1] == 0);
    }
    moved.push_back(tf::parse_polynomial(rc, g.to_string()));
  }
  // the image is spanned by the monomials of degree 3d in s, t
  for (int d = 0; d <= 5; ++d) CHECK(brute_hilbert_function(rc, moved, d) == 3 * d + 1);
  CHECK(tf::Ideal<K>(rc, moved) == tf::Ideal<K>(rc, tf::minors(tf::PolyMatrix<K>::from_rows(rc, {{poly(rc, "a"), poly(rc, "b"), poly(rc, "c")}, {poly(rc, "b"), poly(rc, "c"), poly(rc, "d")}}), 2)));
}

TEST_CASE("dimension and height") {
  auto r = ring(numbered(4));
  CHECK(ideal(r, "x1, x2").dim() == 2);
  CHECK(ideal(r, "x1*x2, x1*x3").dim() == 3);  // the hyperplane x1 = 0
  CHECK(ideal(r, "x1*x2, x1*x3").height() == 1);
  CHECK(ideal(r, "x1^2, x2^3, x3, x4").dim() == 0);
  CHECK(ideal(r, "1").dim() == -1);
  CHECK(ideal(r, "1").height() == tf::kInfiniteHeight);
  auto ng = ideal(r, "x1*x2 - 1");
  CHECK(ng.dim() == 3);
}

TEST_CASE("radical membership and nonzerodivisors") {
  auto r = ring({"x", "y", "z"});
  auto I = ideal(r, "x^3, y^2 - z^5");
  CHECK(I.radical_contains(poly(r, "x")));
  CHECK(I.radical_contains(poly(r, "x*z + x^2")));
  CHECK_FALSE(I.radical_contains(poly(r, "y")));
  auto J = ideal(r, "x*y, x*z");
  CHECK_FALSE(J.is_nonzerodivisor(poly(r, "y")));
  CHECK(J.is_nonzerodivisor(poly(r, "x + y")));
  CHECK_FALSE(J.is_nonzerodivisor(poly(r, "x*y")));
}

TEST_CASE("order and quadratic part") {
  auto r = ring(numbered(6));
  auto ver = tf::Ideal<K>(r, tf::minors(tf::symmetric_matrix(r, 3), 2));
  CHECK(ver.order() == 2);
  CHECK(tf::mu_mod_cube(ver) == 6);
  auto mixed = ideal(r, "x1^2 + x2^3, x1^2 - x3^3, x4^3");
  CHECK(tf::mu_mod_cube(mixed) == 1);
  CHECK(mixed.order() == 2);
  CHECK_THROWS_AS(tf::mu_mod_cube(ideal(r, "x1 + x2^2")), tf::Error);
}

TEST_CASE("degree parts") {
  auto r = ring({"x", "y", "z"});
  auto gens = polys(r, "x^2 - y*z, x*y");
  tf::Ideal<K> I(r, gens);
  for (int d = 0; d <= 5; ++d) CHECK(I.degree_part_dim(d) == brute_ideal_dim(r, gens, d));
  auto basis = tf::degree_part_basis(I, 3);
  CHECK(static_cast<long long>(basis.size()) == brute_ideal_dim(r, gens, 3));
  for (const auto& b : basis) CHECK(brute_contains(r, gens, b));
}

TEST_CASE("monomial Hilbert series") {
  auto r = ring({"x", "y"});
  std::vector<tf::Monomial> gens{r->monomial(std::vector<int>{2, 0}), r->monomial(std::vector<int>{1, 1})};
  auto k = tf::kpolynomial(gens, r->weights());
  CHECK(k == tf::IntPoly{1, 0, -2, 1});
  auto hs = tf::hilbert_series(gens, r->weights());
  CHECK(hs.dim == 1);
  // standard monomials: 1; x, y; y^2; y^3 ...
  auto e = hs.expand(4);
  CHECK(e == std::vector<long long>{1, 2, 1, 1, 1});
  CHECK(tf::standard_monomial_count(gens, r->weights(), 3) == 1);
  CHECK(tf::minimalize({r->monomial(std::vector<int>{2, 1}), gens[0], gens[1]}).size() == 2);
}

TEST_CASE("weighted Hilbert series of the cusp") {
  auto r = tf::PolyRing<K>::make(K(), {"x", "y"}, {2, 3});
  auto hs = ideal(r, "y^2 - x^3").hilbert_series();
  CHECK(hs.dim == 1);
  // (1 - t^6) / ((1 - t^2)(1 - t^3)): a-invariant 6 - 5
  CHECK(hs.a_invariant() == 1);
  auto e = hs.expand(7);
  // monomials x^a y^b with b < 2 and 2a + 3b = d
  std::vector<long long> expect;
  for (int d = 0; d <= 7; ++d) {
    long long c = 0;
    for (int b = 0; b < 2; ++b) {
      if (d - 3 * b >= 0 && (d - 3 * b) % 2 == 0) ++c;
    }
    expect.push_back(c);
  }
  CHECK(e == expect);
}

TEST_CASE("exact quotient and height in a quotient") {
  auto r = ring({"x", "y", "z"});
  CHECK(tf::exact_quotient(poly(r, "x^2 - y^2"), poly(r, "x + y")) == poly(r, "x - y"));
  CHECK_THROWS_AS(tf::exact_quotient(poly(r, "x^2 + y^2"), poly(r, "x + y")), tf::Error);
  auto I = ideal(r, "x*y - z^2");
  CHECK(tf::height_in_quotient(ideal(r, "x, z"), I) == 1);
  CHECK(tf::height_in_quotient(ideal(r, "x, y, z"), I) == 2);
}

TEST_CASE("Groebner cache: switching it off or on never changes results") {
  auto dir = std::filesystem::temp_directory_path() / "tf-test-cache";
  std::filesystem::remove_all(dir);
  auto r = ring(numbered(6));
  // not computed by any other test case, so the memory layer is cold
  auto gens = tf::minors(tf::symmetric_matrix(r, 3), 2);
  gens.push_back(poly(r, "x1*x6 + x2*x5 - x3*x4 + x4^2"));
  tf::set_gb_cache_enabled(false);
  auto cold = tf::Ideal<K>(r, gens).basis();
  tf::set_gb_cache_enabled(true);
  tf::set_gb_cache_directory(dir.string());
  auto first = tf::Ideal<K>(r, gens).basis();
  tf::thread_work_counters() = {};
  auto warm = tf::Ideal<K>(r, gens).basis();
  CHECK(tf::thread_work_counters().pairs > 0);
  CHECK(cold == first);
  CHECK(cold == warm);
  CHECK(std::filesystem::exists(dir));
  tf::set_gb_cache_directory("");
  std::filesystem::remove_all(dir);
}
