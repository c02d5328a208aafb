#include "doctest.h"
#include "support.hpp"

using namespace tft;

namespace {

tf::PresentedAlgebra<K> quotient(const Ring& r, const std::string& gens) {
  return tf::PresentedAlgebra<K>::quotient(ideal(r, gens));
}

void check_exact_shape(const tf::FreeResolution<K>& res, const tf::Ideal<K>& I) {
  CHECK(res.is_complex());
  CHECK(res.entries_in_maximal_ideal());
  auto k = I.hilbert_series().kpoly;
  auto alt = res.alternating_sum();
  tf::trim(k);
  tf::trim(alt);
  CHECK(alt == k);
}

}  // namespace

TEST_CASE("Koszul complex of the variables") {
  auto r = ring(numbered(4));
  auto I = ideal(r, "x1, x2, x3, x4");
  auto res = tf::resolve(I);
  check_exact_shape(res, I);
  CHECK(res.length() == 4);
  auto b = res.betti();
  for (int i = 0; i <= 4; ++i) {
    CHECK(b.total(i) == binomial(4, i));
    CHECK(b.at(i, i) == binomial(4, i));
  }
}

TEST_CASE("twisted cubic") {
  auto r = ring({"a", "b", "c", "d"});
  auto I = ideal(r, "a*c - b^2, a*d - b*c, b*d - c^2");
  auto res = tf::resolve(I);
  check_exact_shape(res, I);
  auto b = res.betti();
  // Hilbert-Burch: three quadrics, two linear syzygies.
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 2) == 3);
  CHECK(b.at(2, 3) == 2);
  CHECK(res.length() == 2);
  auto pd = tf::projdim_depth(tf::PresentedAlgebra<K>::quotient(I));
  CHECK(pd.pd == 2);
  CHECK(pd.depth == 2);
  auto a = tf::PresentedAlgebra<K>::quotient(I);
  CHECK(tf::is_cohen_macaulay(a));
  CHECK_FALSE(tf::is_gorenstein(a));
}

TEST_CASE("embedded point") {
  auto r = ring({"x", "y"});
  auto a = quotient(r, "x^2, x*y");
  auto pd = tf::projdim_depth(a);
  CHECK(pd.pd == 2);
  CHECK(pd.depth == 0);
  CHECK_FALSE(tf::is_cohen_macaulay(a, tf::CmMethod::Resolution));
  CHECK_FALSE(tf::is_cohen_macaulay(a, tf::CmMethod::Reduction));
  CHECK(tf::depth_probe(a.ideal) == 0);
}

TEST_CASE("Cohen-Macaulay methods agree") {
  auto r = ring(numbered(4));
  const char* cases[] = {
      "x1*x2, x3*x4",          "x1*x2, x1*x3",      "x1^2, x1*x2, x2^2",   "x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2",
      "x1*x3, x1*x4, x2*x3, x2*x4", "x1^3 + x2^3 + x3^3", "x1*x2*x3, x4^2",
  };
  for (const char* c : cases) {
    CAPTURE(c);
    auto a = quotient(r, c);
    bool red = tf::is_cohen_macaulay(a, tf::CmMethod::Reduction);
    bool res = tf::is_cohen_macaulay(a, tf::CmMethod::Resolution);
    CHECK(red == res);
    CHECK(tf::is_gorenstein(a, tf::CmMethod::Reduction) == tf::is_gorenstein(a, tf::CmMethod::Resolution));
    auto pd = tf::projdim_depth(a);
    CHECK(res == (pd.depth == a.dim()));
    CHECK(tf::depth_probe(a.ideal) == pd.depth);
  }
  // two planes meeting in a point are not CM
  CHECK_FALSE(tf::is_cohen_macaulay(quotient(r, "x1*x3, x1*x4, x2*x3, x2*x4")));
}

TEST_CASE("Gorenstein and Calabi-Yau type") {
  auto r = ring({"x", "y", "z"});
  CHECK(tf::is_gorenstein(quotient(r, "x^2, y^3")));
  CHECK(tf::cy_type_check(quotient(r, "x^3 + y^3 + z^3")));
  CHECK_FALSE(tf::cy_type_check(quotient(r, "x^4 + y^4 + z^4")));
  CHECK_FALSE(tf::cy_type_check(quotient(r, "x^2 + y^2 + z^2")));
  auto hs = ideal(r, "x^3 + y^3 + z^3").hilbert_series();
  CHECK(hs.a_invariant() == 0);
  CHECK(hs.degree() == 3);
}

TEST_CASE("module resolutions") {
  auto r = ring({"x", "y", "z"});
  auto a = std::make_shared<tf::PresentedAlgebra<K>>(quotient(r, "x*y - z^2"));
  auto om = tf::omega_presentation(*a);
  auto res = tf::resolve(om);
  CHECK(res.is_complex());
  CHECK(res.entries_in_maximal_ideal());
  auto pd = tf::projdim_depth(om);
  CHECK(pd.pd + pd.depth == 3);  // Auslander-Buchsbaum over k[x,y,z]
  CHECK(tf::module_dimension(r, om.relations_over_ring(), om.generators(), om.row_degrees) == 2);
}

TEST_CASE("first Koszul homology") {
  auto r = ring({"x", "y", "z"});
  CHECK(tf::koszul_h1(ideal(r, "x, y^2, z^3 + x*y")).is_zero());
  CHECK_FALSE(tf::koszul_h1(ideal(r, "x*y, x*z")).is_zero());
  CHECK_FALSE(tf::koszul_h1(ideal(r, "x, x*y")).is_zero());
}

TEST_CASE("Betti table printing") {
  auto r = ring({"x", "y"});
  auto res = tf::resolve(ideal(r, "x, y"));
  auto s = res.betti().to_string();
  CHECK(s.find("total") != std::string::npos);
  CHECK_THROWS_AS(tf::resolve(ideal(r, "1")), tf::Error);
  CHECK_THROWS_AS(tf::resolve(ideal(r, "x - 1")), tf::NotGraded);
}
