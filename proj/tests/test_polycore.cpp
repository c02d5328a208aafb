#include "doctest.h"
#include "support.hpp"

using namespace tft;
using tf::Polynomial;

TEST_CASE("prime field arithmetic") {
  K k(32003);
  CHECK(k.from_int(-1) == 32002);
  CHECK(k.lift(32002) == -1);
  CHECK(k.from_string("1/2") == k.inv(2));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(1, 32002);
  for (int i = 0; i < 200; ++i) {
    auto a = d(rng);
    CHECK(k.mul(a, k.inv(a)) == 1);
    auto b = d(rng);
    CHECK(k.add(k.sub(a, b), b) == a);
  }
  CHECK_THROWS_AS(k.inv(0), tf::Error);
}

TEST_CASE("rational field arithmetic") {
  Q q;
  auto h = q.from_string("3/6");
  CHECK(h == mpq_class(1, 2));
  CHECK(q.to_string(q.mul(h, q.from_int(-4))) == "-2");
  CHECK(q.is_negative(q.from_string("-7/3")));
}

TEST_CASE("primality") {
  CHECK(tf::is_prime(2));
  CHECK(tf::is_prime(32003));
  CHECK_FALSE(tf::is_prime(1));
  CHECK_FALSE(tf::is_prime(32001));
  CHECK(tf::is_prime(2147483647));
}

TEST_CASE("monomial orders on x*z versus y^2") {
  auto r = ring({"x", "y", "z"});
  auto xz = r->monomial(std::vector<int>{1, 0, 1});
  auto yy = r->monomial(std::vector<int>{0, 2, 0});
  CHECK(r->less(xz, yy));  // degrevlex: the last variable is cheapest
  auto lex = r->with_order(tf::MonomialOrder::lex());
  CHECK(lex->less(yy, xz));
  auto elim = r->with_order(tf::MonomialOrder::elimination(1));
  auto y3 = elim->monomial(std::vector<int>{0, 3, 0});
  auto x1 = elim->monomial(std::vector<int>{1, 0, 0});
  CHECK(elim->less(y3, x1));
  CHECK(tf::MonomialOrder::parse("elim:2") == tf::MonomialOrder::elimination(2));
  CHECK_THROWS_AS(tf::MonomialOrder::parse("nonsense"), tf::Error);
}

TEST_CASE("weighted degree") {
  auto r = tf::PolyRing<K>::make(K(), {"x", "y"}, {2, 3});
  auto f = poly(r, "y^2 - x^3");
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 6);
  CHECK(r->order().kind == tf::OrderKind::WeightedDegRevLex);
}

TEST_CASE("ring construction rejects bad input") {
  CHECK_THROWS_AS(ring({"x", "x"}), tf::Error);
  CHECK_THROWS_AS(tf::PolyRing<K>::make(K(), {"x", "y"}, {1}), tf::Error);
  CHECK_THROWS_AS(tf::PolyRing<K>::make(K(), {"x"}, {0}), tf::Error);
  CHECK_THROWS_AS(ring(numbered(41)), tf::Error);
  CHECK(ring(numbered(40))->nvars() == 40);
}

TEST_CASE("polynomial arithmetic and printing") {
  auto r = ring({"x", "y"});
  auto f = poly(r, "(x + y)^2");
  CHECK(f == poly(r, "x^2 + 2*x*y + y^2"));
  CHECK(f.to_string() == "x^2 + 2*x*y + y^2");
  CHECK((f - f).is_zero());
  CHECK(poly(r, "-x + 3").to_string() == "-x + 3");
  CHECK(poly(r, "x*y - y*x").is_zero());
  CHECK(poly(r, "2*x^3*y").derivative("x") == poly(r, "6*x^2*y"));
  CHECK_THROWS_AS(poly(r, "z"), tf::ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = ring(numbered(4));
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(r, rng, 3, 4, false);
    auto b = random_poly(r, rng, 2, 3, false);
    auto c = random_poly(r, rng, 2, 3, false);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    for (int v = 0; v < 4; ++v) {
      // Leibniz rule.
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
  }
}

TEST_CASE("evaluation and substitution agree") {
  auto r = ring({"x", "y"});
  auto s = ring({"u"});
  auto f = poly(r, "x^2*y - 3*y + 1");
  auto g = f.substitute(s, {poly(s, "u^2"), poly(s, "u + 1")});
  CHECK(g == poly(s, "u^5 + u^4 - 3*u - 2"));
  K k;
  std::vector<K::Element> pt{k.from_int(2), k.from_int(5)};
  CHECK(f.evaluate(pt) == k.from_int(6));
}

TEST_CASE("parser over the rationals") {
  auto r = ring<Q>({"x", "y"});
  auto f = poly(r, "3/2*x - 1/4*y");
  CHECK(f.to_string() == "3/2*x - 1/4*y");
  try {
    poly(r, "x + * y");
    FAIL("expected a parse error");
  } catch (const tf::ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("exponent overflow is reported") {
  auto r = ring({"x"});
  auto f = poly(r, "x^200");
  CHECK_THROWS_AS(f * f, tf::ExponentOverflow);
}

TEST_CASE("determinant matches the permutation expansion") {
  auto r = ring(numbered(9));
  auto m = tf::generic_matrix(r, 3, 3);
  // Leibniz formula written out by hand.
  auto e = [&](int i, int j) { return m.at(i, j); };
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  Poly leibniz(r);
  for (std::size_t p = 0; p < perms.size(); ++p) {
    auto term = e(0, perms[p][0]) * e(1, perms[p][1]) * e(2, perms[p][2]);
    leibniz = p < 3 ? leibniz + term : leibniz - term;
  }
  CHECK(tf::determinant(m) == leibniz);
}

TEST_CASE("minors of the standard matrices") {
  auto r = ring(numbered(6));
  CHECK(tf::minors(tf::generic_matrix(r, 2, 2), 2) == std::vector<Poly>{poly(r, "x1*x4 - x2*x3")});
  CHECK(tf::minors(tf::generic_matrix(r, 2, 3), 2).size() == 3);
  auto s = tf::symmetric_matrix(r, 3);
  CHECK(s.is_symmetric());
  CHECK(s.at(0, 1) == poly(r, "x2"));
  CHECK(s.at(2, 2) == poly(r, "x6"));
  CHECK(tf::minors(s, 2).size() == 6);
  CHECK(tf::minors(s, 3).size() == 1);
  auto c = tf::catalecticant_matrix(r, 2);
  CHECK(c.at(1, 0) == poly(r, "x3"));
  CHECK(c.at(1, 3) == poly(r, "x6"));
  CHECK_THROWS_AS(tf::catalecticant_matrix(r, 3), tf::Error);
  CHECK_THROWS_AS(tf::minors(s, 4), tf::Error);
}

TEST_CASE("matrix algebra") {
  auto r = ring({"a", "b"});
  auto m = tf::PolyMatrix<K>::from_rows(r, {{poly(r, "a"), poly(r, "b")}});
  auto n = tf::PolyMatrix<K>::from_rows(r, {{poly(r, "b")}, {poly(r, "-a")}});
  CHECK((m * n).is_zero());
  CHECK(m.transpose().rows() == 2);
  auto col = m.transpose().column(0);
  auto back = tf::PolyMatrix<K>::from_columns(r, 2, {col});
  CHECK(back.at(1, 0) == poly(r, "b"));
}
