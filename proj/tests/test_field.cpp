#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qextremal/errors.hpp"
#include "qextremal/field.hpp"

#include <vector>

using namespace qx;

namespace {

// Independent polynomial oracle: coefficient vectors, schoolbook product and
// long division by the modulus.
std::vector<int> digits(int code, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int oracle_mul(int a, int b, int p, const std::vector<int> &mod) {
  const int e = static_cast<int>(mod.size()) - 1;
  const auto da = digits(a, p, e);
  const auto db = digits(b, p, e);
  std::vector<int> prod(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      prod[i + j] += da[i] * db[j];
  for (int deg = 2 * e - 1; deg >= e; --deg) {
    const int c = ((prod[deg] % p) + p) % p;
    prod[deg] = 0;
    for (int j = 0; j < e; ++j)
      prod[deg - e + j] -= c * mod[j];
  }
  int code = 0;
  for (int i = e - 1; i >= 0; --i)
    code = code * p + ((prod[i] % p) + p) % p;
  return code;
}

bool has_root(const std::vector<int> &poly, int p) {
  for (int x = 0; x < p; ++x) {
    long long v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
      v = (v * x + poly[i]) % p;
    if (v == 0)
      return true;
  }
  return false;
}

/// For degree 2 or 3, irreducible iff rootless: first such monic polynomial
/// in encoding order.
std::vector<int> oracle_irreducible(int p, int e) {
  int count = 1;
  for (int i = 0; i < e; ++i)
    count *= p;
  for (int code = 0; code < count; ++code) {
    auto poly = digits(code, p, e);
    poly.push_back(1);
    if (!has_root(poly, p))
      return poly;
  }
  return {};
}

} // namespace

TEST_CASE("make_field factors q") {
  const auto f5 = make_field(5);
  CHECK(f5->p() == 5);
  CHECK(f5->e() == 1);
  CHECK(f5->modulus().empty());

  const auto f9 = make_field(9);
  CHECK(f9->p() == 3);
  CHECK(f9->e() == 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1}); // x^2 + 1

  CHECK_THROWS_AS(make_field(6), NotPrimePower);
  CHECK_THROWS_AS(make_field(1), NotPrimePower);
  CHECK_THROWS_AS(make_field(12), NotPrimePower);
}

TEST_CASE("field order cap is configurable") {
  CHECK_THROWS_AS(make_field(64), UnsupportedField);
  const auto f64 = make_field(64, 64);
  CHECK(f64->q() == 64);
  CHECK_THROWS_AS(make_field(512, 1024), UnsupportedField);
}

TEST_CASE("make_field is deterministic") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32})
    CHECK(*make_field(q) == *make_field(q));
}

TEST_CASE("find_irreducible matches the rootless-scan oracle") {
  CHECK(find_irreducible(2, 2) == std::vector<int>{1, 1, 1});
  CHECK(find_irreducible(3, 2) == std::vector<int>{1, 0, 1});
  CHECK(find_irreducible(2, 3) == std::vector<int>{1, 1, 0, 1});
  for (int p : {2, 3, 5, 7})
    for (int e : {2, 3})
      CHECK(find_irreducible(p, e) == oracle_irreducible(p, e));
  CHECK(is_irreducible(2, find_irreducible(2, 4)));
  CHECK(is_irreducible(2, find_irreducible(2, 5)));
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2 has no roots yet is reducible.
  CHECK_FALSE(is_irreducible(2, {1, 0, 1, 0, 1}));
}

TEST_CASE("spot values of field arithmetic") {
  const auto f3 = make_field(3);
  CHECK(f3->inv(2) == 2);

  const auto f4 = make_field(4);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);
  CHECK(oracle_mul(2, 2, 2, f4->modulus()) == 3);
  CHECK(f4->add(2, 3) == 1);

  const auto f9 = make_field(9);
  CHECK(f9->mul(3, 3) == 2);
  CHECK(oracle_mul(3, 3, 3, f9->modulus()) == 2);

  CHECK_THROWS_AS(f9->inv(0), DivisionByZero);
}

TEST_CASE("multiplication agrees with the polynomial oracle") {
  for (int q : {4, 8, 9, 16, 25, 27, 32}) {
    const auto f = make_field(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        REQUIRE(f->mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
                oracle_mul(a, b, f->p(), f->modulus()));
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const auto fr = make_field(q);
    const FieldSpec &f = *fr;
    for (int ai = 0; ai < q; ++ai) {
      const auto a = static_cast<Elem>(ai);
      REQUIRE(f.add(a, 0) == a);
      REQUIRE(f.mul(a, 1) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (a != 0)
        REQUIRE(f.mul(a, f.inv(a)) == 1);
      for (int bi = 0; bi < q; ++bi) {
        const auto b = static_cast<Elem>(bi);
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.sub(f.add(a, b), b) == a);
        for (int ci = 0; ci < q; ++ci) {
          const auto c = static_cast<Elem>(ci);
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group has order q - 1") {
  for (int q : {3, 4, 5, 8, 9, 16, 32}) {
    const auto f = make_field(q);
    for (int a = 1; a < q; ++a)
      CHECK(f->pow(static_cast<Elem>(a), static_cast<unsigned long long>(q - 1)) == 1);
  }
}
