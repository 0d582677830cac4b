#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ck/rational.hpp"
#include "ck/sampler.hpp"

using namespace ck;

TEST_CASE("rref, rank and kernel") {
  RatMat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const RatMat ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // Every kernel row annihilates every matrix row.
  for (const RatVec& row : m) {
    Rat dot = 0;
    for (size_t j = 0; j < row.size(); ++j) dot += row[j] * ker[0][j];
    CHECK(dot == 0);
  }
  CHECK(rank(RatMat{{0, 0}, {0, 0}}) == 0);
  CHECK(kernel_basis(RatMat{{1, 0}, {0, 1}}).empty());
  CHECK(kernel_basis(RatMat{{0, 0}}).size() == 2);

  RatMat r{{2, 4}, {1, 3}};
  CHECK(rref(r) == 2);
  CHECK(r == RatMat{{1, 0}, {0, 1}});
}

TEST_CASE("solve") {
  const RatMat m{{1, 1}, {1, -1}};
  const auto x = solve(m, {2, 0});
  REQUIRE(x.has_value());
  CHECK(*x == RatVec{1, 1});
  // Inconsistent system.
  CHECK_FALSE(solve(RatMat{{1, 1}, {2, 2}}, {1, 3}).has_value());
  // Underdetermined: free variables pinned to zero, still a solution.
  const auto y = solve(RatMat{{1, 1, 1}}, {5});
  REQUIRE(y.has_value());
  Rat dot = 0;
  for (const Rat& v : *y) dot += v;
  CHECK(dot == 5);
  // Exactness: a Hilbert-like system solved with no rounding.
  RatMat h(4, RatVec(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[i][j] = Rat(1) / (i + j + 1);
  RatVec b(4, 1);
  const auto z = solve(h, b);
  REQUIRE(z.has_value());
  for (int i = 0; i < 4; ++i) {
    Rat acc = 0;
    for (int j = 0; j < 4; ++j) acc += h[i][j] * (*z)[j];
    CHECK(acc == 1);
  }
}

TEST_CASE("determinant") {
  CHECK(det(RatMat{{1, 2}, {3, 4}}) == -2);
  CHECK(det(RatMat{{2, 0}, {0, Rat(1, 2)}}) == 1);
  CHECK(det(RatMat{{1, 2}, {2, 4}}) == 0);
  CHECK(det(RatMat{{1}}) == 1);
}

TEST_CASE("integer extraction and printing") {
  CHECK(to_int(Rat(-7)) == -7);
  CHECK_THROWS_AS(to_int(Rat(1, 2)), std::logic_error);
  CHECK(to_string(Rat(1, 2)) == "1/2");
  CHECK(to_string(Rat(-3)) == "-3");
  CHECK(is_zero(RatVec{0, 0}));
  CHECK_FALSE(is_zero(RatVec{0, Rat(1, 3)}));
}

TEST_CASE("integer matrix helpers") {
  const IntMat id = int_identity(2);
  const IntMat a{{1, 2}, {3, 4}};
  CHECK(int_mul(a, id) == a);
  CHECK(int_mul(id, a) == a);
  CHECK(int_mul(a, IntVec{1, 1}) == IntVec{3, 7});
}

TEST_CASE("sampler is splitmix64 with the reference stream") {
  Sampler s(1234567);
  CHECK(s.next() == 6457827717110365317ull);
  CHECK(s.next() == 3203168211198807973ull);
  CHECK(s.next() == 9817491932198370423ull);

  Sampler a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Sampler c(7);
  for (int i = 0; i < 200; ++i) {
    const int v = c.nonzero_coeff();
    CHECK(v != 0);
    CHECK(v >= -3);
    CHECK(v <= 3);
    const int r = c.in_range(-2, 5);
    CHECK(r >= -2);
    CHECK(r <= 5);
    CHECK(c.below(10) < 10);
  }

  CHECK(derive_seed(0xC05CADE, "coadjoint", 0) == 15360329463302844817ull);
  CHECK(derive_seed(0xC05CADE, "coadjoint", 0) != derive_seed(0xC05CADE, "coadjoint", 1));
  CHECK(derive_seed(0xC05CADE, "coadjoint", 0) != derive_seed(0xC05CADE, "invariants", 0));
}
