#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "preop/field.hpp"
#include "preop/linalg.hpp"

using namespace preop;

namespace {

const Rational::Config Q;

ExactMatrix<Rational> from_rows(std::vector<std::vector<long long>> rows) {
  ExactMatrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size(), Q);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Q.from_int(rows[r][c]);
  return m;
}

std::vector<Rational> vec(std::vector<long long> xs) {
  std::vector<Rational> v;
  for (long long x : xs) v.push_back(Q.from_int(x));
  return v;
}

ExactMatrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix<Rational> m(rows, cols, Q);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Q.from_int(static_cast<long long>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("rref on the stock examples") {
  auto id3 = ExactMatrix<Rational>::identity(3, Q);
  CHECK(rref(id3).rank == 3);

  ExactMatrix<Rational> zero(3, 4, Q);
  CHECK(rref(zero).rank == 0);

  auto dep = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(dep.rank == 1);
  REQUIRE(dep.pivot_columns == std::vector<std::size_t>{0});
  CHECK(dep.matrix.at(0, 0) == Q.one());
  CHECK(dep.matrix.at(0, 1) == Q.from_int(2));
  CHECK(dep.matrix.at(1, 0).is_zero());
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(ExactMatrix<Rational>::identity(3, Q)).dim() == 0);
  CHECK(kernel_basis(ExactMatrix<Rational>(2, 4, Q)).dim() == 4);

  auto k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == vec({1, -1}));
}

TEST_CASE("image bases") {
  auto full = image_basis(ExactMatrix<Rational>::identity(2, Q));
  CHECK(full.dim() == 2);

  auto line = image_basis(from_rows({{1}, {2}}));
  REQUIRE(line.dim() == 1);
  CHECK(line.basis()[0] == vec({1, 2}));
}

TEST_CASE("membership and coset reduction") {
  auto s = Subspace<Rational>::span_of({vec({1, 0, 2}), vec({0, 1, 3})}, 3, Q);

  SECTION("reduce to zero iff contained") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      // random combination of basis vectors must reduce to zero
      auto a = Q.from_int(static_cast<long long>(rng() % 9) - 4);
      auto b = Q.from_int(static_cast<long long>(rng() % 9) - 4);
      std::vector<Rational> v(3, Q.zero());
      for (int j = 0; j < 3; ++j) v[j] = a * s.basis()[0][j] + b * s.basis()[1][j];
      CHECK(s.contains(v));
      auto r = s.coset_reduce(v);
      for (const auto& x : r) CHECK(x.is_zero());
    }
  }

  SECTION("outside vectors keep a nonzero residue") {
    auto v = vec({0, 0, 1});
    CHECK_FALSE(s.contains(v));
    CHECK(s.coset_reduce(v) == vec({0, 0, 1}));
  }

  SECTION("zero subspace reduces nothing") {
    auto z = Subspace<Rational>::zero(3, Q);
    auto v = vec({4, 5, 6});
    CHECK(z.coset_reduce(v) == v);
    CHECK_FALSE(z.contains(v));
  }

  SECTION("dimension mismatch is rejected") {
    auto v = vec({1, 2});
    CHECK_THROWS_AS(s.contains(v), dimension_error);
  }
}

TEST_CASE("quotient bases") {
  SECTION("ker = im gives the zero quotient") {
    auto m = from_rows({{1, 0}, {0, 1}});
    auto ker = kernel_basis(ExactMatrix<Rational>(1, 2, Q));  // everything
    auto im = image_basis(m);                                 // everything
    CHECK(quotient_basis(ker, im).empty());
  }

  SECTION("im = 0 returns the kernel basis") {
    auto ker = Subspace<Rational>::span_of({vec({1, 0, 2}), vec({0, 1, 3})}, 3, Q);
    auto im = Subspace<Rational>::zero(3, Q);
    auto reps = quotient_basis(ker, im);
    REQUIRE(reps.size() == 2);
    CHECK(reps == ker.basis());
  }

  SECTION("3-dim kernel over 1-dim image") {
    auto ker = Subspace<Rational>::span_of({vec({1, 0, 0, 0}), vec({0, 1, 0, 1}), vec({0, 0, 1, 2})},
                                           4, Q);
    auto im = Subspace<Rational>::span_of({vec({1, 1, 0, 1})}, 4, Q);  // inside ker
    REQUIRE(ker.contains(im.basis()[0]));
    auto reps = quotient_basis(ker, im);
    REQUIRE(reps.size() == 2);
    for (const auto& r : reps) {
      CHECK(ker.contains(r));
      CHECK_FALSE(im.contains(r));
      CHECK(im.coset_reduce(r) == r);  // canonical under the image
    }
  }

  SECTION("inclusion violation carries a witness") {
    auto ker = Subspace<Rational>::span_of({vec({1, 0})}, 2, Q);
    auto im = Subspace<Rational>::span_of({vec({0, 1})}, 2, Q);
    CHECK_THROWS_AS(quotient_basis(ker, im), inclusion_error);
    try {
      quotient_basis(ker, im);
    } catch (const inclusion_error& e) {
      CHECK(std::string(e.what()).find("0,1") != std::string::npos);
    }
  }
}

TEST_CASE("solve") {
  auto m = from_rows({{1, 2}, {3, 4}});
  auto x = solve(m, std::span<const Rational>(vec({5, 6})));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == vec({5, 6}));

  auto inconsistent = solve(from_rows({{1, 1}, {1, 1}}), std::span<const Rational>(vec({0, 1})));
  CHECK_FALSE(inconsistent.has_value());
}

TEST_CASE("elimination properties on seeded random matrices") {
  std::mt19937_64 rng(20240902);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    auto m = random_matrix(rng, rows, cols);

    auto red = rref(m);
    auto ker = kernel_basis(m);

    // rank-nullity
    CHECK(red.rank + ker.dim() == cols);

    // m * k = 0 for every kernel basis vector
    for (const auto& k : ker.basis()) {
      auto mk = m.apply(k);
      for (const auto& x : mk) CHECK(x.is_zero());
    }

    // idempotence
    auto twice = rref(red.matrix);
    CHECK(twice.matrix == red.matrix);
    CHECK(twice.rank == red.rank);

    // pivots strictly increasing
    for (std::size_t i = 1; i < red.pivot_columns.size(); ++i)
      CHECK(red.pivot_columns[i - 1] < red.pivot_columns[i]);
  }
}

TEST_CASE("rational and prime-field ranks agree for small integer matrices") {
  Fp::Config fp(10007);
  std::mt19937_64 rng(20240903);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    ExactMatrix<Rational> mq(rows, cols, Q);
    ExactMatrix<Fp> mp(rows, cols, fp);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        long long e = static_cast<long long>(rng() % 11) - 5;
        mq.at(r, c) = Q.from_int(e);
        mp.at(r, c) = fp.from_int(e);
      }
    CHECK(rref(mq).rank == rref(mp).rank);
  }
}
