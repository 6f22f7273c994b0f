#include <doctest.h>

#include <map>
#include <set>

#include "qpi/partial_maps.hpp"

using namespace qpi;

namespace {

using CycMatrix = std::vector<std::vector<CycInt>>;

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b, long x) {
  const size_t n = a.size();
  CycMatrix c(n, std::vector<CycInt>(n, CycInt(x)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

TEST_CASE("count matches the closed formula values") {
  std::vector<long> expected{1, 2, 7, 34, 209};
  for (int N = 0; N <= 4; ++N) CHECK(count(N, 1) == expected[N]);
  CHECK(count(2, 2) == 17);               // 1 + 2*4 + 2*4
  CHECK(count(2, 3) == 1 + 3 * 4 + 9 * 2);
}

TEST_CASE("count matches exhaustive enumeration") {
  for (int N = 0; N <= 6; ++N)
    CHECK(Int(enumerate(N, 1).size()) == count(N, 1));
  for (int N = 0; N <= 4; ++N)
    for (long x : {2L, 3L})
      CHECK(Int(enumerate(N, x).size()) == count(N, x));
}

TEST_CASE("enumeration order is frozen") {
  auto all = enumerate(2, 1);
  std::vector<std::vector<int>> expected{
      {0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 1}};
  REQUIRE(all.size() == expected.size());
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].base.map == expected[i]);
}

TEST_CASE("rank slices have cardinality k! C(N,k)^2 x^k") {
  for (int N = 2; N <= 4; ++N)
    for (long x : {1L, 2L})
      for (int k = 0; k <= N; ++k) {
        Int expect = factorial(k) * binomial(N, k) * binomial(N, k) *
                     ipow(Int(x), k);
        CHECK(Int(enumerate(N, x, k).size()) == expect);
      }
}

TEST_CASE("inverse and identity behave") {
  auto f = PartialPermutation(4, {3, 0, 1, 0});
  auto inv = f.inverse();
  CHECK(inv.map == std::vector<int>{3, 0, 1, 0});
  CHECK(compose(f, inv).rank() == 2);
  CHECK(compose(PartialPermutation::identity(4), f) == f);
  CHECK(compose(f, PartialPermutation::identity(4)) == f);
  CHECK(compose(f, PartialPermutation::null(4)) == PartialPermutation::null(4));
  CHECK_THROWS_AS(PartialPermutation(3, {1, 1, 0}), parameter_error);
}

TEST_CASE("composition agrees with the matrix-product oracle") {
  // exhaustive over the signed N=2 semigroups for x = 1, 2, 3
  for (long x : {1L, 2L, 3L}) {
    auto all = enumerate(2, x);
    for (const auto& f : all)
      for (const auto& g : all) {
        auto prod = matmul(to_matrix(f), to_matrix(g), x);
        CHECK(to_matrix(compose_signed(f, g)) == prod);
      }
  }
  // spot checks at N = 3, x = 2
  auto all3 = enumerate(3, 2);
  for (size_t i = 0; i < all3.size(); i += 17)
    for (size_t j = 0; j < all3.size(); j += 23) {
      auto prod = matmul(to_matrix(all3[i]), to_matrix(all3[j]), 2);
      CHECK(to_matrix(compose_signed(all3[i], all3[j])) == prod);
    }
}

TEST_CASE("composition is associative on all of the N=2 signed semigroup") {
  auto all = enumerate(2, 2);
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all)
        CHECK(compose_signed(compose_signed(f, g), h) ==
              compose_signed(f, compose_signed(g, h)));
}

TEST_CASE("S_2N embedding is a bijection preserving the character") {
  for (int N = 2; N <= 3; ++N) {
    std::set<std::vector<int>> images;
    for (const auto& sf : enumerate(N, 1)) {
      const auto& f = sf.base;
      auto sigma = embed_s2n(f);
      REQUIRE(sigma.size() == static_cast<size_t>(2 * N));
      // must be a permutation of {1..2N}
      std::set<int> seen(sigma.begin(), sigma.end());
      CHECK(seen.size() == sigma.size());
      CHECK(*seen.begin() == 1);
      CHECK(*seen.rbegin() == 2 * N);
      images.insert(sigma);
      // restriction to the domain
      for (int i : f.domain()) CHECK(sigma[static_cast<size_t>(i - 1)] == f(i));
      // chi_l is preserved on the left half
      for (int l = 0; l <= N; ++l) {
        int fixed = 0;
        for (int i = 1; i <= l; ++i)
          if (sigma[static_cast<size_t>(i - 1)] == i) ++fixed;
        CHECK(fixed == chi(f, l));
      }
      // right-half fixed points count the rank
      int right = 0;
      for (int i = N + 1; i <= 2 * N; ++i)
        if (sigma[static_cast<size_t>(i - 1)] == i) ++right;
      CHECK(right == kappa(f));
    }
    CHECK(Int(images.size()) == count(N, 1));  // injective
  }
}

TEST_CASE("chi sums signed fixed points") {
  // f = (1 -> 1 with sign zeta, 3 -> 3 with sign zeta^2) inside H_3^3
  SignedPartialPermutation f(PartialPermutation(3, {1, 0, 3}), 3,
                             {Rational(1, 3), Rational(0), Rational(2, 3)});
  CHECK(chi(f, 3) == CycInt::root_power(3, 1) + CycInt::root_power(3, 2));
  CHECK(chi(f, 1) == CycInt::root_power(3, 1));
  CHECK(chi(f, 0).is_zero());
  CHECK(chi(f.base, 3) == 2);
}

TEST_CASE("signed invariants are validated") {
  CHECK_THROWS_AS(SignedPartialPermutation(PartialPermutation(2, {1, 0}), 2,
                                           {Rational(1, 3), Rational(0)}),
                  parameter_error);
  CHECK_THROWS_AS(enumerate(2, kInfiniteOrder), guard_error);
}

TEST_CASE("single-point composition example") {
  PartialPermutation g(3, {2, 0, 0});  // 1 -> 2
  PartialPermutation f(3, {0, 3, 0});  // 2 -> 3
  auto fg = compose(f, g);
  CHECK(fg.map == std::vector<int>{3, 0, 0});  // 1 -> 3
  CHECK(compose(g, f).rank() == 0);
}

TEST_CASE("signed composition multiplies roots of unity") {
  // f = (1 -> 2, zeta), g = (2 -> 1, zeta^2) in the x=4 family
  SignedPartialPermutation f(PartialPermutation(2, {2, 0}), 4,
                             {Rational(1, 4), Rational(0)});
  SignedPartialPermutation g(PartialPermutation(2, {0, 1}), 4,
                             {Rational(0), Rational(2, 4)});
  auto fg = compose_signed(f, g);
  CHECK(fg.base.map == std::vector<int>{0, 2});  // 2 -> 2
  CHECK(fg.residue_at(2) == 3);                  // zeta^3
  // trivial-sign case over x = 2: (-1)(-1) = +1
  SignedPartialPermutation a(PartialPermutation(1, {1}), 2, {Rational(1, 2)});
  CHECK(compose_signed(a, a).residue_at(1) == 0);
}

TEST_CASE("sub-inverse: f composed with its inverse is id on ran(f)") {
  for (const auto& sf : enumerate(3, 1)) {
    const auto& f = sf.base;
    auto p = compose(f, f.inverse());
    for (int i = 1; i <= 3; ++i) {
      bool in_range = false;
      for (int r : f.range()) in_range = in_range || r == i;
      CHECK(p.map[static_cast<size_t>(i - 1)] == (in_range ? i : 0));
    }
  }
}

TEST_CASE("embedding corner cases") {
  CHECK(embed_s2n(PartialPermutation::identity(3)) ==
        std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(embed_s2n(PartialPermutation::null(1)) == std::vector<int>{2, 1});
}
