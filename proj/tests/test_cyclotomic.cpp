#include <doctest.h>

#include "qpi/cyclotomic.hpp"

using namespace qpi;

TEST_CASE("cyclotomic polynomials match known tables") {
  auto coeffs = [](long x) {
    std::vector<long> v;
    for (const auto& c : cyclotomic_polynomial(x))
      v.push_back(static_cast<long>(c));
    return v;
  };
  CHECK(coeffs(1) == std::vector<long>{-1, 1});
  CHECK(coeffs(2) == std::vector<long>{1, 1});
  CHECK(coeffs(3) == std::vector<long>{1, 1, 1});
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta_2 reduces to -1") {
  CHECK(CycInt::root_power(2, 1) == CycInt::from_integer(2, -1));
  CHECK((CycInt::root_power(2, 1) + CycInt::from_integer(2, 1)).is_zero());
}

TEST_CASE("root powers satisfy the defining relations") {
  for (long x : {1L, 2L, 3L, 4L, 5L, 6L}) {
    CHECK(CycInt::root_power(x, x) == CycInt::from_integer(x, 1));
    // sum of all x-th roots vanishes for x > 1
    if (x > 1) {
      CycInt s(x);
      for (long k = 0; k < x; ++k) s += CycInt::root_power(x, k);
      CHECK(s.is_zero());
    }
    // zeta^a * zeta^b = zeta^{a+b}
    for (long a = 0; a < x; ++a)
      for (long b = 0; b < x; ++b)
        CHECK(CycInt::root_power(x, a) * CycInt::root_power(x, b) ==
              CycInt::root_power(x, a + b));
  }
}

TEST_CASE("conjugation inverts roots and fixes integers") {
  for (long x : {2L, 3L, 4L, 6L}) {
    for (long k = 0; k < x; ++k)
      CHECK(CycInt::root_power(x, k).conj() == CycInt::root_power(x, -k));
    CHECK(CycInt::from_integer(x, 7).conj() == CycInt::from_integer(x, 7));
  }
}

TEST_CASE("complex embedding is consistent with arithmetic") {
  auto z = CycInt::root_power(3, 1) + CycInt::from_integer(3, 2);
  auto w = z * z.conj();  // |z|^2 = (2+cos)^2 + sin^2 = 4 + 4cos + 1 = 3
  CHECK(w == CycInt::from_integer(3, 3));
  CHECK(std::abs(z.to_complex() * std::conj(z.to_complex()) - 3.0) < 1e-12);
}

TEST_CASE("rational coefficients work through the same reduction") {
  auto half = CycRational::from_integer(4, Rational(1, 2));
  auto z = half * CycRational::root_power(4, 1);  // i/2
  CHECK((z + z) * (z + z) == CycRational::from_integer(4, -1));
}
