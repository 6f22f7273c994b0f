#include <doctest.h>

#include "qpi/measures.hpp"

using namespace qpi;

TEST_CASE("mu_formula reproduces a hand computation") {
  auto m = mu_formula(4, 2, 3);
  CHECK(m.weight_at_integer(0) == Rational(2, 3));
  CHECK(m.weight_at_integer(1) == Rational(7, 24));
  CHECK(m.weight_at_integer(2) == Rational(1, 24));
  CHECK(m.weight_at_integer(3) == 0);
  CHECK(m.is_probability());
}

TEST_CASE("mu_formula equals brute-force enumeration (small N)") {
  for (int N = 0; N <= 4; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l)
        CHECK(mu_formula(N, k, l) == mu_bruteforce(N, k, l, 1));
}

TEST_CASE("mu is symmetric in k and l") {
  for (int N = 2; N <= 5; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l < k; ++l)
        CHECK(mu_formula(N, k, l) == mu_formula(N, l, k));
}

TEST_CASE("sign mixing predicts the x=2 law") {
  for (int N = 1; N <= 3; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l)
        CHECK(sign_mixing(N, k, l) == mu_bruteforce(N, k, l, 2));
}

TEST_CASE("brute force guard") {
  CHECK_THROWS_AS(mu_bruteforce(12, 6, 6, 3), guard_error);
}

TEST_CASE("convolution and moments of delta measures") {
  RationalMeasure a(1), b(1);
  a.add_integer(1, Rational(1, 2));
  a.add_integer(0, Rational(1, 2));
  b.add_integer(2, 1);
  auto c = convolve(a, b);  // 1/2 at 2, 1/2 at 3
  CHECK(c.weight_at_integer(2) == Rational(1, 2));
  CHECK(c.weight_at_integer(3) == Rational(1, 2));
  CHECK(c.moment(1) == Rational(5, 2));
  CHECK(c.moment(2) == Rational(13, 2));
}

TEST_CASE("star moments on a signed measure") {
  RationalMeasure m(4);
  m.add(CycInt::root_power(4, 1), Rational(1, 2));   // i
  m.add(CycInt::root_power(4, 3), Rational(1, 2));   // -i
  // E[a a*] = 1, E[a a] = -1, E[a] = 0
  CHECK(m.star_moment({1, -1}) == to_cyc_rational(CycInt::from_integer(4, 1)));
  CHECK(m.star_moment({1, 1}) == to_cyc_rational(CycInt::from_integer(4, -1)));
  CHECK(m.star_moment({1}).is_zero());
}

TEST_CASE("truncated Poisson and Bessel laws") {
  auto p = poisson_truncated(Rational(1, 4), 6);
  CHECK(p.exp_rate == Rational(1, 4));
  CHECK(p.weight_at_integer(0) == 1);
  CHECK(p.weight_at_integer(2) == Rational(1, 32));  // (1/4)^2 / 2
  CHECK(poisson_tail_bound(Rational(1, 4), 6) < 1e-6);

  auto b = bessel_truncated(2, Rational(1), 8);
  // symmetric law on Z: atoms at +-j have equal weight
  for (long j = 1; j <= 4; ++j)
    CHECK(b.weight_at_integer(j) == b.weight_at_integer(-j));
  double mass = 0;
  for (const auto& [pt, w] : b.atoms)
    mass += to_double(w) * b.normalization_factor();
  CHECK(std::abs(mass - 1.0) < 1e-4);
}

TEST_CASE("partition moments generate the classical count sequences") {
  // weight 1 counts admissible partitions
  std::vector<long> bell{1, 2, 5, 15, 52, 203};
  std::vector<long> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    CHECK(partition_moment(Category::P(), n, {}, 1) ==
          bell[static_cast<size_t>(n - 1)]);
    CHECK(partition_moment(Category::NC(), n, {}, 1) ==
          catalan[static_cast<size_t>(n - 1)]);
  }
  CHECK(partition_moment(Category::P(), 2, {}, Rational(1, 4)) ==
        Rational(1, 4) + Rational(1, 16));
}

TEST_CASE("cumulants of the (free) Poisson moment sequences are constant") {
  std::vector<Rational> bell{1, 2, 5, 15, 52, 203};
  std::vector<Rational> catalan{1, 2, 5, 14, 42, 132};
  for (const auto& k : classical_cumulants(bell, 6)) CHECK(k == 1);
  for (const auto& k : free_cumulants(catalan, 6)) CHECK(k == 1);
  // Gaussian / semicircle: second cumulant only
  std::vector<Rational> gauss{0, 1, 0, 3, 0, 15};
  std::vector<Rational> semicircle{0, 1, 0, 2, 0, 5};
  auto ck = classical_cumulants(gauss, 6);
  auto fk = free_cumulants(semicircle, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(ck[static_cast<size_t>(i)] == (i == 1 ? 1 : 0));
    CHECK(fk[static_cast<size_t>(i)] == (i == 1 ? 1 : 0));
  }
}

TEST_CASE("Bercovici-Pata pairing check") {
  std::vector<Rational> bell{1, 2, 5, 15, 52, 203};
  std::vector<Rational> catalan{1, 2, 5, 14, 42, 132};
  auto rep = bp_check(bell, catalan, 6);
  CHECK(rep.pass);
  CHECK(rep.first_fail == 0);
  auto bad = catalan;
  bad[3] += 1;
  auto rep2 = bp_check(bell, bad, 6);
  CHECK_FALSE(rep2.pass);
  CHECK(rep2.first_fail == 4);
}

TEST_CASE("tv distance to Poisson is small for the Poisson law itself") {
  auto p = poisson_truncated(Rational(1, 4), 20);
  CHECK(tv_to_poisson(p, 0.25) < 1e-12);
  auto q = mu_formula(40, 20, 20);
  CHECK(tv_to_poisson(q, 0.25) < 0.05);
}

TEST_CASE("mu corner cases by hand") {
  // rank 0 forces chi = 0
  for (int l = 0; l <= 3; ++l) {
    auto d = mu_formula(3, 0, l);
    CHECK(d.weight_at_integer(0) == 1);
    CHECK(d.atoms.size() == 1);
  }
  auto a = mu_formula(2, 1, 1);  // 3/4 d0 + 1/4 d1
  CHECK(a.weight_at_integer(0) == Rational(3, 4));
  CHECK(a.weight_at_integer(1) == Rational(1, 4));
  auto b = mu_formula(2, 2, 1);  // 1/2 d0 + 1/2 d1
  CHECK(b.weight_at_integer(0) == Rational(1, 2));
  CHECK(b.weight_at_integer(1) == Rational(1, 2));
  // signed N=1: chi_1 on the rank-1 slice of the x=2 family is +-1 evenly
  auto s = mu_bruteforce(1, 1, 1, 2);
  CHECK(s.weight_at_integer(1) == Rational(1, 2));
  CHECK(s.weight_at_integer(-1) == Rational(1, 2));
  CHECK(sign_mixing(1, 1, 1) == s);
  CHECK(sign_mixing(1, 0, 1).weight_at_integer(0) == 1);
}

TEST_CASE("Bessel moments match the partition sums") {
  const Rational st(1, 2);
  // x = 1: Poisson(st), moments are sums of st^{|pi|} over all partitions
  auto p = poisson_truncated(st, 40);
  for (int n = 1; n <= 4; ++n) {
    double lhs = to_double(p.moment(n)) * p.normalization_factor();
    double rhs = to_double(partition_moment(Category::P(), n, {}, st));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
  // x = 2: even moments sum over even-block partitions, odd moments vanish
  auto b = bessel_truncated(2, st, 40);
  for (int n = 1; n <= 6; ++n) {
    double lhs = to_double(b.moment(n)) * b.normalization_factor();
    double rhs = n % 2 ? 0.0
                       : to_double(partition_moment(Category::Px(2), n,
                                                    ones_word(n), st));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("Bercovici-Pata pairing holds at several rates") {
  for (const Rational& st : {Rational(1, 4), Rational(1), Rational(3)}) {
    for (auto [ccat, fcat] :
         {std::pair{Category::P(), Category::NC()},
          std::pair{Category::P2(), Category::NC2()},
          std::pair{Category::Px(2), Category::NCx(2)}}) {
      std::vector<Rational> cm, fm;
      for (int n = 1; n <= 6; ++n) {
        auto w = ccat.colored() ? std::optional<ColoredWord>(ones_word(n))
                                : std::nullopt;
        cm.push_back(partition_moment(ccat, n, w, st));
        fm.push_back(partition_moment(fcat, n, w, st));
      }
      CHECK(bp_check(cm, fm, 6).pass);
    }
  }
}
