// Acceptance gate: one pass/fail line per criterion, exit code = #failures.
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "qpi/measures.hpp"
#include "qpi/models.hpp"
#include "qpi/weingarten.hpp"

using namespace qpi;

namespace {

constexpr double kComposeTol = 1e-8;
constexpr double kAssocTol = 1e-8;
constexpr double kModelTol = 1e-9;
constexpr double kDoubleTol = 1e-8;
constexpr double kMatchTol = 1e-10;
constexpr double kTvLimit = 0.05;
constexpr double kRelErrLimit = 0.05;

// 1. semigroup counts and enumeration cardinalities
bool counts_and_enumeration() {
  std::vector<long> expected{1, 2, 7, 34, 209};
  for (int N = 0; N <= 4; ++N)
    if (count(N, 1) != expected[static_cast<size_t>(N)]) return false;
  for (int N = 0; N <= 6; ++N)
    if (Int(enumerate(N, 1).size()) != count(N, 1)) return false;
  for (int N = 0; N <= 4; ++N)
    for (long x : {2L, 3L})
      if (Int(enumerate(N, x).size()) != count(N, x)) return false;
  return true;
}

// 2. exact law formula vs direct enumeration
bool law_formula_vs_bruteforce() {
  for (int N = 0; N <= 6; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l)
        if (!(mu_formula(N, k, l) == mu_bruteforce(N, k, l, 1))) return false;
  return true;
}

// 3. symmetry of the law in (k, l)
bool law_symmetry() {
  for (int N = 0; N <= 6; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l < k; ++l)
        if (!(mu_formula(N, k, l) == mu_formula(N, l, k))) return false;
  return true;
}

// 4. Poisson(1/4) limit: TV strictly decreasing along N = 10, 20, 40
bool poisson_limit() {
  double prev = 1e9;
  for (int N : {10, 20, 40}) {
    double tv = tv_to_poisson(mu_formula(N, N / 2, N / 2), 0.25);
    if (!(tv < prev)) return false;
    prev = tv;
  }
  return prev < kTvLimit;
}

// 5. sign-mixing identity reproduces the x = 2 law
bool sign_mixing_identity() {
  for (int N = 0; N <= 5; ++N)
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l)
        if (!(sign_mixing(N, k, l) == mu_bruteforce(N, k, l, 2))) return false;
  return true;
}

// 6. exact Gram inversion across the six categories + singular guards
bool weingarten_inversion() {
  std::vector<Category> cats{Category::P(),  Category::P2(), Category::Px(2),
                             Category::NC(), Category::NC2(), Category::NCx(2)};
  for (const auto& cat : cats)
    for (int n = 1; n <= 4; ++n)
      for (long N = 4; N <= 8; ++N) {
        auto word = cat.colored() ? std::optional<ColoredWord>(ones_word(n))
                                  : std::nullopt;
        if (enumerate_partitions(n, cat, word).empty()) continue;
        auto t = build_table(n, N, cat, word);
        const size_t m = t.basis.size();
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j) {
            Rational acc = 0;
            for (size_t k = 0; k < m; ++k)
              acc += Rational(t.gram[i][k]) * t.wg[k][j];
            if (acc != (i == j ? 1 : 0)) return false;
          }
      }
  for (auto [n, N] : {std::pair{2, 1L}, std::pair{3, 2L}}) {
    try {
      build_table(n, N, Category::P());
      return false;
    } catch (const singular_gram_error&) {
    }
  }
  return true;
}

// 7. triple moments collapse to group moments at k = N
bool triple_collapse() {
  std::vector<Category> cats{Category::NC(), Category::NC2(),
                             Category::NCx(2)};
  for (const auto& cat : cats)
    for (int n = 1; n <= 4; ++n) {
      if (!cat.crossing_allowed() && cat.tag != CategoryTag::NC && n % 2)
        continue;  // pair categories have no odd-size basis
      const long N = 5;
      auto word = cat.colored() ? std::optional<ColoredWord>(ones_word(n))
                                : std::nullopt;
      for (int l = 1; l <= 5; ++l)
        if (triple_moment(n, N, N, l, cat, word) !=
            single_group_moment(n, N, l, cat, word))
          return false;
    }
  return true;
}

// 8. free Poisson(1/4) limit of the free triple moments
bool free_poisson_limit() {
  if (triple_moment(1, 8, 4, 4, Category::NC()) != Rational(1, 4))
    return false;  // first moment is exact at every N
  for (int n = 2; n <= 4; ++n) {
    Rational target = partition_moment(Category::NC(), n, {}, Rational(1, 4));
    double prev = 1e9;
    double rel = 1e9;
    for (long N : {8L, 16L, 32L, 64L}) {
      Rational tm = triple_moment(n, N, N / 2, static_cast<int>(N / 2),
                                  Category::NC());
      rel = std::abs(to_double(tm - target)) / to_double(target);
      if (!(rel < prev)) return false;
      prev = rel;
    }
    if (!(rel < kRelErrLimit)) return false;
  }
  return true;
}

// 9. Bercovici-Pata pairings, exact to order 6
bool bercovici_pata() {
  for (const Rational& st : {Rational(1, 4), Rational(1)}) {
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
      if (!bp_check(cm, fm, 6).pass) return false;
    }
  }
  return true;
}

// 10. numeric semigroup: closure, membership, associativity
bool numeric_semigroup() {
  const std::vector<IsoClass> classes{IsoClass::O, IsoClass::U, IsoClass::B,
                                      IsoClass::H, IsoClass::K};
  for (auto cls : classes) {
    for (int i = 0; i < 10000; ++i) {
      const int N = 3 + i % 6;  // N <= 8
      auto u = sample(cls, N, i % (N + 1), 10000 + static_cast<uint64_t>(i));
      auto v = sample(cls, N, (i / 7) % (N + 1),
                      20000 + static_cast<uint64_t>(i));
      auto w = compose(u, v);
      if (w.residual() > kComposeTol) return false;
      if (!membership(w, cls, 1e-7).member) return false;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int N = 3 + i % 6;
    auto u = sample(IsoClass::U, N, i % (N + 1), 7 * static_cast<uint64_t>(i));
    auto v = sample(IsoClass::U, N, (i + 1) % (N + 1),
                    7 * static_cast<uint64_t>(i) + 1);
    auto w = sample(IsoClass::U, N, (i + 2) % (N + 1),
                    7 * static_cast<uint64_t>(i) + 2);
    if (associativity_residual(u, v, w) > kAssocTol) return false;
  }
  return true;
}

// 11. matrix composition equals combinatorial composition on all pairs
bool matrix_matches_combinatorics() {
  auto all = enumerate(3, 1);
  for (const auto& f : all)
    for (const auto& g : all) {
      PartialIsometryMatrix mf(to_numeric_matrix(f));
      PartialIsometryMatrix mg(to_numeric_matrix(g));
      CMat expect = to_numeric_matrix(compose_signed(f, g));
      if (max_abs(compose(mf, mg).m - expect) > kMatchTol) return false;
    }
  return true;
}

// 12. Monte Carlo character moments vs the exact Weingarten values
bool monte_carlo_moments() {
  const int N = 60, k = 30, l = 30;
  auto rep = monte_carlo_law(IsoClass::O, N, k, l, 100000, 2024, 4, 4);
  for (int n = 1; n <= 4; ++n) {
    double exact = to_double(
        classical_triple_moment(n, N, k, l, Category::P2()));
    double se = rep.std_errors[static_cast<size_t>(n - 1)];
    double got = rep.moments[static_cast<size_t>(n - 1)].real();
    if (std::abs(got - exact) > 3 * se + 1e-12) return false;
  }
  double se2 = rep.std_errors[1];
  if (std::abs(rep.moments[1].real() - 0.25) > 3 * se2 + 1e-12) return false;
  return true;
}

// 13. block models: crossed relations, doubling morphism, restricted classes
bool block_models() {
  for (int i = 0; i < 100; ++i) {
    const int N = 2 + i % 5;  // N <= 6
    auto u = sample(IsoClass::U, N, i % (N + 1),
                    30000 + static_cast<uint64_t>(i));
    auto m = crossed_model(u);
    if (m.pattern_residual() > kModelTol) return false;
    if (m.isometry_residual() > kModelTol) return false;
    if (!check_half_commutation(m, HalfCommVariant::AbcCba, kModelTol).pass)
      return false;
    if (!check_half_commutation(m, HalfCommVariant::AbStarC, kModelTol).pass)
      return false;
    if (!restricted_class_check(u, RestrictedTarget::O2NFromU)) return false;
    auto p = sample(IsoClass::K, N, i % (N + 1),
                    40000 + static_cast<uint64_t>(i));
    if (!restricted_class_check(p, RestrictedTarget::H2NFromK)) return false;
  }
  for (int i = 0; i < 1000; ++i) {
    const int N = 2 + i % 5;
    auto u = sample(IsoClass::U, N, i % (N + 1),
                    50000 + static_cast<uint64_t>(i));
    auto v = sample(IsoClass::U, N, (i + 3) % (N + 1),
                    60000 + static_cast<uint64_t>(i));
    if (!double_compose_check(u, v, kDoubleTol).pass) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool()> run;
  };
  std::vector<Criterion> criteria{
      {"counts and enumeration cardinalities", counts_and_enumeration},
      {"exact law: formula = enumeration", law_formula_vs_bruteforce},
      {"exact law: symmetry in (k, l)", law_symmetry},
      {"Poisson(1/4) limit in total variation", poisson_limit},
      {"sign-mixing identity for the signed family", sign_mixing_identity},
      {"exact Weingarten inversion + singular guards", weingarten_inversion},
      {"triple moments collapse at k = N", triple_collapse},
      {"free Poisson(1/4) limit of triple moments", free_poisson_limit},
      {"Bercovici-Pata moment pairings", bercovici_pata},
      {"numeric semigroup closure and associativity", numeric_semigroup},
      {"matrix vs combinatorial composition", matrix_matches_combinatorics},
      {"Monte Carlo moments vs exact values", monte_carlo_moments},
      {"block models, doubling, restricted classes", block_models},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      std::printf("criterion %2zu: FAIL (%s) -- exception: %s\n", i + 1,
                  criteria[i].label, e.what());
      ++failures;
      continue;
    }
    std::printf("criterion %2zu: %s (%s)\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].label);
    if (!ok) ++failures;
  }
  return failures;
}
