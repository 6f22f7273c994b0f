#pragma once

#include <optional>
#include <vector>

#include "qpi/partitions.hpp"

namespace qpi {

struct singular_gram_error : std::runtime_error {
  int n;
  long N;
  std::string category;
  singular_gram_error(int n_, long N_, std::string cat_)
      : std::runtime_error("singular Gram matrix at n=" + std::to_string(n_) +
                           ", N=" + std::to_string(N_) + ", cat=" + cat_),
        n(n_), N(N_), category(std::move(cat_)) {}
};

/// Gram / Weingarten pair over a category of partitions:
/// gram[p][q] = N^{|p v q|}, wg = exact rational inverse.
struct WeingartenTable {
  int n = 0;
  long N = 0;
  Category cat = Category::NC();
  std::optional<ColoredWord> word;
  std::vector<SetPartition> basis;
  std::vector<std::vector<Int>> gram;
  std::vector<std::vector<Rational>> wg;
};

/// Exact inversion over the rationals; throws singular_gram_error when the
/// Gram matrix is singular (N below the category's independence threshold).
WeingartenTable build_table(int n, long N, const Category& cat,
                            const std::optional<ColoredWord>& word = {});

/// Haar moment of u_{i1 j1} ... u_{in jn}:
/// Σ_{α <= ker i, β <= ker j} wg[α][β]. Indices are 1-based.
Rational integrate_word(const WeingartenTable& table,
                        const std::vector<int>& rows,
                        const std::vector<int>& cols);

/// n-th moment of chi_l on the group itself: Σ_{α,β} wg[α][β] l^{|α v β|}.
Rational single_group_moment(int n, long N, int l, const Category& cat,
                             const std::optional<ColoredWord>& word = {});

/// n-th (*-)moment of chi_k^l through the triple tensor representation,
/// contracted form Σ_{α,ρ} (W_N G_k W_N)[α][ρ] · l^{|α v ρ|}.
Rational triple_moment(int n, long N, long k, int l, const Category& cat,
                       const std::optional<ColoredWord>& word = {});

/// same engine restricted to the classical categories P / P2 / Px
Rational classical_triple_moment(int n, long N, long k, int l,
                                 const Category& cat,
                                 const std::optional<ColoredWord>& word = {});

/// six-fold sum, exponential in basis size; test oracle for small n
Rational triple_moment_naive(int n, long N, long k, int l, const Category& cat,
                             const std::optional<ColoredWord>& word = {});

/// exact inverse of a square rational matrix; throws on singular input
std::vector<std::vector<Rational>> invert_rational(
    std::vector<std::vector<Rational>> a);

}  // namespace qpi
