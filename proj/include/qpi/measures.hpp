#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpi/cyclotomic.hpp"
#include "qpi/partitions.hpp"

namespace qpi {

/// Discrete measure with atoms in Z[zeta_x] and exact rational weights.
/// Signed weights are allowed (intermediates like (d1-d0)^{*q}); whether the
/// measure is a probability measure is a checked property, not a type.
///
/// `exp_rate`: when nonzero, every stored weight is to be multiplied by
/// e^{-exp_rate} (truncated Poisson/Bessel laws keep exact atom ratios this
/// way). Zero means the weights are exact as stored.
struct RationalMeasure {
  long x = 1;
  std::map<CycInt, Rational> atoms;
  Rational exp_rate = 0;

  explicit RationalMeasure(long x_ = 1) : x(x_) {}

  void add(const CycInt& point, const Rational& w);
  void add_integer(long point, const Rational& w);

  Rational weight(const CycInt& point) const;
  Rational weight_at_integer(long point) const;

  Rational total_weight() const;  // without the exp factor
  bool is_probability() const;    // exact only: weights >= 0 summing to 1

  /// numeric factor e^{-exp_rate} (1.0 when exact)
  double normalization_factor() const;

  bool operator==(const RationalMeasure& o) const {
    return x == o.x && atoms == o.atoms && exp_rate == o.exp_rate;
  }

  /// convolution of atom sets (same x, both exact)
  friend RationalMeasure convolve(const RationalMeasure& a,
                                  const RationalMeasure& b);

  /// n-th moment Σ w·a^n for integer-atom measures (x = 1)
  Rational moment(int n) const;

  /// *-moment Σ w·a^{e_1}···a^{e_n} with '*' = conjugate, exact in Q(zeta_x)
  CycRational star_moment(const ColoredWord& word) const;
};

/// mu_k^l = Σ_q C(k,q)C(l,q)C(N,q)^{-2} (d1-d0)^{*q}/q!
RationalMeasure mu_formula(int N, int k, int l);

/// law(chi_l | kappa = k) on the rank-k slice of the x-signed semigroup,
/// by direct enumeration. Guarded: count(N,x) <= 10^6.
RationalMeasure mu_bruteforce(int N, int k, int l, long x = 1);

/// the x=2 law predicted from the x=1 law via the sign-selection identity
RationalMeasure sign_mixing(int N, int k, int l);

/// truncated Poisson(t): unnormalized weights t^n/n! at n <= cutoff, with
/// exp_rate = t; tail mass bound available via poisson_tail_bound.
RationalMeasure poisson_truncated(const Rational& t, int cutoff);

/// truncated compound Poisson with jump law uniform on the x-th roots of
/// unity: Σ_{n<=cutoff} (st)^n/n! rho_x^{*n}, exp_rate = st.
RationalMeasure bessel_truncated(long x, const Rational& st, int cutoff);

/// upper bound for the neglected mass e^{-t} Σ_{n>cutoff} t^n/n!
double poisson_tail_bound(const Rational& t, int cutoff);

/// Σ over the category's admissible partitions of weight^{|alpha|}
Rational partition_moment(const Category& cat, int n,
                          const std::optional<ColoredWord>& word,
                          const Rational& weight);

/// moments m_1..m_nmax (m_0 = 1 implicit) -> cumulants k_1..k_nmax via
/// Moebius inversion on P(n) (classical) or NC(n) (free)
std::vector<Rational> classical_cumulants(const std::vector<Rational>& moments,
                                          int n_max);
std::vector<Rational> free_cumulants(const std::vector<Rational>& moments,
                                     int n_max);

struct BPReport {
  bool pass = false;
  int first_fail = 0;  // 1-based order of first mismatch, 0 if none
  std::vector<Rational> classical;
  std::vector<Rational> free;
};

/// Bercovici-Pata check: classical cumulants of the first sequence must
/// equal free cumulants of the second, entrywise up to n_max.
BPReport bp_check(const std::vector<Rational>& classical_moments,
                  const std::vector<Rational>& free_moments, int n_max);

/// total-variation distance to (untruncated) Poisson(t), numeric; measure
/// must have integer atoms (x = 1)
double tv_to_poisson(const RationalMeasure& m, double t);

}  // namespace qpi
