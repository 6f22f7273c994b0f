#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qpi/cyclotomic.hpp"
#include "qpi/numeric.hpp"

namespace qpi {

/// Partial bijection of {1..n}. map[i-1] == 0 means i is outside the domain,
/// otherwise map[i-1] is the (1-based) image of i. Defined targets are
/// pairwise distinct.
struct PartialPermutation {
  int n = 0;
  std::vector<int> map;

  PartialPermutation() = default;
  PartialPermutation(int n_, std::vector<int> map_);

  static PartialPermutation identity(int n);
  static PartialPermutation null(int n);

  bool defined_at(int i) const { return map[i - 1] != 0; }
  int operator()(int i) const { return map[i - 1]; }

  /// |domain| = |range|
  int rank() const;
  std::vector<int> domain() const;
  std::vector<int> range() const;

  PartialPermutation inverse() const;

  bool operator==(const PartialPermutation& o) const {
    return n == o.n && map == o.map;
  }
  bool operator<(const PartialPermutation& o) const {
    return map < o.map;
  }
};

/// f after g, restricted to g^{-1}(dom f ∩ ran g).
PartialPermutation compose(const PartialPermutation& f,
                           const PartialPermutation& g);

/// Partial permutation signed by x-th roots of unity. Signs are stored as
/// exact rotation angles in [0,1): for finite x the angle of a domain point
/// is r/x with r in {0..x-1}; x == kInfiniteOrder admits any rational angle.
constexpr long kInfiniteOrder = 0;

struct SignedPartialPermutation {
  PartialPermutation base;
  long x = 1;
  std::vector<Rational> signs;  // angle per point, meaningful on the domain

  SignedPartialPermutation() = default;
  SignedPartialPermutation(PartialPermutation base_, long x_,
                           std::vector<Rational> signs_);
  /// trivial signs
  SignedPartialPermutation(PartialPermutation base_, long x_);

  static SignedPartialPermutation identity(int n, long x);
  static SignedPartialPermutation null(int n, long x);

  /// residue of the sign at domain point i (finite x only)
  long residue_at(int i) const;

  bool operator==(const SignedPartialPermutation& o) const {
    return base == o.base && x == o.x && signs == o.signs;
  }
};

SignedPartialPermutation compose_signed(const SignedPartialPermutation& f,
                                        const SignedPartialPermutation& g);

/// Σ_{k=0}^{N} k!·C(N,k)²·x^k
Int count(int N, long x);

/// All elements with the given sign order, optionally restricted to rank k.
/// Order: rank ascending, domain subsets colexicographic, range subsets
/// colexicographic, bijection in lexicographic one-line order (images of the
/// sorted domain), then signs as a base-x counter over the sorted domain,
/// last domain point fastest.
void enumerate(int N, long x, std::optional<int> k,
               const std::function<void(const SignedPartialPermutation&)>& f);
std::vector<SignedPartialPermutation> enumerate(int N, long x,
                                                std::optional<int> k = {});

/// u_ij = ε(j)·[σ(j)=i], entries in Z[zeta_x]. Finite x only.
std::vector<std::vector<CycInt>> to_matrix(const SignedPartialPermutation& f);

/// The S_{2N} embedding of Prop-style four-case form; returns one-line
/// notation over {1..2N}.
std::vector<int> embed_s2n(const PartialPermutation& f);

int kappa(const PartialPermutation& f);
inline int kappa(const SignedPartialPermutation& f) { return f.base.rank(); }

/// Σ_{i≤l, σ(i)=i} zeta^{ε(i)} (finite x). For x=1 this is the fixed-point
/// count among {1..l}.
CycInt chi(const SignedPartialPermutation& f, int l);
int chi(const PartialPermutation& f, int l);

}  // namespace qpi
