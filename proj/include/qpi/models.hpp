#pragma once

#include <array>
#include <string>

#include "qpi/isometry.hpp"

namespace qpi {

/// n x n array of self-adjoint 2x2 blocks v_ij = [[0, u_ij],[conj(u_ij), 0]]
struct BlockModelMatrix {
  int n = 0;
  std::vector<Eigen::Matrix2cd> blocks;  // row-major, n*n entries

  const Eigen::Matrix2cd& block(int i, int j) const {
    return blocks[static_cast<size_t>(i) * n + j];
  }
  /// the full 2n x 2n matrix
  CMat flatten() const;
  /// ||v v^t v - v||_inf at block level
  double isometry_residual() const;
  /// max over blocks of (off-pattern mass: diagonal entries, v - v*)
  double pattern_residual() const;
};

BlockModelMatrix crossed_model(const PartialIsometryMatrix& U);

enum class HalfCommVariant { AbcCba, AbStarC };
std::string variant_name(HalfCommVariant v);

struct HalfCommReport {
  HalfCommVariant variant = HalfCommVariant::AbcCba;
  double max_residual = 0;
  std::array<std::pair<int, int>, 3> argmax_triple{};  // (i,j) of a, b, c
  long triples = 0;
  bool exhaustive = false;
  bool pass = false;
};

/// Scans ordered entry triples (a,b,c): all n^6 of them for n <= 6,
/// 10^5 seeded random triples above.
HalfCommReport check_half_commutation(const BlockModelMatrix& m,
                                      HalfCommVariant variant, double tol,
                                      uint64_t seed = 0);
HalfCommReport check_half_commutation(const CMat& m, HalfCommVariant variant,
                                      double tol, uint64_t seed = 0);

/// A + iB -> [[A, B], [-B, A]], real, dimension 2N, rank doubled
PartialIsometryMatrix double_matrix(const PartialIsometryMatrix& U);

struct DoubleComposeReport {
  double residual = 0;
  bool pass = false;
};

/// ||double(U o V) - double(U) o double(V)||_inf <= tol
DoubleComposeReport double_compose_check(const PartialIsometryMatrix& U,
                                         const PartialIsometryMatrix& V,
                                         double tol);

enum class RestrictedTarget { O2NFromU, H2NFromK };
RestrictedTarget parse_target(const std::string& s);

/// double(U) lies in the stated intersection class: the (A B; -B A)
/// pattern plus the target's membership predicate.
bool restricted_class_check(const PartialIsometryMatrix& U,
                            RestrictedTarget target, double tol = -1);

}  // namespace qpi
