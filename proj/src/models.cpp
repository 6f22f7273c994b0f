#include "qpi/models.hpp"

#include <cmath>

#include "qpi/rng.hpp"

namespace qpi {

CMat BlockModelMatrix::flatten() const {
  CMat m = CMat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.block<2, 2>(2 * i, 2 * j) = block(i, j);
  return m;
}

double BlockModelMatrix::isometry_residual() const {
  // v^t transposes the outer index only: the entries are elements of the
  // coefficient algebra, so (v v^t v)_ij = sum_{kl} v_ik v_lk v_lj
  CMat v = flatten();
  CMat vt = CMat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      vt.block<2, 2>(2 * i, 2 * j) = block(j, i);
  return max_abs(v * vt * v - v);
}

double BlockModelMatrix::pattern_residual() const {
  double r = 0;
  for (const auto& b : blocks) {
    r = std::max(r, std::abs(b(0, 0)));
    r = std::max(r, std::abs(b(1, 1)));
    r = std::max(r, max_abs(b - b.adjoint()));
  }
  return r;
}

BlockModelMatrix crossed_model(const PartialIsometryMatrix& U) {
  BlockModelMatrix m;
  m.n = U.n();
  m.blocks.resize(static_cast<size_t>(m.n) * m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      Eigen::Matrix2cd b;
      b << 0.0, U.m(i, j), std::conj(U.m(i, j)), 0.0;
      m.blocks[static_cast<size_t>(i) * m.n + j] = b;
    }
  return m;
}

std::string variant_name(HalfCommVariant v) {
  return v == HalfCommVariant::AbcCba ? "abc_cba" : "abstarc";
}

namespace {

// generic triple scan over the n*n entries
template <typename Residual>
HalfCommReport scan_triples(int n, HalfCommVariant variant, double tol,
                            uint64_t seed, Residual residual) {
  HalfCommReport rep;
  rep.variant = variant;
  const long entries = static_cast<long>(n) * n;
  auto record = [&](long a, long b, long c) {
    double r = residual(a, b, c);
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.argmax_triple = {std::pair<int, int>(static_cast<int>(a) / n,
                                               static_cast<int>(a) % n),
                           std::pair<int, int>(static_cast<int>(b) / n,
                                               static_cast<int>(b) % n),
                           std::pair<int, int>(static_cast<int>(c) / n,
                                               static_cast<int>(c) % n)};
    }
    ++rep.triples;
  };
  if (n <= 6) {
    rep.exhaustive = true;
    for (long a = 0; a < entries; ++a)
      for (long b = 0; b < entries; ++b)
        for (long c = 0; c < entries; ++c) record(a, b, c);
  } else {
    auto rng = make_rng(seed, 0);
    std::uniform_int_distribution<long> pick(0, entries - 1);
    for (long t = 0; t < 100000; ++t)
      record(pick(rng), pick(rng), pick(rng));
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

}  // namespace

HalfCommReport check_half_commutation(const BlockModelMatrix& m,
                                      HalfCommVariant variant, double tol,
                                      uint64_t seed) {
  auto entry = [&](long e) -> const Eigen::Matrix2cd& {
    return m.blocks[static_cast<size_t>(e)];
  };
  auto residual = [&](long a, long b, long c) {
    const Eigen::Matrix2cd& A = entry(a);
    Eigen::Matrix2cd B = entry(b);
    const Eigen::Matrix2cd& C = entry(c);
    if (variant == HalfCommVariant::AbStarC) B = B.adjoint().eval();
    return max_abs(A * B * C - C * B * A);
  };
  return scan_triples(m.n, variant, tol, seed, residual);
}

HalfCommReport check_half_commutation(const CMat& m, HalfCommVariant variant,
                                      double tol, uint64_t seed) {
  const int n = static_cast<int>(m.rows());
  auto entry = [&](long e) { return m(e / n, e % n); };
  auto residual = [&](long a, long b, long c) {
    std::complex<double> A = entry(a), B = entry(b), C = entry(c);
    if (variant == HalfCommVariant::AbStarC) B = std::conj(B);
    return std::abs(A * B * C - C * B * A);
  };
  return scan_triples(n, variant, tol, seed, residual);
}

PartialIsometryMatrix double_matrix(const PartialIsometryMatrix& U) {
  const int n = U.n();
  Eigen::MatrixXd a = U.m.real(), b = U.m.imag();
  Eigen::MatrixXd d(2 * n, 2 * n);
  d << a, b, -b, a;
  return PartialIsometryMatrix(d.cast<std::complex<double>>(),
                               U.tol >= 0 ? 2 * U.tol : -1);
}

DoubleComposeReport double_compose_check(const PartialIsometryMatrix& U,
                                         const PartialIsometryMatrix& V,
                                         double tol) {
  DoubleComposeReport rep;
  rep.residual =
      max_abs(double_matrix(compose(U, V)).m -
              compose(double_matrix(U), double_matrix(V)).m);
  rep.pass = rep.residual <= tol;
  return rep;
}

RestrictedTarget parse_target(const std::string& s) {
  if (s == "O2N_from_U") return RestrictedTarget::O2NFromU;
  if (s == "H2N_from_K") return RestrictedTarget::H2NFromK;
  throw parameter_error("unknown target: " + s);
}

bool restricted_class_check(const PartialIsometryMatrix& U,
                            RestrictedTarget target, double tol) {
  if (tol < 0) tol = std::max(U.tol, 1e-9 * U.n());
  PartialIsometryMatrix D;
  try {
    D = double_matrix(U);
  } catch (const validation_error&) {
    return false;
  }
  const int n = U.n();
  // the (A B; -B A) pattern
  double pat = std::max(
      max_abs(D.m.topLeftCorner(n, n) - D.m.bottomRightCorner(n, n)),
      max_abs(D.m.topRightCorner(n, n) + D.m.bottomLeftCorner(n, n)));
  if (pat > tol) return false;
  if (target == RestrictedTarget::O2NFromU)
    return membership(D, IsoClass::O, tol).member;
  // H-pattern on the 2x2 rotation bands: U itself must be a phased partial
  // permutation (at most one entry per row/column, each of modulus 1)
  for (int i = 0; i < n; ++i) {
    int row_cnt = 0;
    for (int j = 0; j < n; ++j) {
      double a = std::abs(U.m(i, j));
      if (a > tol) {
        if (std::fabs(a - 1.0) > tol) return false;
        ++row_cnt;
      }
    }
    if (row_cnt > 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int col_cnt = 0;
    for (int i = 0; i < n; ++i)
      if (std::abs(U.m(i, j)) > tol) ++col_cnt;
    if (col_cnt > 1) return false;
  }
  return true;
}

}  // namespace qpi
