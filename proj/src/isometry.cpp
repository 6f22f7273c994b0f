#include "qpi/isometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <thread>

#include "qpi/rng.hpp"

namespace qpi {

PartialIsometryMatrix::PartialIsometryMatrix(CMat m_, double tol_)
    : m(std::move(m_)) {
  tol = tol_ >= 0 ? tol_ : 1e-9 * static_cast<double>(m.rows());
  double res = residual();
  if (res > tol)
    throw validation_error("not a partial isometry within tolerance", res);
  double tr = (m.adjoint() * m).trace().real();
  rank = static_cast<int>(std::lround(tr));
  if (std::fabs(tr - rank) > static_cast<double>(m.rows()) * std::max(tol, 1e-12))
    throw validation_error("trace(U*U) is not near an integer", tr - rank);
}

double PartialIsometryMatrix::residual() const {
  return max_abs(m * m.adjoint() * m - m);
}

IsoClass parse_class(const std::string& s) {
  if (s == "O") return IsoClass::O;
  if (s == "U") return IsoClass::U;
  if (s == "B") return IsoClass::B;
  if (s == "H") return IsoClass::H;
  if (s == "K") return IsoClass::K;
  if (s == "S") return IsoClass::S;
  throw parameter_error("unknown class: " + s);
}

std::string class_name(IsoClass c) {
  switch (c) {
    case IsoClass::O: return "O";
    case IsoClass::U: return "U";
    case IsoClass::B: return "B";
    case IsoClass::H: return "H";
    case IsoClass::K: return "K";
    case IsoClass::S: return "S";
  }
  return "?";
}

namespace {

void check_projection(const CMat& P, double tol) {
  double r = std::max(max_abs(P * P - P), max_abs(P - P.adjoint()));
  if (r > tol) throw validation_error("input is not a projection", r);
}

}  // namespace

CMat wedge(const CMat& P, const CMat& Q, WedgeMethod method, double tol) {
  if (P.rows() != Q.rows() || P.cols() != Q.cols() || P.rows() != P.cols())
    throw dimension_error("wedge: square matrices of equal size required");
  check_projection(P, std::max(tol, 1e-7));
  check_projection(Q, std::max(tol, 1e-7));
  const auto n = P.rows();
  if (method == WedgeMethod::Spectral) {
    Eigen::SelfAdjointEigenSolver<CMat> es(P + Q);
    CMat W = CMat::Zero(n, n);
    // exact intersections put eigenvalues of P + Q within ~1e-13 of 2, while
    // small-but-nonzero principal angles stay orders of magnitude further
    // away; the cut is therefore a fixed numeric scale, not the caller's tol
    // (which governs how sloppy the input projections may be)
    for (Eigen::Index i = 0; i < n; ++i)
      if (es.eigenvalues()(i) > 2.0 - 1e-11 * static_cast<double>(n)) {
        CMat v = es.eigenvectors().col(i);
        W += v * v.adjoint();
      }
    return W;
  }
  // iterated products (PQ)^m, stabilized through the Hermitian part
  CMat step = P * Q;
  CMat X = step;
  CMat prev = (X + X.adjoint()) / 2.0;
  for (int m = 0; m < 10000; ++m) {
    X = X * step;
    CMat sym = (X + X.adjoint()) / 2.0;
    if (max_abs(sym - prev) < 1e-12) return sym;
    prev = sym;
  }
  return prev;
}

PartialIsometryMatrix compose(const PartialIsometryMatrix& U,
                              const PartialIsometryMatrix& V) {
  if (U.n() != V.n()) throw dimension_error("compose: dimensions differ");
  CMat meet = wedge(U.m.adjoint() * U.m, V.m * V.m.adjoint());
  CMat W = U.m * meet * V.m;
  double tol = std::max({U.tol, V.tol, 1e-9 * U.n()}) * 10.0;
  return PartialIsometryMatrix(std::move(W), tol);
}

namespace {

// at most one entry per row and column above threshold
bool submagic_support(const CMat& m, double thr, double* worst) {
  bool ok = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int cnt = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > thr) ++cnt;
    if (cnt > 1) ok = false;
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int cnt = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > thr) ++cnt;
    if (cnt > 1) ok = false;
  }
  if (!ok && worst) *worst = 1.0;
  return ok;
}

double realness_residual(const CMat& m) {
  double r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r = std::max(r, std::fabs(m(i, j).imag()));
  return r;
}

}  // namespace

MembershipReport membership(const PartialIsometryMatrix& U, IsoClass cls,
                            double tol) {
  if (tol < 0) tol = U.tol;
  MembershipReport rep;
  const CMat& m = U.m;
  const auto n = m.rows();
  double res = 0;
  switch (cls) {
    case IsoClass::U:
      res = U.residual();
      break;
    case IsoClass::O:
      res = realness_residual(m);
      break;
    case IsoClass::B: {
      res = realness_residual(m);
      Eigen::VectorXcd xi = Eigen::VectorXcd::Ones(n);
      res = std::max(res, max_abs(m * xi - m * m.transpose() * xi));
      break;
    }
    case IsoClass::H:
    case IsoClass::K:
    case IsoClass::S: {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          double a = std::abs(m(i, j));
          double dev = std::min(a, std::fabs(a - 1.0));  // near 0 or |.|=1
          if (cls == IsoClass::H || cls == IsoClass::S) {
            // entries near 0 or +-1 (real); S additionally near 0 or +1
            double dr = std::min(std::abs(m(i, j)),
                                 cls == IsoClass::S
                                     ? std::abs(m(i, j) - 1.0)
                                     : std::min(std::abs(m(i, j) - 1.0),
                                                std::abs(m(i, j) + 1.0)));
            dev = dr;
          }
          res = std::max(res, dev);
        }
      double sup = 0;
      if (!submagic_support(m, 0.5, &sup)) res = std::max(res, 1.0);
      break;
    }
  }
  rep.residual = res;
  rep.member = res <= tol;
  return rep;
}

CMat haar_orthogonal(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < N; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q.cast<std::complex<double>>();
}

CMat haar_unitary(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat a(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < N; ++i) {
    std::complex<double> d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= std::conj(d) / std::abs(d);
  }
  return q;
}

CMat haar_bistochastic(int N, std::mt19937_64& rng) {
  // conjugate 1 (+) Haar O_{N-1} through an orthonormal completion of xi
  Eigen::MatrixXd seed = Eigen::MatrixXd::Identity(N, N);
  seed.col(0) = Eigen::VectorXd::Ones(N);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(seed);
  Eigen::MatrixXd q0 = qr.householderQ();
  if (q0(0, 0) < 0) q0 = -q0;  // first column = xi/sqrt(N)
  Eigen::MatrixXd inner = Eigen::MatrixXd::Identity(N, N);
  if (N > 1)
    inner.bottomRightCorner(N - 1, N - 1) =
        haar_orthogonal(N - 1, rng).real();
  Eigen::MatrixXd b = q0 * inner * q0.transpose();
  return b.cast<std::complex<double>>();
}

namespace {

std::vector<int> random_permutation(int N, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<size_t>(N));
  std::iota(p.begin(), p.end(), 0);
  for (int i = N - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(d(rng))]);
  }
  return p;
}

}  // namespace

CMat haar_hyperoctahedral(int N, std::mt19937_64& rng) {
  auto p = random_permutation(N, rng);
  std::uniform_int_distribution<int> sign(0, 1);
  CMat m = CMat::Zero(N, N);
  for (int j = 0; j < N; ++j)
    m(p[static_cast<size_t>(j)], j) = sign(rng) ? -1.0 : 1.0;
  return m;
}

CMat haar_full_phased(int N, std::mt19937_64& rng) {
  auto p = random_permutation(N, rng);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * 3.14159265358979323846);
  CMat m = CMat::Zero(N, N);
  for (int j = 0; j < N; ++j) {
    double a = theta(rng);
    m(p[static_cast<size_t>(j)], j) = std::complex<double>(cos(a), sin(a));
  }
  return m;
}

CMat haar_group(IsoClass cls, int N, std::mt19937_64& rng) {
  switch (cls) {
    case IsoClass::O: return haar_orthogonal(N, rng);
    case IsoClass::U: return haar_unitary(N, rng);
    case IsoClass::B: return haar_bistochastic(N, rng);
    case IsoClass::H: return haar_hyperoctahedral(N, rng);
    case IsoClass::K: return haar_full_phased(N, rng);
    case IsoClass::S: {
      auto p = random_permutation(N, rng);
      CMat m = CMat::Zero(N, N);
      for (int j = 0; j < N; ++j) m(p[static_cast<size_t>(j)], j) = 1.0;
      return m;
    }
  }
  throw parameter_error("haar_group: bad class");
}

namespace {

PartialIsometryMatrix sample_with_rng(IsoClass cls, int N, int k,
                                      std::mt19937_64& rng) {
  if (k < 0 || k > N) throw parameter_error("sample: need 0 <= k <= N");
  if (k == 0) return PartialIsometryMatrix(CMat::Zero(N, N));
  CMat u = haar_group(cls, N, rng);
  CMat v = haar_group(cls, k, rng);
  CMat w = haar_group(cls, N, rng);
  CMat t = u.leftCols(k) * v * w.topRows(k);
  return PartialIsometryMatrix(std::move(t));
}

}  // namespace

PartialIsometryMatrix sample(IsoClass cls, int N, int k, uint64_t seed) {
  auto rng = make_rng(seed, 0);
  return sample_with_rng(cls, N, k, rng);
}

std::complex<double> truncated_character(const CMat& m, int l) {
  std::complex<double> s = 0;
  for (int i = 0; i < l; ++i) s += m(i, i);
  return s;
}

MonteCarloReport monte_carlo_law(IsoClass cls, int N, int k, int l,
                                 long samples, uint64_t seed, int n_max,
                                 int threads) {
  if (samples < 1) throw parameter_error("monte_carlo_law: samples >= 1");
  std::vector<std::complex<double>> chi(static_cast<size_t>(samples));
  auto worker = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      auto rng = make_rng(seed, static_cast<uint64_t>(i));
      auto T = sample_with_rng(cls, N, k, rng);
      chi[static_cast<size_t>(i)] = truncated_character(T.m, l);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    long chunk = (samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      long lo = t * chunk, hi = std::min<long>(samples, lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  MonteCarloReport rep;
  rep.samples = samples;
  for (int j = 1; j <= n_max; ++j) {
    std::complex<double> mean = 0;
    for (const auto& c : chi) mean += std::pow(c, j);
    mean /= static_cast<double>(samples);
    double var = 0;
    for (const auto& c : chi) var += std::norm(std::pow(c, j) - mean);
    var /= static_cast<double>(samples - 1);
    rep.moments.push_back(mean);
    rep.std_errors.push_back(std::sqrt(var / static_cast<double>(samples)));
  }
  return rep;
}

double associativity_residual(const PartialIsometryMatrix& U,
                              const PartialIsometryMatrix& V,
                              const PartialIsometryMatrix& W) {
  if (U.n() != V.n() || V.n() != W.n())
    throw dimension_error("associativity_residual: dimensions differ");
  return max_abs(compose(compose(U, V), W).m - compose(U, compose(V, W)).m);
}

CMat to_numeric_matrix(const SignedPartialPermutation& f) {
  auto u = to_matrix(f);
  int n = f.base.n;
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = u[static_cast<size_t>(i)][static_cast<size_t>(j)].to_complex();
  return m;
}

}  // namespace qpi
