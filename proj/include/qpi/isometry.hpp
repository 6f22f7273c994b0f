#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qpi/partial_maps.hpp"

namespace qpi {

using CMat = Eigen::MatrixXcd;

struct validation_error : std::runtime_error {
  double residual;
  validation_error(const std::string& what, double res)
      : std::runtime_error(what + " (residual " + std::to_string(res) + ")"),
        residual(res) {}
};

inline double max_abs(const CMat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Complex matrix with UU*U = U within tolerance; rank is dim of the
/// initial space, recovered from trace(U*U).
struct PartialIsometryMatrix {
  CMat m;
  int rank = 0;
  double tol = 0;

  PartialIsometryMatrix() = default;
  /// validates; default tolerance 1e-9 * n
  explicit PartialIsometryMatrix(CMat m_, double tol_ = -1);

  int n() const { return static_cast<int>(m.rows()); }
  double residual() const;  // ||UU*U - U||_inf
};

enum class IsoClass { O, U, B, H, K, S };
IsoClass parse_class(const std::string& s);
std::string class_name(IsoClass c);

enum class WedgeMethod { Spectral, Iterative };

/// Orthogonal projection onto range(P) ∩ range(Q).
CMat wedge(const CMat& P, const CMat& Q,
           WedgeMethod method = WedgeMethod::Spectral, double tol = 1e-9);

/// U ∘ V = U (U*U ∧ VV*) V
PartialIsometryMatrix compose(const PartialIsometryMatrix& U,
                              const PartialIsometryMatrix& V);

struct MembershipReport {
  bool member = false;
  double residual = 0;  // worst violated quantity
};

MembershipReport membership(const PartialIsometryMatrix& U, IsoClass cls,
                            double tol = -1);

/// Haar samplers for the classical groups (QR with sign/phase fix; B_N via
/// conjugated O_{N-1}; H_N/K_N as signed/phased permutations).
CMat haar_orthogonal(int N, std::mt19937_64& rng);
CMat haar_unitary(int N, std::mt19937_64& rng);
CMat haar_bistochastic(int N, std::mt19937_64& rng);
CMat haar_hyperoctahedral(int N, std::mt19937_64& rng);  // Z_2 wr S_N
CMat haar_full_phased(int N, std::mt19937_64& rng);      // T wr S_N
CMat haar_group(IsoClass cls, int N, std::mt19937_64& rng);

/// rank-k partial isometry T = U · embed_k · V · restrict_k · W with Haar
/// factors on the class's groups; deterministic in (seed).
PartialIsometryMatrix sample(IsoClass cls, int N, int k, uint64_t seed);

/// chi_l = trace of the upper-left l x l corner
std::complex<double> truncated_character(const CMat& m, int l);

struct MonteCarloReport {
  long samples = 0;
  std::vector<std::complex<double>> moments;    // m_1..m_nmax of chi_l
  std::vector<double> std_errors;               // per moment
};

MonteCarloReport monte_carlo_law(IsoClass cls, int N, int k, int l,
                                 long samples, uint64_t seed, int n_max = 4,
                                 int threads = 1);

/// ||(U∘V)∘W - U∘(V∘W)||_inf
double associativity_residual(const PartialIsometryMatrix& U,
                              const PartialIsometryMatrix& V,
                              const PartialIsometryMatrix& W);

/// exact-embedding of a signed partial permutation (finite x)
CMat to_numeric_matrix(const SignedPartialPermutation& f);

}  // namespace qpi
