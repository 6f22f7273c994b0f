#include "qpi/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qpi/partial_maps.hpp"

namespace qpi {

void RationalMeasure::add(const CycInt& point, const Rational& w) {
  if (point.order() != x) throw parameter_error("atom order mismatch");
  auto it = atoms.find(point);
  if (it == atoms.end()) {
    if (w != 0) atoms.emplace(point, w);
    return;
  }
  it->second += w;
  if (it->second == 0) atoms.erase(it);
}

void RationalMeasure::add_integer(long point, const Rational& w) {
  add(CycInt::from_integer(x, Int(point)), w);
}

Rational RationalMeasure::weight(const CycInt& point) const {
  auto it = atoms.find(point);
  return it == atoms.end() ? Rational(0) : it->second;
}

Rational RationalMeasure::weight_at_integer(long point) const {
  return weight(CycInt::from_integer(x, Int(point)));
}

Rational RationalMeasure::total_weight() const {
  Rational s = 0;
  for (const auto& [_, w] : atoms) s += w;
  return s;
}

bool RationalMeasure::is_probability() const {
  if (exp_rate != 0) return false;
  for (const auto& [_, w] : atoms)
    if (w < 0) return false;
  return total_weight() == 1;
}

double RationalMeasure::normalization_factor() const {
  return exp_rate == 0 ? 1.0 : std::exp(-to_double(exp_rate));
}

RationalMeasure convolve(const RationalMeasure& a, const RationalMeasure& b) {
  if (a.x != b.x) throw parameter_error("convolve: atom lattices differ");
  if (a.exp_rate != 0 || b.exp_rate != 0)
    throw parameter_error("convolve: exact measures only");
  RationalMeasure r(a.x);
  for (const auto& [pa, wa] : a.atoms)
    for (const auto& [pb, wb] : b.atoms) r.add(pa + pb, wa * wb);
  return r;
}

Rational RationalMeasure::moment(int n) const {
  // atoms are rational integers exactly when phi(x) = 1, i.e. x = 1 or 2
  if (x != 1 && x != 2) throw parameter_error("moment: integer atoms required");
  Rational s = 0;
  for (const auto& [p, w] : atoms) {
    Rational v(p.coeffs()[0]);
    s += w * rpow(v, n);
  }
  return s;
}

CycRational RationalMeasure::star_moment(const ColoredWord& word) const {
  CycRational s(x);
  for (const auto& [p, w] : atoms) {
    CycRational term = CycRational::from_integer(x, w);
    CycRational v = to_cyc_rational(p);
    CycRational vc = v.conj();
    for (int e : word) term = term * (e == 1 ? v : vc);
    s += term;
  }
  return s;
}

RationalMeasure mu_formula(int N, int k, int l) {
  if (k < 0 || l < 0 || k > N || l > N)
    throw parameter_error("mu_formula: need 0 <= k,l <= N");
  RationalMeasure m(1);
  int qmax = std::min(k, l);
  for (int q = 0; q <= qmax; ++q) {
    Rational coeff = Rational(binomial(k, q) * binomial(l, q),
                              binomial(N, q) * binomial(N, q) * factorial(q));
    // (d1 - d0)^{*q} = sum_r (-1)^r C(q,r) d_{q-r}
    for (int r = 0; r <= q; ++r) {
      Rational w = coeff * Rational(binomial(q, r));
      if (r % 2 != 0) w = -w;
      m.add_integer(q - r, w);
    }
  }
  return m;
}

RationalMeasure mu_bruteforce(int N, int k, int l, long x) {
  if (k < 0 || l < 0 || k > N || l > N)
    throw parameter_error("mu_bruteforce: need 0 <= k,l <= N");
  if (x == kInfiniteOrder)
    throw guard_error("mu_bruteforce: infinite sign order is a continuum");
  Int total = count(N, x);
  if (total > 2000000)
    throw guard_error("mu_bruteforce: enumeration guard exceeded");
  Int slice = factorial(k) * binomial(N, k) * binomial(N, k) * ipow(Int(x), k);
  RationalMeasure m(x);
  Rational w = Rational(1, slice);
  enumerate(N, x, k, [&](const SignedPartialPermutation& s) {
    m.add(chi(s, l), w);
  });
  return m;
}

RationalMeasure sign_mixing(int N, int k, int l) {
  RationalMeasure base = mu_formula(N, k, l);
  RationalMeasure m(2);
  int pmax = std::min(k, l);
  for (int p = 0; p <= pmax; ++p) {
    Rational w = 0;
    for (int r = 0; p + 2 * r <= pmax; ++r) {
      Rational pr = base.weight_at_integer(p + 2 * r);
      if (pr == 0) continue;
      w += rpow(Rational(1, 2), p + 2 * r) * Rational(binomial(p + 2 * r, r)) *
           pr;
    }
    if (w == 0) continue;
    if (p == 0) {
      m.add_integer(0, w);
    } else {
      m.add_integer(p, w);
      m.add_integer(-p, w);
    }
  }
  return m;
}

RationalMeasure poisson_truncated(const Rational& t, int cutoff) {
  return bessel_truncated(1, t, cutoff);
}

RationalMeasure bessel_truncated(long x, const Rational& st, int cutoff) {
  if (cutoff < 0) throw parameter_error("cutoff must be >= 0");
  if (x < 1) throw parameter_error("x must be >= 1");
  RationalMeasure rho(x);
  for (long j = 0; j < x; ++j)
    rho.add(CycInt::root_power(x, j), Rational(1, x));
  RationalMeasure power(x);  // rho^{*n}, starts at delta_0
  power.add_integer(0, 1);
  RationalMeasure m(x);
  Rational coeff = 1;  // (st)^n / n!
  for (int n = 0; n <= cutoff; ++n) {
    for (const auto& [p, w] : power.atoms) m.add(p, coeff * w);
    power = convolve(power, rho);
    coeff *= st;
    coeff /= (n + 1);
  }
  m.exp_rate = st;
  return m;
}

double poisson_tail_bound(const Rational& t, int cutoff) {
  double td = to_double(t);
  double partial = 0, term = 1;
  for (int n = 0; n <= cutoff; ++n) {
    partial += term;
    term *= td / (n + 1);
  }
  double bound = 1.0 - std::exp(-td) * partial;
  return bound < 0 ? 0 : bound;
}

Rational partition_moment(const Category& cat, int n,
                          const std::optional<ColoredWord>& word,
                          const Rational& weight) {
  Rational s = 0;
  for (const auto& p : enumerate_partitions(n, cat, word))
    s += rpow(weight, p.num_blocks());
  return s;
}

namespace {

std::vector<Rational> cumulants(const std::vector<Rational>& moments,
                                int n_max, Lattice lattice) {
  if (static_cast<int>(moments.size()) < n_max)
    throw parameter_error("cumulants: missing moments");
  Category cat = lattice == Lattice::P ? Category::P() : Category::NC();
  std::vector<Rational> out;
  for (int n = 1; n <= n_max; ++n) {
    SetPartition one = SetPartition::full(n);
    Rational kn = 0;
    for (const auto& pi : enumerate_partitions(n, cat, std::nullopt)) {
      Rational prod(mobius(pi, one, lattice));
      for (const auto& b : pi.blocks())
        prod *= moments[b.size() - 1];
      kn += prod;
    }
    out.push_back(kn);
  }
  return out;
}

}  // namespace

std::vector<Rational> classical_cumulants(const std::vector<Rational>& moments,
                                          int n_max) {
  return cumulants(moments, n_max, Lattice::P);
}

std::vector<Rational> free_cumulants(const std::vector<Rational>& moments,
                                     int n_max) {
  return cumulants(moments, n_max, Lattice::NC);
}

BPReport bp_check(const std::vector<Rational>& classical_moments,
                  const std::vector<Rational>& free_moments, int n_max) {
  BPReport rep;
  rep.classical = classical_cumulants(classical_moments, n_max);
  rep.free = free_cumulants(free_moments, n_max);
  rep.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    if (rep.classical[static_cast<size_t>(n) - 1] !=
        rep.free[static_cast<size_t>(n) - 1]) {
      rep.pass = false;
      rep.first_fail = n;
      break;
    }
  }
  return rep;
}

double tv_to_poisson(const RationalMeasure& m, double t) {
  if (m.x != 1) throw parameter_error("tv_to_poisson: integer atoms required");
  double norm = m.normalization_factor();
  long pmax = 0;
  for (const auto& [p, _] : m.atoms)
    pmax = std::max(pmax, static_cast<long>(p.coeffs()[0]));
  pmax = std::max(pmax, 200L);
  double tv = 0;
  double pois = std::exp(-t);
  for (long p = 0; p <= pmax; ++p) {
    double mp = to_double(m.weight_at_integer(p)) * norm;
    tv += std::fabs(mp - pois);
    pois *= t / static_cast<double>(p + 1);
  }
  return tv / 2.0;
}

}  // namespace qpi
