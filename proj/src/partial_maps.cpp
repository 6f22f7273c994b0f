#include "qpi/partial_maps.hpp"

#include <algorithm>
#include <numeric>

namespace qpi {

PartialPermutation::PartialPermutation(int n_, std::vector<int> map_)
    : n(n_), map(std::move(map_)) {
  if (n < 0 || map.size() != static_cast<size_t>(n))
    throw parameter_error("map length must equal n");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int t : map) {
    if (t < 0 || t > n) throw parameter_error("target out of range");
    if (t != 0) {
      if (seen[static_cast<size_t>(t)])
        throw parameter_error("targets must be distinct");
      seen[static_cast<size_t>(t)] = 1;
    }
  }
}

PartialPermutation PartialPermutation::identity(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  return PartialPermutation(n, std::move(m));
}

PartialPermutation PartialPermutation::null(int n) {
  return PartialPermutation(n, std::vector<int>(static_cast<size_t>(n), 0));
}

int PartialPermutation::rank() const {
  int k = 0;
  for (int t : map) k += (t != 0);
  return k;
}

std::vector<int> PartialPermutation::domain() const {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (defined_at(i)) d.push_back(i);
  return d;
}

std::vector<int> PartialPermutation::range() const {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i)
    if (defined_at(i)) r.push_back(map[i - 1]);
  std::sort(r.begin(), r.end());
  return r;
}

PartialPermutation PartialPermutation::inverse() const {
  std::vector<int> m(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    if (defined_at(i)) m[static_cast<size_t>(map[i - 1]) - 1] = i;
  return PartialPermutation(n, std::move(m));
}

PartialPermutation compose(const PartialPermutation& f,
                           const PartialPermutation& g) {
  if (f.n != g.n) throw dimension_error("compose: ambient sizes differ");
  std::vector<int> m(static_cast<size_t>(f.n), 0);
  for (int i = 1; i <= g.n; ++i) {
    int t = g.map[i - 1];
    if (t != 0 && f.defined_at(t)) m[i - 1] = f.map[t - 1];
  }
  return PartialPermutation(f.n, std::move(m));
}

namespace {

Rational angle_mod1(Rational a) {
  Int num = boost::multiprecision::numerator(a);
  Int den = boost::multiprecision::denominator(a);
  Int r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

void validate_signs(const SignedPartialPermutation& f) {
  if (f.signs.size() != static_cast<size_t>(f.base.n))
    throw parameter_error("signs length must equal n");
  for (int i = 1; i <= f.base.n; ++i) {
    const Rational& a = f.signs[i - 1];
    if (!f.base.defined_at(i)) {
      if (a != 0) throw parameter_error("sign defined outside the domain");
      continue;
    }
    if (a < 0 || a >= 1) throw parameter_error("sign angle not in [0,1)");
    if (f.x != kInfiniteOrder &&
        boost::multiprecision::denominator(Rational(a * f.x)) != 1)
      throw parameter_error("sign is not an x-th root of unity");
  }
}

}  // namespace

SignedPartialPermutation::SignedPartialPermutation(PartialPermutation base_,
                                                   long x_,
                                                   std::vector<Rational> signs_)
    : base(std::move(base_)), x(x_), signs(std::move(signs_)) {
  if (x < 0) throw parameter_error("x must be positive or infinite");
  validate_signs(*this);
}

SignedPartialPermutation::SignedPartialPermutation(PartialPermutation base_,
                                                   long x_)
    : base(std::move(base_)),
      x(x_),
      signs(static_cast<size_t>(base.n), Rational(0)) {
  if (x < 0) throw parameter_error("x must be positive or infinite");
  validate_signs(*this);
}

SignedPartialPermutation SignedPartialPermutation::identity(int n, long x) {
  return SignedPartialPermutation(PartialPermutation::identity(n), x);
}

SignedPartialPermutation SignedPartialPermutation::null(int n, long x) {
  return SignedPartialPermutation(PartialPermutation::null(n), x);
}

long SignedPartialPermutation::residue_at(int i) const {
  if (x == kInfiniteOrder)
    throw parameter_error("residue undefined for infinite sign order");
  Rational v = signs[i - 1] * x;
  return static_cast<long>(boost::multiprecision::numerator(v));
}

SignedPartialPermutation compose_signed(const SignedPartialPermutation& f,
                                        const SignedPartialPermutation& g) {
  if (f.x != g.x) throw parameter_error("compose_signed: sign orders differ");
  PartialPermutation b = compose(f.base, g.base);
  std::vector<Rational> s(static_cast<size_t>(b.n), Rational(0));
  for (int i = 1; i <= b.n; ++i)
    if (b.defined_at(i))
      s[i - 1] =
          angle_mod1(g.signs[i - 1] + f.signs[g.base.map[i - 1] - 1]);
  return SignedPartialPermutation(std::move(b), f.x, std::move(s));
}

Int count(int N, long x) {
  if (N < 0 || x < 1) throw parameter_error("count: need N >= 0, x >= 1");
  Int total = 0;
  for (int k = 0; k <= N; ++k)
    total += factorial(k) * binomial(N, k) * binomial(N, k) * ipow(Int(x), k);
  return total;
}

void enumerate(int N, long x, std::optional<int> k,
               const std::function<void(const SignedPartialPermutation&)>& f) {
  if (x == kInfiniteOrder)
    throw guard_error("enumerate: infinite sign order is a continuum");
  if (N < 0 || x < 1) throw parameter_error("enumerate: bad parameters");
  if (k && (*k < 0 || *k > N)) throw parameter_error("enumerate: bad rank");

  auto subsets_colex = [N](int sz) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
      if (__builtin_popcount(mask) != sz) continue;
      std::vector<int> s;
      for (int i = 0; i < N; ++i)
        if (mask & (1u << i)) s.push_back(i + 1);
      out.push_back(std::move(s));
    }
    return out;  // increasing bitmask value == colex order
  };

  int klo = k ? *k : 0, khi = k ? *k : N;
  for (int rank = klo; rank <= khi; ++rank) {
    auto doms = subsets_colex(rank);
    auto rans = subsets_colex(rank);
    for (const auto& dom : doms) {
      for (const auto& ran : rans) {
        std::vector<int> images = ran;  // sorted -> lexicographic start
        do {
          std::vector<int> m(static_cast<size_t>(N), 0);
          for (int j = 0; j < rank; ++j)
            m[static_cast<size_t>(dom[j]) - 1] = images[static_cast<size_t>(j)];
          PartialPermutation base(N, std::move(m));
          // base-x counter over the sorted domain, last point fastest
          Int nsign = ipow(Int(x), rank);
          for (Int c = 0; c < nsign; ++c) {
            std::vector<Rational> signs(static_cast<size_t>(N), Rational(0));
            Int rem = c;
            for (int j = rank - 1; j >= 0; --j) {
              signs[static_cast<size_t>(dom[j]) - 1] =
                  Rational(rem % x, x);
              rem /= x;
            }
            f(SignedPartialPermutation(base, x, std::move(signs)));
          }
        } while (std::next_permutation(images.begin(), images.end()));
      }
    }
  }
}

std::vector<SignedPartialPermutation> enumerate(int N, long x,
                                                std::optional<int> k) {
  std::vector<SignedPartialPermutation> out;
  enumerate(N, x, k,
            [&](const SignedPartialPermutation& s) { out.push_back(s); });
  return out;
}

std::vector<std::vector<CycInt>> to_matrix(const SignedPartialPermutation& f) {
  if (f.x == kInfiniteOrder)
    throw parameter_error("to_matrix: finite sign order required");
  int n = f.base.n;
  std::vector<std::vector<CycInt>> u(
      static_cast<size_t>(n),
      std::vector<CycInt>(static_cast<size_t>(n), CycInt(f.x)));
  for (int j = 1; j <= n; ++j)
    if (f.base.defined_at(j))
      u[static_cast<size_t>(f.base.map[j - 1]) - 1][static_cast<size_t>(j) - 1] =
          CycInt::root_power(f.x, f.residue_at(j));
  return u;
}

std::vector<int> embed_s2n(const PartialPermutation& f) {
  int N = f.n;
  std::vector<int> xc, yc;
  std::vector<char> in_range(static_cast<size_t>(N) + 1, 0);
  for (int i = 1; i <= N; ++i)
    if (f.defined_at(i)) in_range[static_cast<size_t>(f.map[i - 1])] = 1;
  for (int i = 1; i <= N; ++i) {
    if (!f.defined_at(i)) xc.push_back(i);
    if (!in_range[static_cast<size_t>(i)]) yc.push_back(i);
  }
  int L = static_cast<int>(xc.size());
  std::vector<int> out(static_cast<size_t>(2 * N));
  for (int i = 1; i <= 2 * N; ++i) out[static_cast<size_t>(i) - 1] = i;
  for (int i = 1; i <= N; ++i)
    if (f.defined_at(i)) out[static_cast<size_t>(i) - 1] = f.map[i - 1];
  for (int r = 1; r <= L; ++r) {
    out[static_cast<size_t>(xc[static_cast<size_t>(r) - 1]) - 1] = N + r;
    out[static_cast<size_t>(N + r) - 1] = yc[static_cast<size_t>(r) - 1];
  }
  return out;
}

int kappa(const PartialPermutation& f) { return f.rank(); }

CycInt chi(const SignedPartialPermutation& f, int l) {
  if (f.x == kInfiniteOrder)
    throw parameter_error("chi: finite sign order required");
  if (l < 0 || l > f.base.n) throw parameter_error("chi: bad truncation");
  CycInt total(f.x);
  for (int i = 1; i <= l; ++i)
    if (f.base.defined_at(i) && f.base.map[i - 1] == i)
      total += CycInt::root_power(f.x, f.residue_at(i));
  return total;
}

int chi(const PartialPermutation& f, int l) {
  if (l < 0 || l > f.n) throw parameter_error("chi: bad truncation");
  int c = 0;
  for (int i = 1; i <= l; ++i)
    if (f.defined_at(i) && f.map[i - 1] == i) ++c;
  return c;
}

}  // namespace qpi
