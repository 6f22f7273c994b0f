#include "qpi/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace qpi {

namespace {

// exact division of integer polynomials, num = den * quot, den monic
std::vector<Int> poly_divide(const std::vector<Int>& num,
                             const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (size_t j = rem.size(); j-- >= den.size();) {
    Int q = rem[j];
    size_t shift = j - (den.size() - 1);
    quot[shift] = q;
    if (q != 0)
      for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= q * den[i];
    if (j == den.size() - 1) break;
  }
  return quot;
}

std::vector<Int> compute_phi(long x,
                             std::map<long, std::vector<Int>>& cache);

std::vector<Int> compute_phi(long x,
                             std::map<long, std::vector<Int>>& cache) {
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  // x^x - 1 divided by the product of Phi_d over proper divisors d
  std::vector<Int> num(static_cast<size_t>(x) + 1, Int(0));
  num[0] = -1;
  num[static_cast<size_t>(x)] = 1;
  for (long d = 1; d < x; ++d) {
    if (x % d != 0) continue;
    num = poly_divide(num, compute_phi(d, cache));
  }
  cache[x] = num;
  return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long x) {
  if (x < 1) throw parameter_error("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  compute_phi(x, cache);
  return cache.at(x);
}

}  // namespace qpi
