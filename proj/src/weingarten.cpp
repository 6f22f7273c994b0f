#include "qpi/weingarten.hpp"

#include <algorithm>

namespace qpi {

std::vector<std::vector<Rational>> invert_rational(
    std::vector<std::vector<Rational>> a) {
  const size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, 0));
  for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < m; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

WeingartenTable build_table(int n, long N, const Category& cat,
                            const std::optional<ColoredWord>& word) {
  WeingartenTable t;
  t.n = n;
  t.N = N;
  t.cat = cat;
  t.word = word;
  t.basis = enumerate_partitions(n, cat, word);
  if (t.basis.empty())
    throw parameter_error("build_table: empty partition basis for " +
                          cat.name() + " at n=" + std::to_string(n));
  const size_t m = t.basis.size();
  t.gram.assign(m, std::vector<Int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      Int g = ipow(Int(N), join(t.basis[i], t.basis[j]).num_blocks());
      t.gram[i][j] = g;
      t.gram[j][i] = g;
    }
  std::vector<std::vector<Rational>> gr(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) gr[i][j] = Rational(t.gram[i][j]);
  try {
    t.wg = invert_rational(std::move(gr));
  } catch (const std::runtime_error&) {
    throw singular_gram_error(n, N, cat.name());
  }
  return t;
}

namespace {

SetPartition kernel(const std::vector<int>& idx) {
  std::vector<int> raw(idx.size());
  std::vector<int> first;
  for (size_t a = 0; a < idx.size(); ++a) {
    size_t b = 0;
    while (b < a && idx[b] != idx[a]) ++b;
    raw[a] = (b == a) ? static_cast<int>(a) : raw[b];
  }
  return SetPartition(static_cast<int>(idx.size()), std::move(raw));
}

// l^{|p v q|} table over the basis
std::vector<std::vector<Rational>> overlay(
    const std::vector<SetPartition>& basis, long l) {
  const size_t m = basis.size();
  std::vector<std::vector<Rational>> ov(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      Rational v(ipow(Int(l), join(basis[i], basis[j]).num_blocks()));
      ov[i][j] = v;
      ov[j][i] = v;
    }
  return ov;
}

}  // namespace

Rational integrate_word(const WeingartenTable& table,
                        const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.size() != static_cast<size_t>(table.n) ||
      cols.size() != static_cast<size_t>(table.n))
    throw parameter_error("integrate_word: index tuples must have length n");
  SetPartition ker_i = kernel(rows);
  SetPartition ker_j = kernel(cols);
  Rational s = 0;
  const size_t m = table.basis.size();
  for (size_t a = 0; a < m; ++a) {
    if (!refines(table.basis[a], ker_i)) continue;
    for (size_t b = 0; b < m; ++b) {
      if (!refines(table.basis[b], ker_j)) continue;
      s += table.wg[a][b];
    }
  }
  return s;
}

Rational single_group_moment(int n, long N, int l, const Category& cat,
                             const std::optional<ColoredWord>& word) {
  auto basis_probe = enumerate_partitions(n, cat, word);
  if (basis_probe.empty()) return 0;
  WeingartenTable t = build_table(n, N, cat, word);
  auto ov = overlay(t.basis, l);
  Rational s = 0;
  for (size_t a = 0; a < t.basis.size(); ++a)
    for (size_t b = 0; b < t.basis.size(); ++b) s += t.wg[a][b] * ov[a][b];
  return s;
}

Rational triple_moment(int n, long N, long k, int l, const Category& cat,
                       const std::optional<ColoredWord>& word) {
  auto basis_probe = enumerate_partitions(n, cat, word);
  if (basis_probe.empty()) return 0;
  WeingartenTable tN = build_table(n, N, cat, word);
  const size_t m = tN.basis.size();
  auto gk = overlay(tN.basis, k);  // inner Gram k^{|b v c|}, no inverse needed
  // M = W_N * G_k * W_N
  std::vector<std::vector<Rational>> tmp(m, std::vector<Rational>(m, 0));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      if (tN.wg[a][b] == 0) continue;
      for (size_t c = 0; c < m; ++c)
        tmp[a][c] += tN.wg[a][b] * gk[b][c];
    }
  auto ov = overlay(tN.basis, l);
  Rational s = 0;
  for (size_t a = 0; a < m; ++a)
    for (size_t c = 0; c < m; ++c) {
      if (tmp[a][c] == 0) continue;
      for (size_t r = 0; r < m; ++r)
        s += tmp[a][c] * tN.wg[c][r] * ov[a][r];
    }
  return s;
}

Rational classical_triple_moment(int n, long N, long k, int l,
                                 const Category& cat,
                                 const std::optional<ColoredWord>& word) {
  if (!cat.crossing_allowed())
    throw parameter_error("classical_triple_moment: classical category required");
  return triple_moment(n, N, k, l, cat, word);
}

Rational triple_moment_naive(int n, long N, long k, int l, const Category& cat,
                             const std::optional<ColoredWord>& word) {
  auto basis_probe = enumerate_partitions(n, cat, word);
  if (basis_probe.empty()) return 0;
  WeingartenTable tN = build_table(n, N, cat, word);
  WeingartenTable tk = build_table(n, k, cat, word);
  const size_t m = tN.basis.size();
  auto ov_l = overlay(tN.basis, l);
  auto ov_k = overlay(tN.basis, k);
  Rational s = 0;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t g = 0; g < m; ++g)
        for (size_t d = 0; d < m; ++d)
          for (size_t e = 0; e < m; ++e)
            for (size_t r = 0; r < m; ++r)
              s += tN.wg[a][b] * tk.wg[g][d] * tN.wg[e][r] * ov_l[a][r] *
                   ov_k[b][g] * ov_k[d][e];
  return s;
}

}  // namespace qpi
