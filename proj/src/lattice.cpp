#include "mqt/lattice.hpp"

#include <stdexcept>

namespace mqt {

std::size_t hermite_rows(ZMatrix& m, const RowOps& ops, bool reduce_above) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  auto do_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    if (ops.swap) ops.swap(i, j);
  };
  auto do_submul = [&](std::size_t i, std::size_t j, const mpz_class& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols; ++k) m[i][k] -= c * m[j][k];
    if (ops.submul) ops.submul(i, j, c);
  };
  auto do_negate = [&](std::size_t i) {
    for (auto& v : m[i]) v = -v;
    if (ops.negate) ops.negate(i);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // Smallest nonzero |entry| in column c among rows r.. becomes the pivot.
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        if (piv == rows || abs(m[i][c]) < abs(m[piv][c])) piv = i;
      }
      if (piv == rows) break;
      do_swap(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        do_submul(i, r, q);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) do_negate(r);
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        do_submul(i, r, q);
      }
    }
    ++r;
  }
  return r;
}

mpq_class determinant(QMatrix m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<std::vector<mpq_class>> solve_left(const QMatrix& a, const std::vector<mpq_class>& b) {
  // x A = b  <=>  A^T x^T = b^T
  const std::size_t n = a.size();
  QMatrix aug(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[j][i];
    aug[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      mpq_class f = aug[i][c] / aug[c][c];
      for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[c][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

ZMatrix clear_denominators(const QMatrix& m, mpz_class* scale) {
  mpz_class d = 1;
  for (const auto& row : m)
    for (const auto& v : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  ZMatrix out;
  for (const auto& row : m) {
    std::vector<mpz_class> r;
    for (const auto& v : row) r.push_back(v.get_num() * (d / v.get_den()));
    out.push_back(std::move(r));
  }
  if (scale) *scale = d;
  return out;
}

bool same_lattice(const QMatrix& a, const QMatrix& b) {
  QMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  mpz_class d;
  ZMatrix z = clear_denominators(both, &d);
  ZMatrix za(z.begin(), z.begin() + a.size()), zb(z.begin() + a.size(), z.end());
  std::size_t ra = hermite_rows(za), rb = hermite_rows(zb);
  if (ra != rb) return false;
  za.resize(ra);
  zb.resize(rb);
  return za == zb;
}

}  // namespace mqt
