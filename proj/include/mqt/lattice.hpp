#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

namespace mqt {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

/// Row operations mirrored onto whatever the rows stand for.
struct RowOps {
  std::function<void(std::size_t, std::size_t)> swap;
  /// row i -= c * row j
  std::function<void(std::size_t, std::size_t, const mpz_class&)> submul;
  std::function<void(std::size_t)> negate;
};

/// Row Hermite normal form in place. Returns the rank; rows past it are zero.
/// With reduce_above, entries above each pivot are reduced into [0, pivot).
std::size_t hermite_rows(ZMatrix& m, const RowOps& ops = {}, bool reduce_above = true);

mpq_class determinant(QMatrix m);

/// Solve x * A = b for a square nonsingular A.
std::optional<std::vector<mpq_class>> solve_left(const QMatrix& a, const std::vector<mpq_class>& b);

/// Scale every row by the lcm of all denominators.
ZMatrix clear_denominators(const QMatrix& m, mpz_class* scale = nullptr);

/// Do the rows of a and b generate the same Z-lattice?
bool same_lattice(const QMatrix& a, const QMatrix& b);

}  // namespace mqt
