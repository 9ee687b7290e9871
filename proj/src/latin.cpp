#include "sqcc/latin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "sqcc/error.hpp"

namespace sqcc {

int smallest_divisor(int n) {
  if (n < 2) throw InvalidParameter("smallest_divisor needs n >= 2, got " + std::to_string(n));
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool is_prime(int n) { return n >= 2 && smallest_divisor(n) == n; }

void require_odd_prime(int n) {
  if (n < 3) throw InvalidParameter("order must be a prime >= 3, got " + std::to_string(n));
  const int d = smallest_divisor(n);
  if (d != n)
    throw InvalidParameter("order must be prime, got " + std::to_string(n) +
                           " (divisible by " + std::to_string(d) + ")");
}

LatinSquare::LatinSquare(Eigen::MatrixXi entries) : entries_(std::move(entries)) {
  if (!is_latin(entries_)) throw InvalidInput("array is not a Latin square");
}

bool is_latin(const Eigen::MatrixXi& a) {
  if (a.rows() != a.cols()) throw InvalidInput("Latin square candidate is not square");
  const auto n = a.rows();
  if (n == 0) throw InvalidInput("Latin square candidate is empty");
  if ((a.array() < 1).any() || (a.array() > n).any())
    throw InvalidInput("entry outside 1.." + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1);
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index line = 0; line < n; ++line) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Eigen::Index t = 0; t < n; ++t) {
        const int x = pass == 0 ? a(line, t) : a(t, line);
        if (seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
      }
    }
  }
  return true;
}

bool is_latin(const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXi a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw InvalidInput("ragged array: row " + std::to_string(r + 1) + " has " +
                         std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = row[static_cast<std::size_t>(c)];
  }
  return is_latin(a);
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  const int n = a.order();
  if (b.order() != n)
    throw InvalidInput("orthogonality needs equal orders, got " + std::to_string(n) + " and " +
                       std::to_string(b.order()));
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const auto slot = static_cast<std::size_t>((a(j, k) - 1) * n + (b(j, k) - 1));
      if (seen[slot]) return false;
      seen[slot] = 1;
    }
  }
  return true;
}

LatinSquare build_latin(int n, int i) {
  require_odd_prime(n);
  if (i < 1 || i > n - 1)
    throw InvalidParameter("multiplier must lie in 1.." + std::to_string(n - 1) + ", got " +
                           std::to_string(i));
  Eigen::MatrixXi e(n, n);
  // residues 0..n-1 internally; residue 0 is displayed as n
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      const int r = (j + i * (k - 1)) % n;
      e(j - 1, k - 1) = r == 0 ? n : r;
    }
  return LatinSquare(std::move(e));
}

MolsFamily build_mols_family(int n) {
  require_odd_prime(n);
  MolsFamily family{n, {}};
  family.squares.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) family.squares.push_back(build_latin(n, i));
  for (std::size_t a = 0; a < family.squares.size(); ++a)
    for (std::size_t b = a + 1; b < family.squares.size(); ++b)
      if (!are_orthogonal(family.squares[a], family.squares[b]))
        throw std::logic_error("squares " + std::to_string(a + 1) + " and " +
                               std::to_string(b + 1) + " are not orthogonal");
  return family;
}

}  // namespace sqcc
