#ifndef SQCC_LATIN_HPP
#define SQCC_LATIN_HPP

#include <vector>

#include <Eigen/Dense>

namespace sqcc {

bool is_prime(int n);
// Smallest divisor > 1; n itself when n is prime. Requires n >= 2.
int smallest_divisor(int n);

// Throws InvalidParameter naming the smallest divisor when n is not a prime >= 3.
void require_odd_prime(int n);

/// n x n array over {1..n}. Rows and columns are 1-based in the accessor,
/// matching the printed squares: square(j, k) is row j, column k.
class LatinSquare {
 public:
  // Validates the Latin property; throws InvalidInput otherwise.
  explicit LatinSquare(Eigen::MatrixXi entries);

  int order() const noexcept { return static_cast<int>(entries_.rows()); }
  int operator()(int row, int col) const { return entries_(row - 1, col - 1); }
  const Eigen::MatrixXi& entries() const noexcept { return entries_; }

  friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Eigen::MatrixXi entries_;
};

struct MolsFamily {
  int order = 0;
  std::vector<LatinSquare> squares;  // squares[i-1] is the square of multiplier i

  const LatinSquare& operator[](int i) const { return squares.at(static_cast<std::size_t>(i - 1)); }
};

/// Entry (j, k) is j + i(k-1) reduced mod n, represented in {1..n}.
LatinSquare build_latin(int n, int i);

/// Row/column permutation check. Entries outside {1..n} or a non-square
/// (or ragged) array throw InvalidInput.
bool is_latin(const Eigen::MatrixXi& a);
bool is_latin(const std::vector<std::vector<int>>& rows);

/// True iff the n^2 superimposed pairs are pairwise distinct.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// The n-1 squares build_latin(n, 1..n-1), checked Latin and pairwise orthogonal.
MolsFamily build_mols_family(int n);

}  // namespace sqcc

#endif  // SQCC_LATIN_HPP
