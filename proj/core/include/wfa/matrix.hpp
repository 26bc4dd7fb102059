#pragma once

#include "wfa/semiring.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace wfa {

/// Tally of scalar semiring operations and of the temporary cells charged by
/// the block-star allocation schedule. Counts only grow during a run. A
/// counter belongs to one in-flight computation; concurrent computations need
/// separate counters (results themselves are freely shareable).
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t stars = 0;
  std::uint64_t temp_cells = 0;

  std::uint64_t total_ops() const { return adds + muls + stars; }
};

/// Dense row-major matrix over one semiring. Immutable in spirit: operations
/// return fresh matrices. 0x0 and 0xk shapes are allowed.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, SemiringId sid);  // zero-filled

  static Matrix identity(std::size_t n, SemiringId sid);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  SemiringId semiring() const { return sid_; }

  const Value& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Value v);

  bool is_zero() const;

  /// Copies out the r x c block whose top-left corner is (i0, j0).
  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  SemiringId sid_;
  std::vector<Value> entries_;
};

bool operator==(const Matrix& a, const Matrix& b);
inline bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

/// Builds a matrix from encoded entries (row-major), e.g.
/// make_matrix(SemiringId::rational, 2, 2, {"0", "1/2", "1/3", "0"}).
Matrix make_matrix(SemiringId sid, std::size_t rows, std::size_t cols,
                   std::initializer_list<std::string_view> entries);

enum class StarSide { right, left };
enum class MulKind { naive, strassen };

/// Entrywise sum. Counts rows*cols additions.
Matrix mat_add(const Matrix& a, const Matrix& b, OpCounter& ctr);

/// Schoolbook product. For (n x m)(m x p) counts n*m*p multiplications and
/// n*p*(m-1) additions.
Matrix mat_mul(const Matrix& a, const Matrix& b, OpCounter& ctr);

/// Strassen product for square matrices over a ring (subtraction required);
/// odd sizes are handled by dynamic peeling. 7 recursive products per level,
/// so the multiplication count grows as n^log2(7).
Matrix mat_mul_strassen(const Matrix& a, const Matrix& b, OpCounter& ctr);

/// Block-recursive star. For side == right the result N satisfies
/// MN (+) I = N; for side == left, NM (+) I = N. Splits even sizes into four
/// half blocks and odd sizes by dynamic peeling (scalar bottom-right block);
/// 1x1 delegates to star_scalar. Any undefined sub-star aborts the whole
/// computation (empty optional).
///
/// Per level the schedule performs exactly 4 recursive stars, 8 block
/// multiplications and 2 block additions, and charges temp_cells for three
/// scratch blocks per multiplication, which is what the counter tests key on.
/// mul selects the block-multiplication routine; MulKind::strassen is valid
/// on ring semirings only and changes the multiplication counts.
std::optional<Matrix> star_block(const Matrix& m, StarSide side, OpCounter& ctr,
                                 MulKind mul = MulKind::naive);

struct Nilpotence {
  bool nilpotent = false;
  std::size_t index = 0;  // least k with M^k = 0, when nilpotent
};

/// Nilpotence test by the length-n power criterion (M nilpotent iff M^n = 0).
Nilpotence is_nilpotent(const Matrix& m);

/// Star of a nilpotent matrix as the finite sum I + M + ... + M^(index-1).
/// Exact in every semiring. Throws usage_error when m is not nilpotent.
Matrix star_nilpotent(const Matrix& m, OpCounter& ctr);

struct IterativeStar {
  Matrix star;
  std::size_t stationary_at;  // first N with S_(N+1) = S_N
};

/// Partial power sums S_(k+1) = I (+) M*S_k, returned at exact stationarity.
/// Stationarity is permanent once two consecutive sums coincide, so the
/// result is the summed star. Empty optional after max_iter steps
/// (not-stationary is an ordinary outcome: over the rationals the sums for
/// [[2]] grow forever even though the equation star -1 exists).
std::optional<IterativeStar> star_iterative_detail(const Matrix& m, std::size_t max_iter);
std::optional<Matrix> star_iterative(const Matrix& m, std::size_t max_iter);

// Counter-discarding conveniences.
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::optional<Matrix> star_block(const Matrix& m, StarSide side);

}  // namespace wfa
