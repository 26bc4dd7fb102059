#include "wfa/matrix.hpp"

#include <cassert>
#include <utility>

namespace wfa {

namespace {

void require_same_semiring(const Matrix& a, const Matrix& b, const char* op) {
  if (a.semiring() != b.semiring()) {
    throw usage_error(std::string(op) + ": mixed-semiring operands");
  }
}

std::uint64_t cells(const Matrix& m) {
  return static_cast<std::uint64_t>(m.rows()) * m.cols();
}

// Additive inverse; only rings have one.
Value negate(const Value& v) {
  if (v.semiring() != SemiringId::rational) {
    throw usage_error("negate: semiring is not a ring");
  }
  return Value::rational(mpq_class(-v.numeric()));
}

Matrix mat_sub(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  require_same_semiring(a, b, "mat_sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw usage_error("mat_sub: shape mismatch");
  }
  Matrix out(a.rows(), a.cols(), a.semiring());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, add(a.at(i, j), negate(b.at(i, j))));
    }
  }
  ctr.adds += cells(a);
  return out;
}

void paste(Matrix& dst, std::size_t i0, std::size_t j0, const Matrix& src) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) {
      dst.set(i0 + i, j0 + j, src.at(i, j));
    }
  }
}

Matrix strassen_rec(const Matrix& a, const Matrix& b, OpCounter& ctr);

// Peels the last row/column off an odd-sized square product: the big
// (n-1)x(n-1) corner keeps the fast recursion, the thin strips go naive.
Matrix strassen_peel(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  const std::size_t n = a.rows();
  const std::size_t p = n - 1;
  Matrix a11 = a.block(0, 0, p, p), a12 = a.block(0, p, p, 1);
  Matrix a21 = a.block(p, 0, 1, p), a22 = a.block(p, p, 1, 1);
  Matrix b11 = b.block(0, 0, p, p), b12 = b.block(0, p, p, 1);
  Matrix b21 = b.block(p, 0, 1, p), b22 = b.block(p, p, 1, 1);

  Matrix out(n, n, a.semiring());
  paste(out, 0, 0, mat_add(strassen_rec(a11, b11, ctr), mat_mul(a12, b21, ctr), ctr));
  paste(out, 0, p, mat_add(mat_mul(a11, b12, ctr), mat_mul(a12, b22, ctr), ctr));
  paste(out, p, 0, mat_add(mat_mul(a21, b11, ctr), mat_mul(a22, b21, ctr), ctr));
  paste(out, p, p, mat_add(mat_mul(a21, b12, ctr), mat_mul(a22, b22, ctr), ctr));
  return out;
}

Matrix strassen_rec(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  const std::size_t n = a.rows();
  if (n <= 1) return mat_mul(a, b, ctr);
  if (n % 2 != 0) return strassen_peel(a, b, ctr);

  const std::size_t h = n / 2;
  Matrix a11 = a.block(0, 0, h, h), a12 = a.block(0, h, h, h);
  Matrix a21 = a.block(h, 0, h, h), a22 = a.block(h, h, h, h);
  Matrix b11 = b.block(0, 0, h, h), b12 = b.block(0, h, h, h);
  Matrix b21 = b.block(h, 0, h, h), b22 = b.block(h, h, h, h);

  Matrix m1 = strassen_rec(mat_add(a11, a22, ctr), mat_add(b11, b22, ctr), ctr);
  Matrix m2 = strassen_rec(mat_add(a21, a22, ctr), b11, ctr);
  Matrix m3 = strassen_rec(a11, mat_sub(b12, b22, ctr), ctr);
  Matrix m4 = strassen_rec(a22, mat_sub(b21, b11, ctr), ctr);
  Matrix m5 = strassen_rec(mat_add(a11, a12, ctr), b22, ctr);
  Matrix m6 = strassen_rec(mat_sub(a21, a11, ctr), mat_add(b11, b12, ctr), ctr);
  Matrix m7 = strassen_rec(mat_sub(a12, a22, ctr), mat_add(b21, b22, ctr), ctr);

  Matrix out(n, n, a.semiring());
  paste(out, 0, 0, mat_add(mat_sub(mat_add(m1, m4, ctr), m5, ctr), m7, ctr));
  paste(out, 0, h, mat_add(m3, m5, ctr));
  paste(out, h, 0, mat_add(m2, m4, ctr));
  paste(out, h, h, mat_add(mat_sub(mat_add(m1, m3, ctr), m2, ctr), m6, ctr));
  return out;
}

// One block multiplication of the star schedule: charges the three scratch
// blocks (both operands and the product) to the space tally, then multiplies.
Matrix scheduled_mul(const Matrix& a, const Matrix& b, OpCounter& ctr, MulKind mul) {
  ctr.temp_cells += cells(a) + cells(b) +
                    static_cast<std::uint64_t>(a.rows()) * b.cols();
  if (mul == MulKind::strassen && a.rows() == a.cols() && b.rows() == b.cols() &&
      a.rows() == b.rows()) {
    return mat_mul_strassen(a, b, ctr);
  }
  return mat_mul(a, b, ctr);
}

std::optional<Matrix> star_block_rec(const Matrix& m, StarSide side, OpCounter& ctr,
                                     MulKind mul) {
  const std::size_t n = m.rows();
  if (n == 0) return m;
  if (n == 1) {
    ctr.stars += 1;
    ctr.temp_cells += 1;
    auto s = star_scalar(m.at(0, 0));
    if (!s) return std::nullopt;
    Matrix out(1, 1, m.semiring());
    out.set(0, 0, *s);
    return out;
  }

  const std::size_t p = (n % 2 == 0) ? n / 2 : n - 1;
  const std::size_t q = n - p;
  Matrix a11 = m.block(0, 0, p, p), a12 = m.block(0, p, p, q);
  Matrix a21 = m.block(p, 0, q, p), a22 = m.block(p, p, q, q);

  auto s22 = star_block_rec(a22, side, ctr, mul);
  if (!s22) return std::nullopt;
  auto s11 = star_block_rec(a11, side, ctr, mul);
  if (!s11) return std::nullopt;

  std::optional<Matrix> c11, c22;
  Matrix out(n, n, m.semiring());

  if (side == StarSide::right) {
    Matrix t1 = scheduled_mul(*s22, a21, ctr, mul);
    Matrix t2 = scheduled_mul(a12, t1, ctr, mul);
    c11 = star_block_rec(mat_add(a11, t2, ctr), side, ctr, mul);
    if (!c11) return std::nullopt;
    Matrix t3 = scheduled_mul(*s11, a12, ctr, mul);
    Matrix t4 = scheduled_mul(a21, t3, ctr, mul);
    c22 = star_block_rec(mat_add(a22, t4, ctr), side, ctr, mul);
    if (!c22) return std::nullopt;
    Matrix t5 = scheduled_mul(*s11, a12, ctr, mul);
    paste(out, 0, p, scheduled_mul(t5, *c22, ctr, mul));
    Matrix t6 = scheduled_mul(*s22, a21, ctr, mul);
    paste(out, p, 0, scheduled_mul(t6, *c11, ctr, mul));
  } else {
    Matrix t1 = scheduled_mul(a12, *s22, ctr, mul);
    Matrix t2 = scheduled_mul(t1, a21, ctr, mul);
    c11 = star_block_rec(mat_add(a11, t2, ctr), side, ctr, mul);
    if (!c11) return std::nullopt;
    Matrix t3 = scheduled_mul(a21, *s11, ctr, mul);
    Matrix t4 = scheduled_mul(t3, a12, ctr, mul);
    c22 = star_block_rec(mat_add(a22, t4, ctr), side, ctr, mul);
    if (!c22) return std::nullopt;
    Matrix u1 = scheduled_mul(*c11, a12, ctr, mul);
    paste(out, 0, p, scheduled_mul(u1, *s22, ctr, mul));
    Matrix u2 = scheduled_mul(*c22, a21, ctr, mul);
    paste(out, p, 0, scheduled_mul(u2, *s11, ctr, mul));
  }

  paste(out, 0, 0, *c11);
  paste(out, p, p, *c22);
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, SemiringId sid)
    : rows_(rows), cols_(cols), sid_(sid), entries_(rows * cols, Value::zero(sid)) {}

Matrix Matrix::identity(std::size_t n, SemiringId sid) {
  Matrix out(n, n, sid);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, Value::one(sid));
  return out;
}

void Matrix::set(std::size_t i, std::size_t j, Value v) {
  assert(i < rows_ && j < cols_);
  if (v.semiring() != sid_) throw usage_error("Matrix::set: mixed-semiring entry");
  entries_[i * cols_ + j] = std::move(v);
}

bool Matrix::is_zero() const {
  for (const Value& v : entries_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  assert(i0 + r <= rows_ && j0 + c <= cols_);
  Matrix out(r, c, sid_);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      out.set(i, j, at(i0 + i, j0 + j));
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.semiring() != b.semiring() || a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!eq(a.at(i, j), b.at(i, j))) return false;
    }
  }
  return true;
}

Matrix make_matrix(SemiringId sid, std::size_t rows, std::size_t cols,
                   std::initializer_list<std::string_view> entries) {
  if (entries.size() != rows * cols) {
    throw usage_error("make_matrix: entry count does not match shape");
  }
  Matrix out(rows, cols, sid);
  std::size_t k = 0;
  for (std::string_view text : entries) {
    out.set(k / cols, k % cols, parse_value(sid, std::string(text)));
    ++k;
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  require_same_semiring(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw usage_error("mat_add: shape mismatch");
  }
  Matrix out(a.rows(), a.cols(), a.semiring());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, add(a.at(i, j), b.at(i, j)));
    }
  }
  ctr.adds += cells(a);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  require_same_semiring(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw usage_error("mat_mul: shape mismatch");
  const std::size_t inner = a.cols();
  Matrix out(a.rows(), b.cols(), a.semiring());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (inner == 0) continue;  // empty sum stays 0
      Value acc = mul(a.at(i, 0), b.at(0, j));
      for (std::size_t k = 1; k < inner; ++k) {
        acc = add(acc, mul(a.at(i, k), b.at(k, j)));
      }
      out.set(i, j, std::move(acc));
    }
  }
  if (inner > 0) {
    ctr.muls += static_cast<std::uint64_t>(a.rows()) * inner * b.cols();
    ctr.adds += static_cast<std::uint64_t>(a.rows()) * b.cols() * (inner - 1);
  }
  return out;
}

Matrix mat_mul_strassen(const Matrix& a, const Matrix& b, OpCounter& ctr) {
  require_same_semiring(a, b, "mat_mul_strassen");
  if (!descriptor(a.semiring()).is_ring) {
    throw usage_error("mat_mul_strassen: semiring is not a ring (no subtraction)");
  }
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw usage_error("mat_mul_strassen: operands must be square and equal-sized");
  }
  return strassen_rec(a, b, ctr);
}

std::optional<Matrix> star_block(const Matrix& m, StarSide side, OpCounter& ctr, MulKind mul) {
  if (m.rows() != m.cols()) throw usage_error("star_block: matrix must be square");
  if (mul == MulKind::strassen && !descriptor(m.semiring()).is_ring) {
    throw usage_error("star_block: Strassen multiplication needs a ring semiring");
  }
  return star_block_rec(m, side, ctr, mul);
}

Nilpotence is_nilpotent(const Matrix& m) {
  if (m.rows() != m.cols()) throw usage_error("is_nilpotent: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return {true, 0};
  OpCounter discard;
  Matrix power = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (power.is_zero()) return {true, k};
    power = mat_mul(power, m, discard);
  }
  return {false, 0};
}

Matrix star_nilpotent(const Matrix& m, OpCounter& ctr) {
  Nilpotence nil = is_nilpotent(m);
  if (!nil.nilpotent) throw usage_error("star_nilpotent: matrix is not nilpotent");
  Matrix sum = Matrix::identity(m.rows(), m.semiring());
  Matrix power = Matrix::identity(m.rows(), m.semiring());
  for (std::size_t k = 1; k < nil.index; ++k) {
    power = mat_mul(power, m, ctr);
    sum = mat_add(sum, power, ctr);
  }
  return sum;
}

std::optional<IterativeStar> star_iterative_detail(const Matrix& m, std::size_t max_iter) {
  if (m.rows() != m.cols()) throw usage_error("star_iterative: matrix must be square");
  OpCounter discard;
  const Matrix id = Matrix::identity(m.rows(), m.semiring());
  Matrix sum = id;
  for (std::size_t k = 0; k < max_iter; ++k) {
    Matrix next = mat_add(id, mat_mul(m, sum, discard), discard);
    if (next == sum) return IterativeStar{std::move(sum), k};
    sum = std::move(next);
  }
  return std::nullopt;
}

std::optional<Matrix> star_iterative(const Matrix& m, std::size_t max_iter) {
  auto detail = star_iterative_detail(m, max_iter);
  if (!detail) return std::nullopt;
  return std::move(detail->star);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  OpCounter discard;
  return mat_add(a, b, discard);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  OpCounter discard;
  return mat_mul(a, b, discard);
}

std::optional<Matrix> star_block(const Matrix& m, StarSide side) {
  OpCounter discard;
  return star_block(m, side, discard);
}

}  // namespace wfa
