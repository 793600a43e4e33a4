#include "drchi/dr_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace drchi {

namespace {

// Advances `combo` (strictly increasing indices into [0, n)) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> combo(k);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  return combo;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("ragged matrix: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += lhs * other(k, j);
    }
  return out;
}

RowSumError::RowSumError(std::size_t row)
    : std::invalid_argument("row " + std::to_string(row) + " does not sum to zero"), row_(row) {}

DRMatrix DRMatrix::validate(IntMatrix entries) {
  if (entries.rows() == 0 || entries.cols() == 0)
    throw std::invalid_argument("double ramification matrix must have at least one row and column");
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    BigInt sum = 0;
    for (const auto& v : entries.row(i)) sum += v;
    if (sum != 0) throw RowSumError(i + 1);
  }
  return DRMatrix(std::move(entries));
}

DRMatrix DRMatrix::validate(const std::vector<std::vector<BigInt>>& rows) {
  return validate(IntMatrix::from_rows(rows));
}

BigInt determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = square.rows();
  if (n == 0) return 1;
  IntMatrix m = square;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  const std::size_t k = rows.size();
  IntMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i] >= a.rows()) throw std::invalid_argument("minor: row index out of range");
    for (std::size_t j = 0; j < k; ++j) {
      if (cols[j] >= a.cols()) throw std::invalid_argument("minor: column index out of range");
      sub(i, j) = a(rows[i], cols[j]);
    }
  }
  return determinant(sub);
}

BigInt gcd_minors(const IntMatrix& a, std::size_t k) {
  if (k > std::min(a.rows(), a.cols()))
    throw std::out_of_range("gcd_minors: k = " + std::to_string(k) + " exceeds min(rows, cols)");
  if (k == 0) return 1;
  BigInt g = 0;
  auto rows = first_combination(k);
  do {
    auto cols = first_combination(k);
    do {
      const BigInt m = minor(a, rows, cols);
      if (m != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        if (g == 1) return g;
      }
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

IntMatrix contract_labels(const IntMatrix& a, std::span<const std::size_t> labels,
                          std::size_t blocks) {
  if (labels.size() != a.cols()) throw std::invalid_argument("contract: partition size does not match column count");
  IntMatrix out(a.rows(), blocks);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) out(i, labels[j]) += a(i, j);
  return out;
}

DRMatrix contract(const DRMatrix& a, const SetPartition& partition) {
  if (partition.ground_size() != a.markings())
    throw std::invalid_argument("contract: partition size does not match column count");
  const auto labels = partition.labels();
  return DRMatrix::validate(contract_labels(a.entries(), labels, partition.size()));
}

ReductionResult reduce_special_form(const DRMatrix& a) {
  const std::size_t r = a.rank();
  const std::size_t last = a.markings() - 1;
  IntMatrix work = a.entries();
  IntMatrix transform = IntMatrix::identity(r);

  // Row j <- (-t) row0 + s row_j and row0 <- p row0 + q row_j, where
  // p x + q y = g and s = x/g, t = y/g. The 2x2 block has determinant 1 and
  // zeroes row j in the last column.
  auto combine = [](IntMatrix& m, std::size_t j, const BigInt& p, const BigInt& q,
                     const BigInt& s, const BigInt& t) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      BigInt top = p * m(0, c) + q * m(j, c);
      BigInt bottom = s * m(j, c) - t * m(0, c);
      m(0, c) = std::move(top);
      m(j, c) = std::move(bottom);
    }
  };

  for (std::size_t j = 1; j < r; ++j) {
    if (work(j, last) == 0) continue;
    const BigInt x = work(0, last);
    const BigInt y = work(j, last);
    const auto [g, p, q] = extended_gcd(x, y);
    const BigInt s = x / g;
    const BigInt t = y / g;
    combine(work, j, p, q, s, t);
    combine(transform, j, p, q, s, t);
  }
  if (work(0, last) < 0) {
    for (std::size_t c = 0; c < work.cols(); ++c) work(0, c) = -work(0, c);
    for (std::size_t c = 0; c < r; ++c) transform(0, c) = -transform(0, c);
  }
  return {std::move(transform), DRMatrix::validate(std::move(work))};
}

DRMatrix gl_transform(const DRMatrix& a, const IntMatrix& m) {
  if (m.rows() != a.rank() || m.cols() != a.rank())
    throw std::invalid_argument("gl_transform: transform must be r x r");
  const BigInt det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("gl_transform: transform is not unimodular");
  return DRMatrix::validate(m * a.entries());
}

std::string canonical_key(const DRMatrix& a) {
  std::string key = std::to_string(a.rank()) + "," + std::to_string(a.markings()) + ":";
  for (const auto& v : a.entries().data()) {
    key += v.get_str();
    key += ';';
  }
  return key;
}

std::string normalized_key(const DRMatrix& a) {
  const IntMatrix& e = a.entries();
  std::vector<std::size_t> order(e.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&e](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < e.rows(); ++i) {
      const int c = cmp(e(i, x), e(i, y));
      if (c != 0) return c < 0;
    }
    return false;
  });
  IntMatrix sorted(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) sorted(i, j) = e(i, order[j]);
  return canonical_key(reduce_special_form(DRMatrix::validate(std::move(sorted))).reduced);
}

std::string render(const IntMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a(i, j).get_str();
    }
  }
  return out;
}

}  // namespace drchi
