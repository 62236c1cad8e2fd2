#include "monoideal/linalg.hpp"

#include <utility>

namespace monoideal {

Matrix Matrix::with_column(std::span<const Scalar> column) const {
  Matrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    out.at(r, cols_) = column[r];
  }
  return out;
}

namespace {

std::size_t rank_mod_p(const Matrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = static_cast<std::uint64_t>(m.at(r, c).small());
  }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * x % p;
      x = x * x % p;
      e >>= 1U;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
    }
    const std::uint64_t scale = inv(a[rank * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[rank * cols + k] = a[rank * cols + k] * scale % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r * cols + c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] = (a[r * cols + k] + (p - f) * a[rank * cols + k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const Scalar& s = m.at(r, c);
      if (!s.is_small()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.big().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Scalar& s = m.at(r, c);
      if (s.is_small()) {
        a[r * cols + c] = mpz_class(static_cast<long>(s.small())) * den;
      } else {
        a[r * cols + c] = s.big().get_num() * (den / s.big().get_den());
      }
    }
  }
  // Bareiss: after each step the active block holds minors of the input,
  // so the division by the previous pivot is exact.
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
    }
    const mpz_class& pv = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class f = a[r * cols + c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class v = pv * a[r * cols + k] - f * a[rank * cols + k];
        mpz_divexact(a[r * cols + k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[r * cols + c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rationals() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

bool in_column_span(const Matrix& a, std::span<const Scalar> v, const FieldSpec& field) {
  return rank(a, field) == rank(a.with_column(v), field);
}

}  // namespace monoideal
