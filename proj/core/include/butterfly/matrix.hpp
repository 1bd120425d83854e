#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>

namespace butterfly {

/// Small dense square matrix over an integer-like ring, acting on column
/// vectors. Sizes here never exceed 4, so determinants use cofactor expansion.
template <typename T, std::size_t N>
struct SquareMatrix {
  std::array<std::array<T, N>, N> rows{};

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.rows[i][i] = T(1);
    return m;
  }

  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<T>> init) {
    SquareMatrix m;
    std::size_t i = 0;
    for (const auto& row : init) {
      std::size_t j = 0;
      for (const auto& v : row) m.rows[i][j++] = v;
      ++i;
    }
    return m;
  }

  const T& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
  T& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }

  template <typename U>
  SquareMatrix<U, N> cast() const {
    SquareMatrix<U, N> out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.rows[i][j] = U(rows[i][j]);
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        T acc(0);
        for (std::size_t k = 0; k < N; ++k) acc += a.rows[i][k] * b.rows[k][j];
        out.rows[i][j] = acc;
      }
    return out;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.rows[i][j] = a.rows[i][j] - b.rows[i][j];
    return out;
  }

  /// Matrix-vector product; the vector's scalar type may be wider than T.
  template <typename U>
  std::array<U, N> apply(const std::array<U, N>& v) const {
    std::array<U, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      U acc(0);
      for (std::size_t k = 0; k < N; ++k)
        if (rows[i][k] != T(0)) acc += U(rows[i][k]) * v[k];
      out[i] = acc;
    }
    return out;
  }

  SquareMatrix transpose() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.rows[j][i] = rows[i][j];
    return out;
  }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < N; ++i) acc += rows[i][i];
    return acc;
  }

  T determinant() const {
    if constexpr (N == 1) {
      return rows[0][0];
    } else {
      T acc(0);
      for (std::size_t col = 0; col < N; ++col) {
        if (rows[0][col] == T(0)) continue;
        SquareMatrix<T, N - 1> minor;
        for (std::size_t i = 1; i < N; ++i) {
          std::size_t mj = 0;
          for (std::size_t j = 0; j < N; ++j)
            if (j != col) minor.rows[i - 1][mj++] = rows[i][j];
        }
        T term = rows[0][col] * minor.determinant();
        if (col % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      return acc;
    }
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < N; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < N; ++j) os << (j ? "," : "") << m.rows[i][j];
      os << ']';
    }
    return os << ']';
  }
};

template <std::size_t N>
using IntMatrix = SquareMatrix<long long, N>;

}  // namespace butterfly
