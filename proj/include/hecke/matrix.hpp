#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat scalar(std::size_t n, const Scalar& s);
  static Mat diagonal(std::span<const Scalar> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Scalar s, Mat a);
std::vector<Scalar> operator*(const Mat& a, std::span<const Scalar> x);

// Kronecker product with lexicographic composite indexing:
// (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l].
Mat kron(const Mat& a, const Mat& b);

// Table of canonical scalar strings, one inner vector per row.
std::vector<std::vector<std::string>> to_strings(const Mat& m);

}  // namespace hecke
