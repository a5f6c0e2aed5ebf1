#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spingeo/rational.hpp"

namespace spingeo {

/// Dense square matrix over the Gaussian rationals. This is the exact
/// brute-force oracle everything else is checked against; no attempt at
/// performance beyond what 2^N x 2^N for small N needs.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = GaussianRational(1);
    return m;
  }

  std::size_t dim() const { return dim_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const GaussianRational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j)
          out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  ComplexMatrix scaled(const GaussianRational& s) const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
  }

  /// Kronecker product, this on the left.
  ComplexMatrix kron(const ComplexMatrix& b) const {
    ComplexMatrix out(dim_ * b.dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (at(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.dim_; ++k)
          for (std::size_t l = 0; l < b.dim_; ++l)
            out.at(i * b.dim_ + k, j * b.dim_ + l) = at(i, j) * b.at(k, l);
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ComplexMatrix& a, const ComplexMatrix& b) {
    return !(a == b);
  }

private:
  std::size_t dim_;
  std::vector<GaussianRational> data_;
};

}  // namespace spingeo
