#ifndef NCSYMP_MATRIX_HPP
#define NCSYMP_MATRIX_HPP

#include <vector>

#include "ncsymp/errors.hpp"

namespace ncsymp {

/// Square matrix container with runtime dimension.  Arithmetic lives in the
/// ring layer, which knows how to combine the entries.
template <class T>
class SqMat {
 public:
  SqMat() : dim_(0) {}
  SqMat(int dim, const T& fill) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, fill) {}
  SqMat(int dim, std::vector<T> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(dim) * dim) throw dimension_mismatch("matrix data size");
  }

  int dim() const { return dim_; }
  const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SqMat& x, const SqMat& y) { return x.dim_ == y.dim_ && x.data_ == y.data_; }
  friend bool operator!=(const SqMat& x, const SqMat& y) { return !(x == y); }

 private:
  int dim_;
  std::vector<T> data_;
};

}  // namespace ncsymp

#endif  // NCSYMP_MATRIX_HPP
