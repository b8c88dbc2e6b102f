#ifndef HOLKIT_MATRIX_HPP_
#define HOLKIT_MATRIX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "holkit/errors.hpp"

namespace holkit {

/// Dense n x n integer matrix. Inversion is only defined for determinant
/// +-1 (the unimodular case, which is all the toolkit needs).
class IntMatrix {
 public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  long long at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  long long& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix pow(long long k) const;
  long long det() const;  // defined for n <= 3 (all uses are 2x2)
  IntMatrix inverse() const;
  bool is_identity() const;

  std::string str() const;  // [[a,b],[c,d]]

 private:
  int n_;
  std::vector<long long> a_;
};

}  // namespace holkit

#endif  // HOLKIT_MATRIX_HPP_
