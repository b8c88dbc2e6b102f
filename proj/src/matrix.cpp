#include "holkit/matrix.hpp"

#include <sstream>

namespace holkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  n_ = static_cast<int>(rows.size());
  a_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw error("matrix rows must all have length n");
    for (long long v : row) a_.push_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw error("integer overflow in matrix arithmetic");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw error("integer overflow in matrix arithmetic");
  return out;
}

}  // namespace

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw mismatch_error("matrix size mismatch in product");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, rhs.at(k, j)));
    }
  return out;
}

IntMatrix IntMatrix::pow(long long k) const {
  IntMatrix base = k >= 0 ? *this : inverse();
  long long e = k >= 0 ? k : -k;
  IntMatrix out = identity(n_);
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

long long IntMatrix::det() const {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return checked_add(checked_mul(at(r0, c0), at(r1, c1)), -checked_mul(at(r0, c1), at(r1, c0)));
  };
  switch (n_) {
    case 0: return 1;
    case 1: return at(0, 0);
    case 2: return minor2(0, 1, 0, 1);
    case 3:
      return checked_add(checked_add(checked_mul(at(0, 0), minor2(1, 2, 1, 2)),
                                     -checked_mul(at(0, 1), minor2(1, 2, 0, 2))),
                         checked_mul(at(0, 2), minor2(1, 2, 0, 1)));
    default: throw error("determinant implemented for n <= 3 only");
  }
}

IntMatrix IntMatrix::inverse() const {
  if (n_ == 2) {
    long long d = det();
    if (d != 1 && d != -1) throw error("matrix is not invertible over Z (det " + std::to_string(d) + ")");
    IntMatrix out(2);
    out.at(0, 0) = d * at(1, 1);
    out.at(0, 1) = -d * at(0, 1);
    out.at(1, 0) = -d * at(1, 0);
    out.at(1, 1) = d * at(0, 0);
    return out;
  }
  // General unimodular case: Gauss-Jordan over the rationals would lose
  // exactness; fall back to the adjugate via cofactor expansion.
  if (n_ == 1) {
    if (at(0, 0) != 1 && at(0, 0) != -1) throw error("matrix is not invertible over Z");
    IntMatrix out(1);
    out.at(0, 0) = at(0, 0);
    return out;
  }
  if (n_ == 3) {
    long long d = det();
    if (d != 1 && d != -1) throw error("matrix is not invertible over Z (det " + std::to_string(d) + ")");
    IntMatrix out(3);
    auto minor2 = [&](int r0, int r1, int c0, int c1) { return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0); };
    int rows[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        long long cof = minor2(rows[j][0], rows[j][1], rows[i][0], rows[i][1]);
        out.at(i, j) = d * (((i + j) % 2 == 0) ? cof : -cof);
      }
    return out;
  }
  throw error("matrix inverse implemented for n <= 3 only");
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string IntMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) out << (j ? "," : "") << at(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace holkit
