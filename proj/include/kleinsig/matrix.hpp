#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace kleinsig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major square integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int size() const { return n_; }
  long& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  long operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  IntMatrix transpose() const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool symmetric() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<long> a_;
};

struct SignatureResult {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
  int nullity() const { return zero; }
  // diagonal of the congruent form, hyperbolic blocks written as (1,-1)
  std::vector<Rational> diagonal;
};

// Signature and nullity of a symmetric matrix by exact congruence
// diagonalization. With a generator, pivots are chosen in random order.
SignatureResult symmetric_signature(const IntMatrix& m, std::mt19937_64* shuffle = nullptr);

Integer determinant(const IntMatrix& m);

}  // namespace kleinsig
