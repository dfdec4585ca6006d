#include "kleinsig/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kleinsig {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  n_ = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix s(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + o.a_[k];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix s(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] - o.a_[k];
  return s;
}

bool IntMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SignatureResult symmetric_signature(const IntMatrix& m, std::mt19937_64* shuffle) {
  if (!m.symmetric()) throw std::invalid_argument("signature needs a symmetric matrix");
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<int> live(n);
  std::iota(live.begin(), live.end(), 0);
  SignatureResult res;
  auto record = [&](const Rational& d) {
    res.diagonal.push_back(d);
    if (d > 0) ++res.positive;
    else if (d < 0) ++res.negative;
    else ++res.zero;
  };
  // eliminate row/col p against every remaining index using pivot a[p][p]
  auto eliminate = [&](int p) {
    const Rational piv = a[p][p];
    for (int i : live) {
      if (i == p || a[i][p] == 0) continue;
      Rational f = a[i][p] / piv;
      for (int j : live) a[i][j] -= f * a[p][j];
    }
    for (int i : live)
      if (i != p) a[p][i] = a[i][p] = 0;
  };

  while (!live.empty()) {
    if (shuffle) std::shuffle(live.begin(), live.end(), *shuffle);
    int p = -1;
    for (int i : live)
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    if (p >= 0) {
      record(a[p][p]);
      eliminate(p);
      live.erase(std::find(live.begin(), live.end(), p));
      continue;
    }
    // zero diagonal: look for an off-diagonal entry
    int q = -1;
    for (int i : live) {
      for (int j : live)
        if (j != i && a[i][j] != 0) {
          p = i;
          q = j;
          break;
        }
      if (p >= 0) break;
    }
    if (p < 0) {
      for (std::size_t k = 0; k < live.size(); ++k) record(0);
      break;
    }
    // hyperbolic block [[0,c],[c,0]]: change basis p -> p+q (diagonal 2c),
    // eliminate, and q is left with -c/2. Contributes one of each sign.
    for (int j : live) a[p][j] += a[q][j];
    for (int i : live) a[i][p] += a[i][q];
    record(a[p][p]);
    eliminate(p);
    live.erase(std::find(live.begin(), live.end(), p));
    record(a[q][q]);
    eliminate(q);
    live.erase(std::find(live.begin(), live.end(), q));
  }
  return res;
}

Integer determinant(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

}  // namespace kleinsig
