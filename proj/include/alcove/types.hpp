#ifndef ALCOVE_TYPES_HPP
#define ALCOVE_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace alcove {

// All arithmetic in this library is exact: weights, roots and Weyl matrices
// are dense integer vectors/matrices.
using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec vec_of(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

inline Vec vec_of(const std::vector<Int>& xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

inline std::vector<Int> to_std(const Vec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
  }
};

// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
inline int integer_rank(Mat m) {
  int rank = 0;
  Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (m(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      m.row(i) = m.row(i) * m(row, col) - m.row(row) * m(i, col);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace alcove

#endif
