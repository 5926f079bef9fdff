#ifndef GDJCPB_MATRIX_HPP_
#define GDJCPB_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace gdjcpb {

//! Dense row-major matrix. Desk-scale numerics only; operation counts,
//! not throughput, are the subject of this toolkit.
struct Matrix {
   std::size_t rows {0};
   std::size_t cols {0};
   std::vector<double> data;

   Matrix() = default;

   Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

   double& operator()(std::size_t r, std::size_t c) {
      return data[r * cols + c];
   }

   double operator()(std::size_t r, std::size_t c) const {
      return data[r * cols + c];
   }

   static Matrix identity(std::size_t k);
};

//! Plain triple-loop product; throws std::invalid_argument on shape mismatch.
Matrix multiply(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace gdjcpb

#endif  // GDJCPB_MATRIX_HPP_
