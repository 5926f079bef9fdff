#include "gdjcpb/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace gdjcpb {

Matrix Matrix::identity(std::size_t k) {
   Matrix m(k, k);
   for (std::size_t i = 0; i < k; ++i) {
      m(i, i) = 1.0;
   }
   return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
   if (a.cols != b.rows) {
      throw std::invalid_argument("matrix product shape mismatch: " +
                                  std::to_string(a.rows) + "x" +
                                  std::to_string(a.cols) + " * " +
                                  std::to_string(b.rows) + "x" +
                                  std::to_string(b.cols));
   }
   Matrix c(a.rows, b.cols);
   for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t k = 0; k < a.cols; ++k) {
         const double aik = a(i, k);
         for (std::size_t j = 0; j < b.cols; ++j) {
            c(i, j) += aik * b(k, j);
         }
      }
   }
   return c;
}

double max_abs(const Matrix& m) {
   double best = 0.0;
   for (double v : m.data) {
      best = std::max(best, std::abs(v));
   }
   return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
   if (a.rows != b.rows || a.cols != b.cols) {
      throw std::invalid_argument("matrix difference shape mismatch");
   }
   double best = 0.0;
   for (std::size_t i = 0; i < a.data.size(); ++i) {
      best = std::max(best, std::abs(a.data[i] - b.data[i]));
   }
   return best;
}

}  // namespace gdjcpb
