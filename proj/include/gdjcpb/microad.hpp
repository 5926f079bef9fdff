#ifndef GDJCPB_MICROAD_HPP_
#define GDJCPB_MICROAD_HPP_

#include <cstdint>
#include <vector>

#include "gdjcpb/matrix.hpp"

namespace gdjcpb {

//! Tally of multiply-accumulate operations performed by a propagation.
struct FmaCounter {
   std::uint64_t count {0};
};

enum class OpCode { Input, Add, Mul, Sin, Cos, Exp, Neg };

//! A miniature elemental-operation DAG. Nodes are stored in topological
//! order, inputs first; every dependence edge carries a slot for the local
//! partial derivative of the consumer with respect to that operand, filled
//! in during the primal sweep. This is the object the abstract cost model
//! talks about: one fma per edge per propagated direction or adjoint row.
class MicroDag {
 public:
   struct Node {
      OpCode op {OpCode::Input};
      std::size_t a {0};
      std::size_t b {0};
   };

   std::size_t add_input();
   std::size_t add_unary(OpCode op, std::size_t a);
   std::size_t add_binary(OpCode op, std::size_t a, std::size_t b);
   void mark_output(std::size_t id);

   std::size_t node_count() const {
      return nodes_.size();
   }

   std::size_t input_dim() const {
      return inputs_.size();
   }

   std::size_t output_dim() const {
      return outputs_.size();
   }

   //! |E|: unary nodes contribute one edge, binary nodes two.
   std::size_t edge_count() const {
      return edge_count_;
   }

   bool evaluated() const {
      return evaluated_;
   }

   //! Largest |value| seen by the last primal sweep; 0 before any sweep.
   double max_abs_value() const;

   const std::vector<Node>& nodes() const {
      return nodes_;
   }

   const std::vector<std::size_t>& inputs() const {
      return inputs_;
   }

   const std::vector<std::size_t>& outputs() const {
      return outputs_;
   }

   friend std::vector<double> primal(MicroDag& dag, const std::vector<double>& x);
   friend Matrix tangent(const MicroDag& dag, const std::vector<double>& x,
                         const Matrix& zdot, FmaCounter& counter);
   friend Matrix adjoint(const MicroDag& dag, const std::vector<double>& x,
                         const Matrix& zbar, FmaCounter& counter);

 private:
   std::size_t arity(std::size_t id) const;
   void check_point(const std::vector<double>& x) const;

   std::vector<Node> nodes_;
   std::vector<std::size_t> inputs_;
   std::vector<std::size_t> outputs_;
   std::size_t edge_count_ {0};

   // populated by primal
   std::vector<double> values_;
   std::vector<double> da_;
   std::vector<double> db_;
   bool evaluated_ {false};
};

//! Evaluates the DAG at x, stores all intermediate values, and labels every
//! edge with its local partial. Throws on non-finite intermediates.
std::vector<double> primal(MicroDag& dag, const std::vector<double>& x);

//! Propagates zdot (n x p) forward: returns F'(x) * zdot (m x p) and adds
//! exactly edge_count() * p to the counter. Requires a prior primal at x.
Matrix tangent(const MicroDag& dag, const std::vector<double>& x,
               const Matrix& zdot, FmaCounter& counter);

//! Propagates zbar (r x m) backward: returns zbar * F'(x) (r x n) and adds
//! exactly edge_count() * r to the counter. Requires a prior primal at x.
Matrix adjoint(const MicroDag& dag, const std::vector<double>& x,
               const Matrix& zbar, FmaCounter& counter);

//! y = sin(x1 * x2): two inputs, one multiply, one sine, three edges.
MicroDag sin_product_dag();

//! Seeded random DAG for property tests; dims bounded by the arguments.
MicroDag random_dag(std::uint64_t seed, std::size_t max_inputs = 6,
                    std::size_t max_outputs = 6, std::size_t max_nodes = 40);

//! Central differences with the given step; operates on a private copy.
Matrix finite_difference_jacobian(const MicroDag& dag,
                                  const std::vector<double>& x,
                                  double step = 1e-6);

}  // namespace gdjcpb

#endif  // GDJCPB_MICROAD_HPP_
