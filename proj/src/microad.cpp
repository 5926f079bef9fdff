#include "gdjcpb/microad.hpp"

#include <cmath>
#include <stdexcept>

#include "gdjcpb/rng.hpp"

namespace gdjcpb {

std::size_t MicroDag::add_input() {
   if (!nodes_.empty() && nodes_.back().op != OpCode::Input) {
      throw std::logic_error("inputs must precede all operations");
   }
   nodes_.push_back({OpCode::Input, 0, 0});
   inputs_.push_back(nodes_.size() - 1);
   return nodes_.size() - 1;
}

std::size_t MicroDag::add_unary(OpCode op, std::size_t a) {
   if (op == OpCode::Input || op == OpCode::Add || op == OpCode::Mul) {
      throw std::logic_error("not a unary operation");
   }
   if (a >= nodes_.size()) {
      throw std::out_of_range("operand must be an earlier node");
   }
   nodes_.push_back({op, a, 0});
   edge_count_ += 1;
   evaluated_ = false;
   return nodes_.size() - 1;
}

std::size_t MicroDag::add_binary(OpCode op, std::size_t a, std::size_t b) {
   if (op != OpCode::Add && op != OpCode::Mul) {
      throw std::logic_error("not a binary operation");
   }
   if (a >= nodes_.size() || b >= nodes_.size()) {
      throw std::out_of_range("operands must be earlier nodes");
   }
   nodes_.push_back({op, a, b});
   edge_count_ += 2;
   evaluated_ = false;
   return nodes_.size() - 1;
}

void MicroDag::mark_output(std::size_t id) {
   if (id >= nodes_.size()) {
      throw std::out_of_range("output id out of range");
   }
   outputs_.push_back(id);
}

double MicroDag::max_abs_value() const {
   double best = 0.0;
   for (double v : values_) {
      best = std::max(best, std::abs(v));
   }
   return best;
}

std::size_t MicroDag::arity(std::size_t id) const {
   switch (nodes_[id].op) {
      case OpCode::Input:
         return 0;
      case OpCode::Add:
      case OpCode::Mul:
         return 2;
      default:
         return 1;
   }
}

void MicroDag::check_point(const std::vector<double>& x) const {
   if (!evaluated_) {
      throw std::logic_error("primal sweep required before propagation");
   }
   if (x.size() != inputs_.size()) {
      throw std::invalid_argument("point dimension mismatch");
   }
   for (std::size_t i = 0; i < inputs_.size(); ++i) {
      if (values_[inputs_[i]] != x[i]) {
         throw std::invalid_argument("primal was evaluated at a different point");
      }
   }
}

std::vector<double> primal(MicroDag& dag, const std::vector<double>& x) {
   if (x.size() != dag.inputs_.size()) {
      throw std::invalid_argument("point dimension mismatch");
   }
   if (dag.outputs_.empty()) {
      throw std::logic_error("no outputs marked");
   }

   const std::size_t count = dag.nodes_.size();
   dag.values_.assign(count, 0.0);
   dag.da_.assign(count, 0.0);
   dag.db_.assign(count, 0.0);

   for (std::size_t id = 0; id < count; ++id) {
      const MicroDag::Node& node = dag.nodes_[id];
      double value = 0.0;
      switch (node.op) {
         case OpCode::Input:
            value = x[id];  // inputs occupy the leading slots
            break;
         case OpCode::Add:
            value = dag.values_[node.a] + dag.values_[node.b];
            dag.da_[id] = 1.0;
            dag.db_[id] = 1.0;
            break;
         case OpCode::Mul:
            value = dag.values_[node.a] * dag.values_[node.b];
            dag.da_[id] = dag.values_[node.b];
            dag.db_[id] = dag.values_[node.a];
            break;
         case OpCode::Sin:
            value = std::sin(dag.values_[node.a]);
            dag.da_[id] = std::cos(dag.values_[node.a]);
            break;
         case OpCode::Cos:
            value = std::cos(dag.values_[node.a]);
            dag.da_[id] = -std::sin(dag.values_[node.a]);
            break;
         case OpCode::Exp:
            value = std::exp(dag.values_[node.a]);
            dag.da_[id] = value;
            break;
         case OpCode::Neg:
            value = -dag.values_[node.a];
            dag.da_[id] = -1.0;
            break;
      }
      if (!std::isfinite(value)) {
         throw std::runtime_error("non-finite intermediate at node " +
                                  std::to_string(id));
      }
      dag.values_[id] = value;
   }
   dag.evaluated_ = true;

   std::vector<double> y(dag.outputs_.size());
   for (std::size_t i = 0; i < dag.outputs_.size(); ++i) {
      y[i] = dag.values_[dag.outputs_[i]];
   }
   return y;
}

Matrix tangent(const MicroDag& dag, const std::vector<double>& x,
               const Matrix& zdot, FmaCounter& counter) {
   dag.check_point(x);
   if (zdot.rows != dag.input_dim()) {
      throw std::invalid_argument("tangent seed must have one row per input");
   }
   const std::size_t p = zdot.cols;
   const std::size_t count = dag.nodes_.size();

   // workspace: one directional derivative per node per direction
   Matrix dot(count, p);
   for (std::size_t i = 0; i < dag.inputs_.size(); ++i) {
      for (std::size_t d = 0; d < p; ++d) {
         dot(dag.inputs_[i], d) = zdot(i, d);
      }
   }

   for (std::size_t id = 0; id < count; ++id) {
      const MicroDag::Node& node = dag.nodes_[id];
      if (node.op == OpCode::Input) {
         continue;
      }
      for (std::size_t d = 0; d < p; ++d) {
         dot(id, d) += dag.da_[id] * dot(node.a, d);
      }
      counter.count += p;
      if (dag.arity(id) == 2) {
         for (std::size_t d = 0; d < p; ++d) {
            dot(id, d) += dag.db_[id] * dot(node.b, d);
         }
         counter.count += p;
      }
   }

   Matrix result(dag.output_dim(), p);
   for (std::size_t i = 0; i < dag.outputs_.size(); ++i) {
      for (std::size_t d = 0; d < p; ++d) {
         result(i, d) = dot(dag.outputs_[i], d);
      }
   }
   return result;
}

Matrix adjoint(const MicroDag& dag, const std::vector<double>& x,
               const Matrix& zbar, FmaCounter& counter) {
   dag.check_point(x);
   if (zbar.cols != dag.output_dim()) {
      throw std::invalid_argument("adjoint seed must have one column per output");
   }
   const std::size_t r = zbar.rows;
   const std::size_t count = dag.nodes_.size();

   Matrix bar(count, r);
   for (std::size_t i = 0; i < dag.outputs_.size(); ++i) {
      for (std::size_t d = 0; d < r; ++d) {
         bar(dag.outputs_[i], d) += zbar(d, i);
      }
   }

   for (std::size_t id = count; id-- > 0;) {
      const MicroDag::Node& node = dag.nodes_[id];
      if (node.op == OpCode::Input) {
         continue;
      }
      for (std::size_t d = 0; d < r; ++d) {
         bar(node.a, d) += bar(id, d) * dag.da_[id];
      }
      counter.count += r;
      if (dag.arity(id) == 2) {
         for (std::size_t d = 0; d < r; ++d) {
            bar(node.b, d) += bar(id, d) * dag.db_[id];
         }
         counter.count += r;
      }
   }

   Matrix result(r, dag.input_dim());
   for (std::size_t i = 0; i < dag.inputs_.size(); ++i) {
      for (std::size_t d = 0; d < r; ++d) {
         result(d, i) = bar(dag.inputs_[i], d);
      }
   }
   return result;
}

MicroDag sin_product_dag() {
   MicroDag dag;
   const std::size_t v1 = dag.add_input();
   const std::size_t v2 = dag.add_input();
   const std::size_t v3 = dag.add_binary(OpCode::Mul, v1, v2);
   const std::size_t v4 = dag.add_unary(OpCode::Sin, v3);
   dag.mark_output(v4);
   return dag;
}

MicroDag random_dag(std::uint64_t seed, std::size_t max_inputs,
                    std::size_t max_outputs, std::size_t max_nodes) {
   SplitMix64 rng(seed);
   MicroDag dag;

   const std::size_t n = rng.uniform(1, max_inputs);
   for (std::size_t i = 0; i < n; ++i) {
      dag.add_input();
   }

   const std::size_t ops = rng.uniform(1, max_nodes > n ? max_nodes - n : 1);
   for (std::size_t i = 0; i < ops; ++i) {
      const std::size_t limit = dag.node_count();
      // Exp is drawn less often to keep random values well-scaled.
      switch (rng.uniform(0, 10)) {
         case 0:
         case 1:
         case 2:
            dag.add_binary(OpCode::Add, rng.uniform(0, limit - 1),
                           rng.uniform(0, limit - 1));
            break;
         case 3:
         case 4:
         case 5:
            dag.add_binary(OpCode::Mul, rng.uniform(0, limit - 1),
                           rng.uniform(0, limit - 1));
            break;
         case 6:
            dag.add_unary(OpCode::Sin, rng.uniform(0, limit - 1));
            break;
         case 7:
            dag.add_unary(OpCode::Cos, rng.uniform(0, limit - 1));
            break;
         case 8:
            dag.add_unary(OpCode::Neg, rng.uniform(0, limit - 1));
            break;
         case 9:
            dag.add_unary(OpCode::Exp, rng.uniform(0, limit - 1));
            break;
         default:
            dag.add_binary(OpCode::Add, rng.uniform(0, limit - 1),
                           rng.uniform(0, limit - 1));
            break;
      }
   }

   // The final node is always observed; further outputs are random distinct
   // nodes, so interior nodes with consumers can be outputs too.
   const std::size_t m = rng.uniform(1, max_outputs);
   std::vector<bool> used(dag.node_count(), false);
   dag.mark_output(dag.node_count() - 1);
   used[dag.node_count() - 1] = true;
   for (std::size_t i = 1; i < m; ++i) {
      const std::size_t pick = rng.uniform(0, dag.node_count() - 1);
      if (!used[pick]) {
         used[pick] = true;
         dag.mark_output(pick);
      }
   }
   return dag;
}

Matrix finite_difference_jacobian(const MicroDag& dag,
                                  const std::vector<double>& x,
                                  double step) {
   MicroDag scratch = dag;
   Matrix jac(dag.output_dim(), dag.input_dim());
   for (std::size_t i = 0; i < dag.input_dim(); ++i) {
      std::vector<double> forward = x;
      std::vector<double> backward = x;
      forward[i] += step;
      backward[i] -= step;
      const std::vector<double> up = primal(scratch, forward);
      const std::vector<double> down = primal(scratch, backward);
      for (std::size_t o = 0; o < dag.output_dim(); ++o) {
         jac(o, i) = (up[o] - down[o]) / (2.0 * step);
      }
   }
   return jac;
}

}  // namespace gdjcpb
