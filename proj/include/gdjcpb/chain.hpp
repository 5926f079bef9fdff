#ifndef GDJCPB_CHAIN_HPP_
#define GDJCPB_CHAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdjcpb {

//! One differentiable subprogram F_i, reduced to what the cost model needs:
//! its Jacobian shape and the edge count of its computational DAG.
struct ElementalSpec {
   //! Input dimension n_i.
   std::size_t n {0};
   //! Output dimension m_i.
   std::size_t m {0};
   //! Edge count |E_i| of the DAG of F_i; unit propagation cost per sweep.
   std::size_t edges {0};

   friend bool operator==(const ElementalSpec&, const ElementalSpec&) = default;
};

//! A chain F = F_q ∘ ... ∘ F_1 with conformable Jacobian factors.
//! Factors are stored first-to-last: factors[0] is F_1.
struct ChainInstance {
   std::vector<ElementalSpec> factors;

   std::size_t length() const {
      return factors.size();
   }

   //! 1-based access, matching the subscripts used throughout the solver.
   const ElementalSpec& factor(std::size_t i) const {
      return factors.at(i - 1);
   }

   //! Overall input dimension n = n_1.
   std::size_t input_dim() const {
      return factors.front().n;
   }

   //! Overall output dimension m = m_q.
   std::size_t output_dim() const {
      return factors.back().m;
   }

   //! Throws std::invalid_argument on empty chains, zero fields, or
   //! non-conformable neighbours.
   void validate() const;

   friend bool operator==(const ChainInstance&, const ChainInstance&) = default;
};

//! Parse failure with the 1-based line number where it was detected.
class ParseError : public std::runtime_error {
 public:
   ParseError(std::size_t line, const std::string& reason);

   std::size_t line() const {
      return line_;
   }

 private:
   std::size_t line_;
};

//! Reads the text instance format: the first line holds the chain length q,
//! followed by q lines "m_i n_i edges_i" for the factors F_1 upward. Extra
//! whitespace and a missing final newline are tolerated; anything else
//! (unknown tokens, wrong field counts, broken chaining) is a ParseError.
ChainInstance parse_instance(std::istream& in);
ChainInstance parse_instance(const std::string& text);

//! Canonical form: single-space separators, one trailing newline.
//! parse_instance(serialize_instance(inst)) == inst for every valid inst.
std::string serialize_instance(const ChainInstance& inst);

}  // namespace gdjcpb

#endif  // GDJCPB_CHAIN_HPP_
