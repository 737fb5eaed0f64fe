#ifndef INVRING_CHAIN_HPP
#define INVRING_CHAIN_HPP

/// Multichain structure on exponent vectors, the shape grading, and the
/// chain (star) product.
///
/// An exponent vector is read as a superposition of simple layers: layer i
/// holds the positions with exponent >= i, so the layers form a decreasing
/// chain of supports and the layer sizes form a partition of the degree (the
/// conjugate of the exponent multiset).  Two vectors are mergeable when all
/// layers of one are comparable with all layers of the other; the chain
/// product keeps exactly the monomial products of mergeable pairs.

#include <cstdint>
#include <vector>

#include "invring/invariant.hpp"

namespace invring {

/// Support bitset over positions, packed into 64-bit words.
using LayerSet = std::vector<std::uint64_t>;

struct MultiChain {
  /// Decreasing supports: layers[0] >= layers[1] >= ... by inclusion.
  std::vector<LayerSet> layers;
};

/// Weakly decreasing layer sizes; entries sum to the degree of the vector.
using Shape = std::vector<int>;

MultiChain layers(const ExponentVector& v);
Shape shape(const ExponentVector& v);

/// True iff every layer of a is a subset or superset of every layer of b
/// (layers within one chain are nested by construction, so this is exactly
/// the condition for the combined layer multiset to be a chain).
bool mergeable(const MultiChain& a, const MultiChain& b);
bool mergeable(const ExponentVector& a, const ExponentVector& b);

/// Multiset union of two shapes, sorted decreasingly: the shape of the sum
/// of any mergeable pair with these shapes.
Shape merge_shapes(const Shape& a, const Shape& b);

/// True iff a dominates b (partial sums of a bound those of b); both shapes
/// must have equal sums.
bool shape_dominates(const Shape& a, const Shape& b);

/// The chain product: bilinear extension of the rule "monomial product when
/// the two multichains merge, zero otherwise", re-collected in the orbit-sum
/// basis.  Structure constants stay nonnegative integers on orbit sums.
InvariantPolynomial chain_mul(const InvariantPolynomial& p, const InvariantPolynomial& q);

struct ChainTransferReport {
  std::vector<int> chain_generator_degrees;  // degrees of the chain-product generators
  bool generates_usual = false;              // those generators span under the usual product
  int first_failure_degree = -1;             // first degree where the usual span falls short
};

/// Computes a minimal generating set for the chain product up to degree_cap,
/// then checks that the same invariants generate the full ring under the
/// usual product through that cap.
ChainTransferReport chain_transfer_check(int n, int degree_cap);

}  // namespace invring

#endif
