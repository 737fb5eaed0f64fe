#ifndef INVRING_ORBIT_SPACE_HPP
#define INVRING_ORBIT_SPACE_HPP

/// Canonical forms and orbit data for monomial exponent vectors under a group
/// action on positions.
///
/// An exponent vector lives in a byte string: entry i is the exponent of the
/// variable at position i (so exponents are capped at 255, far beyond any
/// degree used here).  A permutation g acts by moving the exponent at position
/// i to position g(i); the canonical form of a vector is the lexicographically
/// greatest vector in its orbit.  Under the fixed position order this makes
/// the canonical representative of, say, a pair of adjacent edges come out as
/// (1,1,0,...,0).
///
/// The space materializes whole degrees at a time: scanning all exponent
/// vectors of a degree in lexicographically decreasing order, the first
/// vector of each orbit encountered is exactly its canonical form, at which
/// point the entire orbit is expanded once and every member is recorded.
/// After materialization, canonical_form is a single hash lookup, and the
/// distinct orbit members are available for product expansion and evaluation.
/// Canonical ids are therefore assigned degree by degree, within a degree in
/// decreasing lexicographic order of representatives; id order is a graded
/// monomial order used by the row-reduction code.
///
/// Materialization must happen on a single thread (call ensure_degree up
/// front); afterwards all queries are read-only and safe to run concurrently.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "invring/action.hpp"

namespace invring {

/// Exponents by position, one byte each.
using ExponentVector = std::string;

inline int degree_of(const ExponentVector& v) {
  int d = 0;
  for (unsigned char c : v) d += c;
  return d;
}

/// Orbit summary of a canonical representative.  orbit_size multiplied by
/// stabilizer_order is always the group order.
struct CanonicalGraph {
  ExponentVector rep;
  long orbit_size = 0;
  long stabilizer_order = 0;
};

class OrbitSpace {
 public:
  explicit OrbitSpace(const ActionSpec& action, long order_cap = GroupTable::kDefaultOrderCap)
      : table_(std::make_shared<GroupTable>(action, order_cap)) {}

  const ActionSpec& action() const { return table_->action(); }
  const GroupTable& table() const { return *table_; }
  int position_count() const { return table_->position_count(); }
  long group_order() const { return table_->order(); }

  /// Materializes all degrees up to and including d.
  void ensure_degree(int d);
  int materialized_degree() const { return materialized_; }

  /// Canonical representative of the orbit of v.
  const ExponentVector& canonical_form(const ExponentVector& v);

  /// Orbit size and stabilizer order for (the orbit of) v.
  CanonicalGraph orbit_data(const ExponentVector& v);

  /// Canonical ids of all orbits of degree d, in enumeration order
  /// (decreasing lexicographic order of representatives).  The length of this
  /// list is the dimension of the degree-d component of the invariant ring.
  const std::vector<int>& canonical_ids(int d);

  /// Materialized lookup; throws if the degree of v was never materialized.
  int id_of(const ExponentVector& v) const;
  int id_of_canonical(const ExponentVector& rep) const { return id_of(rep); }

  int degree_of_id(int id) const { return records_[id].degree; }
  const ExponentVector& rep(int id) const { return records_[id].rep; }
  long orbit_size(int id) const { return records_[id].orbit_size; }
  long stabilizer_order(int id) const { return group_order() / records_[id].orbit_size; }
  /// The distinct members of the orbit, canonical representative included.
  const std::vector<ExponentVector>& members(int id) const { return records_[id].members; }

  int orbit_count() const { return static_cast<int>(records_.size()); }

  /// Applies group element g to v (exponent at i moves to position g(i)).
  ExponentVector apply(long g, const ExponentVector& v) const;

 private:
  struct Record {
    ExponentVector rep;
    int degree = 0;
    long orbit_size = 0;
    std::vector<ExponentVector> members;
  };

  void materialize_degree(int d);

  std::shared_ptr<GroupTable> table_;
  std::vector<Record> records_;
  std::unordered_map<ExponentVector, int> vector_to_id_;
  std::vector<std::vector<int>> ids_by_degree_;
  int materialized_ = -1;
};

}  // namespace invring

#endif
