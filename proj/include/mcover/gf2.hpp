#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mcover/bitset.hpp"

namespace mcover {

// Subspace of GF(2)^ambient_dim held as a fully reduced row-echelon basis:
// pivot = lowest set bit of each row, pivots strictly increasing, and every
// pivot column is zero in all other rows.
class Gf2Subspace {
 public:
  Gf2Subspace() = default;
  explicit Gf2Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {}

  static Gf2Subspace full(int ambient_dim);
  static Gf2Subspace span(int ambient_dim, const std::vector<EdgeSet>& generators);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<EdgeSet>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Returns true when the dimension grew.
  bool insert(const EdgeSet& v);
  bool contains(const EdgeSet& v) const;
  // v reduced against the basis; zero iff v is in the span.
  EdgeSet reduce(EdgeSet v) const;

  Gf2Subspace orthogonal_complement() const;

  friend bool operator==(const Gf2Subspace& a, const Gf2Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  void check_dim(const EdgeSet& v) const;

  int ambient_dim_ = 0;
  std::vector<EdgeSet> basis_;
  std::vector<int> pivots_;
};

Gf2Subspace subspace_sum(const Gf2Subspace& a, const Gf2Subspace& b);
// Reduced bases are unique, so equality is basis comparison; this also checks
// mutual containment explicitly.
bool subspace_equal(const Gf2Subspace& a, const Gf2Subspace& b);
bool is_subspace_of(const Gf2Subspace& a, const Gf2Subspace& b);
// v ∈ shift + s.
bool coset_contains(const Gf2Subspace& s, const EdgeSet& shift, const EdgeSet& v);

// Visits every member of the span once, in Gray-code order over the basis
// (starting with 0). Returning false stops early.
void for_each_in_span(const Gf2Subspace& s, const std::function<bool(const EdgeSet&)>& visit);

}  // namespace mcover
