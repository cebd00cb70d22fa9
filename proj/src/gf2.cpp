#include "mcover/gf2.hpp"

#include <bit>

namespace mcover {

Gf2Subspace Gf2Subspace::full(int ambient_dim) {
  Gf2Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    EdgeSet v(static_cast<std::size_t>(ambient_dim));
    v.set(i);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Gf2Subspace Gf2Subspace::span(int ambient_dim, const std::vector<EdgeSet>& generators) {
  Gf2Subspace s(ambient_dim);
  for (const auto& g : generators) s.insert(g);
  return s;
}

void Gf2Subspace::check_dim(const EdgeSet& v) const {
  if (v.size() != static_cast<std::size_t>(ambient_dim_))
    throw Error(ErrorCode::kDimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                   " against subspace of ambient dimension " +
                                                   std::to_string(ambient_dim_));
}

EdgeSet Gf2Subspace::reduce(EdgeSet v) const {
  check_dim(v);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.test(static_cast<std::size_t>(pivots_[i]))) v ^= basis_[i];
  return v;
}

bool Gf2Subspace::contains(const EdgeSet& v) const { return reduce(v).none(); }

bool Gf2Subspace::insert(const EdgeSet& v) {
  EdgeSet r = reduce(v);
  if (r.none()) return false;
  const int p = static_cast<int>(r.first());
  for (auto& row : basis_)
    if (row.test(static_cast<std::size_t>(p))) row ^= r;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

Gf2Subspace Gf2Subspace::orthogonal_complement() const {
  // For each free column f: x_f = 1 and x_{pivot_i} = row_i[f].
  std::vector<char> is_pivot(static_cast<std::size_t>(ambient_dim_), 0);
  for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = 1;
  Gf2Subspace out(ambient_dim_);
  for (int f = 0; f < ambient_dim_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    EdgeSet x(static_cast<std::size_t>(ambient_dim_));
    x.set(f);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].test(static_cast<std::size_t>(f))) x.set(static_cast<std::size_t>(pivots_[i]));
    out.insert(x);
  }
  return out;
}

Gf2Subspace subspace_sum(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "subspaces of different ambient dimension");
  Gf2Subspace out = a;
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

bool is_subspace_of(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::kDimensionMismatch, "subspaces of different ambient dimension");
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  return true;
}

bool subspace_equal(const Gf2Subspace& a, const Gf2Subspace& b) {
  return a.dim() == b.dim() && is_subspace_of(a, b) && is_subspace_of(b, a);
}

bool coset_contains(const Gf2Subspace& s, const EdgeSet& shift, const EdgeSet& v) {
  return s.contains(v ^ shift);
}

void for_each_in_span(const Gf2Subspace& s, const std::function<bool(const EdgeSet&)>& visit) {
  EdgeSet current(static_cast<std::size_t>(s.ambient_dim()));
  if (!visit(current)) return;
  const std::uint64_t total = std::uint64_t{1} << s.dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= s.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    if (!visit(current)) return;
  }
}

}  // namespace mcover
