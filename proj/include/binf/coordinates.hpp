#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binf/tableaux.hpp"

namespace binf {

// A failed path-consistency constraint. For an order violation `lower <= upper`
// holds in row `row` but s_lower > s_upper; for a negative entry lower == upper.
struct OrderViolation {
  int row = 0;
  NodeId lower = -1;
  NodeId upper = -1;
  int lower_value = 0;
  int upper_value = 0;

  std::string describe(LieType t) const;
};

class PathConsistencyError : public std::domain_error {
 public:
  PathConsistencyError(const std::string& what, std::optional<OrderViolation> v)
      : std::domain_error(what), violation_(v) {}
  const std::optional<OrderViolation>& violation() const { return violation_; }

 private:
  std::optional<OrderViolation> violation_;
};

// Monotone along <= within each C-circle_r, and s_c = min(s_c1, s_c2) for
// every pair of distinct parents of c.
bool is_path_consistent_full(const FullCounts& fc);

// Nonnegative and monotone along <= within each C-bar_r.
bool is_path_consistent_reduced(const ReducedCounts& rc);
// Negative entries first, then order violations, in canonical order.
std::vector<OrderViolation> find_violations(const ReducedCounts& rc);
std::optional<OrderViolation> find_violation(const ReducedCounts& rc);

// Fills the nodes of C-circle_r outside C-bar_r with the min over their
// parents, by increasing distance from the source. Throws
// PathConsistencyError on non-path-consistent input and std::logic_error if
// the parents of a multi-parent node disagree pairwise.
FullCounts extend_reduced(const ReducedCounts& rc);

// Per row: n_c = s_c - sum_{x <= c, x != c} n_x by increasing distance to
// the sink, then source counts from marginal largeness. Throws
// PathConsistencyError if a count goes negative or the nonzero entries do
// not lie on one path.
MLTableau reconstruct(const FullCounts& fc);

MLTableau tableau_from_reduced(const ReducedCounts& rc);
ReducedCounts reduced_from_tableau(const MLTableau& t);

}  // namespace binf
