#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcomp/util.hpp"

namespace symcomp {

using Real = double;
using CellIndex = std::vector<std::int32_t>;

// Axis-aligned closed box in R^k. Degenerate axes (lo == hi) are allowed.
class IntervalBox {
  std::vector<Real> lo_, hi_;

 public:
  IntervalBox() = default;
  IntervalBox(std::vector<Real> lo, std::vector<Real> hi);

  static IntervalBox point(std::span<const Real> x);

  int dim() const { return static_cast<int>(lo_.size()); }
  Real lo(int k) const { return lo_[static_cast<std::size_t>(k)]; }
  Real hi(int k) const { return hi_[static_cast<std::size_t>(k)]; }
  Real width(int k) const { return hi(k) - lo(k); }
  std::span<const Real> lower() const { return lo_; }
  std::span<const Real> upper() const { return hi_; }

  void set(int k, Real lo, Real hi);

  bool contains_point(std::span<const Real> x) const;
  // closed-set tests
  bool contains_box(const IntervalBox& inner) const;
  bool intersects(const IntervalBox& other) const;

  IntervalBox project(std::span<const int> axes) const;

  bool operator==(const IntervalBox&) const = default;
  std::string to_string() const;
};

// Cell(index) or the absorbing Out symbol.
class AbstractState {
  bool out_ = true;
  CellIndex cell_;

 public:
  static AbstractState out() { return AbstractState{}; }
  static AbstractState cell(CellIndex ix) {
    AbstractState s;
    s.out_ = false;
    s.cell_ = std::move(ix);
    return s;
  }

  bool is_out() const { return out_; }
  const CellIndex& cell_index() const { return cell_; }

  bool operator==(const AbstractState&) const = default;
};

// Inclusive per-axis index rectangle; the successor sets of grid abstractions
// are always of this shape.
struct CellRange {
  std::vector<std::int32_t> lo, hi;  // inclusive; empty range encoded lo > hi on some axis

  int rank() const { return static_cast<int>(lo.size()); }
  bool empty() const;
  std::int64_t count() const;
  bool contains(std::span<const std::int32_t> cell) const;

  // Intersects `other` into this range (same rank).
  void intersect(const CellRange& other);

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (empty()) return;
    CellIndex ix(lo.begin(), lo.end());
    for (;;) {
      fn(static_cast<const CellIndex&>(ix));
      int k = rank() - 1;
      while (k >= 0) {
        if (++ix[static_cast<std::size_t>(k)] <= hi[static_cast<std::size_t>(k)]) break;
        ix[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
        --k;
      }
      if (k < 0) return;
    }
  }
};

// Uniform partition of a full-dimensional box: axis i carries cells(i)
// half-open cells [b_k, b_{k+1}), except the last cell which is closed, so the
// cells tile the domain exactly.
class UniformGridPartition {
  IntervalBox domain_;
  std::vector<std::int32_t> cells_;
  std::vector<Real> width_;

 public:
  UniformGridPartition(IntervalBox domain, std::vector<std::int32_t> cells_per_component);

  int dim() const { return domain_.dim(); }
  const IntervalBox& domain() const { return domain_; }
  std::int32_t cells(int axis) const { return cells_[static_cast<std::size_t>(axis)]; }
  std::span<const std::int32_t> cells_per_axis() const { return cells_; }
  Real cell_width(int axis) const { return width_[static_cast<std::size_t>(axis)]; }
  std::int64_t total_cells() const;

  // k-th cell boundary on an axis; boundary(axis, cells(axis)) is exactly the
  // domain upper bound.
  Real boundary(int axis, std::int32_t k) const;

  // Index of the cell containing x on one axis, or nullopt if outside the
  // domain. Half-open convention (upper domain edge belongs to the last cell).
  std::optional<std::int32_t> locate_axis(int axis, Real x) const;

  AbstractState locate(std::span<const Real> x) const;

  // Closed hull of the (projected) cell over the given components.
  IntervalBox cell_box(const CellIndex& cell, std::span<const int> components) const;

  // Cells whose half-open boxes meet `box` (treated half-open at the top, so a
  // box ending exactly on a boundary does not reach the cell above unless it
  // is a single point). nullopt when the box misses the domain entirely.
  std::optional<CellRange> cell_range_meeting(const IntervalBox& box,
                                              std::span<const int> components) const;

  std::vector<CellIndex> cells_meeting_box(const IntervalBox& box,
                                           std::span<const int> components) const;

  IndexSpace cell_space(std::span<const int> components) const;

  bool operator==(const UniformGridPartition&) const = default;
};

// Positions of `sub` inside `full`; both strictly increasing, sub ⊆ full.
std::vector<int> component_positions(std::span<const int> full, std::span<const int> sub);

CellIndex project_cell(const CellIndex& cell, std::span<const int> full,
                       std::span<const int> sub);
IntervalBox project_box(const IntervalBox& box, std::span<const int> full,
                        std::span<const int> sub);

}  // namespace symcomp
