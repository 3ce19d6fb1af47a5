#include "symcomp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symcomp {

IntervalBox::IntervalBox(std::vector<Real> lo, std::vector<Real> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size())
    throw std::invalid_argument("IntervalBox: lower/upper dimension mismatch");
  for (std::size_t k = 0; k < lo_.size(); ++k)
    if (!(lo_[k] <= hi_[k]))
      throw std::invalid_argument("IntervalBox: lower[" + std::to_string(k) +
                                  "] > upper[" + std::to_string(k) + "]");
}

IntervalBox IntervalBox::point(std::span<const Real> x) {
  std::vector<Real> v(x.begin(), x.end());
  return IntervalBox(v, v);
}

void IntervalBox::set(int k, Real lo, Real hi) {
  if (!(lo <= hi)) throw std::invalid_argument("IntervalBox::set: lo > hi");
  lo_[static_cast<std::size_t>(k)] = lo;
  hi_[static_cast<std::size_t>(k)] = hi;
}

bool IntervalBox::contains_point(std::span<const Real> x) const {
  for (int k = 0; k < dim(); ++k)
    if (x[static_cast<std::size_t>(k)] < lo(k) || x[static_cast<std::size_t>(k)] > hi(k))
      return false;
  return true;
}

bool IntervalBox::contains_box(const IntervalBox& inner) const {
  for (int k = 0; k < dim(); ++k)
    if (inner.lo(k) < lo(k) || inner.hi(k) > hi(k)) return false;
  return true;
}

bool IntervalBox::intersects(const IntervalBox& other) const {
  for (int k = 0; k < dim(); ++k)
    if (other.hi(k) < lo(k) || other.lo(k) > hi(k)) return false;
  return true;
}

IntervalBox IntervalBox::project(std::span<const int> axes) const {
  std::vector<Real> l, h;
  l.reserve(axes.size());
  h.reserve(axes.size());
  for (int a : axes) {
    if (a < 0 || a >= dim()) throw std::out_of_range("IntervalBox::project: axis out of range");
    l.push_back(lo(a));
    h.push_back(hi(a));
  }
  return IntervalBox(std::move(l), std::move(h));
}

std::string IntervalBox::to_string() const {
  std::ostringstream os;
  for (int k = 0; k < dim(); ++k) {
    if (k) os << "x";
    os << "[" << lo(k) << "," << hi(k) << "]";
  }
  return os.str();
}

bool CellRange::empty() const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return true;
  return lo.empty();
}

std::int64_t CellRange::count() const {
  if (lo.empty()) return 0;
  std::int64_t c = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) return 0;
    c *= hi[k] - lo[k] + 1;
  }
  return c;
}

bool CellRange::contains(std::span<const std::int32_t> cell) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (cell[k] < lo[k] || cell[k] > hi[k]) return false;
  return true;
}

void CellRange::intersect(const CellRange& other) {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    lo[k] = std::max(lo[k], other.lo[k]);
    hi[k] = std::min(hi[k], other.hi[k]);
  }
}

UniformGridPartition::UniformGridPartition(IntervalBox domain,
                                           std::vector<std::int32_t> cells_per_component)
    : domain_(std::move(domain)), cells_(std::move(cells_per_component)) {
  if (static_cast<int>(cells_.size()) != domain_.dim())
    throw std::invalid_argument("UniformGridPartition: cell-count vector must match dimension");
  width_.resize(cells_.size());
  for (int i = 0; i < domain_.dim(); ++i) {
    if (cells_[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("UniformGridPartition: need at least one cell per axis");
    if (cells_[static_cast<std::size_t>(i)] > 30000)
      throw std::invalid_argument("UniformGridPartition: per-axis cell count too large");
    if (!(domain_.width(i) > 0))
      throw std::invalid_argument("UniformGridPartition: domain axis " + std::to_string(i) +
                                  " has no extent");
    width_[static_cast<std::size_t>(i)] = domain_.width(i) / cells_[static_cast<std::size_t>(i)];
  }
}

std::int64_t UniformGridPartition::total_cells() const {
  return IndexSpace(cells_).size();
}

Real UniformGridPartition::boundary(int axis, std::int32_t k) const {
  if (k <= 0) return domain_.lo(axis);
  if (k >= cells(axis)) return domain_.hi(axis);
  return domain_.lo(axis) + static_cast<Real>(k) * cell_width(axis);
}

std::optional<std::int32_t> UniformGridPartition::locate_axis(int axis, Real x) const {
  if (x < domain_.lo(axis) || x > domain_.hi(axis)) return std::nullopt;
  auto n = cells(axis);
  auto k = static_cast<std::int32_t>(std::floor((x - domain_.lo(axis)) / cell_width(axis)));
  k = std::clamp(k, std::int32_t{0}, n - 1);
  // floor() on the quotient can be off by one ulp around cell boundaries;
  // settle against the boundaries themselves.
  while (k > 0 && x < boundary(axis, k)) --k;
  while (k < n - 1 && x >= boundary(axis, k + 1)) ++k;
  return k;
}

AbstractState UniformGridPartition::locate(std::span<const Real> x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("locate: point dimension mismatch");
  CellIndex ix(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    auto k = locate_axis(i, x[static_cast<std::size_t>(i)]);
    if (!k) return AbstractState::out();
    ix[static_cast<std::size_t>(i)] = *k;
  }
  return AbstractState::cell(std::move(ix));
}

IntervalBox UniformGridPartition::cell_box(const CellIndex& cell,
                                           std::span<const int> components) const {
  if (cell.size() != components.size())
    throw std::invalid_argument("cell_box: index/component rank mismatch");
  std::vector<Real> lo(cell.size()), hi(cell.size());
  for (std::size_t k = 0; k < components.size(); ++k) {
    int axis = components[k];
    if (axis < 0 || axis >= dim()) throw std::out_of_range("cell_box: unknown component");
    if (cell[k] < 0 || cell[k] >= cells(axis))
      throw std::out_of_range("cell_box: cell index out of range on axis " +
                              std::to_string(axis));
    lo[k] = boundary(axis, cell[k]);
    hi[k] = boundary(axis, cell[k] + 1);
  }
  return IntervalBox(std::move(lo), std::move(hi));
}

std::optional<CellRange> UniformGridPartition::cell_range_meeting(
    const IntervalBox& box, std::span<const int> components) const {
  if (box.dim() != static_cast<int>(components.size()))
    throw std::invalid_argument("cell_range_meeting: box/component rank mismatch");
  CellRange r;
  r.lo.resize(components.size());
  r.hi.resize(components.size());
  for (std::size_t k = 0; k < components.size(); ++k) {
    int axis = components[k];
    Real bl = box.lo(static_cast<int>(k)), bu = box.hi(static_cast<int>(k));
    if (bu < domain_.lo(axis) || bl > domain_.hi(axis)) return std::nullopt;
    auto klo = locate_axis(axis, std::max(bl, domain_.lo(axis)));
    auto khi = locate_axis(axis, std::min(bu, domain_.hi(axis)));
    std::int32_t lo = *klo, hi = *khi;
    // Half-open upper side: a non-degenerate box ending exactly on a cell
    // boundary stays out of the cell above it.
    if (bu > bl && hi > 0 && bu == boundary(axis, hi)) --hi;
    if (hi < lo) hi = lo;  // degenerate box sitting on a boundary
    r.lo[k] = lo;
    r.hi[k] = hi;
  }
  return r;
}

std::vector<CellIndex> UniformGridPartition::cells_meeting_box(
    const IntervalBox& box, std::span<const int> components) const {
  std::vector<CellIndex> out;
  auto r = cell_range_meeting(box, components);
  if (!r) return out;
  out.reserve(static_cast<std::size_t>(r->count()));
  r->for_each([&](const CellIndex& ix) { out.push_back(ix); });
  return out;
}

IndexSpace UniformGridPartition::cell_space(std::span<const int> components) const {
  std::vector<std::int32_t> dims;
  dims.reserve(components.size());
  for (int axis : components) dims.push_back(cells(axis));
  return IndexSpace(std::move(dims));
}

std::vector<int> component_positions(std::span<const int> full, std::span<const int> sub) {
  std::vector<int> pos;
  pos.reserve(sub.size());
  std::size_t i = 0;
  for (int want : sub) {
    while (i < full.size() && full[i] < want) ++i;
    if (i == full.size() || full[i] != want)
      throw std::invalid_argument("component_positions: " + std::to_string(want) +
                                  " is not a component of the full index set");
    pos.push_back(static_cast<int>(i));
  }
  return pos;
}

CellIndex project_cell(const CellIndex& cell, std::span<const int> full,
                       std::span<const int> sub) {
  auto pos = component_positions(full, sub);
  CellIndex out;
  out.reserve(pos.size());
  for (int p : pos) out.push_back(cell[static_cast<std::size_t>(p)]);
  return out;
}

IntervalBox project_box(const IntervalBox& box, std::span<const int> full,
                        std::span<const int> sub) {
  auto pos = component_positions(full, sub);
  return box.project(pos);
}

}  // namespace symcomp
