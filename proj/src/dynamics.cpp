#include "symcomp/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace symcomp {

SystemModel::SystemModel(int n, int p, IntervalBox input_domain)
    : n_(n), p_(p), input_domain_(std::move(input_domain)) {
  if (n_ < 1 || p_ < 1) throw std::invalid_argument("SystemModel: dimensions must be positive");
  if (input_domain_.dim() != p_)
    throw std::invalid_argument("SystemModel: input domain dimension mismatch");
}

void SystemModel::step(std::span<const Real> x, std::span<const Real> u,
                       std::span<Real> out) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(u.size()) != p_ ||
      static_cast<int>(out.size()) != n_)
    throw std::invalid_argument("step: dimension mismatch");
  do_step(x, u, out);
}

std::vector<Real> SystemModel::step(std::span<const Real> x, std::span<const Real> u) const {
  std::vector<Real> out(static_cast<std::size_t>(n_));
  step(x, u, out);
  return out;
}

IntervalBox SystemModel::reach_over(const IntervalBox& state_box,
                                    const IntervalBox& input_box) const {
  if (state_box.dim() != n_)
    throw std::invalid_argument("reach_over: state box dimension mismatch");
  if (input_box.dim() != p_)
    throw std::invalid_argument("reach_over: input box dimension mismatch");
  return do_reach_over(state_box, input_box);
}

void SystemModel::validate_safe_set(const IntervalBox& safe_set) const {
  if (safe_set.dim() != n_)
    throw std::invalid_argument("safe set dimension does not match the model");
}

ThermalRingModel::ThermalRingModel(const ThermalRingParams& prm)
    : SystemModel(prm.rooms, prm.rooms,
                  prm.rooms >= 1
                      ? IntervalBox(std::vector<Real>(static_cast<std::size_t>(prm.rooms), 0.0),
                                    std::vector<Real>(static_cast<std::size_t>(prm.rooms),
                                                      prm.input_max))
                      : IntervalBox()),
      prm_(prm) {
  if (prm_.rooms < 3) throw std::invalid_argument("thermal ring: need at least 3 rooms");
  if (!(prm_.input_max > 0)) throw std::invalid_argument("thermal ring: input_max must be > 0");
  Real self = 1.0 - 2.0 * prm_.alpha - prm_.beta - prm_.gamma * prm_.input_max;
  if (self < 0)
    throw std::invalid_argument(
        "thermal ring: 1 - 2*alpha - beta - gamma*input_max = " + std::to_string(self) +
        " is negative; the update is not monotone in the room temperature");
}

void ThermalRingModel::validate_safe_set(const IntervalBox& safe_set) const {
  SystemModel::validate_safe_set(safe_set);
  for (int i = 0; i < state_dim(); ++i)
    if (!(safe_set.hi(i) < prm_.heater_temp))
      throw std::invalid_argument(
          "thermal ring: safe set upper bound on component " + std::to_string(i + 1) +
          " must stay below the heater temperature " + std::to_string(prm_.heater_temp));
}

void ThermalRingModel::do_step(std::span<const Real> x, std::span<const Real> u,
                               std::span<Real> out) const {
  const int n = state_dim();
  for (int i = 0; i < n; ++i) {
    Real next = x[static_cast<std::size_t>((i + 1) % n)];
    Real prev = x[static_cast<std::size_t>((i + n - 1) % n)];
    Real ti = x[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = ti + prm_.alpha * (next + prev - 2.0 * ti) +
                                       prm_.beta * (prm_.outside_temp - ti) +
                                       prm_.gamma * (prm_.heater_temp - ti) *
                                           u[static_cast<std::size_t>(i)];
  }
}

IntervalBox ThermalRingModel::do_reach_over(const IntervalBox& state_box,
                                            const IntervalBox& input_box) const {
  // The update is nondecreasing in every temperature (given the parameter
  // constraint) and in u_i (given T_h above the box), so the tight hull is the
  // image of the two extreme corners.
  const int n = state_dim();
  std::vector<Real> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  do_step(state_box.lower(), input_box.lower(), lo);
  do_step(state_box.upper(), input_box.upper(), hi);
  return IntervalBox(std::move(lo), std::move(hi));
}

std::shared_ptr<SystemModel> thermal_ring(const ThermalRingParams& prm) {
  return std::make_shared<ThermalRingModel>(prm);
}

GenericMonotoneModel::GenericMonotoneModel(int n, int p, IntervalBox input_domain, StepFn step,
                                           std::vector<std::vector<int>> state_signs,
                                           std::vector<std::vector<int>> input_signs)
    : SystemModel(n, p, std::move(input_domain)),
      step_(std::move(step)),
      state_signs_(std::move(state_signs)),
      input_signs_(std::move(input_signs)) {
  auto check = [](const std::vector<std::vector<int>>& signs, std::size_t rows,
                  std::size_t cols, const char* what) {
    if (signs.size() != rows)
      throw std::invalid_argument(std::string("monotone model: ") + what + " sign rows");
    for (const auto& row : signs) {
      if (row.size() != cols)
        throw std::invalid_argument(std::string("monotone model: ") + what + " sign columns");
      for (int s : row)
        if (s != 1 && s != -1)
          throw std::invalid_argument("monotone model: signs must be +1 or -1");
    }
  };
  check(state_signs_, static_cast<std::size_t>(n), static_cast<std::size_t>(n), "state");
  check(input_signs_, static_cast<std::size_t>(n), static_cast<std::size_t>(p), "input");
}

void GenericMonotoneModel::do_step(std::span<const Real> x, std::span<const Real> u,
                                   std::span<Real> out) const {
  step_(x, u, out);
}

IntervalBox GenericMonotoneModel::do_reach_over(const IntervalBox& state_box,
                                                const IntervalBox& input_box) const {
  const int n = state_dim();
  const int p = input_dim();
  std::vector<Real> xc(static_cast<std::size_t>(n)), uc(static_cast<std::size_t>(p)),
      val(static_cast<std::size_t>(n));
  std::vector<Real> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& sx = state_signs_[static_cast<std::size_t>(i)];
    const auto& su = input_signs_[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
      xc[static_cast<std::size_t>(j)] = sx[static_cast<std::size_t>(j)] > 0
                                            ? state_box.lo(j)
                                            : state_box.hi(j);
    for (int j = 0; j < p; ++j)
      uc[static_cast<std::size_t>(j)] = su[static_cast<std::size_t>(j)] > 0
                                            ? input_box.lo(j)
                                            : input_box.hi(j);
    step_(xc, uc, val);
    lo[static_cast<std::size_t>(i)] = val[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
      xc[static_cast<std::size_t>(j)] = sx[static_cast<std::size_t>(j)] > 0
                                            ? state_box.hi(j)
                                            : state_box.lo(j);
    for (int j = 0; j < p; ++j)
      uc[static_cast<std::size_t>(j)] = su[static_cast<std::size_t>(j)] > 0
                                            ? input_box.hi(j)
                                            : input_box.lo(j);
    step_(xc, uc, val);
    hi[static_cast<std::size_t>(i)] = val[static_cast<std::size_t>(i)];
  }
  return IntervalBox(std::move(lo), std::move(hi));
}

std::shared_ptr<SystemModel> affine_monotone(std::vector<std::vector<Real>> A,
                                             std::vector<std::vector<Real>> B,
                                             std::vector<Real> c, IntervalBox input_domain) {
  const int n = static_cast<int>(A.size());
  if (n == 0) throw std::invalid_argument("affine model: empty state matrix");
  const int p = static_cast<int>(B.empty() ? 0 : B[0].size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("affine model: A must be square");
  if (static_cast<int>(B.size()) != n)
    throw std::invalid_argument("affine model: B must have one row per state");
  for (const auto& row : B)
    if (static_cast<int>(row.size()) != p)
      throw std::invalid_argument("affine model: ragged B");
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("affine model: offset dimension mismatch");

  std::vector<std::vector<int>> sx(static_cast<std::size_t>(n),
                                   std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<std::vector<int>> su(static_cast<std::size_t>(n),
                                   std::vector<int>(static_cast<std::size_t>(p), 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      sx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= 0 ? 1 : -1;
    for (int j = 0; j < p; ++j)
      su[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= 0 ? 1 : -1;
  }

  auto step = [A = std::move(A), B = std::move(B), c = std::move(c), n, p](
                  std::span<const Real> x, std::span<const Real> u, std::span<Real> out) {
    for (int i = 0; i < n; ++i) {
      Real acc = c[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        acc += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               x[static_cast<std::size_t>(j)];
      for (int j = 0; j < p; ++j)
        acc += B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               u[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = acc;
    }
  };
  return std::make_shared<GenericMonotoneModel>(n, p, std::move(input_domain), std::move(step),
                                                std::move(sx), std::move(su));
}

}  // namespace symcomp
