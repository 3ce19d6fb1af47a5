#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "symcomp/geometry.hpp"

namespace symcomp {

// Discrete-time model with a deterministic sample map and a sound
// reachable-set over-approximation on box arguments. Implementations must be
// pure: step and reach_over are called concurrently from many workers.
class SystemModel {
 public:
  virtual ~SystemModel() = default;

  int state_dim() const { return n_; }
  int input_dim() const { return p_; }
  const IntervalBox& input_domain() const { return input_domain_; }

  void step(std::span<const Real> x, std::span<const Real> u, std::span<Real> out) const;
  std::vector<Real> step(std::span<const Real> x, std::span<const Real> u) const;

  // Sound: every step(x,u) with x in state_box and u in input_box lands inside
  // the result. Monotone in both arguments under box inclusion.
  IntervalBox reach_over(const IntervalBox& state_box, const IntervalBox& input_box) const;

  // Hook for model-specific constraints on the safe set (e.g. the thermal
  // model requires the heater temperature above the safe range).
  virtual void validate_safe_set(const IntervalBox& safe_set) const;

 protected:
  SystemModel(int n, int p, IntervalBox input_domain);
  virtual void do_step(std::span<const Real> x, std::span<const Real> u,
                       std::span<Real> out) const = 0;
  virtual IntervalBox do_reach_over(const IntervalBox& state_box,
                                    const IntervalBox& input_box) const = 0;

 private:
  int n_, p_;
  IntervalBox input_domain_;
};

// Circular building of n rooms; one heater input per room.
//   T_i' = T_i + alpha (T_{i+1} + T_{i-1} - 2 T_i) + beta (T_e - T_i)
//          + gamma (T_h - T_i) u_i,      indices wrap around the ring.
struct ThermalRingParams {
  int rooms = 0;
  Real alpha = 0.45;
  Real beta = 0.045;
  Real gamma = 0.09;
  Real outside_temp = -1.0;  // T_e
  Real heater_temp = 50.0;   // T_h
  Real input_max = 0.6;      // U = [0, input_max]^rooms
};

class ThermalRingModel final : public SystemModel {
  ThermalRingParams prm_;

 public:
  explicit ThermalRingModel(const ThermalRingParams& prm);
  const ThermalRingParams& params() const { return prm_; }
  void validate_safe_set(const IntervalBox& safe_set) const override;

 protected:
  void do_step(std::span<const Real> x, std::span<const Real> u,
               std::span<Real> out) const override;
  IntervalBox do_reach_over(const IntervalBox& state_box,
                            const IntervalBox& input_box) const override;
};

std::shared_ptr<SystemModel> thermal_ring(const ThermalRingParams& prm);

// Componentwise-monotone map with user-declared monotonicity directions:
// signs[i][j] = +1 if output i is nondecreasing in argument j, -1 if
// nonincreasing. reach_over is the exact interval hull obtained by evaluating
// the update at the per-output min/max corners.
class GenericMonotoneModel final : public SystemModel {
 public:
  using StepFn =
      std::function<void(std::span<const Real>, std::span<const Real>, std::span<Real>)>;

  GenericMonotoneModel(int n, int p, IntervalBox input_domain, StepFn step,
                       std::vector<std::vector<int>> state_signs,
                       std::vector<std::vector<int>> input_signs);

 protected:
  void do_step(std::span<const Real> x, std::span<const Real> u,
               std::span<Real> out) const override;
  IntervalBox do_reach_over(const IntervalBox& state_box,
                            const IntervalBox& input_box) const override;

 private:
  StepFn step_;
  std::vector<std::vector<int>> state_signs_, input_signs_;
};

// x' = A x + B u + c; componentwise monotone with signs taken from the matrix
// entries. The CLI's "generic-monotone" model kind.
std::shared_ptr<SystemModel> affine_monotone(std::vector<std::vector<Real>> A,
                                             std::vector<std::vector<Real>> B,
                                             std::vector<Real> c, IntervalBox input_domain);

}  // namespace symcomp
