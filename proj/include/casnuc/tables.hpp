#pragma once

// Tabular reports: the plasma-state table, the closed-form cross-check
// table, and distance sweeps of the interaction free energy.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "casnuc/lifshitz.hpp"
#include "casnuc/plasma.hpp"

namespace casnuc {

using Cell = std::variant<std::string, double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Scientific notation with 9 significant digits, '.' decimal separator.
std::string format_number(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Separations of the tabulated plasma states, in fm.
inline constexpr double kTableSeparationsFm[] = {1.0, 1.5, 2.0, 2.6, 3.0};

// which = 2: plasma states at kTableSeparationsFm.
// which = 1: each closed-form distance expression against the composed
//   pipeline on a log grid of L in [0.1, 100] fm, with the max relative
//   deviation.
Table emit_table(int which, const PermeabilityModel& model = PermeabilityModel::spin());

struct SweepSpec {
  double L_min = 1e-15;  // m
  double L_max = 3e-15;  // m
  std::size_t points = 200;
  PermeabilityModel model = PermeabilityModel::spin();
  TemperatureMode mode = TemperatureMode::coupled();
  double R = kDefaultProtonRadius;  // m
  Method method = Method::asymptote;

  void validate() const;
  std::vector<double> grid() const;
};

// Evaluated in grid order; one breakdown per grid point.
std::vector<FreeEnergyBreakdown> run_sweep(const SweepSpec& spec);

// Columns: L_fm, T_K, rho_m3, omega_ep, mu_ep, kappa_1_m, F0_MeV, Fn_MeV, Ftot_MeV.
Table sweep_table(const std::vector<FreeEnergyBreakdown>& points);

}  // namespace casnuc
