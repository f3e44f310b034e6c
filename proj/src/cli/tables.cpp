#include "casnuc/tables.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>
#include <numbers>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"
#include "casnuc/units.hpp"

namespace casnuc {

namespace {

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

std::string format_number(double v) { return fmt::format("{:.8e}", v); }

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        out += *s;
      } else {
        out += format_number(std::get<double>(row[i]));
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.header[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

Table emit_table(int which, const PermeabilityModel& model) {
  if (which == 2) {
    Table t{.header = {"L_fm", "T_K", "rho_m3", "omega_ep_rad_s", "mu_ep"}, .rows = {}};
    for (double L_fm : kTableSeparationsFm) {
      const PlasmaState s = plasma_state_from_distance(L_fm * si::fm, model);
      t.rows.push_back({L_fm, s.T, s.rho, s.omega_ep, s.mu_ep});
    }
    return t;
  }
  if (which == 1) {
    struct Column {
      const char* name;
      double (*closed)(double);
      double (*composed)(double);
    };
    static constexpr Column columns[] = {
        // No separate temperature-side form for T: compare the balance
        // temperature with the one recovered from the ideal Casimir pressure.
        {"T_K", [](double L) { return temperature_from_distance(L); },
         [](double L) {
           const double hc = kConstants.hbar * kConstants.c;
           return temperature_from_force(std::numbers::pi * std::numbers::pi * hc /
                                         (240.0 * std::pow(L, 4)));
         }},
        {"rho_m3", [](double L) { return density_from_distance(L); },
         [](double L) { return pair_density(temperature_from_distance(L)); }},
        {"omega_ep_rad_s", [](double L) { return plasma_frequency_from_distance(L); },
         [](double L) { return plasma_frequency(pair_density(temperature_from_distance(L))); }},
        {"mu_ep", [](double L) { return permeability_from_distance(L); },
         [](double L) {
           const double T = temperature_from_distance(L);
           return pair_permeability_static(pair_density(T), T,
                                           PermeabilityConvention::table_consistent);
         }},
    };
    Table t{.header = {"quantity", "closed_form_at_1fm", "composed_at_1fm", "max_rel_deviation"},
            .rows = {}};
    constexpr int kGrid = 61;
    for (const Column& col : columns) {
      double max_dev = 0.0;
      for (int i = 0; i < kGrid; ++i) {
        const double L = 0.1 * si::fm * std::pow(1000.0, static_cast<double>(i) / (kGrid - 1));
        max_dev = std::max(max_dev, rel_dev(col.closed(L), col.composed(L)));
      }
      t.rows.push_back({std::string(col.name), col.closed(si::fm), col.composed(si::fm), max_dev});
    }
    return t;
  }
  throw DomainError("emit_table: `which` must be 1 or 2");
}

void SweepSpec::validate() const {
  detail::require(L_min > 0.0 && std::isfinite(L_min), "sweep: Lmin must be positive");
  detail::require(L_max > L_min && std::isfinite(L_max), "sweep: Lmax must exceed Lmin");
  detail::require(points >= 2, "sweep: need at least two points");
  detail::require(R > 0.0 && std::isfinite(R), "sweep: R must be positive");
  if (mode.kind == TemperatureMode::Kind::fixed) {
    detail::require(mode.initial_separation > 0.0, "sweep: fixed mode needs L0 > 0");
  }
  model.validate();
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  const double step = (L_max - L_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = L_min + step * static_cast<double>(i);
  g.back() = L_max;
  return g;
}

std::vector<FreeEnergyBreakdown> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const double area = plate_area(spec.R);
  std::vector<FreeEnergyBreakdown> out;
  out.reserve(spec.points);
  for (double L : spec.grid()) {
    out.push_back(total_free_energy(L, spec.model, spec.mode, area, spec.method));
  }
  return out;
}

Table sweep_table(const std::vector<FreeEnergyBreakdown>& points) {
  Table t{.header = {"L_fm", "T_K", "rho_m3", "omega_ep", "mu_ep", "kappa_1_m", "F0_MeV",
                     "Fn_MeV", "Ftot_MeV"},
          .rows = {}};
  for (const auto& b : points) {
    const double values[] = {b.state.L / si::fm, b.state.T, b.state.rho, b.state.omega_ep,
                             b.state.mu_ep, b.kappa, b.zero_freq_pair() / si::MeV,
                             b.finite_freq_pair() / si::MeV, b.total_pair() / si::MeV};
    for (double v : values) {
      if (!std::isfinite(v)) throw NumericalError("sweep: non-finite value in output");
    }
    t.rows.emplace_back(std::begin(values), std::end(values));
  }
  return t;
}

}  // namespace casnuc
