#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <numbers>
#include <set>

#include "casnuc/cli.hpp"
#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"
#include "casnuc/nuclear.hpp"
#include "casnuc/svg_plot.hpp"
#include "casnuc/tables.hpp"
#include "casnuc/units.hpp"

#ifndef CASNUC_VERSION
#define CASNUC_VERSION "0.0.0"
#endif

namespace casnuc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kEnvPrefix = "CASNUC_";

// Reference meson rest energy used for the inverse screening-length lookup.
constexpr double kReferenceMesonMeV = 135.0;

const std::map<std::string, Subcommand>& subcommand_names() {
  static const std::map<std::string, Subcommand> names{
      {"constants", Subcommand::constants}, {"state", Subcommand::state},
      {"table", Subcommand::table},         {"sweep", Subcommand::sweep},
      {"equilibrium", Subcommand::equilibrium}, {"meson", Subcommand::meson},
      {"linewidth", Subcommand::linewidth}, {"plot", Subcommand::plot}};
  return names;
}

std::string version_string() {
  return std::string("casnuc ") + CASNUC_VERSION + " (constants: " + kConstantsVintage + ")";
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string env_name(const std::string& lname) {
  std::string out = kEnvPrefix;
  for (char ch : lname) {
    out += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return out;
}

// key=value lines; '#' starts a comment; keys may carry a leading "--".
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

void add_model_options(CLI::App* sub, Params& p) {
  sub->add_option("--mu-model", p.mu_model, "Permeability model")
      ->check(CLI::IsMember({"unity", "spin", "field", "dynamic"}));
  sub->add_option("--H", p.H, "Applied field for --mu-model field (A/m)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--omega-mu", p.omega_mu, "Magnetic proper frequency for --mu-model dynamic (rad/s)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--convention", p.convention, "Pair susceptibility convention")
      ->check(CLI::IsMember({"table", "literal"}));
}

void add_output_options(CLI::App* sub, RunConfig& cfg, std::vector<std::string> formats) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--out", cfg.output, "Output path (default: stdout)");
}

void build_app(CLI::App& app, RunConfig& cfg) {
  Params& p = cfg.params;
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());
  app.fallthrough(false);

  auto* constants = app.add_subcommand("constants", "Physical constants (SI) as JSON");
  add_output_options(constants, cfg, {"json"});

  auto* state = app.add_subcommand("state", "Plasma state at one plate separation");
  state->add_option("--L", p.L_fm, "Plate separation (fm)")->required()->check(CLI::PositiveNumber);
  add_model_options(state, p);
  add_output_options(state, cfg, {"json"});

  auto* table = app.add_subcommand("table", "Reproduce the plasma-state tables");
  table->add_option("--which", p.which, "1: closed forms vs pipeline, 2: plasma states")
      ->check(CLI::IsMember({1, 2}));
  add_model_options(table, p);
  add_output_options(table, cfg, {"csv", "json"});

  auto* sweep = app.add_subcommand("sweep", "Free energy over a separation grid");
  sweep->add_option("--Lmin", p.L_min_fm, "Smallest separation (fm)")->check(CLI::PositiveNumber);
  sweep->add_option("--Lmax", p.L_max_fm, "Largest separation (fm)")->check(CLI::PositiveNumber);
  sweep->add_option("--points", p.points, "Grid points")->check(CLI::Range(2, 1'000'000));
  sweep->add_option("--mode", p.mode, "Temperature mode")->check(CLI::IsMember({"coupled", "fixed"}));
  sweep->add_option("--L0", p.L0_fm, "Initial separation fixing T in fixed mode (fm; default Lmin)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--R", p.R_fm, "Proton radius (fm)")->check(CLI::PositiveNumber);
  sweep->add_option("--method", p.method, "Evaluation method")
      ->check(CLI::IsMember({"exact", "asymptote", "full", "quadrature"}));
  add_model_options(sweep, p);
  add_output_options(sweep, cfg, {"csv", "json"});

  auto* equilibrium = app.add_subcommand("equilibrium", "Casimir-Coulomb equilibrium distance");
  equilibrium->add_option("--R", p.R_fm, "Proton radius (fm)")->check(CLI::PositiveNumber);
  add_output_options(equilibrium, cfg, {"json"});

  auto* meson = app.add_subcommand("meson", "Meson-mass analogue and screening length");
  meson->add_option("--L", p.L_fm, "Plate separation (fm)")->required()->check(CLI::PositiveNumber);
  add_model_options(meson, p);
  add_output_options(meson, cfg, {"json"});

  auto* linewidth = app.add_subcommand("linewidth", "Plasmon linewidth estimate");
  linewidth->add_option("--L", p.L_fm, "Plate separation (fm)")->required()->check(CLI::PositiveNumber);
  linewidth->add_option("--q-ratio", p.q_ratio, "q_pi / q_F")->required()->check(CLI::NonNegativeNumber);
  linewidth->add_option("--density", p.density, "Density entering the Fermi quantities")
      ->check(CLI::IsMember({"per-species", "total"}));
  add_output_options(linewidth, cfg, {"json"});

  auto* plot = app.add_subcommand("plot", "SVG line chart of the free-energy contributions");
  plot->add_option("--figure", p.figure, "1: zero-frequency term, unity vs spin; 2: contributions")
      ->check(CLI::IsMember({1, 2}));
  plot->add_option("--Lmin", p.L_min_fm, "Smallest separation (fm)")->check(CLI::PositiveNumber);
  plot->add_option("--Lmax", p.L_max_fm, "Largest separation (fm)")->check(CLI::PositiveNumber);
  plot->add_option("--points", p.points, "Grid points")->check(CLI::Range(2, 100'000));
  plot->add_option("--R", p.R_fm, "Proton radius (fm)")->check(CLI::PositiveNumber);
  plot->add_option("--method", p.method, "Evaluation method")
      ->check(CLI::IsMember({"exact", "asymptote", "full", "quadrature"}));
  add_model_options(plot, p);
  add_output_options(plot, cfg, {"svg"});
}

std::vector<std::string> option_names(const CLI::App* sub) {
  std::vector<std::string> names;
  for (const CLI::Option* opt : sub->get_options()) {
    for (const std::string& n : opt->get_lnames()) {
      if (n != "help") names.push_back(n);
    }
  }
  return names;
}

Method parse_method(const std::string& m) {
  if (m == "exact") return Method::exact_series;
  if (m == "full") return Method::full_matsubara;
  if (m == "quadrature") return Method::quadrature;
  return Method::asymptote;
}

json state_json(const PlasmaState& s, const PermeabilityModel& model) {
  const auto& K = kConstants;
  const double kappa = screening_wavevector(s);
  json j;
  j["L_m"] = s.L;
  j["L_fm"] = s.L / si::fm;
  j["T_K"] = s.T;
  j["kT_MeV"] = K.k_B * s.T / si::MeV;
  j["rho_m3"] = s.rho;
  j["rho_fm3"] = s.rho * std::pow(si::fm, 3);
  j["omega_ep_rad_s"] = s.omega_ep;
  j["hbar_omega_ep_MeV"] = K.hbar * s.omega_ep / si::MeV;
  j["mu_ep"] = s.mu_ep;
  j["kappa_1_m"] = kappa;
  j["kappa_1_fm"] = kappa * si::fm;
  j["mu_model"] = to_string(model.kind);
  j["convention"] = to_string(model.convention);
  if (model.kind == PermeabilityModel::Kind::field_dependent) j["H_A_m"] = model.H;
  if (model.kind == PermeabilityModel::Kind::dynamic) j["omega_mu_rad_s"] = model.omega_mu;
  j["kT_over_mec2"] = K.k_B * s.T / (K.m_e * K.c * K.c);
  j["notes"] = json::array(
      {"pair density uses the ultra-relativistic form, valid for k_B T >> m_e c^2"});
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render_constants() {
  const auto& K = kConstants;
  json j;
  j["hbar"] = K.hbar;
  j["c"] = K.c;
  j["k_B"] = K.k_B;
  j["e"] = K.e;
  j["m_e"] = K.m_e;
  j["eps0"] = K.eps0;
  j["mu0"] = K.mu0;
  j["mu_B"] = K.mu_B;
  j["zeta3"] = K.zeta3;
  j["vintage"] = kConstantsVintage;
  return dump(j);
}

std::string render_equilibrium(const Params& p) {
  const double R = p.R_fm * si::fm;
  const EquilibriumResult r = equilibrium_distance(R);
  json j;
  j["R_fm"] = p.R_fm;
  j["D"] = r.D;
  j["x_tilde"] = r.x_tilde;
  j["x_tilde_bisection"] = r.x_bisection;
  j["cubic_residual"] = r.residual;
  j["branch"] = r.trigonometric ? "trigonometric" : "cardano";
  j["L_eq_m"] = r.L_eq;
  j["L_eq_fm"] = r.L_eq / si::fm;
  j["coulomb_energy_MeV"] = coulomb_energy(R, r.L_eq) / si::MeV;
  j["casimir_energy_MeV"] = ideal_casimir(r.L_eq, plate_area(R)).energy / si::MeV;
  return dump(j);
}

std::string render_meson(const Params& p) {
  const PermeabilityModel model = permeability_model(p);
  const PlasmaState s = plasma_state_from_distance(p.L_fm * si::fm, model);
  const YukawaQuantities y = yukawa_quantities(s);
  json j;
  j["L_fm"] = p.L_fm;
  j["mu_model"] = to_string(model.kind);
  j["mu_ep"] = s.mu_ep;
  j["rho_m3"] = s.rho;
  j["meson_mass_MeV"] = y.meson_mass_energy / si::MeV;
  j["meson_mass_J"] = y.meson_mass_energy;
  j["screening_length_fm"] = y.screening_length / si::fm;
  j["screening_length_m"] = y.screening_length;
  j["kappa_1_m"] = y.kappa_source;
  j["reference_meson_MeV"] = kReferenceMesonMeV;
  j["reference_screening_length_fm"] = screening_length(kReferenceMesonMeV * si::MeV) / si::fm;
  return dump(j);
}

std::string render_linewidth(const Params& p, std::vector<std::string>* warnings) {
  const auto& K = kConstants;
  const PlasmaState s = plasma_state_from_distance(p.L_fm * si::fm, PermeabilityModel::unity());
  const double n = p.density == "total" ? s.rho : 0.5 * s.rho;
  const PlasmonLinewidth w = plasmon_linewidth(n, p.q_ratio);
  const FermiQuantities f = fermi_quantities(n);
  json j;
  j["L_fm"] = p.L_fm;
  j["q_ratio"] = p.q_ratio;
  j["density"] = p.density;
  j["n_m3"] = n;
  j["eps_F_MeV"] = f.eps_F / si::MeV;
  j["q_F_1_m"] = f.q_F;
  j["hbar_omega_p_over_2eps_F"] = w.ratio;
  j["bracket"] = w.bracket;
  j["delta_E_J"] = w.delta_E;
  j["delta_E_MeV"] = w.delta_E / si::MeV;
  if (w.delta_E > 0.0) {
    j["lifetime_bound_s"] = K.hbar / w.delta_E;
  } else {
    j["lifetime_bound_s"] = nullptr;
  }
  j["within_validity"] = w.within_validity;
  if (!w.within_validity && warnings) {
    warnings->push_back("linewidth bracket is negative; result outside the series' validity");
  }
  j["notes"] = json::array({"nonrelativistic Fermi energy",
                            "series bracket truncated after its linear term"});
  return dump(j);
}

SweepSpec sweep_spec(const Params& p) {
  SweepSpec spec;
  spec.L_min = p.L_min_fm * si::fm;
  spec.L_max = p.L_max_fm * si::fm;
  spec.points = static_cast<std::size_t>(p.points);
  spec.model = permeability_model(p);
  spec.R = p.R_fm * si::fm;
  spec.method = parse_method(p.method);
  if (p.mode == "fixed") {
    spec.mode = TemperatureMode::fixed_at((p.L0_fm > 0.0 ? p.L0_fm : p.L_min_fm) * si::fm);
  }
  return spec;
}

std::string render_plot(const Params& p) {
  SweepSpec spec = sweep_spec(p);
  auto to_mev = [](const std::vector<FreeEnergyBreakdown>& pts, auto field) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const auto& b : pts) out.push_back((b.*field)() / si::MeV);
    return out;
  };
  const std::vector<double> grid = spec.grid();
  std::vector<double> x;
  for (double L : grid) x.push_back(L / si::fm);

  PlotAxes axes{.title = "", .x_label = "L (fm)", .y_label = "Free energy (MeV)"};
  std::vector<PlotSeries> series;
  if (p.figure == 1) {
    axes.title = "Zero-frequency free energy";
    spec.model = PermeabilityModel::unity();
    const auto unity = run_sweep(spec);
    spec.model = permeability_model(p);
    if (spec.model.kind == PermeabilityModel::Kind::unity) spec.model = PermeabilityModel::spin();
    const auto magnetic = run_sweep(spec);
    series.push_back({.label = "mu_ep = 1", .x = x,
                      .y = to_mev(unity, &FreeEnergyBreakdown::zero_freq_pair),
                      .stroke = "#ff7f0e"});
    series.push_back({.label = "spin permeability", .x = x,
                      .y = to_mev(magnetic, &FreeEnergyBreakdown::zero_freq_pair),
                      .stroke = "#1f77b4"});
  } else {
    axes.title = "Free-energy contributions";
    const auto pts = run_sweep(spec);
    series.push_back({.label = "zero frequency", .x = x,
                      .y = to_mev(pts, &FreeEnergyBreakdown::zero_freq_pair),
                      .stroke = "#d62728"});
    series.push_back({.label = "finite frequency", .x = x,
                      .y = to_mev(pts, &FreeEnergyBreakdown::finite_freq_pair),
                      .stroke = "#1f77b4"});
    series.push_back({.label = "total", .x = x,
                      .y = to_mev(pts, &FreeEnergyBreakdown::total_pair),
                      .stroke = "#000000", .dashed = true});
  }
  return render_svg(series, axes);
}

}  // namespace

PermeabilityModel permeability_model(const Params& p) {
  PermeabilityModel m;
  if (p.mu_model == "unity") {
    m.kind = PermeabilityModel::Kind::unity;
  } else if (p.mu_model == "spin") {
    m.kind = PermeabilityModel::Kind::static_spin;
  } else if (p.mu_model == "field") {
    m.kind = PermeabilityModel::Kind::field_dependent;
  } else if (p.mu_model == "dynamic") {
    m.kind = PermeabilityModel::Kind::dynamic;
  } else {
    throw UsageError("unknown permeability model: " + p.mu_model);
  }
  m.convention = p.convention == "literal" ? PermeabilityConvention::equation_literal
                                           : PermeabilityConvention::table_consistent;
  m.H = p.H;
  m.omega_mu = p.omega_mu;
  return m;
}

RunConfig parse_run_config(const std::vector<std::string>& args, const EnvLookup& env) {
  // Pull --config out before CLI11 sees the arguments.
  std::vector<std::string> rest;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      config_path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }

  RunConfig cfg;
  CLI::App app{"Casimir-Yukawa interactions across an electron-positron plasma", "casnuc"};
  build_app(app, cfg);

  const auto sub_it = std::find_if(rest.begin(), rest.end(),
                                   [](const std::string& a) { return !a.empty() && a[0] != '-'; });
  std::vector<std::string> layered;
  if (sub_it != rest.end() && subcommand_names().count(*sub_it)) {
    const CLI::App* sub = app.get_subcommand(*sub_it);
    const std::vector<std::string> own = option_names(sub);
    std::set<std::string> known;
    for (const CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
      for (const auto& n : option_names(s)) known.insert(n);
    }
    std::vector<std::string> injected;
    if (config_path) {
      for (const auto& [key, value] : read_config_file(*config_path)) {
        if (!known.count(key)) throw UsageError("unknown config key: " + key);
        if (std::find(own.begin(), own.end(), key) == own.end()) continue;
        injected.push_back("--" + key);
        injected.push_back(value);
      }
    }
    for (const std::string& name : own) {
      if (auto v = env(env_name(name))) {
        injected.push_back("--" + name);
        injected.push_back(*v);
      }
    }
    layered.assign(rest.begin(), sub_it + 1);
    layered.insert(layered.end(), injected.begin(), injected.end());
    layered.insert(layered.end(), sub_it + 1, rest.end());
  } else {
    layered = rest;
  }

  std::reverse(layered.begin(), layered.end());
  try {
    app.parse(layered);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::CallForVersion&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.get_name()) + ": " + e.what());
  }

  for (const auto& [name, sc] : subcommand_names()) {
    if (app.got_subcommand(name)) cfg.subcommand = sc;
  }
  return cfg;
}

std::string execute(const RunConfig& config, std::vector<std::string>* warnings) {
  const Params& p = config.params;
  const std::string& fmt = config.format;
  auto tabular = [&](const Table& t) { return fmt == "json" ? to_json(t) : to_csv(t); };
  switch (config.subcommand) {
    case Subcommand::constants:
      return render_constants();
    case Subcommand::state: {
      const PermeabilityModel model = permeability_model(p);
      return dump(state_json(plasma_state_from_distance(p.L_fm * si::fm, model), model));
    }
    case Subcommand::table:
      return tabular(emit_table(p.which, permeability_model(p)));
    case Subcommand::sweep:
      return tabular(sweep_table(run_sweep(sweep_spec(p))));
    case Subcommand::equilibrium:
      return render_equilibrium(p);
    case Subcommand::meson:
      return render_meson(p);
    case Subcommand::linewidth:
      return render_linewidth(p, warnings);
    case Subcommand::plot:
      return render_plot(p);
  }
  throw UsageError("no subcommand");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  try {
    RunConfig cfg = parse_run_config(args, env);
    std::vector<std::string> warnings;
    const std::string doc = execute(cfg, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    if (cfg.output.empty()) {
      out << doc;
    } else {
      write_atomic(cfg.output, doc);
    }
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    // Rebuild to render help for the requested subcommand.
    RunConfig dummy;
    CLI::App app{"Casimir-Yukawa interactions across an electron-positron plasma", "casnuc"};
    build_app(app, dummy);
    const auto sub_it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
      return subcommand_names().count(a) > 0;
    });
    out << (sub_it != args.end() ? app.get_subcommand(*sub_it)->help() : app.help());
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace casnuc::cli
