#include "app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"
#include "render.hpp"

namespace movmed::cli {

namespace {

void add_optional(CLI::App* cmd, const std::string& name, std::optional<double>& target, const std::string& help) {
  cmd->add_option_function<double>(name, [&target](const double& v) { target = v; }, help);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electrodynamics of moving dielectric media"};
  app.name("movmed");
  app.set_config("--config", "", "Read options from an INI or TOML file (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--medium-n", g.n, "Refractive index n")->capture_default_str();
  app.add_option("--medium-mu", g.mu, "Permeability mu")->capture_default_str();
  app.add_option("--velocity", g.velocity, "Medium velocity vx,vy,vz in units of c")->capture_default_str();
  app.add_option("--format", g.format, "Output format: json, csv or text")->capture_default_str();

  std::string kvec = "1,0,0";
  auto* dispersion = app.add_subcommand("dispersion", "Frequencies of the two shell branches for a wavevector");
  dispersion->add_option("--kvec", kvec, "Spatial wavevector kx,ky,kz")->required();

  std::string wavevector;
  bool inverse = false;
  auto* map = app.add_subcommand("map", "Map a vacuum photon into the medium (or back with --inverse)");
  map->add_option("--wavevector", wavevector, "Contravariant four-wavevector w0,w1,w2,w3")->required();
  map->add_flag("--inverse", inverse, "Input is a medium wavevector; map it to vacuum");

  double k0 = 1.0;
  auto* surface = app.add_subcommand("surface", "Classify the constant-frequency wave surface");
  surface->add_option("--k0", k0, "Frequency k0 (nonzero)")->capture_default_str();

  ForcesInput fin;
  std::string e_field = "0,0,0", grad_eps = "0,0,0", poynting_rate = "0,0,0";
  auto* forces = app.add_subcommand("forces", "Optical force densities (SI, medium at rest)");
  forces->add_option("--e-field", e_field, "Electric field Ex,Ey,Ez in V/m")->capture_default_str();
  forces->add_option("--grad-eps", grad_eps, "Gradient of relative permittivity in 1/m")->capture_default_str();
  forces->add_option("--poynting-rate", poynting_rate, "d(E x H)/dt in W/(m^2 s)")->capture_default_str();
  add_optional(forces, "--peak-poynting", fin.peak_poynting, "Beam peak Poynting flux in W/m^2");
  add_optional(forces, "--omega", fin.omega, "Beam angular frequency in rad/s");
  add_optional(forces, "--eps-begin", fin.eps_begin, "Relative permittivity before the boundary layer");
  add_optional(forces, "--eps-end", fin.eps_end, "Relative permittivity after the boundary layer");
  forces->add_option("--e-tangential", fin.e_tangential, "Tangential electric field in V/m");
  forces->add_option("--d-normal", fin.d_normal, "Normal displacement in C/m^2");

  ExperimentsInput xin;
  auto* experiments = app.add_subcommand("experiments", "Predictions for the radiation-pressure experiments (SI)");
  add_optional(experiments, "--power-w", xin.power_w, "Circulating power in W");
  add_optional(experiments, "--modulation-omega-rad-s", xin.modulation_omega_rad_s, "Power modulation frequency");
  add_optional(experiments, "--ring-radius-m", xin.ring_radius_m, "Ring radius in m");
  add_optional(experiments, "--reflectivity", xin.reflectivity, "Mirror reflectivity in [0, 1]");
  add_optional(experiments, "--incident-poynting-w-m2", xin.incident_poynting_w_m2, "Incident Poynting flux");
  add_optional(experiments, "--photon-omega-rad-s", xin.photon_omega_rad_s, "Photon angular frequency");

  SweepInput sin;
  std::string direction = "1,0,0", sweep_kvec = "1,0,0";
  auto* sweep = app.add_subcommand("sweep", "Tabulate the dispersion report over v or n");
  sweep->add_option("--variable", sin.variable, "Swept quantity: v or n")->capture_default_str();
  sweep->add_option("--from", sin.from, "First value")->required();
  sweep->add_option("--to", sin.to, "Last value")->required();
  sweep->add_option("--points", sin.points, "Number of grid points")->required();
  sweep->add_option("--direction", direction, "Velocity direction for a v sweep")->capture_default_str();
  sweep->add_option("--kvec", sweep_kvec, "Spatial wavevector kx,ky,kz")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const Format format = parse_format(g.format);
    json report;
    if (*dispersion) {
      report = dispersion_report(make_medium(g), parse_vec3(kvec, "--kvec"));
    } else if (*map) {
      const auto w = parse_list(wavevector, 4, "--wavevector");
      report = map_report(make_medium(g), RealFourVector::upper(w[0], w[1], w[2], w[3]), inverse);
    } else if (*surface) {
      report = surface_report(make_medium(g), k0);
    } else if (*forces) {
      fin.e_field = parse_vec3(e_field, "--e-field");
      fin.grad_eps = parse_vec3(grad_eps, "--grad-eps");
      fin.poynting_rate = parse_vec3(poynting_rate, "--poynting-rate");
      report = forces_report(g.n, fin);
    } else if (*experiments) {
      report = experiments_report(g.n, xin);
    } else if (*sweep) {
      sin.direction = parse_vec3(direction, "--direction");
      sin.kvec = parse_vec3(sweep_kvec, "--kvec");
      report = sweep_report(g, sin);
    }
    out << render(report, format);
    return exit_ok;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace movmed::cli
