#include "commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace movmed::cli {

namespace {

json array3(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json array4(const RealFourVector& v) {
  const auto u = v.raised();
  return json::array({u[0], u[1], u[2], u[3]});
}

json cone_angle(const MediumSpec& m) {
  if (!cherenkov_regime(m)) return nullptr;
  return cherenkov_cone(m);
}

void require_on_shell(const MediumSpec& m, const RealFourVector& k, const char* what) {
  if (!on_shell(m, k)) throw invariant_violation(std::string(what) + ": reported wavevector is off the shell");
}

json medium_json(const MediumSpec& m) {
  return {{"n", m.n()}, {"mu", m.mu()}, {"velocity", array3(m.velocity())}};
}

}  // namespace

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw usage_error(what + ": empty component in '" + text + "'");
    item = item.substr(first, last - first + 1);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || errno == ERANGE || !std::isfinite(v))
      throw usage_error(what + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw usage_error(what + ": expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return out;
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
  const auto v = parse_list(text, 3, what);
  return {v[0], v[1], v[2]};
}

MediumSpec make_medium(const GlobalOptions& g) {
  const Vec3 v = parse_vec3(g.velocity, "--velocity");
  try {
    return MediumSpec(g.n, g.mu, v);
  } catch (const domain_error& e) {
    throw usage_error(std::string("medium: ") + e.what());
  }
}

json dispersion_report(const MediumSpec& m, const Vec3& kvec) {
  const auto roots = solve_k0(m, kvec);
  const auto ka = RealFourVector::from_parts(roots.k_a, kvec);
  const auto kb = RealFourVector::from_parts(roots.k_b, kvec);
  require_on_shell(m, ka, "dispersion");
  require_on_shell(m, kb, "dispersion");
  const auto diag = cherenkov_diagnostics(m);
  const auto surface = classify_wave_surface(m, 1.0);
  json r;
  r["medium"] = medium_json(m);
  r["kvec"] = array3(kvec);
  r["k_a"] = roots.k_a;
  r["k_b"] = roots.k_b;
  r["residual_a"] = dispersion_residual(m, ka);
  r["residual_b"] = dispersion_residual(m, kb);
  r["n2v2"] = diag.n2v2;
  r["cherenkov_regime"] = diag.regime;
  r["cone_angle_rad"] = cone_angle(m);
  r["surface_class"] = std::string(to_string(surface.kind));
  return r;
}

json map_report(const MediumSpec& m, const RealFourVector& input, bool inverse) {
  RealFourVector l, k, p;
  PolarizationBasis basis;
  if (!inverse) {
    l = input;
    k = map_wavevector(m, l);
    basis = map_polarization(m, vacuum_polarization_basis(m, l));
    p = map_four_momentum(m, l);
    require_on_shell(m, k, "map");
    polarization_sum(m, k, Shell::medium);
  } else {
    k = input;
    l = unmap_wavevector(m, k);
    basis = unmap_polarization(m, medium_polarization_basis(m, k));
    p = unmap_four_momentum(m, k);
    if (!detail::is_null(l)) throw invariant_violation("map: unmapped wavevector is not null");
    polarization_sum(m, l, Shell::vacuum);
  }
  const auto report = make_momentum_report(p, MomentumSource::mode_formula);
  // n > 1 gives a spacelike medium momentum, n = 1 a null one
  if (!inverse) {
    const auto expected = m.n() > 1.0 ? CausalClass::spacelike : (m.n() < 1.0 ? CausalClass::timelike : CausalClass::null);
    if (std::abs(m.n() - 1.0) > 1e-6 && report.causal != expected)
      throw invariant_violation("map: mapped momentum has the wrong causal class");
  } else if (report.causal != CausalClass::null) {
    throw invariant_violation("map: vacuum momentum is not null");
  }
  json pols = json::array();
  for (const auto& e : basis.vectors) pols.push_back(array4(real_part(e)));
  json r;
  r["medium"] = medium_json(m);
  r["direction"] = inverse ? "medium_to_vacuum" : "vacuum_to_medium";
  r["l"] = array4(l);
  r["k"] = array4(k);
  r["polarizations"] = pols;
  r["p"] = array4(report.P);
  r["p_squared"] = report.p_squared;
  r["causal_class"] = std::string(to_string(report.causal));
  return r;
}

json surface_report(const MediumSpec& m, double k0) {
  const auto s = classify_wave_surface(m, k0);
  json r;
  r["medium"] = medium_json(m);
  r["k0"] = k0;
  r["surface_class"] = std::string(to_string(s.kind));
  r["kappa_v2"] = s.kappa_V2;
  r["axis"] = array3(s.axis);
  if (s.kind == SurfaceKind::degenerate) {
    r["center"] = nullptr;
    r["axial_semi_axis"] = nullptr;
    r["transverse_semi_axis"] = nullptr;
  } else {
    r["center"] = array3(s.center);
    r["axial_semi_axis"] = s.axial_semi_axis;
    r["transverse_semi_axis"] = s.transverse_semi_axis;
  }
  r["cherenkov_regime"] = cherenkov_regime(m);
  r["cone_angle_rad"] = cone_angle(m);
  return r;
}

json forces_report(double n, const ForcesInput& in) {
  if (!(n > 0.0)) throw usage_error("forces: --medium-n must be positive");
  const auto f = si::force_sample({0, 0, 0}, n, in.e_field, in.grad_eps, in.poynting_rate);
  json r;
  r["n"] = n;
  r["f_am_n_m3"] = array3(f.f_am);
  r["f_a_n_m3"] = array3(f.f_a);
  r["f_total_n_m3"] = array3(f.f_total);
  if (in.peak_poynting.has_value() != in.omega.has_value())
    throw usage_error("forces: --peak-poynting and --omega must be given together");
  if (in.peak_poynting) {
    if (!(*in.omega > 0.0)) throw usage_error("forces: --omega must be positive");
    const si::MonochromaticBeam beam{{0.0, 0.0, 1.0}, *in.peak_poynting, *in.omega, 0.0};
    const double amp = si::abraham_force_amplitude(n, beam);
    const double mean = si::abraham_force_mean(n, beam, 0.0, beam.period())[2];
    if (std::abs(mean) > 1e-9 * std::max(amp, 1e-300))
      throw invariant_violation("forces: Abraham term does not average out over a period");
    r["abraham_amplitude_n_m3"] = amp;
    r["abraham_period_mean_n_m3"] = mean;
  }
  if (in.eps_begin.has_value() != in.eps_end.has_value())
    throw usage_error("forces: --eps-begin and --eps-end must be given together");
  if (in.eps_begin) {
    const double a = *in.eps_begin, b = *in.eps_end;
    const si::PermittivityProfile linear{[a, b](double x) { return a + (b - a) * x; }, 0.0, 1.0};
    const auto s = si::surface_force_integral(linear, in.e_tangential, in.d_normal);
    r["surface_pressure_pa"] = s.pressure_pa;
    r["non_monotone"] = s.non_monotone;
  }
  return r;
}

json experiments_report(double n, const ExperimentsInput& in) {
  std::vector<std::string> missing;
  auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v) missing.emplace_back(name);
  };
  need(in.power_w, "power-w");
  need(in.modulation_omega_rad_s, "modulation-omega-rad-s");
  need(in.ring_radius_m, "ring-radius-m");
  need(in.reflectivity, "reflectivity");
  need(in.incident_poynting_w_m2, "incident-poynting-w-m2");
  need(in.photon_omega_rad_s, "photon-omega-rad-s");
  if (!missing.empty()) {
    std::string msg = "experiments: missing parameters:";
    for (const auto& m : missing) msg += " --" + m;
    throw usage_error(msg);
  }
  const auto mirror = si::predict_mirror_pressure(n, *in.reflectivity, *in.incident_poynting_w_m2);
  const auto jones = si::predict_jones_ratio(n, *in.reflectivity, *in.incident_poynting_w_m2);
  const auto recoil = si::predict_photon_recoil(n, *in.photon_omega_rad_s);
  const auto torque = si::predict_abraham_torque(*in.power_w, *in.modulation_omega_rad_s, *in.ring_radius_m, n);
  if (std::abs(jones.value - n) > 1e-12 * n) throw invariant_violation("experiments: Jones ratio differs from n");

  json r;
  r["n"] = n;
  r["jones_ratio"] = jones.value;
  r["mirror_pressure_pa"] = mirror.value;
  r["photon_recoil_kg_m_s"] = recoil.value;
  r["abraham_torque_n_m"] = torque.value;
  if (torque.value > 0.0)
    r["abraham_torque_order_of_magnitude"] = static_cast<int>(std::floor(std::log10(torque.value)));
  else
    r["abraham_torque_order_of_magnitude"] = nullptr;
  r["inputs"] = {{"power_w", *in.power_w},
                 {"modulation_omega_rad_s", *in.modulation_omega_rad_s},
                 {"ring_radius_m", *in.ring_radius_m},
                 {"reflectivity", *in.reflectivity},
                 {"incident_poynting_w_m2", *in.incident_poynting_w_m2},
                 {"photon_omega_rad_s", *in.photon_omega_rad_s}};
  return r;
}

std::vector<double> sweep_grid(const SweepInput& in) {
  if (in.points < 1) throw usage_error("sweep: --points must be at least 1");
  if (in.points == 1) {
    if (in.from != in.to) throw usage_error("sweep: a single point needs --from equal to --to");
    return {in.from};
  }
  if (in.from == in.to) throw usage_error("sweep: empty range");
  const double lo = std::min(in.from, in.to), hi = std::max(in.from, in.to);
  std::vector<double> grid(static_cast<std::size_t>(in.points));
  for (int j = 0; j < in.points; ++j) grid[j] = lo + (hi - lo) * j / (in.points - 1);
  if (in.from > in.to) std::reverse(grid.begin(), grid.end());
  return grid;
}

json sweep_report(const GlobalOptions& g, const SweepInput& in) {
  if (in.variable != "v" && in.variable != "n") throw usage_error("sweep: --variable must be 'v' or 'n'");
  if (dot3(in.kvec, in.kvec) == 0.0) throw usage_error("sweep: --kvec must be nonzero");
  const auto grid = sweep_grid(in);
  const double dn = norm3(in.direction);
  if (in.variable == "v" && dn == 0.0) throw usage_error("sweep: --direction must be nonzero");
  const Vec3 dir = in.variable == "v" ? (1.0 / dn) * in.direction : Vec3{};
  const Vec3 base_velocity = parse_vec3(g.velocity, "--velocity");

  json rows = json::array();
  for (const double x : grid) {
    MediumSpec m = MediumSpec::at_rest(1.0);
    try {
      m = in.variable == "v" ? MediumSpec(g.n, g.mu, x * dir) : MediumSpec(x, g.mu, base_velocity);
    } catch (const domain_error& e) {
      throw usage_error("sweep: " + in.variable + " = " + std::to_string(x) + ": " + e.what());
    }
    const auto d = dispersion_report(m, in.kvec);
    json row;
    row[in.variable] = x;
    row["k_a"] = d["k_a"];
    row["k_b"] = d["k_b"];
    row["cherenkov_regime"] = d["cherenkov_regime"];
    row["cone_angle_rad"] = d["cone_angle_rad"];
    row["surface_class"] = d["surface_class"];
    rows.push_back(row);
  }
  json r;
  r["variable"] = in.variable;
  r["kvec"] = array3(in.kvec);
  r["rows"] = rows;
  return r;
}

}  // namespace movmed::cli
