#pragma once

// Report builders behind the command-line front end.  Each returns an ordered
// JSON object whose keys are the documented output schema.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "movmed/movmed.hpp"

namespace movmed::cli {

using json = nlohmann::ordered_json;

// Bad flags, bad config values, missing parameters.  Exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double n = 1.0;
  double mu = 1.0;
  std::string velocity = "0,0,0";
  std::string format = "json";
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& what);
Vec3 parse_vec3(const std::string& text, const std::string& what);
MediumSpec make_medium(const GlobalOptions& g);

json dispersion_report(const MediumSpec& m, const Vec3& kvec);

// inverse = false: input is a vacuum null wavevector l; otherwise a medium
// shell wavevector k.  Components are contravariant.
json map_report(const MediumSpec& m, const RealFourVector& input, bool inverse);

json surface_report(const MediumSpec& m, double k0);

struct ForcesInput {
  Vec3 e_field{};            // V/m
  Vec3 grad_eps{};           // 1/m
  Vec3 poynting_rate{};      // W/(m^2 s)
  std::optional<double> peak_poynting;  // W/m^2
  std::optional<double> omega;          // rad/s
  std::optional<double> eps_begin, eps_end;
  double e_tangential = 0.0;  // V/m
  double d_normal = 0.0;      // C/m^2
};
json forces_report(double n, const ForcesInput& in);

struct ExperimentsInput {
  std::optional<double> power_w;
  std::optional<double> modulation_omega_rad_s;
  std::optional<double> ring_radius_m;
  std::optional<double> reflectivity;
  std::optional<double> incident_poynting_w_m2;
  std::optional<double> photon_omega_rad_s;
};
json experiments_report(double n, const ExperimentsInput& in);

struct SweepInput {
  std::string variable = "v";  // "v" or "n"
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  Vec3 direction{1.0, 0.0, 0.0};  // velocity direction for a v sweep
  Vec3 kvec{1.0, 0.0, 0.0};
};
// The sweep grid in output order.  A reversed range gives the ascending grid
// reversed, so rows match exactly.
std::vector<double> sweep_grid(const SweepInput& in);
json sweep_report(const GlobalOptions& g, const SweepInput& in);

}  // namespace movmed::cli
