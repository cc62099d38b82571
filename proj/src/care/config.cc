#include "care/config.h"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "care/errors.h"
#include "care/io.h"

namespace care {

std::string_view ToString(DirectionMode mode) {
  return mode == DirectionMode::kRepel ? "repel" : "paper_sign";
}

DirectionMode ParseDirectionMode(std::string_view text) {
  if (text == "repel") return DirectionMode::kRepel;
  if (text == "paper_sign") return DirectionMode::kPaperSign;
  throw InputError("unknown direction mode '" + std::string(text) + "'");
}

void SafetyParams::Validate() const {
  if (!(theta_thres > 0.0 && theta_thres < std::numbers::pi)) {
    throw InputError("theta_thres must be in (0, pi)");
  }
  if (!(v_fwd > 0.0 && v_fwd <= v_max)) throw InputError("need 0 < v_fwd <= v_max");
  if (!(omega_max > 0.0)) throw InputError("omega_max must be positive");
  if (!(k_omega > 0.0)) throw InputError("k_omega must be positive");
}

void CareConfig::Validate() const {
  if (!(tau_z > 0.0)) throw InputError("tau_z must be positive");
  if (!std::isfinite(epsilon)) throw InputError("epsilon must be finite");
  if (bin_count < 1) throw InputError("bin_count must be at least 1");
  if (!(theta_clip > 0.0 && theta_clip <= std::numbers::pi)) {
    throw InputError("theta_clip must be in (0, pi]");
  }
  safety.Validate();
  mount.Validate();
}

int DefaultBinCount(int image_width) { return (image_width + 9) / 10; }

CareConfig CareConfig::Defaults() {
  CareConfig cfg;
  cfg.tau_z = 1.0;
  cfg.epsilon = -0.05;
  cfg.bin_count = DefaultBinCount(320);
  cfg.theta_clip = std::numbers::pi / 4.0;
  cfg.direction_mode = DirectionMode::kRepel;
  cfg.safety.theta_thres = std::numbers::pi / 6.0;
  cfg.safety.v_max = 0.2;
  cfg.safety.v_fwd = 0.2;
  cfg.safety.omega_max = 0.8;
  cfg.safety.k_omega = 2.0;
  cfg.mount = {0.34, 0.01, 170.0, 0.05};
  return cfg;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseDouble(std::string_view key, std::string_view value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(std::string(value), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !std::isfinite(out)) {
    throw InputError(fmt::format("bad numeric value '{}' for key '{}'", value, key));
  }
  return out;
}

int ParseInt(std::string_view key, std::string_view value) {
  const double d = ParseDouble(key, value);
  if (d != std::floor(d)) {
    throw InputError(fmt::format("key '{}' needs an integer, got '{}'", key, value));
  }
  return static_cast<int>(d);
}

using Setter = std::function<void(CareConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"tau_z", [](CareConfig& c, auto k, auto v) { c.tau_z = ParseDouble(k, v); }},
      {"epsilon", [](CareConfig& c, auto k, auto v) { c.epsilon = ParseDouble(k, v); }},
      {"bin_count", [](CareConfig& c, auto k, auto v) { c.bin_count = ParseInt(k, v); }},
      {"theta_clip",
       [](CareConfig& c, auto k, auto v) { c.theta_clip = ParseDouble(k, v); }},
      {"theta_thres",
       [](CareConfig& c, auto k, auto v) { c.safety.theta_thres = ParseDouble(k, v); }},
      {"direction_mode",
       [](CareConfig& c, auto, auto v) { c.direction_mode = ParseDirectionMode(v); }},
      {"safety.v_fwd",
       [](CareConfig& c, auto k, auto v) { c.safety.v_fwd = ParseDouble(k, v); }},
      {"safety.v_max",
       [](CareConfig& c, auto k, auto v) { c.safety.v_max = ParseDouble(k, v); }},
      {"safety.omega_max",
       [](CareConfig& c, auto k, auto v) { c.safety.omega_max = ParseDouble(k, v); }},
      {"safety.k_omega",
       [](CareConfig& c, auto k, auto v) { c.safety.k_omega = ParseDouble(k, v); }},
      {"mount.height_m",
       [](CareConfig& c, auto k, auto v) { c.mount.height_m = ParseDouble(k, v); }},
      {"mount.x_offset_m",
       [](CareConfig& c, auto k, auto v) { c.mount.x_offset_m = ParseDouble(k, v); }},
      {"mount.fov_deg",
       [](CareConfig& c, auto k, auto v) { c.mount.fov_deg = ParseDouble(k, v); }},
      {"mount.depth_offset_m",
       [](CareConfig& c, auto k, auto v) { c.mount.depth_offset_m = ParseDouble(k, v); }},
  };
  return *setters;
}

}  // namespace

CareConfig ParseCareConfig(std::string_view text, const CareConfig& base) {
  CareConfig cfg = base;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(fmt::format("config line {}: expected 'key = value'", line_no));
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto it = Setters().find(key);
    if (it == Setters().end()) {
      throw InputError(fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
    it->second(cfg, key, value);
  }
  cfg.Validate();
  return cfg;
}

CareConfig LoadCareConfig(const std::string& path, const CareConfig& base) {
  return ParseCareConfig(ReadTextFile(path), base);
}

std::string FormatCareConfig(const CareConfig& cfg) {
  return fmt::format(
      "tau_z = {}\nepsilon = {}\nbin_count = {}\ntheta_clip = {}\ntheta_thres = {}\n"
      "direction_mode = {}\nsafety.v_fwd = {}\nsafety.v_max = {}\n"
      "safety.omega_max = {}\nsafety.k_omega = {}\nmount.height_m = {}\n"
      "mount.x_offset_m = {}\nmount.fov_deg = {}\nmount.depth_offset_m = {}\n",
      cfg.tau_z, cfg.epsilon, cfg.bin_count, cfg.theta_clip, cfg.safety.theta_thres,
      ToString(cfg.direction_mode), cfg.safety.v_fwd, cfg.safety.v_max,
      cfg.safety.omega_max, cfg.safety.k_omega, cfg.mount.height_m,
      cfg.mount.x_offset_m, cfg.mount.fov_deg, cfg.mount.depth_offset_m);
}

}  // namespace care
