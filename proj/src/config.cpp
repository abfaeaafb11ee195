#include "vdakey/config.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace vdakey {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad unsigned value for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw std::invalid_argument("config: bad boolean value for '" + key + "': " + value);
}

}  // namespace

RingAntenna Scenario::antenna() const {
  return make_ring_antenna(elements, radius, wavelength);
}

void Scenario::validate() const {
  (void)antenna();  // antenna invariants
  if (!(geometry.link_length > 0.0))
    throw std::invalid_argument("scenario: link_length must be positive");
  if (method != 1 && method != 2)
    throw std::invalid_argument("scenario: method must be 1 or 2");
  if (!(keep_fraction > 0.0) || keep_fraction > 1.0)
    throw std::invalid_argument("scenario: keep_fraction must lie in (0, 1]");
  if (key_bits < 1) throw std::invalid_argument("scenario: key_bits must be >= 1");
  if (trials < 2) throw std::invalid_argument("scenario: trials must be >= 2");
  if (!(sweep.step > 0.0) || sweep.stop < sweep.start)
    throw std::invalid_argument("scenario: sweep needs step > 0 and stop >= start");
  if (diversity_antennas < 1)
    throw std::invalid_argument("scenario: diversity_antennas must be >= 1");
}

void apply_setting(Scenario& s, const std::string& key, const std::string& value) {
  if (key == "link_length") s.geometry.link_length = parse_double(key, value);
  else if (key == "surface1_distance") s.geometry.surface1_distance = parse_double(key, value);
  else if (key == "surface2_distance") s.geometry.surface2_distance = parse_double(key, value);
  else if (key == "eavesdropper_offset") s.geometry.eavesdropper_offset = parse_double(key, value);
  else if (key == "elements") s.elements = static_cast<int>(parse_int(key, value));
  else if (key == "wavelength") s.wavelength = parse_double(key, value);
  else if (key == "radius") s.radius = parse_double(key, value);
  else if (key == "snr") {
    if (value == "inf" || value == "infinity") s.snr = std::numeric_limits<double>::infinity();
    else s.snr = parse_double(key, value);
  } else if (key == "reflection_magnitude") s.reflection_magnitude = parse_double(key, value);
  else if (key == "functional") {
    if (value == "envelope") s.functional = FunctionalKind::envelope;
    else if (value == "phase_difference") s.functional = FunctionalKind::phase_difference;
    else throw std::invalid_argument("config: functional must be envelope or phase_difference");
  } else if (key == "overlapping_pairs") s.overlapping_pairs = parse_bool(key, value);
  else if (key == "method") s.method = static_cast<int>(parse_int(key, value));
  else if (key == "alpha") s.alpha = parse_double(key, value);
  else if (key == "keep_fraction") s.keep_fraction = parse_double(key, value);
  else if (key == "key_bits") s.key_bits = parse_int(key, value);
  else if (key == "leakage_target") s.leakage_target = parse_double(key, value);
  else if (key == "ped_target") s.ped_target = parse_double(key, value);
  else if (key == "diversity_antennas") s.diversity_antennas = static_cast<int>(parse_int(key, value));
  else if (key == "trials") s.trials = static_cast<std::size_t>(parse_u64(key, value));
  else if (key == "seed") s.seed = parse_u64(key, value);
  else if (key == "synthetic_rho") s.synthetic_rho = parse_double(key, value);
  else if (key == "n0_cap") s.n0_cap = parse_int(key, value);
  else if (key == "alpha_min") s.alpha_min = parse_double(key, value);
  else if (key == "alpha_max") s.alpha_max = parse_double(key, value);
  else if (key == "alpha_step") s.alpha_step = parse_double(key, value);
  else if (key == "q_min") s.q_min = parse_double(key, value);
  else if (key == "q_max") s.q_max = parse_double(key, value);
  else if (key == "q_step") s.q_step = parse_double(key, value);
  else if (key == "dl_min") s.sweep.start = parse_double(key, value);
  else if (key == "dl_max") s.sweep.stop = parse_double(key, value);
  else if (key == "dl_step") s.sweep.step = parse_double(key, value);
  else if (key == "rho_min") s.rho_min = parse_double(key, value);
  else if (key == "rho_max") s.rho_max = parse_double(key, value);
  else if (key == "rho_step") s.rho_step = parse_double(key, value);
  else if (key == "demo_runs") s.demo_runs = static_cast<std::size_t>(parse_u64(key, value));
  else if (key == "out_dir") s.out_dir = value;
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

Scenario load_config(const std::string& path, Scenario base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: malformed section header at line " +
                                    std::to_string(lineno));
      continue;  // sections are organizational only; the key space is flat
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " +
                                  std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
    apply_setting(base, key, value);
  }
  base.validate();
  return base;
}

}  // namespace vdakey
