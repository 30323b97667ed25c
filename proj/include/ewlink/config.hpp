#pragma once
#ifndef EWLINK_CONFIG_HPP
#define EWLINK_CONFIG_HPP

// Scenario files: line-oriented `key = value`, `#` comments, `[section]`
// headers. Every physical key carries its unit as a suffix (power_w,
// frequency_hz, ...). Each `[target]` header opens the next target; the
// equivalent flat form `targets[i].name = ...` is also accepted.
//
//   [radar]
//   power_w = 24600
//   frequency_hz = 1.3e9
//   beamwidth_az_deg = 0.18
//   ...

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ewlink/scenario.hpp"

namespace ewlink {
namespace config_detail {

struct Entry {
  std::string value;
  int line = 0;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline bool parse_index(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6) {
    return false;
  }
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

inline bool is_known(const std::string& section, const std::string& key) {
  static const std::map<std::string, std::set<std::string>> known{
      {"radar",
       {"power_w", "frequency_hz", "bandwidth_hz", "noise_figure_db", "mod_db", "temperature_k",
        "detection_threshold_db", "gain_db", "beamwidth_az_deg", "beamwidth_el_deg",
        "efficiency", "rx_gain_db", "rx_beamwidth_az_deg", "rx_beamwidth_el_deg",
        "rx_efficiency"}},
      {"jammer",
       {"power_w", "bandwidth_hz", "include_tx_gain", "colocated_with_target", "standoff_km",
        "gain_db", "beamwidth_az_deg", "beamwidth_el_deg", "efficiency"}},
      {"rwr",
       {"gain_db", "beamwidth_az_deg", "beamwidth_el_deg", "efficiency", "bandwidth_hz",
        "noise_figure_db", "mod_db", "temperature_k", "pulsed_threshold_dbm",
        "cw_threshold_dbm"}},
      {"target", {"name", "rcs_m2"}},
      {"sweep", {"ranges_km", "start_km", "stop_km", "count", "spacing", "jsr_mode"}},
  };
  const auto it = known.find(section);
  return it != known.end() && it->second.count(key) > 0;
}

// All entries of one section (or one target), keyed by the bare key name.
class Section {
 public:
  Section(std::string prefix, std::map<std::string, Entry> entries)
      : prefix_{std::move(prefix)}, entries_{std::move(entries)} {}

  bool empty() const { return entries_.empty(); }
  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  std::string qualified(const std::string& key) const { return prefix_ + "." + key; }
  int line_of(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  const Entry& require(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ConfigError("missing required key", qualified(key));
    }
    return it->second;
  }

  std::string text(const std::string& key) const { return require(key).value; }

  double number(const std::string& key) const {
    const Entry& e = require(key);
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) {
      throw ConfigError("expected a number, got '" + e.value + "'", qualified(key), e.line);
    }
    return v;
  }

  double positive(const std::string& key) const {
    const double v = number(key);
    if (!(v > 0.0)) {
      throw ConfigError("must be positive", qualified(key), line_of(key));
    }
    return v;
  }

  double non_negative(const std::string& key) const {
    const double v = number(key);
    if (v < 0.0) {
      throw ConfigError("must be >= 0", qualified(key), line_of(key));
    }
    return v;
  }

  int integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e6) {
      throw ConfigError("expected an integer", qualified(key), line_of(key));
    }
    return static_cast<int>(v);
  }

  bool boolean(const std::string& key) const {
    const Entry& e = require(key);
    if (e.value == "true") {
      return true;
    }
    if (e.value == "false") {
      return false;
    }
    throw ConfigError("expected true or false, got '" + e.value + "'", qualified(key), e.line);
  }

  std::vector<double> number_list(const std::string& key) const {
    const Entry& e = require(key);
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (item.empty() || *end != '\0' || !std::isfinite(v)) {
        throw ConfigError("bad list element '" + item + "'", qualified(key), e.line);
      }
      out.push_back(v);
    }
    return out;
  }

  /// Antenna from `<p>gain_db` or `<p>beamwidth_az_deg` + `<p>beamwidth_el_deg`
  /// (+ optional `<p>efficiency`). Returns nullopt when none of the keys is set.
  std::optional<AntennaSpec> antenna(const std::string& p = {}) const {
    const std::string g = p + "gain_db";
    const std::string az = p + "beamwidth_az_deg";
    const std::string el = p + "beamwidth_el_deg";
    const std::string eff = p + "efficiency";
    const bool any_bw = has(az) || has(el) || has(eff);
    if (has(g) && any_bw) {
      const std::string other = has(az) ? az : has(el) ? el : eff;
      throw ConfigError("conflicting antenna spec: set either " + qualified(g) + " or " +
                            qualified(other) + ", not both",
                        qualified(g), line_of(g));
    }
    if (has(g)) {
      return AntennaSpec::from_gain_db(number(g));
    }
    if (!any_bw) {
      return std::nullopt;
    }
    const double efficiency = has(eff) ? number(eff) : 1.0;
    AntennaSpec spec = AntennaSpec::from_beamwidths(number(az), number(el), efficiency);
    try {
      (void)spec.gain_db();
    } catch (const DomainError& e) {
      throw ConfigError(e.what(), qualified(az), line_of(az));
    }
    return spec;
  }

 private:
  std::string prefix_;
  std::map<std::string, Entry> entries_;
};

}  // namespace config_detail

inline Scenario parse_config(std::string_view text) {
  using config_detail::Entry;
  using config_detail::Section;

  std::map<std::string, std::map<std::string, Entry>> sections;
  std::map<int, std::map<std::string, Entry>> targets;
  int next_target = 0;
  std::string section;  // "" before the first header
  int current_target = -1;

  auto store = [&](std::map<std::string, Entry>& into, const std::string& qualified,
                   const std::string& key, const std::string& value, int line) {
    if (!into.emplace(key, Entry{value, line}).second) {
      throw ConfigError("duplicate key", qualified, line);
    }
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = config_detail::trim(
        hash == std::string::npos ? std::string_view(raw) : std::string_view(raw).substr(0, hash));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("malformed section header '" + line + "'", {}, line_no);
      }
      section = config_detail::trim(std::string_view(line).substr(1, line.size() - 2));
      if (section == "target") {
        current_target = next_target++;
        targets[current_target];
      } else if (section != "radar" && section != "jammer" && section != "rwr" &&
                 section != "sweep") {
        throw ConfigError("unknown section", section, line_no);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", {}, line_no);
    }
    std::string key = config_detail::trim(std::string_view(line).substr(0, eq));
    const std::string value = config_detail::trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("empty key", {}, line_no);
    }

    // Resolve to (section, bare key), accepting flat dotted names anywhere.
    std::string sec = section;
    int target_index = current_target;
    if (const auto dot = key.find('.'); dot != std::string::npos) {
      const std::string head = key.substr(0, dot);
      const std::string tail = key.substr(dot + 1);
      int idx = 0;
      if (head.rfind("targets[", 0) == 0 && head.back() == ']' &&
          config_detail::parse_index(std::string_view(head).substr(8, head.size() - 9), idx)) {
        sec = "target";
        target_index = idx;
        next_target = std::max(next_target, idx + 1);
      } else if (head == "radar" || head == "jammer" || head == "rwr" || head == "sweep") {
        sec = head;
      } else {
        throw ConfigError("unknown key", key, line_no);
      }
      key = tail;
    }
    if (sec.empty()) {
      throw ConfigError("key outside any section", key, line_no);
    }
    const std::string qualified =
        sec == "target" ? "targets[" + std::to_string(target_index) + "]." + key : sec + "." + key;
    if (!config_detail::is_known(sec, key)) {
      throw ConfigError("unknown key", qualified, line_no);
    }
    if (sec == "target") {
      store(targets[target_index], qualified, key, value, line_no);
    } else {
      store(sections[sec], qualified, key, value, line_no);
    }
  }

  Scenario s;

  // Radar
  {
    const Section r("radar", sections["radar"]);
    if (r.empty()) {
      throw ConfigError("missing [radar] section", "radar");
    }
    s.radar.power_w = r.positive("power_w");
    s.radar.frequency_hz = r.positive("frequency_hz");
    s.radar.bandwidth_hz = r.positive("bandwidth_hz");
    const auto tx = r.antenna();
    if (!tx) {
      throw ConfigError("missing antenna: set gain_db or beamwidth_az_deg/beamwidth_el_deg",
                        "radar.gain_db");
    }
    s.radar.antenna_tx = *tx;
    s.radar.antenna_rx = r.antenna("rx_").value_or(*tx);
    if (r.has("noise_figure_db")) s.radar.noise_figure_db = r.non_negative("noise_figure_db");
    if (r.has("mod_db")) s.radar.mod_db = r.non_negative("mod_db");
    if (r.has("temperature_k")) s.radar.temperature_k = r.positive("temperature_k");
    if (r.has("detection_threshold_db")) {
      s.radar.detection_threshold_snr_db = r.number("detection_threshold_db");
    }
  }

  // Jammer
  if (const auto it = sections.find("jammer"); it != sections.end()) {
    const Section j("jammer", it->second);
    JammerSystem jam;
    jam.power_w = j.positive("power_w");
    jam.bandwidth_hz = j.positive("bandwidth_hz");
    const auto ant = j.antenna();
    if (!ant) {
      throw ConfigError("missing antenna: set gain_db or beamwidths", "jammer.gain_db");
    }
    jam.antenna = *ant;
    if (j.has("include_tx_gain")) jam.include_tx_gain = j.boolean("include_tx_gain");
    if (j.has("colocated_with_target")) {
      jam.colocated_with_target = j.boolean("colocated_with_target");
    }
    if (j.has("standoff_km")) jam.standoff_range_km = j.positive("standoff_km");
    if (!jam.colocated_with_target && !jam.standoff_range_km) {
      throw ConfigError("required when colocated_with_target = false", "jammer.standoff_km",
                        j.line_of("colocated_with_target"));
    }
    s.jammer = jam;
  }

  // RWR
  if (const auto it = sections.find("rwr"); it != sections.end()) {
    const Section w("rwr", it->second);
    RwrSystem rwr;
    rwr.antenna = w.antenna().value_or(AntennaSpec::isotropic());
    if (w.has("bandwidth_hz")) {
      NoiseModel n;
      n.bandwidth_hz = w.positive("bandwidth_hz");
      if (w.has("noise_figure_db")) n.noise_figure_db = w.non_negative("noise_figure_db");
      if (w.has("mod_db")) n.mod_db = w.non_negative("mod_db");
      if (w.has("temperature_k")) n.temperature_k = w.positive("temperature_k");
      rwr.noise = n;
    } else {
      for (const char* k : {"noise_figure_db", "mod_db", "temperature_k"}) {
        if (w.has(k)) {
          throw ConfigError("noise terms need rwr.bandwidth_hz", w.qualified(k), w.line_of(k));
        }
      }
    }
    if (w.has("pulsed_threshold_dbm")) rwr.pulsed_threshold_dbm = w.number("pulsed_threshold_dbm");
    if (w.has("cw_threshold_dbm")) rwr.cw_threshold_dbm = w.number("cw_threshold_dbm");
    s.rwr = rwr;
  }

  // Targets
  for (int i = 0; i < next_target; ++i) {
    const auto it = targets.find(i);
    const std::string prefix = "targets[" + std::to_string(i) + "]";
    if (it == targets.end()) {
      throw ConfigError("target indices must be contiguous from 0", prefix);
    }
    const Section t(prefix, it->second);
    TargetSpec spec{t.text("name"), t.positive("rcs_m2")};
    if (s.find_target(spec.name)) {
      throw ConfigError("duplicate target name '" + spec.name + "'", t.qualified("name"),
                        t.line_of("name"));
    }
    s.targets.push_back(std::move(spec));
  }
  if (s.targets.empty()) {
    throw ConfigError("at least one [target] is required", "targets");
  }

  // Sweep
  {
    const Section w("sweep", sections["sweep"]);
    const bool generated =
        w.has("start_km") || w.has("stop_km") || w.has("count") || w.has("spacing");
    if (w.has("ranges_km") && generated) {
      throw ConfigError("set either ranges_km or start_km/stop_km/count/spacing, not both",
                        "sweep.ranges_km", w.line_of("ranges_km"));
    }
    if (w.has("ranges_km")) {
      s.ranges = w.number_list("ranges_km");
    } else if (generated) {
      RangeSweep g;
      g.start_km = w.positive("start_km");
      g.stop_km = w.positive("stop_km");
      g.count = w.integer("count");
      if (w.has("spacing")) {
        const std::string sp = w.text("spacing");
        if (sp == "log") {
          g.spacing = Spacing::kLog;
        } else if (sp != "linear") {
          throw ConfigError("expected linear or log", "sweep.spacing", w.line_of("spacing"));
        }
      }
      s.ranges = g;
    } else {
      throw ConfigError("missing required key", "sweep.ranges_km");
    }
    if (w.has("jsr_mode")) {
      const std::string m = w.text("jsr_mode");
      if (m == "exact") {
        s.ratio_mode = RatioMode::kExact;
      } else if (m != "approximate") {
        throw ConfigError("expected approximate or exact", "sweep.jsr_mode",
                          w.line_of("jsr_mode"));
      }
    }
  }

  s.validate();
  return s;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Serialization (inverse of parse_config)

namespace config_detail {

inline void write_antenna(std::ostream& out, const AntennaSpec& a, const std::string& p = {}) {
  if (const auto* bw = std::get_if<Beamwidths>(&a.source)) {
    out << p << "beamwidth_az_deg = " << detail::shortest(bw->az_deg) << '\n'
        << p << "beamwidth_el_deg = " << detail::shortest(bw->el_deg) << '\n'
        << p << "efficiency = " << detail::shortest(bw->efficiency) << '\n';
  } else {
    out << p << "gain_db = " << detail::shortest(std::get<DbRatio>(a.source).db) << '\n';
  }
}

}  // namespace config_detail

inline std::string serialize_config(const Scenario& s) {
  using detail::shortest;
  std::ostringstream out;
  out << "[radar]\n"
      << "power_w = " << shortest(s.radar.power_w) << '\n'
      << "frequency_hz = " << shortest(s.radar.frequency_hz) << '\n';
  config_detail::write_antenna(out, s.radar.antenna_tx);
  if (!(s.radar.antenna_rx == s.radar.antenna_tx)) {
    config_detail::write_antenna(out, s.radar.antenna_rx, "rx_");
  }
  out << "bandwidth_hz = " << shortest(s.radar.bandwidth_hz) << '\n'
      << "noise_figure_db = " << shortest(s.radar.noise_figure_db) << '\n'
      << "mod_db = " << shortest(s.radar.mod_db) << '\n'
      << "temperature_k = " << shortest(s.radar.temperature_k) << '\n'
      << "detection_threshold_db = " << shortest(s.radar.detection_threshold_snr_db) << '\n';

  if (s.jammer) {
    const JammerSystem& j = *s.jammer;
    out << "\n[jammer]\n"
        << "power_w = " << shortest(j.power_w) << '\n';
    config_detail::write_antenna(out, j.antenna);
    out << "bandwidth_hz = " << shortest(j.bandwidth_hz) << '\n'
        << "include_tx_gain = " << (j.include_tx_gain ? "true" : "false") << '\n'
        << "colocated_with_target = " << (j.colocated_with_target ? "true" : "false") << '\n';
    if (j.standoff_range_km) {
      out << "standoff_km = " << shortest(*j.standoff_range_km) << '\n';
    }
  }

  if (s.rwr) {
    const RwrSystem& w = *s.rwr;
    out << "\n[rwr]\n";
    config_detail::write_antenna(out, w.antenna);
    if (w.noise) {
      out << "bandwidth_hz = " << shortest(w.noise->bandwidth_hz) << '\n'
          << "noise_figure_db = " << shortest(w.noise->noise_figure_db) << '\n'
          << "mod_db = " << shortest(w.noise->mod_db) << '\n'
          << "temperature_k = " << shortest(w.noise->temperature_k) << '\n';
    }
    out << "pulsed_threshold_dbm = " << shortest(w.pulsed_threshold_dbm) << '\n'
        << "cw_threshold_dbm = " << shortest(w.cw_threshold_dbm) << '\n';
  }

  for (const auto& t : s.targets) {
    out << "\n[target]\n"
        << "name = " << t.name << '\n'
        << "rcs_m2 = " << shortest(t.rcs_m2) << '\n';
  }

  out << "\n[sweep]\n";
  if (const auto* list = std::get_if<std::vector<double>>(&s.ranges)) {
    out << "ranges_km = ";
    for (std::size_t i = 0; i < list->size(); ++i) {
      out << (i ? ", " : "") << shortest((*list)[i]);
    }
    out << '\n';
  } else {
    const auto& g = std::get<RangeSweep>(s.ranges);
    out << "start_km = " << shortest(g.start_km) << '\n'
        << "stop_km = " << shortest(g.stop_km) << '\n'
        << "count = " << g.count << '\n'
        << "spacing = " << (g.spacing == Spacing::kLog ? "log" : "linear") << '\n';
  }
  out << "jsr_mode = " << (s.ratio_mode == RatioMode::kExact ? "exact" : "approximate") << '\n';
  return out.str();
}

}  // namespace ewlink

#endif  // EWLINK_CONFIG_HPP
