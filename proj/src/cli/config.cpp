#include "casimir/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casimir/permittivity.hpp"

namespace casimir::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

enum class Section { None, Material, Oscillator, Drude, Geometry, Temperature, Quadrature, Sweep };

class Parser {
 public:
  RunConfig run() && {
    return std::move(config_);
  }

  void line(int no, const std::string& raw) {
    line_ = no;
    std::string text = raw;
    if (const auto c = text.find_first_of("#;"); c != std::string::npos) text.resize(c);
    text = trim(text);
    if (text.empty()) return;
    if (text.front() == '[') {
      if (text.back() != ']') fail("unterminated section header");
      open(trim(std::string_view(text).substr(1, text.size() - 2)));
      return;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for '" + key + "'");
    assign(key, value);
  }

  void finish() {
    if (config_.temperature && !method_set_)
      config_.temperature->method =
          config_.temperature->T > 0.0 ? ThermalMethod::Matsubara : ThermalMethod::Zero;
    if (const auto& s = config_.sweep) {
      if (s->points < 1) fail("sweep needs points >= 1");
      if (!(s->start > 0.0) || !(s->stop > 0.0)) fail("sweep range must be positive");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ConfigError(line_, message); }

  double real(const std::string& key, const std::string& v) const {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
      fail("'" + key + "' expects a number, got '" + v + "'");
    return out;
  }

  int count(const std::string& key, const std::string& v) const {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      fail("'" + key + "' expects an integer, got '" + v + "'");
    return out;
  }

  bool flag(const std::string& key, const std::string& v) const {
    if (v == "true") return true;
    if (v == "false") return false;
    fail("'" + key + "' expects true or false");
  }

  Material& material() {
    if (config_.materials.empty()) fail("oscillator or drude block before any [material]");
    return config_.materials.back().material;
  }

  void once(Section s, bool& seen, const char* name) {
    if (seen) fail(std::string("duplicate [") + name + "] section");
    seen = true;
    section_ = s;
  }

  void open(const std::string& name) {
    if (name == "material") {
      section_ = Section::Material;
      config_.materials.push_back(
          {"material" + std::to_string(config_.materials.size() + 1), vacuum_material()});
    } else if (name == "oscillator") {
      section_ = Section::Oscillator;
      material().bound_terms.push_back({});
    } else if (name == "drude") {
      section_ = Section::Drude;
      if (material().drude) fail("second [drude] block for one material");
      material().drude = OscillatorTerm{};
      k_s_auto_ = false;
    } else if (name == "geometry") {
      once(Section::Geometry, seen_geometry_, "geometry");
    } else if (name == "temperature") {
      once(Section::Temperature, seen_temperature_, "temperature");
      config_.temperature = TemperatureSpec{};
    } else if (name == "quadrature") {
      once(Section::Quadrature, seen_quadrature_, "quadrature");
    } else if (name == "sweep") {
      once(Section::Sweep, seen_sweep_, "sweep");
      config_.sweep = SweepSpec{};
    } else {
      fail("unknown section [" + name + "]");
    }
  }

  void unknown(const std::string& key) const { fail("unknown key '" + key + "' in this section"); }

  void assign(const std::string& key, const std::string& v) {
    switch (section_) {
      case Section::None: fail("key outside of any section");
      case Section::Material: return material_key(key, v);
      case Section::Oscillator: {
        OscillatorTerm& o = material().bound_terms.back();
        if (key == "k_p") o.k_p = real(key, v);
        else if (key == "k_r") o.k_r = real(key, v);
        else if (key == "k_c") o.k_c = real(key, v);
        else unknown(key);
        return;
      }
      case Section::Drude: {
        Material& m = material();
        if (key == "k_p") m.drude->k_p = real(key, v);
        else if (key == "k_c") m.drude->k_c = real(key, v);
        else if (key == "k_s") {
          k_s_auto_ = v == "auto";
          if (!k_s_auto_) m.drude_binding = real(key, v);
        } else unknown(key);
        if (k_s_auto_) m.drude_binding = m.drude->k_c;
        return;
      }
      case Section::Geometry: return geometry_key(key, v);
      case Section::Temperature: return temperature_key(key, v);
      case Section::Quadrature: return quadrature_key(key, v);
      case Section::Sweep: return sweep_key(key, v);
    }
  }

  void material_key(const std::string& key, const std::string& v) {
    NamedMaterial& m = config_.materials.back();
    if (key == "name") {
      m.name = v;
    } else if (key == "model") {
      if (v == "small_density") m.material.model = PermittivityModel::SmallDensity;
      else if (v == "clausius_mossotti") m.material.model = PermittivityModel::ClausiusMossotti;
      else fail("model must be small_density or clausius_mossotti");
    } else if (key == "preset") {
      const PermittivityModel model = m.material.model;
      if (v == "vacuum") m.material = vacuum_material();
      else if (v == "default") m.material = default_material(false);
      else if (v == "default_drude") m.material = default_material(true);
      else fail("preset must be vacuum, default or default_drude");
      m.material.model = model;
    } else {
      unknown(key);
    }
  }

  void geometry_key(const std::string& key, const std::string& v) {
    GeometrySpec& g = config_.geometry;
    if (key == "type") {
      if (v == "ideal") g.type = GeometryType::Ideal;
      else if (v == "slabs") g.type = GeometryType::Slabs;
      else if (v == "halfspaces") g.type = GeometryType::HalfSpaces;
      else if (v == "filled_gap") g.type = GeometryType::FilledGap;
      else if (v == "film") g.type = GeometryType::Film;
      else if (v == "sheets") g.type = GeometryType::Sheets;
      else fail("unknown geometry type '" + v + "'");
    } else if (key == "d") {
      g.d = real(key, v);
    } else if (key == "t") {
      g.t1 = g.t2 = real(key, v);
    } else if (key == "t1") {
      g.t1 = real(key, v);
    } else if (key == "t2") {
      g.t2 = real(key, v);
    } else if (key == "zeta") {
      g.zeta = real(key, v);
    } else if (key == "material") {
      g.material = v;
    } else if (key == "gap_material") {
      g.gap_material = v;
    } else {
      unknown(key);
    }
  }

  void temperature_key(const std::string& key, const std::string& v) {
    TemperatureSpec& t = *config_.temperature;
    if (key == "T") {
      t.T = real(key, v);
      if (t.T < 0.0) fail("T must be >= 0");
    } else if (key == "method") {
      method_set_ = true;
      if (v == "zero") t.method = ThermalMethod::Zero;
      else if (v == "matsubara") t.method = ThermalMethod::Matsubara;
      else if (v == "high_t") t.method = ThermalMethod::HighT;
      else if (v == "low_t") t.method = ThermalMethod::LowT;
      else fail("method must be zero, matsubara, high_t or low_t");
    } else if (key == "zero_frequency") {
      if (v == "static") t.zero_frequency = ZeroFrequencyMode::Static;
      else if (v == "omit") t.zero_frequency = ZeroFrequencyMode::Omit;
      else if (v == "drude_limit") t.zero_frequency = ZeroFrequencyMode::DrudeLimit;
      else fail("zero_frequency must be static, omit or drude_limit");
    } else {
      unknown(key);
    }
  }

  void quadrature_key(const std::string& key, const std::string& v) {
    QuadratureSettings& q = config_.quadrature;
    if (key == "n_theta") q.n_theta = count(key, v);
    else if (key == "n_chi") q.n_chi = count(key, v);
    else if (key == "n_strip") q.n_strip = count(key, v);
    else if (key == "theta0") q.theta0 = real(key, v);
    else if (key == "rel_tol") q.rel_tol = real(key, v);
    else if (key == "chi_max") q.chi_max = real(key, v);
    else if (key == "threads") q.threads = count(key, v);
    else if (key == "refinement_check") q.refinement_check = flag(key, v);
    else unknown(key);
  }

  void sweep_key(const std::string& key, const std::string& v) {
    SweepSpec& s = *config_.sweep;
    if (key == "variable") {
      if (v == "d") s.variable = SweepVariable::Distance;
      else if (v == "t") s.variable = SweepVariable::Thickness;
      else if (v == "T") s.variable = SweepVariable::Temperature;
      else fail("sweep variable must be d, t or T");
    } else if (key == "start") {
      s.start = real(key, v);
    } else if (key == "stop") {
      s.stop = real(key, v);
    } else if (key == "points") {
      s.points = count(key, v);
    } else if (key == "spacing") {
      if (v == "linear") s.log_spacing = false;
      else if (v == "log") s.log_spacing = true;
      else fail("spacing must be linear or log");
    } else if (key == "output") {
      s.output = v;
    } else {
      unknown(key);
    }
  }

  RunConfig config_;
  Section section_ = Section::None;
  int line_ = 0;
  bool seen_geometry_ = false;
  bool seen_temperature_ = false;
  bool seen_quadrature_ = false;
  bool seen_sweep_ = false;
  bool method_set_ = false;
  bool k_s_auto_ = false;
};

const Material& find_material(const RunConfig& config, const std::string& name) {
  if (config.materials.empty()) throw ConfigError(0, "geometry needs a [material] block");
  if (name.empty()) return config.materials.front().material;
  for (const auto& m : config.materials)
    if (m.name == name) return m.material;
  throw ConfigError(0, "no material named '" + name + "'");
}

const char* geometry_keyword(GeometryType t) {
  switch (t) {
    case GeometryType::Ideal: return "ideal";
    case GeometryType::Slabs: return "slabs";
    case GeometryType::HalfSpaces: return "halfspaces";
    case GeometryType::FilledGap: return "filled_gap";
    case GeometryType::Film: return "film";
    case GeometryType::Sheets: return "sheets";
  }
  return "";
}

const char* method_keyword(ThermalMethod m) {
  switch (m) {
    case ThermalMethod::Zero: return "zero";
    case ThermalMethod::Matsubara: return "matsubara";
    case ThermalMethod::HighT: return "high_t";
    case ThermalMethod::LowT: return "low_t";
  }
  return "";
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + message
                                  : "config: " + message),
      line_(line) {}

RunConfig parse_config(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) p.line(++no, raw);
  p.finish();
  return std::move(p).run();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const RunConfig& c) {
  std::ostringstream os;
  for (const auto& m : c.materials) {
    os << "[material]\nname = " << m.name << "\nmodel = "
       << (m.material.model == PermittivityModel::ClausiusMossotti ? "clausius_mossotti"
                                                                   : "small_density")
       << "\n\n";
    for (const auto& o : m.material.bound_terms)
      os << "[oscillator]\nk_p = " << number(o.k_p) << "\nk_r = " << number(o.k_r)
         << "\nk_c = " << number(o.k_c) << "\n\n";
    if (m.material.drude) {
      os << "[drude]\nk_p = " << number(m.material.drude->k_p)
         << "\nk_c = " << number(m.material.drude->k_c) << '\n';
      if (m.material.drude_binding) os << "k_s = " << number(*m.material.drude_binding) << '\n';
      os << '\n';
    }
  }
  const GeometrySpec& g = c.geometry;
  os << "[geometry]\ntype = " << geometry_keyword(g.type) << "\nd = " << number(g.d)
     << "\nt1 = " << number(g.t1) << "\nt2 = " << number(g.t2) << "\nzeta = " << number(g.zeta)
     << '\n';
  if (!g.material.empty()) os << "material = " << g.material << '\n';
  if (!g.gap_material.empty()) os << "gap_material = " << g.gap_material << '\n';
  os << '\n';
  if (const auto& t = c.temperature)
    os << "[temperature]\nT = " << number(t->T) << "\nmethod = " << method_keyword(t->method)
       << "\nzero_frequency = " << to_string(t->zero_frequency) << "\n\n";
  const QuadratureSettings& q = c.quadrature;
  os << "[quadrature]\nn_theta = " << q.n_theta << "\nn_chi = " << q.n_chi
     << "\nn_strip = " << q.n_strip << "\ntheta0 = " << number(q.theta0)
     << "\nrel_tol = " << number(q.rel_tol) << "\nchi_max = " << number(q.chi_max)
     << "\nthreads = " << q.threads
     << "\nrefinement_check = " << (q.refinement_check ? "true" : "false") << '\n';
  if (const auto& s = c.sweep) {
    const char* var = s->variable == SweepVariable::Distance    ? "d"
                      : s->variable == SweepVariable::Thickness ? "t"
                                                                : "T";
    os << "\n[sweep]\nvariable = " << var << "\nstart = " << number(s->start)
       << "\nstop = " << number(s->stop) << "\npoints = " << s->points
       << "\nspacing = " << (s->log_spacing ? "log" : "linear") << '\n';
    if (!s->output.empty()) os << "output = " << s->output << '\n';
  }
  return os.str();
}

Configuration build_configuration(const RunConfig& c) {
  const GeometrySpec& g = c.geometry;
  const Length d{g.d};
  switch (g.type) {
    case GeometryType::Ideal:
      return {IdealCasimir{}, vacuum_material(), d};
    case GeometryType::Slabs:
      return {SlabSlab{Length{g.t1}, Length{g.t2}}, find_material(c, g.material), d};
    case GeometryType::HalfSpaces:
      return {HalfSpaces{}, find_material(c, g.material), d};
    case GeometryType::FilledGap:
      if (g.gap_material.empty()) throw ConfigError(0, "filled_gap needs gap_material");
      return {FilledGap{Length{g.t1}, find_material(c, g.gap_material)},
              find_material(c, g.material), d};
    case GeometryType::Film:
      return {FilmInVacuum{find_material(c, g.gap_material.empty() ? g.material : g.gap_material)},
              vacuum_material(), d};
    case GeometryType::Sheets:
      return {ConductiveSheets{g.zeta}, vacuum_material(), d};
  }
  throw ConfigError(0, "unknown geometry");
}

std::vector<double> sweep_values(const SweepSpec& s) {
  std::vector<double> v;
  if (s.points == 1) return {s.start};
  for (int i = 0; i < s.points; ++i) {
    const double f = static_cast<double>(i) / (s.points - 1);
    v.push_back(s.log_spacing ? s.start * std::pow(s.stop / s.start, f)
                              : s.start + (s.stop - s.start) * f);
  }
  v.back() = s.stop;
  return v;
}

RunConfig with_sweep_value(const RunConfig& config, double value) {
  RunConfig c = config;
  if (!c.sweep) return c;
  switch (c.sweep->variable) {
    case SweepVariable::Distance:
      c.geometry.d = value;
      break;
    case SweepVariable::Thickness:
      c.geometry.t1 = c.geometry.t2 = value;
      break;
    case SweepVariable::Temperature:
      if (!c.temperature) c.temperature = TemperatureSpec{};
      c.temperature->T = value;
      if (c.temperature->method == ThermalMethod::Zero)
        c.temperature->method = ThermalMethod::Matsubara;
      break;
  }
  return c;
}

}  // namespace casimir::cli
