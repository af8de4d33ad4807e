#include "casimir/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "casimir/detail/parallel.hpp"
#include "casimir/error.hpp"
#include "casimir/permittivity.hpp"
#include "casimir/thermal.hpp"
#include "casimir/validation.hpp"

namespace casimir::cli {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v + 0.0);
  return buf;
}

struct Options {
  std::string config_path;
  bool csv = false;
  bool magnitude = false;
  int threads = 0;
  bool dump = false;
  std::string filter;
  std::vector<double> k_list;
};

RunConfig load(const Options& o) {
  RunConfig c = load_config(o.config_path);
  if (o.threads > 0) c.quadrature.threads = o.threads;
  return c;
}

int cmd_compute(const Options& o, std::ostream& out) {
  const RunConfig c = load(o);
  if (o.dump) {
    out << dump_config(c);
    return kExitOk;
  }
  const PressureResult r = evaluate(c);
  const double p = o.magnitude ? std::abs(r.pressure.value) : r.pressure.value;
  if (o.csv) {
    out << kCsvHeader << '\n' << csv_row(c.geometry.d, r, o.magnitude) << '\n';
  } else {
    out << "P = " << g6(p) << " N/m^2  est_error = " << g6(r.est_error)
        << "  tail_fraction = " << g6(r.tail_fraction) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = load(o);
  if (o.dump) {
    out << dump_config(c);
    return kExitOk;
  }
  if (!c.sweep) throw ConfigError(0, "sweep needs a [sweep] block");
  const std::vector<double> values = sweep_values(*c.sweep);

  struct Point {
    std::optional<PressureResult> result;
    std::string error;
    bool numeric = true;
  };
  const auto points = detail::parallel_map(values.size(), c.quadrature.threads, [&](std::size_t i) {
    Point p;
    try {
      RunConfig one = with_sweep_value(c, values[i]);
      one.quadrature.threads = 1;
      p.result = evaluate(one);
    } catch (const ConfigError& e) {
      p.error = e.what();
      p.numeric = false;
    } catch (const std::exception& e) {
      p.error = e.what();
    }
    return p;
  });

  std::ofstream file;
  if (!c.sweep->output.empty()) {
    file.open(c.sweep->output);
    if (!file) throw ConfigError(0, "cannot write '" + c.sweep->output + "'");
  }
  std::ostream& sink = c.sweep->output.empty() ? out : file;
  sink << kCsvHeader << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!points[i].result) {
      sink << "# aborted at variable=" << g17(values[i]) << ": " << points[i].error << '\n';
      err << "error: " << points[i].error << '\n';
      return points[i].numeric ? kExitNumeric : kExitConfig;
    }
    sink << csv_row(values[i], *points[i].result, o.magnitude) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  SuiteOptions s;
  s.filter = o.filter;
  s.threads = o.threads;
  const SuiteReport report = run_suite(s);
  out << (o.csv ? report.csv() : report.text());
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_material(const Options& o, std::ostream& out) {
  const RunConfig c = load(o);
  if (o.dump) {
    out << dump_config(c);
    return kExitOk;
  }
  if (c.materials.empty()) throw ConfigError(0, "no [material] block");
  const std::vector<double> ks =
      o.k_list.empty() ? std::vector<double>{0.0, 1e-3, 1e-2, 0.1, 1.0, 1e6} : o.k_list;
  for (const auto& m : c.materials) {
    check_material(m.material);
    out << "# material " << m.name << '\n';
    if (o.csv) out << "k_per_nm,eps\n";
    for (double k : ks) {
      std::string value;
      try {
        value = g17(k == 0.0 ? eps_static(m.material) : eps_imag_axis(m.material, k));
      } catch (const Error& e) {
        value = std::string("error: ") + e.what();
      }
      out << g17(k) << (o.csv ? "," : "  ") << value << '\n';
    }
    if (!o.csv) {
      std::string value;
      try {
        value = g17(eps_static(m.material));
      } catch (const Error& e) {
        value = std::string("error: ") + e.what();
      }
      out << "eps(0+) = " << value << '\n';
      const double far = eps_imag_axis(m.material, 1e12);
      out << "eps(inf) = 1 check: eps(1e12) - 1 = " << g17(far - 1.0)
          << (std::abs(far - 1.0) < 1e-12 ? "  ok" : "  FAILED") << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

PressureResult evaluate(const RunConfig& c) {
  const Configuration config = build_configuration(c);
  const QuadratureSettings& q = c.quadrature;
  if (c.temperature && c.temperature->method != ThermalMethod::Zero) {
    const Temperature T{c.temperature->T};
    const ZeroFrequencyMode mode = c.temperature->zero_frequency;
    switch (c.temperature->method) {
      case ThermalMethod::Matsubara: return pressure_finite_T(config, T, q, mode);
      case ThermalMethod::HighT: return pressure_high_T(config, T, q, mode);
      case ThermalMethod::LowT: {
        PressureResult r = pressure_zero_T(config, q);
        r.pressure.value += pressure_low_T_correction(config, T, q).value;
        return r;
      }
      case ThermalMethod::Zero: break;
    }
  }
  return pressure_zero_T(config, q);
}

std::string csv_row(double variable, const PressureResult& r, bool magnitude) {
  const double p = magnitude ? std::abs(r.pressure.value) : r.pressure.value;
  return g17(variable) + ',' + g17(p) + ',' + g17(r.est_error) + ',' + g17(r.tail_fraction);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir pressure between plates on the imaginary-frequency axis"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) sub->add_option("config", o.config_path, "run configuration file")->required();
    sub->add_flag("--csv", o.csv, "machine-readable output");
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  };
  CLI::App* compute = app.add_subcommand("compute", "pressure at one configuration");
  common(compute, true);
  compute->add_flag("--magnitude", o.magnitude, "print |P|");
  compute->add_flag("--dump-config", o.dump, "print the parsed configuration and exit");

  CLI::App* sweep = app.add_subcommand("sweep", "pressure over the [sweep] range as CSV");
  common(sweep, true);
  sweep->add_flag("--magnitude", o.magnitude, "write |P|");
  sweep->add_flag("--dump-config", o.dump, "print the parsed configuration and exit");

  CLI::App* validate_cmd = app.add_subcommand("validate", "run the cross-check suite");
  common(validate_cmd, false);
  validate_cmd->add_option("--filter", o.filter, "only checks whose name contains this text");

  CLI::App* material = app.add_subcommand("material", "tabulate eps(k) of the configured materials");
  common(material, true);
  material->add_option("--k", o.k_list, "wavenumbers in 1/nm")->delimiter(',');
  material->add_flag("--dump-config", o.dump, "print the parsed configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (material->parsed()) return cmd_material(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}

}  // namespace casimir::cli
