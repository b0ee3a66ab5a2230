#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adiashort/json_io.hpp"
#include "adiashort/relaxation.hpp"
#include "adiashort/series.hpp"
#include "adiashort/shortcut.hpp"
#include "adiashort/work.hpp"

using nlohmann::json;
using namespace adiashort;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

std::vector<double> make_tau_grid(double lo, double hi, int count,
                                  const std::string& spacing) {
  if (!(lo > 0.0) || count < 1 || (count > 1 && !(hi > lo)))
    throw Error("invalid tau grid");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
  } else if (spacing == "log") {
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int i = 0; i < count; ++i)
      grid[i] = std::exp(l0 + (l1 - l0) * i / (count - 1));
  } else if (spacing == "linear") {
    for (int i = 0; i < count; ++i)
      grid[i] = lo + (hi - lo) * i / (count - 1);
  } else {
    throw Error("spacing must be 'linear' or 'log'");
  }
  return grid;
}

int worker_count(std::size_t jobs) {
  unsigned n = 0;
  if (const char* env = std::getenv("ADIASHORT_THREADS")) n = std::atoi(env);
  if (n == 0) n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

// Time-rescaled copy of a custom protocol: breakpoints stretched to the
// new tau, comb weights scaled by tau0/tau (the universal 1/tau family).
Protocol rescale_protocol(const Protocol& p, double tau) {
  const double r = tau / p.tau();
  std::vector<Breakpoint> bps;
  for (const auto& b : p.breakpoints()) bps.push_back({b.t * r, b.g});
  std::vector<SingularTerm> singular;
  for (const auto& s : p.singular_terms())
    singular.push_back({s.derivative_order, s.weight_at_start / r,
                        s.weight_at_end / r});
  return Protocol(tau, std::move(bps), std::move(singular));
}

struct ScanConfig {
  std::optional<IsingChainParams> ising;
  std::optional<json> spectrum_json;
  double tau_min = 0.1, tau_max = 10.0;
  int tau_count = 50;
  std::string spacing = "log";
  DriveParams drive{0.1, 1.0};
  std::string protocol_choice = "shortcut";
  std::string protocol_file;
  double tolerance = 1e-10;
  std::string output_path = "-";
  std::string output_format = "csv";
};

void apply_config_file(ScanConfig& cfg, const json& j) {
  if (j.contains("ising")) {
    const auto& i = j.at("ising");
    cfg.ising = IsingChainParams{
        i.at("J").get<double>(), i.at("gamma0").get<double>(),
        i.at("N").get<int>(), i.value("hbar", 1.0)};
  }
  if (j.contains("spectrum")) cfg.spectrum_json = j.at("spectrum");
  if (j.contains("tau_grid")) {
    const auto& g = j.at("tau_grid");
    cfg.tau_min = g.value("min", cfg.tau_min);
    cfg.tau_max = g.value("max", cfg.tau_max);
    cfg.tau_count = g.value("count", cfg.tau_count);
    cfg.spacing = g.value("spacing", cfg.spacing);
  }
  if (j.contains("drive")) {
    const auto& d = j.at("drive");
    cfg.drive.delta_lambda = d.value("delta_lambda", cfg.drive.delta_lambda);
    cfg.drive.lambda0 = d.value("lambda0", cfg.drive.lambda0);
  }
  if (j.contains("protocol")) {
    const auto& p = j.at("protocol");
    if (p.is_string()) {
      cfg.protocol_choice = p.get<std::string>();
    } else {
      cfg.protocol_choice = "custom-file";
      cfg.protocol_file = p.at("file").get<std::string>();
    }
  }
  if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
  if (j.contains("output")) {
    const auto& o = j.at("output");
    cfg.output_path = o.value("path", cfg.output_path);
    cfg.output_format = o.value("format", cfg.output_format);
  }
}

RelaxationSpectrum resolve_spectrum(const ScanConfig& cfg) {
  if (cfg.spectrum_json) return spectrum_from_json(*cfg.spectrum_json);
  if (cfg.ising) return make_ising_spectrum(*cfg.ising);
  throw Error("config must provide either 'spectrum' or 'ising'");
}

struct ScanRow {
  double tau = 0.0;
  double w_ex = std::nan("");
  double w_ex_norm = std::nan("");
  bool pass = false;
  bool failed = false;
  std::string error;
};

int run_scan(const ScanConfig& cfg) {
  const RelaxationSpectrum spec = resolve_spectrum(cfg);
  if (!(cfg.tolerance > 0.0)) throw Error("tolerance must be positive");
  const std::vector<double> grid =
      make_tau_grid(cfg.tau_min, cfg.tau_max, cfg.tau_count, cfg.spacing);
  const double norm =
      0.5 * cfg.drive.delta_lambda * cfg.drive.delta_lambda * spec.psi0();

  std::optional<Protocol> custom;
  if (cfg.protocol_choice == "custom-file")
    custom = protocol_from_json(load_json_file(cfg.protocol_file));

  auto evaluate = [&](double tau) -> Protocol {
    if (cfg.protocol_choice == "shortcut") return build_shortcut(spec, tau);
    if (cfg.protocol_choice == "ramp") return build_ramp(tau);
    if (cfg.protocol_choice == "quench") return build_quench(tau);
    if (cfg.protocol_choice == "custom-file")
      return rescale_protocol(*custom, tau);
    throw Error("unknown protocol choice: " + cfg.protocol_choice);
  };

  std::vector<ScanRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto work_fn = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      ScanRow& row = rows[i];
      row.tau = grid[i];
      try {
        const Protocol p = evaluate(grid[i]);
        row.w_ex = excess_work_spectral(spec, p, cfg.drive).excess_work;
        row.w_ex_norm = row.w_ex / norm;
        row.pass = std::abs(row.w_ex_norm) <= cfg.tolerance;
      } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
      }
    }
  };
  const int nthreads = worker_count(grid.size());
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(work_fn);
  work_fn();
  for (auto& t : pool) t.join();

  std::ostringstream out;
  bool any_failed = false;
  if (cfg.output_format == "csv") {
    out << "tau,w_ex,w_ex_norm,pass,method\n";
    for (const auto& r : rows) {
      out << fmt(r.tau) << ',' << fmt(r.w_ex) << ',' << fmt(r.w_ex_norm) << ','
          << (r.failed ? "fail" : (r.pass ? "true" : "false")) << ",spectral\n";
      any_failed |= r.failed;
    }
  } else if (cfg.output_format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o{{"tau", r.tau}, {"w_ex", r.w_ex}, {"w_ex_norm", r.w_ex_norm},
             {"pass", r.pass}, {"method", "spectral"}};
      if (r.failed) o["error"] = r.error;
      arr.push_back(o);
      any_failed |= r.failed;
    }
    out << arr.dump(2) << "\n";
  } else {
    throw Error("output format must be 'csv' or 'json'");
  }
  write_text(cfg.output_path, out.str());

  if (cfg.protocol_choice == "shortcut" && cfg.output_path != "-" &&
      !cfg.output_path.empty()) {
    // Comb diagnostics, tau-independent form: coefficient = weight * tau.
    const CombSolution sol = solve_comb(spec, 1.0);
    json terms = json::array();
    for (std::size_t i = 0; i < sol.orders.size(); ++i) {
      json t{{"order", sol.orders[i]}, {"coefficient", sol.weights[i]}};
      if (sol.omega_n[i])
        t["omega_n"] = *sol.omega_n[i];
      else
        t["omega_n"] = nullptr;
      terms.push_back(t);
    }
    save_json_file(cfg.output_path + ".comb.json",
                   json{{"condition_number", sol.condition_number},
                        {"terms", terms}});
  }

  for (const auto& r : rows)
    if (r.failed) {
      std::cerr << "scan: solver failure at tau=" << r.tau << ": " << r.error
                << "\n";
      return kExitNumeric;
    }
  (void)any_failed;
  return 0;
}

int classify_exit(const std::exception& e) {
  if (dynamic_cast<const SingularSystem*>(&e) ||
      dynamic_cast<const IllConditioned*>(&e) ||
      dynamic_cast<const GridTooCoarse*>(&e) ||
      dynamic_cast<const UnresolvedComb*>(&e))
    return kExitNumeric;
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortcut-to-adiabaticity protocol synthesis for weakly "
               "driven, thermally isolated systems"};
  app.require_subcommand(1);

  // ising
  auto* ising_cmd = app.add_subcommand(
      "ising", "Emit the transverse-field Ising chain relaxation spectrum");
  IsingChainParams ip;
  std::string ising_out = "-";
  ising_cmd->add_option("--J", ip.coupling_J, "coupling energy J");
  ising_cmd->add_option("--gamma0", ip.field_gamma0, "initial field Gamma0");
  ising_cmd->add_option("--N", ip.spin_count, "even spin count");
  ising_cmd->add_option("--hbar", ip.hbar, "reduced Planck constant");
  ising_cmd->add_option("-o,--output", ising_out, "output path ('-' = stdout)");

  // series
  auto* series_cmd = app.add_subcommand(
      "series", "Laurent coefficients, waiting time, shortcut verdict");
  std::string series_spectrum;
  int series_order = -1;
  double series_tol = 1e-12;
  series_cmd->add_option("--spectrum", series_spectrum, "spectrum JSON file")
      ->required();
  series_cmd->add_option("--order", series_order,
                         "truncation order (default: 2K-2)");
  series_cmd->add_option("--tol", series_tol, "shortcut verdict tolerance");

  // shortcut
  auto* shortcut_cmd = app.add_subcommand(
      "shortcut", "Synthesize the zero-excess-work protocol for a spectrum");
  std::string sc_spectrum, sc_out = "-";
  double sc_tau = 1.0;
  shortcut_cmd->add_option("--spectrum", sc_spectrum, "spectrum JSON file")
      ->required();
  shortcut_cmd->add_option("--tau", sc_tau, "switching time")->required();
  shortcut_cmd->add_option("-o,--output", sc_out, "output path ('-' = stdout)");

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "Evaluate excess work over a switching-time grid");
  std::string scan_config;
  ScanConfig overrides;
  std::string ov_spectrum, ov_protocol, ov_output, ov_spacing;
  double ov_tau_min = -1, ov_tau_max = -1, ov_tol = -1, ov_dl = std::nan(""),
         ov_l0 = std::nan("");
  int ov_count = -1;
  scan_cmd->add_option("--config", scan_config, "run-config JSON file");
  scan_cmd->add_option("--spectrum", ov_spectrum, "spectrum JSON file");
  scan_cmd->add_option("--protocol", ov_protocol,
                       "shortcut|ramp|quench|<protocol JSON file>");
  scan_cmd->add_option("--tau-min", ov_tau_min, "grid minimum");
  scan_cmd->add_option("--tau-max", ov_tau_max, "grid maximum");
  scan_cmd->add_option("--tau-count", ov_count, "grid size");
  scan_cmd->add_option("--spacing", ov_spacing, "linear|log");
  scan_cmd->add_option("--tolerance", ov_tol, "pass threshold on w_ex_norm");
  scan_cmd->add_option("--delta-lambda", ov_dl, "perturbation strength");
  scan_cmd->add_option("--lambda0", ov_l0, "reference parameter value");
  scan_cmd->add_option("-o,--output", ov_output, "output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ising_cmd) {
      const RelaxationSpectrum spec = make_ising_spectrum(ip);
      write_text(ising_out, spectrum_to_json(spec).dump(2) + "\n");
      return 0;
    }
    if (*series_cmd) {
      const RelaxationSpectrum spec =
          spectrum_from_json(load_json_file(series_spectrum));
      const int order =
          series_order >= 0 ? series_order : default_truncation_order(spec);
      const SeriesCoefficients c = laurent_coefficients(spec, order);
      std::ostringstream out;
      out << "a[-2] = " << fmt(c.a_minus2) << "\n";
      out << "a[-1] = " << fmt(c.a_minus1) << "\n";
      for (std::size_t i = 0; i < c.a_regular.size(); ++i)
        out << "a[" << i << "]  = " << fmt(c.a_regular[i]) << "\n";
      out << "waiting_time = " << fmt(waiting_time(spec)) << "\n";
      out << "shortcut_candidate = "
          << (is_shortcut_candidate(c, series_tol) ? "yes" : "no") << "\n";
      std::cout << out.str();
      return 0;
    }
    if (*shortcut_cmd) {
      const RelaxationSpectrum spec =
          spectrum_from_json(load_json_file(sc_spectrum));
      const Protocol p = build_shortcut(spec, sc_tau);
      write_text(sc_out, protocol_to_json(p).dump(2) + "\n");
      return 0;
    }
    if (*scan_cmd) {
      ScanConfig cfg;
      if (!scan_config.empty()) apply_config_file(cfg, load_json_file(scan_config));
      if (!ov_spectrum.empty()) {
        cfg.spectrum_json = load_json_file(ov_spectrum);
        cfg.ising.reset();
      }
      if (!ov_protocol.empty()) {
        if (ov_protocol == "shortcut" || ov_protocol == "ramp" ||
            ov_protocol == "quench") {
          cfg.protocol_choice = ov_protocol;
        } else {
          cfg.protocol_choice = "custom-file";
          cfg.protocol_file = ov_protocol;
        }
      }
      if (ov_tau_min > 0) cfg.tau_min = ov_tau_min;
      if (ov_tau_max > 0) cfg.tau_max = ov_tau_max;
      if (ov_count > 0) cfg.tau_count = ov_count;
      if (!ov_spacing.empty()) cfg.spacing = ov_spacing;
      if (ov_tol > 0) cfg.tolerance = ov_tol;
      if (!std::isnan(ov_dl)) cfg.drive.delta_lambda = ov_dl;
      if (!std::isnan(ov_l0)) cfg.drive.lambda0 = ov_l0;
      if (!ov_output.empty()) cfg.output_path = ov_output;
      return run_scan(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exit(e);
  }
  return 0;
}
