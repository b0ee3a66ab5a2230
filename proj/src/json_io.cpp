#include "adiashort/json_io.hpp"

#include <fstream>

namespace adiashort {

using nlohmann::json;

json spectrum_to_json(const RelaxationSpectrum& spec) {
  json j;
  j["cosine"] = json::array();
  for (const auto& m : spec.cosine_modes())
    j["cosine"].push_back({{"amplitude", m.amplitude},
                           {"omega", m.angular_frequency}});
  j["exponential"] = json::array();
  for (const auto& m : spec.exponential_modes())
    j["exponential"].push_back({{"amplitude", m.amplitude},
                                {"tau_r", m.decay_time}});
  return j;
}

RelaxationSpectrum spectrum_from_json(const json& j) {
  std::vector<CosineMode> cosine;
  std::vector<ExponentialMode> exponential;
  if (j.contains("cosine"))
    for (const auto& m : j.at("cosine"))
      cosine.push_back({m.at("amplitude").get<double>(),
                        m.at("omega").get<double>()});
  if (j.contains("exponential"))
    for (const auto& m : j.at("exponential"))
      exponential.push_back({m.at("amplitude").get<double>(),
                             m.at("tau_r").get<double>()});
  return RelaxationSpectrum(std::move(cosine), std::move(exponential));
}

json protocol_to_json(const Protocol& p) {
  json j;
  j["tau"] = p.tau();
  j["breakpoints"] = json::array();
  for (const auto& b : p.breakpoints())
    j["breakpoints"].push_back({b.t, b.g});
  j["singular"] = json::array();
  for (const auto& s : p.singular_terms())
    j["singular"].push_back({{"order", s.derivative_order},
                             {"w_start", s.weight_at_start},
                             {"w_end", s.weight_at_end}});
  return j;
}

Protocol protocol_from_json(const json& j) {
  std::vector<Breakpoint> bps;
  for (const auto& b : j.at("breakpoints"))
    bps.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
  std::vector<SingularTerm> singular;
  if (j.contains("singular"))
    for (const auto& s : j.at("singular"))
      singular.push_back({s.at("order").get<int>(),
                          s.at("w_start").get<double>(),
                          s.at("w_end").get<double>()});
  return Protocol(j.at("tau").get<double>(), std::move(bps),
                  std::move(singular));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace adiashort
