#ifndef ADIASHORT_JSON_IO_HPP
#define ADIASHORT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "adiashort/protocol.hpp"
#include "adiashort/relaxation.hpp"

namespace adiashort {

// Spectrum wire format:
//   { "cosine": [{"amplitude": f, "omega": f}, ...],
//     "exponential": [{"amplitude": f, "tau_r": f}, ...] }
nlohmann::json spectrum_to_json(const RelaxationSpectrum& spec);
RelaxationSpectrum spectrum_from_json(const nlohmann::json& j);

// Protocol wire format:
//   { "tau": f, "breakpoints": [[t, g], ...],
//     "singular": [{"order": n, "w_start": f, "w_end": f}, ...] }
nlohmann::json protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace adiashort

#endif
