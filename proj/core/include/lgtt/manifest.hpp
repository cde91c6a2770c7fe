#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lgtt {

std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::string& path);

/// Provenance record written alongside every numeric output file.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> input_digests;  // path -> sha256
    std::map<std::string, std::string> parameters;     // seeds, tolerances, grid, perturbations
    std::vector<std::string> outputs;
    std::string tool_version = "lgtt 0.1.0";
    double wall_seconds = 0;

    std::string to_json() const;
    void write(const std::string& path) const;
};

}  // namespace lgtt
