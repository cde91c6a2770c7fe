#pragma once

#include <complex>
#include <string>
#include <vector>

namespace lgtt {

/// Parses "a+bi" / "a-bi" / "a" / "bi" / "i" with decimal or scientific parts.
std::complex<double> parse_complex(const std::string& s);
std::vector<std::complex<double>> parse_complex_list(const std::string& s);  // comma separated

std::string complex_to_string(std::complex<double> z);

/// "re,im" CSV cell pair.
std::string csv_complex(std::complex<double> z);

}  // namespace lgtt
