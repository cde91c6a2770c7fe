#include "lgtt/complex_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lgtt {

std::complex<double> parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    // split at the last +/- that is not part of an exponent and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_part = [](std::string p, bool imag_tail) -> double {
        if (imag_tail) {
            if (p.empty() || (p.back() != 'i' && p.back() != 'j'))
                throw std::invalid_argument("expected imaginary part to end in i");
            p.pop_back();
            if (p.empty() || p == "+") return 1.0;
            if (p == "-") return -1.0;
        }
        std::size_t used = 0;
        double v = std::stod(p, &used);
        if (used != p.size()) throw std::invalid_argument("bad number '" + p + "'");
        return v;
    };
    bool tail_is_imag = t.back() == 'i' || t.back() == 'j';
    if (split == std::string::npos) {
        if (tail_is_imag) return {0.0, parse_part(t, true)};
        return {parse_part(t, false), 0.0};
    }
    if (!tail_is_imag)
        // forms like "1e-3" with no imaginary part
        return {parse_part(t, false), 0.0};
    double re = parse_part(t.substr(0, split), false);
    double im = parse_part(t.substr(split), true);
    return {re, im};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s) {
    std::vector<std::complex<double>> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        if (!cur.empty()) out.push_back(parse_complex(cur));
    }
    return out;
}

std::string complex_to_string(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() >= 0)
        os << "+" << z.imag() << "i";
    else
        os << "-" << -z.imag() << "i";
    return os.str();
}

std::string csv_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << "," << z.imag();
    return os.str();
}

}  // namespace lgtt
