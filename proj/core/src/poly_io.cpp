#include "lgtt/poly_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lgtt/complex_io.hpp"

namespace lgtt {

using json = nlohmann::ordered_json;

namespace {

json terms_to_json(const LaurentPolynomial& p) {
    std::vector<const std::pair<const ExponentVector, GaussianRational>*> order;
    for (const auto& t : p.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grevlex_less(b->first, a->first); });
    json arr = json::array();
    for (auto* t : order) {
        json jt;
        jt["exp"] = t->first.e;
        jt["re"] = rational_to_string(t->second.re);
        jt["im"] = rational_to_string(t->second.im);
        arr.push_back(std::move(jt));
    }
    return arr;
}

LaurentPolynomial terms_from_json(const json& j, const std::vector<std::string>& vars) {
    LaurentPolynomial p(vars);
    for (const auto& jt : j) {
        ExponentVector m(jt.at("exp").get<std::vector<long>>());
        GaussianRational c(parse_rational(jt.at("re").get<std::string>()),
                           parse_rational(jt.at("im").get<std::string>()));
        p.add_term(m, c);
    }
    return p;
}

}  // namespace

std::string write_polynomial(const LaurentPolynomial& p) {
    json j;
    j["vars"] = p.vars();
    j["terms"] = terms_to_json(p);
    return j.dump(2) + "\n";
}

LaurentPolynomial read_polynomial(const std::string& text) {
    json j = json::parse(text);
    auto vars = j.at("vars").get<std::vector<std::string>>();
    return terms_from_json(j.at("terms"), vars);
}

std::string write_family(const DeformationFamily& f) {
    json j;
    j["vars"] = f.base.vars();
    j["terms"] = terms_to_json(f.base);
    json defs = json::array();
    for (const auto& g : f.deformers) defs.push_back(terms_to_json(g));
    j["deformers"] = std::move(defs);
    json ts = json::array();
    for (auto z : f.t) ts.push_back(complex_to_string(z));
    j["t"] = std::move(ts);
    j["tau"] = complex_to_string(f.tau);
    return j.dump(2) + "\n";
}

DeformationFamily read_family(const std::string& text) {
    json j = json::parse(text);
    auto vars = j.at("vars").get<std::vector<std::string>>();
    DeformationFamily f;
    f.base = terms_from_json(j.at("terms"), vars);
    if (j.contains("deformers"))
        for (const auto& jd : j.at("deformers")) f.deformers.push_back(terms_from_json(jd, vars));
    if (j.contains("t"))
        for (const auto& jt : j.at("t")) f.t.push_back(parse_complex(jt.get<std::string>()));
    else
        f.t.assign(f.deformers.size(), {0.0, 0.0});
    if (j.contains("tau")) f.tau = parse_complex(j.at("tau").get<std::string>());
    if (f.t.size() != f.deformers.size())
        throw std::invalid_argument("family file: t length does not match deformers");
    return f;
}

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

LaurentPolynomial load_polynomial_file(const std::string& path) {
    return read_polynomial(slurp(path));
}

DeformationFamily load_family_file(const std::string& path) { return read_family(slurp(path)); }

bool file_is_family(const std::string& path) {
    json j = json::parse(slurp(path));
    return j.contains("deformers");
}

}  // namespace lgtt
