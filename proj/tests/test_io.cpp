#include "doctest.h"
#include "lgtt/complex_io.hpp"
#include "lgtt/manifest.hpp"
#include "lgtt/poly_io.hpp"

using namespace lgtt;

TEST_CASE("polynomial file format: bit-exact round-trip") {
    auto p = LaurentPolynomial::parse("z1^3/3 - z2 + (2-5*i)/(z1*z2^2)", {"z1", "z2"});
    std::string doc = write_polynomial(p);
    auto q = read_polynomial(doc);
    CHECK(p == q);
    CHECK(write_polynomial(q) == doc);  // serializer is canonical

    // parse -> serialize -> parse is the identity on canonical forms
    std::string doc2 = write_polynomial(read_polynomial(doc));
    CHECK(doc2 == doc);
}

TEST_CASE("family file format") {
    DeformationFamily f;
    f.base = LaurentPolynomial::parse("z^3/3", {"z"});
    f.deformers = {LaurentPolynomial::parse("1", {"z"}), LaurentPolynomial::parse("z", {"z"})};
    f.t = {{0.25, 0.0}, {-1.0, 0.5}};
    f.tau = {2.0, 0.0};
    std::string doc = write_family(f);
    auto g = read_family(doc);
    CHECK(g.base == f.base);
    REQUIRE(g.deformers.size() == 2);
    CHECK(g.deformers[1] == f.deformers[1]);
    CHECK(g.t[1] == f.t[1]);
    CHECK(g.tau == f.tau);
}

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("0.3+0.1i") == std::complex<double>(0.3, 0.1));
    CHECK(parse_complex("-1.5i") == std::complex<double>(0, -1.5));
    CHECK(parse_complex("2") == std::complex<double>(2, 0));
    CHECK(parse_complex("1e-3+2e-4i") == std::complex<double>(1e-3, 2e-4));
    CHECK(parse_complex("1-i") == std::complex<double>(1, -1));
    auto l = parse_complex_list("1+2i,3,-i");
    REQUIRE(l.size() == 3);
    CHECK(l[2] == std::complex<double>(0, -1));
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("manifest serialization") {
    RunManifest m;
    m.command = "lgtt analyze w.poly";
    m.parameters["seed"] = "7";
    m.input_digests["w.poly"] = sha256_hex("x");
    m.outputs.push_back("report.txt");
    std::string j = m.to_json();
    CHECK(j.find("analyze") != std::string::npos);
    CHECK(j.find("seed") != std::string::npos);
}
