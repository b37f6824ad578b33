// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main tancode operations. The data plane is the
// same JSON used by the CLI and the file formats: functions take and return
// JSON strings plus element-literal point strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tancode/io.hpp"
#include "tancode/verify.hpp"

namespace py = pybind11;
using namespace tancode;
using nlohmann::json;

namespace {

std::string construct_hamming(uint64_t q, uint32_t r, uint32_t ambient_multiple) {
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t e = 0;
    uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) throw domain_error("q must be a prime power");
    Field f(p, e * std::max(1u, ambient_multiple));
    HammingVariety hv = hamming_variety(f, e, r);
    return io::variety_to_json(hv.X, json{{"construction", "hamming"}}).dump(2);
}

std::string construct_constant(const std::string& code_json, uint64_t seed) {
    LinearCode c = io::code_from_json(json::parse(code_json));
    ConstantTangentVariety ctv = constant_tangent_variety(c, std::nullopt, seed);
    return io::variety_to_json(ctv.X, json{{"construction", "constant"}, {"seed", seed}}).dump(2);
}

std::string construct_from_code(const std::string& code_json, const std::vector<size_t>& sigma,
                                bool linear) {
    LinearCode c = io::code_from_json(json::parse(code_json));
    std::vector<size_t> sig0;
    for (size_t v : sigma) {
        if (v < 1 || v > c.length()) throw domain_error("sigma index out of range");
        sig0.push_back(v - 1);
    }
    std::optional<HigherTerms> higher;
    if (linear) higher = HigherTerms{};
    StabilizedVariety sv = variety_from_code(c, sig0, higher);
    json meta{{"construction", "from-code"},
              {"universal_word", io::format_point(sv.universal_word)}};
    return io::variety_to_json(sv.X, meta).dump(2);
}

std::string tangent(const std::string& variety_json, const std::string& point) {
    AffineVariety X = io::variety_from_json(json::parse(variety_json));
    auto a = io::parse_point(X.field(), point);
    TangentCode tc = tangent_code(X, a);
    json j;
    j["parity_check"] = io::matrix_to_json(tc.code.parity());
    j["k"] = tc.code.dim();
    j["delta"] = tc.delta;
    if (tc.code.dim() > 0)
        j["d"] = tc.code.min_distance();
    else
        j["d"] = nullptr;
    return j.dump(2);
}

std::vector<std::string> rational_points(const std::string& variety_json, uint32_t s) {
    AffineVariety X = io::variety_from_json(json::parse(variety_json));
    std::vector<std::string> out;
    for (const auto& a : X.rational_points(s)) out.push_back(io::format_point(a));
    return out;
}

std::string precompute_tables(const std::string& variety_json, size_t t, unsigned jobs) {
    AffineVariety X = io::variety_from_json(json::parse(variety_json));
    return io::tables_to_json(precompute(X, t, {}, jobs)).dump(2);
}

std::string decode_word(const std::string& tables_json, const std::string& point,
                        const std::string& word) {
    DecoderTables tables = io::tables_from_json(json::parse(tables_json));
    auto a = io::parse_point(tables.field, point);
    auto w = io::parse_point(tables.field, word);
    DecodeResult res = decode(tables, a, w);
    json j;
    j["codeword"] = io::format_point(res.codeword);
    j["error"] = io::format_point(res.error);
    json sup = json::array();
    for (size_t v : res.support) sup.push_back(v + 1);
    j["support"] = sup;
    return j.dump(2);
}

size_t code_min_distance(const std::string& code_json) {
    return io::code_from_json(json::parse(code_json)).min_distance();
}

bool code_is_near_mds(const std::string& code_json) {
    return io::code_from_json(json::parse(code_json)).is_near_mds();
}

std::string run_verify(const std::string& suite, uint64_t seed) {
    json rep;
    if (suite == "duality")
        rep = verify::duality(seed);
    else if (suite == "ops")
        rep = verify::ops(seed);
    else if (suite == "weights")
        rep = verify::weights(seed);
    else if (suite == "loci")
        rep = verify::loci();
    else if (suite == "decode-roundtrip")
        rep = verify::decode_roundtrip(seed);
    else if (suite == "deform")
        rep = verify::deform(seed);
    else
        throw domain_error("unknown suite: " + suite);
    return rep.dump(2);
}

}  // namespace

PYBIND11_MODULE(tancode, m) {
    m.doc() = "tangent codes of affine varieties over finite fields";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<budget_error>(m, "BudgetError");

    m.def("construct_hamming", &construct_hamming, py::arg("q"), py::arg("r"),
          py::arg("ambient_multiple") = 1,
          "Hamming tangent-code variety as a variety JSON string");
    m.def("construct_constant", &construct_constant, py::arg("code_json"), py::arg("seed") = 1,
          "constant-tangent variety from a code JSON string");
    m.def("construct_from_code", &construct_from_code, py::arg("code_json"), py::arg("sigma"),
          py::arg("linear") = false,
          "stabilizing construction; sigma is 1-based");
    m.def("tangent", &tangent, py::arg("variety_json"), py::arg("point"),
          "tangent-code report {parity_check, k, d, delta} at a point");
    m.def("rational_points", &rational_points, py::arg("variety_json"), py::arg("s") = 1,
          "all points of X(GF(q^s)) as literal strings");
    m.def("precompute", &precompute_tables, py::arg("variety_json"), py::arg("t"),
          py::arg("jobs") = 1, "decoder tables JSON for a variety");
    m.def("decode", &decode_word, py::arg("tables_json"), py::arg("point"), py::arg("word"),
          "decode a received word against the shared tables");
    m.def("min_distance", &code_min_distance, py::arg("code_json"));
    m.def("is_near_mds", &code_is_near_mds, py::arg("code_json"));
    m.def("verify", &run_verify, py::arg("suite"), py::arg("seed") = 1,
          "run a built-in verification suite, returns its JSON report");
}
