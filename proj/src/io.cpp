#include "wilm/io.hpp"
#include "wilm/error.hpp"

namespace wilm {

namespace {

Dyadic dyadic_from_json(const Json& j) {
    if (!j.is_string())
        throw SchemaError("dyadic field must be a string");
    return Dyadic::parse(j.get<std::string>());
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field: ") + key);
    return j.at(key);
}

unsigned require_uint(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_unsigned())
        throw SchemaError(std::string("field must be a nonnegative integer: ") + key);
    return v.get<unsigned>();
}

} // namespace

Json real_poly_to_json(const RealPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs)
        arr.push_back(c.str());
    return arr;
}

RealPoly real_poly_from_json(const Json& j) {
    if (!j.is_array())
        throw SchemaError("real polynomial must be an array");
    RealPoly p;
    for (const auto& c : j)
        p.coeffs.push_back(dyadic_from_json(c));
    return p;
}

Json complex_poly_to_json(const ComplexPoly& p) {
    Json arr = Json::array();
    for (const auto& [a, b] : p.coeffs)
        arr.push_back(Json::array({a.str(), b.str()}));
    return arr;
}

ComplexPoly complex_poly_from_json(const Json& j) {
    if (!j.is_array())
        throw SchemaError("complex polynomial must be an array");
    ComplexPoly p;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2)
            throw SchemaError("complex coefficient must be [re, im]");
        p.coeffs.emplace_back(dyadic_from_json(c[0]), dyadic_from_json(c[1]));
    }
    return p;
}

Json instance_to_json(const WilmshurstInstance& inst) {
    Json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["epsilon"] = inst.epsilon.str();
    j["q"] = complex_poly_to_json(inst.q);
    return j;
}

WilmshurstInstance instance_from_json(const Json& j) {
    WilmshurstInstance inst;
    inst.n = require_uint(j, "n");
    inst.m = require_uint(j, "m");
    inst.epsilon = dyadic_from_json(require(j, "epsilon"));
    inst.q = complex_poly_from_json(require(j, "q"));
    return inst;
}

Json certificate_to_json(const ValenceCertificate& cert) {
    Json j;
    j["n"] = cert.inst.n;
    j["m"] = cert.inst.m;
    j["epsilon"] = cert.inst.epsilon.str();
    j["q"] = complex_poly_to_json(cert.inst.q);
    Json lines = Json::array();
    for (const auto& lc : cert.per_line) {
        Json line;
        line["j"] = lc.j;
        Json samples = Json::array();
        for (const auto& s : lc.samples)
            samples.push_back(s.str());
        line["samples"] = std::move(samples);
        Json signs = Json::array();
        for (char c : lc.signs)
            signs.push_back(std::string(1, c));
        line["signs"] = std::move(signs);
        line["lower"] = lc.certified_lower;
        lines.push_back(std::move(line));
    }
    j["lines"] = std::move(lines);
    j["origin_is_zero"] = cert.origin_is_zero;
    j["total"] = cert.total_certified;
    j["seed"] = cert.seed;
    j["version"] = cert.version;
    j["precision_bits"] = cert.precision_bits;
    return j;
}

ValenceCertificate certificate_from_json(const Json& j) {
    ValenceCertificate cert;
    cert.inst.n = require_uint(j, "n");
    cert.inst.m = require_uint(j, "m");
    cert.inst.epsilon = dyadic_from_json(require(j, "epsilon"));
    cert.inst.q = complex_poly_from_json(require(j, "q"));
    const Json& lines = require(j, "lines");
    if (!lines.is_array())
        throw SchemaError("lines must be an array");
    for (const auto& line : lines) {
        LineCount lc;
        lc.j = require_uint(line, "j");
        for (const auto& s : require(line, "samples"))
            lc.samples.push_back(dyadic_from_json(s));
        for (const auto& s : require(line, "signs")) {
            std::string t = s.get<std::string>();
            if (t.size() != 1 || (t[0] != '+' && t[0] != '-' && t[0] != '?'))
                throw SchemaError("sign entries must be '+', '-' or '?'");
            lc.signs.push_back(t[0]);
        }
        if (lc.signs.size() != lc.samples.size())
            throw SchemaError("signs/samples length mismatch");
        lc.certified_lower = require_uint(line, "lower");
        cert.per_line.push_back(std::move(lc));
    }
    const Json& origin = require(j, "origin_is_zero");
    if (!origin.is_boolean())
        throw SchemaError("origin_is_zero must be a boolean");
    cert.origin_is_zero = origin.get<bool>();
    cert.total_certified = require_uint(j, "total");
    cert.seed = require(j, "seed").get<uint64_t>();
    cert.version = require(j, "version").get<std::string>();
    cert.precision_bits = require_uint(j, "precision_bits");
    return cert;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw SchemaError("malformed JSON");
    return j;
}

} // namespace wilm
