#include "equidist/engine.hpp"

#include <json.hpp>

namespace equidist {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* const kKnownKeys[] = {"schema_version", "theta",  "verdict",   "reason",
                                  "failed_filters", "prime",  "mn",        "rep",
                                  "e",              "r",      "s",         "triangle",
                                  "lambda",         "sign",   "distances", "bound"};

Int parse_big(const ordered_json& v, const char* key) {
    if (!v.is_string()) throw CertificateFormatError(std::string(key) + " must be a string");
    try {
        const Rat r = Rat::parse(v.get<std::string>());
        if (!r.is_integer()) throw std::invalid_argument("fractional");
        return r.num();
    } catch (const std::exception&) {
        throw CertificateFormatError(std::string(key) + " is not an integer");
    }
}

Rat parse_rat_field(const ordered_json& v, const char* key) {
    if (!v.is_string()) throw CertificateFormatError(std::string(key) + " must be a string");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const std::exception&) {
        throw CertificateFormatError(std::string(key) + " is not a rational");
    }
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["schema_version"] = 1;
    j["theta"] = to_string(c.theta);
    j["verdict"] = verdict_token(c.verdict);
    if (c.reason != Reason::none) j["reason"] = reason_token(c.reason);
    if (!c.failed_filters.empty()) {
        ordered_json arr = ordered_json::array();
        for (Reason f : c.failed_filters) arr.push_back(reason_token(f));
        j["failed_filters"] = arr;
    }
    if (c.prime) j["prime"] = c.prime->get_str();
    if (c.obstruction_mn) j["mn"] = c.obstruction_mn->get_str();
    if (c.rep) j["rep"] = {c.rep->x.get_str(), c.rep->y.get_str()};
    if (c.e) j["e"] = c.e->str();
    if (c.r) j["r"] = c.r->str();
    if (c.s) j["s"] = c.s->str();
    if (c.triangle) j["triangle"] = {(*c.triangle)[0], (*c.triangle)[1], (*c.triangle)[2]};
    if (c.lambda) j["lambda"] = c.lambda->str();
    if (c.sign) j["sign"] = *c.sign;
    if (c.distances)
        j["distances"] = {(*c.distances)[0].str(), (*c.distances)[1].str(),
                          (*c.distances)[2].str()};
    if (c.bound) j["bound"] = *c.bound;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CertificateFormatError("certificate must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : kKnownKeys) known |= key == k;
        if (!known) throw CertificateFormatError("unknown key: " + key);
    }
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != 1)
        throw CertificateFormatError("unsupported schema_version");
    if (!j.contains("theta") || !j["theta"].is_string())
        throw CertificateFormatError("missing theta");
    if (!j.contains("verdict") || !j["verdict"].is_string())
        throw CertificateFormatError("missing verdict");

    Certificate c;
    try {
        c.theta = parse_theta(j["theta"].get<std::string>());
    } catch (const ParseError& e) {
        throw CertificateFormatError(std::string("bad theta: ") + e.what());
    }
    if (auto v = verdict_from_token(j["verdict"].get<std::string>()))
        c.verdict = *v;
    else
        throw CertificateFormatError("unknown verdict token");

    if (j.contains("reason")) {
        if (!j["reason"].is_string()) throw CertificateFormatError("reason must be a string");
        if (auto r = reason_from_token(j["reason"].get<std::string>()))
            c.reason = *r;
        else
            throw CertificateFormatError("unknown reason token");
    }
    if (j.contains("failed_filters")) {
        if (!j["failed_filters"].is_array())
            throw CertificateFormatError("failed_filters must be an array");
        for (const auto& v : j["failed_filters"]) {
            if (!v.is_string()) throw CertificateFormatError("failed_filters entries are strings");
            auto r = reason_from_token(v.get<std::string>());
            if (!r) throw CertificateFormatError("unknown filter token");
            c.failed_filters.push_back(*r);
        }
    }
    if (j.contains("prime")) c.prime = parse_big(j["prime"], "prime");
    if (j.contains("mn")) c.obstruction_mn = parse_big(j["mn"], "mn");
    if (j.contains("rep")) {
        const auto& arr = j["rep"];
        if (!arr.is_array() || arr.size() != 2)
            throw CertificateFormatError("rep must be a [x, y] array");
        FormRep rep;
        rep.x = parse_big(arr[0], "rep.x");
        rep.y = parse_big(arr[1], "rep.y");
        if (const auto* qs = std::get_if<QuadSurd>(&c.theta))
            rep.q = qs->q;
        else
            rep.q = rep.x * rep.x + 3 * rep.y * rep.y + 1;  // cannot validate; never matches
        c.rep = rep;
    }
    if (j.contains("e")) c.e = parse_rat_field(j["e"], "e");
    if (j.contains("r")) c.r = parse_rat_field(j["r"], "r");
    if (j.contains("s")) c.s = parse_rat_field(j["s"], "s");
    if (j.contains("triangle")) {
        const auto& arr = j["triangle"];
        if (!arr.is_array() || arr.size() != 3)
            throw CertificateFormatError("triangle must be a [a, b, c] array");
        std::array<std::int64_t, 3> tri;
        for (int i = 0; i < 3; ++i) {
            if (!arr[i].is_number_integer())
                throw CertificateFormatError("triangle sides must be integers");
            tri[i] = arr[i].get<std::int64_t>();
        }
        c.triangle = tri;
    }
    if (j.contains("lambda")) c.lambda = parse_rat_field(j["lambda"], "lambda");
    if (j.contains("sign")) {
        if (!j["sign"].is_number_integer() ||
            (j["sign"].get<int>() != 1 && j["sign"].get<int>() != -1))
            throw CertificateFormatError("sign must be 1 or -1");
        c.sign = j["sign"].get<int>();
    }
    if (j.contains("distances")) {
        const auto& arr = j["distances"];
        if (!arr.is_array() || arr.size() != 3)
            throw CertificateFormatError("distances must hold three rationals");
        c.distances = {{parse_rat_field(arr[0], "distances"), parse_rat_field(arr[1], "distances"),
                        parse_rat_field(arr[2], "distances")}};
    }
    if (j.contains("bound")) {
        if (!j["bound"].is_number_integer())
            throw CertificateFormatError("bound must be an integer");
        c.bound = j["bound"].get<std::int64_t>();
    }
    return c;
}

}  // namespace equidist
