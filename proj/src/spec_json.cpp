#include "lambdacoh/spec_json.hpp"

#include <nlohmann/json.hpp>

namespace lambdacoh {

using nlohmann::json;

Int json_to_int(const json& v) {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw SpecError("expected an integer (number or decimal string)");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return to_decimal(v);
}

namespace {

PrimeSeq seq_from_json(const json& v) {
    if (!v.is_object() || !v.contains("kind")) throw SpecError("sequence: {\"kind\": ...} expected");
    std::string kind = v.at("kind").get<std::string>();
    PrimeSeq s;
    if (kind == "zero") {
        s = PrimeSeq::zero();
    } else if (kind == "pow") {
        s = PrimeSeq::pow(v.at("r").get<int>());
    } else if (kind == "table") {
        std::map<long, Int> t;
        for (const auto& [k, val] : v.at("values").items()) t[std::stol(k)] = json_to_int(val);
        s = PrimeSeq::table(std::move(t));
    } else {
        throw SpecError("sequence kind must be zero, pow or table");
    }
    if (v.contains("overrides"))
        for (const auto& [k, val] : v.at("overrides").items())
            s = s.with_override(std::stol(k), json_to_int(val));
    return s;
}

json seq_to_json(const PrimeSeq& s) {
    json v;
    switch (s.kind) {
        case PrimeSeq::Kind::Zero: v["kind"] = "zero"; break;
        case PrimeSeq::Kind::Pow:
            v["kind"] = "pow";
            v["r"] = s.exponent;
            break;
        case PrimeSeq::Kind::Table: v["kind"] = "table"; break;
    }
    if (!s.values.empty()) {
        json t;
        for (const auto& [p, val] : s.values) t[std::to_string(p)] = int_to_json(val);
        v[s.kind == PrimeSeq::Kind::Table ? "values" : "overrides"] = t;
    } else if (s.kind == PrimeSeq::Kind::Table) {
        v["values"] = json::object();
    }
    return v;
}

std::vector<long> window_from_json(const json& doc) {
    if (!doc.contains("primes")) return default_window();
    std::vector<long> w;
    for (const auto& p : doc.at("primes")) {
        long v = p.get<long>();
        if (!is_prime(v)) throw SpecError("primes: entries must be prime");
        w.push_back(v);
    }
    if (w.empty()) throw SpecError("primes: window must be nonempty");
    return w;
}

}  // namespace

AdamsSpec parse_ring_spec(const json& doc, bool validate) {
    if (!doc.is_object()) throw SpecError("ring spec must be a JSON object");
    std::string family = doc.at("family").get<std::string>();
    json params = doc.value("params", json::object());
    std::vector<long> window = window_from_json(doc);
    AdamsSpec spec;
    if (family == "Z") {
        spec = build_integers();
        spec.prime_window = window;
    } else if (family == "dual") {
        spec = build_dual(seq_from_json(params.at("b")), window, validate);
    } else if (family == "S_cp") {
        spec = build_S_cp(seq_from_json(params.at("c")), window, validate);
    } else if (family == "S_bp_h") {
        spec = build_S_bp_h(seq_from_json(params.at("b")), json_to_int(params.at("h")), window,
                            validate);
    } else if (family == "S_pr_h") {
        spec = build_S_pr_h(params.at("r").get<int>(), json_to_int(params.at("h")), validate);
        spec.prime_window = window;
    } else if (family == "KCP3") {
        spec = build_KCP3();
        spec.prime_window = window;
    } else if (family == "S_h_d2") {
        spec = build_S_h_d2(json_to_int(params.at("h")), json_to_int(params.at("d2")), validate);
        spec.prime_window = window;
    } else if (family == "KFP2") {
        std::string f = params.at("F").get<std::string>();
        if (f != "C" && f != "H" && f != "O") throw SpecError("KFP2: F must be C, H or O");
        spec = build_KFP2(f == "C"   ? ProjectivePlaneField::C
                          : f == "H" ? ProjectivePlaneField::H
                                     : ProjectivePlaneField::O);
        spec.prime_window = window;
    } else {
        throw SpecError("unknown family: " + family);
    }
    if (doc.contains("n") && doc.at("n").get<std::size_t>() != spec.n)
        throw SpecError("ring spec: stated n disagrees with the family");
    return spec;
}

AdamsSpec parse_ring_spec_text(const std::string& text, bool validate) {
    json doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    return parse_ring_spec(doc, validate);
}

json ring_spec_to_json(const AdamsSpec& spec) {
    json doc;
    doc["n"] = spec.n;
    doc["family"] = family_name(spec.family);
    json params = json::object();
    switch (spec.family) {
        case Family::Integers: break;
        case Family::Dual: params["b"] = seq_to_json(spec.b); break;
        case Family::Scp: params["c"] = seq_to_json(spec.c); break;
        case Family::Sbph:
            params["b"] = seq_to_json(spec.b);
            params["h"] = int_to_json(spec.h);
            break;
        case Family::Sprh:
            params["r"] = spec.r;
            params["h"] = int_to_json(spec.h);
            break;
        case Family::KCP3: break;
        case Family::Shd2:
            params["h"] = int_to_json(spec.h);
            params["d2"] = int_to_json(spec.d2);
            break;
    }
    doc["params"] = params;
    doc["primes"] = spec.prime_window;
    return doc;
}

}  // namespace lambdacoh
