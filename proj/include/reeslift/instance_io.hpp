#ifndef REESLIFT_INSTANCE_IO_HPP
#define REESLIFT_INSTANCE_IO_HPP

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "mubasis.hpp"

namespace reeslift {

/// On-disk instance: either a plane curve (the three forms f) or a space
/// curve (alpha, beta and the split degrees). Coefficient lists run from the
/// highest T0 power down; rationals are exact strings like "-3/7".
template <class K>
struct Instance {
    FieldSpec field;
    std::string kind;  // "plane-curve" | "space-curve"
    std::optional<ParamCurve<K>> plane;
    std::optional<ScrollCurve<K>> space;
};

inline FieldSpec field_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "rational") return FieldSpec::rationals();
    if (j.is_object() && j.contains("prime")) return FieldSpec::prime(j["prime"].get<long long>());
    throw ParseError("field must be \"rational\" or {\"prime\": p}");
}

inline nlohmann::json field_to_json(const FieldSpec& f) {
    if (f.rational) return "rational";
    return nlohmann::json{{"prime", f.p}};
}

namespace detail {

template <class K>
BinaryForm<K> form_from_json(const nlohmann::json& j, int deg, const FieldSpec& spec,
                             const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != deg + 1)
        throw ParseError(what + ": expected " + std::to_string(deg + 1) + " coefficients");
    BinaryForm<K> f(deg);
    for (int i = 0; i <= deg; ++i) {
        const auto& c = j[static_cast<std::size_t>(i)];
        if (c.is_number_integer())
            f.c[static_cast<std::size_t>(i)] = make_elem<K>(spec, c.get<long long>());
        else if (c.is_string())
            f.c[static_cast<std::size_t>(i)] = parse_coeff<K>(c.get<std::string>(), spec);
        else
            throw ParseError(what + ": coefficients must be integers or strings");
    }
    return f;
}

template <class K>
nlohmann::json form_to_json(const BinaryForm<K>& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : f.c) a.push_back(coeff_str(c));
    return a;
}

}  // namespace detail

template <class K>
Instance<K> instance_from_json(const nlohmann::json& j) {
    Instance<K> out;
    if (!j.contains("field") || !j.contains("kind") || !j.contains("d"))
        throw ParseError("instance needs \"field\", \"kind\" and \"d\"");
    out.field = field_from_json(j["field"]);
    out.kind = j["kind"].get<std::string>();
    int d = j["d"].get<int>();
    if (out.kind == "plane-curve") {
        if (!j.contains("f") || !j["f"].is_array() || j["f"].size() != 3)
            throw ParseError("plane-curve instance needs \"f\" with three coefficient lists");
        ParamCurve<K> c;
        c.field = out.field;
        c.d = d;
        for (int l = 0; l < 3; ++l)
            c.f[static_cast<std::size_t>(l)] = detail::form_from_json<K>(
                j["f"][static_cast<std::size_t>(l)], d, out.field, "f" + std::to_string(l));
        validate(c);
        out.plane = c;
    } else if (out.kind == "space-curve") {
        for (const char* key : {"mu1", "mu2", "alpha", "beta"})
            if (!j.contains(key)) throw ParseError(std::string("space-curve instance needs \"") + key + "\"");
        ScrollCurve<K> sc;
        sc.field = out.field;
        sc.d = d;
        sc.mu1 = j["mu1"].get<int>();
        sc.mu2 = j["mu2"].get<int>();
        if (!(0 <= sc.mu1 && sc.mu1 <= sc.mu2 && sc.mu1 + sc.mu2 <= d / 2))
            throw ParseError("need 0 <= mu1 <= mu2 and mu1 + mu2 <= d/2");
        sc.alpha = detail::form_from_json<K>(j["alpha"], d - sc.mu1, out.field, "alpha");
        sc.beta = detail::form_from_json<K>(j["beta"], d - sc.mu2, out.field, "beta");
        if (sc.alpha.zero() || sc.beta.zero()) throw ParseError("alpha and beta must be nonzero");
        if (gcd_binary_forms(sc.alpha, sc.beta).degree() > 0)
            throw CommonFactor("alpha and beta share a factor");
        out.space = sc;
    } else {
        throw ParseError("unknown instance kind: " + out.kind);
    }
    return out;
}

template <class K>
nlohmann::json instance_to_json(const Instance<K>& inst) {
    nlohmann::json j;
    j["field"] = field_to_json(inst.field);
    j["kind"] = inst.kind;
    if (inst.plane) {
        j["d"] = inst.plane->d;
        nlohmann::json f = nlohmann::json::array();
        for (const auto& form : inst.plane->f) f.push_back(detail::form_to_json(form));
        j["f"] = f;
    } else if (inst.space) {
        j["d"] = inst.space->d;
        j["mu1"] = inst.space->mu1;
        j["mu2"] = inst.space->mu2;
        j["alpha"] = detail::form_to_json(inst.space->alpha);
        j["beta"] = detail::form_to_json(inst.space->beta);
    }
    return j;
}

template <class K>
Instance<K> load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json<K>(j);
}

inline FieldSpec peek_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("field")) throw ParseError("instance needs \"field\"");
    return field_from_json(j["field"]);
}

}  // namespace reeslift

#endif
