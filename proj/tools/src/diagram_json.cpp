#include "leghopf_app/diagram_json.hpp"

#include <limits>

namespace leghopf::app {

using nlohmann::json;

namespace {

Int read_int(const json& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw Error(Errc::InvalidDiagram, std::string(what) + ": expected an integer");
}

Rational read_rational(const json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw Error(Errc::InvalidDiagram, std::string(what) + ": expected an integer or \"p/q\"");
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw Error(Errc::InvalidDiagram, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

IntVec read_vec(const json& v, const char* what) {
    if (!v.is_array()) throw Error(Errc::InvalidDiagram, std::string(what) + ": expected an array");
    IntVec out;
    for (const auto& e : v) out.push_back(read_int(e, what));
    return out;
}

} // namespace

json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

json rational_json(const Rational& r) {
    if (!r.is_infinite() && r.is_integer()) return int_json(r.to_int());
    return r.str();
}

json to_json(const surgery::SurgeryDiagram& d) {
    json j;
    j["knots"] = json::array();
    for (const auto& k : d.knots)
        j["knots"].push_back({{"tb", int_json(k.tb)}, {"rot", int_json(k.rot)}, {"coeff", k.coeff}});
    j["lk"] = json::array();
    for (std::size_t r = 0; r < d.knots.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d.knots.size(); ++c) row.push_back(r == c ? json(0) : int_json(d.offdiag(r, c)));
        j["lk"].push_back(row);
    }
    j["components"] = json::array();
    for (const auto& c : d.components) {
        json lk = json::array();
        for (const auto& v : c.lk) lk.push_back(int_json(v));
        j["components"].push_back({{"tb", int_json(c.tb)}, {"rot", int_json(c.rot)}, {"lk", lk}});
    }
    if (!d.lk_pre.empty()) {
        j["lk_pre"] = json::array();
        for (const auto& row : d.lk_pre) {
            json jr = json::array();
            for (const auto& v : row) jr.push_back(rational_json(v));
            j["lk_pre"].push_back(jr);
        }
    }
    j["s3"] = d.s3;
    return j;
}

surgery::SurgeryDiagram diagram_from_json(const json& j) {
    surgery::SurgeryDiagram d;
    const json& knots = field(j, "knots");
    if (!knots.is_array()) throw Error(Errc::InvalidDiagram, "knots: expected an array");
    for (const auto& k : knots) {
        surgery::SurgeryKnot sk;
        sk.tb = read_int(field(k, "tb"), "knot tb");
        sk.rot = read_int(field(k, "rot"), "knot rot");
        const json& c = field(k, "coeff");
        if (!c.is_number_integer()) throw Error(Errc::InvalidDiagram, "knot coeff: expected +1 or -1");
        sk.coeff = c.get<int>();
        d.knots.push_back(sk);
    }
    const std::size_t n = d.knots.size();
    d.offdiag = IntMatrix(n);
    if (j.contains("lk")) {
        const json& lk = j.at("lk");
        if (!lk.is_array() || lk.size() != n) throw Error(Errc::InvalidDiagram, "lk: expected an n x n array");
        for (std::size_t r = 0; r < n; ++r) {
            IntVec row = read_vec(lk[r], "lk row");
            if (row.size() != n) throw Error(Errc::InvalidDiagram, "lk: expected an n x n array");
            for (std::size_t c = 0; c < n; ++c)
                if (r != c) d.offdiag(r, c) = row[c];
        }
    } else if (n > 1) {
        throw Error(Errc::InvalidDiagram, "missing field \"lk\"");
    }
    if (j.contains("components")) {
        for (const auto& c : j.at("components")) {
            surgery::ComponentKnot ck;
            ck.tb = read_int(field(c, "tb"), "component tb");
            ck.rot = read_int(field(c, "rot"), "component rot");
            ck.lk = c.contains("lk") ? read_vec(c.at("lk"), "component lk") : IntVec(n);
            d.components.push_back(ck);
        }
    }
    if (j.contains("lk_pre")) {
        for (const auto& row : j.at("lk_pre")) {
            if (!row.is_array()) throw Error(Errc::InvalidDiagram, "lk_pre: expected a matrix");
            RatVec r;
            for (const auto& v : row) r.push_back(read_rational(v, "lk_pre"));
            d.lk_pre.push_back(r);
        }
    }
    if (j.contains("s3")) {
        if (!j.at("s3").is_boolean()) throw Error(Errc::InvalidDiagram, "s3: expected a boolean");
        d.s3 = j.at("s3").get<bool>();
    }
    d.validate();
    return d;
}

} // namespace leghopf::app
