#include "qlift/report.hpp"

#include <numeric>

namespace qlift {

namespace {
Rational parse_rational(const std::string& s, const std::string& pointer) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (...) {
        throw InputError(pointer + ": malformed rational literal '" + s + "'");
    }
}
}  // namespace

Scalar parse_scalar(const Json& j, const CycloField* F, const std::string& pointer) {
    if (j.is_string()) return Scalar::rational(F, parse_rational(j.get<std::string>(), pointer));
    if (j.is_number_integer()) return Scalar::integer(F, j.get<long>());
    if (j.is_array()) {
        Scalar acc(F);
        long idx = 0;
        for (const auto& part : j) acc += parse_scalar(part, F, pointer + "/" + std::to_string(idx++));
        return acc;
    }
    if (j.is_object()) {
        if (!j.contains("root") || !j.at("root").is_array() || j.at("root").size() != 2)
            throw InputError(pointer + ": scalar object needs \"root\": [E, k]");
        long E = j.at("root").at(0).get<long>();
        long k = j.at("root").at(1).get<long>();
        if (E <= 0 || F->order() % E != 0)
            throw InputError(pointer + ": root order " + std::to_string(E) +
                             " does not divide the session cyclotomic order " + std::to_string(F->order()));
        Scalar s = Scalar::root_of_unity(F, (F->order() / E) * k);
        if (j.contains("coeff")) s = parse_rational(j.at("coeff").get<std::string>(), pointer + "/coeff") * s;
        return s;
    }
    throw InputError(pointer + ": unrecognized scalar literal");
}

ParsedInput parse_datum(const Json& j) {
    if (!j.is_object()) throw InputError("/: datum file must be a JSON object");
    for (const auto& [key, val] : j.items()) {
        if (key != "group" && key != "generators" && key != "params" && key != "options")
            throw InputError("/" + key + ": unknown field");
    }
    if (!j.contains("group") || !j.at("group").is_array())
        throw InputError("/group: required array of cyclic factor orders");
    std::vector<long> orders;
    for (const auto& o : j.at("group")) orders.push_back(o.get<long>());
    FinAbGroup G(orders);
    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        throw InputError("/generators: required nonempty array of {g, chi} pairs");
    std::vector<GrpElt> gs;
    std::vector<Character> chis;
    long idx = 0;
    for (const auto& gen : j.at("generators")) {
        std::string base = "/generators/" + std::to_string(idx++);
        if (!gen.is_object() || !gen.contains("g") || !gen.contains("chi"))
            throw InputError(base + ": needs \"g\" and \"chi\" exponent vectors");
        GrpVec g, chi;
        for (const auto& e : gen.at("g")) g.e.push_back(e.get<long>());
        for (const auto& e : gen.at("chi")) chi.e.push_back(e.get<long>());
        if ((long)g.e.size() != G.rank()) throw InputError(base + "/g: rank mismatch with group");
        if ((long)chi.e.size() != G.rank()) throw InputError(base + "/chi: rank mismatch with group");
        gs.push_back(G.reduce(g));
        chis.push_back(G.reduce(chi));
    }
    ParsedInput out;
    out.datum = std::make_shared<Datum>(G, gs, chis);  // validates the QLS condition
    const CycloField* F = out.datum->field();
    out.params = LiftingParams::zero(*out.datum);
    if (j.contains("params")) {
        const Json& p = j.at("params");
        for (const auto& [key, val] : p.items()) {
            if (key != "diag" && key != "link") throw InputError("/params/" + key + ": unknown field");
        }
        if (p.contains("diag")) {
            if ((long)p.at("diag").size() != out.datum->rank())
                throw InputError("/params/diag: one entry per generator required");
            for (long i = 0; i < out.datum->rank(); ++i)
                out.params.diag[i] = parse_scalar(p.at("diag").at(i), F, "/params/diag/" + std::to_string(i));
        }
        if (p.contains("link")) {
            long li = 0;
            for (const auto& entry : p.at("link")) {
                std::string base = "/params/link/" + std::to_string(li++);
                if (!entry.is_array() || entry.size() != 3)
                    throw InputError(base + ": expected [i, j, value]");
                long a = entry.at(0).get<long>(), b = entry.at(1).get<long>();
                if (a < 1 || b < 1 || a > out.datum->rank() || b > out.datum->rank() || a >= b)
                    throw InputError(base + ": indices must satisfy 1 <= i < j <= rank");
                out.params.link[{a - 1, b - 1}] = parse_scalar(entry.at(2), F, base + "/2");
            }
        }
    }
    if (j.contains("options")) {
        const Json& o = j.at("options");
        for (const auto& [key, val] : o.items()) {
            if (key != "degree_cap" && key != "verify_mode" && key != "seed")
                throw InputError("/options/" + key + ": unknown field");
        }
        if (o.contains("degree_cap")) out.degree_cap = o.at("degree_cap").get<long>();
        if (o.contains("verify_mode")) {
            std::string m = o.at("verify_mode").get<std::string>();
            if (m == "full") out.verify_full = true;
            else if (m == "sampled") out.verify_full = false;
            else throw InputError("/options/verify_mode: must be \"full\" or \"sampled\"");
        }
        if (o.contains("seed")) out.seed = o.at("seed").get<std::uint64_t>();
    }
    return out;
}

ParsedInput parse_datum_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("datum file is not valid JSON: ") + e.what());
    }
    return parse_datum(j);
}

Json scalar_to_json(const Scalar& s) {
    // canonical residue coefficients, lowest terms
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", coeffs}};
}

Json element_to_json(const Hopf& H, const SparseVec& v) {
    Json terms = Json::array();
    for (const auto& [i, c] : v) {
        terms.push_back(Json{{"monomial", render_mono(H.basis()[i], H.group())},
                             {"scalar", scalar_to_json(c)}});
    }
    return terms;
}

Json datum_echo(const Datum& d, const LiftingParams& p) {
    Json gens = Json::array();
    for (long i = 0; i < d.rank(); ++i) {
        gens.push_back(Json{{"g", d.g(i).e}, {"chi", d.chi(i).e}, {"N", d.N(i)}});
    }
    Json diag = Json::array();
    for (const auto& s : p.diag) diag.push_back(scalar_to_json(s));
    Json link = Json::array();
    for (const auto& [key, val] : p.link)
        link.push_back(Json{{"i", key.first + 1}, {"j", key.second + 1}, {"value", scalar_to_json(val)}});
    return Json{{"group", d.group().orders()},
                {"generators", gens},
                {"cyclotomic_order", d.E()},
                {"params", Json{{"diag", diag}, {"link", link}}}};
}

Json make_report(const std::string& command, const ParsedInput& in) {
    Json j;
    j["schema"] = "qlift-report/1";
    j["command"] = command;
    j["inputs"] = datum_echo(*in.datum, in.params);
    j["conventions"] = Json{
        {"power_relation", "x_i^{N_i} = a_ii (g_i^{N_i} - 1)"},
        {"linking_relation", "[x_i, x_j] = a_ij (g_i g_j - 1)"},
        {"dictionary", "a_ii = f(z_i), a_ij = f(z_ij)"},
        {"retraction", "PBW-membership projection"},
        {"delta_sign", "Psi^2 delta(f) equals the infinitesimal part of the cocycle realizing U(D,f); realizing scale = -f(z)"},
    };
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qlift

