#include "motzeta/json_io.hpp"

#include "motzeta/class_parser.hpp"

#include <fstream>
#include <stdexcept>

namespace motzeta {

using nlohmann::json;

SncModelData kodaira_In(long n) {
    if (n < 2) throw std::invalid_argument("kodaira_In requires n >= 2");
    SncModelData m;
    m.name = "kodaira_I" + std::to_string(n);
    m.dim = 1;
    const MotClass gm = MotClass::lefschetz() - MotClass(1);
    for (long i = 0; i < n; ++i)
        m.components.push_back(Component{"c" + std::to_string(i), 1, 0});
    for (long i = 0; i < n; ++i) {
        StratumPiece v;
        v.id = "v" + std::to_string(i);
        v.J = {"c" + std::to_string(i)};
        v.tilde_class = gm;
        m.pieces.push_back(std::move(v));
    }
    for (long i = 0; i < n; ++i) {
        const long j = (i + 1) % n;
        StratumPiece e;
        e.id = "e" + std::to_string(i);
        e.J = {"c" + std::to_string(i), "c" + std::to_string(j)};
        e.tilde_class = MotClass(1);
        e.facets["c" + std::to_string(i)] = "v" + std::to_string(j);
        e.facets["c" + std::to_string(j)] = "v" + std::to_string(i);
        m.pieces.push_back(std::move(e));
    }
    return m;
}

namespace {

long require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("expected integer field '") + key + "'");
    return j[key].get<long>();
}

std::string require_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("expected string field '") + key + "'");
    return j[key].get<std::string>();
}

} // namespace

SncModelData model_from_json(const json& j, long n_override) {
    if (j.contains("generator")) {
        const std::string gen = require_str(j, "generator");
        if (gen == "kodaira_In") {
            long n = j.contains("n") ? require_int(j, "n") : 3;
            if (n_override >= 0) n = n_override;
            return kodaira_In(n);
        }
        throw std::invalid_argument("unknown generator '" + gen + "'");
    }
    SncModelData m;
    m.name = require_str(j, "name");
    m.dim = require_int(j, "dim");
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("expected array field 'components'");
    for (const auto& cj : j["components"]) {
        Component c;
        c.id = require_str(cj, "id");
        c.N = require_int(cj, "N");
        c.nu = require_int(cj, "nu");
        m.components.push_back(std::move(c));
    }
    if (!j.contains("pieces") || !j["pieces"].is_array())
        throw std::invalid_argument("expected array field 'pieces'");
    for (const auto& pj : j["pieces"]) {
        StratumPiece p;
        p.id = require_str(pj, "id");
        if (!pj.contains("J") || !pj["J"].is_array())
            throw std::invalid_argument("piece '" + p.id + "': expected array field 'J'");
        for (const auto& id : pj["J"]) {
            if (!id.is_string())
                throw std::invalid_argument("piece '" + p.id + "': J entries must be strings");
            p.J.push_back(id.get<std::string>());
        }
        p.tilde_class = parse_class(require_str(pj, "tilde_class"));
        if (pj.contains("facets")) {
            if (!pj["facets"].is_object())
                throw std::invalid_argument("piece '" + p.id + "': facets must be an object");
            for (const auto& [k, v] : pj["facets"].items()) {
                if (!v.is_string())
                    throw std::invalid_argument("piece '" + p.id + "': facet values must be strings");
                p.facets[k] = v.get<std::string>();
            }
        }
        m.pieces.push_back(std::move(p));
    }
    return m;
}

SncModelData load_model_file(const std::string& path, long n_override) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    in >> j; // throws nlohmann::json::parse_error with byte position
    return model_from_json(j, n_override);
}

json model_to_json(const SncModelData& m) {
    json j;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["components"] = json::array();
    for (const auto& c : m.components)
        j["components"].push_back({{"id", c.id}, {"N", c.N}, {"nu", c.nu}});
    j["pieces"] = json::array();
    for (const auto& p : m.pieces) {
        json pj;
        pj["id"] = p.id;
        pj["J"] = p.J;
        pj["tilde_class"] = p.tilde_class.to_string();
        if (p.has_facets()) {
            json f = json::object();
            for (const auto& [k, v] : p.facets) f[k] = v;
            pj["facets"] = f;
        }
        j["pieces"].push_back(std::move(pj));
    }
    return j;
}

AbelianInput abelian_from_json(const json& j) {
    AbelianInput in;
    const std::string mode = require_str(j, "mode");
    if (mode == "semiabelian") {
        in.is_table = false;
        in.semiabelian.class0 = parse_class(require_str(j, "class"));
        in.semiabelian.t = require_int(j, "t");
        in.semiabelian.ord = require_int(j, "ord");
        return in;
    }
    if (mode == "table") {
        in.is_table = true;
        in.table.e = require_int(j, "e");
        in.table.c = parse_rat(require_str(j, "c"));
        in.table.t_pot = require_int(j, "t_pot");
        if (!j.contains("rows") || !j["rows"].is_object())
            throw std::invalid_argument("expected object field 'rows'");
        for (const auto& [k, v] : j["rows"].items()) {
            long d = 0;
            try {
                d = std::stol(k);
            } catch (const std::exception&) {
                throw std::invalid_argument("row key '" + k + "' is not an integer");
            }
            OracleRow row;
            row.cls = parse_class(require_str(v, "class"));
            row.ord = parse_rat(require_str(v, "ord"));
            row.t = require_int(v, "t");
            in.table.rows[d] = std::move(row);
        }
        return in;
    }
    throw std::invalid_argument("unknown mode '" + mode + "'");
}

AbelianInput load_abelian_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    in >> j;
    return abelian_from_json(j);
}

json pole_report_json(const std::vector<PoleEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries)
        out.push_back({{"q", rat_str(e.q)},
                       {"upper", e.upper},
                       {"lower", e.lower},
                       {"certified", e.certified()}});
    return out;
}

json mp_report_json(const MPReport& rep) {
    json out;
    out["poles"] = json::array();
    for (const auto& p : rep.poles)
        out["poles"].push_back({{"q", rat_str(p.q)},
                                {"m", p.m},
                                {"c_m", to_long(p.c_m)},
                                {"status", p.certified ? "certified" : "inconclusive"}});
    out["verdict"] = rep.all_certified ? "certified" : "inconclusive";
    out["predictions"] = {{"min_weight", rat_str(rep.min_weight)},
                          {"eigenvalue", rep.predicted_eigenvalue()},
                          {"jordan_block_at_least", rep.jordan_block_at_least()}};
    return out;
}

json normal_form_json(const NormalForm& nf) {
    json out;
    json num = json::array();
    for (const auto& [e, c] : nf.numerator)
        num.push_back({{"tpow", e}, {"class", c.to_string()}});
    out["numerator"] = num;
    json den = json::array();
    for (const auto& [f, m] : nf.denominator)
        den.push_back({{"a", f.a}, {"b", f.b}, {"mult", m}});
    out["denominator"] = den;
    out["display"] = nf.to_string();
    return out;
}

} // namespace motzeta
