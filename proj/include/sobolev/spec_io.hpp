#ifndef SOBOLEV_SPEC_IO_HPP
#define SOBOLEV_SPEC_IO_HPP

// JSON spec files and CSV/JSON table output. Needs nlohmann/json.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "scalar.hpp"
#include "spec.hpp"

namespace sobolev {

enum class Backend { exact, floating };

inline Backend parse_backend(const std::string& s) {
    if (s == "exact") return Backend::exact;
    if (s == "float") return Backend::floating;
    throw ParseError("backend must be 'exact' or 'float', got '" + s + "'");
}

struct SpecFile {
    Rational alpha;
    std::vector<MassPoint<Rational>> masses;
    Backend backend = Backend::exact;

    SobolevSpec<Rational> spec() const { return SobolevSpec<Rational>(alpha, masses); }
};

namespace detail {

inline Rational rational_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError(std::string("field '") + key + "' must be a rational string such as \"1/3\"");
}

}  // namespace detail

/*
 * {"alpha": "1/2",
 *  "masses": [{"c": "0", "nu": 1, "mu": "3/4"}, ...],
 *  "backend": "exact"}
 *
 * backend is optional (default exact). Degenerate alpha is rejected here.
 */
inline SpecFile parse_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("spec file must hold a JSON object");
    SpecFile out;
    out.alpha = detail::rational_field(j, "alpha");
    if (is_negative_integer(out.alpha)) {
        throw ParseError("alpha = " + out.alpha.str() + " is a negative integer (degenerate Laguerre functional)");
    }
    if (!j.contains("masses") || !j.at("masses").is_array()) throw ParseError("'masses' must be an array");
    for (const auto& m : j.at("masses")) {
        if (!m.is_object()) throw ParseError("each mass must be an object with c, nu, mu");
        if (!m.contains("nu") || !m.at("nu").is_number_integer() || m.at("nu").get<long long>() < 0) {
            throw ParseError("'nu' must be a nonnegative integer");
        }
        out.masses.push_back({detail::rational_field(m, "c"), m.at("nu").get<std::size_t>(),
                              detail::rational_field(m, "mu")});
    }
    if (j.contains("backend")) {
        if (!j.at("backend").is_string()) throw ParseError("'backend' must be a string");
        out.backend = parse_backend(j.at("backend").get<std::string>());
    }
    return out;
}

inline SpecFile parse_spec_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_spec(j);
}

inline SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

inline nlohmann::json to_json(const SpecFile& f) {
    nlohmann::json j;
    j["alpha"] = f.alpha.str();
    j["masses"] = nlohmann::json::array();
    for (const auto& m : f.masses) j["masses"].push_back({{"c", m.c.str()}, {"nu", m.nu}, {"mu", m.mu.str()}});
    j["backend"] = f.backend == Backend::exact ? "exact" : "float";
    return j;
}

/*
 * Rows of rendered cells. When `ragged` is set the first column is the key
 * and all remaining cells form one list (polynomial coefficients); otherwise
 * every row matches the header. Exact values are "p/q" strings; with
 * `numeric` set (float backend) JSON gets numbers instead.
 */
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool ragged = false;
    bool numeric = false;

    std::string csv() const {
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ',';
                out += cells[i];
            }
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out;
    }

    nlohmann::json json() const {
        auto cell = [&](const std::string& s) -> nlohmann::json {
            if (numeric) return std::stod(s);
            return s;
        };
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json obj;
            if (ragged) {
                obj[header.at(0)] = std::stoll(r.at(0));
                nlohmann::json list = nlohmann::json::array();
                for (std::size_t i = 1; i < r.size(); ++i) list.push_back(cell(r[i]));
                obj[header.at(1)] = list;
            } else {
                for (std::size_t i = 0; i < header.size(); ++i) {
                    obj[header[i]] = i == 0 && header[0] == "n" ? nlohmann::json(std::stoll(r.at(0))) : cell(r.at(i));
                }
            }
            out.push_back(obj);
        }
        return out;
    }
};

}  // namespace sobolev

#endif
