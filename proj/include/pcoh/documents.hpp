#pragma once

#include "pcoh/finite_space.hpp"
#include "pcoh/poset.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcoh {

/// Malformed input (syntax). Semantic problems ("not a poset", unknown ids)
/// surface as std::invalid_argument when the document is interpreted.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(std::string s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string json_id(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw parse_error(std::string(what) + " must be a string or integer");
}

}  // namespace detail

/// A poset as written down: element list in declaration order plus "a <= b"
/// relation pairs. Readable/writable as JSON or as relation text; both
/// round-trip exactly.
struct PosetDocument {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const PosetDocument&, const PosetDocument&) = default;

    Poset to_poset() const { return Poset::from_relations(elements, relations); }

    // JSON: {"elements": [...], "relations": [["a","b"], ...], "name"?, "seed"?}
    static PosetDocument from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw parse_error("poset document must be a JSON object");
        PosetDocument d;
        if (!j.contains("elements") || !j.at("elements").is_array())
            throw parse_error("poset document needs an \"elements\" array");
        for (const auto& e : j.at("elements")) d.elements.push_back(detail::json_id(e, "element"));
        if (j.contains("relations")) {
            if (!j.at("relations").is_array()) throw parse_error("\"relations\" must be an array");
            for (const auto& r : j.at("relations")) {
                if (!r.is_array() || r.size() != 2)
                    throw parse_error("each relation must be a two-element array");
                d.relations.emplace_back(detail::json_id(r[0], "relation endpoint"),
                                         detail::json_id(r[1], "relation endpoint"));
            }
        }
        if (j.contains("name")) {
            if (!j.at("name").is_string()) throw parse_error("\"name\" must be a string");
            d.name = j.at("name").get<std::string>();
        }
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) throw parse_error("\"seed\" must be unsigned");
            d.seed = j.at("seed").get<std::uint64_t>();
        }
        return d;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["elements"] = elements;
        auto& rel = j["relations"] = nlohmann::json::array();
        for (const auto& [a, b] : relations) rel.push_back({a, b});
        if (name) j["name"] = *name;
        if (seed) j["seed"] = *seed;
        return j;
    }

    // Text: '#' starts a comment; "# name: ..." and "# seed: ..." are metadata;
    // a bare token declares an element, "a < b < c" declares relations.
    static PosetDocument from_text(const std::string& text) {
        PosetDocument d;
        auto declare = [&](const std::string& id) {
            for (const auto& e : d.elements)
                if (e == id) return;
            d.elements.push_back(id);
        };
        std::istringstream in(text);
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = detail::trim(raw);
            if (line.empty()) continue;
            if (line[0] == '#') {
                std::string body = detail::trim(line.substr(1));
                if (body.rfind("name:", 0) == 0) {
                    d.name = detail::trim(body.substr(5));
                } else if (body.rfind("seed:", 0) == 0) {
                    std::string v = detail::trim(body.substr(5));
                    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
                        throw parse_error("line " + std::to_string(lineno) + ": bad seed value");
                    d.seed = std::stoull(v);
                }
                continue;
            }
            if (auto h = line.find('#'); h != std::string::npos) line = detail::trim(line.substr(0, h));
            std::vector<std::string> tokens;
            std::size_t start = 0;
            for (;;) {
                auto lt = line.find('<', start);
                std::string tok = detail::trim(
                    lt == std::string::npos ? line.substr(start) : line.substr(start, lt - start));
                if (tok.empty())
                    throw parse_error("line " + std::to_string(lineno) + ": empty element id");
                tokens.push_back(std::move(tok));
                if (lt == std::string::npos) break;
                start = lt + 1;
            }
            for (const auto& t : tokens) declare(t);
            for (std::size_t k = 1; k < tokens.size(); ++k)
                d.relations.emplace_back(tokens[k - 1], tokens[k]);
        }
        return d;
    }

    std::string to_text() const {
        auto check = [](const std::string& id) {
            if (id.empty() || id != detail::trim(id) ||
                id.find_first_of("<#\n\r") != std::string::npos)
                throw std::invalid_argument("element id '" + id + "' is not representable as text");
        };
        std::ostringstream out;
        if (name) out << "# name: " << *name << "\n";
        if (seed) out << "# seed: " << *seed << "\n";
        for (const auto& e : elements) {
            check(e);
            out << e << "\n";
        }
        for (const auto& [a, b] : relations) out << a << " < " << b << "\n";
        return out.str();
    }

    /// Sniffs the format: leading '{' means JSON, anything else is text.
    static PosetDocument parse(const std::string& content) {
        for (char c : content) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '{') {
                nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
                if (j.is_discarded()) throw parse_error("invalid JSON");
                return from_json(j);
            }
            break;
        }
        return from_text(content);
    }
};

/// A finite space as written down: point list plus the full open-set family.
/// JSON only: {"points": [...], "opens": [[...], ...], "name"?}.
struct SpaceDocument {
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> opens;
    std::optional<std::string> name;

    friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;

    FiniteSpace to_space() const { return FiniteSpace::from_sets(points, opens); }

    static SpaceDocument from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw parse_error("space document must be a JSON object");
        SpaceDocument d;
        if (!j.contains("points") || !j.at("points").is_array())
            throw parse_error("space document needs a \"points\" array");
        for (const auto& p : j.at("points")) d.points.push_back(detail::json_id(p, "point"));
        if (!j.contains("opens") || !j.at("opens").is_array())
            throw parse_error("space document needs an \"opens\" array");
        for (const auto& open : j.at("opens")) {
            if (!open.is_array()) throw parse_error("each open set must be an array");
            std::vector<std::string> names;
            for (const auto& p : open) names.push_back(detail::json_id(p, "point"));
            d.opens.push_back(std::move(names));
        }
        if (j.contains("name")) {
            if (!j.at("name").is_string()) throw parse_error("\"name\" must be a string");
            d.name = j.at("name").get<std::string>();
        }
        return d;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["points"] = points;
        j["opens"] = opens;
        if (name) j["name"] = *name;
        return j;
    }

    static SpaceDocument parse(const std::string& content) {
        nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
        if (j.is_discarded()) throw parse_error("space documents are JSON; invalid JSON given");
        return from_json(j);
    }
};

}  // namespace pcoh
