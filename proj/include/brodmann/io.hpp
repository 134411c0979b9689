#pragma once

// Text and JSON formats for monomial ideals and constraint systems.
//
// Ideal text:   "vars: 3" header, then one generator per line, e.g. "x1^3 x2 x4^2";
//               "1" is the unit monomial, '#' starts a comment.
// Ideal JSON:   {"r": 3, "generators": [[5,0,0],[4,1,0]]}
// System text:  "vars: e" header, optional "labels: z y1 ...", then rows "c1 ... ce >= b".
// System JSON:  {"e": 2, "A": [[2,-1]], "b": [0], "labels": ["x1","x2"]}

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "ideal.hpp"
#include "polyhedra.hpp"

namespace brodmann {

/// "x1^2*x2" (1-based), "1" for the unit monomial.
inline std::string to_string(const Monomial& m, std::string_view sep = "*") {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += sep;
        s += 'x' + std::to_string(i + 1);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string_view strip_comment(std::string_view s) {
    if (auto p = s.find('#'); p != std::string_view::npos) s = s.substr(0, p);
    return trim(s);
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T v{};
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error(std::string("invalid ") + what + " '" + std::string(tok) + "'", line);
    return v;
}

// "vars: N" -> N, or nullopt if the line is not a header.
inline std::optional<std::size_t> parse_header(std::string_view s, std::string_view key, std::size_t line) {
    if (s.substr(0, key.size()) != key) return std::nullopt;
    s = trim(s.substr(key.size()));
    if (s.empty() || s.front() != ':') return std::nullopt;
    return parse_number<std::size_t>(trim(s.substr(1)), line, "variable count");
}

inline bool looks_like_json(std::string_view text) {
    text = trim(text);
    return !text.empty() && text.front() == '{';
}

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("JSON: ") + e.what());
    }
}

}  // namespace detail

inline Monomial parse_monomial(std::string_view s, std::size_t r, std::size_t line = 0) {
    Monomial m(r);
    std::string buf(s);
    for (auto& c : buf)
        if (c == '*') c = ' ';
    std::istringstream in(buf);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'x') throw parse_error("expected a variable x<k>, got '" + tok + "'", line);
        std::string_view body(tok);
        body.remove_prefix(1);
        exponent_t e = 1;
        if (auto caret = body.find('^'); caret != std::string_view::npos) {
            e = detail::parse_number<exponent_t>(body.substr(caret + 1), line, "exponent");
            body = body.substr(0, caret);
        }
        auto k = detail::parse_number<std::size_t>(body, line, "variable index");
        if (k < 1 || k > r)
            throw parse_error("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(r), line);
        m[k - 1] = detail::checked_add(m[k - 1], e);
    }
    if (!any) throw parse_error("empty monomial", line);
    return m;
}

inline MonomialIdeal parse_ideal_text(std::string_view text) {
    std::optional<std::size_t> r;
    std::vector<Monomial> gens;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        auto line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (!r) {
            r = detail::parse_header(line, "vars", line_no);
            if (!r) throw parse_error("missing 'vars: <r>' header", line_no);
            continue;
        }
        gens.push_back(parse_monomial(line, *r, line_no));
    }
    if (!r) throw parse_error("missing 'vars: <r>' header");
    return minimize(std::move(gens), *r);
}

inline MonomialIdeal parse_ideal_json(std::string_view text) {
    auto j = detail::parse_json(text);
    try {
        auto r = j.at("r").get<std::size_t>();
        std::vector<Monomial> gens;
        for (const auto& g : j.at("generators")) {
            std::vector<exponent_t> exps;
            for (const auto& x : g) {
                auto v = x.get<std::int64_t>();
                if (v < 0 || v > std::numeric_limits<exponent_t>::max())
                    throw parse_error("exponent " + std::to_string(v) + " out of range");
                exps.push_back(static_cast<exponent_t>(v));
            }
            if (exps.size() != r)
                throw parse_error("generator has " + std::to_string(exps.size()) + " entries, expected " +
                                  std::to_string(r));
            gens.emplace_back(std::move(exps));
        }
        return minimize(std::move(gens), r);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("JSON ideal: ") + e.what());
    }
}

/// Dispatches on the first non-blank character.
inline MonomialIdeal parse_ideal(std::string_view text) {
    return detail::looks_like_json(text) ? parse_ideal_json(text) : parse_ideal_text(text);
}

inline std::string format_ideal_text(const MonomialIdeal& I) {
    std::string s = "vars: " + std::to_string(I.r()) + "\n";
    for (const auto& g : I.generators()) s += to_string(g, " ") + "\n";
    return s;
}

inline nlohmann::json ideal_to_json(const MonomialIdeal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.generators()) gens.push_back(g.vec());
    return {{"r", I.r()}, {"generators", gens}};
}

inline ConstraintSystem parse_system_text(std::string_view text) {
    ConstraintSystem sys;
    bool have_header = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        auto line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (!have_header) {
            auto e = detail::parse_header(line, "vars", line_no);
            if (!e) throw parse_error("missing 'vars: <e>' header", line_no);
            sys.e = *e;
            have_header = true;
            continue;
        }
        if (line.substr(0, 7) == "labels:") {
            std::istringstream ls{std::string(line.substr(7))};
            sys.labels.clear();
            for (std::string l; ls >> l;) sys.labels.push_back(l);
            if (sys.labels.size() != sys.e) throw parse_error("label count differs from vars", line_no);
            continue;
        }
        auto ge = line.find(">=");
        if (ge == std::string_view::npos) throw parse_error("expected 'c1 ... ce >= b'", line_no);
        IntVector row;
        std::istringstream ls{std::string(line.substr(0, ge))};
        for (std::string tok; ls >> tok;) row.push_back(detail::parse_number<std::int64_t>(tok, line_no, "coefficient"));
        if (row.size() != sys.e)
            throw parse_error("row has " + std::to_string(row.size()) + " coefficients, expected " +
                              std::to_string(sys.e), line_no);
        sys.A.push_back(std::move(row));
        sys.b.push_back(detail::parse_number<std::int64_t>(detail::trim(line.substr(ge + 2)), line_no, "right-hand side"));
    }
    if (!have_header) throw parse_error("missing 'vars: <e>' header");
    return sys;
}

inline ConstraintSystem parse_system_json(std::string_view text) {
    auto j = detail::parse_json(text);
    try {
        ConstraintSystem sys;
        sys.e = j.at("e").get<std::size_t>();
        sys.A = j.at("A").get<std::vector<IntVector>>();
        sys.b = j.contains("b") ? j.at("b").get<IntVector>() : IntVector(sys.A.size(), 0);
        if (j.contains("labels")) sys.labels = j.at("labels").get<std::vector<std::string>>();
        try {
            sys.validate();
        } catch (const input_error& e) {
            throw parse_error(e.what());
        }
        return sys;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("JSON system: ") + e.what());
    }
}

inline ConstraintSystem parse_system(std::string_view text) {
    return detail::looks_like_json(text) ? parse_system_json(text) : parse_system_text(text);
}

inline std::string format_system_text(const ConstraintSystem& sys) {
    std::string s = "vars: " + std::to_string(sys.e) + "\n";
    if (!sys.labels.empty()) {
        s += "labels:";
        for (const auto& l : sys.labels) s += ' ' + l;
        s += '\n';
    }
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        for (std::size_t j = 0; j < sys.e; ++j) s += (j ? " " : "") + std::to_string(sys.A[i][j]);
        s += " >= " + std::to_string(sys.b[i]) + "\n";
    }
    return s;
}

inline nlohmann::json system_to_json(const ConstraintSystem& sys) {
    nlohmann::json j = {{"e", sys.e}, {"A", sys.A}, {"b", sys.b}};
    if (!sys.labels.empty()) j["labels"] = sys.labels;
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace brodmann
