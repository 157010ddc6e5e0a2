#include "rgc/graph_io.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

namespace rgc {

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool consume(const std::string& s, size_t& i, const std::string& tok) {
    skip_ws(s, i);
    if (s.compare(i, tok.size(), tok) == 0) {
        i += tok.size();
        return true;
    }
    return false;
}

int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw error(errc::syntax, "expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

// (0 1 2)(3 4) ... -> list of cycles
std::vector<std::vector<int>> parse_cycles(const std::string& s, size_t& i) {
    std::vector<std::vector<int>> cycles;
    while (true) {
        skip_ws(s, i);
        if (i >= s.size() || s[i] != '(') break;
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws(s, i);
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            cyc.push_back(parse_int(s, i));
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') ++i; // tolerate commas
        }
        if (cyc.empty()) throw error(errc::syntax, "empty cycle");
        cycles.push_back(std::move(cyc));
    }
    if (cycles.empty()) throw error(errc::syntax, "expected at least one cycle");
    return cycles;
}

std::vector<int> permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int n,
                                         bool fill_fixed_points) {
    std::vector<int> p(n, -1);
    for (const auto& cyc : cycles) {
        for (size_t t = 0; t < cyc.size(); ++t) {
            int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
            if (a < 0 || a >= n)
                throw error(errc::not_permutation, "half-edge " + std::to_string(a) + " out of range");
            if (p[a] != -1)
                throw error(errc::not_permutation, "half-edge " + std::to_string(a) + " appears twice");
            p[a] = b;
        }
    }
    for (int h = 0; h < n; ++h) {
        if (p[h] == -1) {
            if (!fill_fixed_points)
                throw error(errc::not_permutation, "half-edge " + std::to_string(h) + " missing");
            p[h] = h;
        }
    }
    return p;
}

void check_iota_cycles(const std::vector<std::vector<int>>& cycles) {
    for (const auto& cyc : cycles) {
        if (cyc.size() == 1)
            throw error(errc::iota_fixed_point, "iota has a fixed point at " + std::to_string(cyc[0]));
        if (cyc.size() != 2)
            throw error(errc::iota_not_involution, "iota cycle of length " + std::to_string(cyc.size()));
    }
}

} // namespace

RibbonGraph parse_graph_text(const std::string& text) {
    size_t i = 0;
    if (!consume(text, i, "rg")) throw error(errc::syntax, "expected leading 'rg'");
    if (!consume(text, i, "E")) throw error(errc::syntax, "expected 'E='");
    if (!consume(text, i, "=")) throw error(errc::syntax, "expected 'E='");
    int E = parse_int(text, i);
    if (E <= 0) throw error(errc::syntax, "E must be positive");
    if (!consume(text, i, ";")) throw error(errc::syntax, "expected ';' after E");
    if (!consume(text, i, "sigma")) throw error(errc::syntax, "expected 'sigma='");
    if (!consume(text, i, "=")) throw error(errc::syntax, "expected 'sigma='");
    auto sigma_cycles = parse_cycles(text, i);
    if (!consume(text, i, ";")) throw error(errc::syntax, "expected ';' after sigma");
    if (!consume(text, i, "iota")) throw error(errc::syntax, "expected 'iota='");
    if (!consume(text, i, "=")) throw error(errc::syntax, "expected 'iota='");
    auto iota_cycles = parse_cycles(text, i);
    skip_ws(text, i);
    if (i != text.size()) throw error(errc::syntax, "trailing characters");

    check_iota_cycles(iota_cycles);
    std::vector<int> sigma = permutation_from_cycles(sigma_cycles, 2 * E, true);
    std::vector<int> iota = permutation_from_cycles(iota_cycles, 2 * E, false);
    return RibbonGraph(std::move(sigma), std::move(iota)); // ctor checks the rest
}

RibbonGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::syntax, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("E") || !j.contains("sigma") || !j.contains("iota"))
        throw error(errc::syntax, "graph JSON needs fields E, sigma, iota");
    int E = 0;
    try {
        E = j.at("E").get<int>();
        if (E <= 0) throw error(errc::syntax, "E must be positive");
        std::vector<int> sigma = j.at("sigma").get<std::vector<int>>();
        std::vector<int> iota = j.at("iota").get<std::vector<int>>();
        if (static_cast<int>(sigma.size()) != 2 * E || static_cast<int>(iota.size()) != 2 * E)
            throw error(errc::syntax, "sigma/iota must have length 2E");
        return RibbonGraph(std::move(sigma), std::move(iota));
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::syntax, std::string("bad graph JSON: ") + e.what());
    }
}

RibbonGraph parse_graph(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string serialize_graph_text(const RibbonGraph& g) {
    std::ostringstream os;
    os << "rg E=" << g.num_edges() << "; sigma=";
    for (const auto& cyc : g.vertices()) {
        os << '(';
        for (size_t t = 0; t < cyc.size(); ++t) os << (t ? " " : "") << cyc[t];
        os << ')';
    }
    os << "; iota=";
    for (auto [lo, hi] : g.edges()) os << '(' << lo << ' ' << hi << ')';
    return os.str();
}

std::string serialize_graph_json(const RibbonGraph& g) {
    nlohmann::ordered_json j;
    j["E"] = g.num_edges();
    j["sigma"] = g.sigma();
    j["iota"] = g.iota();
    return j.dump();
}

} // namespace rgc
