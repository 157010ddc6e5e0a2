#include "rgc/necklace.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace rgc {

int SymplecticBasis::parse_name(const std::string& s) const {
    if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b'))
        throw error(errc::basis_mismatch, "unknown symbol: " + s);
    int idx = 0;
    try {
        idx = std::stoi(s.substr(1));
    } catch (...) {
        throw error(errc::basis_mismatch, "unknown symbol: " + s);
    }
    if (idx < 1 || idx > g) throw error(errc::basis_mismatch, "symbol out of basis: " + s);
    return 2 * (idx - 1) + (s[0] == 'b' ? 1 : 0);
}

Word min_rotation(Word w) {
    if (w.size() <= 1) return w;
    Word best = w;
    for (size_t r = 1; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

void Necklace::add(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    Word key = min_rotation(w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Necklace& Necklace::operator+=(const Necklace& o) {
    if (g_ != o.g_) throw error(errc::basis_mismatch, "necklace genus mismatch");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Necklace& Necklace::operator-=(const Necklace& o) {
    if (g_ != o.g_) throw error(errc::basis_mismatch, "necklace genus mismatch");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Necklace Necklace::operator*(const Rat& c) const {
    Necklace out(g_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

std::string Necklace::str(const SymplecticBasis& basis) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        os << (first ? "" : " + ") << c.str() << "*|";
        for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << basis.name(w[i]);
        os << '|';
        first = false;
    }
    return os.str();
}

void NecklaceTensor::add(const std::vector<Word>& ws, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(ws.size()) != m_)
        throw error(errc::arity_mismatch, "tensor arity mismatch");
    std::vector<Word> key;
    key.reserve(ws.size());
    for (const Word& w : ws) key.push_back(min_rotation(w));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NecklaceTensor& NecklaceTensor::operator+=(const NecklaceTensor& o) {
    if (g_ != o.g_ || m_ != o.m_) throw error(errc::basis_mismatch, "tensor shape mismatch");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NecklaceTensor& NecklaceTensor::operator-=(const NecklaceTensor& o) {
    if (g_ != o.g_ || m_ != o.m_) throw error(errc::basis_mismatch, "tensor shape mismatch");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NecklaceTensor NecklaceTensor::operator*(const Rat& c) const {
    NecklaceTensor out(g_, m_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

NecklaceTensor NecklaceTensor::flip() const {
    NecklaceTensor out(g_, m_);
    for (const auto& [w, c] : terms_) {
        std::vector<Word> rev(w.rbegin(), w.rend());
        out.add(rev, c);
    }
    return out;
}

NecklaceTensor tensor_of(const Necklace& a, const Necklace& b) {
    if (a.genus() != b.genus()) throw error(errc::basis_mismatch, "genus mismatch");
    NecklaceTensor out(a.genus(), 2);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add({wa, wb}, ca * cb);
    return out;
}

namespace {

Word arc(const Word& w, size_t from, size_t to) {
    // letters strictly after position `from` and strictly before `to`, cyclically
    Word out;
    const size_t n = w.size();
    for (size_t p = (from + 1) % n; p != to; p = (p + 1) % n) out.push_back(w[p]);
    return out;
}

} // namespace

Necklace goldman_bracket(const SymplecticBasis& basis, const Necklace& u, const Necklace& v) {
    if (u.genus() != basis.g || v.genus() != basis.g)
        throw error(errc::basis_mismatch, "bracket inputs from a different basis");
    Necklace out(basis.g);
    for (const auto& [uw, uc] : u.terms()) {
        for (const auto& [vw, vc] : v.terms()) {
            const Rat coeff = uc * vc;
            for (size_t i = 0; i < uw.size(); ++i) {
                for (size_t j = 0; j < vw.size(); ++j) {
                    int p = basis.pairing(uw[i], vw[j]);
                    if (!p) continue;
                    // splice: u with u_i removed, then v with v_j removed
                    Word spliced;
                    spliced.reserve(uw.size() + vw.size() - 2);
                    for (size_t t = 1; t < uw.size(); ++t) spliced.push_back(uw[(i + t) % uw.size()]);
                    for (size_t t = 1; t < vw.size(); ++t) spliced.push_back(vw[(j + t) % vw.size()]);
                    out.add(spliced, coeff * Rat(p));
                }
            }
        }
    }
    return out;
}

NecklaceTensor turaev_cobracket(const SymplecticBasis& basis, const Necklace& u) {
    if (u.genus() != basis.g)
        throw error(errc::basis_mismatch, "cobracket input from a different basis");
    NecklaceTensor out(basis.g, 2);
    for (const auto& [w, c] : u.terms()) {
        const size_t n = w.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                int p = basis.pairing(w[i], w[j]);
                if (!p) continue;
                out.add({arc(w, j, i), arc(w, i, j)}, c * Rat(p));
            }
        }
    }
    return out;
}

NecklaceTensor bracket_action(const SymplecticBasis& basis, const Necklace& u,
                              const NecklaceTensor& t) {
    NecklaceTensor out(t.genus(), t.arity());
    for (const auto& [ws, c] : t.terms()) {
        for (int f = 0; f < t.arity(); ++f) {
            Necklace factor = Necklace::from_word(t.genus(), ws[f]);
            Necklace br = goldman_bracket(basis, u, factor);
            for (const auto& [bw, bc] : br.terms()) {
                std::vector<Word> nw = ws;
                nw[f] = bw;
                out.add(nw, c * bc);
            }
        }
    }
    return out;
}

std::string necklace_to_json(const SymplecticBasis& basis, const Necklace& n) {
    nlohmann::ordered_json j;
    j["g"] = basis.g;
    j["terms"] = nlohmann::json::array();
    for (const auto& [w, c] : n.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = c.str();
        term["word"] = nlohmann::json::array();
        for (uint8_t letter : w) term["word"].push_back(basis.name(letter));
        j["terms"].push_back(term);
    }
    return j.dump();
}

Necklace necklace_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::syntax, std::string("bad JSON: ") + e.what());
    }
    try {
        int g = j.at("g").get<int>();
        SymplecticBasis basis(g);
        Necklace n(g);
        for (const auto& term : j.at("terms")) {
            Rat c = Rat::parse(term.at("coeff").get<std::string>());
            Word w;
            for (const auto& s : term.at("word")) w.push_back(static_cast<uint8_t>(basis.parse_name(s.get<std::string>())));
            n.add(w, c);
        }
        return n;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::syntax, std::string("bad necklace JSON: ") + e.what());
    }
}

std::string tensor_to_json(const SymplecticBasis& basis, const NecklaceTensor& t) {
    nlohmann::ordered_json j;
    j["g"] = basis.g;
    j["arity"] = t.arity();
    j["terms"] = nlohmann::json::array();
    for (const auto& [ws, c] : t.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = c.str();
        term["words"] = nlohmann::json::array();
        for (const Word& w : ws) {
            nlohmann::json jw = nlohmann::json::array();
            for (uint8_t letter : w) jw.push_back(basis.name(letter));
            term["words"].push_back(jw);
        }
        j["terms"].push_back(term);
    }
    return j.dump();
}

} // namespace rgc
