#include "rgc/lyndon.hpp"

#include <algorithm>
#include <mutex>

namespace rgc {

void tensor_add(Tensor& t, const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t.find(w);
    if (it == t.end()) {
        t.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void tensor_add(Tensor& t, const Tensor& o, const Rat& scale) {
    if (scale.is_zero()) return;
    for (const auto& [w, c] : o) tensor_add(t, w, c * scale);
}

Tensor tensor_concat(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            tensor_add(out, w, ca * cb);
        }
    }
    return out;
}

Tensor tensor_bracket(const Tensor& a, const Tensor& b) {
    Tensor out = tensor_concat(a, b);
    tensor_add(out, tensor_concat(b, a), Rat(-1));
    return out;
}

bool tensor_is_zero(const Tensor& t) { return t.empty(); }

std::vector<Word> lyndon_words(int letters, int length) {
    if (letters < 1 || length < 1)
        throw error(errc::degree_error, "need letters >= 1 and length >= 1");
    // Duval's generation in lexicographic order
    std::vector<Word> out;
    Word w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == length) out.push_back(w);
        // extend periodically to full length, then increment
        Word t = w;
        while (static_cast<int>(t.size()) < length) t.push_back(t[t.size() - w.size()]);
        while (!t.empty() && t.back() == letters - 1) t.pop_back();
        if (!t.empty()) ++t.back();
        w = t;
    }
    return out;
}

long witt_dimension(int letters, int length) {
    // (1/k) sum_{d | k} mu(d) n^(k/d)
    auto mobius = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                result = -result;
            }
        }
        if (m > 1) result = -result;
        return result;
    };
    long total = 0;
    for (int d = 1; d <= length; ++d) {
        if (length % d) continue;
        long pw = 1;
        for (int i = 0; i < length / d; ++i) pw *= letters;
        total += mobius(d) * pw;
    }
    return total / length;
}

namespace {

// standard factorization: w = uv with v the longest proper Lyndon suffix
std::pair<Word, Word> standard_factorization(const Word& w) {
    // the longest proper suffix that is Lyndon equals the smallest proper suffix
    size_t best = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
            best = i;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

std::map<std::pair<int, Word>, Tensor>& expansion_cache() {
    static std::map<std::pair<int, Word>, Tensor> cache;
    return cache;
}
std::mutex expansion_mutex;

} // namespace

const Tensor& lyndon_bracket_expansion(int letters, const Word& w) {
    std::lock_guard<std::mutex> lock(expansion_mutex);
    auto& cache = expansion_cache();
    std::function<const Tensor&(const Word&)> rec = [&](const Word& word) -> const Tensor& {
        auto key = std::make_pair(letters, word);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Tensor t;
        if (word.size() == 1) {
            t.emplace(word, Rat(1));
        } else {
            auto [u, v] = standard_factorization(word);
            t = tensor_bracket(rec(u), rec(v));
        }
        return cache.emplace(std::move(key), std::move(t)).first->second;
    };
    return rec(w);
}

void LieElt::add(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    auto it = coords_.find(w);
    if (it == coords_.end()) {
        coords_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

LieElt& LieElt::operator+=(const LieElt& o) {
    if (g_ != o.g_) throw error(errc::basis_mismatch, "Lie element genus mismatch");
    for (const auto& [w, c] : o.coords_) add(w, c);
    return *this;
}

LieElt LieElt::operator*(const Rat& c) const {
    LieElt out(g_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : coords_) out.coords_.emplace(w, v * c);
    return out;
}

Tensor LieElt::to_tensor() const {
    Tensor t;
    for (const auto& [w, c] : coords_) tensor_add(t, lyndon_bracket_expansion(2 * g_, w), c);
    return t;
}

namespace {

bool is_lyndon(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
            return false;
    return true;
}

} // namespace

LieElt tensor_to_lie(int genus, const Tensor& t) {
    // The expansion of the standard bracketing of a Lyndon word is that word
    // plus lexicographically larger ones, so peel from the smallest word.
    LieElt out(genus);
    Tensor rest = t;
    while (!rest.empty()) {
        const auto& [w, c] = *rest.begin();
        if (!is_lyndon(w))
            throw error(errc::degree_error, "tensor element is not a Lie element");
        out.add(w, c);
        tensor_add(rest, lyndon_bracket_expansion(2 * genus, w), -c);
    }
    return out;
}

LieElt lie_bracket(const LieElt& a, const LieElt& b) {
    if (a.genus() != b.genus()) throw error(errc::basis_mismatch, "Lie bracket genus mismatch");
    return tensor_to_lie(a.genus(), tensor_bracket(a.to_tensor(), b.to_tensor()));
}

Tensor omega_tensor(int genus) {
    Tensor t;
    for (int i = 0; i < genus; ++i) {
        Word ab{static_cast<uint8_t>(2 * i), static_cast<uint8_t>(2 * i + 1)};
        Word ba{static_cast<uint8_t>(2 * i + 1), static_cast<uint8_t>(2 * i)};
        tensor_add(t, ab, Rat(1));
        tensor_add(t, ba, Rat(-1));
    }
    return t;
}

} // namespace rgc
