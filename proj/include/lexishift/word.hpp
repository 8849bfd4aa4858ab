#pragma once
// Finite binary words. A Word is a std::string over {'0','1'}; the parse
// boundary validates, everything downstream preserves the alphabet.

#include "lexishift/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lexishift {

using Word = std::string;

inline bool is_binary_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

inline Word parse_word(const std::string& text) {
    if (text.empty() || !is_binary_word(text))
        fail("ParseError", "not a binary word: '" + text + "'");
    return text;
}

inline Word mirror_word(Word w) {
    for (char& c : w) c = (c == '0') ? '1' : '0';
    return w;
}

inline Word word_pow(const Word& w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += w;
    return out;
}

inline std::size_t ones(const Word& w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'));
}

inline Word rotate_left(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    return w.substr(k) + w.substr(0, k);
}

inline std::vector<Word> rotations(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate_left(w, k));
    return out;
}

// Smallest word whose power equals w.
inline Word primitive_root(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return w.substr(0, d);
    }
    return w;
}

inline bool is_primitive(const Word& w) { return primitive_root(w).size() == w.size(); }

}  // namespace lexishift
