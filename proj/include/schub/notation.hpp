#pragma once

// External element notations.
//
// Reduced words: "s1 s3 s2" (1-indexed generators), identity "e".  Parsing
// accepts any word (not necessarily reduced); formatting always emits the
// BFS-canonical reduced word.
//
// Windows: the element as a (signed) permutation in coordinates, written as
// comma-separated entries.  Convention (frozen; validated against the
// published coefficient of the rank-4 example): window[i] = w(e_i), so entry
// j at slot i means w(e_i) = e_j, and a negative entry means a sign flip.
//   type A_n: n+1 positive entries, a permutation's one-line notation;
//   type B_n/C_n: n signed entries, any sign pattern (s_n flips e_n);
//   type D_n: n signed entries, an even number of them negative.
// Windows are defined only for the classical families and the full group.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "schub/weyl_group.hpp"

namespace schub {

enum class Notation { word, window };

inline std::string notation_name(Notation n) { return n == Notation::word ? "word" : "window"; }
inline Notation parse_notation_name(const std::string& s) {
    if (s == "word") return Notation::word;
    if (s == "window") return Notation::window;
    throw std::invalid_argument("unknown notation '" + s + "' (expected word|window)");
}

inline std::string format_word(const WeylGroup& W, int e) {
    if (e == 0) return "e";
    std::ostringstream os;
    bool first = true;
    for (int i : W.reduced_word(e)) {
        if (!first) os << ' ';
        os << 's' << (i + 1);
        first = false;
    }
    return os.str();
}

inline int parse_word(const WeylGroup& W, const std::string& text) {
    int cur = 0;
    std::size_t k = 0;
    bool saw_identity = false, saw_letter = false;
    auto skip = [&] {
        while (k < text.size() && (std::isspace(static_cast<unsigned char>(text[k])) || text[k] == ',' || text[k] == '*'))
            ++k;
    };
    skip();
    if (k >= text.size()) throw std::invalid_argument("empty element string");
    while (k < text.size()) {
        if (text[k] == 'e' || text[k] == 'E') {
            ++k;
            saw_identity = true;
        } else if (text[k] == 's' || text[k] == 'S') {
            ++k;
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == start) throw std::invalid_argument("expected generator index after 's'");
            int idx = std::stoi(text.substr(start, k - start));
            bool known = false;
            for (int g : W.generators()) known = known || (g == idx - 1);
            if (!known)
                throw std::invalid_argument("s" + std::to_string(idx) + " is not a generator of this group");
            cur = W.right_multiply(cur, idx - 1);
            saw_letter = true;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + text[k] + "' in word");
        }
        skip();
    }
    if (saw_identity && saw_letter) throw std::invalid_argument("'e' cannot be mixed with generators");
    return cur;
}

namespace detail {

inline int window_size(const CartanType& t) {
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B:
        case Family::C:
        case Family::D: return t.rank;
        default: throw std::invalid_argument("window notation is defined only for types A, B, C, D");
    }
}

inline void require_full_group(const WeylGroup& W) {
    if (static_cast<int>(W.generators().size()) != W.system().rank())
        throw std::invalid_argument("window notation requires the full Weyl group, not a subgroup");
}

// alpha-coordinates of a vector given in e-coordinates (family-specific
// change of basis; throws when the vector is not in the root lattice).
inline Coords alpha_coords_from_e(const CartanType& t, const std::vector<int>& x) {
    const int n = t.rank;
    Coords c(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix(x.size() + 1, 0);
    for (std::size_t j = 0; j < x.size(); ++j) prefix[j + 1] = prefix[j] + x[j];
    switch (t.family) {
        case Family::A:
            if (prefix.back() != 0) throw std::invalid_argument("type A vector must have entries summing to zero");
            for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k) + 1];
            return c;
        case Family::B:
            for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k) + 1];
            return c;
        case Family::C: {
            for (int k = 0; k + 1 < n; ++k) c[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k) + 1];
            int total = prefix.back();
            if (total % 2 != 0) throw std::invalid_argument("type C vector outside the root lattice");
            c[static_cast<std::size_t>(n) - 1] = total / 2;
            return c;
        }
        case Family::D: {
            for (int k = 0; k + 2 < n; ++k) c[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k) + 1];
            int p = prefix[static_cast<std::size_t>(n) - 2];
            int a = p + x[static_cast<std::size_t>(n) - 2] - x[static_cast<std::size_t>(n) - 1];
            int b = p + x[static_cast<std::size_t>(n) - 2] + x[static_cast<std::size_t>(n) - 1];
            if (a % 2 != 0 || b % 2 != 0) throw std::invalid_argument("type D vector outside the root lattice");
            c[static_cast<std::size_t>(n) - 2] = a / 2;
            c[static_cast<std::size_t>(n) - 1] = b / 2;
            return c;
        }
        default: throw std::invalid_argument("window notation is defined only for types A, B, C, D");
    }
}

// e-coordinates of the image of the 0-indexed simple root alpha_i under the
// signed permutation given by win (1-indexed entries, sign = flip).
inline std::vector<int> simple_image_e(const CartanType& t, const std::vector<int>& win, int i) {
    const int m = static_cast<int>(win.size());
    std::vector<int> x(static_cast<std::size_t>(m), 0);
    auto put = [&](int slot, int sgn) {
        int entry = win[static_cast<std::size_t>(slot)];
        int idx = entry > 0 ? entry : -entry;
        x[static_cast<std::size_t>(idx - 1)] += (entry > 0 ? sgn : -sgn);
    };
    const int n = t.rank;
    if (t.family == Family::A || i < n - 1 - (t.family == Family::D ? 1 : 0)) {
        put(i, +1);
        put(i + 1, -1);
        return x;
    }
    switch (t.family) {
        case Family::B:
            put(n - 1, +1);  // alpha_n = e_n
            return x;
        case Family::C:
            put(n - 1, +2);  // alpha_n = 2 e_n
            return x;
        case Family::D:
            if (i == n - 2) {  // alpha_{n-1} = e_{n-1} - e_n
                put(n - 2, +1);
                put(n - 1, -1);
            } else {  // alpha_n = e_{n-1} + e_n
                put(n - 2, +1);
                put(n - 1, +1);
            }
            return x;
        default: throw std::logic_error("unreachable");
    }
}

}  // namespace detail

// Window of an element as a vector of signed 1-indexed entries.
inline std::vector<int> window_entries(const WeylGroup& W, int e) {
    detail::require_full_group(W);
    const CartanType t = W.system().type();
    const int m = detail::window_size(t);
    const int n = t.rank;
    std::vector<int> win(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) win[static_cast<std::size_t>(j)] = j + 1;
    // Right multiplication by s_i acts on window slots.
    for (int i : W.reduced_word(e)) {
        if (t.family == Family::A || i < n - 1) {
            if (t.family == Family::D && i == n - 2) {
                std::swap(win[static_cast<std::size_t>(n) - 2], win[static_cast<std::size_t>(n) - 1]);
            } else {
                std::swap(win[static_cast<std::size_t>(i)], win[static_cast<std::size_t>(i) + 1]);
            }
        } else if (t.family == Family::B || t.family == Family::C) {
            win[static_cast<std::size_t>(n) - 1] = -win[static_cast<std::size_t>(n) - 1];
        } else {  // D: s_n sends e_{n-1} -> -e_n, e_n -> -e_{n-1}
            int a = win[static_cast<std::size_t>(n) - 2], b = win[static_cast<std::size_t>(n) - 1];
            win[static_cast<std::size_t>(n) - 2] = -b;
            win[static_cast<std::size_t>(n) - 1] = -a;
        }
    }
    return win;
}

inline std::string format_window(const WeylGroup& W, int e) {
    std::vector<int> win = window_entries(W, e);
    std::ostringstream os;
    for (std::size_t j = 0; j < win.size(); ++j) {
        if (j) os << ',';
        os << win[j];
    }
    return os.str();
}

// Inverse of window_entries; validates the entries against the family.
inline int element_from_window(const WeylGroup& W, const std::vector<int>& win) {
    detail::require_full_group(W);
    const CartanType t = W.system().type();
    const int m = detail::window_size(t);
    if (static_cast<int>(win.size()) != m)
        throw std::invalid_argument("window for " + t.name() + " needs " + std::to_string(m) + " entries");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int negatives = 0;
    for (int entry : win) {
        int a = entry > 0 ? entry : -entry;
        if (entry < 0) ++negatives;
        if (a < 1 || a > m || seen[static_cast<std::size_t>(a - 1)])
            throw std::invalid_argument("window entries must be a (signed) permutation of 1.." + std::to_string(m));
        seen[static_cast<std::size_t>(a - 1)] = 1;
    }
    if (t.family == Family::A && negatives > 0)
        throw std::invalid_argument("type A windows take positive entries only");
    if (t.family == Family::D && negatives % 2 != 0)
        throw std::invalid_argument("type D windows need an even number of sign flips");
    const int n = t.rank;
    std::vector<Coords> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = detail::alpha_coords_from_e(t, detail::simple_image_e(t, win, i));
    return W.index_of(WeylElement::from_simple_images(W.system(), images));
}

inline int parse_window(const WeylGroup& W, const std::string& text) {
    std::vector<int> win;
    std::size_t k = 0;
    auto skip = [&] {
        while (k < text.size()) {
            char ch = text[k];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']')
                ++k;
            else
                break;
        }
    };
    skip();
    while (k < text.size()) {
        int sgn = 1;
        if (text[k] == '-') {
            sgn = -1;
            ++k;
        }
        std::size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == start) throw std::invalid_argument("bad window entry in '" + text + "'");
        win.push_back(sgn * std::stoi(text.substr(start, k - start)));
        skip();
    }
    return element_from_window(W, win);
}

inline std::string format_element(const WeylGroup& W, int e, Notation n) {
    return n == Notation::word ? format_word(W, e) : format_window(W, e);
}

inline int parse_element(const WeylGroup& W, const std::string& s, Notation n) {
    return n == Notation::word ? parse_word(W, s) : parse_window(W, s);
}

}  // namespace schub
