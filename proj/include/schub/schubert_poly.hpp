#pragma once

// Classical Schubert polynomials of the symmetric group, used as an
// independent reference for type A structure constants.  Everything here is
// one-line-permutation combinatorics: top polynomial = staircase monomial,
// recursion by divided differences, product expansion by greedy subtraction
// of the lexicographically smallest term (the lex-minimal monomial of the
// polynomial indexed by w is x^code(w) with coefficient 1, codes are
// distinct, and products of these polynomials have no cancellation).
//
// Working in S_N on variables x_1..x_N: products of polynomials indexed by
// permutations of S_m expand inside S_{2m-1} (exponents are bounded by twice
// the staircase), so any N >= 2m-1 is closed under expansion.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schub/equivariant.hpp"

namespace schub {

class SchubertOracle {
  public:
    using OneLine = std::vector<int>;  // images of 1..N, a permutation of 1..N

    explicit SchubertOracle(int symbols) : N_(symbols) {
        if (symbols < 1) throw std::invalid_argument("oracle needs at least one symbol");
    }

    int symbols() const { return N_; }

    // Extend a permutation of 1..k (k <= N) by fixed points.
    OneLine pad(OneLine w) const {
        for (int j = static_cast<int>(w.size()); j < N_; ++j) w.push_back(j + 1);
        if (static_cast<int>(w.size()) != N_) throw std::invalid_argument("one-line longer than the symbol count");
        return w;
    }

    static int length(const OneLine& w) {
        int inv = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inv;
        return inv;
    }

    // Lehmer code: code[i] = #{j > i : w[j] < w[i]}.
    static std::vector<int> code_of(const OneLine& w) {
        std::vector<int> c(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[j] < w[i]) ++c[i];
        return c;
    }

    // Inverse of code_of over S_N; accepts short codes (implicit zeros).
    OneLine perm_from_code(const std::vector<int>& code) const {
        if (static_cast<int>(code.size()) > N_) throw std::invalid_argument("code longer than the symbol count");
        std::vector<int> remaining(static_cast<std::size_t>(N_));
        std::iota(remaining.begin(), remaining.end(), 1);
        OneLine w;
        for (int i = 0; i < N_; ++i) {
            int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
            if (c < 0 || c >= static_cast<int>(remaining.size()))
                throw std::invalid_argument("exponent vector is not the code of a permutation on this many symbols");
            w.push_back(remaining[static_cast<std::size_t>(c)]);
            remaining.erase(remaining.begin() + c);
        }
        return w;
    }

    // Divided difference (f - f^{swap of x_{i+1}, x_{i+2}}) / (x_{i+1} - x_{i+2}),
    // with i a 0-indexed variable pair.
    EquivariantPolynomial divided_difference(const EquivariantPolynomial& f, int i) const {
        EquivariantPolynomial swapped(N_);
        for (const auto& [m, c] : f.terms()) {
            EquivariantPolynomial::Monomial s = m;
            std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
            swapped += EquivariantPolynomial::term(s, c);
        }
        EquivariantPolynomial num = f - swapped;
        if (num.is_zero()) return EquivariantPolynomial(N_);
        Coords d(static_cast<std::size_t>(N_), 0);
        d[static_cast<std::size_t>(i)] = 1;
        d[static_cast<std::size_t>(i) + 1] = -1;
        return num.divide_exact(EquivariantPolynomial::linear_form(d));
    }

    // The polynomial indexed by w (full one-line over 1..N), memoized.
    const EquivariantPolynomial& poly(const OneLine& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        validate(w);
        int ascent = -1;
        for (int i = 0; i + 1 < N_; ++i)
            if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i) + 1]) {
                ascent = i;
                break;
            }
        EquivariantPolynomial p(N_);
        if (ascent < 0) {
            // Longest element: the staircase monomial x1^{N-1} x2^{N-2} ...
            EquivariantPolynomial::Monomial m(static_cast<std::size_t>(N_), 0);
            for (int j = 0; j < N_; ++j) m[static_cast<std::size_t>(j)] = N_ - 1 - j;
            p = EquivariantPolynomial::term(m, 1);
        } else {
            OneLine up = w;
            std::swap(up[static_cast<std::size_t>(ascent)], up[static_cast<std::size_t>(ascent) + 1]);
            p = divided_difference(poly(up), ascent);
        }
        return memo_.emplace(w, std::move(p)).first->second;
    }

    // Expansion of poly(u) * poly(v) in the Schubert basis.
    std::map<OneLine, long long> expand_product(const OneLine& u, const OneLine& v) {
        EquivariantPolynomial r = poly(u) * poly(v);
        std::map<OneLine, long long> out;
        while (!r.is_zero()) {
            auto lead = r.terms().begin();
            long long c = lead->second;
            if (c < 0) throw std::logic_error("negative lead while expanding a product of Schubert polynomials");
            OneLine w = perm_from_code(lead->first);
            out[w] = c;
            EquivariantPolynomial piece = poly(w);
            piece *= c;
            r -= piece;
        }
        return out;
    }

  private:
    void validate(const OneLine& w) const {
        if (static_cast<int>(w.size()) != N_) throw std::invalid_argument("one-line has the wrong size");
        std::vector<char> seen(static_cast<std::size_t>(N_), 0);
        for (int x : w) {
            if (x < 1 || x > N_ || seen[static_cast<std::size_t>(x - 1)])
                throw std::invalid_argument("not a permutation one-line");
            seen[static_cast<std::size_t>(x - 1)] = 1;
        }
    }

    int N_;
    std::map<OneLine, EquivariantPolynomial> memo_;
};

}  // namespace schub
