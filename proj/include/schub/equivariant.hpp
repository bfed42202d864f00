#pragma once

// Sparse integer polynomials in the simple-root variables, and localization
// of Schubert classes to torus fixed points (Billey's subword formula).
// This is the exact reference layer: small cases only, checked arithmetic.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/weyl_group.hpp"

namespace schub {

namespace detail {
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow (+)");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow (*)");
    return r;
}
}  // namespace detail

class EquivariantPolynomial {
public:
    using Monomial = std::vector<int>;  // exponent of each simple-root variable

    EquivariantPolynomial() = default;
    explicit EquivariantPolynomial(int nvars) : nvars_(nvars) {}

    static EquivariantPolynomial constant(int nvars, long long c) {
        EquivariantPolynomial p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }

    static EquivariantPolynomial term(const Monomial& m, long long c) {
        EquivariantPolynomial p(static_cast<int>(m.size()));
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    // The degree-1 polynomial  sum_i coords[i] * a_i.
    static EquivariantPolynomial linear_form(const Coords& coords) {
        EquivariantPolynomial p(static_cast<int>(coords.size()));
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            Monomial m(coords.size(), 0);
            m[i] = 1;
            p.terms_[m] = coords[i];
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    // Terms in ascending lexicographic monomial order (read-only view).
    const std::map<Monomial, long long>& terms() const { return terms_; }

    long long coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    long long constant_term() const { return coefficient(Monomial(nvars_, 0)); }

    int degree() const {  // max total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (int e : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (int e : m) t += e;
            if (d == -2) d = t;
            if (t != d) return false;
        }
        return true;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    EquivariantPolynomial& operator+=(const EquivariantPolynomial& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) {
            long long v = detail::checked_add(coefficient(m), c);
            if (v == 0)
                terms_.erase(m);
            else
                terms_[m] = v;
        }
        return *this;
    }

    EquivariantPolynomial& operator-=(const EquivariantPolynomial& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) {
            long long v = detail::checked_add(coefficient(m), detail::checked_mul(-1, c));
            if (v == 0)
                terms_.erase(m);
            else
                terms_[m] = v;
        }
        return *this;
    }

    friend EquivariantPolynomial operator+(EquivariantPolynomial a, const EquivariantPolynomial& b) {
        a += b;
        return a;
    }
    friend EquivariantPolynomial operator-(EquivariantPolynomial a, const EquivariantPolynomial& b) {
        a -= b;
        return a;
    }

    friend EquivariantPolynomial operator*(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
        a.check_compatible(b);
        EquivariantPolynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                long long v = detail::checked_add(r.coefficient(m), detail::checked_mul(ca, cb));
                if (v == 0)
                    r.terms_.erase(m);
                else
                    r.terms_[m] = v;
            }
        return r;
    }

    EquivariantPolynomial& operator*=(long long s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c = detail::checked_mul(c, s);
        return *this;
    }

    bool operator==(const EquivariantPolynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const EquivariantPolynomial& other) const { return !(*this == other); }

    long long evaluate_ones() const {
        long long total = 0;
        for (const auto& [m, c] : terms_) total = detail::checked_add(total, c);
        return total;
    }

    // Exact division by a degree-1 polynomial whose coefficient at some
    // variable is +-1 (true for every positive root in types A,B,C,D).
    // Throws if the division leaves a remainder.
    EquivariantPolynomial divide_exact(const EquivariantPolynomial& linear) const {
        check_compatible(linear);
        if (linear.degree() != 1 || linear.constant_term() != 0)
            throw std::invalid_argument("divide_exact: divisor must be a homogeneous linear form");
        int pivot = -1;
        for (int i = 0; i < nvars_; ++i) {
            Monomial m(nvars_, 0);
            m[i] = 1;
            long long c = linear.coefficient(m);
            if (c == 1 || c == -1) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw std::invalid_argument("divide_exact: divisor has no unit coefficient");
        Monomial pm(nvars_, 0);
        pm[pivot] = 1;
        long long pc = linear.coefficient(pm);

        EquivariantPolynomial rem = *this;
        EquivariantPolynomial quot(nvars_);
        // Eliminate terms in decreasing pivot-degree, then lexicographic order.
        while (!rem.terms_.empty()) {
            // Find the term with the highest pivot exponent (ties: map order).
            auto best = rem.terms_.end();
            for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
                if (best == rem.terms_.end() || it->first[pivot] > best->first[pivot]) best = it;
            if (best->first[pivot] == 0) throw std::domain_error("divide_exact: nonzero remainder");
            Monomial qm = best->first;
            qm[pivot] -= 1;
            long long qc = best->second / pc;
            if (qc * pc != best->second) throw std::domain_error("divide_exact: non-integral quotient");
            EquivariantPolynomial t(nvars_);
            t.terms_[qm] = qc;
            quot += t;
            rem -= t * linear;
        }
        return quot;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            if (!first) os << (c >= 0 ? " + " : " - ");
            if (first && c < 0) os << "-";
            long long a = c >= 0 ? c : -c;
            bool any_var = false;
            for (int e : m)
                if (e) any_var = true;
            if (a != 1 || !any_var) os << a;
            bool star = (a != 1);
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (star) os << "*";
                os << "a" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
                star = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    void check_compatible(const EquivariantPolynomial& other) const {
        if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
    }

    int nvars_ = 0;
    std::map<Monomial, long long> terms_;  // never stores zero coefficients
};

// All localizations sigma_w |_v for fixed v, as polynomials in the simple
// roots, computed by the subword formula along a reduced word of v:
// walk the word; picking letter t contributes the positive root
// (s_{i_1}...s_{i_{t-1}})(a_{i_t}) and the picked subword must stay reduced.
inline std::vector<EquivariantPolynomial> billey_column(const RootSystem& rs, const WeylGroup& W, int v,
                                                        const std::vector<int>& word) {
    const int n = rs.rank();
    {
        // defend against a non-reduced input word
        if (static_cast<int>(word.size()) != W.length(v) || W.from_word(word) != v)
            throw std::invalid_argument("billey_column: word is not a reduced word for v");
    }
    std::vector<EquivariantPolynomial> F(W.size(), EquivariantPolynomial(n));
    F[0] = EquivariantPolynomial::constant(n, 1);
    std::vector<int> touched{0};
    int prefix = 0;
    for (int t = 0; t < static_cast<int>(word.size()); ++t) {
        int i = word[t];
        // positive root contributed by picking position t
        Coords simple(n, 0);
        simple[i] = 1;
        Coords root = W.element(prefix).act(simple);
        EquivariantPolynomial lf = EquivariantPolynomial::linear_form(root);
        // In-place update is safe: we read F[z*s_i] (an ascent source, never
        // written this round) and write F[z] at descents.
        std::vector<int> now = touched;
        for (int z : now) {
            int zs = W.right_multiply(z, i);
            if (W.length(zs) > W.length(z)) {
                if (F[zs].is_zero()) touched.push_back(zs);
                F[zs] += lf * F[z];
            }
        }
        prefix = W.right_multiply(prefix, i);
    }
    return F;
}

inline std::vector<EquivariantPolynomial> billey_column(const RootSystem& rs, const WeylGroup& W, int v) {
    return billey_column(rs, W, v, W.reduced_word(v));
}

inline EquivariantPolynomial billey_restriction(const RootSystem& rs, const WeylGroup& W, int w, int v) {
    return billey_column(rs, W, v)[w];
}

}  // namespace schub
