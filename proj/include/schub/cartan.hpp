#pragma once

// Cartan data for the finite crystallographic families A-G in Bourbaki
// numbering.  Everything downstream works in simple-root coordinates, so the
// only inputs ever needed are the Cartan matrix and its symmetrizer.

#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const CartanType& o) const { return !(*this == o); }

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Rank restrictions keep each label unambiguous (B1=A1, C2=B2, D2=A1xA1, ...
// are reachable under their canonical names only).
inline void validate(const CartanType& ct) {
    const int n = ct.rank;
    bool ok = false;
    switch (ct.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("unsupported Cartan type " + ct.name());
}

inline CartanType parse_cartan_type(const std::string& s) {
    if (s.size() < 2)
        throw std::invalid_argument("cannot parse Cartan type from '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G')
        throw std::invalid_argument("unknown family in Cartan type '" + s + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad rank in Cartan type '" + s + "'");
    CartanType ct{static_cast<Family>(f), std::stoi(s.substr(1))};
    validate(ct);
    return ct;
}

// Cartan matrix with the pairing convention a[i][j] = <alpha_j, alpha_i^vee>,
// so the simple reflection acts on root coordinates c by
//   s_i(c)_i = c_i - sum_j a[i][j] c_j,   other coordinates unchanged.
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& ct) {
    validate(ct);
    const int n = ct.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-indexed

    switch (ct.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case Family::C:
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F:
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            a[2][1] = -2;
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long.
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
    return a;
}

// Symmetrizer d with d_i * a[i][j] = d_j * a[j][i]; d_i = (alpha_i,alpha_i)/2
// normalized so short roots have d = 1.
inline std::vector<int> symmetrizer(const CartanType& ct) {
    validate(ct);
    const int n = ct.rank;
    std::vector<int> d(n, 1);
    switch (ct.family) {
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Family::C:
            d[n - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// |W| by the classical formulas; used to refuse enumerations that cannot fit
// the configured bound before any work is done.
inline std::uint64_t weyl_order(const CartanType& ct) {
    validate(ct);
    const int n = ct.rank;
    switch (ct.family) {
        case Family::A: return factorial_u64(n + 1);
        case Family::B:
        case Family::C: return factorial_u64(n) << n;
        case Family::D: return factorial_u64(n) << (n - 1);
        case Family::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
        case Family::F: return 1152ull;
        case Family::G: return 12ull;
    }
    return 0;  // unreachable
}

inline int positive_root_count(const CartanType& ct) {
    validate(ct);
    const int n = ct.rank;
    switch (ct.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;  // unreachable
}

}  // namespace schub
