#pragma once

// Weyl group elements as integer action matrices on simple-root coordinates.
// The matrix is the canonical form: equality and hashing are structural, and
// no reduced word is part of the identity of an element.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "schub/root_system.hpp"

namespace schub {

class WeylElement {
  public:
    WeylElement() = default;

    static WeylElement identity(const RootSystem& rs) {
        WeylElement w(rs);
        for (int i = 0; i < rs.rank(); ++i) w.mat_[w.at(i, i)] = 1;
        return w;
    }

    // s_i: alpha_j |-> alpha_j - <alpha_j, alpha_i^vee> alpha_i.
    static WeylElement simple(const RootSystem& rs, int i) {
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("simple reflection index out of range");
        WeylElement w = identity(rs);
        for (int j = 0; j < rs.rank(); ++j)
            w.mat_[w.at(i, j)] = static_cast<std::int8_t>(w.mat_[w.at(i, j)] - rs.cartan()[i][j]);
        return w;
    }

    // Build an element from the images of the simple roots: images[j] is the
    // coordinate vector of w(alpha_j).  Used for reflections and for parsing
    // external notations; validity is the caller's concern (compose/index it
    // against an enumerated group to verify membership).
    static WeylElement from_simple_images(const RootSystem& rs, const std::vector<Coords>& images) {
        const int n = rs.rank();
        if (static_cast<int>(images.size()) != n)
            throw std::invalid_argument("from_simple_images: need one image per simple root");
        WeylElement w(rs);
        for (int j = 0; j < n; ++j) {
            if (static_cast<int>(images[j].size()) != n)
                throw std::invalid_argument("from_simple_images: image has wrong rank");
            for (int i = 0; i < n; ++i) {
                int c = images[j][i];
                if (c < -127 || c > 127) throw std::overflow_error("from_simple_images: entry overflow");
                w.mat_[w.at(i, j)] = static_cast<std::int8_t>(c);
            }
        }
        return w;
    }

    const RootSystem& system() const {
        if (!rs_) throw std::logic_error("uninitialized WeylElement");
        return *rs_;
    }
    int rank() const { return n_; }
    const std::vector<std::int8_t>& matrix() const { return mat_; }

    bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
    bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
    bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

    // Composition: (u*v)(beta) = u(v(beta)).
    friend WeylElement multiply(const WeylElement& u, const WeylElement& v) {
        u.check_compatible(v);
        WeylElement r(u.system());
        const int n = u.n_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int acc = 0;
                for (int k = 0; k < n; ++k) acc += int(u.mat_[u.at(i, k)]) * int(v.mat_[v.at(k, j)]);
                r.mat_[r.at(i, j)] = static_cast<std::int8_t>(acc);
            }
        return r;
    }

    // Inverse through the root permutation: column j of w^-1 is the unique
    // +-beta with w(beta) = alpha_j.  Stays in exact integers.
    WeylElement inverse() const {
        const RootSystem& rs = system();
        WeylElement r(rs);
        const int n = n_;
        std::vector<bool> done(static_cast<std::size_t>(n), false);
        int remaining = n;
        for (int b = 0; b < rs.num_positive() && remaining > 0; ++b) {
            Coords img = act(rs.root(b).coords);
            bool neg = !RootSystem::is_positive_root_vector(img);
            if (neg)
                for (int& x : img) x = -x;
            int j = rs.root_index(img);
            if (j < 0) throw std::logic_error("inverse: image is not a root");
            for (int i = 0; i < n; ++i) {
                Coords a(static_cast<std::size_t>(n), 0);
                a[static_cast<std::size_t>(i)] = 1;
                if (img == a) {
                    // w(beta) = +-alpha_i, so w^-1(alpha_i) = +-beta.
                    if (!done[static_cast<std::size_t>(i)]) {
                        const Coords& bc = rs.root(b).coords;
                        for (int k = 0; k < n; ++k)
                            r.mat_[r.at(k, i)] = static_cast<std::int8_t>(neg ? -bc[static_cast<std::size_t>(k)]
                                                                              : bc[static_cast<std::size_t>(k)]);
                        done[static_cast<std::size_t>(i)] = true;
                        --remaining;
                    }
                }
            }
        }
        if (remaining != 0) throw std::logic_error("inverse: incomplete root permutation");
        return r;
    }

    Coords act(const Coords& c) const {
        const int n = n_;
        Coords out(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            int acc = 0;
            for (int j = 0; j < n; ++j) acc += int(mat_[at(i, j)]) * c[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    }

    // Image of positive root #r, encoded as idx for +root(idx) and
    // -1-idx for -root(idx).
    int act_root_index(int r) const {
        const RootSystem& rs = system();
        Coords img = act(rs.root(r).coords);
        bool pos = RootSystem::is_positive_root_vector(img);
        if (!pos)
            for (int& x : img) x = -x;
        int idx = rs.root_index(img);
        if (idx < 0) throw std::logic_error("act_root_index: image is not a root");
        return pos ? idx : -1 - idx;
    }

    // Inversion set { beta > 0 : w(beta) < 0 }, as indices into the positive
    // roots of the ambient system.
    std::vector<int> inversions() const {
        const RootSystem& rs = system();
        std::vector<int> inv;
        for (int r = 0; r < rs.num_positive(); ++r)
            if (act_root_index(r) < 0) inv.push_back(r);
        return inv;
    }

    int length() const { return static_cast<int>(inversions().size()); }

    // l(w s_i) < l(w) iff w(alpha_i) < 0.
    bool right_descent(int i) const {
        return act_root_index(system().simple_root_index(i)) < 0;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (std::int8_t v : mat_) {
            h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    explicit WeylElement(const RootSystem& rs)
        : rs_(&rs), n_(rs.rank()), mat_(static_cast<std::size_t>(rs.rank() * rs.rank()), 0) {}

    std::size_t at(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

    void check_compatible(const WeylElement& o) const {
        if (!rs_ || !o.rs_ || rs_->type() != o.rs_->type() || rs_ != o.rs_)
            throw std::invalid_argument("Weyl elements from different root systems");
    }

    const RootSystem* rs_ = nullptr;
    int n_ = 0;
    std::vector<std::int8_t> mat_;

    friend class WeylGroup;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

}  // namespace schub
