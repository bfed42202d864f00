#pragma once

// Root systems in simple-root integer coordinates.  Positive roots are
// generated from the simple roots by closure under the simple reflections;
// no Euclidean realization is ever constructed.  Simple roots are 0-indexed
// throughout the library; the 1-indexed Bourbaki labels appear only at the
// parse/format boundary.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schub/cartan.hpp"

namespace schub {

using Coords = std::vector<int>;

struct Root {
    Coords coords;

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    bool operator==(const Root& o) const { return coords == o.coords; }
};

class RootSystem {
  public:
    explicit RootSystem(const CartanType& ct)
        : ct_(ct), cartan_(cartan_matrix(ct)), sym_(symmetrizer(ct)), rank_(ct.rank) {
        generate();
        build_reflection_table();
    }

    const CartanType& type() const { return ct_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return roots_; }
    int num_positive() const { return static_cast<int>(roots_.size()); }
    const Root& root(int idx) const { return roots_.at(static_cast<std::size_t>(idx)); }

    // Index of a positive root among the stored positives, -1 if the vector
    // is not one of them.
    int root_index(const Coords& c) const {
        auto it = index_.find(c);
        return it == index_.end() ? -1 : it->second;
    }

    int simple_root_index(int i) const { return simple_idx_.at(static_cast<std::size_t>(i)); }

    // s_i applied to arbitrary coordinates: only coordinate i changes.
    Coords simple_reflect(int i, const Coords& c) const {
        Coords r = c;
        long long acc = 0;
        for (int j = 0; j < rank_; ++j) acc += static_cast<long long>(cartan_[i][j]) * c[j];
        r[i] -= static_cast<int>(acc);
        return r;
    }

    // Reflection table on positive roots: s_i(root r) is again positive with
    // index refl_[i][r], except r = alpha_i which is negated (entry -1).
    int reflect_index(int i, int r) const { return refl_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]; }

    // Multiplicity n_{alpha beta}: coefficient of simple alpha in beta.
    int expansion_multiplicity(int alpha, const Root& beta) const {
        if (root_index(beta.coords) < 0)
            throw std::invalid_argument("expansion_multiplicity: not a positive root of " + ct_.name());
        return beta.coords.at(static_cast<std::size_t>(alpha));
    }

    // Upward-closed filter J_{alpha,k} = { beta > 0 : n_{alpha beta} >= k }.
    std::vector<Root> filter_roots(int alpha, int k) const {
        std::vector<Root> out;
        for (const Root& b : roots_)
            if (b.coords[static_cast<std::size_t>(alpha)] >= k) out.push_back(b);
        return out;
    }

    // Largest coefficient of simple alpha across all positive roots.
    int max_multiplicity(int alpha) const {
        int m = 0;
        for (const Root& b : roots_) m = std::max(m, b.coords[static_cast<std::size_t>(alpha)]);
        return m;
    }

    // (beta,beta) with short roots normalized to 2.
    int norm2(const Coords& c) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long long>(c[i]) * c[j] * sym_[i] * cartan_[i][j];
        return static_cast<int>(s);
    }

    // beta^vee in the simple-coroot basis; entries are integers for any root.
    Coords coroot_coords(const Coords& c) const {
        int n2 = norm2(c);
        Coords d(static_cast<std::size_t>(rank_));
        for (int j = 0; j < rank_; ++j) {
            long long num = 2LL * c[j] * sym_[j];
            if (num % n2 != 0)
                throw std::logic_error("coroot coordinates not integral");
            d[static_cast<std::size_t>(j)] = static_cast<int>(num / n2);
        }
        return d;
    }

    // True for coordinate vectors of roots: a root is positive iff all
    // coordinates are >= 0 (mixed signs never occur among roots).
    static bool is_positive_root_vector(const Coords& c) {
        bool nonneg = true, nonpos = true;
        for (int x : c) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (!nonneg && !nonpos)
            throw std::logic_error("mixed-sign vector is not a root");
        return nonneg;
    }

  private:
    void generate() {
        std::map<Coords, int> seen;
        std::vector<Root> acc;
        for (int i = 0; i < rank_; ++i) {
            Coords c(static_cast<std::size_t>(rank_), 0);
            c[static_cast<std::size_t>(i)] = 1;
            seen.emplace(c, static_cast<int>(acc.size()));
            acc.push_back(Root{c});
        }
        // Closure: every positive root of height > 1 is s_i(gamma) for some
        // positive gamma of smaller height, so a fixpoint sweep reaches all.
        for (std::size_t head = 0; head < acc.size(); ++head) {
            Coords cur = acc[head].coords;  // copy: acc may reallocate
            for (int i = 0; i < rank_; ++i) {
                Coords img = simple_reflect(i, cur);
                if (std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; }) && !seen.count(img)) {
                    seen.emplace(img, static_cast<int>(acc.size()));
                    acc.push_back(Root{img});
                }
            }
        }
        if (static_cast<int>(acc.size()) != positive_root_count(ct_))
            throw std::logic_error("positive root closure produced wrong count for " + ct_.name());

        std::sort(acc.begin(), acc.end(), [](const Root& a, const Root& b) {
            int ha = a.height(), hb = b.height();
            if (ha != hb) return ha < hb;
            return a.coords < b.coords;
        });
        roots_ = std::move(acc);
        index_.clear();
        for (int r = 0; r < num_positive(); ++r) index_.emplace(roots_[static_cast<std::size_t>(r)].coords, r);
        simple_idx_.assign(static_cast<std::size_t>(rank_), -1);
        for (int i = 0; i < rank_; ++i) {
            Coords c(static_cast<std::size_t>(rank_), 0);
            c[static_cast<std::size_t>(i)] = 1;
            simple_idx_[static_cast<std::size_t>(i)] = root_index(c);
        }
    }

    void build_reflection_table() {
        refl_.assign(static_cast<std::size_t>(rank_), std::vector<int>(roots_.size(), -1));
        for (int i = 0; i < rank_; ++i)
            for (int r = 0; r < num_positive(); ++r) {
                Coords img = simple_reflect(i, roots_[static_cast<std::size_t>(r)].coords);
                refl_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
                    is_positive_root_vector(img) ? root_index(img) : -1;
            }
    }

    CartanType ct_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> sym_;
    int rank_;
    std::vector<Root> roots_;
    std::map<Coords, int> index_;
    std::vector<int> simple_idx_;
    std::vector<std::vector<int>> refl_;
};

}  // namespace schub
