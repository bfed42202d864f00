#pragma once

// Structure constants of the cup product on H*(G/P, Z), computed exactly.
//
// Method: localize Schubert classes at torus fixed points (subword formula),
// evaluate every restriction at the point where each simple root is 1, and
// run the upper-triangular solve of the localized product through the Bruhat
// order.  The equivariant structure coefficients are homogeneous polynomials
// with nonnegative integer coefficients in the simple roots, so this scalar
// specialization stays an exact integer computation: every division in the
// solve is exact (asserted), every intermediate coefficient is nonnegative
// (asserted), and the top-degree coefficients l(w) = l(u) + l(v) are the
// ordinary cup-product structure constants.
//
// A FlagContext is either G/P for the full group of a root system, or the
// flag variety of a Levi subgroup (identified by a generator subset) with a
// parabolic inside it; the latter appears as the fiber in the fibration
// G/P -> G/Q used by the factorization checks.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <thread>
#include <vector>

#include "schub/equivariant.hpp"
#include "schub/weyl_group.hpp"

namespace schub {

// 256-bit signed coefficients: diagonal restriction values reach ~4.4e18 on
// rank-6 quotients and intermediate products of three such values ~1e42,
// beyond both int64 and int128.
using Coeff = boost::multiprecision::int256_t;

struct TableRow {
    int pu, pv, pw;  // class positions, pu <= pv
    Coeff c;         // cup-product structure constant (> 0)
};

class FlagContext {
  public:
    // G/P for the full Weyl group of rs.
    FlagContext(const RootSystem& rs, ParabolicData pd) : rs_(&rs), pd_(std::move(pd)), W_(rs) {
        pd_.check(rs);
        init();
    }

    // Flag variety of the subgroup generated by `gens` with Levi subset
    // `levi` of gens (the fiber of G/P -> G/Q has gens = Q's Levi set and
    // levi = P's Levi set).
    FlagContext(const RootSystem& rs, const std::vector<int>& gens, std::vector<int> levi)
        : rs_(&rs), W_(rs, gens) {
        std::sort(levi.begin(), levi.end());
        pd_.levi = levi;
        for (int g : W_.generators())
            if (!std::binary_search(levi.begin(), levi.end(), g)) pd_.assoc.push_back(g);
        for (int l : levi)
            if (!std::binary_search(W_.generators().begin(), W_.generators().end(), l))
                throw std::invalid_argument("levi must be a subset of the generating set");
        if (pd_.assoc.empty())
            throw std::invalid_argument("parabolic with empty associated set (P = G) is not a flag variety");
        init();
    }

    FlagContext(const FlagContext&) = delete;
    FlagContext& operator=(const FlagContext&) = delete;

    const RootSystem& system() const { return *rs_; }
    const WeylGroup& group() const { return W_; }
    const ParabolicData& parabolic() const { return pd_; }

    int num_classes() const { return static_cast<int>(reps_.size()); }
    int dim() const { return dim_; }

    // Class position <-> group element index.
    int rep(int pos) const { return reps_.at(static_cast<std::size_t>(pos)); }
    int pos_of(int group_elem) const {
        int p = pos_.at(static_cast<std::size_t>(group_elem));
        if (p < 0) throw std::invalid_argument("element is not a minimal representative");
        return p;
    }
    bool is_rep(int group_elem) const { return pos_.at(static_cast<std::size_t>(group_elem)) >= 0; }
    int length_of(int pos) const { return W_.length(rep(pos)); }
    int dual_pos(int pos) const { return pos_of(W_.dual(rep(pos), pd_)); }

    // Localized class w at fixed point x, specialized at all-ones, for class
    // positions pw, px.
    const Coeff& restriction(int pw, int px) const {
        return R_.at(static_cast<std::size_t>(px)).at(static_cast<std::size_t>(pw));
    }

    // Cup product sigma_u . sigma_v = sum c * sigma_w: the map pos(w) -> c
    // over nonzero constants (all of degree l(w) = l(u) + l(v)).
    std::map<int, Coeff> product(int pu, int pv) const {
        const int target = length_of(pu) + length_of(pv);
        std::map<int, Coeff> out;
        if (target > dim_) return out;
        std::vector<std::pair<int, Coeff>> support;  // equivariant support so far, ascending
        for (int px = 0; px < num_classes() && length_of(px) <= target; ++px) {
            const std::vector<Coeff>& col = R_[static_cast<std::size_t>(px)];
            const Coeff& ru = col[static_cast<std::size_t>(pu)];
            if (ru == 0) continue;  // support lies above u and above v
            const Coeff& rv = col[static_cast<std::size_t>(pv)];
            if (rv == 0) continue;
            Coeff resid = ru * rv;
            for (const auto& [pw, cw] : support) resid -= cw * col[static_cast<std::size_t>(pw)];
            const Coeff& diag = col[static_cast<std::size_t>(px)];
            Coeff q = resid / diag;
            if (q * diag != resid)
                throw std::logic_error("structure solve: non-exact division at a fixed point");
            if (q < 0) throw std::logic_error("structure solve: negative localized coefficient");
            if (q != 0) {
                support.emplace_back(px, q);
                if (length_of(px) == target) out.emplace(px, q);
            }
        }
        return out;
    }

    // Single structure constant.
    Coeff coefficient(int pu, int pv, int pw) const {
        if (length_of(pw) != length_of(pu) + length_of(pv)) return 0;
        auto prod = product(pu, pv);
        auto it = prod.find(pw);
        return it == prod.end() ? Coeff(0) : it->second;
    }

    // Independent oracle for products with a degree-one class: the classical
    // formula  sigma_{s_i} . sigma_v = sum over positive roots b with
    // l(v s_b) = l(v) + 1 of <omega_i, b^vee> sigma_{v s_b}.  Requires i in
    // the associated set (so that s_i is itself a minimal representative).
    std::map<int, Coeff> chevalley(int i, int pv) const {
        if (!std::binary_search(pd_.assoc.begin(), pd_.assoc.end(), i))
            throw std::invalid_argument("chevalley: the simple root must be an associated one");
        std::map<int, Coeff> out;
        const WeylElement& v = W_.element(rep(pv));
        for (int b = 0; b < rs_->num_positive(); ++b) {
            const Coords& beta = rs_->root(b).coords;
            bool in_group = true;  // restrict to the subsystem of this context
            for (int k = 0; k < rs_->rank(); ++k)
                if (beta[k] != 0 &&
                    !std::binary_search(W_.generators().begin(), W_.generators().end(), k)) {
                    in_group = false;
                    break;
                }
            if (!in_group) continue;
            Coords cov = rs_->coroot_coords(beta);
            int m = cov[i];  // <omega_i, beta^vee>
            if (m == 0) continue;
            int refl = reflection_index(b);
            int vs = W_.index_of(multiply(v, W_.element(refl)));
            if (W_.length(vs) != W_.length(rep(pv)) + 1) continue;
            // the product of pulled-back classes stays in the image span
            if (!is_rep(vs)) throw std::logic_error("chevalley: term escaped the minimal representatives");
            out[pos_of(vs)] += m;
        }
        return out;
    }

    // Reflection s_beta for the positive root with index b, as a group index.
    int reflection_index(int b) const {
        auto it = refl_cache_.find(b);
        if (it != refl_cache_.end()) return it->second;
        const int n = rs_->rank();
        const Coords& beta = rs_->root(b).coords;
        Coords cov = rs_->coroot_coords(beta);
        const auto& cartan = rs_->cartan();
        std::vector<Coords> images(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            // <alpha_j, beta^vee> = sum_k cov[k] * a[k][j]
            int pair = 0;
            for (int k = 0; k < n; ++k) pair += cov[k] * cartan[k][j];
            Coords img(static_cast<std::size_t>(n));
            for (int i2 = 0; i2 < n; ++i2) img[i2] = (i2 == j ? 1 : 0) - pair * beta[i2];
            images[static_cast<std::size_t>(j)] = img;
        }
        int idx = W_.index_of(WeylElement::from_simple_images(*rs_, images));
        refl_cache_.emplace(b, idx);
        return idx;
    }

    // Every product, stored unordered (pu <= pv), rows sorted by (pu,pv,pw).
    // jobs > 1 splits the pair list across threads; output order is
    // independent of the split.
    std::vector<TableRow> full_table(int jobs = 1) const {
        std::vector<std::pair<int, int>> pairs;
        for (int pu = 0; pu < num_classes(); ++pu)
            for (int pv = pu; pv < num_classes(); ++pv)
                if (length_of(pu) + length_of(pv) <= dim_) pairs.emplace_back(pu, pv);
        std::vector<std::vector<TableRow>> slot(pairs.size());
        auto work = [&](int start, int stride) {
            for (std::size_t k = static_cast<std::size_t>(start); k < pairs.size();
                 k += static_cast<std::size_t>(stride)) {
                auto [pu, pv] = pairs[k];
                for (const auto& [pw, c] : product(pu, pv)) slot[k].push_back({pu, pv, pw, c});
            }
        };
        if (jobs <= 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
            for (auto& th : pool) th.join();
        }
        std::vector<TableRow> rows;
        for (auto& s : slot)
            for (auto& r : s) rows.push_back(std::move(r));
        return rows;  // pair-major order == sorted by (pu,pv,pw)
    }

    // Reference implementation: the same triangular solve carried out with
    // full polynomials in the simple roots (no specialization), returning the
    // top-degree constants.  Small cases only; used to cross-check the
    // integer engine.
    std::map<int, long long> product_reference(int pu, int pv) const {
        const int target = length_of(pu) + length_of(pv);
        std::map<int, long long> out;
        if (target > dim_) return out;
        const int n = rs_->rank();
        std::vector<std::pair<int, EquivariantPolynomial>> support;
        for (int px = 0; px < num_classes() && length_of(px) <= target; ++px) {
            int x = rep(px);
            auto col = billey_column(*rs_, W_, x);  // indexed by group element
            const EquivariantPolynomial& ru = col[static_cast<std::size_t>(rep(pu))];
            const EquivariantPolynomial& rv = col[static_cast<std::size_t>(rep(pv))];
            if (ru.is_zero() || rv.is_zero()) continue;
            EquivariantPolynomial resid = ru * rv;
            for (const auto& [pw, cw] : support) {
                EquivariantPolynomial t = cw * col[static_cast<std::size_t>(rep(pw))];
                resid -= t;
            }
            // divide by the diagonal: the product of the inversions of x^{-1}
            EquivariantPolynomial q = resid;
            for (int b : W_.inversion_set(W_.inverse_index(x)))
                q = q.divide_exact(EquivariantPolynomial::linear_form(rs_->root(b).coords));
            if (!q.is_zero()) {
                if (!q.all_coefficients_nonnegative())
                    throw std::logic_error("reference solve: negative equivariant coefficient");
                if (q.degree() != target - length_of(px))
                    throw std::logic_error("reference solve: wrong coefficient degree");
                if (length_of(px) == target) out.emplace(px, q.constant_term());
                support.emplace_back(px, std::move(q));
            }
        }
        return out;
    }

  private:
    void init() {
        reps_ = W_.min_reps(pd_.levi);
        pos_.assign(static_cast<std::size_t>(W_.size()), -1);
        for (std::size_t p = 0; p < reps_.size(); ++p) pos_[static_cast<std::size_t>(reps_[p])] = static_cast<int>(p);
        dim_ = W_.length(reps_.back());
        R_.resize(reps_.size());
        for (std::size_t px = 0; px < reps_.size(); ++px) R_[px] = scalar_column(reps_[px]);
    }

    // All-ones specialization of the localization column at fixed point v:
    // walk a reduced word of v; picking letter t contributes the height of
    // the positive root (s_{i_1}...s_{i_{t-1}})(alpha_{i_t}).
    std::vector<Coeff> scalar_column(int v) const {
        const int n = rs_->rank();
        std::vector<Coeff> F(static_cast<std::size_t>(W_.size()), Coeff(0));
        std::vector<char> touched_flag(static_cast<std::size_t>(W_.size()), 0);
        F[0] = 1;
        touched_flag[0] = 1;
        std::vector<int> touched{0};
        int prefix = 0;
        for (int i : W_.reduced_word(v)) {
            Coords simple(static_cast<std::size_t>(n), 0);
            simple[static_cast<std::size_t>(i)] = 1;
            Coords root = W_.element(prefix).act(simple);
            int h = 0;
            for (int c : root) h += c;
            if (h <= 0) throw std::logic_error("scalar_column: non-positive prefix root height");
            std::size_t live = touched.size();  // letters may be picked once: old states only
            for (std::size_t k = 0; k < live; ++k) {
                int z = touched[k];
                int zs = W_.right_multiply(z, i);
                if (W_.length(zs) > W_.length(z)) {
                    if (!touched_flag[static_cast<std::size_t>(zs)]) {
                        touched_flag[static_cast<std::size_t>(zs)] = 1;
                        touched.push_back(zs);
                    }
                    F[static_cast<std::size_t>(zs)] += h * F[static_cast<std::size_t>(z)];
                }
            }
            prefix = W_.right_multiply(prefix, i);
        }
        std::vector<Coeff> col(reps_.size());
        for (std::size_t p = 0; p < reps_.size(); ++p) col[p] = F[static_cast<std::size_t>(reps_[p])];
        return col;
    }

    const RootSystem* rs_;
    ParabolicData pd_;
    WeylGroup W_;
    std::vector<int> reps_;
    std::vector<int> pos_;
    int dim_ = 0;
    std::vector<std::vector<Coeff>> R_;  // R_[px][pw] = restriction(pw, px)
    mutable std::map<int, int> refl_cache_;
};

}  // namespace schub
