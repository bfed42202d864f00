#pragma once

// The two-parameter deformation layer on top of the cup-product engine.
//
// Everything here is a degree computation on "exponent profiles": for a
// class w and a simple root alpha, the multiset of multiplicities
// n_{alpha,beta} over the inversions beta of w (entries >= 1 only).  The
// deformation monomial F_w(t,s) is exactly this data: its t_alpha-degree at
// s = 1 is the multiset sum, and its t_alpha-degree in the s -> 0 limit is
// the multiset size, which equals the length of the projection w_alpha of w
// to the quotient by the maximal parabolic at alpha.
//
// The deformed products keep a cup-product structure constant c_{u,v}^w iff
// the relevant degrees are additive:
//   bk    (Belkale-Kumar)   : s=1 degrees additive at every associated alpha
//   star0                   : s->0 degrees additive at every associated alpha
//   mixed (subset A)        : s->0 additive on A, s=1 additive off A
// No numeric s is ever evaluated; profiles are the canonical representation.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "schub/flag.hpp"

namespace schub {

// Multiset { n_{alpha,beta} : beta in inversions(e), n_{alpha,beta} >= 1 },
// sorted ascending.  Valid for any group element (not only minimal reps).
inline std::vector<int> inversion_multiplicities(const WeylGroup& W, const RootSystem& rs, int e, int alpha) {
    std::vector<int> out;
    for (int b : W.inversion_set(e)) {
        int n = rs.root(b).coords[alpha];
        if (n >= 1) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exponent profile of a class: one multiset per associated simple root.
struct ExponentProfile {
    std::vector<int> assoc;                 // the associated simple roots, ascending
    std::vector<std::vector<int>> entries;  // entries[a] for assoc[a], sorted ascending

    const std::vector<int>& at(int alpha) const {
        auto it = std::lower_bound(assoc.begin(), assoc.end(), alpha);
        if (it == assoc.end() || *it != alpha)
            throw std::invalid_argument("profile: not an associated simple root");
        return entries[static_cast<std::size_t>(it - assoc.begin())];
    }
};

// The full coefficient of sigma_w in sigma_u *_{t,s} sigma_v: the constant c
// together with the exponent ledger of F_w / (F_u F_v) per associated root.
struct DeformedCoefficient {
    Coeff c = 0;
    std::vector<int> assoc;
    // count_diff[a][k-1] = (# entries equal to k in w's multiset) minus the
    // same count for u minus the same for v, for assoc[a].
    std::vector<std::vector<int>> count_diff;
    std::vector<int> s1_degree_diff;  // per assoc[a]: t-degree of the ratio at s = 1
    std::vector<int> s0_degree_diff;  // per assoc[a]: t-degree of the ratio as s -> 0

    // Filter-count difference (tail sums of count_diff).  Whenever c != 0
    // these are >= 0 for every associated alpha and every k >= 1; that is
    // the divisibility certificate the verify suite checks.
    int filter_diff(std::size_t a, int k) const {
        int total = 0;
        for (std::size_t j = static_cast<std::size_t>(k) - 1; j < count_diff[a].size(); ++j)
            total += count_diff[a][j];
        return total;
    }
};

struct ClassificationRecord {
    std::uint64_t cup_ordered = 0, star0_ordered = 0, bk_ordered = 0;
    std::uint64_t cup_unordered = 0, star0_unordered = 0, bk_unordered = 0;
};

// Per-class degree caches for one flag variety.
class DeformTable {
  public:
    explicit DeformTable(const FlagContext& fc) : fc_(&fc) {
        const RootSystem& rs = fc.system();
        const WeylGroup& W = fc.group();
        const int n = rs.rank();
        multisets_.resize(static_cast<std::size_t>(fc.num_classes()));
        s1_.assign(static_cast<std::size_t>(fc.num_classes()), std::vector<int>(static_cast<std::size_t>(n), 0));
        s0_ = s1_;
        for (int p = 0; p < fc.num_classes(); ++p) {
            auto& per_alpha = multisets_[static_cast<std::size_t>(p)];
            per_alpha.resize(static_cast<std::size_t>(n));
            for (int alpha = 0; alpha < n; ++alpha) {
                auto ms = inversion_multiplicities(W, rs, fc.rep(p), alpha);
                int sum = 0;
                for (int m : ms) sum += m;
                s1_[static_cast<std::size_t>(p)][static_cast<std::size_t>(alpha)] = sum;
                s0_[static_cast<std::size_t>(p)][static_cast<std::size_t>(alpha)] = static_cast<int>(ms.size());
                per_alpha[static_cast<std::size_t>(alpha)] = std::move(ms);
            }
        }
    }

    const FlagContext& context() const { return *fc_; }

    // Sorted multiset of multiplicities for any simple alpha (levi included).
    const std::vector<int>& multiset(int pos, int alpha) const {
        return multisets_.at(static_cast<std::size_t>(pos)).at(static_cast<std::size_t>(alpha));
    }

    // |{beta in inversions : n_{alpha,beta} >= k}| = |w_alpha|_{J_{alpha,k}}.
    int filter_count(int pos, int alpha, int k) const {
        if (k < 1) throw std::invalid_argument("filter_count: k must be >= 1");
        const auto& ms = multiset(pos, alpha);
        return static_cast<int>(ms.end() - std::lower_bound(ms.begin(), ms.end(), k));
    }

    int s1_degree(int pos, int alpha) const {  // t_alpha-degree of F_w(t,1)
        return s1_.at(static_cast<std::size_t>(pos)).at(static_cast<std::size_t>(alpha));
    }
    int s0_degree(int pos, int alpha) const {  // t_alpha-degree of S_w(t); equals l(w_alpha)
        return s0_.at(static_cast<std::size_t>(pos)).at(static_cast<std::size_t>(alpha));
    }

    // Profile restricted to the associated roots (the information content of
    // F_w).  Rejects non-representative input by construction (positions
    // index classes only).
    ExponentProfile f_profile(int pos) const {
        ExponentProfile pr;
        pr.assoc = fc_->parabolic().assoc;
        for (int alpha : pr.assoc) pr.entries.push_back(multiset(pos, alpha));
        return pr;
    }

    // Divisibility certificate: filter counts are superadditive at every
    // associated alpha and every k up to the maximal multiplicity.  Returns
    // the violating (alpha, k) when false.
    struct DivisibilityResult {
        bool ok = true;
        int alpha = -1, k = -1;
        explicit operator bool() const { return ok; }
    };
    DivisibilityResult divisibility_check(int pu, int pv, int pw) const {
        for (int alpha : fc_->parabolic().assoc) {
            int kmax = fc_->system().max_multiplicity(alpha);
            for (int k = 1; k <= kmax; ++k)
                if (filter_count(pu, alpha, k) + filter_count(pv, alpha, k) > filter_count(pw, alpha, k))
                    return {false, alpha, k};
        }
        return {};
    }

    // Survival predicates (degree conditions only; independent of c).
    bool bk_survives(int pu, int pv, int pw) const {
        for (int alpha : fc_->parabolic().assoc)
            if (s1_degree(pw, alpha) != s1_degree(pu, alpha) + s1_degree(pv, alpha)) return false;
        return true;
    }
    bool star0_survives(int pu, int pv, int pw) const {
        for (int alpha : fc_->parabolic().assoc)
            if (s0_degree(pw, alpha) != s0_degree(pu, alpha) + s0_degree(pv, alpha)) return false;
        return true;
    }
    // s->0 condition on the alphas in A (ascending subset of assoc), s=1
    // condition elsewhere.
    bool mixed_survives(int pu, int pv, int pw, const std::vector<int>& A) const {
        for (int alpha : A)
            if (!std::binary_search(fc_->parabolic().assoc.begin(), fc_->parabolic().assoc.end(), alpha))
                throw std::invalid_argument("mixed product: A must be a subset of the associated roots");
        for (int alpha : fc_->parabolic().assoc) {
            bool in_a = std::binary_search(A.begin(), A.end(), alpha);
            int du = in_a ? s0_degree(pu, alpha) : s1_degree(pu, alpha);
            int dv = in_a ? s0_degree(pv, alpha) : s1_degree(pv, alpha);
            int dw = in_a ? s0_degree(pw, alpha) : s1_degree(pw, alpha);
            if (dw != du + dv) return false;
        }
        return true;
    }

    // Full deformed coefficient with exponent ledger.
    DeformedCoefficient star_ts_coefficient(int pu, int pv, int pw) const {
        DeformedCoefficient dc;
        dc.c = fc_->coefficient(pu, pv, pw);
        dc.assoc = fc_->parabolic().assoc;
        for (int alpha : dc.assoc) {
            int kmax = std::max(1, fc_->system().max_multiplicity(alpha));
            std::vector<int> diff(static_cast<std::size_t>(kmax), 0);
            auto add = [&](int pos, int sgn) {
                for (int m : multiset(pos, alpha)) diff[static_cast<std::size_t>(m - 1)] += sgn;
            };
            add(pw, +1);
            add(pu, -1);
            add(pv, -1);
            dc.count_diff.push_back(std::move(diff));
            dc.s1_degree_diff.push_back(s1_degree(pw, alpha) - s1_degree(pu, alpha) - s1_degree(pv, alpha));
            dc.s0_degree_diff.push_back(s0_degree(pw, alpha) - s0_degree(pu, alpha) - s0_degree(pv, alpha));
        }
        return dc;
    }

    Coeff bk_coefficient(int pu, int pv, int pw) const {
        return bk_survives(pu, pv, pw) ? fc_->coefficient(pu, pv, pw) : Coeff(0);
    }
    Coeff star0_coefficient(int pu, int pv, int pw) const {
        return star0_survives(pu, pv, pw) ? fc_->coefficient(pu, pv, pw) : Coeff(0);
    }
    Coeff mixed_coefficient(int pu, int pv, int pw, const std::vector<int>& A) const {
        return mixed_survives(pu, pv, pw, A) ? fc_->coefficient(pu, pv, pw) : Coeff(0);
    }

    // Region-count inequality: when c_{u,v}^w != 0, the projected lengths
    // satisfy l(u_alpha) + l(v_alpha) <= l(w_alpha) for every associated
    // alpha.
    struct RegionResult {
        bool ok = true;
        int alpha = -1;
        explicit operator bool() const { return ok; }
    };
    RegionResult region_count_inequality(int pu, int pv, int pw) const {
        for (int alpha : fc_->parabolic().assoc)
            if (s0_degree(pu, alpha) + s0_degree(pv, alpha) > s0_degree(pw, alpha)) return {false, alpha};
        return {};
    }

    // Classification counts over a full table (rows store pu <= pv).
    // "ordered" counts (u,v,w) and (v,u,w) separately; "unordered" counts
    // each stored row once.
    ClassificationRecord classify(const std::vector<TableRow>& rows) const {
        ClassificationRecord rec;
        for (const TableRow& r : rows) {
            std::uint64_t mult = (r.pu == r.pv) ? 1 : 2;
            rec.cup_unordered += 1;
            rec.cup_ordered += mult;
            if (star0_survives(r.pu, r.pv, r.pw)) {
                rec.star0_unordered += 1;
                rec.star0_ordered += mult;
            }
            if (bk_survives(r.pu, r.pv, r.pw)) {
                rec.bk_unordered += 1;
                rec.bk_ordered += mult;
            }
        }
        return rec;
    }

  private:
    const FlagContext* fc_;
    std::vector<std::vector<std::vector<int>>> multisets_;  // [pos][alpha] -> sorted multiset
    std::vector<std::vector<int>> s1_, s0_;                 // [pos][alpha]
};

// (u,v,w) is Q-factoring if the parabolic decompositions u', v', w' at Q cut
// out a finite nonempty generic triple intersection in G/Q; operationally:
// lengths fill dim G/Q and the triple product coefficient is nonzero.
// gp is the G/P context, gq the G/Q context over the same ambient system with
// q_levi containing p_levi strictly.  Positions index G/P classes.  The
// definition presupposes c_{u,v}^{w^vee} != 0; violations are rejected.
inline bool is_q_factoring(const FlagContext& gp, const FlagContext& gq, int pu, int pv, int pw) {
    if (&gp.system() != &gq.system())
        throw std::invalid_argument("is_q_factoring: contexts over different root systems");
    const auto& pl = gp.parabolic().levi;
    const auto& ql = gq.parabolic().levi;
    if (!std::includes(ql.begin(), ql.end(), pl.begin(), pl.end()) || ql.size() <= pl.size())
        throw std::invalid_argument("is_q_factoring: Q must strictly contain P");
    if (gp.coefficient(pu, pv, gp.dual_pos(pw)) == 0)
        throw std::invalid_argument("is_q_factoring: triple has c_{u,v}^{dual(w)} = 0");
    const WeylGroup& W = gp.group();
    int lsum = 0;
    int prim[3];
    int elems[3] = {gp.rep(pu), gp.rep(pv), gp.rep(pw)};
    for (int j = 0; j < 3; ++j) {
        auto [wp, wpp] = W.parabolic_decompose(elems[j], ql);
        prim[j] = wp;
        lsum += W.length(wp);
        (void)wpp;
    }
    if (lsum != gq.dim()) return false;
    int pwq = gq.pos_of(prim[2]);
    return gq.coefficient(gq.pos_of(prim[0]), gq.pos_of(prim[1]), gq.dual_pos(pwq)) != 0;
}

// Factorization of the star0 constants through G/P -> G/Q: verifies
//   a_{u,v}^w  =  c_{u',v'}^{w'}(G/Q) * c_{u'',v''}^{w''}(fiber),
// where the fiber is the flag variety of the Levi of Q with parabolic Levi
// set p_levi.  Precondition: star0_coefficient(u,v,w) != 0.
inline bool richmond_factorization_check(const DeformTable& dt, const FlagContext& gq, const FlagContext& fiber,
                                         int pu, int pv, int pw) {
    const FlagContext& gp = dt.context();
    Coeff a = dt.star0_coefficient(pu, pv, pw);
    if (a == 0) throw std::invalid_argument("richmond_factorization_check: star0 coefficient is zero");
    const auto& ql = gq.parabolic().levi;
    const WeylGroup& W = gp.group();
    auto [up, upp] = W.parabolic_decompose(gp.rep(pu), ql);
    auto [vp, vpp] = W.parabolic_decompose(gp.rep(pv), ql);
    auto [wp, wpp] = W.parabolic_decompose(gp.rep(pw), ql);
    Coeff c1 = gq.coefficient(gq.pos_of(up), gq.pos_of(vp), gq.pos_of(wp));
    const WeylGroup& Wf = fiber.group();
    Coeff c2 = fiber.coefficient(fiber.pos_of(Wf.index_of(W.element(upp))),
                                 fiber.pos_of(Wf.index_of(W.element(vpp))),
                                 fiber.pos_of(Wf.index_of(W.element(wpp))));
    return a == c1 * c2;
}

}  // namespace schub
