#pragma once

// Enumerated Weyl groups and their parabolic/coset combinatorics.  A
// WeylGroup may be the full group of a root system or the standard parabolic
// subgroup generated by any subset of the simple reflections (for levi
// subgroups and fiber computations); for standard parabolics the subgroup
// Coxeter length agrees with the ambient one, so BFS depth is the length in
// both senses.  Elements are addressed by dense indices in BFS order, which
// is graded by length and deterministic.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schub/weyl_element.hpp"

namespace schub {

// Partition of the simple roots into the levi set of a standard parabolic P
// and its complement (the simple roots "associated" to P: exactly those
// inverted by some minimal coset representative).  0-indexed.
struct ParabolicData {
    std::vector<int> levi;
    std::vector<int> assoc;

    static ParabolicData from_assoc(const RootSystem& rs, std::vector<int> assoc) {
        std::sort(assoc.begin(), assoc.end());
        ParabolicData pd;
        pd.assoc = assoc;
        for (int i = 0; i < rs.rank(); ++i)
            if (!std::binary_search(assoc.begin(), assoc.end(), i)) pd.levi.push_back(i);
        pd.check(rs);
        return pd;
    }

    static ParabolicData from_levi(const RootSystem& rs, std::vector<int> levi) {
        std::sort(levi.begin(), levi.end());
        ParabolicData pd;
        pd.levi = levi;
        for (int i = 0; i < rs.rank(); ++i)
            if (!std::binary_search(levi.begin(), levi.end(), i)) pd.assoc.push_back(i);
        pd.check(rs);
        return pd;
    }

    static ParabolicData full_flag(const RootSystem& rs) { return from_levi(rs, {}); }

    void check(const RootSystem& rs) const {
        std::vector<int> all = levi;
        all.insert(all.end(), assoc.begin(), assoc.end());
        std::sort(all.begin(), all.end());
        for (int i = 0; i < rs.rank(); ++i)
            if (i >= static_cast<int>(all.size()) || all[static_cast<std::size_t>(i)] != i)
                throw std::invalid_argument("levi/assoc do not partition the simple roots");
        if (static_cast<int>(all.size()) != rs.rank())
            throw std::invalid_argument("levi/assoc do not partition the simple roots");
        if (assoc.empty())
            throw std::invalid_argument("parabolic with empty associated set (P = G) is not a flag variety");
    }
};

class WeylGroup {
  public:
    static constexpr std::uint64_t kDefaultMaxElements = 1000000;

    // Full Weyl group of rs.
    explicit WeylGroup(const RootSystem& rs, std::uint64_t max_elements = kDefaultMaxElements)
        : WeylGroup(rs, all_simples(rs), max_elements, /*full=*/true) {}

    // Standard parabolic subgroup generated by { s_i : i in gens }.
    WeylGroup(const RootSystem& rs, std::vector<int> gens, std::uint64_t max_elements = kDefaultMaxElements,
              bool full = false)
        : rs_(&rs), gens_(std::move(gens)) {
        std::sort(gens_.begin(), gens_.end());
        for (int g : gens_)
            if (g < 0 || g >= rs.rank()) throw std::invalid_argument("generator index out of range");
        if (full && weyl_order(rs.type()) > max_elements)
            throw std::invalid_argument("Weyl group of " + rs.type().name() + " has " +
                                        std::to_string(weyl_order(rs.type())) +
                                        " elements, beyond the enumeration bound " + std::to_string(max_elements));
        enumerate(max_elements);
    }

    const RootSystem& system() const { return *rs_; }
    const std::vector<int>& generators() const { return gens_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const WeylElement& element(int e) const { return elems_.at(static_cast<std::size_t>(e)); }
    int length(int e) const { return len_.at(static_cast<std::size_t>(e)); }

    int index_of(const WeylElement& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw std::invalid_argument("element does not belong to this (sub)group");
        return it->second;
    }
    bool contains(const WeylElement& w) const { return index_.find(w) != index_.end(); }

    int identity_index() const { return 0; }

    // Index of element * s_i (i must be one of the generators).
    int right_multiply(int e, int i) const {
        return rmult_.at(static_cast<std::size_t>(e)).at(gen_pos(i));
    }

    bool right_descent(int e, int i) const { return length(right_multiply(e, i)) < length(e); }

    int multiply_indices(int a, int b) const { return index_of(multiply(element(a), element(b))); }
    int inverse_index(int a) const { return index_of(element(a).inverse()); }

    // A reduced word (BFS tree word), as generator indices into the simple roots.
    std::vector<int> reduced_word(int e) const {
        std::vector<int> word;
        for (int cur = e; cur != 0; cur = parent_[static_cast<std::size_t>(cur)])
            word.push_back(parent_letter_[static_cast<std::size_t>(cur)]);
        std::reverse(word.begin(), word.end());
        return word;
    }

    // A second reduced word, stripping the largest right descent first;
    // differs from the BFS word for most elements.
    std::vector<int> reduced_word_alt(int e) const {
        std::vector<int> word;
        int cur = e;
        while (cur != 0) {
            int pick = -1;
            for (int i : gens_)
                if (right_descent(cur, i)) pick = i;
            if (pick < 0) throw std::logic_error("non-identity element without right descent");
            word.push_back(pick);
            cur = right_multiply(cur, pick);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    int from_word(const std::vector<int>& word) const {
        int cur = 0;
        for (int i : word) cur = right_multiply(cur, i);
        return cur;
    }

    // Minimal representative of e * W_J for J a subset of the generators:
    // strip right descents lying in J until none remain.
    int min_coset_rep(int e, const std::vector<int>& J) const {
        int cur = e;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i : J)
                if (right_descent(cur, i)) {
                    cur = right_multiply(cur, i);
                    moved = true;
                }
        }
        return cur;
    }

    bool is_min_rep(int e, const std::vector<int>& J) const {
        for (int i : J)
            if (right_descent(e, i)) return false;
        return true;
    }

    // All minimal coset representatives for W / W_levi, graded by length.
    std::vector<int> min_reps(const std::vector<int>& levi) const {
        std::vector<int> out;
        for (int e = 0; e < size(); ++e)
            if (is_min_rep(e, levi)) out.push_back(e);
        return out;  // BFS order is already graded by length
    }

    // Projection to the quotient by the maximal parabolic at alpha: the
    // minimal representative of e * W_{all generators but alpha}.
    int project_to_simple(int e, int alpha) const {
        std::vector<int> J;
        for (int i : gens_)
            if (i != alpha) J.push_back(i);
        return min_coset_rep(e, J);
    }

    // w = w' * w'' with w' minimal in w W_J and w'' in W_J; lengths add.
    std::pair<int, int> parabolic_decompose(int e, const std::vector<int>& J) const {
        int wp = min_coset_rep(e, J);
        int wpp = index_of(multiply(element(wp).inverse(), element(e)));
        if (length(wp) + length(wpp) != length(e))
            throw std::logic_error("parabolic decomposition lengths do not add");
        if (min_coset_rep(wpp, J) != 0)
            throw std::logic_error("parabolic decomposition second factor not in W_J");
        return {wp, wpp};
    }

    // Longest element of the subgroup generated by J (subset of generators):
    // the unique element with no ascent inside J.
    int longest_in(const std::vector<int>& J) const {
        int cur = 0;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i : J)
                if (!right_descent(cur, i)) {
                    cur = right_multiply(cur, i);
                    moved = true;
                }
        }
        return cur;
    }

    int longest() const { return longest_in(gens_); }

    // Duality on minimal representatives: w |-> w0 * w * w0^P, an involution
    // on W^P with complementary length; pairs Poincare-dual classes.
    int dual(int e, const ParabolicData& pd) const {
        int w0 = longest();
        int w0p = longest_in(pd.levi);
        return index_of(multiply(multiply(element(w0), element(e)), element(w0p)));
    }

    // Bruhat order via the subword property, on right descents:
    // with i a right descent of w,  u <= w  iff
    //   (us_i <= ws_i  if i is a descent of u)   else   (u <= ws_i).
    bool bruhat_leq(int u, int w) const {
        if (length(u) > length(w)) return false;
        if (u == w) return true;
        if (length(w) == 0) return u == 0;
        std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(size()) +
                            static_cast<std::uint64_t>(w);
        auto it = bruhat_memo_.find(key);
        if (it != bruhat_memo_.end()) return it->second;
        int i = -1;
        for (int g : gens_)
            if (right_descent(w, g)) { i = g; break; }
        int wsi = right_multiply(w, i);
        bool res = right_descent(u, i) ? bruhat_leq(right_multiply(u, i), wsi) : bruhat_leq(u, wsi);
        bruhat_memo_.emplace(key, res);
        return res;
    }

    // Inversions of element e among the ambient positive roots.
    const std::vector<int>& inversion_set(int e) const {
        auto& slot = inv_cache_[static_cast<std::size_t>(e)];
        if (!slot.computed) {
            slot.inv = element(e).inversions();
            slot.computed = true;
        }
        return slot.inv;
    }

  private:
    static std::vector<int> all_simples(const RootSystem& rs) {
        std::vector<int> g(static_cast<std::size_t>(rs.rank()));
        for (int i = 0; i < rs.rank(); ++i) g[static_cast<std::size_t>(i)] = i;
        return g;
    }

    std::size_t gen_pos(int i) const {
        auto it = std::lower_bound(gens_.begin(), gens_.end(), i);
        if (it == gens_.end() || *it != i) throw std::invalid_argument("not a generator of this subgroup");
        return static_cast<std::size_t>(it - gens_.begin());
    }

    void enumerate(std::uint64_t max_elements) {
        WeylElement id = WeylElement::identity(*rs_);
        elems_.push_back(id);
        index_.emplace(id, 0);
        len_.push_back(0);
        parent_.push_back(0);
        parent_letter_.push_back(-1);

        std::vector<WeylElement> gen_elems;
        for (int g : gens_) gen_elems.push_back(WeylElement::simple(*rs_, g));

        for (std::size_t head = 0; head < elems_.size(); ++head) {
            rmult_.emplace_back(gens_.size(), -1);
            for (std::size_t gp = 0; gp < gens_.size(); ++gp) {
                WeylElement img = multiply(elems_[head], gen_elems[gp]);
                auto it = index_.find(img);
                int idx;
                if (it != index_.end()) {
                    idx = it->second;
                } else {
                    idx = static_cast<int>(elems_.size());
                    if (static_cast<std::uint64_t>(idx) >= max_elements)
                        throw std::invalid_argument("subgroup enumeration exceeds the bound " +
                                                    std::to_string(max_elements));
                    elems_.push_back(img);
                    index_.emplace(img, idx);
                    len_.push_back(len_[head] + 1);  // BFS depth = Coxeter length
                    parent_.push_back(static_cast<int>(head));
                    parent_letter_.push_back(gens_[gp]);
                }
                rmult_[head][gp] = idx;
            }
        }
        inv_cache_.resize(elems_.size());
    }

    struct InvSlot {
        bool computed = false;
        std::vector<int> inv;
    };

    const RootSystem* rs_;
    std::vector<int> gens_;
    std::vector<WeylElement> elems_;
    std::unordered_map<WeylElement, int, WeylElementHash> index_;
    std::vector<int> len_;
    std::vector<int> parent_;
    std::vector<int> parent_letter_;
    std::vector<std::vector<int>> rmult_;
    mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;
    mutable std::vector<InvSlot> inv_cache_;
};

}  // namespace schub
