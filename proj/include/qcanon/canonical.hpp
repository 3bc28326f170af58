#pragma once

// The bar involution in PBW coordinates, unit triangularity, and the
// inductive construction of the canonical basis.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcanon/pbw.hpp"

namespace qcanon {

// The partial order on Lusztig data of equal weight: a comes before b when a
// carries the bigger entry at the first difference scanned from the left AND
// at the first difference scanned from the right.  Pure divided powers are the
// unique maxima of their weight; data supported on simple roots are minimal.
inline bool prec(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return false;
    size_t l = 0;
    while (a[l] == b[l]) ++l;
    if (a[l] < b[l]) return false;
    size_t r = a.size() - 1;
    while (a[r] == b[r]) --r;
    return a[r] > b[r];
}

struct CanonicalElement {
    std::vector<int> a;                         // the indexing Lusztig data
    std::map<std::vector<int>, RatFunc> coords;  // PBW coordinates, Laurent
    UMinusElement element;
};

struct WordIndependenceReport {
    bool equal_sets = true;
    bool matching_is_transport = true;
    std::string detail;
    bool pass() const { return equal_sets && matching_is_transport; }
};

class CanonicalContext {
public:
    explicit CanonicalContext(PbwContext& pbw) : pbw_(pbw) {}

    PbwContext& pbw() { return pbw_; }
    UqMinusContext& minus() { return pbw_.minus(); }

    // coordinates of bar(F^a) in B_w; asserts unit triangularity and
    // Laurent-ness of every coefficient
    std::map<std::vector<int>, RatFunc> bar_in_pbw(const LusztigData& d) {
        auto coords = pbw_.pbw_expand(pbw_.pbw_monomial(d).bar(), d.word);
        auto self = coords.find(d.a);
        if (self == coords.end() || !(self->second == RatFunc(1)))
            throw std::logic_error("bar image is not unit-triangular (diagonal)");
        for (auto& [a, c] : coords) {
            if (!c.is_laurent())
                throw std::logic_error("bar image has a non-Laurent coefficient");
            if (a != d.a && !prec(a, d.a))
                throw std::logic_error("bar image has support not below the data");
        }
        return coords;
    }

    // all canonical elements of one weight, indexed by Lusztig data for w
    const std::vector<CanonicalElement>& canonical_basis(const ReducedWord& w,
                                                         const Coords& nu) {
        auto key = std::make_pair(w.letters(), nu);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto order = pbw_.data_of_weight(w, nu);
        // standard lex descending is a linear extension of the order: smaller
        // elements carry bigger entries at the first difference
        std::sort(order.begin(), order.end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) { return x > y; });
        auto basis = build(w, nu, order);
        return cache_.emplace(key, std::move(basis)).first->second;
    }

    // same construction along a caller-chosen linear extension (used to verify
    // that the output does not depend on the extension)
    std::vector<CanonicalElement> canonical_basis_custom(
        const ReducedWord& w, const Coords& nu,
        const std::vector<std::vector<int>>& order) {
        for (size_t x = 0; x < order.size(); ++x)
            for (size_t y = x + 1; y < order.size(); ++y)
                if (prec(order[y], order[x]))
                    throw std::domain_error("order is not a linear extension");
        return build(w, nu, order);
    }

    // coordinates of homogeneous x over the canonical basis of its weight
    std::map<std::vector<int>, RatFunc> expand_in_canonical(const UMinusElement& x,
                                                            const ReducedWord& w) {
        Coords nu(minus().diagram().rank(), 0);
        if (!x.homogeneous(minus().diagram(), &nu))
            throw std::domain_error("expand_in_canonical requires a homogeneous element");
        const auto& basis = canonical_basis(w, nu);
        std::map<std::vector<int>, const CanonicalElement*> by_data;
        for (auto& b : basis) by_data[b.a] = &b;
        auto rho = pbw_.pbw_expand(x, w);
        std::map<std::vector<int>, RatFunc> out;
        // lex-ascending residual entries are the order-greatest remaining data
        for (auto it = rho.begin(); it != rho.end(); ++it) {
            if (it->second.is_zero()) continue;
            RatFunc c = it->second;
            out[it->first] = c;
            for (auto& [a2, c2] : by_data.at(it->first)->coords) {
                auto [jt, ins] = rho.emplace(a2, -(c * c2));
                if (!ins) jt->second -= c * c2;
            }
        }
        for (auto& [a, c] : rho)
            if (!c.is_zero()) throw std::logic_error("canonical expansion left a residual");
        return out;
    }

    WordIndependenceReport verify_word_independence(const ReducedWord& w1,
                                                    const ReducedWord& w2,
                                                    const Coords& nu) {
        WordIndependenceReport rep;
        const auto& b1 = canonical_basis(w1, nu);
        const auto& b2 = canonical_basis(w2, nu);
        std::map<std::vector<int>, const CanonicalElement*> by_data2;
        for (auto& b : b2) by_data2[b.a] = &b;
        for (auto& b : b1) {
            LusztigData moved = transport(LusztigData(w1, b.a), w2);
            auto it = by_data2.find(moved.a);
            if (it == by_data2.end()) {
                rep.matching_is_transport = false;
                rep.detail += "transport image missing; ";
                continue;
            }
            if (!minus().is_zero(b.element - it->second->element)) {
                rep.equal_sets = false;
                rep.detail += "elements differ at transported data; ";
            }
        }
        return rep;
    }

private:
    std::vector<CanonicalElement> build(const ReducedWord& w, const Coords& nu,
                                        const std::vector<std::vector<int>>& order) {
        minus().check_height(nu);
        std::map<std::vector<int>, CanonicalElement> built;
        for (auto& a : order) {
            auto rho = bar_in_pbw(LusztigData(w, a));
            rho[a] -= RatFunc(1);
            CanonicalElement el;
            el.a = a;
            el.coords[a] = RatFunc(1);
            // eliminate the residual against already-built elements, from the
            // order-top down (= lex ascending); corrections only move support
            // further down, i.e. to lex-greater keys
            for (auto it = rho.begin(); it != rho.end(); ++it) {
                if (it->second.is_zero()) continue;
                const std::vector<int>& a2 = it->first;
                RatFunc p = it->second;
                if (!p.is_laurent())
                    throw std::logic_error("correction coefficient is not Laurent");
                LaurentPoly pl = p.to_laurent();
                if (!(pl.bar() == LaurentPoly() - pl))
                    throw std::logic_error("correction coefficient is not bar-antisymmetric");
                // c = q*f with f built from the positive part of p satisfies
                // c - bar(c) = p and c in q Z[q]
                LaurentPoly c = split_antisymmetric(pl).shifted(1);
                auto bit = built.find(a2);
                if (bit == built.end())
                    throw std::logic_error("correction hits an unbuilt element");
                const CanonicalElement& prev = bit->second;
                for (auto& [a3, c3] : prev.coords) {
                    RatFunc contrib = RatFunc(c) * c3;
                    auto [jt, ins] = el.coords.emplace(a3, contrib);
                    if (!ins) jt->second += contrib;
                    // the same correction removes p * prev from the residual
                    RatFunc drop = p * c3;
                    auto [rt, rins] = rho.emplace(a3, -drop);
                    if (!rins) rt->second -= drop;
                }
                // restore the invariant rho[a2] = 0 exactly
                rho[a2] = RatFunc(0);
            }
            for (auto it = el.coords.begin(); it != el.coords.end();) {
                if (it->second.is_zero()) it = el.coords.erase(it);
                else ++it;
            }
            for (auto& [a2, c] : el.coords)
                el.element += pbw_.pbw_monomial(LusztigData(w, a2)) * c;
            if (!minus().is_zero(el.element.bar() - el.element))
                throw std::logic_error("constructed element is not bar-invariant");
            built.emplace(a, std::move(el));
        }
        std::vector<CanonicalElement> basis;
        basis.reserve(order.size());
        for (auto& a : order) basis.push_back(built.at(a));
        return basis;
    }

    PbwContext& pbw_;
    std::map<std::pair<std::vector<int>, Coords>, std::vector<CanonicalElement>> cache_;
};

}  // namespace qcanon
