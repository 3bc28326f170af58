#pragma once

// PBW machinery: root vectors from composed braid automorphisms, PBW monomials
// and Lusztig data, expansion of U_q^- elements in a PBW basis, the
// piecewise-linear bijections between Lusztig data attached to braid moves,
// and the integral-lattice checks.

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcanon/root_system.hpp"
#include "qcanon/uq_full.hpp"
#include "qcanon/uq_minus.hpp"

namespace qcanon {

// exponent vector attached to a full reduced word
struct LusztigData {
    ReducedWord word;
    std::vector<int> a;

    LusztigData(ReducedWord w, std::vector<int> exps)
        : word(std::move(w)), a(std::move(exps)) {
        if (static_cast<int>(a.size()) != word.size())
            throw std::domain_error("exponent vector length mismatch");
        for (int v : a)
            if (v < 0) throw std::domain_error("negative exponent in Lusztig data");
    }

    Coords weight() const {
        auto betas = beta_sequence(word);
        Coords nu(word.diagram().rank(), 0);
        for (size_t k = 0; k < a.size(); ++k)
            for (int c = 0; c < word.diagram().rank(); ++c)
                nu[c] += a[k] * betas[k].coords[c];
        return nu;
    }
};

struct RootVectorTable {
    ReducedWord word;
    std::vector<Root> betas;
    std::vector<UMinusElement> vectors;
};

// two- and three-term exponent bijections attached to a braid move
inline std::vector<int> pl_move(const DynkinDiagram& d, const std::vector<int>& letters,
                                const BraidMove& m, std::vector<int> a) {
    if (!move_legal(d, letters, m)) throw std::domain_error("illegal braid move");
    int k = m.pos;
    if (m.kind == BraidMove::Swap2) {
        std::swap(a[k], a[k + 1]);
        return a;
    }
    int x = a[k], y = a[k + 1], z = a[k + 2];
    a[k] = std::max(y, y + z - x);
    a[k + 1] = std::min(x, z);
    a[k + 2] = std::max(y, y + x - z);
    return a;
}

inline LusztigData pl_bijection(const BraidMove& m, const LusztigData& d) {
    return LusztigData(apply_braid_move(d.word, m),
                       pl_move(d.word.diagram(), d.word.letters(), m, d.a));
}

inline LusztigData transport(const LusztigData& d, const ReducedWord& w2) {
    std::vector<int> a = d.a;
    std::vector<int> cur = d.word.letters();
    for (auto& m : matsumoto_path(d.word, w2)) {
        a = pl_move(d.word.diagram(), cur, m, a);
        cur = apply_move_letters(d.word.diagram(), cur, m);
    }
    return LusztigData(w2, std::move(a));
}

struct LatticeMoveReport {
    bool integral = true;        // every expansion coefficient lies in Z[q]
    bool permutation_ok = true;  // mod-q matrix is the PL-bijection permutation
    std::string detail;
    bool pass() const { return integral && permutation_ok; }
};

class PbwContext {
public:
    PbwContext(UqMinusContext& minus, UqFullContext& full) : minus_(minus), full_(full) {
        if (&minus.diagram() == &full.diagram()) {
            // same object is fine; different objects must agree structurally
        }
    }

    const DynkinDiagram& diagram() const { return minus_.diagram(); }
    UqMinusContext& minus() { return minus_; }

    // F_{beta_k} = T_{i_1} ... T_{i_{k-1}} (F_{i_k}), projected into U_q^-
    const RootVectorTable& root_vectors(const ReducedWord& w) {
        auto it = table_cache_.find(w.letters());
        if (it != table_cache_.end()) return it->second;
        if (!w.is_full())
            throw std::domain_error("root vectors require a full reduced word");
        RootVectorTable t{w, beta_sequence(w), {}};
        const auto& letters = w.letters();
        for (int k = 0; k < w.size(); ++k) {
            UqElement cur = UqElement::generator_F(diagram(), letters[k]);
            for (int p = k - 1; p >= 0; --p) cur = full_.braid_T(letters[p], cur);
            // the composite must already be pure-F (to_uminus throws otherwise)
            UMinusElement v = full_.to_uminus(cur);
            if (t.betas[k].is_simple()) {
                int idx = 0;
                while (t.betas[k].coords[idx] == 0) ++idx;
                UMinusElement gen = UMinusElement::generator(idx);
                if (!minus_.equal(v, gen))
                    throw std::logic_error("simple root vector is not the generator");
            }
            t.vectors.push_back(std::move(v));
        }
        validate_local_recursion(t);
        return table_cache_.emplace(letters, std::move(t)).first->second;
    }

    UMinusElement pbw_monomial(const LusztigData& d) {
        const RootVectorTable& t = root_vectors(d.word);
        UMinusElement out = UMinusElement::one();
        for (size_t k = 0; k < d.a.size(); ++k) {
            int n = d.a[k];
            if (n == 0) continue;
            UMinusElement pw = t.vectors[k];
            for (int r = 1; r < n; ++r) pw = pw * t.vectors[k];
            out = out * pw * (RatFunc(1) / RatFunc(quantum_factorial(n)));
        }
        return out;
    }

    // all exponent vectors a with sum a_k beta_k = nu, lexicographic
    const std::vector<std::vector<int>>& data_of_weight(const ReducedWord& w,
                                                        const Coords& nu) {
        auto key = std::make_pair(w.letters(), nu);
        auto it = data_cache_.find(key);
        if (it != data_cache_.end()) return it->second;
        auto betas = beta_sequence(w);
        std::vector<std::vector<int>> out;
        std::vector<int> cur(w.size(), 0);
        Coords left = nu;
        enumerate(betas, 0, left, cur, out);
        return data_cache_.emplace(key, std::move(out)).first->second;
    }

    // coordinates of homogeneous x in the PBW basis attached to w
    std::map<std::vector<int>, RatFunc> pbw_expand(const UMinusElement& x,
                                                   const ReducedWord& w) {
        Coords nu(diagram().rank(), 0);
        if (!x.homogeneous(diagram(), &nu))
            throw std::domain_error("pbw_expand requires a homogeneous element");
        minus_.check_height(nu);
        const ExpandSystem& sys = expand_system(w, nu);
        auto sol = sys.rr->solve(minus_.phi_vector(x, nu));
        if (!sol) throw std::logic_error("PBW expansion system inconsistent");
        std::map<std::vector<int>, RatFunc> out;
        const auto& datas = data_of_weight(w, nu);
        for (size_t c = 0; c < datas.size(); ++c)
            if (!(*sol)[c].is_zero()) out[datas[c]] = (*sol)[c];
        return out;
    }

    // expands every PBW monomial of B_{move(w)} at weight nu inside B_w and
    // checks integrality plus the mod-q permutation against the PL bijection
    LatticeMoveReport verify_lattice_move(const ReducedWord& w, const BraidMove& m,
                                          const Coords& nu) {
        LatticeMoveReport rep;
        ReducedWord w2 = apply_braid_move(w, m);
        const auto& datas2 = data_of_weight(w2, nu);
        for (auto& a2 : datas2) {
            LusztigData d2(w2, a2);
            auto coords = pbw_expand(pbw_monomial(d2), w);
            // expected image under the inverse move (the move is an involution
            // on letters, applied at the same position)
            std::vector<int> back = pl_move(diagram(), w2.letters(), m, a2);
            for (auto& [a, c] : coords) {
                if (!c.is_laurent() || !c.regular_at_zero()) {
                    rep.integral = false;
                    rep.detail += "non-integral coefficient " + c.to_string() + "; ";
                    continue;
                }
                auto v0 = c.value_at_zero();
                if (a == back) {
                    if (v0 != 1) {
                        rep.permutation_ok = false;
                        rep.detail += "diagonal image not 1 mod q; ";
                    }
                } else if (v0 != 0) {
                    rep.permutation_ok = false;
                    rep.detail += "off-permutation entry nonzero mod q; ";
                }
            }
            if (coords.find(back) == coords.end()) {
                rep.permutation_ok = false;
                rep.detail += "expected image data missing; ";
            }
        }
        return rep;
    }

private:
    struct ExpandSystem {
        std::unique_ptr<RowReduction> rr;
    };

    const ExpandSystem& expand_system(const ReducedWord& w, const Coords& nu) {
        auto key = std::make_pair(w.letters(), nu);
        auto it = expand_cache_.find(key);
        if (it != expand_cache_.end()) return it->second;
        const auto& datas = data_of_weight(w, nu);
        if (static_cast<long long>(datas.size()) != minus_.kostant(nu))
            throw std::logic_error("PBW data count disagrees with Kostant count");
        std::vector<QVector> cols;
        cols.reserve(datas.size());
        for (auto& a : datas)
            cols.push_back(minus_.phi_vector(pbw_monomial(LusztigData(w, a)), nu));
        ExpandSystem sys;
        sys.rr = std::make_unique<RowReduction>(QMatrix::from_columns(cols));
        if (sys.rr->rank() != static_cast<int>(datas.size()))
            throw std::logic_error("PBW monomials of one weight are dependent");
        return expand_cache_.emplace(key, std::move(sys)).first->second;
    }

    // wherever a three-term move is legal, the middle root vector is the
    // q-bracket of the outer ones; checked within the height bound
    void validate_local_recursion(const RootVectorTable& t) {
        const auto& letters = t.word.letters();
        for (int k = 0; k + 2 < t.word.size(); ++k) {
            if (!move_legal(diagram(), letters, BraidMove{k, BraidMove::Braid3})) continue;
            Coords combined = t.betas[k].coords;
            for (int c = 0; c < diagram().rank(); ++c)
                combined[c] += t.betas[k + 2].coords[c];
            if (height(combined) > minus_.height_bound()) continue;
            UMinusElement bracket = t.vectors[k + 2] * t.vectors[k] -
                                    RatFunc::q() * (t.vectors[k] * t.vectors[k + 2]);
            if (!minus_.equal(bracket, t.vectors[k + 1]))
                throw std::logic_error("root vector local recursion failed");
        }
    }

    void enumerate(const std::vector<Root>& betas, size_t k, Coords& left,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (k == betas.size()) {
            if (height(left) == 0) out.push_back(cur);
            return;
        }
        // max multiple of beta_k that fits in what is left
        int maxn = height(left);
        for (int n = 0; n <= maxn; ++n) {
            bool ok = true;
            Coords rem = left;
            for (int c = 0; c < static_cast<int>(rem.size()); ++c) {
                rem[c] -= n * betas[k].coords[c];
                if (rem[c] < 0) ok = false;
            }
            if (!ok) break;
            cur[k] = n;
            Coords saved = left;
            left = rem;
            enumerate(betas, k + 1, left, cur, out);
            left = saved;
        }
        cur[k] = 0;
    }

    UqMinusContext& minus_;
    UqFullContext& full_;
    std::map<std::vector<int>, RootVectorTable> table_cache_;
    std::map<std::pair<std::vector<int>, Coords>, std::vector<std::vector<int>>> data_cache_;
    std::map<std::pair<std::vector<int>, Coords>, ExpandSystem> expand_cache_;
};

}  // namespace qcanon
