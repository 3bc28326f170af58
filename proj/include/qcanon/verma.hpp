#pragma once

// Zero-testing of mixed elements of U_q(g) through their action on a generic
// Verma module: the highest-weight vector v satisfies E_i v = 0 and
// K_i v = z_i v with the z_i fresh indeterminates adjoined to the scalars.

#include <algorithm>
#include <map>

#include "qcanon/uq_full.hpp"

namespace qcanon {

// Laurent polynomial in the Cartan indeterminates z_i with RatFunc coefficients
class VermaScalar {
public:
    VermaScalar() = default;
    explicit VermaScalar(const RatFunc& c) {
        if (!c.is_zero()) t_[Coords{}] = c;
    }
    static VermaScalar monomial(Coords zexp, const RatFunc& c) {
        VermaScalar s;
        if (!c.is_zero()) s.t_[std::move(zexp)] = c;
        return s;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Coords, RatFunc>& terms() const { return t_; }

    void add_term(const Coords& e, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    VermaScalar operator+(const VermaScalar& o) const {
        VermaScalar r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    VermaScalar operator*(const VermaScalar& o) const {
        VermaScalar r;
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) {
                Coords e = e1;
                if (e.size() < e2.size()) e.resize(e2.size(), 0);
                for (size_t k = 0; k < e2.size(); ++k) e[k] += e2[k];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    VermaScalar operator*(const RatFunc& f) const {
        VermaScalar r;
        if (f.is_zero()) return r;
        for (auto& [e, c] : t_) r.t_[e] = c * f;
        return r;
    }
    VermaScalar& operator+=(const VermaScalar& o) { *this = *this + o; return *this; }

private:
    std::map<Coords, RatFunc> t_;
};

// a module vector: finite combination of word vectors w * v
using VermaVector = std::map<FWord, VermaScalar>;

class GenericVerma {
public:
    GenericVerma(const DynkinDiagram& d, UqMinusContext& minus) : d_(d), minus_(minus) {}

    // action of one normalized term on a word vector w * v
    VermaVector apply_term(const TriTerm& t, const FWord& w) const {
        static const RatFunc qmq = RatFunc::q() - RatFunc::q(-1);
        VermaVector vec;
        vec[w] = VermaScalar(RatFunc(1));
        // E letters act first (rightmost first)
        for (auto it = t.eword.rbegin(); it != t.eword.rend(); ++it) {
            int i = *it;
            VermaVector next;
            for (auto& [u, s] : vec) {
                Coords suffix(d_.rank(), 0);
                std::vector<int> pairing_after(u.size());
                for (int p = static_cast<int>(u.size()) - 1; p >= 0; --p) {
                    pairing_after[p] = d_.pairing(i, suffix);
                    ++suffix[u[p]];
                }
                for (size_t p = 0; p < u.size(); ++p) {
                    if (u[p] != i) continue;
                    FWord del;
                    del.insert(del.end(), u.begin(), u.begin() + p);
                    del.insert(del.end(), u.begin() + p + 1, u.end());
                    // (q^{-(alpha_i, nu)} z_i - q^{(alpha_i, nu)} z_i^{-1})/(q - q^{-1})
                    Coords zp(d_.rank(), 0), zm(d_.rank(), 0);
                    zp[i] = 1;
                    zm[i] = -1;
                    VermaScalar f;
                    f.add_term(zp, RatFunc::q(-pairing_after[p]) / qmq);
                    f.add_term(zm, -(RatFunc::q(pairing_after[p]) / qmq));
                    VermaScalar contrib = s * f;
                    auto [jt, ins] = next.emplace(del, contrib);
                    if (!ins) jt->second += contrib;
                }
            }
            vec = std::move(next);
        }
        // K^k scales: K^k (u v) = q^{-(k, wt u)} z^k (u v)
        bool kzero = std::all_of(t.kvec.begin(), t.kvec.end(), [](int c) { return c == 0; });
        if (!kzero) {
            VermaVector next;
            for (auto& [u, s] : vec) {
                Coords wt = word_weight(d_, u);
                int pr = 0;
                for (int a = 0; a < d_.rank(); ++a)
                    for (int b = 0; b < d_.rank(); ++b) pr += t.kvec[a] * d_.cartan(a, b) * wt[b];
                next[u] = s * VermaScalar::monomial(t.kvec, RatFunc::q(-pr));
            }
            vec = std::move(next);
        }
        // F word prepends
        if (!t.fword.empty()) {
            VermaVector next;
            for (auto& [u, s] : vec) {
                FWord nw = t.fword;
                nw.insert(nw.end(), u.begin(), u.end());
                auto [jt, ins] = next.emplace(nw, s);
                if (!ins) jt->second += s;
            }
            vec = std::move(next);
        }
        for (auto& [u, s] : vec) s = s * t.coeff;
        return vec;
    }

    VermaVector apply(const UqElement& x, const FWord& w) const {
        VermaVector out;
        for (auto& [key, c] : x.terms()) {
            TriTerm t{std::get<0>(key), std::get<1>(key), std::get<2>(key), c};
            for (auto& [u, s] : apply_term(t, w)) {
                auto [it, ins] = out.emplace(u, s);
                if (!ins) it->second += s;
            }
        }
        return out;
    }

    // a module vector is zero iff its iterated-e' coordinates vanish in every
    // weight component (the vectors u*v with u in a word basis span)
    bool vector_is_zero(const VermaVector& vec) const {
        std::map<Coords, std::vector<const std::pair<const FWord, VermaScalar>*>> by_wt;
        for (auto& entry : vec) {
            if (entry.second.is_zero()) continue;
            by_wt[word_weight(d_, entry.first)].push_back(&entry);
        }
        for (auto& [nu, entries] : by_wt) {
            size_t nwords = minus_.words_of_weight(nu).size();
            for (size_t k = 0; k < nwords; ++k) {
                VermaScalar acc;
                for (auto* e : entries) {
                    const QVector& col = minus_.phi_of_word(e->first);
                    if (!col[k].is_zero()) acc += e->second * col[k];
                }
                if (!acc.is_zero()) return false;
            }
        }
        return true;
    }

    // true iff x annihilates every test vector u*v with u running over word
    // bases of heights 0..depth; sound refutation, completeness within the
    // tested degree
    bool annihilates(const UqElement& x, int depth) const {
        for (int h = 0; h <= depth; ++h)
            for (auto& nu : contents_of_height(h))
                for (auto& u : minus_.word_basis(nu).words)
                    if (!vector_is_zero(apply(x, u))) return false;
        return true;
    }

    std::vector<Coords> contents_of_height(int h) const {
        std::vector<Coords> out;
        Coords cur(d_.rank(), 0);
        rec_contents(h, 0, cur, out);
        return out;
    }

private:
    void rec_contents(int left, int idx, Coords& cur, std::vector<Coords>& out) const {
        if (idx == d_.rank()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[idx] = c;
            rec_contents(left - c, idx + 1, cur, out);
        }
        cur[idx] = 0;
    }

    DynkinDiagram d_;
    UqMinusContext& minus_;
};

// True iff x acts as zero on the generic Verma module, tested against word
// bases up to the E-degree of x.  Sound refutation; completeness within the
// tested degree is an imported assumption validated at rank 2.
inline bool equals_zero_generic_verma(const UqFullContext& full, UqMinusContext& minus,
                                      const UqElement& x) {
    int max_e = 0;
    for (auto& [key, c] : x.terms())
        max_e = std::max(max_e, static_cast<int>(std::get<2>(key).size()));
    GenericVerma verma(full.diagram(), minus);
    return verma.annihilates(x, max_e);
}

}  // namespace qcanon
