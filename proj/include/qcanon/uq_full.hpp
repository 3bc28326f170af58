#pragma once

// The full algebra U_q(g) in triangular normal form (F-word, K-monomial,
// E-word), straightening multiplication, the braid automorphisms T_i and
// their inverses, block projection, and a zero test through the action on a
// generic Verma module.

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <variant>
#include <vector>

#include "qcanon/uq_minus.hpp"

namespace qcanon {

struct TriTerm {
    FWord fword;
    Coords kvec;  // exponents of the K_i
    FWord eword;  // letters name E-generators
    RatFunc coeff;
};

using TriKey = std::tuple<FWord, Coords, FWord>;

class UqElement {
public:
    UqElement() = default;
    static UqElement one(const DynkinDiagram& d) {
        return term({}, Coords(d.rank(), 0), {}, RatFunc(1));
    }
    static UqElement generator_F(const DynkinDiagram& d, int i) {
        return term({i}, Coords(d.rank(), 0), {}, RatFunc(1));
    }
    static UqElement generator_E(const DynkinDiagram& d, int i) {
        return term({}, Coords(d.rank(), 0), {i}, RatFunc(1));
    }
    static UqElement generator_K(const DynkinDiagram& d, int i, int exp = 1) {
        Coords k(d.rank(), 0);
        k[i] = exp;
        return term({}, k, {}, RatFunc(1));
    }
    static UqElement term(FWord f, Coords k, FWord e, RatFunc c) {
        UqElement x;
        if (!c.is_zero()) x.terms_[{std::move(f), std::move(k), std::move(e)}] = std::move(c);
        return x;
    }

    const std::map<TriKey, RatFunc>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const TriKey& k, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UqElement operator+(const UqElement& o) const {
        UqElement r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    UqElement operator-() const {
        UqElement r;
        for (auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    UqElement operator-(const UqElement& o) const { return *this + (-o); }
    UqElement operator*(const RatFunc& f) const {
        UqElement r;
        if (f.is_zero()) return r;
        for (auto& [k, c] : terms_) r.terms_[k] = c * f;
        return r;
    }
    UqElement& operator+=(const UqElement& o) { *this = *this + o; return *this; }
    UqElement& operator-=(const UqElement& o) { *this = *this - o; return *this; }

    // bar is a Q-algebra automorphism: coefficients barred, K-exponents negated
    UqElement bar() const {
        UqElement r;
        for (auto& [k, c] : terms_) {
            Coords neg = std::get<1>(k);
            for (int& e : neg) e = -e;
            r.terms_[{std::get<0>(k), neg, std::get<2>(k)}] = c.bar();
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        auto word = [](const FWord& w, const char* g) {
            std::string t;
            for (int i : w) t += std::string(g) + std::to_string(i + 1) + " ";
            return t;
        };
        for (auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ") " + word(std::get<0>(k), "F");
            const Coords& kv = std::get<1>(k);
            for (size_t i = 0; i < kv.size(); ++i)
                if (kv[i] != 0)
                    s += "K" + std::to_string(i + 1) + "^" + std::to_string(kv[i]) + " ";
            s += word(std::get<2>(k), "E");
        }
        return s;
    }

private:
    std::map<TriKey, RatFunc> terms_;
};

inline UqElement operator*(const RatFunc& f, const UqElement& x) { return x * f; }

namespace detail {

// Atoms for the straightening worklist.
struct FAtom { int i; };
struct EAtom { int i; };
struct KAtom { Coords k; };
using Atom = std::variant<FAtom, KAtom, EAtom>;

}  // namespace detail

class UqFullContext {
public:
    explicit UqFullContext(const DynkinDiagram& d) : d_(d) {}
    const DynkinDiagram& diagram() const { return d_; }

    // Straightens a product of atoms to triangular normal form by bubbling
    // E letters leftward one F letter at a time and merging K's eagerly.
    UqElement normalize(std::vector<detail::Atom> seq, RatFunc coeff) const {
        UqElement out;
        std::vector<std::pair<std::vector<detail::Atom>, RatFunc>> work;
        work.emplace_back(std::move(seq), std::move(coeff));
        static const RatFunc qmq = RatFunc::q() - RatFunc::q(-1);
        while (!work.empty()) {
            auto [s, c] = std::move(work.back());
            work.pop_back();
            bool rewritten = false;
            for (size_t p = 0; p + 1 < s.size() && !rewritten; ++p) {
                auto& a = s[p];
                auto& b = s[p + 1];
                if (auto* ka = std::get_if<detail::KAtom>(&a)) {
                    if (auto* fb = std::get_if<detail::FAtom>(&b)) {
                        // K^k F_j = q^{-(k, alpha_j)} F_j K^k
                        int pr = d_.pairing(fb->i, ka->k);
                        c *= RatFunc::q(-pr);
                        std::swap(a, b);
                        work.emplace_back(std::move(s), std::move(c));
                        rewritten = true;
                    } else if (auto* kb = std::get_if<detail::KAtom>(&b)) {
                        for (size_t t = 0; t < ka->k.size(); ++t) ka->k[t] += kb->k[t];
                        s.erase(s.begin() + p + 1);
                        work.emplace_back(std::move(s), std::move(c));
                        rewritten = true;
                    }
                } else if (auto* ea = std::get_if<detail::EAtom>(&a)) {
                    if (auto* fb = std::get_if<detail::FAtom>(&b)) {
                        if (ea->i != fb->i) {
                            std::swap(a, b);
                            work.emplace_back(std::move(s), std::move(c));
                        } else {
                            // E_i F_i = F_i E_i + (K_i - K_i^{-1})/(q - q^{-1})
                            int i = ea->i;
                            auto swapped = s;
                            std::swap(swapped[p], swapped[p + 1]);
                            work.emplace_back(std::move(swapped), c);
                            Coords kp(d_.rank(), 0), km(d_.rank(), 0);
                            kp[i] = 1;
                            km[i] = -1;
                            auto plus = s;
                            plus[p] = detail::KAtom{kp};
                            plus.erase(plus.begin() + p + 1);
                            work.emplace_back(std::move(plus), c / qmq);
                            auto minus = std::move(s);
                            minus[p] = detail::KAtom{km};
                            minus.erase(minus.begin() + p + 1);
                            work.emplace_back(std::move(minus), -(c / qmq));
                        }
                        rewritten = true;
                    } else if (auto* kb = std::get_if<detail::KAtom>(&b)) {
                        // E_i K^k = q^{-(k, alpha_i)} K^k E_i
                        int pr = d_.pairing(ea->i, kb->k);
                        c *= RatFunc::q(-pr);
                        std::swap(a, b);
                        work.emplace_back(std::move(s), std::move(c));
                        rewritten = true;
                    }
                }
            }
            if (rewritten) continue;
            // in normal order: F...K...E with at most one K atom
            FWord f, e;
            Coords k(d_.rank(), 0);
            for (auto& atom : s) {
                if (auto* fa = std::get_if<detail::FAtom>(&atom)) f.push_back(fa->i);
                else if (auto* ka = std::get_if<detail::KAtom>(&atom))
                    for (size_t t = 0; t < k.size(); ++t) k[t] += ka->k[t];
                else e.push_back(std::get<detail::EAtom>(atom).i);
            }
            out.add_term({f, k, e}, c);
        }
        return out;
    }

    UqElement multiply(const UqElement& x, const UqElement& y) const {
        UqElement out;
        for (auto& [k1, c1] : x.terms())
            for (auto& [k2, c2] : y.terms()) {
                std::vector<detail::Atom> seq;
                for (int i : std::get<0>(k1)) seq.push_back(detail::FAtom{i});
                if (!all_zero(std::get<1>(k1))) seq.push_back(detail::KAtom{std::get<1>(k1)});
                for (int i : std::get<2>(k1)) seq.push_back(detail::EAtom{i});
                for (int i : std::get<0>(k2)) seq.push_back(detail::FAtom{i});
                if (!all_zero(std::get<1>(k2))) seq.push_back(detail::KAtom{std::get<1>(k2)});
                for (int i : std::get<2>(k2)) seq.push_back(detail::EAtom{i});
                out += normalize(std::move(seq), c1 * c2);
            }
        return out;
    }

    UqElement from_uminus(const UMinusElement& x) const {
        UqElement out;
        Coords zero(d_.rank(), 0);
        for (auto& [w, c] : x.terms()) out.add_term({w, zero, {}}, c);
        return out;
    }

    // the stored block (kvec, E-weight); pure-F part is project(x, 0, 0)
    UqElement project(const UqElement& x, const Coords& kvec, const Coords& eweight) const {
        UqElement out;
        for (auto& [k, c] : x.terms()) {
            if (std::get<1>(k) != kvec) continue;
            if (word_weight(d_, std::get<2>(k)) != eweight) continue;
            out.add_term(k, c);
        }
        return out;
    }

    UqElement project_pure_f(const UqElement& x) const {
        Coords zero(d_.rank(), 0);
        return project(x, zero, zero);
    }

    // requires every term to be pure-F
    UMinusElement to_uminus(const UqElement& x) const {
        UMinusElement out;
        for (auto& [k, c] : x.terms()) {
            if (!all_zero(std::get<1>(k)) || !std::get<2>(k).empty())
                throw std::domain_error("element is not in U_q^-");
            out.add_term(std::get<0>(k), c);
        }
        return out;
    }

    // ---- braid automorphisms ------------------------------------------------

    UqElement braid_T(int i, const UqElement& x) const { return braid_apply(i, x, false); }
    UqElement braid_T_inv(int i, const UqElement& x) const { return braid_apply(i, x, true); }

    UMinusElement braid_T(int i, const UMinusElement& x) const {
        return to_uminus(braid_T(i, from_uminus(x)));
    }

    // image of one generator under T_i (or its inverse)
    UqElement image_F(int i, int j, bool inverse) const {
        if (i != j && !d_.adjacent(i, j)) return generator(j, 'F');
        if (i == j) {
            // T_i(F_i) = -K_i^{-1} E_i ; T_i^{-1}(F_i) = -q^{-2} K_i E_i
            Coords k(d_.rank(), 0);
            k[i] = inverse ? 1 : -1;
            return UqElement::term({}, k, {i}, inverse ? RatFunc::q(-2) * RatFunc(-1)
                                                       : RatFunc(-1));
        }
        // adjacent: T_i(F_j) = F_j F_i - q F_i F_j ; T_i^{-1}(F_j) = F_i F_j - q F_j F_i
        UqElement a = UqElement::term({j, i}, Coords(d_.rank(), 0), {}, RatFunc(1));
        UqElement b = UqElement::term({i, j}, Coords(d_.rank(), 0), {}, RatFunc(1));
        if (inverse) return b - a * RatFunc::q();
        return a - b * RatFunc::q();
    }

    UqElement image_E(int i, int j, bool inverse) const {
        if (i != j && !d_.adjacent(i, j)) return generator(j, 'E');
        if (i == j) {
            // T_i(E_i) = -F_i K_i ; T_i^{-1}(E_i) = -q^2 F_i K_i^{-1}
            Coords k(d_.rank(), 0);
            k[i] = inverse ? -1 : 1;
            return UqElement::term({i}, k, {}, inverse ? RatFunc::q(2) * RatFunc(-1)
                                                       : RatFunc(-1));
        }
        // adjacent: T_i(E_j) = E_i E_j - q^{-1} E_j E_i ;
        //           T_i^{-1}(E_j) = E_j E_i - q^{-1} E_i E_j
        UqElement a = UqElement::term({}, Coords(d_.rank(), 0), {i, j}, RatFunc(1));
        UqElement b = UqElement::term({}, Coords(d_.rank(), 0), {j, i}, RatFunc(1));
        if (inverse) return b - a * RatFunc::q(-1);
        return a - b * RatFunc::q(-1);
    }

    // K images need no straightening: T_i(K_j) is a K-monomial
    Coords image_K(int i, const Coords& kvec, bool inverse) const {
        (void)inverse;  // the K table is its own inverse composition-wise
        Coords out(d_.rank(), 0);
        for (int j = 0; j < d_.rank(); ++j) {
            if (kvec[j] == 0) continue;
            if (j == i) out[j] -= kvec[j];
            else {
                out[j] += kvec[j];
                if (d_.adjacent(i, j)) out[i] += kvec[j];
            }
        }
        return out;
    }

    std::vector<UqElement> generators() const {
        std::vector<UqElement> g;
        for (int i = 0; i < d_.rank(); ++i) {
            g.push_back(UqElement::generator_F(d_, i));
            g.push_back(UqElement::generator_E(d_, i));
            g.push_back(UqElement::generator_K(d_, i));
        }
        return g;
    }

private:
    UqElement generator(int j, char kind) const {
        return kind == 'F' ? UqElement::generator_F(d_, j) : UqElement::generator_E(d_, j);
    }

    static bool all_zero(const Coords& k) {
        return std::all_of(k.begin(), k.end(), [](int c) { return c == 0; });
    }

    UqElement braid_apply(int i, const UqElement& x, bool inverse) const {
        UqElement out;
        for (auto& [key, c] : x.terms()) {
            UqElement prod = UqElement::one(d_);
            for (int j : std::get<0>(key)) prod = multiply(prod, image_F(i, j, inverse));
            const Coords& kv = std::get<1>(key);
            Coords kimg = image_K(i, kv, inverse);
            prod = multiply(prod, UqElement::term({}, kimg, {}, RatFunc(1)));
            for (int j : std::get<2>(key)) prod = multiply(prod, image_E(i, j, inverse));
            out += prod * c;
        }
        return out;
    }

    DynkinDiagram d_;
};

}  // namespace qcanon
