#pragma once

// The algebra U_q^- realized on word coordinates: multiplication, divided
// powers, bar involution, the operators e'_i, an exact zero-test through
// iterated e'_i coordinates, and Kashiwara's operators.

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "qcanon/linalg.hpp"
#include "qcanon/root_system.hpp"
#include "qcanon/scalars.hpp"

namespace qcanon {

using FWord = std::vector<int>;  // each letter names one generator F_i

inline Coords word_weight(const DynkinDiagram& d, const FWord& w) {
    Coords nu(d.rank(), 0);
    for (int i : w) ++nu[i];
    return nu;
}

inline int height(const Coords& nu) {
    int h = 0;
    for (int c : nu) h += c;
    return h;
}

// An element of U_q^- as a finite coefficient map word -> RatFunc.  Words
// satisfy the Serre relations, so term-map equality is NOT semantic equality;
// use UqMinusContext::is_zero for that.
class UMinusElement {
public:
    UMinusElement() = default;
    static UMinusElement one() { return term({}, RatFunc(1)); }
    static UMinusElement generator(int i) { return term({i}, RatFunc(1)); }
    static UMinusElement term(FWord w, RatFunc c) {
        UMinusElement x;
        if (!c.is_zero()) x.terms_[std::move(w)] = std::move(c);
        return x;
    }

    const std::map<FWord, RatFunc>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const FWord& w, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UMinusElement operator+(const UMinusElement& o) const {
        UMinusElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    UMinusElement operator-() const {
        UMinusElement r;
        for (auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    UMinusElement operator-(const UMinusElement& o) const { return *this + (-o); }
    UMinusElement operator*(const UMinusElement& o) const {
        UMinusElement r;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                FWord w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                r.add_term(w, c1 * c2);
            }
        return r;
    }
    UMinusElement operator*(const RatFunc& f) const {
        UMinusElement r;
        if (f.is_zero()) return r;
        for (auto& [w, c] : terms_) r.terms_[w] = c * f;
        return r;
    }
    UMinusElement& operator+=(const UMinusElement& o) { *this = *this + o; return *this; }
    UMinusElement& operator-=(const UMinusElement& o) { *this = *this - o; return *this; }

    // coefficient-wise q -> q^{-1}; an algebra involution fixing each F_i
    UMinusElement bar() const {
        UMinusElement r;
        for (auto& [w, c] : terms_) r.terms_[w] = c.bar();
        return r;
    }

    bool homogeneous(const DynkinDiagram& d, Coords* nu_out = nullptr) const {
        if (terms_.empty()) return true;
        Coords nu = word_weight(d, terms_.begin()->first);
        for (auto& [w, c] : terms_)
            if (word_weight(d, w) != nu) return false;
        if (nu_out) *nu_out = nu;
        return true;
    }

    // split into homogeneous components keyed by word content
    std::map<Coords, UMinusElement> components(const DynkinDiagram& d) const {
        std::map<Coords, UMinusElement> out;
        for (auto& [w, c] : terms_) out[word_weight(d, w)].add_term(w, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*F[";
            for (size_t k = 0; k < w.size(); ++k) {
                if (k) s += ",";
                s += std::to_string(w[k] + 1);
            }
            s += "]";
        }
        return s;
    }

private:
    std::map<FWord, RatFunc> terms_;
};

inline UMinusElement operator*(const RatFunc& f, const UMinusElement& x) { return x * f; }

// F_i^{(n)} = F_i^n / [n]!
inline UMinusElement divided_power(int i, int n) {
    if (n < 0) throw std::domain_error("divided_power requires n >= 0");
    FWord w(n, i);
    return UMinusElement::term(w, RatFunc(1) / RatFunc(quantum_factorial(n)));
}

// Shared caches for one diagram: word enumeration per weight, iterated-e'
// coordinates, word bases, and Kashiwara decomposition systems.
class UqMinusContext {
public:
    explicit UqMinusContext(const DynkinDiagram& d, int height_bound = 8)
        : d_(d), kostant_(d), height_bound_(height_bound) {}

    const DynkinDiagram& diagram() const { return d_; }
    int height_bound() const { return height_bound_; }

    void check_height(const Coords& nu) const {
        if (height(nu) > height_bound_)
            throw std::domain_error("weight height " + std::to_string(height(nu)) +
                                    " exceeds bound " + std::to_string(height_bound_));
    }

    // e'_i: the K_i^{-1}-component of straightening E_i past x, computed from
    // the closed-form word recursion.  For a word w and each position t with
    // letter i, deleting the letter contributes -q^{(alpha_i, nu_t)}/(q-q^{-1})
    // where nu_t is the weight of the suffix after t.
    UMinusElement eprime(int i, const UMinusElement& x) const {
        static const RatFunc qmq = RatFunc::q() - RatFunc::q(-1);
        UMinusElement out;
        for (auto& [w, c] : x.terms()) {
            Coords suffix(d_.rank(), 0);
            // walk from the right, tracking the suffix weight
            std::vector<int> pairing_after(w.size());
            for (int t = static_cast<int>(w.size()) - 1; t >= 0; --t) {
                pairing_after[t] = d_.pairing(i, suffix);
                ++suffix[w[t]];
            }
            for (size_t t = 0; t < w.size(); ++t) {
                if (w[t] != i) continue;
                FWord del;
                del.reserve(w.size() - 1);
                del.insert(del.end(), w.begin(), w.begin() + t);
                del.insert(del.end(), w.begin() + t + 1, w.end());
                out.add_term(del, -(c * RatFunc::q(pairing_after[t])) / qmq);
            }
        }
        return out;
    }

    // all words of the given content, in lexicographic order
    const std::vector<FWord>& words_of_weight(const Coords& nu) {
        auto it = words_cache_.find(nu);
        if (it != words_cache_.end()) return it->second;
        std::vector<FWord> words;
        FWord cur;
        Coords left = nu;
        enumerate_words(left, cur, words);
        return words_cache_.emplace(nu, std::move(words)).first->second;
    }

    // full iterated-e' coordinate map of a homogeneous element: for each word
    // (j_1,...,j_h) of the element's weight, the scalar obtained by applying
    // e'_{j_1} last.
    std::map<FWord, RatFunc> phi_coordinates(const UMinusElement& x) {
        Coords nu(d_.rank(), 0);
        if (!x.homogeneous(d_, &nu))
            throw std::domain_error("phi_coordinates requires a homogeneous element");
        check_height(nu);
        std::map<FWord, RatFunc> out;
        phi_rec(x, nu, {}, out);
        return out;
    }

    // phi as a vector over words_of_weight(nu)
    QVector phi_vector(const UMinusElement& x, const Coords& nu) {
        auto coords = phi_coordinates_known(x, nu);
        const auto& words = words_of_weight(nu);
        QVector v(words.size());
        for (size_t k = 0; k < words.size(); ++k) {
            auto it = coords.find(words[k]);
            if (it != coords.end()) v[k] = it->second;
        }
        return v;
    }

    // cached phi vector of a single word (used by the generic-Verma tests)
    const QVector& phi_of_word(const FWord& w) {
        auto it = phi_word_cache_.find(w);
        if (it != phi_word_cache_.end()) return it->second;
        Coords nu = word_weight(d_, w);
        QVector v = phi_vector(UMinusElement::term(w, RatFunc(1)), nu);
        return phi_word_cache_.emplace(w, std::move(v)).first->second;
    }

    // A subset of words whose images form a basis of the weight space, with
    // the rank validated against Kostant's partition function.
    struct WordBasis {
        std::vector<FWord> words;  // the chosen basis words
        std::vector<int> indices;  // positions within words_of_weight
    };
    const WordBasis& word_basis(const Coords& nu) {
        auto it = basis_cache_.find(nu);
        if (it != basis_cache_.end()) return it->second;
        const auto& words = words_of_weight(nu);
        std::vector<QVector> cols;
        cols.reserve(words.size());
        for (auto& w : words) cols.push_back(phi_of_word(w));
        RowReduction rr(QMatrix::from_columns(cols));
        long long expected = kostant_.count(nu);
        if (rr.rank() != expected)
            throw std::logic_error(
                "iterated-e' coordinate rank " + std::to_string(rr.rank()) +
                " does not match Kostant count " + std::to_string(expected) +
                "; the nondegeneracy assumption failed");
        WordBasis wb;
        for (int c : rr.pivot_cols()) {
            wb.words.push_back(words[c]);
            wb.indices.push_back(c);
        }
        return basis_cache_.emplace(nu, std::move(wb)).first->second;
    }

    bool is_zero(const UMinusElement& x) {
        for (auto& [nu, comp] : x.components(d_)) {
            check_height(nu);
            for (auto& [w, c] : phi_coordinates(comp))
                if (!c.is_zero()) return false;
        }
        return true;
    }

    bool equal(const UMinusElement& x, const UMinusElement& y) { return is_zero(x - y); }

    // the unique components with x = sum_n F_i^{(n)} Y_n, e'_i(Y_n) = 0
    std::vector<std::pair<int, UMinusElement>> kashiwara_decompose(int i,
                                                                   const UMinusElement& x) {
        Coords nu(d_.rank(), 0);
        if (!x.homogeneous(d_, &nu))
            throw std::domain_error("kashiwara_decompose requires a homogeneous element");
        check_height(nu);
        const DecompSystem& sys = decomp_system(i, nu);
        auto sol = sys.rr->solve(phi_vector(x, nu));
        if (!sol)
            throw std::logic_error("kashiwara decomposition system inconsistent");
        std::vector<std::pair<int, UMinusElement>> out;
        std::map<int, UMinusElement> parts;
        for (size_t c = 0; c < sys.columns.size(); ++c) {
            if ((*sol)[c].is_zero()) continue;
            parts[sys.columns[c].first] += sys.columns[c].second * (*sol)[c];
        }
        for (auto& [n, y] : parts)
            if (!y.empty()) out.emplace_back(n, y);
        return out;
    }

    // kernel of e'_i inside one weight space, as elements
    const std::vector<UMinusElement>& eprime_kernel(int i, const Coords& nu) {
        auto key = std::make_pair(i, nu);
        auto it = kernel_cache_.find(key);
        if (it != kernel_cache_.end()) return it->second;
        const WordBasis& wb = word_basis(nu);
        std::vector<UMinusElement> kernel;
        Coords mu = nu;
        mu[i] -= 1;
        bool image_trivial =
            std::any_of(mu.begin(), mu.end(), [](int c) { return c < 0; });
        if (image_trivial) {
            for (auto& w : wb.words) kernel.push_back(UMinusElement::term(w, RatFunc(1)));
        } else {
            std::vector<QVector> cols;
            for (auto& w : wb.words)
                cols.push_back(phi_vector(eprime(i, UMinusElement::term(w, RatFunc(1))), mu));
            for (auto& kv : kernel_basis(QMatrix::from_columns(cols))) {
                UMinusElement y;
                for (size_t c = 0; c < wb.words.size(); ++c)
                    if (!kv[c].is_zero())
                        y += UMinusElement::term(wb.words[c], RatFunc(1)) * kv[c];
                kernel.push_back(std::move(y));
            }
        }
        return kernel_cache_.emplace(key, std::move(kernel)).first->second;
    }

    // shift every Kashiwara component up one divided power
    UMinusElement kashiwara_ftilde(int i, const UMinusElement& x) {
        UMinusElement out;
        for (auto& [n, y] : kashiwara_decompose(i, x))
            out += divided_power(i, n + 1) * y;
        return out;
    }

    long long kostant(const Coords& nu) { return kostant_.count(nu); }

private:
    struct DecompSystem {
        std::vector<std::pair<int, UMinusElement>> columns;  // (n, kernel element)
        std::unique_ptr<RowReduction> rr;
    };

    const DecompSystem& decomp_system(int i, const Coords& nu) {
        auto key = std::make_pair(i, nu);
        auto it = decomp_cache_.find(key);
        if (it != decomp_cache_.end()) return it->second;
        DecompSystem sys;
        std::vector<QVector> cols;
        for (int n = 0; n <= nu[i]; ++n) {
            Coords mu = nu;
            mu[i] -= n;
            for (auto& y : eprime_kernel(i, mu)) {
                cols.push_back(phi_vector(divided_power(i, n) * y, nu));
                sys.columns.emplace_back(n, y);
            }
        }
        sys.rr = std::make_unique<RowReduction>(QMatrix::from_columns(cols));
        if (sys.rr->rank() != static_cast<int>(sys.columns.size()))
            throw std::logic_error("Kashiwara tensor decomposition is degenerate");
        return decomp_cache_.emplace(key, std::move(sys)).first->second;
    }

    std::map<FWord, RatFunc> phi_coordinates_known(const UMinusElement& x, const Coords& nu) {
        check_height(nu);
        std::map<FWord, RatFunc> out;
        phi_rec(x, nu, {}, out);
        return out;
    }

    void phi_rec(const UMinusElement& x, const Coords& nu, FWord prefix,
                 std::map<FWord, RatFunc>& out) {
        if (height(nu) == 0) {
            auto it = x.terms().find(FWord{});
            out[prefix] = (it == x.terms().end()) ? RatFunc(0) : it->second;
            return;
        }
        for (int i = 0; i < d_.rank(); ++i) {
            if (nu[i] == 0) continue;
            Coords mu = nu;
            --mu[i];
            FWord p = prefix;
            p.push_back(i);
            phi_rec(eprime(i, x), mu, std::move(p), out);
        }
    }

    void enumerate_words(Coords& left, FWord& cur, std::vector<FWord>& out) {
        if (height(left) == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < d_.rank(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            cur.push_back(i);
            enumerate_words(left, cur, out);
            cur.pop_back();
            ++left[i];
        }
    }

    DynkinDiagram d_;
    KostantCounter kostant_;
    int height_bound_;
    std::map<Coords, std::vector<FWord>> words_cache_;
    std::map<FWord, QVector> phi_word_cache_;
    std::map<Coords, WordBasis> basis_cache_;
    std::map<std::pair<int, Coords>, std::vector<UMinusElement>> kernel_cache_;
    std::map<std::pair<int, Coords>, DecompSystem> decomp_cache_;
};

}  // namespace qcanon
