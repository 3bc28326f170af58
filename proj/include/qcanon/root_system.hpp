#pragma once

// ADE Cartan/Weyl combinatorics: Dynkin diagrams, roots, reduced words of w0,
// braid moves and Matsumoto paths, the beta-sequence of a reduced word,
// sigma = -w0 relabeling, and Kostant's partition function.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcanon/scalars.hpp"

namespace qcanon {

using Coords = std::vector<int>;  // coefficients in the simple-root basis

class DynkinDiagram {
public:
    static DynkinDiagram from_string(const std::string& type) {
        if (type.size() < 2) throw std::domain_error("bad diagram type: " + type);
        char family = type[0];
        int n = std::atoi(type.c_str() + 1);
        DynkinDiagram d;
        d.type_ = type;
        d.rank_ = n;
        auto link = [&](int a, int b) { d.edges_.insert({std::min(a, b), std::max(a, b)}); };
        if (family == 'A' && n >= 1) {
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        } else if (family == 'D' && n >= 4) {
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
        } else if (family == 'E' && n >= 6 && n <= 8) {
            // chain 0-1-2-3-...-(n-2), extra node n-1 attached to node 2
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(2, n - 1);
        } else {
            throw std::domain_error("not an ADE diagram type: " + type);
        }
        return d;
    }

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    bool adjacent(int i, int j) const {
        return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
    }
    // symmetric Cartan matrix entry, (alpha_i, alpha_j)
    int cartan(int i, int j) const {
        if (i == j) return 2;
        return adjacent(i, j) ? -1 : 0;
    }
    // (alpha_i, v) for v in simple-root coordinates
    int pairing(int i, const Coords& v) const {
        int s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan(i, j) * v[j];
        return s;
    }
    // reflection s_i applied to v
    Coords reflect(int i, Coords v) const {
        v[i] -= pairing(i, v);
        return v;
    }

    bool operator==(const DynkinDiagram& o) const { return type_ == o.type_; }

private:
    std::string type_;
    int rank_ = 0;
    std::set<std::pair<int, int>> edges_;
};

struct Root {
    Coords coords;
    int height() const {
        int h = 0;
        for (int c : coords) h += c;
        return h;
    }
    bool is_positive() const { return height() > 0; }
    bool is_simple() const {
        int nz = 0, ones = 0;
        for (int c : coords) { if (c != 0) ++nz; if (c == 1) ++ones; }
        return nz == 1 && ones == 1;
    }
    bool operator==(const Root& o) const { return coords == o.coords; }
    bool operator<(const Root& o) const {
        if (height() != o.height()) return height() < o.height();
        return coords < o.coords;
    }
    std::string to_string() const {
        std::string s;
        bool first = true;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            if (!first) s += "+";
            if (coords[i] != 1) s += std::to_string(coords[i]) + "*";
            s += "a" + std::to_string(i + 1);
            first = false;
        }
        return first ? "0" : s;
    }
};

inline Root simple_root(const DynkinDiagram& d, int i) {
    Root r;
    r.coords.assign(d.rank(), 0);
    r.coords[i] = 1;
    return r;
}

// all positive roots via reflection closure, sorted by height then lex
inline std::vector<Root> positive_roots(const DynkinDiagram& d) {
    std::set<Coords> seen;
    std::vector<Coords> frontier;
    for (int i = 0; i < d.rank(); ++i) {
        Coords a(d.rank(), 0);
        a[i] = 1;
        seen.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<Coords> next;
        for (auto& v : frontier) {
            for (int i = 0; i < d.rank(); ++i) {
                Coords w = d.reflect(i, v);
                bool pos = std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
                if (pos && seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Root> out;
    for (auto& v : seen) out.push_back(Root{v});
    std::sort(out.begin(), out.end());
    return out;
}

// Weyl group element stored as the images of the simple roots
class WeylElt {
public:
    static WeylElt identity(const DynkinDiagram& d) {
        WeylElt w;
        for (int i = 0; i < d.rank(); ++i) w.img_.push_back(simple_root(d, i).coords);
        return w;
    }
    Coords apply(const Coords& v) const {
        Coords out(img_[0].size(), 0);
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * img_[i][j];
        return out;
    }
    // this * s_i
    WeylElt times_s(const DynkinDiagram& d, int i) const {
        WeylElt w = *this;
        for (int k = 0; k < d.rank(); ++k) {
            Coords v = d.reflect(i, simple_root(d, k).coords);
            w.img_[k] = apply(v);
        }
        return w;
    }
    int length(const DynkinDiagram& d) const {
        int inv = 0;
        for (auto& r : positive_roots(d)) {
            Coords v = apply(r.coords);
            bool neg = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
            if (neg) ++inv;
        }
        return inv;
    }
    bool operator==(const WeylElt& o) const { return img_ == o.img_; }
    bool operator<(const WeylElt& o) const { return img_ < o.img_; }

private:
    std::vector<Coords> img_;
};

inline WeylElt word_element(const DynkinDiagram& d, const std::vector<int>& letters) {
    WeylElt w = WeylElt::identity(d);
    for (int i : letters) w = w.times_s(d, i);
    return w;
}

class ReducedWord {
public:
    ReducedWord(const DynkinDiagram& d, std::vector<int> letters)
        : diagram_(d), letters_(std::move(letters)) {
        for (int i : letters_)
            if (i < 0 || i >= d.rank()) throw std::domain_error("letter out of range");
        element_ = word_element(d, letters_);
        if (element_.length(d) != static_cast<int>(letters_.size()))
            throw std::domain_error("word is not reduced");
    }

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<int>& letters() const { return letters_; }
    const WeylElt& element() const { return element_; }
    int size() const { return static_cast<int>(letters_.size()); }

    bool is_full() const {
        return size() == static_cast<int>(positive_roots(diagram_).size());
    }
    bool operator==(const ReducedWord& o) const { return letters_ == o.letters_; }

    std::string to_string() const {
        std::string s;
        for (size_t k = 0; k < letters_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(letters_[k] + 1);
        }
        return s;
    }

private:
    DynkinDiagram diagram_;
    std::vector<int> letters_;
    WeylElt element_;
};

struct BraidMove {
    enum Kind { Swap2, Braid3 };
    int pos;  // 0-based index of the first affected letter
    Kind kind;
    bool operator==(const BraidMove& o) const { return pos == o.pos && kind == o.kind; }
};

inline bool move_legal(const DynkinDiagram& d, const std::vector<int>& w, const BraidMove& m) {
    int n = static_cast<int>(w.size());
    if (m.kind == BraidMove::Swap2) {
        return m.pos >= 0 && m.pos + 1 < n && w[m.pos] != w[m.pos + 1] &&
               !d.adjacent(w[m.pos], w[m.pos + 1]);
    }
    return m.pos >= 0 && m.pos + 2 < n && w[m.pos] == w[m.pos + 2] &&
           d.adjacent(w[m.pos], w[m.pos + 1]);
}

inline std::vector<int> apply_move_letters(const DynkinDiagram& d, std::vector<int> w,
                                           const BraidMove& m) {
    if (!move_legal(d, w, m)) throw std::domain_error("illegal braid move");
    if (m.kind == BraidMove::Swap2) {
        std::swap(w[m.pos], w[m.pos + 1]);
    } else {
        std::swap(w[m.pos], w[m.pos + 1]);
        w[m.pos + 2] = w[m.pos];
        // i j i -> j i j
    }
    return w;
}

inline ReducedWord apply_braid_move(const ReducedWord& w, const BraidMove& m) {
    return ReducedWord(w.diagram(), apply_move_letters(w.diagram(), w.letters(), m));
}

// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
inline std::vector<Root> beta_sequence(const ReducedWord& w) {
    std::vector<Root> out;
    WeylElt prefix = WeylElt::identity(w.diagram());
    for (int i : w.letters()) {
        out.push_back(Root{prefix.apply(simple_root(w.diagram(), i).coords)});
        prefix = prefix.times_s(w.diagram(), i);
    }
    return out;
}

namespace detail {

inline bool left_descent(const DynkinDiagram& d, const WeylElt& w, int j) {
    // l(s_j w) < l(w) iff w^{-1}(alpha_j) < 0; compare inversion counts
    int lw = w.length(d);
    int inv = 0;
    for (auto& r : positive_roots(d)) {
        Coords v = d.reflect(j, w.apply(r.coords));
        bool neg = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
        if (neg) ++inv;
    }
    return inv < lw;
}

// Emit moves transforming `w` (a reduced letter sequence) into one starting
// with j; j must be a left descent of the word's element.  Positions in the
// emitted moves are offset by `base`.
inline void make_first_moves(const DynkinDiagram& d, std::vector<int>& w, int j, int base,
                             std::vector<BraidMove>& out) {
    if (w.empty()) throw std::domain_error("make_first on empty word");
    if (w[0] == j) return;
    int i = w[0];
    std::vector<int> tail(w.begin() + 1, w.end());
    if (!d.adjacent(i, j)) {
        make_first_moves(d, tail, j, base + 1, out);
        std::copy(tail.begin(), tail.end(), w.begin() + 1);
        BraidMove m{base, BraidMove::Swap2};
        out.push_back(m);
        w = apply_move_letters(d, w, BraidMove{0, BraidMove::Swap2});
    } else {
        make_first_moves(d, tail, j, base + 1, out);
        std::copy(tail.begin(), tail.end(), w.begin() + 1);
        std::vector<int> tail2(w.begin() + 2, w.end());
        make_first_moves(d, tail2, i, base + 2, out);
        std::copy(tail2.begin(), tail2.end(), w.begin() + 2);
        BraidMove m{base, BraidMove::Braid3};
        out.push_back(m);
        w = apply_move_letters(d, w, BraidMove{0, BraidMove::Braid3});
    }
}

}  // namespace detail

// A sequence of legal braid moves transforming w1 into w2 (same Weyl element),
// found by first-letter alignment recursion.
inline std::vector<BraidMove> matsumoto_path(const ReducedWord& w1, const ReducedWord& w2) {
    if (!(w1.element() == w2.element()))
        throw std::domain_error("words represent different Weyl elements");
    const DynkinDiagram& d = w1.diagram();
    std::vector<int> cur = w1.letters();
    std::vector<BraidMove> out;
    for (int k = 0; k < static_cast<int>(cur.size()); ++k) {
        int j = w2.letters()[k];
        if (cur[k] == j) continue;
        std::vector<int> suffix(cur.begin() + k, cur.end());
        detail::make_first_moves(d, suffix, j, k, out);
        std::copy(suffix.begin(), suffix.end(), cur.begin() + k);
    }
    if (cur != w2.letters()) throw std::logic_error("matsumoto_path failed to converge");
    return out;
}

// Canonical reduced word for w0: greedily append the smallest i whose simple
// root is still sent to a positive root.
inline ReducedWord canonical_w0_word(const DynkinDiagram& d, int rank_limit = 5) {
    if (d.rank() > rank_limit)
        throw std::domain_error("full-w0 operation gated to rank <= " +
                                std::to_string(rank_limit));
    WeylElt v = WeylElt::identity(d);
    std::vector<int> letters;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < d.rank(); ++i) {
            Coords im = v.apply(simple_root(d, i).coords);
            bool pos = std::all_of(im.begin(), im.end(), [](int c) { return c >= 0; });
            if (pos) {
                letters.push_back(i);
                v = v.times_s(d, i);
                progress = true;
                break;
            }
        }
    }
    return ReducedWord(d, letters);
}

// Dynkin diagram automorphism with alpha_{sigma(i)} = -w0(alpha_i)
inline std::vector<int> sigma(const DynkinDiagram& d, int rank_limit = 8) {
    if (d.rank() > rank_limit)
        throw std::domain_error("sigma gated to rank <= " + std::to_string(rank_limit));
    // w0 can be built greedily without the reduced-word gate
    WeylElt v = WeylElt::identity(d);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < d.rank(); ++i) {
            Coords im = v.apply(simple_root(d, i).coords);
            if (std::all_of(im.begin(), im.end(), [](int c) { return c >= 0; })) {
                v = v.times_s(d, i);
                progress = true;
                break;
            }
        }
    }
    std::vector<int> s(d.rank(), -1);
    for (int i = 0; i < d.rank(); ++i) {
        Coords im = v.apply(simple_root(d, i).coords);
        for (int& c : im) c = -c;
        for (int j = 0; j < d.rank(); ++j)
            if (im == simple_root(d, j).coords) s[i] = j;
        if (s[i] < 0) throw std::logic_error("-w0 does not permute simple roots");
    }
    return s;
}

// A reduced word of w0 beginning with i.
inline ReducedWord first_letter_word(const DynkinDiagram& d, int i, int rank_limit = 5) {
    ReducedWord w0 = canonical_w0_word(d, rank_limit);
    std::vector<int> letters = w0.letters();
    std::vector<BraidMove> moves;
    detail::make_first_moves(d, letters, i, 0, moves);
    return ReducedWord(d, letters);
}

// A reduced word of w0 ending with sigma(i).
inline ReducedWord last_letter_word(const DynkinDiagram& d, int i, int rank_limit = 5) {
    std::vector<int> s = sigma(d);
    ReducedWord w = first_letter_word(d, s[i], rank_limit);
    std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
    return ReducedWord(d, rev);
}

// Kostant's partition function: number of multisets of positive roots
// summing to nu.
class KostantCounter {
public:
    explicit KostantCounter(const DynkinDiagram& d) : roots_(positive_roots(d)) {}

    long long count(const Coords& nu) {
        for (int c : nu)
            if (c < 0) return 0;
        return rec(nu, 0);
    }

private:
    long long rec(Coords nu, size_t idx) {
        if (std::all_of(nu.begin(), nu.end(), [](int c) { return c == 0; })) return 1;
        if (idx >= roots_.size()) return 0;
        auto key = std::make_pair(nu, idx);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        long long total = 0;
        Coords cur = nu;
        bool ok = true;
        for (int m = 0; ok; ++m) {
            total += rec(cur, idx + 1);
            for (size_t j = 0; j < cur.size(); ++j) {
                cur[j] -= roots_[idx].coords[j];
                if (cur[j] < 0) ok = false;
            }
        }
        memo_[key] = total;
        return total;
    }

    std::vector<Root> roots_;
    std::map<std::pair<Coords, size_t>, long long> memo_;
};

inline long long kostant_partition(const DynkinDiagram& d, const Coords& nu) {
    return KostantCounter(d).count(nu);
}

// All reduced words braid-connected to the given one (by Matsumoto's theorem,
// all reduced words of its element).  Oracle; exponential in general.
inline std::vector<std::vector<int>> all_reduced_words(const ReducedWord& w) {
    const DynkinDiagram& d = w.diagram();
    std::set<std::vector<int>> seen{w.letters()};
    std::vector<std::vector<int>> frontier{w.letters()};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& cur : frontier) {
            int n = static_cast<int>(cur.size());
            for (int k = 0; k + 1 < n; ++k) {
                BraidMove m2{k, BraidMove::Swap2};
                if (move_legal(d, cur, m2)) {
                    auto nw = apply_move_letters(d, cur, m2);
                    if (seen.insert(nw).second) next.push_back(nw);
                }
                BraidMove m3{k, BraidMove::Braid3};
                if (move_legal(d, cur, m3)) {
                    auto nw = apply_move_letters(d, cur, m3);
                    if (seen.insert(nw).second) next.push_back(nw);
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace qcanon
