#pragma once

// Exact arithmetic in the deformation parameter q: sparse integer Laurent
// polynomials and reduced rational functions over them.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcanon {

using Int = mpz_class;
using Rational = mpq_class;

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) coeffs_[0] = Int(c); }
    LaurentPoly(const Int& c) { if (c != 0) coeffs_[0] = c; }

    static LaurentPoly monomial(const Int& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly q(int exp = 1) { return monomial(1, exp); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }
    bool is_monomial() const { return coeffs_.size() == 1; }

    Int coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }
    // min/max exponent; only valid on nonzero polynomials.
    int min_exp() const { require_nonzero(); return coeffs_.begin()->first; }
    int max_exp() const { require_nonzero(); return coeffs_.rbegin()->first; }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.coeffs_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, c1] : coeffs_)
            for (auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // deterministic total order, used as a map key
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }
    // multiply by q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    Int content() const {
        Int g = 0;
        for (auto& [e, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }

    Rational evaluate_at_zero() const {
        // only meaningful when min_exp() >= 0
        return Rational(coeff(0));
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        // print from highest exponent down
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            Int c = it->second;
            int e = it->first;
            if (!first) s += (c < 0) ? " - " : " + ";
            else if (c < 0) s += "-";
            Int a = abs(c);
            bool unit = (a == 1) && e != 0;
            if (!unit) s += a.get_str();
            if (e != 0) {
                if (!unit) s += "*";
                s += "q";
                if (e != 1) s += "^" + std::to_string(e);
            }
            first = false;
        }
        return s;
    }

private:
    void require_nonzero() const {
        if (coeffs_.empty()) throw std::domain_error("zero polynomial has no exponent range");
    }
    std::map<int, Int> coeffs_;  // exponent -> coefficient, no zeros stored
};

namespace detail {

// Dense ordinary-polynomial helpers for gcd computation.  Index = exponent.
using Dense = std::vector<Int>;

inline Dense to_dense(const LaurentPoly& p) {
    // caller guarantees min_exp >= 0
    Dense d(p.is_zero() ? 0 : p.max_exp() + 1);
    for (auto& [e, c] : p.coeffs()) d[e] = c;
    return d;
}

inline LaurentPoly from_dense(const Dense& d) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<int>(i), d[i]);
    return p;
}

inline void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

inline Int dense_content(const Dense& d) {
    Int g = 0;
    for (auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline void make_primitive(Dense& d) {
    Int g = dense_content(d);
    if (g == 0 || g == 1) return;
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// pseudo-remainder of a by b (b nonzero), in place arithmetic over Z
inline Dense pseudo_rem(Dense a, const Dense& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        trim(a);
    }
    return a;
}

// gcd in Z[q] via primitive polynomial remainder sequence
inline Dense dense_gcd(Dense a, Dense b) {
    trim(a); trim(b);
    if (a.empty()) { make_primitive(b); return b; }
    if (b.empty()) { make_primitive(a); return a; }
    Int ca = dense_content(a), cb = dense_content(b);
    Int cg; mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    make_primitive(a); make_primitive(b);
    while (!b.empty()) {
        Dense r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& c : a) c *= cg;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// exact division a / b, throws if not exact
inline Dense dense_divexact(Dense a, const Dense& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    int db = static_cast<int>(b.size()) - 1;
    if (a.empty()) return {};
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) throw std::domain_error("inexact polynomial division");
    Dense quot(da - db + 1);
    // divide from the top; each leading coefficient must divide exactly
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int k = static_cast<int>(a.size()) - 1 - db;
        Int q;
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        quot[k] = q;
        for (int j = 0; j <= db; ++j) a[k + j] -= q * b[j];
        trim(a);
    }
    if (!a.empty()) throw std::domain_error("inexact polynomial division");
    return quot;
}

}  // namespace detail

// Quotient of integer Laurent polynomials, kept reduced: the denominator is an
// ordinary polynomial with nonzero constant term and positive leading
// coefficient, gcd(num, den) is a unit, and the integer contents are coprime.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Int& c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        normalize();
    }
    static RatFunc q(int exp = 1) { return RatFunc(LaurentPoly::q(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    // true when this value lies in Z[q, q^{-1}]
    bool is_laurent() const { return den_.is_one(); }
    LaurentPoly to_laurent() const {
        if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + to_string());
        return num_;
    }

    // regular at q = 0, i.e. no pole there
    bool regular_at_zero() const {
        // den has nonzero constant term by normalization
        return num_.is_zero() || num_.min_exp() >= 0;
    }
    Rational value_at_zero() const {
        if (!regular_at_zero()) throw std::domain_error("pole at q = 0");
        Rational v(num_.coeff(0), den_.coeff(0));
        v.canonicalize();
        return v;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
        // shift so den is an ordinary polynomial with nonzero constant term
        int s = den_.min_exp();
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
        // split num into q^e * ordinary part
        int e = num_.min_exp();
        detail::Dense dn = detail::to_dense(num_.shifted(-e));
        detail::Dense dd = detail::to_dense(den_);
        detail::Dense g = detail::dense_gcd(dn, dd);
        if (!(g.size() == 1 && g[0] == 1)) {
            dn = detail::dense_divexact(std::move(dn), g);
            dd = detail::dense_divexact(std::move(dd), g);
        }
        num_ = detail::from_dense(dn).shifted(e);
        den_ = detail::from_dense(dd);
        if (den_.coeff(den_.max_exp()) < 0) { num_ = -num_; den_ = -den_; }
    }

    LaurentPoly num_, den_;
};

// [n] = q^{n-1} + q^{n-3} + ... + q^{-n+1}
inline LaurentPoly quantum_integer(int n) {
    if (n <= 0) throw std::domain_error("quantum_integer requires n >= 1");
    LaurentPoly p;
    for (int e = n - 1; e >= -n + 1; e -= 2) p.add_term(e, 1);
    return p;
}

// [n]! = [n][n-1]...[2]
inline LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw std::domain_error("quantum_factorial requires n >= 0");
    LaurentPoly p(1);
    for (int k = 2; k <= n; ++k) p *= quantum_integer(k);
    return p;
}

inline RatFunc bar_scalar(const RatFunc& f) { return f.bar(); }

inline bool regular_at_zero(const RatFunc& f) { return f.regular_at_zero(); }
inline Rational value_at_zero(const RatFunc& f) { return f.value_at_zero(); }

// Given p with bar(p) = -p, return the unique f with nonnegative exponents
// such that p = q*f(q) - q^{-1}*f(q^{-1}).  Concretely f_n = p_{n+1}.
inline LaurentPoly split_antisymmetric(const LaurentPoly& p) {
    if (p.bar() != -p)
        throw std::domain_error("split_antisymmetric: input is not bar-antisymmetric");
    LaurentPoly f;
    for (auto& [e, c] : p.coeffs())
        if (e >= 1) f.add_term(e - 1, c);
    return f;
}

}  // namespace qcanon
