/*
 * ratfunc.hpp
 * -----------
 * Rational functions num / prod(f_i^{m_i}) over SparsePoly.
 *
 * The denominator is kept as a multiset of polynomial factors instead of
 * one expanded product.  No gcd is computed; the only simplification is
 * cancelling a whole factor when it divides the numerator exactly, which
 * keeps the values produced by the coefficient recurrences small without
 * a full reduction machinery.  Equality is decided by cross
 * multiplication, so unreduced representations compare correctly.
 */
#pragma once

#include "poly.hpp"

#include <map>

namespace gk {

struct ZeroDenominator : std::runtime_error {
    ZeroDenominator() : std::runtime_error("zero denominator") {}
};

struct PolyLess {
    bool operator()(const SparsePoly& p, const SparsePoly& q) const {
        auto i = p.terms().begin();
        auto j = q.terms().begin();
        MonomialLess mless;
        for (; i != p.terms().end() && j != q.terms().end(); ++i, ++j) {
            if (mless(i->first, j->first)) return true;
            if (mless(j->first, i->first)) return false;
            if (i->second != j->second) return i->second < j->second;
        }
        return j != q.terms().end();
    }
};

class RatFunc {
public:
    using FactorMap = std::map<SparsePoly, int, PolyLess>;

    RatFunc() = default;
    RatFunc(SparsePoly num) : num_(std::move(num)) {}
    explicit RatFunc(Rational c) : num_(SparsePoly(std::move(c))) {}
    explicit RatFunc(long c) : num_(SparsePoly(c)) {}
    RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)) {
        push_den(std::move(den), 1);
        normalize();
    }
    RatFunc(SparsePoly num, FactorMap den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const SparsePoly& num() const { return num_; }
    const FactorMap& den_factors() const { return den_; }
    SparsePoly den_expanded() const {
        SparsePoly d(Rational(1));
        for (auto& [f, m] : den_) d *= f.pow(m);
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    Rational constant_value() const {
        if (!den_.empty() || !num_.is_constant())
            throw std::logic_error("RatFunc is not a rational constant");
        return num_.constant_value();
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& p, const RatFunc& q) {
        if (p.is_zero()) return q;
        if (q.is_zero()) return p;
        FactorMap common = p.den_;
        for (auto& [f, m] : q.den_) {
            auto it = common.find(f);
            if (it == common.end())
                common[f] = m;
            else
                it->second = std::max(it->second, m);
        }
        SparsePoly n1 = p.num_;
        SparsePoly n2 = q.num_;
        for (auto& [f, m] : common) {
            int e1 = m - p.mult(f), e2 = m - q.mult(f);
            if (e1 > 0) n1 *= f.pow(e1);
            if (e2 > 0) n2 *= f.pow(e2);
        }
        RatFunc r;
        r.num_ = n1 + n2;
        r.den_ = std::move(common);
        r.normalize();
        return r;
    }
    friend RatFunc operator-(const RatFunc& p, const RatFunc& q) { return p + (-q); }
    friend RatFunc operator*(const RatFunc& p, const RatFunc& q) {
        RatFunc r;
        r.num_ = p.num_ * q.num_;
        r.den_ = p.den_;
        for (auto& [f, m] : q.den_) r.den_[f] += m;
        r.normalize();
        return r;
    }
    friend RatFunc operator/(const RatFunc& p, const RatFunc& q) {
        if (q.is_zero()) throw ZeroDenominator();
        RatFunc r;
        r.num_ = p.num_;
        for (auto& [f, m] : q.den_) r.num_ *= f.pow(m);
        r.den_ = p.den_;
        r.push_den(q.num_, 1);
        r.normalize();
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& p, const RatFunc& q) {
        if (p.num_.is_zero()) return q.num_.is_zero();
        if (q.num_.is_zero()) return false;
        return p.num_ * q.den_expanded() == q.num_ * p.den_expanded();
    }

    // Substitutes numeric values into numerator and denominator factors.
    RatFunc eval_partial(const std::map<VarId, Rational>& vals) const {
        RatFunc r;
        r.num_ = num_.eval_partial(vals);
        for (auto& [f, m] : den_) {
            SparsePoly fe = f.eval_partial(vals);
            if (fe.is_zero()) throw ZeroDenominator();
            r.push_den(std::move(fe), m);
        }
        r.normalize();
        return r;
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        std::string s = "(" + num_.str() + ")/(";
        bool first = true;
        for (auto& [f, m] : den_) {
            if (!first) s += "*";
            first = false;
            s += "(" + f.str() + ")";
            if (m != 1) s += "^" + std::to_string(m);
        }
        return s + ")";
    }

private:
    int mult(const SparsePoly& f) const {
        auto it = den_.find(f);
        return it == den_.end() ? 0 : it->second;
    }
    void push_den(SparsePoly f, int m) {
        if (f.is_zero()) throw ZeroDenominator();
        if (m > 0) den_[std::move(f)] += m;
    }
    // Monomial content of a polynomial: the largest monomial dividing
    // every term.
    static Monomial content(const SparsePoly& p) {
        Monomial c = p.terms().begin()->first;
        for (auto& [m, coeff] : p.terms()) {
            for (auto it = c.exps.begin(); it != c.exps.end();) {
                int e = m.exponent(it->first);
                if (e == 0) {
                    it = c.exps.erase(it);
                } else {
                    it->second = std::min(it->second, e);
                    ++it;
                }
            }
            if (c.exps.empty()) break;
        }
        return c;
    }
    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        // split off the monomial content of composite factors so variable
        // factors can cancel independently
        {
            FactorMap split;
            for (auto& [f, m] : den_) {
                if (f.is_constant() || f.terms().size() == 1) {
                    split[f] += m;
                    continue;
                }
                Monomial c = content(f);
                if (c.exps.empty()) {
                    split[f] += m;
                    continue;
                }
                SparsePoly prim;
                for (auto& [fm, fc] : f.terms()) prim.add_term(fm / c, fc);
                split[std::move(prim)] += m;
                for (auto& [v, e] : c.exps) split[SparsePoly::var(v)] += m * e;
            }
            den_ = std::move(split);
        }
        FactorMap kept;
        for (auto& [f, m] : den_) {
            if (f.is_constant()) {
                Rational c = f.constant_value();
                if (c == 0) throw ZeroDenominator();
                Rational inv = 1;
                for (int k = 0; k < m; ++k) inv /= c;
                num_ *= inv;
                continue;
            }
            // scale the factor so its first coefficient is 1
            SparsePoly nf = f;
            Rational lead = f.terms().begin()->second;
            if (lead != 1) {
                nf *= Rational(1) / lead;
                Rational inv = 1;
                for (int k = 0; k < m; ++k) inv /= lead;
                num_ *= inv;
            }
            int mm = m;
            while (mm > 0) {
                auto q = exact_divide(num_, nf);
                if (!q) break;
                num_ = std::move(*q);
                --mm;
            }
            if (mm > 0) kept[std::move(nf)] += mm;
        }
        den_ = std::move(kept);
        if (num_.is_zero()) den_.clear();
    }

    SparsePoly num_;
    FactorMap den_;
};

inline RatFunc oplus(const RatFunc& x, const RatFunc& y) {
    return x + y + RatFunc(SparsePoly::var(beta())) * x * y;
}
inline RatFunc ominus(const RatFunc& x) {
    return (-x) / (RatFunc(SparsePoly(Rational(1))) + RatFunc(SparsePoly::var(beta())) * x);
}
inline SparsePoly oplus(const SparsePoly& x, const SparsePoly& y) {
    return x + y + SparsePoly::var(beta()) * x * y;
}

// Substitutes rational-function values for variables of a polynomial.  The
// result is assembled over one common denominator built from the value
// denominators, avoiding pairwise fraction addition.
inline RatFunc substitute(const SparsePoly& p, const std::map<VarId, RatFunc>& sub) {
    std::map<VarId, int> maxexp;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.exps)
            if (sub.count(v)) maxexp[v] = std::max(maxexp[v], e);

    RatFunc::FactorMap den;
    std::map<VarId, SparsePoly> den_poly;
    for (auto& [v, E] : maxexp) {
        const RatFunc& val = sub.at(v);
        for (auto& [f, m] : val.den_factors()) den[f] += m * E;
        den_poly[v] = val.den_expanded();
    }

    // cache powers of numerators and denominators per substituted variable
    std::map<VarId, std::vector<SparsePoly>> npow, dpow;
    auto power = [](std::map<VarId, std::vector<SparsePoly>>& cache, VarId v,
                    const SparsePoly& base, int e) -> const SparsePoly& {
        auto& vec = cache[v];
        if (vec.empty()) vec.push_back(SparsePoly(Rational(1)));
        while ((int)vec.size() <= e) vec.push_back(vec.back() * base);
        return vec[e];
    };

    SparsePoly out;
    for (auto& [m, c] : p.terms()) {
        SparsePoly piece(c);
        Monomial rest;
        for (auto& [v, e] : m.exps)
            if (!maxexp.count(v)) rest.exps[v] = e;
        for (auto& [v, E] : maxexp) {
            int e = m.exponent(v);
            if (e > 0) piece *= power(npow, v, sub.at(v).num(), e);
            if (E - e > 0) piece *= power(dpow, v, den_poly[v], E - e);
        }
        for (auto& [pm, pc] : piece.terms()) out.add_term(pm * rest, pc);
    }
    return RatFunc(std::move(out), std::move(den));
}

inline RatFunc substitute(const RatFunc& r, const std::map<VarId, RatFunc>& sub) {
    RatFunc out = substitute(r.num(), sub);
    for (auto& [f, m] : r.den_factors()) {
        RatFunc fs = substitute(f, sub);
        for (int k = 0; k < m; ++k) out /= fs;
    }
    return out;
}

}  // namespace gk
