/*
 * poly.hpp
 * --------
 * Exact sparse multivariate polynomials over the rationals.
 *
 * Variables come in five families: the formal parameter beta and the
 * indexed families x, y, a, b.  A monomial maps variables to positive
 * exponents; a polynomial maps monomials to nonzero rational
 * coefficients.  The term order is graded, with ties broken so that a
 * higher exponent on an earlier variable sorts first within a degree
 * block (beta < x < y < a < b, then by index).
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

using Rational = boost::multiprecision::cpp_rational;

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("polynomial division left a remainder") {}
};

enum class VarFamily : std::uint8_t { Beta = 0, X = 1, Y = 2, A = 3, B = 4 };

struct VarId {
    VarFamily family = VarFamily::Beta;
    int index = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId beta() { return {VarFamily::Beta, 0}; }
inline VarId xv(int i) { return {VarFamily::X, i}; }
inline VarId yv(int i) { return {VarFamily::Y, i}; }
inline VarId av(int i) { return {VarFamily::A, i}; }
inline VarId bv(int i) { return {VarFamily::B, i}; }

inline std::string var_name(VarId v) {
    static const char* fam = "bxyab";
    std::string s(1, fam[static_cast<int>(v.family)]);
    if (v.family == VarFamily::Beta) return s;
    if (v.index < 0) return s + "[" + std::to_string(v.index) + "]";
    return s + std::to_string(v.index);
}

// Parses names produced by var_name: "b" is beta, "b3"/"b[-1]" the b family.
inline std::optional<VarId> parse_var(const std::string& s) {
    if (s.empty()) return std::nullopt;
    VarFamily fam;
    switch (s[0]) {
        case 'b': fam = VarFamily::B; break;
        case 'x': fam = VarFamily::X; break;
        case 'y': fam = VarFamily::Y; break;
        case 'a': fam = VarFamily::A; break;
        default: return std::nullopt;
    }
    if (s.size() == 1) {
        if (s[0] == 'b') return beta();
        return std::nullopt;
    }
    std::string body = s.substr(1);
    if (body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    try {
        size_t pos = 0;
        int idx = std::stoi(body, &pos);
        if (pos != body.size()) return std::nullopt;
        return VarId{fam, idx};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct Monomial {
    std::map<VarId, int> exps;  // exponents are strictly positive

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    int exponent(VarId v) const {
        auto it = exps.find(v);
        return it == exps.end() ? 0 : it->second;
    }
    bool divides(const Monomial& m) const {
        for (auto& [v, e] : exps)
            if (m.exponent(v) < e) return false;
        return true;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps) {
            int ne = (r.exps[v] += e);
            if (ne == 0) r.exps.erase(v);
        }
        return r;
    }
    // quotient *this / o; caller ensures o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps) {
            int ne = (r.exps[v] -= e);
            if (ne == 0) r.exps.erase(v);
        }
        return r;
    }
};

// Ascending term order: lower total degree first; within a degree block a
// higher exponent on an earlier variable sorts first.
struct MonomialLess {
    bool operator()(const Monomial& p, const Monomial& q) const {
        int dp = p.degree(), dq = q.degree();
        if (dp != dq) return dp < dq;
        auto i = p.exps.begin();
        auto j = q.exps.begin();
        while (i != p.exps.end() && j != q.exps.end()) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second > j->second;
            ++i;
            ++j;
        }
        return false;  // same degree and all shared prefixes equal => identical
    }
};

class SparsePoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    SparsePoly() = default;
    explicit SparsePoly(Rational c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    explicit SparsePoly(long c) : SparsePoly(Rational(c)) {}

    static SparsePoly var(VarId v, int exp = 1) {
        SparsePoly p;
        Monomial m;
        if (exp != 0) m.exps[v] = exp;
        p.terms_[m] = 1;
        return p;
    }
    static SparsePoly term(Rational c, Monomial m) {
        SparsePoly p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->first.exps.empty() ? terms_.begin()->second : Rational(0);
    }
    int degree() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }
    int degree_in(VarId v) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }
    bool uses(VarId v) const {
        for (auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }
    std::vector<VarId> variables() const {
        std::map<VarId, int> seen;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exps) seen[v] = 1;
        std::vector<VarId> out;
        for (auto& [v, _] : seen) out.push_back(v);
        return out;
    }
    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
        SparsePoly r;
        for (auto& [mp, cp] : p.terms_)
            for (auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, cc] : terms_) cc *= c;
        }
        return *this;
    }
    friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }

    SparsePoly pow(int e) const {
        SparsePoly r(Rational(1));
        SparsePoly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    // Substitutes polynomial values for the mapped variables; others stay.
    SparsePoly substituted(const std::map<VarId, SparsePoly>& sub) const {
        SparsePoly out;
        std::map<VarId, std::vector<SparsePoly>> powers;
        for (auto& [m, c] : terms_) {
            SparsePoly piece = SparsePoly(c);
            Monomial rest;
            for (auto& [v, e] : m.exps) {
                auto it = sub.find(v);
                if (it == sub.end()) {
                    rest.exps[v] = e;
                    continue;
                }
                auto& pows = powers[v];
                if (pows.empty()) pows.push_back(SparsePoly(Rational(1)));
                while ((int)pows.size() <= e) pows.push_back(pows.back() * it->second);
                piece *= pows[e];
            }
            for (auto& [pm, pc] : piece.terms()) out.add_term(pm * rest, pc);
        }
        return out;
    }

    SparsePoly renamed(const std::function<VarId(VarId)>& f) const {
        SparsePoly out;
        for (auto& [m, c] : terms_) {
            Monomial nm;
            for (auto& [v, e] : m.exps) {
                int ne = (nm.exps[f(v)] += e);
                if (ne == 0) nm.exps.erase(f(v));
            }
            out.add_term(nm, c);
        }
        return out;
    }
    SparsePoly swapped(VarId u, VarId v) const {
        return renamed([&](VarId w) { return w == u ? v : (w == v ? u : w); });
    }

    // Numeric substitution of the mapped variables; others stay symbolic.
    SparsePoly eval_partial(const std::map<VarId, Rational>& vals) const {
        SparsePoly out;
        for (auto& [m, c] : terms_) {
            Rational cc = c;
            Monomial rest;
            for (auto& [v, e] : m.exps) {
                auto it = vals.find(v);
                if (it == vals.end()) {
                    rest.exps[v] = e;
                } else {
                    for (int k = 0; k < e; ++k) cc *= it->second;
                }
            }
            out.add_term(rest, cc);
        }
        return out;
    }

    std::string str() const;

private:
    TermMap terms_;
};

// Division with remainder by a single divisor; returns the quotient when the
// remainder is zero, nullopt otherwise.
inline std::optional<SparsePoly> exact_divide(const SparsePoly& p, const SparsePoly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return SparsePoly();
    if (q.is_constant()) {
        SparsePoly r = p;
        r *= Rational(1) / q.constant_value();
        return r;
    }
    const Monomial& ltq = q.terms().rbegin()->first;
    const Rational& lcq = q.terms().rbegin()->second;
    SparsePoly rem = p;
    SparsePoly quot;
    SparsePoly blocked;  // terms whose leading monomial LT(q) cannot divide
    while (!rem.is_zero()) {
        const Monomial& lt = rem.terms().rbegin()->first;
        const Rational& lc = rem.terms().rbegin()->second;
        if (ltq.divides(lt)) {
            Monomial hm = lt / ltq;
            Rational hc = lc / lcq;
            quot.add_term(hm, hc);
            rem -= SparsePoly::term(hc, hm) * q;
        } else {
            blocked.add_term(lt, lc);
            rem.add_term(lt, -lc);
        }
    }
    if (!blocked.is_zero()) return std::nullopt;
    return quot;
}

// Exact division by (x_i - x_{i+1}); throws NotDivisible on a remainder.
inline SparsePoly exact_div_by_linear(const SparsePoly& p, int i) {
    SparsePoly d = SparsePoly::var(xv(i)) - SparsePoly::var(xv(i + 1));
    auto q = exact_divide(p, d);
    if (!q) throw NotDivisible();
    return *q;
}

inline std::string rational_str(const Rational& r) { return r.str(); }

inline std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        for (auto& [v, e] : m.exps) {
            if (!body.empty()) body += "*";
            body += var_name(v);
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            out += rational_str(ac);
        } else {
            if (ac != 1) out += rational_str(ac) + "*";
            out += body;
        }
    }
    return out;
}

}  // namespace gk
