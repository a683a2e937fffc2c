/*
 * groth.hpp
 * ---------
 * The tableau sums.  For a skew shape theta, n variables and a parameter
 * family (none, a or b) the polynomial is
 *
 *     sum over fillings T of  beta^{excess(T)} prod over entries (r, cell)
 *         of x_r            (ordinary)
 *         or x_r (+) a_{r + content(cell)}   (factorial).
 *
 * Evaluation points (a_la)_i = (-) a_{n+1-i+la_i}, the product
 * Pi(x) = prod (1 + beta x_i), the vanishing classification and the
 * closed-form diagonal value live here too, together with the monomial
 * symmetric basis helpers and randomized admissible specializations.
 */
#pragma once

#include "ratfunc.hpp"
#include "shapes.hpp"
#include "tableau.hpp"

#include <random>

namespace gk {

struct DegenerateAssignment : std::runtime_error {
    DegenerateAssignment() : std::runtime_error("assignment hit a degenerate value") {}
};

// Numeric values for beta and the a/b parameters; x and y stay symbolic.
struct Assignment {
    std::map<VarId, Rational> values;

    SparsePoly apply(const SparsePoly& p) const { return p.eval_partial(values); }
    RatFunc apply(const RatFunc& r) const { return r.eval_partial(values); }
};

// Uniform nonzero rational with numerator and denominator bounded by 99.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-99, 99), den(1, 99);
    Rational r;
    do {
        r = Rational(num(rng), den(rng));
    } while (r == 0);
    return r;
}

// Draws beta, a_1..a_amax (and b_1..b_bmax) so that all a_i are distinct
// and every 1 + beta a_i and 1 + beta b_i is nonzero.
inline Assignment random_admissible(std::uint64_t seed, int amax, int bmax = 0) {
    std::mt19937_64 rng(seed);
    Assignment as;
    Rational bet = random_rational(rng);
    as.values[beta()] = bet;
    std::vector<Rational> used;
    auto draw = [&](bool distinct) {
        for (int tries = 0; tries < 1000; ++tries) {
            Rational v = random_rational(rng);
            if (1 + bet * v == 0) continue;
            if (distinct && std::find(used.begin(), used.end(), v) != used.end()) continue;
            if (distinct) used.push_back(v);
            return v;
        }
        throw DegenerateAssignment();
    };
    for (int i = 1; i <= amax; ++i) as.values[av(i)] = draw(true);
    for (int i = 1; i <= bmax; ++i) as.values[bv(i)] = draw(false);
    return as;
}

enum class GrothKind { Ordinary, FactorialA, FactorialB };

inline SparsePoly groth_poly(const SkewShape& theta, int n, GrothKind kind,
                             const Assignment* spec = nullptr) {
    SparsePoly sum;
    SparsePoly bvar = SparsePoly::var(beta());
    if (spec) bvar = spec->apply(bvar);
    for_each_svt(theta, n, -1, [&](const SetValuedTableau& T) {
        SparsePoly w = bvar.pow(T.excess());
        for (auto& [r, cell] : T.ordered_entries()) {
            SparsePoly xr = SparsePoly::var(xv(r));
            if (kind == GrothKind::Ordinary) {
                w *= xr;
            } else {
                int k = r + cell.content();
                SparsePoly ak = SparsePoly::var(
                    kind == GrothKind::FactorialA ? av(k) : bv(k));
                if (spec) ak = spec->apply(ak);
                w *= xr + ak + bvar * xr * ak;
            }
        }
        sum += w;
    });
    return sum;
}

inline SparsePoly groth_poly(const Partition& la, int n, GrothKind kind,
                             const Assignment* spec = nullptr) {
    return groth_poly(SkewShape(la), n, kind, spec);
}

// (a_la)_i = (-) a_{n+1-i+la_i}
inline std::vector<RatFunc> eval_point(const Partition& la, int n,
                                       const Assignment* spec = nullptr) {
    std::vector<RatFunc> out;
    for (int i = 1; i <= n; ++i) {
        RatFunc ai = ominus(RatFunc{SparsePoly::var(av(n + 1 - i + la.part(i)))});
        out.push_back(spec ? spec->apply(ai) : ai);
    }
    return out;
}

inline RatFunc pi_product(const std::vector<RatFunc>& vals) {
    RatFunc r{Rational(1)};
    RatFunc bvar{SparsePoly::var(beta())};
    for (auto& v : vals) r *= RatFunc(Rational(1)) + bvar * v;
    return r;
}

inline SparsePoly pi_x(int n) {
    SparsePoly r(Rational(1));
    for (int i = 1; i <= n; ++i)
        r *= SparsePoly(Rational(1)) + SparsePoly::var(beta()) * SparsePoly::var(xv(i));
    return r;
}

// 1 / Pi(a_la) = prod_i (1 + beta a_{n+1-i+la_i}), a polynomial
inline SparsePoly pi_eval_point_inverse(const Partition& la, int n,
                                        const Assignment* spec = nullptr) {
    SparsePoly r(Rational(1));
    for (int i = 1; i <= n; ++i) {
        SparsePoly f = SparsePoly(Rational(1)) +
                       SparsePoly::var(beta()) * SparsePoly::var(av(n + 1 - i + la.part(i)));
        r *= spec ? spec->apply(f) : f;
    }
    return r;
}

inline RatFunc pi_eval_point(const Partition& la, int n, const Assignment* spec = nullptr) {
    RatFunc::FactorMap den;
    for (int i = 1; i <= n; ++i) {
        SparsePoly f = SparsePoly(Rational(1)) +
                       SparsePoly::var(beta()) * SparsePoly::var(av(n + 1 - i + la.part(i)));
        if (spec) f = spec->apply(f);
        den[std::move(f)] += 1;
    }
    return RatFunc(SparsePoly(Rational(1)), std::move(den));
}

// G_la(x|a) evaluated at x = a_mu
inline RatFunc groth_at_eval_point(const SparsePoly& g, const Partition& mu, int n,
                                   const Assignment* spec = nullptr) {
    auto pt = eval_point(mu, n, spec);
    std::map<VarId, RatFunc> sub;
    for (int i = 1; i <= n; ++i) sub[xv(i)] = pt[i - 1];
    SparsePoly base = spec ? spec->apply(g) : g;
    return substitute(base, sub);
}

// prod over cells (i,j) of la of
//   (a_{n+j-la'_j} - a_{la_i+n-i+1}) / (1 + beta a_{la_i+n-i+1})
inline RatFunc closed_form_diagonal(const Partition& la, int n,
                                    const Assignment* spec = nullptr) {
    Partition conj = la.conjugate();
    RatFunc r{Rational(1)};
    for (int i = 1; i <= la.length(); ++i) {
        for (int j = 1; j <= la.part(i); ++j) {
            SparsePoly top = SparsePoly::var(av(n + j - conj.part(j))) -
                             SparsePoly::var(av(la.part(i) + n - i + 1));
            SparsePoly bot = SparsePoly(Rational(1)) +
                             SparsePoly::var(beta()) *
                                 SparsePoly::var(av(la.part(i) + n - i + 1));
            if (spec) {
                top = spec->apply(top);
                bot = spec->apply(bot);
            }
            r *= RatFunc(top, bot);
        }
    }
    return r;
}

enum class VanishKind { Zero, NonzeroDiagonal, Other };

struct VanishResult {
    VanishKind kind;
    RatFunc value;
};

inline VanishResult vanishing_check(const Partition& la, const Partition& mu, int n,
                                    const Assignment* spec = nullptr) {
    SparsePoly g = groth_poly(la, n, GrothKind::FactorialA, spec);
    RatFunc v = groth_at_eval_point(g, mu, n, spec);
    if (v.is_zero()) return {VanishKind::Zero, v};
    if (la == mu) return {VanishKind::NonzeroDiagonal, v};
    return {VanishKind::Other, v};
}

inline bool symmetry_test(const SparsePoly& g, int n) {
    for (int i = 1; i < n; ++i)
        if (g.swapped(xv(i), xv(i + 1)) != g) return false;
    return true;
}

// monomial symmetric polynomial m_la(x_1..x_n)
inline SparsePoly monomial_sym(const Partition& la, int n) {
    SparsePoly out;
    if (la.length() > n) return out;
    std::vector<int> exp(n, 0);
    for (int i = 0; i < la.length(); ++i) exp[i] = la.part(i + 1);
    std::sort(exp.begin(), exp.end());
    do {
        Monomial m;
        for (int i = 0; i < n; ++i)
            if (exp[i] > 0) m.exps[xv(i + 1)] = exp[i];
        out.add_term(m, 1);
    } while (std::next_permutation(exp.begin(), exp.end()));
    return out;
}

// For symmetric g: the coefficient (in the remaining variables) of each
// m_la, read off the sorted-exponent representative monomials.
inline std::map<Partition, SparsePoly> monomial_sym_coefficients(const SparsePoly& g,
                                                                 int n) {
    std::map<Partition, SparsePoly> out;
    for (auto& [m, c] : g.terms()) {
        std::vector<int> exp(n, 0);
        Monomial rest;
        for (auto& [v, e] : m.exps) {
            if (v.family == VarFamily::X) {
                if (v.index < 1 || v.index > n)
                    throw std::invalid_argument("x variable outside range");
                exp[v.index - 1] = e;
            } else {
                rest.exps[v] = e;
            }
        }
        bool sorted = true;
        for (int i = 1; i < n; ++i)
            if (exp[i] > exp[i - 1]) sorted = false;
        if (!sorted) continue;  // not the representative of its orbit
        while (!exp.empty() && exp.back() == 0) exp.pop_back();
        out[Partition(exp)].add_term(rest, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// Transition matrix D_k: rows indexed by partitions rho in the k x n box in
// enumeration order, columns by la, entry = coefficient of m_la in
// G_rho(x|a).
struct TransitionMatrix {
    std::vector<Partition> index;
    std::vector<std::vector<SparsePoly>> entry;
};

inline TransitionMatrix transition_matrix(int k, int n, const Assignment* spec = nullptr) {
    TransitionMatrix D;
    D.index = partitions_in_box(n, k);
    for (auto& rho : D.index) {
        SparsePoly g = groth_poly(rho, n, GrothKind::FactorialA, spec);
        auto coeffs = monomial_sym_coefficients(g, n);
        std::vector<SparsePoly> row;
        for (auto& la : D.index) {
            auto it = coeffs.find(la);
            row.push_back(it == coeffs.end() ? SparsePoly() : it->second);
            if (it != coeffs.end()) coeffs.erase(it);
        }
        // entries outside the box would mean the matrix is not square
        for (auto& [la, c] : coeffs)
            if (!c.is_zero() && la.length() <= n &&
                (la.empty() || la.part(1) <= k))
                throw std::logic_error("transition matrix index set too small");
        D.entry.push_back(std::move(row));
    }
    return D;
}

// Determinant by Leibniz expansion; the matrices here are tiny.
inline SparsePoly matrix_determinant(const std::vector<std::vector<SparsePoly>>& m) {
    size_t d = m.size();
    std::vector<int> perm(d);
    for (size_t i = 0; i < d; ++i) perm[i] = (int)i;
    SparsePoly det;
    do {
        int inv = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inv;
        SparsePoly prod(Rational(inv % 2 ? -1 : 1));
        for (size_t i = 0; i < d && !prod.is_zero(); ++i) prod *= m[i][perm[i]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace gk
