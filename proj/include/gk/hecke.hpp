/*
 * hecke.hpp
 * ---------
 * The algebra H_n over R[x]: generators u_1..u_n with u_i^2 = beta u_i
 * and the braid relations, basis u_w for w in S_{n+1}.  On top of it sit
 * the h_i / A_i / B_i products, the two constructions of the double
 * Grothendieck polynomials (divided differences from the top element,
 * and coefficients of the generating product), the stable polynomials,
 * and the module V with its diagonal u_i action.
 */
#pragma once

#include "groth.hpp"
#include "shapes.hpp"

#include <functional>

namespace gk {

struct MismatchedN : std::invalid_argument {
    MismatchedN() : std::invalid_argument("elements of different Hecke algebras") {}
};
struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

class HeckeElement {
public:
    // the zero element of H_n
    explicit HeckeElement(int n) : n_(n) {}

    static HeckeElement scalar(int n, SparsePoly c) {
        HeckeElement e(n);
        e.add(Permutation::identity(n + 1), std::move(c));
        return e;
    }
    static HeckeElement generator(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("generator index");
        HeckeElement e(n);
        e.add(Permutation::transposition(n + 1, i), SparsePoly(Rational(1)));
        return e;
    }

    int n() const { return n_; }
    const std::map<Permutation, SparsePoly>& terms() const { return terms_; }
    SparsePoly coeff(const Permutation& w) const {
        auto it = terms_.find(w.degree() == n_ + 1 ? w : w.extended(n_ + 1));
        return it == terms_.end() ? SparsePoly() : it->second;
    }

    void add(Permutation w, SparsePoly c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // right multiplication by the generator u_i
    HeckeElement times_u(int i) const {
        HeckeElement out(n_);
        SparsePoly b = SparsePoly::var(beta());
        for (auto& [w, c] : terms_) {
            if (w.ascent(i))
                out.add(w.right_mult_s(i), c);
            else
                out.add(w, b * c);
        }
        return out;
    }

    friend HeckeElement operator+(const HeckeElement& p, const HeckeElement& q) {
        if (p.n_ != q.n_) throw MismatchedN();
        HeckeElement out = p;
        for (auto& [w, c] : q.terms_) out.add(w, c);
        return out;
    }
    friend HeckeElement operator*(const SparsePoly& c, const HeckeElement& p) {
        HeckeElement out(p.n_);
        for (auto& [w, pc] : p.terms_) out.add(w, c * pc);
        return out;
    }
    // coefficients are central, so A (c u_v) = (c A) u_v with u_v applied
    // one generator at a time along a reduced word of v
    friend HeckeElement operator*(const HeckeElement& p, const HeckeElement& q) {
        if (p.n_ != q.n_) throw MismatchedN();
        HeckeElement out(p.n_);
        for (auto& [v, c] : q.terms_) {
            HeckeElement piece = c * p;
            for (int i : v.reduced_word()) piece = piece.times_u(i);
            out = out + piece;
        }
        return out;
    }
    friend bool operator==(const HeckeElement& p, const HeckeElement& q) {
        return p.n_ == q.n_ && p.terms_ == q.terms_;
    }

private:
    int n_;
    std::map<Permutation, SparsePoly> terms_;
};

inline HeckeElement h_factor(int n, int i, const SparsePoly& t) {
    return HeckeElement::scalar(n, SparsePoly(Rational(1))) + t * HeckeElement::generator(n, i);
}

// A_i(x) = h_n(x) h_{n-1}(x) ... h_i(x)
inline HeckeElement a_product(int n, int i, const SparsePoly& x) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int j = n; j >= i; --j) out = out * h_factor(n, j, x);
    return out;
}
// B_i(x) = h_i(x) h_{i+1}(x) ... h_n(x)
inline HeckeElement b_product(int n, int i, const SparsePoly& x) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int j = i; j <= n; ++j) out = out * h_factor(n, j, x);
    return out;
}

// GG(x) = A_1(x_1) ... A_n(x_n)
inline HeckeElement gg_product(int n) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int i = 1; i <= n; ++i) out = out * a_product(n, i, SparsePoly::var(xv(i)));
    return out;
}
// GGbar(y) = B_n(y_n) ... B_1(y_1)
inline HeckeElement gg_bar_product(int n) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int i = n; i >= 1; --i) out = out * b_product(n, i, SparsePoly::var(yv(i)));
    return out;
}

// pi_i f = ((1+beta x_{i+1}) f - (1+beta x_i) s_i f) / (x_i - x_{i+1})
inline SparsePoly divided_difference(int i, const SparsePoly& f) {
    SparsePoly one(Rational(1));
    SparsePoly b = SparsePoly::var(beta());
    SparsePoly sf = f.swapped(xv(i), xv(i + 1));
    SparsePoly num = (one + b * SparsePoly::var(xv(i + 1))) * f -
                     (one + b * SparsePoly::var(xv(i))) * sf;
    return exact_div_by_linear(num, i);
}

// GG_w by descending pi-recursion from GG_{w0} = prod_{i+j<=n+1} x_i (+) y_j
inline SparsePoly double_groth_dd(const Permutation& w_in, int n,
                                  std::map<Permutation, SparsePoly>* memo = nullptr) {
    Permutation w = w_in.degree() == n + 1 ? w_in : w_in.extended(n + 1);
    std::map<Permutation, SparsePoly> local;
    std::map<Permutation, SparsePoly>& m = memo ? *memo : local;
    std::function<const SparsePoly&(const Permutation&)> go =
        [&](const Permutation& u) -> const SparsePoly& {
        auto it = m.find(u);
        if (it != m.end()) return it->second;
        SparsePoly g;
        if (u.length() == n * (n + 1) / 2) {  // the longest element
            g = SparsePoly(Rational(1));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; i + j <= n + 1; ++j)
                    g *= oplus(SparsePoly::var(xv(i)), SparsePoly::var(yv(j)));
        } else {
            int asc = 0;
            for (int i = 1; i <= n; ++i)
                if (u.ascent(i)) {
                    asc = i;
                    break;
                }
            g = divided_difference(asc, go(u.right_mult_s(asc)));
        }
        return m.emplace(u, std::move(g)).first->second;
    };
    return go(w);
}

// GG_w as the coefficient of u_w in GGbar(y) GG(x)
inline SparsePoly double_groth_gen(const Permutation& w, int n) {
    return (gg_bar_product(n) * gg_product(n)).coeff(w);
}

// coefficient of u_w in B(y_l) ... B(y_1) A(x_1) ... A(x_k)
inline HeckeElement stable_product(int k, int l, int n) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int j = l; j >= 1; --j) out = out * b_product(n, 1, SparsePoly::var(yv(j)));
    for (int m = 1; m <= k; ++m) out = out * a_product(n, 1, SparsePoly::var(xv(m)));
    return out;
}
inline SparsePoly stable_double_groth(const Permutation& w, int k, int l, int n) {
    return stable_product(k, l, n).coeff(w);
}

// The module V with the diagonal action at offset p: u_i adds a box at
// the addable corner on diagonal i, multiplies by beta at a removable
// box on diagonal i, and kills the term otherwise.
struct VElement {
    std::map<Partition, SparsePoly> terms;

    void add(Partition mu, SparsePoly c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(std::move(mu), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    SparsePoly coeff(const Partition& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? SparsePoly() : it->second;
    }
};

inline VElement v_basis(const Partition& mu) {
    VElement v;
    v.add(mu, SparsePoly(Rational(1)));
    return v;
}

inline VElement v_apply_u(int i, int p, const VElement& v) {
    VElement out;
    SparsePoly b = SparsePoly::var(beta());
    for (auto& [mu, c] : v.terms) {
        bool done = false;
        for (int r = 1; r <= mu.length() + 1 && !done; ++r) {
            Cell cell{r, mu.part(r) + 1};
            if (mu.addable(cell) && p + cell.content() == i) {
                out.add(mu.with_box(r), c);
                done = true;
            }
        }
        for (int r = 1; r <= mu.length() && !done; ++r) {
            Cell cell{r, mu.part(r)};
            if (mu.removable(cell) && p + cell.content() == i) {
                out.add(mu, b * c);
                done = true;
            }
        }
        // otherwise the term dies
    }
    return out;
}

inline VElement v_apply(const HeckeElement& h, int p, const VElement& v) {
    VElement out;
    for (auto& [w, c] : h.terms()) {
        VElement piece = v;
        auto word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            piece = v_apply_u(*it, p, piece);
        for (auto& [mu, pc] : piece.terms) out.add(mu, c * pc);
    }
    return out;
}

// h_i(t) acting on V directly: v + t u_i v
inline VElement v_apply_h(int i, const SparsePoly& t, int p, const VElement& v) {
    VElement out = v;
    VElement moved = v_apply_u(i, p, v);
    for (auto& [mu, c] : moved.terms) out.add(mu, t * c);
    return out;
}

// Q = prod_{m=k..1} prod_{i=n..1} h_i(x_m (+) y_{m+i-p}); y with index < 1
// is set to zero
inline SparsePoly q_factor_arg(int m, int i, int p) {
    SparsePoly xm = SparsePoly::var(xv(m));
    int yidx = m + i - p;
    if (yidx < 1) return xm;
    return oplus(xm, SparsePoly::var(yv(yidx)));
}

inline HeckeElement q_product(int k, int n, int p) {
    HeckeElement out = HeckeElement::scalar(n, SparsePoly(Rational(1)));
    for (int m = k; m >= 1; --m)
        for (int i = n; i >= 1; --i) out = out * h_factor(n, i, q_factor_arg(m, i, p));
    return out;
}

inline VElement q_apply(int k, int n, int p, const VElement& v) {
    // factors act right to left
    VElement out = v;
    for (int m = 1; m <= k; ++m)
        for (int i = 1; i <= n; ++i) out = v_apply_h(i, q_factor_arg(m, i, p), p, out);
    return out;
}

// factorial polynomial with the a parameters renamed to y, same indices
inline SparsePoly rename_a_to_y(const SparsePoly& g) {
    SparsePoly out;
    for (auto& [m, c] : g.terms()) {
        Monomial nm;
        for (auto& [v, e] : m.exps)
            nm.exps[v.family == VarFamily::A ? yv(v.index) : v] = e;
        out.add_term(nm, c);
    }
    return out;
}

struct TheoremFinalResult {
    SparsePoly module_route;    // coefficient of [la] in Q[phi]
    SparsePoly factorial;       // G_la(x_1..x_k|y)
    SparsePoly basis_route;     // coefficient of u_{w(la)} in Q
    bool agree;
};

inline TheoremFinalResult theorem_final_check(const Partition& la, int p, int k, int n) {
    if (p < la.length()) throw PreconditionViolated("p must be at least the number of rows");
    if (n < p + la.part(1) - 1)
        throw PreconditionViolated("n must be at least p + la_1 - 1");
    TheoremFinalResult res;
    res.module_route = q_apply(k, n, p, v_basis(Partition{})).coeff(la);
    res.factorial = rename_a_to_y(groth_poly(la, k, GrothKind::FactorialA));
    res.basis_route = q_product(k, n, p).coeff(grassmannian_permutation(la, p).extended(n + 1));
    res.agree = res.module_route == res.factorial && res.factorial == res.basis_route;
    return res;
}

// Homogeneity with deg beta = -1 and deg x = deg y = deg a = deg b = 1.
inline bool homogeneous_of_degree(const SparsePoly& g, int d) {
    for (auto& [m, c] : g.terms()) {
        int deg = 0;
        for (auto& [v, e] : m.exps) deg += (v.family == VarFamily::Beta ? -e : e);
        if (deg != d) return false;
    }
    return true;
}

}  // namespace gk
