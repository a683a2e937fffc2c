/*
 * coeffs.hpp
 * ----------
 * Expansion coefficients g^nu_mu of a symmetric polynomial P in the
 * factorial basis, computed along four independent routes:
 *
 *   - vanishing interpolation over a box of partitions,
 *   - the Pieri recurrence in Pi(a_rho) values,
 *   - the closed chain-sum solution of that recurrence,
 *   - for row shapes theta, the barred-tableau sum, and for ordinary
 *     (a = 0) coefficients the combinatorial rules: driving chains by
 *     the column word, and the lattice-word rules on la * mu and on a
 *     skew shape.
 */
#pragma once

#include "groth.hpp"
#include "insertion.hpp"
#include "ratfunc.hpp"

#include <functional>
#include <memory>

namespace gk {

struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("polynomial is not symmetric in x") {}
};
struct NotRowShape : std::runtime_error {
    NotRowShape() : std::runtime_error("shape has two cells in one column") {}
};

using PEval = std::function<RatFunc(const Partition&)>;

// P(a_rho) for P a polynomial in x (coefficients may involve beta, a, b)
inline PEval make_poly_evaluator(SparsePoly P, int n, const Assignment* spec = nullptr) {
    auto memo = std::make_shared<std::map<Partition, RatFunc>>();
    if (spec) P = spec->apply(P);
    return [P = std::move(P), n, spec, memo](const Partition& rho) -> RatFunc {
        auto it = memo->find(rho);
        if (it != memo->end()) return it->second;
        RatFunc v = groth_at_eval_point(P, rho, n, spec);
        memo->emplace(rho, v);
        return v;
    };
}

inline PEval make_groth_b_evaluator(const SkewShape& theta, int n,
                                    const Assignment* spec = nullptr) {
    return make_poly_evaluator(groth_poly(theta, n, GrothKind::FactorialB, spec), n, spec);
}

// eta with eta => nu by a strip (distinct rows and columns), eta != nu
inline std::vector<Partition> tangle_predecessors(const Partition& nu) {
    std::vector<Partition> out;
    int rows = nu.length();
    for (unsigned mask = 1; mask < (1u << rows); ++mask) {
        std::vector<int> p(nu.parts());
        for (int r = 0; r < rows; ++r)
            if (mask & (1u << r)) --p[r];
        bool part_ok = true;
        for (int r = 0; r < rows; ++r)
            if (p[r] < 0 || (r + 1 < rows && p[r] < p[r + 1])) part_ok = false;
        if (!part_ok) continue;
        Partition eta(p);
        if (is_tangle_step(eta, nu)) out.push_back(eta);
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return GradedLexLess()(a, b); });
    return out;
}

using CoeffMemo = std::map<std::pair<Partition, Partition>, RatFunc>;

// Pieri recurrence:
//   g^nu_mu (Pi(a_nu) - Pi(a_mu)) =
//       sum_{mu => la, la != mu, la <= nu} Pi(a_mu) beta^{|la/mu|} g^nu_la
//     - sum_{eta => nu, eta != nu, eta >= mu} Pi(a_eta) beta^{|nu/eta|} g^eta_mu
// with g^mu_mu = P(a_mu) and g^nu_mu = 0 unless mu <= nu.
inline RatFunc recurrence_coefficient(const PEval& P, const Partition& mu,
                                      const Partition& nu, int n,
                                      const Assignment* spec = nullptr,
                                      CoeffMemo* memo = nullptr) {
    CoeffMemo local;
    CoeffMemo& m = memo ? *memo : local;
    std::function<RatFunc(const Partition&, const Partition&)> go =
        [&](const Partition& mu_, const Partition& nu_) -> RatFunc {
        if (!nu_.contains(mu_)) return RatFunc();
        if (mu_ == nu_) return P(mu_);
        auto key = std::make_pair(mu_, nu_);
        auto it = m.find(key);
        if (it != m.end()) return it->second;

        RatFunc bvar{SparsePoly::var(beta())};
        if (spec) bvar = spec->apply(bvar);
        RatFunc pim = pi_eval_point(mu_, n, spec);
        RatFunc pin = pi_eval_point(nu_, n, spec);
        RatFunc denom = pin - pim;
        if (denom.is_zero()) throw DegenerateAssignment();

        RatFunc acc;
        for (auto& la : tangle_successors_within(mu_, nu_)) {
            if (la == mu_) continue;
            RatFunc bp{Rational(1)};
            for (int k = 0; k < la.size() - mu_.size(); ++k) bp *= bvar;
            acc += pim * bp * go(la, nu_);
        }
        for (auto& eta : tangle_predecessors(nu_)) {
            if (!eta.contains(mu_)) continue;
            RatFunc bp{Rational(1)};
            for (int k = 0; k < nu_.size() - eta.size(); ++k) bp *= bvar;
            acc -= pi_eval_point(eta, n, spec) * bp * go(mu_, eta);
        }
        RatFunc val = acc / denom;
        m.emplace(key, val);
        return val;
    };
    return go(mu, nu);
}

// Strict chains mu = rho_0 => rho_1 => ... => rho_l = nu
inline std::vector<std::vector<Partition>> tangle_chains(const Partition& mu,
                                                         const Partition& nu) {
    std::vector<std::vector<Partition>> out;
    if (!nu.contains(mu)) return out;
    std::vector<Partition> cur{mu};
    std::function<void()> rec = [&]() {
        if (cur.back() == nu) {
            out.push_back(cur);
            return;
        }
        for (auto& next : tangle_successors_within(cur.back(), nu)) {
            if (next == cur.back()) continue;
            cur.push_back(next);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

// Closed solution of the recurrence:
//   g^nu_mu = beta^{|nu/mu|} sum over strict chains R of
//       Pi(rho_0) ... Pi(rho_{l-1})
//       sum_k P(a_{rho_k}) prod_{i != k} 1 / (Pi(rho_k) - Pi(rho_i))
inline RatFunc chain_sum_coefficient(const PEval& P, const Partition& mu,
                                     const Partition& nu, int n,
                                     const Assignment* spec = nullptr) {
    if (!nu.contains(mu)) return RatFunc();
    RatFunc bvar{SparsePoly::var(beta())};
    if (spec) bvar = spec->apply(bvar);
    std::map<Partition, RatFunc> pis;
    auto pi_of = [&](const Partition& rho) -> const RatFunc& {
        auto it = pis.find(rho);
        if (it == pis.end()) it = pis.emplace(rho, pi_eval_point(rho, n, spec)).first;
        return it->second;
    };
    RatFunc total;
    for (auto& chain : tangle_chains(mu, nu)) {
        size_t l = chain.size() - 1;
        RatFunc prefix{Rational(1)};
        for (size_t i = 0; i < l; ++i) prefix *= pi_of(chain[i]);
        RatFunc inner;
        for (size_t k = 0; k <= l; ++k) {
            RatFunc term = P(chain[k]);
            for (size_t i = 0; i <= l; ++i) {
                if (i == k) continue;
                RatFunc diff = pi_of(chain[k]) - pi_of(chain[i]);
                if (diff.is_zero()) throw DegenerateAssignment();
                term /= diff;
            }
            inner += term;
        }
        total += prefix * inner;
    }
    RatFunc bp{Rational(1)};
    for (int k = 0; k < nu.size() - mu.size(); ++k) bp *= bvar;
    return bp * total;
}

// Vanishing interpolation: d_mu determined over the box (cap^n) in
// enumeration order via d_mu = (P(a_mu) - sum_{rho < mu} d_rho
// G_rho(a_mu|a)) / G_mu(a_mu|a).
inline std::map<Partition, RatFunc> expand_in_factorial_basis(
    const SparsePoly& P, int n, int box_cap, const Assignment* spec = nullptr) {
    {
        SparsePoly xpart = P;  // symmetry concerns the x variables only
        if (!symmetry_test(xpart, n)) throw NotSymmetric();
    }
    auto grid = partitions_in_box(n, box_cap);
    auto Pat = make_poly_evaluator(P, n, spec);
    std::map<Partition, SparsePoly> gpoly;
    for (auto& rho : grid) gpoly[rho] = groth_poly(rho, n, GrothKind::FactorialA, spec);
    std::map<Partition, RatFunc> d;
    for (auto& mu : grid) {
        RatFunc rhs = Pat(mu);
        for (auto& rho : grid) {
            if (rho == mu) break;
            if (!mu.contains(rho) || rho == mu) continue;
            auto dit = d.find(rho);
            if (dit == d.end() || dit->second.is_zero()) continue;
            rhs -= dit->second * groth_at_eval_point(gpoly[rho], mu, n, spec);
        }
        if (mu.empty()) {
            d[mu] = rhs;
            continue;
        }
        RatFunc diag = groth_at_eval_point(gpoly[mu], mu, n, spec);
        if (diag.is_zero()) throw DegenerateAssignment();
        d[mu] = rhs / diag;
    }
    return d;
}

inline RatFunc reconstruct_factorial_expansion(const std::map<Partition, RatFunc>& d,
                                               int n, const Assignment* spec = nullptr) {
    RatFunc sum;
    for (auto& [mu, c] : d) {
        if (c.is_zero()) continue;
        sum += c * RatFunc(groth_poly(mu, n, GrothKind::FactorialA, spec));
    }
    return sum;
}

// Expansion of a symmetric polynomial in beta and x in the basis of the
// ordinary polynomials, by peeling coefficients.  The lowest-degree part of
// G_mu is the Schur polynomial s_mu, whose monomials x^la satisfy la <= mu
// in dominance, so the peeling order must ascend in degree but descend
// within a degree: then the coefficient of x^la in the residual is exactly
// the coefficient of G_la.
inline std::map<Partition, SparsePoly> expand_in_ordinary_basis(const SparsePoly& P,
                                                                int n) {
    if (!symmetry_test(P, n)) throw NotSymmetric();
    int cap = 0;
    for (int i = 1; i <= n; ++i) cap = std::max(cap, P.degree_in(xv(i)));
    auto grid = partitions_in_box(n, cap);
    std::stable_sort(grid.begin(), grid.end(),
                     [](const Partition& a, const Partition& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return GradedLexLess()(b, a);
                     });
    std::map<Partition, SparsePoly> out;
    SparsePoly residual = P;
    for (auto& la : grid) {
        // coefficient of the representative monomial x^la
        Monomial rep;
        for (int i = 1; i <= la.length(); ++i) rep.exps[xv(i)] = la.part(i);
        SparsePoly c;
        for (auto& [m, cc] : residual.terms()) {
            Monomial xs, rest;
            for (auto& [v, e] : m.exps)
                (v.family == VarFamily::X ? xs : rest).exps[v] = e;
            if (xs == rep) c.add_term(rest, cc);
        }
        if (c.is_zero()) continue;
        residual -= c * groth_poly(la, n, GrothKind::Ordinary);
        out[la] = std::move(c);
    }
    if (!residual.is_zero())
        throw std::logic_error("expansion in the ordinary basis left a remainder");
    return out;
}

// G_la(x) Pi(x) = sum_{la => mu} beta^{|mu/la|} G_mu(x)
inline bool pieri_identity_check_ordinary(const Partition& la, int n) {
    SparsePoly lhs = groth_poly(la, n, GrothKind::Ordinary) * pi_x(n);
    SparsePoly rhs;
    SparsePoly b = SparsePoly::var(beta());
    for (auto& mu : tangle_successors(la, std::max(n, la.length()),
                                      la.empty() ? 1 : la.part(1) + 1))
        rhs += b.pow(mu.size() - la.size()) * groth_poly(mu, n, GrothKind::Ordinary);
    return lhs == rhs;
}

// G_la(x|a) Pi(x) = Pi(a_la) sum_{la => mu} beta^{|mu/la|} G_mu(x|a),
// cleared of the denominator 1/Pi(a_la).
inline bool pieri_identity_check_factorial(const Partition& la, int n) {
    SparsePoly lhs = groth_poly(la, n, GrothKind::FactorialA) * pi_x(n) *
                     pi_eval_point_inverse(la, n);
    SparsePoly rhs;
    SparsePoly b = SparsePoly::var(beta());
    for (auto& mu : tangle_successors(la, std::max(n, la.length()),
                                      la.empty() ? 1 : la.part(1) + 1))
        rhs += b.pow(mu.size() - la.size()) * groth_poly(mu, n, GrothKind::FactorialA);
    return lhs == rhs;
}

// Theorem rule: c^nu_{theta mu} = beta^{|nu|-|mu|-|theta|} * number of
// fillings of theta whose column word drives mu up to nu box by box.
inline SparsePoly lr_combinatorial(const SkewShape& theta, const Partition& mu,
                                   const Partition& nu, int n) {
    int t = nu.size() - mu.size();
    if (!nu.contains(mu) || t < theta.size()) return SparsePoly();
    long count = 0;
    for_each_svt(theta, n, t, [&](const SetValuedTableau& T) {
        if (T.total_entries() == t && fits_sequence(T.column_word(), mu, nu)) ++count;
    });
    Monomial m;
    if (t - theta.size() > 0) m.exps[beta()] = t - theta.size();
    return SparsePoly::term(Rational(count), m);
}

// Lattice-word rule on la * mu
inline SparsePoly buch_rule_b1(const Partition& la, const Partition& mu,
                               const Partition& nu, int n) {
    SkewShape shape = star_concatenate(la, mu);
    int t = nu.size();
    if (t < shape.size()) return SparsePoly();
    long count = 0;
    for_each_svt(shape, n, t, [&](const SetValuedTableau& T) {
        if (T.total_entries() != t) return;
        if (!is_lattice_word(T.column_word(), n)) return;
        auto cnt = T.content();
        for (int i = 1; i <= n; ++i)
            if (cnt[i - 1] != nu.part(i)) return;
        ++count;
    });
    Monomial m;
    if (t - shape.size() > 0) m.exps[beta()] = t - shape.size();
    return SparsePoly::term(Rational(count), m);
}

// Lattice-word rule on a skew shape; the printed statement carries no beta
// power, the one matching the grids is beta^{|nu| - |theta|}.
inline SparsePoly buch_rule_b2(const SkewShape& theta, const Partition& nu, int n) {
    int t = nu.size();
    if (t < theta.size()) return SparsePoly();
    long count = 0;
    for_each_svt(theta, n, t, [&](const SetValuedTableau& T) {
        if (T.total_entries() != t) return;
        if (!is_lattice_word(T.column_word(), n)) return;
        auto cnt = T.content();
        for (int i = 1; i <= n; ++i)
            if (cnt[i - 1] != nu.part(i)) return;
        ++count;
    });
    Monomial m;
    if (t - theta.size() > 0) m.exps[beta()] = t - theta.size();
    return SparsePoly::term(Rational(count), m);
}

// Chains mu -> ... -> nu adding one box at a time; each chain is the list
// of row indices together with the partition prefixes.
struct BoxChain {
    std::vector<int> rows;
    std::vector<Partition> prefixes;  // rho^(0) = mu ... rho^(l) = nu
};

inline std::vector<BoxChain> box_chains(const Partition& mu, const Partition& nu) {
    std::vector<BoxChain> out;
    if (!nu.contains(mu)) return out;
    BoxChain cur;
    cur.prefixes.push_back(mu);
    std::function<void()> rec = [&]() {
        Partition top = cur.prefixes.back();
        if (top == nu) {
            out.push_back(cur);
            return;
        }
        for (int r = 1; r <= nu.length(); ++r) {
            if (top.part(r) < nu.part(r) && top.addable({r, top.part(r) + 1})) {
                cur.rows.push_back(r);
                cur.prefixes.push_back(top.with_box(r));
                rec();
                cur.rows.pop_back();
                cur.prefixes.pop_back();
            }
        }
    };
    rec();
    return out;
}

// Barred-tableau rule for a shape with no repeated columns:
//   g^nu_{theta mu} = sum over chains R and fillings T with a bar
//   subsequence matching the rows of R of  beta^{excess}
//     prod_{unbarred (r, cell)} (a_{rho(r)})_r (+) b_{r + content}
//     prod_{bars t} (1 + beta (a_{rho^{(t-1)}})_{r_t}) (1 + beta b_{r_t + content})
inline RatFunc row_shape_rule(const SkewShape& theta, const Partition& mu,
                              const Partition& nu, int n,
                              const Assignment* spec = nullptr) {
    if (theta.has_column_repeat()) throw NotRowShape();
    if (!nu.contains(mu)) return RatFunc();

    auto chains = box_chains(mu, nu);
    if (chains.empty()) return RatFunc();

    RatFunc one{Rational(1)};
    RatFunc bvar{SparsePoly::var(beta())};
    if (spec) bvar = spec->apply(bvar);
    std::map<Partition, std::vector<RatFunc>> pts;
    auto coord = [&](const Partition& rho, int r) -> const RatFunc& {
        auto it = pts.find(rho);
        if (it == pts.end()) it = pts.emplace(rho, eval_point(rho, n, spec)).first;
        return it->second.at(r - 1);
    };
    auto bval = [&](int idx) {
        RatFunc v{SparsePoly::var(bv(idx))};
        return spec ? spec->apply(v) : v;
    };

    RatFunc total;
    for_each_svt(theta, n, -1, [&](const SetValuedTableau& T) {
        auto entries = T.ordered_entries();
        RatFunc excess{Rational(1)};
        for (int k = 0; k < T.excess(); ++k) excess *= bvar;
        for (auto& chain : chains) {
            size_t l = chain.rows.size();
            // choose bar positions j_1 < ... < j_l with matching values
            std::vector<size_t> bars(l);
            std::function<void(size_t, size_t)> pick = [&](size_t t, size_t from) {
                if (t == l) {
                    RatFunc w = excess;
                    size_t seg = 0, next = 0;
                    for (size_t idx = 0; idx < entries.size(); ++idx) {
                        auto [r, cell] = entries[idx];
                        if (next < l && idx == bars[next]) {
                            w *= (one + bvar * coord(chain.prefixes[next], r)) *
                                 (one + bvar * bval(r + cell.content()));
                            seg = ++next;
                        } else {
                            const RatFunc& xc = coord(chain.prefixes[seg], r);
                            RatFunc yc = bval(r + cell.content());
                            w *= xc + yc + bvar * xc * yc;
                        }
                    }
                    total += w;
                    return;
                }
                for (size_t j = from; j < entries.size(); ++j) {
                    if (entries[j].first == chain.rows[t]) {
                        bars[t] = j;
                        pick(t + 1, j + 1);
                    }
                }
            };
            pick(0, 0);
        }
    });
    return total;
}

// Sets every a and b parameter of a value to zero (beta survives).
inline RatFunc at_ab_zero(const RatFunc& r) {
    std::map<VarId, Rational> zeros;
    auto collect = [&](const SparsePoly& p) {
        for (VarId v : p.variables())
            if (v.family == VarFamily::A || v.family == VarFamily::B) zeros[v] = 0;
    };
    collect(r.num());
    for (auto& [f, m] : r.den_factors()) collect(f);
    return r.eval_partial(zeros);
}

}  // namespace gk
