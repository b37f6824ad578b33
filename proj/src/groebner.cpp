// SPDX-License-Identifier: Apache-2.0
#include "tancode/groebner.hpp"

#include <algorithm>
#include <set>

namespace tancode {

MonomialOrder MonomialOrder::lex(size_t n) {
    MonomialOrder o;
    o.priority.resize(n);
    for (size_t i = 0; i < n; ++i) o.priority[i] = i;
    return o;
}

MonomialOrder MonomialOrder::eliminating(size_t n, std::vector<size_t> first) {
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());
    std::vector<bool> used(n, false);
    MonomialOrder o;
    for (size_t v : first) {
        if (v >= n) throw domain_error("eliminated variable out of range");
        o.priority.push_back(v);
        used[v] = true;
    }
    for (size_t v = 0; v < n; ++v)
        if (!used[v]) o.priority.push_back(v);
    return o;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    for (size_t v : priority) {
        uint32_t ea = a.exp(v), eb = b.exp(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::pair<Monomial, Element> leading_term(const MultiPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw domain_error("leading term of zero polynomial");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

DivisionResult divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& ord) {
    if (divisors.empty()) throw domain_error("division by empty list");
    for (const auto& d : divisors)
        if (d.is_zero()) throw domain_error("division by zero polynomial");

    const Field& fld = f.field();
    const size_t n = f.nvars();
    std::vector<std::pair<Monomial, Element>> lts;
    lts.reserve(divisors.size());
    for (const auto& d : divisors) lts.push_back(leading_term(d, ord));

    DivisionResult res{std::vector<MultiPoly>(divisors.size(), MultiPoly(fld, n)), MultiPoly(fld, n)};
    MultiPoly h = f;
    while (!h.is_zero()) {
        auto [hm, hc] = leading_term(h, ord);
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!lts[i].first.divides(hm)) continue;
            Monomial qm = hm.quotient(lts[i].first);
            Element qc = hc / lts[i].second;
            MultiPoly qt = MultiPoly::term(fld, n, qm, qc);
            res.quotients[i] = res.quotients[i] + qt;
            h = h - qt * divisors[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::term(fld, n, hm, hc);
            res.remainder = res.remainder + t;
            h = h - t;
        }
    }
    return res;
}

MultiPoly s_polynomial(const MultiPoly& h1, const MultiPoly& h2, const MonomialOrder& ord) {
    if (h1.is_zero() || h2.is_zero()) throw domain_error("S-polynomial of zero polynomial");
    auto [m1, c1] = leading_term(h1, ord);
    auto [m2, c2] = leading_term(h2, ord);
    Monomial g = Monomial::lcm(m1, m2);
    const Field& fld = h1.field();
    MultiPoly t1 = MultiPoly::term(fld, h1.nvars(), g.quotient(m1), c1.inverse());
    MultiPoly t2 = MultiPoly::term(fld, h2.nvars(), g.quotient(m2), c2.inverse());
    return t1 * h1 - t2 * h2;
}

namespace {

struct Entry {
    MultiPoly g;
    std::vector<MultiPoly> cof;  // over the input generators
    Monomial lm;
};

// divide with cofactor bookkeeping against the current basis
std::pair<MultiPoly, std::vector<MultiPoly>> reduce_tracked(const MultiPoly& f,
                                                            std::vector<MultiPoly> cof,
                                                            const std::vector<Entry>& basis,
                                                            const MonomialOrder& ord) {
    if (basis.empty()) return {f, std::move(cof)};
    std::vector<MultiPoly> divisors;
    divisors.reserve(basis.size());
    for (const auto& e : basis) divisors.push_back(e.g);
    DivisionResult dr = divide(f, divisors, ord);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (dr.quotients[i].is_zero()) continue;
        for (size_t j = 0; j < cof.size(); ++j) cof[j] = cof[j] - dr.quotients[i] * basis[i].cof[j];
    }
    return {dr.remainder, std::move(cof)};
}

void make_monic(Entry& e, const MonomialOrder& ord) {
    auto [m, c] = leading_term(e.g, ord);
    e.lm = m;
    if (c.is_one()) return;
    Element inv = c.inverse();
    e.g = e.g * inv;
    for (auto& cf : e.cof) cf = cf * inv;
}

bool coprime(const Monomial& a, const Monomial& b) {
    size_t n = std::max(a.nvars_used(), b.nvars_used());
    for (size_t i = 0; i < n; ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

}  // namespace

CofactorBasis buchberger_cofactors(const std::vector<MultiPoly>& F, const MonomialOrder& ord,
                                   const GroebnerBudget& budget) {
    if (F.empty()) throw domain_error("empty generator list");
    for (const auto& f : F)
        if (f.is_zero()) throw domain_error("zero polynomial among generators");
    const Field& fld = F.front().field();
    const size_t n = F.front().nvars();
    const size_t m = F.size();

    std::vector<Entry> basis;
    for (size_t j = 0; j < m; ++j) {
        Entry e{F[j], std::vector<MultiPoly>(m, MultiPoly(fld, n)), Monomial()};
        e.cof[j] = MultiPoly::constant(fld, n, fld.one());
        make_monic(e, ord);
        basis.push_back(std::move(e));
    }

    // normal strategy: pairs keyed by (lcm degree, i, j)
    using PairKey = std::tuple<uint32_t, size_t, size_t>;
    std::set<PairKey> pairs;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            pairs.insert({Monomial::lcm(basis[i].lm, basis[k].lm).total_degree(), i, k});
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(basis[i].lm, basis[j].lm)) continue;  // Buchberger's first criterion
        MultiPoly s = s_polynomial(basis[i].g, basis[j].g, ord);
        if (s.is_zero()) continue;
        // cofactors of the S-polynomial
        auto [m1, c1] = leading_term(basis[i].g, ord);
        auto [m2, c2] = leading_term(basis[j].g, ord);
        Monomial g = Monomial::lcm(m1, m2);
        MultiPoly t1 = MultiPoly::term(fld, n, g.quotient(m1), c1.inverse());
        MultiPoly t2 = MultiPoly::term(fld, n, g.quotient(m2), c2.inverse());
        std::vector<MultiPoly> scof(m, MultiPoly(fld, n));
        for (size_t k = 0; k < m; ++k) scof[k] = t1 * basis[i].cof[k] - t2 * basis[j].cof[k];

        auto [r, rcof] = reduce_tracked(s, std::move(scof), basis, ord);
        if (r.is_zero()) continue;
        Entry e{std::move(r), std::move(rcof), Monomial()};
        make_monic(e, ord);
        basis.push_back(std::move(e));
        if (basis.size() > budget.max_basis) throw budget_error("Groebner basis size budget exceeded");
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop entries whose leading monomial is divisible by another's
    std::vector<Entry> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lm.divides(basis[i].lm)) {
                // break ties so exactly one of two equal leading monomials survives
                if (basis[i].lm == basis[j].lm && i < j) continue;
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }

    // tail-reduce every kept element against the others, cofactors updated
    std::vector<Entry> reduced = kept;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Entry> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (others.empty()) break;
        auto [r, rcof] = reduce_tracked(reduced[i].g, reduced[i].cof, others, ord);
        Entry e{std::move(r), std::move(rcof), Monomial()};
        make_monic(e, ord);
        reduced[i] = std::move(e);
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const Entry& a, const Entry& b) { return ord.less(a.lm, b.lm); });

    CofactorBasis out{.basis = {}, .cofactors = {}, .order = ord};
    for (auto& e : reduced) {
        out.basis.push_back(std::move(e.g));
        out.cofactors.push_back(std::move(e.cof));
    }
    return out;
}

namespace {

bool uses_any_var(const MultiPoly& f, const std::vector<size_t>& vars) {
    for (const auto& [m, c] : f.terms())
        for (size_t v : vars)
            if (m.exp(v) > 0) return true;
    return false;
}

bool pure_power_of(const Monomial& m, size_t v) {
    if (m.exp(v) == 0) return false;
    for (size_t j = 0; j < m.nvars_used(); ++j)
        if (j != v && m.exp(j) > 0) return false;
    return true;
}

}  // namespace

EliminationResult elimination_basis(const std::vector<MultiPoly>& F, std::vector<size_t> elim,
                                    const GroebnerBudget& budget) {
    if (F.empty()) throw domain_error("empty generator list");
    const size_t n = F.front().nvars();
    MonomialOrder ord = MonomialOrder::eliminating(n, elim);
    CofactorBasis cb = buchberger_cofactors(F, ord, budget);
    EliminationResult res{.eliminants = {}, .cofactors = {}, .full = {}};
    for (size_t k = 0; k < cb.basis.size(); ++k) {
        if (uses_any_var(cb.basis[k], elim)) continue;
        res.eliminants.push_back(cb.basis[k]);
        res.cofactors.push_back(cb.cofactors[k]);
    }
    res.full = std::move(cb);
    return res;
}

bool puncturing_is_finite(const std::vector<MultiPoly>& F, const std::vector<size_t>& gamma,
                          const GroebnerBudget& budget) {
    if (gamma.empty()) return true;
    const size_t n = F.front().nvars();
    MonomialOrder ord = MonomialOrder::eliminating(n, gamma);
    CofactorBasis cb = buchberger_cofactors(F, ord, budget);
    for (size_t v : gamma) {
        bool found = false;
        for (const auto& g : cb.basis) {
            if (pure_power_of(leading_term(g, ord).first, v)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool puncturing_separable_heuristic(const std::vector<MultiPoly>& F,
                                    const std::vector<size_t>& gamma,
                                    const GroebnerBudget& budget) {
    if (gamma.empty()) return true;
    const size_t n = F.front().nvars();
    MonomialOrder ord = MonomialOrder::eliminating(n, gamma);
    CofactorBasis cb = buchberger_cofactors(F, ord, budget);
    for (size_t v : gamma) {
        const MultiPoly* minimal = nullptr;
        uint32_t mindeg = 0;
        for (const auto& g : cb.basis) {
            auto lm = leading_term(g, ord).first;
            if (!pure_power_of(lm, v)) continue;
            if (!minimal || lm.exp(v) < mindeg) {
                minimal = &g;
                mindeg = lm.exp(v);
            }
        }
        if (!minimal) return false;  // not finite in x_v
        MultiPoly der = minimal->partial_derivative(v);
        if (der.is_zero()) return false;
        if (divide(der, cb.basis, ord).remainder.is_zero()) return false;
    }
    return true;
}

}  // namespace tancode
