// SPDX-License-Identifier: Apache-2.0
#include "tancode/decode.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "tancode/util.hpp"

namespace tancode {

namespace {

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows != m.cols) throw domain_error("determinant of non-square polynomial matrix");
    const size_t n = m.rows;
    const MultiPoly& probe = m.entries.front();
    if (n == 1) return m.at(0, 0);
    MultiPoly acc(probe.field(), probe.nvars());
    // Laplace expansion along the first row; t stays small here
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor;
        minor.rows = minor.cols = n - 1;
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor.entries.push_back(m.at(r, c));
        MultiPoly term = m.at(0, j) * poly_det(minor);
        acc = (j % 2) ? acc - term : acc + term;
    }
    return acc;
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    const size_t n = m.rows;
    const MultiPoly& probe = m.entries.front();
    PolyMatrix adj;
    adj.rows = adj.cols = n;
    adj.entries.assign(n * n, MultiPoly(probe.field(), probe.nvars()));
    if (n == 1) {
        adj.at(0, 0) = MultiPoly::constant(probe.field(), probe.nvars(), probe.field().one());
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            minor.rows = minor.cols = n - 1;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) minor.entries.push_back(m.at(r, c));
            }
            MultiPoly cof = poly_det(minor);
            adj.at(j, i) = ((i + j) % 2) ? -cof : cof;
        }
    return adj;
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw domain_error("polynomial matrix product shape mismatch");
    const MultiPoly& probe = a.entries.front();
    PolyMatrix r;
    r.rows = a.rows;
    r.cols = b.cols;
    r.entries.assign(a.rows * b.cols, MultiPoly(probe.field(), probe.nvars()));
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix eval_poly_matrix(const PolyMatrix& m, const std::vector<Element>& a, const Field& f) {
    Matrix out(f, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j).evaluate(a);
    return out;
}

}  // namespace

const DecoderTables::TupleData& DecoderTables::tuple(const std::vector<size_t>& idx) const {
    for (const auto& td : tuples)
        if (td.idx == idx) return td;
    throw domain_error("coordinate tuple not present in the tables");
}

DecoderTables precompute(const AffineVariety& X, size_t t, const GroebnerBudget& budget,
                         unsigned jobs, uint64_t check_seed) {
    if (t < 1 || t >= X.nvars()) throw domain_error("error budget t must satisfy 1 <= t < n");
    const Field& f = X.field();
    const size_t n = X.nvars();
    const auto& F = X.generators();
    const size_t m = F.size();

    DecoderTables tables{f, X.base_degree(), n, t, F, {}, {}};

    // Step 1: eliminants per coordinate tuple (independent Buchberger runs)
    auto tuple_list = combinations(n, t);
    tables.tuples.resize(tuple_list.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string fail_msg;
    std::mutex fail_mutex;
    auto worker = [&] {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= tuple_list.size() || failed.load()) return;
            try {
                auto er = elimination_basis(F, tuple_list[k], budget);
                DecoderTables::TupleData td;
                td.idx = tuple_list[k];
                td.eliminants = std::move(er.eliminants);
                td.elim_jacobian = jacobian(td.eliminants);
                td.elim_jacobian.cols = n;  // empty eliminant lists keep the width
                tables.tuples[k] = std::move(td);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                failed.store(true);
                fail_msg = "tuple {";
                for (size_t v : tuple_list[k]) fail_msg += " x" + std::to_string(v + 1);
                fail_msg += " }: " + std::string(ex.what());
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw budget_error("precompute failed at " + fail_msg);

    // Step 2: determinants and adjugate products for every (j, i)
    PolyMatrix J = jacobian(F);
    for (const auto& rows : combinations(m, t)) {
        PolyMatrix Jrows;
        Jrows.rows = t;
        Jrows.cols = n;
        for (size_t r : rows)
            for (size_t c = 0; c < n; ++c) Jrows.entries.push_back(J.at(r, c));
        for (const auto& cols : combinations(n, t)) {
            PolyMatrix sub;
            sub.rows = sub.cols = t;
            for (size_t r = 0; r < t; ++r)
                for (size_t c : cols) sub.entries.push_back(Jrows.at(r, c));
            tables.dets.push_back(DecoderTables::DetData{rows, cols, poly_det(sub),
                                                         poly_mul(poly_adjugate(sub), Jrows)});
        }
    }

    // adjugate identity (df_j/dx_i) P_{ji} = Delta_{ji} (df_j/dx), spot-checked
    std::mt19937_64 rng(check_seed);
    auto scalars = f.subfield(f.degree());
    for (int trial = 0; trial < 20 && !tables.dets.empty(); ++trial) {
        std::vector<Element> a;
        for (size_t i = 0; i < n; ++i) a.push_back(scalars[rng() % scalars.size()]);
        const auto& dd = tables.dets[rng() % tables.dets.size()];
        Matrix sub(f, t, t);
        for (size_t r = 0; r < t; ++r)
            for (size_t c = 0; c < t; ++c)
                sub.at(r, c) = J.at(dd.rows[r], dd.cols[c]).evaluate(a);
        Matrix P = eval_poly_matrix(dd.adj_product, a, f);
        Matrix lhs = sub * P;
        Element delta = dd.delta.evaluate(a);
        for (size_t r = 0; r < t; ++r)
            for (size_t c = 0; c < n; ++c) {
                Element want = delta * J.at(dd.rows[r], c).evaluate(a);
                if (lhs.at(r, c) != want) throw std::logic_error("adjugate identity failed");
            }
    }
    return tables;
}

bool error_support_test(const DecoderTables& tables, const std::vector<Element>& a,
                        const std::vector<Element>& w, const std::vector<size_t>& idx) {
    for (const auto& g : tables.gens)
        if (!g.evaluate(a).is_zero()) throw domain_error("point does not lie on the variety");
    if (w.size() != tables.n) throw domain_error("word length mismatch");
    const auto& td = tables.tuple(idx);
    if (td.eliminants.empty()) return true;  // nothing cuts the cylinder
    Matrix Jg = eval_poly_matrix(td.elim_jacobian, a, tables.field);
    for (const auto& s : Jg.mul_vec(w))
        if (!s.is_zero()) return false;
    return true;
}

DecodeResult decode(const DecoderTables& tables, const std::vector<Element>& a,
                    const std::vector<Element>& w, std::optional<size_t> certified_d) {
    const Field& f = tables.field;
    const size_t n = tables.n;
    const size_t t = tables.t;
    if (w.size() != n) throw domain_error("word length mismatch");
    for (const auto& g : tables.gens)
        if (!g.evaluate(a).is_zero()) throw domain_error("point does not lie on the variety");

    Matrix H = jacobian_at(tables.gens, a);
    size_t d;
    if (certified_d) {
        d = *certified_d;
    } else {
        LinearCode code = LinearCode::from_parity(f, f.degree(), n, H);
        if (code.dim() == 0) throw domain_error("zero tangent code cannot be decoded");
        d = code.min_distance();
    }
    if (d < 2 * t + 1) throw domain_error("tangent code minimum distance below 2t+1");

    // Step 3: scan the tuples in lex order. At exceptional points (singular
    // image of the puncturing) the cylinder test can pass spuriously, so a
    // tuple is accepted only once its solved correction is tangent; below
    // half the minimum distance that correction is the unique error.
    bool saw_step4_failure = false;
    for (const auto& td : tables.tuples) {
        bool pass = true;
        if (!td.eliminants.empty()) {
            Matrix Jg = eval_poly_matrix(td.elim_jacobian, a, f);
            for (const auto& s : Jg.mul_vec(w))
                if (!s.is_zero()) {
                    pass = false;
                    break;
                }
        }
        if (!pass) continue;

        // Step 4: some generator tuple with Delta_{ji}(a) != 0
        const DecoderTables::DetData* chosen = nullptr;
        Element delta = f.zero();
        for (const auto& dd : tables.dets) {
            if (dd.cols != td.idx) continue;
            Element v = dd.delta.evaluate(a);
            if (!v.is_zero()) {
                chosen = &dd;
                delta = v;
                break;
            }
        }
        if (!chosen) {
            saw_step4_failure = true;
            continue;
        }

        // Step 5: e_i = Delta^{-1} P(a) w^t, zero elsewhere
        Matrix P = eval_poly_matrix(chosen->adj_product, a, f);
        std::vector<Element> ei = P.mul_vec(w);
        Element dinv = delta.inverse();
        std::vector<Element> err(n, f.zero());
        for (size_t r = 0; r < t; ++r) err[td.idx[r]] = ei[r] * dinv;

        std::vector<Element> code_word(n, f.zero());
        for (size_t j = 0; j < n; ++j) code_word[j] = w[j] - err[j];
        bool tangent = true;
        for (const auto& s : H.mul_vec(code_word))
            if (!s.is_zero()) {
                tangent = false;
                break;
            }
        if (!tangent) continue;  // spurious syndrome pass
        return DecodeResult{std::move(code_word), std::move(err), td.idx};
    }
    if (saw_step4_failure)
        throw domain_error(
            "a passing tuple had no invertible generator minor; decoder preconditions violated");
    throw domain_error("received word has no error of weight <= t");
}

std::optional<std::vector<Element>> coset_leader(const DecoderTables& tables,
                                                 const std::vector<Element>& a,
                                                 const std::vector<Element>& w) {
    Matrix H = jacobian_at(tables.gens, a);
    LinearCode code = LinearCode::from_parity(tables.field, tables.field.degree(), tables.n, H);
    if (code.dim() == 0) return std::nullopt;
    size_t d = code.min_distance();
    if (d < 2 * tables.t + 1) return std::nullopt;
    size_t radius = (d - 1) / 2;
    try {
        DecodeResult res = decode(tables, a, w, d);
        if (hamming_weight(res.error) <= std::min(radius, tables.t)) return res.error;
        return std::nullopt;
    } catch (const domain_error&) {
        return std::nullopt;
    }
}

}  // namespace tancode
