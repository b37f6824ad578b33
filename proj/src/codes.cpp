// SPDX-License-Identifier: Apache-2.0
#include "tancode/codes.hpp"

#include <algorithm>
#include <numeric>

#include "tancode/util.hpp"

namespace tancode {

LinearCode::LinearCode(Field f, uint32_t sub, size_t n, Matrix h)
    : field_(std::move(f)), sub_(sub), n_(n), h_(std::move(h)) {}

LinearCode LinearCode::from_parity(const Field& f, uint32_t sub, size_t n, const Matrix& H) {
    if (sub == 0 || f.degree() % sub != 0) throw domain_error("code subfield degree must divide M");
    if (H.cols() != n) throw domain_error("parity-check width differs from code length");
    if (!H.all_entries_in_subfield(sub)) throw domain_error("parity entries outside the code subfield");
    return LinearCode(f, sub, n, H.rref());
}

LinearCode LinearCode::from_generator(const Field& f, uint32_t sub, size_t n, const Matrix& G) {
    if (G.cols() != n) throw domain_error("generator width differs from code length");
    if (G.rows() == 0) return from_parity(f, sub, n, Matrix::identity(f, n));
    return from_parity(f, sub, n, G.nullspace());
}

bool LinearCode::contains(const std::vector<Element>& word) const {
    if (word.size() != n_) return false;
    for (const auto& s : h_.mul_vec(word))
        if (!s.is_zero()) return false;
    return true;
}

size_t hamming_weight(const std::vector<Element>& w) {
    size_t c = 0;
    for (const auto& x : w)
        if (!x.is_zero()) ++c;
    return c;
}

std::vector<Element> cyclic_shift(const std::vector<Element>& w) {
    std::vector<Element> out;
    out.reserve(w.size());
    for (size_t i = 1; i < w.size(); ++i) out.push_back(w[i]);
    out.push_back(w[0]);
    return out;
}

std::vector<std::vector<Element>> LinearCode::codewords() const {
    const size_t k = dim();
    uint64_t q = 1;
    for (uint32_t i = 0; i < sub_; ++i) q *= field_.characteristic();
    uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) {
        count *= q;
        if (count > kEnumCap) throw budget_error("codeword enumeration exceeds 2^20");
    }

    Matrix G = generator();
    auto scalars = field_.subfield(sub_);
    std::vector<std::vector<Element>> words;
    words.reserve(count);
    for_each_tuple(k, q, [&](const std::vector<uint64_t>& t) {
        std::vector<Element> w(n_, field_.zero());
        for (size_t i = 0; i < k; ++i) {
            const Element& c = scalars[t[i]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < n_; ++j) w[j] = w[j] + c * G.at(i, j);
        }
        words.push_back(std::move(w));
    });
    return words;
}

std::vector<std::vector<Element>> LinearCode::words_of_weight(size_t w) const {
    std::vector<std::vector<Element>> out;
    for (auto& c : codewords())
        if (hamming_weight(c) == w) out.push_back(std::move(c));
    return out;
}

size_t LinearCode::min_weight_by_enumeration() const {
    if (dim() == 0) throw domain_error("minimum distance of the zero code");
    size_t best = n_ + 1;
    for (const auto& c : codewords()) {
        size_t w = hamming_weight(c);
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

size_t LinearCode::min_distance() const {
    if (dim() == 0) throw domain_error("minimum distance of the zero code");
    size_t d = n_;
    if (h_.rows() == 0) {
        d = 1;  // full space
    } else {
        bool found = false;
        for (size_t t = 1; t <= n_ && !found; ++t) {
            for (const auto& cols : combinations(n_, t)) {
                if (h_.select_columns(cols).rank() < t) {
                    d = t;
                    found = true;
                    break;
                }
            }
        }
    }
    // enumeration cross-check at desk scale
    uint64_t q = 1;
    for (uint32_t i = 0; i < sub_; ++i) q *= field_.characteristic();
    bool small = true;
    uint64_t count = 1;
    for (size_t i = 0; i < dim(); ++i) {
        count *= q;
        if (count > kEnumCap) {
            small = false;
            break;
        }
    }
    if (small && min_weight_by_enumeration() != d)
        throw std::logic_error("min-distance routes disagree");
    return d;
}

LinearCode LinearCode::dual() const { return from_parity(field_, sub_, n_, generator()); }

LinearCode LinearCode::puncture(const std::vector<size_t>& gamma) const {
    if (gamma.size() >= n_) throw domain_error("cannot puncture every coordinate");
    std::vector<bool> del(n_, false);
    for (size_t g : gamma) {
        if (g >= n_) throw domain_error("puncture index out of range");
        del[g] = true;
    }
    std::vector<size_t> keep;
    for (size_t j = 0; j < n_; ++j)
        if (!del[j]) keep.push_back(j);
    return from_generator(field_, sub_, keep.size(), generator().select_columns(keep));
}

LinearCode LinearCode::shorten(const std::vector<size_t>& gamma) const {
    if (gamma.size() >= n_) throw domain_error("cannot shorten every coordinate");
    std::vector<bool> del(n_, false);
    for (size_t g : gamma) {
        if (g >= n_) throw domain_error("shorten index out of range");
        del[g] = true;
    }
    Matrix units(field_, gamma.size(), n_);
    for (size_t i = 0; i < gamma.size(); ++i) units.at(i, gamma[i]) = field_.one();
    LinearCode sub = from_parity(field_, sub_, n_, h_.vstack(units));
    std::vector<size_t> keep;
    for (size_t j = 0; j < n_; ++j)
        if (!del[j]) keep.push_back(j);
    return from_generator(field_, sub_, keep.size(), sub.generator().select_columns(keep));
}

LinearCode LinearCode::extend() const {
    Matrix G = generator();
    Matrix Ge(field_, G.rows(), n_ + 1);
    for (size_t i = 0; i < G.rows(); ++i) {
        Element s = field_.zero();
        for (size_t j = 0; j < n_; ++j) {
            Ge.at(i, j) = G.at(i, j);
            s = s + G.at(i, j);
        }
        Ge.at(i, n_) = -s;
    }
    return from_generator(field_, sub_, n_ + 1, Ge);
}

LinearCode LinearCode::direct_sum(const LinearCode& other) const {
    if (field_ != other.field_ || sub_ != other.sub_) throw domain_error("direct sum over different fields");
    Matrix G1 = generator(), G2 = other.generator();
    Matrix G(field_, G1.rows() + G2.rows(), n_ + other.n_);
    for (size_t i = 0; i < G1.rows(); ++i)
        for (size_t j = 0; j < n_; ++j) G.at(i, j) = G1.at(i, j);
    for (size_t i = 0; i < G2.rows(); ++i)
        for (size_t j = 0; j < other.n_; ++j) G.at(G1.rows() + i, n_ + j) = G2.at(i, j);
    return from_generator(field_, sub_, n_ + other.n_, G);
}

LinearCode LinearCode::u_u_plus_v(const LinearCode& other) const {
    if (field_ != other.field_ || sub_ != other.sub_) throw domain_error("(u|u+v) over different fields");
    if (n_ != other.n_) throw domain_error("(u|u+v) requires equal lengths");
    Matrix G1 = generator(), G2 = other.generator();
    Matrix G(field_, G1.rows() + G2.rows(), 2 * n_);
    for (size_t i = 0; i < G1.rows(); ++i)
        for (size_t j = 0; j < n_; ++j) {
            G.at(i, j) = G1.at(i, j);
            G.at(i, n_ + j) = G1.at(i, j);
        }
    for (size_t i = 0; i < G2.rows(); ++i)
        for (size_t j = 0; j < n_; ++j) G.at(G1.rows() + i, n_ + j) = G2.at(i, j);
    return from_generator(field_, sub_, 2 * n_, G);
}

bool LinearCode::is_cyclic() const {
    Matrix G = generator();
    for (size_t i = 0; i < G.rows(); ++i)
        if (!contains(cyclic_shift(G.row(i)))) return false;
    return true;
}

bool LinearCode::is_near_mds() const {
    const size_t k = dim();
    if (k < 1 || k > n_ - 1) throw domain_error("near-MDS test needs 1 <= k <= n-1");
    if (min_distance() != n_ - k) return false;
    return dual().min_distance() == k;
}

bool LinearCode::near_mds_by_rank() const {
    const size_t k = dim();
    if (k < 1 || k > n_ - 1) throw domain_error("near-MDS test needs 1 <= k <= n-1");
    if (min_distance() != n_ - k) return false;
    for (const auto& beta : combinations(n_, n_ - k + 1))
        if (h_.select_columns(beta).rank() != n_ - k) return false;
    return true;
}

bool LinearCode::equal_up_to_extension(const LinearCode& other) const {
    if (field_ != other.field_ || n_ != other.n_) return false;
    if (h_.rows() != other.h_.rows()) return false;
    return h_ == other.h_;  // both are canonical RREFs over the same ambient
}

// ------------------------------------------------------------ cyclic codes --

namespace {

// dense univariate product over the ambient field
std::vector<Element> umul(const std::vector<Element>& a, const std::vector<Element>& b) {
    const Field& f = a.front().field();
    std::vector<Element> r(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// remainder of a by monic b
std::vector<Element> urem(std::vector<Element> a, const std::vector<Element>& b) {
    const Field& f = b.front().field();
    while (a.size() >= b.size()) {
        Element lead = a.back();
        if (!lead.is_zero()) {
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - lead * b[i];
        }
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

uint32_t splitting_degree(uint64_t p, size_t n) {
    if (n == 0) throw domain_error("cycle length must be positive");
    if (std::gcd(p, static_cast<uint64_t>(n)) != 1) throw domain_error("gcd(p, n) must be 1");
    if (n == 1) return 1;
    uint64_t pm = p % n;
    uint32_t m = 1;
    uint64_t acc = pm;
    while (acc != 1 % n) {
        acc = (acc * pm) % n;
        ++m;
        if (m > 64) throw budget_error("splitting degree too large");
    }
    return m;
}

std::vector<CyclicSpec> divisors_of(const Field& f, size_t n) {
    const uint64_t p = f.characteristic();
    uint32_t m = splitting_degree(p, n);
    if (f.degree() % m != 0) throw domain_error("splitting field exceeds the ambient field");
    if (n > 20) throw budget_error("too many divisors of t^n - 1 to enumerate");

    // the n distinct n-th roots of unity in GF(sigma)
    uint64_t sigma = 1;
    for (uint32_t i = 0; i < m; ++i) sigma *= p;
    Element omega = f.one();
    if (n > 1) omega = f.generator().pow((f.order() - 1) / (sigma - 1)).pow((sigma - 1) / n);
    std::vector<Element> roots;
    Element w = f.one();
    for (size_t j = 0; j < n; ++j) {
        roots.push_back(w);
        w = w * omega;
    }

    std::vector<CyclicSpec> out;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Element> g = {f.one()};
        for (size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) g = umul(g, {-roots[j], f.one()});
        out.push_back(CyclicSpec{n, m, std::move(g)});
    }
    std::sort(out.begin(), out.end(), [](const CyclicSpec& a, const CyclicSpec& b) {
        if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
        for (size_t i = 0; i < a.g.size(); ++i)
            if (a.g[i] != b.g[i]) return a.g[i] < b.g[i];
        return false;
    });
    return out;
}

LinearCode cyclic_code(const Field& f, const CyclicSpec& spec, uint32_t s) {
    const size_t n = spec.n;
    if (spec.g.empty() || !spec.g.back().is_one()) throw domain_error("generator polynomial must be monic");
    const size_t degg = spec.g.size() - 1;
    if (degg > n) throw domain_error("generator degree exceeds code length");
    // g | t^n - 1 exactly
    std::vector<Element> tn1(n + 1, f.zero());
    tn1[0] = -f.one();
    tn1[n] = f.one();
    if (!urem(tn1, spec.g).empty()) throw domain_error("generator does not divide t^n - 1");

    uint32_t sub = spec.splitting_degree * s;
    if (sub == 0 || f.degree() % sub != 0) throw domain_error("code field GF(sigma^s) exceeds the ambient field");
    const size_t k = n - degg;
    Matrix G(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j <= degg; ++j) G.at(i, i + j) = spec.g[j];
    return LinearCode::from_generator(f, sub, n, G);
}

Matrix hamming_parity(const Field& f, uint32_t e, uint32_t r) {
    if (e == 0 || f.degree() % e != 0) throw domain_error("q = p^e requires e | M");
    if (r < 2) throw domain_error("Hamming construction needs r >= 2");
    auto scalars = f.subfield(e);
    std::sort(scalars.begin(), scalars.end());
    const uint64_t q = scalars.size();

    // normalized projective representatives (first nonzero coordinate = 1),
    // in lexicographic order of the coordinate tuples
    std::vector<std::vector<Element>> reps;
    for_each_tuple(r, q, [&](const std::vector<uint64_t>& t) {
        std::vector<Element> v;
        v.reserve(r);
        for (size_t i = 0; i < r; ++i) v.push_back(scalars[t[i]]);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.is_one()) reps.push_back(v);
            break;
        }
    });
    const size_t n = reps.size();

    // pull the unit vectors and e_{r-1} + e_r to the front
    auto unit = [&](size_t i) {
        std::vector<Element> v(r, f.zero());
        v[i] = f.one();
        return v;
    };
    std::vector<std::vector<Element>> cols;
    for (size_t i = 0; i < r; ++i) cols.push_back(unit(i));
    std::vector<Element> sum = unit(r - 2);
    sum[r - 1] = f.one();
    cols.push_back(sum);
    for (const auto& v : reps)
        if (std::find(cols.begin(), cols.end(), v) == cols.end()) cols.push_back(v);
    if (cols.size() != n) throw std::logic_error("projective representative count mismatch");

    Matrix H(f, r, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < r; ++i) H.at(i, j) = cols[j][i];
    return H;
}

}  // namespace tancode
