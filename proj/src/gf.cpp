// SPDX-License-Identifier: Apache-2.0
#include "tancode/gf.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tancode {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

uint64_t invmod_prime(uint64_t a, uint64_t p) {
    if (a == 0) throw domain_error("division by zero in GF(p)");
    return powmod(a, p - 2, p);
}

// --- dense univariate polynomials over GF(p), coefficient index = degree ---

using PPoly = std::vector<uint64_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    ptrim(r);
    return r;
}

// a mod f, f monic
PPoly pmod(PPoly a, const PPoly& f, uint64_t p) {
    ptrim(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i < f.size(); ++i) {
                uint64_t sub = mulmod(lead, f[i], p);
                uint64_t& c = a[i + shift];
                c = (c + p - sub) % p;
            }
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& f, uint64_t p) {
    PPoly r = {1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic so pmod applies
        uint64_t inv = invmod_prime(b.back(), p);
        PPoly bm = b;
        for (auto& c : bm) c = mulmod(c, inv, p);
        PPoly r = pmod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree M over GF(p): irreducible iff t^(p^M) = t mod f and
// gcd(t^(p^(M/l)) - t, f) = 1 for every prime l | M.
bool poly_irreducible(const PPoly& f, uint64_t p) {
    const size_t M = f.size() - 1;
    if (M == 0) return false;
    if (M == 1) return true;
    const PPoly t = {0, 1};
    // p^k does not overflow: caller guarantees p^M <= 2^62
    auto ppow = [&](uint32_t k) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < k; ++i) e *= p;
        return e;
    };
    PPoly tq = ppowmod(t, ppow(static_cast<uint32_t>(M)), f, p);
    PPoly diff = tq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    for (uint64_t l : prime_factors(M)) {
        PPoly ts = ppowmod(t, ppow(static_cast<uint32_t>(M / l)), f, p);
        PPoly d = ts;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        ptrim(d);
        PPoly g = pgcd(f, d, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace

struct Field::Data {
    uint64_t p;
    uint32_t M;
    std::vector<uint64_t> modulus;  // c0..cM, cM = 1
    uint64_t order;                 // p^M

    mutable std::once_flag gen_once;
    mutable std::vector<uint64_t> gen_coeffs;

    void check_and_fill() {
        if (!is_prime(p)) throw domain_error("characteristic is not prime");
        if (M < 1) throw domain_error("extension degree must be >= 1");
        // order = p^M with overflow check against the 2^62 desk-scale cap
        uint64_t o = 1;
        for (uint32_t i = 0; i < M; ++i) {
            if (o > (1ull << 62) / p) throw budget_error("field order p^M exceeds 2^62");
            o *= p;
        }
        order = o;
    }
};

Field::Field(uint64_t p, uint32_t M) {
    auto d = std::make_shared<Data>();
    d->p = p;
    d->M = M;
    d->check_and_fill();
    // lexicographically smallest monic irreducible: scan integer encodings of
    // the non-leading coefficients
    PPoly f(M + 1, 0);
    f[M] = 1;
    bool found = false;
    for (uint64_t code = 0; code < d->order; ++code) {
        uint64_t c = code;
        for (uint32_t i = 0; i < M; ++i) {
            f[i] = c % p;
            c /= p;
        }
        if (poly_irreducible(f, p)) {
            found = true;
            break;
        }
    }
    if (!found) throw domain_error("no irreducible modulus found");  // cannot happen
    d->modulus.assign(f.begin(), f.end());
    d_ = std::move(d);
}

Field::Field(uint64_t p, uint32_t M, std::vector<uint64_t> modulus) {
    auto d = std::make_shared<Data>();
    d->p = p;
    d->M = M;
    d->check_and_fill();
    if (modulus.size() != M + 1) throw domain_error("modulus must have degree M");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw domain_error("modulus must be monic");
    if (!poly_irreducible(modulus, p)) throw domain_error("modulus is reducible over GF(p)");
    d->modulus = std::move(modulus);
    d_ = std::move(d);
}

uint64_t Field::characteristic() const { return d_->p; }
uint32_t Field::degree() const { return d_->M; }
const std::vector<uint64_t>& Field::modulus() const { return d_->modulus; }
uint64_t Field::order() const { return d_->order; }

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    return d_->p == o.d_->p && d_->M == o.d_->M && d_->modulus == o.d_->modulus;
}

Element Field::zero() const { return Element(*this, std::vector<uint64_t>(d_->M, 0)); }

Element Field::one() const { return from_int(1); }

Element Field::from_int(uint64_t c) const {
    std::vector<uint64_t> v(d_->M, 0);
    v[0] = c % d_->p;
    return Element(*this, std::move(v));
}

Element Field::indeterminate() const {
    if (d_->M == 1) return zero();  // residue of t modulo a linear modulus
    std::vector<uint64_t> v(d_->M, 0);
    v[1] = 1;
    return Element(*this, std::move(v));
}

Element Field::from_coeffs(const std::vector<uint64_t>& c) const {
    if (c.size() > d_->M) throw parse_error("coefficient vector longer than the extension degree");
    std::vector<uint64_t> v(d_->M, 0);
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] % d_->p;
    return Element(*this, std::move(v));
}

Element Field::generator() const {
    std::call_once(d_->gen_once, [this] {
        const uint64_t n = d_->order - 1;  // multiplicative group order
        auto factors = prime_factors(n);
        for (uint64_t code = 1; code < d_->order; ++code) {
            std::vector<uint64_t> v(d_->M, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < d_->M; ++i) {
                v[i] = c % d_->p;
                c /= d_->p;
            }
            Element g(*this, v);
            bool primitive = true;
            for (uint64_t l : factors) {
                if (g.pow(n / l).is_one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                d_->gen_coeffs = v;
                return;
            }
        }
        throw domain_error("no primitive element found");  // cannot happen
    });
    return Element(*this, d_->gen_coeffs);
}

std::vector<Element> Field::subfield(uint32_t s) const {
    if (s == 0 || d_->M % s != 0) throw domain_error("subfield degree must divide M");
    uint64_t qs = 1;
    for (uint32_t i = 0; i < s; ++i) qs *= d_->p;
    if (qs > (1ull << 22)) throw budget_error("subfield enumeration exceeds budget");
    std::vector<Element> out;
    out.reserve(qs);
    out.push_back(zero());
    if (qs == 2) {
        out.push_back(one());
        return out;
    }
    Element g = generator().pow((d_->order - 1) / (qs - 1));
    Element x = one();
    for (uint64_t j = 0; j + 1 < qs; ++j) {
        out.push_back(x);
        x = x * g;
    }
    return out;
}

Element Field::parse(std::string_view lit) const {
    auto fail = [&] { throw parse_error("bad element literal: '" + std::string(lit) + "'"); };
    size_t b = lit.find_first_not_of(" \t");
    size_t e = lit.find_last_not_of(" \t");
    if (b == std::string_view::npos) fail();
    lit = lit.substr(b, e - b + 1);
    if (lit.empty()) fail();
    if (lit[0] == '[') {
        if (lit.back() != ']') fail();
        std::string body(lit.substr(1, lit.size() - 2));
        std::vector<uint64_t> cs;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(item, &pos);
            } catch (...) {
                fail();
            }
            while (pos < item.size() && (item[pos] == ' ' || item[pos] == '\t')) ++pos;
            if (pos != item.size()) fail();
            cs.push_back(v);
        }
        if (cs.empty()) fail();
        return from_coeffs(cs);
    }
    if (lit[0] == 'g') {
        if (lit.size() == 1) return generator();
        if (lit[1] != '^') fail();
        uint64_t k = 0;
        try {
            size_t pos = 0;
            k = std::stoull(std::string(lit.substr(2)), &pos);
            if (pos != lit.size() - 2) fail();
        } catch (...) {
            fail();
        }
        return generator().pow(k % (d_->order - 1 ? d_->order - 1 : 1));
    }
    uint64_t v = 0;
    try {
        size_t pos = 0;
        v = std::stoull(std::string(lit), &pos);
        if (pos != lit.size()) fail();
    } catch (...) {
        fail();
    }
    return from_int(v);
}

// ---------------------------------------------------------------- Element --

bool Element::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t c) { return c == 0; });
}

bool Element::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint64_t c) { return c == 0; });
}

static void require_same_field(const Element& a, const Element& b) {
    if (a.field() != b.field()) throw domain_error("elements of different fields");
}

Element Element::operator+(const Element& o) const {
    require_same_field(*this, o);
    const uint64_t p = field_.characteristic();
    std::vector<uint64_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = (c_[i] + o.c_[i]) % p;
    return Element(field_, std::move(v));
}

Element Element::operator-(const Element& o) const {
    require_same_field(*this, o);
    const uint64_t p = field_.characteristic();
    std::vector<uint64_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = (c_[i] + p - o.c_[i]) % p;
    return Element(field_, std::move(v));
}

Element Element::operator-() const {
    const uint64_t p = field_.characteristic();
    std::vector<uint64_t> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = (p - c_[i]) % p;
    return Element(field_, std::move(v));
}

Element Element::operator*(const Element& o) const {
    require_same_field(*this, o);
    const uint64_t p = field_.characteristic();
    const auto& f = field_.d_->modulus;
    PPoly prod = pmul(c_, o.c_, p);
    PPoly red = pmod(std::move(prod), f, p);
    red.resize(field_.degree(), 0);
    return Element(field_, std::move(red));
}

Element Element::operator/(const Element& o) const { return *this * o.inverse(); }

bool Element::operator==(const Element& o) const {
    require_same_field(*this, o);
    return c_ == o.c_;
}

Element Element::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    // x^(p^M - 2); exact and single-path
    return pow(field_.order() - 2);
}

Element Element::pow(uint64_t e) const {
    Element r = field_.one();
    Element b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Element Element::frobenius(uint32_t s) const {
    if (s < 1) throw domain_error("frobenius degree must be >= 1");
    Element r = *this;
    for (uint32_t i = 0; i < s; ++i) r = r.pow(field_.characteristic());
    return r;
}

bool Element::in_subfield(uint32_t s) const {
    if (s == 0 || field_.degree() % s != 0) throw domain_error("subfield degree must divide M");
    return frobenius(s) == *this;
}

uint32_t Element::prime_degree() const {
    const uint32_t M = field_.degree();
    for (uint32_t s = 1; s <= M; ++s) {
        if (M % s != 0) continue;
        if (frobenius(s) == *this) return s;
    }
    return M;  // unreachable: x^(p^M) = x always
}

std::string Element::str() const {
    if (field_.degree() == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    s += "]";
    return s;
}

// ------------------------------------------------------------- free funcs --

uint32_t definition_degree(const std::vector<Element>& a, uint32_t e) {
    if (a.empty()) return 1;
    const Field& f = a.front().field();
    if (e == 0 || f.degree() % e != 0) throw domain_error("q = p^e requires e | M");
    uint32_t delta = 1;
    for (const auto& x : a) {
        uint32_t d = x.prime_degree();       // degree over GF(p)
        uint32_t s = d / std::gcd(d, e);     // degree over GF(p^e)
        delta = std::lcm(delta, s);
    }
    return delta;
}

std::vector<Element> lagrange_basis(const Field& f, uint32_t e, const Element& beta) {
    if (e == 0 || f.degree() % e != 0) throw domain_error("q = p^e requires e | M");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) q *= f.characteristic();
    if (q > (1ull << 20)) throw budget_error("Lagrange basis field too large");
    if (!beta.in_subfield(e)) throw domain_error("beta lies outside GF(q)");
    std::vector<Element> c(q, f.zero());
    if (beta.is_zero()) {
        // L^0 = -(t^(q-1) - 1)
        c[0] = f.one();
        c[q - 1] = -f.one();
        return c;
    }
    // L^beta = -[t^(q-1) + sum_{s=1}^{q-2} beta^(-s) t^s]
    c[q - 1] = -f.one();
    Element binv = beta.inverse();
    Element acc = f.one();
    for (uint64_t s = 1; s + 1 < q; ++s) {
        acc = acc * binv;
        c[s] = -acc;
    }
    return c;
}

Element eval_univariate(const std::vector<Element>& coeffs, const Element& x) {
    Element r = x.field().zero();
    for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

}  // namespace tancode
