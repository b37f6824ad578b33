// SPDX-License-Identifier: Apache-2.0
#include "tancode/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tancode/linalg.hpp"

namespace tancode {

// ---------------------------------------------------------------- Monomial --

Monomial::Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
    if (e_.size() > kMaxVars) throw budget_error("variable count exceeds cap");
    if (total_degree() > kMaxTotalDegree) throw budget_error("total degree exceeds cap");
}

Monomial Monomial::var(size_t j, uint32_t k) {
    std::vector<uint32_t> e(j + 1, 0);
    e[j] = k;
    return Monomial(std::move(e));
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (uint32_t x : e_) d += x;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) e[i] = exp(i) + o.exp(i);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.exp(i)) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    if (!o.divides(*this)) throw domain_error("monomial quotient: not divisible");
    std::vector<uint32_t> e(e_.size(), 0);
    for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - o.exp(i);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<uint32_t> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    size_t n = std::max(e_.size(), o.e_.size());
    for (size_t i = 0; i < n; ++i) {
        if (exp(i) != o.exp(i)) return exp(i) < o.exp(i);
    }
    return false;
}

// --------------------------------------------------------------- MultiPoly --

MultiPoly::MultiPoly(Field f, size_t nvars) : field_(std::move(f)), nvars_(nvars) {
    if (nvars > kMaxVars) throw budget_error("variable count exceeds cap");
}

MultiPoly MultiPoly::constant(const Field& f, size_t nvars, const Element& c) {
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
    return p;
}

MultiPoly MultiPoly::variable(const Field& f, size_t nvars, size_t j) {
    if (j >= nvars) throw domain_error("variable index out of range");
    MultiPoly p(f, nvars);
    p.terms_.emplace(Monomial::var(j), f.one());
    return p;
}

MultiPoly MultiPoly::term(const Field& f, size_t nvars, const Monomial& m, const Element& c) {
    if (m.nvars_used() > nvars) throw domain_error("monomial uses undeclared variables");
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

uint32_t MultiPoly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Element MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void MultiPoly::add_term(const Monomial& m, const Element& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Element s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

static void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.field() != b.field() || a.nvars() != b.nvars())
        throw domain_error("polynomials from different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r(field_, nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Element& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Element MultiPoly::evaluate(const std::vector<Element>& a) const {
    if (a.size() != nvars_) throw domain_error("evaluation point has wrong dimension");
    Element r = field_.zero();
    for (const auto& [m, c] : terms_) {
        Element t = c;
        for (size_t j = 0; j < m.nvars_used(); ++j) {
            uint32_t e = m.exp(j);
            if (e) t = t * a[j].pow(e);
        }
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::partial_derivative(size_t j) const {
    if (j >= nvars_) throw domain_error("variable index out of range");
    MultiPoly r(field_, nvars_);
    const uint64_t p = field_.characteristic();
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exp(j);
        if (e == 0 || e % p == 0) continue;  // exponent coefficient reduced mod p
        std::vector<uint32_t> ex(m.exps());
        ex[j] -= 1;
        r.add_term(Monomial(std::move(ex)), c * field_.from_int(e % p));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::gradient() const {
    std::vector<MultiPoly> g;
    g.reserve(nvars_);
    for (size_t j = 0; j < nvars_; ++j) g.push_back(partial_derivative(j));
    return g;
}

MultiPoly MultiPoly::frobenius_substitute(uint32_t e) const {
    if (e < 1) throw domain_error("substitution power must be >= 1");
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<uint32_t> ex(m.exps());
        for (auto& x : ex) {
            uint64_t nx = static_cast<uint64_t>(x) * e;
            if (nx > kMaxTotalDegree) throw budget_error("total degree exceeds cap");
            x = static_cast<uint32_t>(nx);
        }
        r.terms_.emplace(Monomial(std::move(ex)), c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(size_t j, const Element& value) const {
    if (j >= nvars_) throw domain_error("variable index out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exp(j);
        Element nc = e ? c * value.pow(e) : c;
        std::vector<uint32_t> ex(m.exps());
        if (e) ex[j] = 0;
        r.add_term(Monomial(std::move(ex)), nc);
    }
    return r;
}

MultiPoly MultiPoly::rename_vars(const std::vector<size_t>& newidx, size_t new_nvars) const {
    MultiPoly r(field_, new_nvars);
    for (const auto& [m, c] : terms_) {
        std::vector<uint32_t> ex(new_nvars, 0);
        for (size_t j = 0; j < m.nvars_used(); ++j) {
            if (m.exp(j) == 0) continue;
            if (j >= newidx.size() || newidx[j] >= new_nvars)
                throw domain_error("rename_vars: unmapped variable in use");
            ex[newidx[j]] += m.exp(j);
        }
        r.add_term(Monomial(std::move(ex)), c);
    }
    return r;
}

bool MultiPoly::coefficients_in_subfield(uint32_t s) const {
    for (const auto& [m, c] : terms_)
        if (!c.in_subfield(s)) return false;
    return true;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending canonical lex for stable printing
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += "+";
        bool coeff_printed = false;
        if (!c.is_one() || m.is_one()) {
            out += c.str();
            coeff_printed = true;
        }
        bool first = !coeff_printed;
        for (size_t j = 0; j < m.nvars_used(); ++j) {
            uint32_t e = m.exp(j);
            if (!e) continue;
            if (!first || coeff_printed) out += "*";
            first = false;
            out += "x" + std::to_string(j + 1);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

PolyMatrix jacobian(const std::vector<MultiPoly>& F) {
    PolyMatrix J;
    J.rows = F.size();
    if (F.empty()) return J;
    J.cols = F.front().nvars();
    for (const auto& f : F) {
        if (f.nvars() != J.cols) throw domain_error("generators with mixed variable counts");
        for (size_t j = 0; j < J.cols; ++j) J.entries.push_back(f.partial_derivative(j));
    }
    return J;
}

Matrix jacobian_at(const std::vector<MultiPoly>& F, const std::vector<Element>& a) {
    if (F.empty()) throw domain_error("empty generator list");
    const Field& fld = F.front().field();
    Matrix m(fld, F.size(), F.front().nvars());
    for (size_t i = 0; i < F.size(); ++i) {
        if (F[i].nvars() != a.size()) throw domain_error("dimension mismatch");
        for (size_t j = 0; j < a.size(); ++j) m.at(i, j) = F[i].partial_derivative(j).evaluate(a);
    }
    return m;
}

// ------------------------------------------------------------------ parser --

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    uint64_t integer() {
        skip_ws();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw parse_error("expected integer at position " + std::to_string(b));
        return std::stoull(std::string(s.substr(b, i - b)));
    }
};

// factor := 'x' INT ('^' INT)?
Monomial parse_factor(Cursor& c, size_t nvars) {
    if (!c.accept('x')) throw parse_error("expected variable");
    uint64_t idx = c.integer();
    if (idx < 1 || idx > nvars) throw parse_error("variable x" + std::to_string(idx) + " out of range");
    uint32_t e = 1;
    if (c.accept('^')) {
        uint64_t k = c.integer();
        if (k > kMaxTotalDegree) throw budget_error("total degree exceeds cap");
        e = static_cast<uint32_t>(k);
    }
    return Monomial::var(static_cast<size_t>(idx - 1), e);
}

Element parse_coeff(Cursor& c, const Field& f) {
    c.skip_ws();
    size_t b = c.i;
    if (c.s[b] == '[') {
        size_t e = c.s.find(']', b);
        if (e == std::string_view::npos) throw parse_error("unterminated coefficient vector");
        c.i = e + 1;
        return f.parse(c.s.substr(b, e - b + 1));
    }
    if (c.s[b] == 'g') {
        ++c.i;
        if (c.i < c.s.size() && c.s[c.i] == '^') {
            ++c.i;
            uint64_t k = c.integer();
            return f.parse("g^" + std::to_string(k));
        }
        return f.parse("g");
    }
    uint64_t v = c.integer();
    return f.from_int(v);
}

MultiPoly parse_term(Cursor& c, const Field& f, size_t nvars) {
    char ch = c.peek();
    Element coeff = f.one();
    Monomial mono;
    bool any = false;
    if (ch != 'x') {
        coeff = parse_coeff(c, f);
        any = true;
        while (c.accept('*')) mono = mono * parse_factor(c, nvars);
    } else {
        mono = parse_factor(c, nvars);
        any = true;
        while (c.accept('*')) mono = mono * parse_factor(c, nvars);
    }
    if (!any) throw parse_error("empty term");
    return MultiPoly::term(f, nvars, mono, coeff);
}

}  // namespace

MultiPoly parse_poly(const Field& f, size_t nvars, std::string_view text) {
    if (nvars > kMaxVars) throw budget_error("variable count exceeds cap");
    Cursor c{text};
    MultiPoly out(f, nvars);
    bool neg = false;
    if (c.accept('-'))
        neg = true;
    else
        c.accept('+');
    if (c.eof()) throw parse_error("empty polynomial");
    while (true) {
        MultiPoly t = parse_term(c, f, nvars);
        out = neg ? out - t : out + t;
        if (c.eof()) break;
        if (c.accept('+'))
            neg = false;
        else if (c.accept('-'))
            neg = true;
        else
            throw parse_error("unexpected character at position " + std::to_string(c.i));
    }
    return out;
}

}  // namespace tancode
