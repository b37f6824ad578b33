// SPDX-License-Identifier: Apache-2.0
#include "tancode/io.hpp"

#include <fstream>

namespace tancode::io {

namespace {

uint64_t get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw parse_error(std::string("missing or invalid field '") + key + "'");
    return j[key].get<uint64_t>();
}

std::string get_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw parse_error(std::string("missing or invalid field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

void field_to_json(const Field& f, json& j) {
    j["p"] = f.characteristic();
    j["M"] = f.degree();
    j["modulus"] = f.modulus();
}

Field field_from_json(const json& j) {
    uint64_t p = get_u64(j, "p");
    uint32_t M = static_cast<uint32_t>(get_u64(j, "M"));
    if (j.contains("modulus")) return Field(p, M, j["modulus"].get<std::vector<uint64_t>>());
    return Field(p, M);
}

std::vector<Element> parse_point(const Field& f, const std::string& text) {
    std::vector<Element> out;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.empty()) throw parse_error("empty coordinate in point");
        out.push_back(f.parse(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    flush();
    return out;
}

std::string format_point(const std::vector<Element>& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const json& j, uint32_t expect_cols) {
    if (!j.is_array()) throw parse_error("matrix must be an array of rows");
    size_t rows = j.size();
    size_t cols = expect_cols;
    if (rows > 0) {
        if (!j[0].is_array()) throw parse_error("matrix row must be an array");
        cols = j[0].size();
        if (expect_cols && cols != expect_cols) throw parse_error("matrix width mismatch");
    }
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw parse_error("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = f.parse(j[i][c].get<std::string>());
    }
    return m;
}

json variety_to_json(const AffineVariety& X, const json& meta) {
    json j;
    field_to_json(X.field(), j);
    j["e"] = X.base_degree();
    j["n"] = X.nvars();
    json gens = json::array();
    for (const auto& g : X.generators()) gens.push_back(g.str());
    j["generators"] = gens;
    if (X.dim_hint()) j["dim_hint"] = *X.dim_hint();
    if (X.section()) {
        json sec;
        json bound = json::array();
        for (size_t b : X.section()->bound) bound.push_back(b + 1);
        sec["bound"] = bound;
        json exprs = json::array();
        for (const auto& ex : X.section()->exprs) exprs.push_back(ex.str());
        sec["exprs"] = exprs;
        j["section"] = sec;
    }
    if (!meta.empty()) j["meta"] = meta;
    return j;
}

AffineVariety variety_from_json(const json& j) {
    Field f = field_from_json(j);
    uint32_t e = static_cast<uint32_t>(get_u64(j, "e"));
    size_t n = get_u64(j, "n");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw parse_error("variety file needs a generators array");
    std::vector<MultiPoly> gens;
    for (const auto& g : j["generators"]) gens.push_back(parse_poly(f, n, g.get<std::string>()));
    std::optional<size_t> hint;
    if (j.contains("dim_hint")) hint = j["dim_hint"].get<size_t>();
    std::optional<Section> sec;
    if (j.contains("section")) {
        Section s;
        for (const auto& b : j["section"]["bound"]) {
            size_t v = b.get<size_t>();
            if (v < 1 || v > n) throw parse_error("section bound variable out of range");
            s.bound.push_back(v - 1);
        }
        for (const auto& ex : j["section"]["exprs"])
            s.exprs.push_back(parse_poly(f, n, ex.get<std::string>()));
        sec = std::move(s);
    }
    return AffineVariety(f, e, n, std::move(gens), hint, std::move(sec));
}

json code_to_json(const LinearCode& c) {
    json j;
    field_to_json(c.field(), j);
    j["m_sub"] = c.subfield_degree();
    j["n"] = c.length();
    j["parity_check"] = matrix_to_json(c.parity());
    return j;
}

LinearCode code_from_json(const json& j) {
    uint64_t p = get_u64(j, "p");
    uint32_t sub = static_cast<uint32_t>(get_u64(j, "m_sub"));
    Field f = j.contains("M") ? field_from_json(j) : Field(p, sub);
    size_t n = get_u64(j, "n");
    Matrix h = matrix_from_json(f, j["parity_check"], static_cast<uint32_t>(n));
    if (h.rows() == 0) h = Matrix(f, 0, n);
    return LinearCode::from_parity(f, sub, n, h);
}

json family_to_json(const CodeFamily& fam) {
    json j;
    field_to_json(fam.field, j);
    j["e"] = fam.e;
    j["n"] = fam.points.empty() ? 0 : fam.points.front().size();
    json pts = json::array();
    for (const auto& a : fam.points) {
        json pt = json::array();
        for (const auto& x : a) pt.push_back(x.str());
        pts.push_back(pt);
    }
    j["points"] = pts;
    json mats = json::array();
    for (const auto& m : fam.matrices) mats.push_back(matrix_to_json(m));
    j["matrices"] = mats;
    return j;
}

CodeFamily family_from_json(const json& j) {
    Field f = field_from_json(j);
    uint32_t e = static_cast<uint32_t>(get_u64(j, "e"));
    size_t n = get_u64(j, "n");
    CodeFamily fam{f, e, {}, {}};
    for (const auto& pt : j["points"]) {
        std::vector<Element> a;
        for (const auto& x : pt) a.push_back(f.parse(x.get<std::string>()));
        if (a.size() != n) throw parse_error("family point dimension mismatch");
        fam.points.push_back(std::move(a));
    }
    for (const auto& m : j["matrices"])
        fam.matrices.push_back(matrix_from_json(f, m, static_cast<uint32_t>(n)));
    if (fam.points.size() != fam.matrices.size())
        throw parse_error("family needs one matrix per point");
    return fam;
}

json morphism_to_json(const Morphism& m) {
    json j;
    field_to_json(m.field, j);
    j["e"] = m.e;
    j["n"] = m.components.empty() ? 0 : m.components.front().nvars();
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(c.str());
    j["components"] = comps;
    if (m.excluded) j["excluded"] = m.excluded->str();
    return j;
}

Morphism morphism_from_json(const json& j) {
    Field f = field_from_json(j);
    uint32_t e = static_cast<uint32_t>(get_u64(j, "e"));
    size_t n = get_u64(j, "n");
    Morphism m{f, e, {}, std::nullopt};
    for (const auto& c : j["components"]) m.components.push_back(parse_poly(f, n, c.get<std::string>()));
    if (j.contains("excluded")) m.excluded = parse_poly(f, n, get_str(j, "excluded"));
    return m;
}

json tables_to_json(const DecoderTables& t) {
    json j;
    field_to_json(t.field, j);
    j["e"] = t.e;
    j["n"] = t.n;
    j["t"] = t.t;
    json gens = json::array();
    for (const auto& g : t.gens) gens.push_back(g.str());
    j["generators"] = gens;
    json tuples = json::array();
    for (const auto& td : t.tuples) {
        json tj;
        json idx = json::array();
        for (size_t v : td.idx) idx.push_back(v + 1);
        tj["i"] = idx;
        json elims = json::array();
        for (const auto& h : td.eliminants) elims.push_back(h.str());
        tj["eliminants"] = elims;
        tuples.push_back(tj);
    }
    j["tuples"] = tuples;
    json dets = json::array();
    for (const auto& dd : t.dets) {
        json dj;
        json rows = json::array(), cols = json::array();
        for (size_t v : dd.rows) rows.push_back(v + 1);
        for (size_t v : dd.cols) cols.push_back(v + 1);
        dj["j"] = rows;
        dj["i"] = cols;
        dj["delta"] = dd.delta.str();
        json prod = json::array();
        for (size_t r = 0; r < dd.adj_product.rows; ++r) {
            json row = json::array();
            for (size_t c = 0; c < dd.adj_product.cols; ++c) row.push_back(dd.adj_product.at(r, c).str());
            prod.push_back(row);
        }
        dj["P"] = prod;
        dets.push_back(dj);
    }
    j["dets"] = dets;
    return j;
}

DecoderTables tables_from_json(const json& j) {
    Field f = field_from_json(j);
    uint32_t e = static_cast<uint32_t>(get_u64(j, "e"));
    size_t n = get_u64(j, "n");
    size_t t = get_u64(j, "t");
    DecoderTables tables{f, e, n, t, {}, {}, {}};
    for (const auto& g : j["generators"]) tables.gens.push_back(parse_poly(f, n, g.get<std::string>()));
    for (const auto& tj : j["tuples"]) {
        DecoderTables::TupleData td;
        for (const auto& v : tj["i"]) {
            size_t idx = v.get<size_t>();
            if (idx < 1 || idx > n) throw parse_error("tuple index out of range");
            td.idx.push_back(idx - 1);
        }
        for (const auto& h : tj["eliminants"]) td.eliminants.push_back(parse_poly(f, n, h.get<std::string>()));
        td.elim_jacobian = jacobian(td.eliminants);
        td.elim_jacobian.cols = n;
        tables.tuples.push_back(std::move(td));
    }
    for (const auto& dj : j["dets"]) {
        std::vector<size_t> rows, cols;
        for (const auto& v : dj["j"]) rows.push_back(v.get<size_t>() - 1);
        for (const auto& v : dj["i"]) cols.push_back(v.get<size_t>() - 1);
        MultiPoly delta = parse_poly(f, n, dj["delta"].get<std::string>());
        PolyMatrix P;
        P.rows = dj["P"].size();
        P.cols = n;
        for (const auto& row : dj["P"]) {
            if (row.size() != n) throw parse_error("adjugate product width mismatch");
            for (const auto& entry : row) P.entries.push_back(parse_poly(f, n, entry.get<std::string>()));
        }
        tables.dets.push_back(DecoderTables::DetData{rows, cols, std::move(delta), std::move(P)});
    }
    return tables;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw parse_error("invalid JSON in " + path + ": " + ex.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tancode::io
