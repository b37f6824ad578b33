// SPDX-License-Identifier: Apache-2.0
//
// tancode: build affine varieties from code specifications, extract and
// analyze their tangent codes, and decode received words with the shared
// Groebner tables.

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tancode/io.hpp"
#include "tancode/verify.hpp"

using namespace tancode;
using nlohmann::json;

namespace {

struct AmbientSpec {
    std::string text;  // "p,M" or "p,M,c0,...,cM"

    std::optional<Field> make() const {
        if (text.empty()) return std::nullopt;
        std::vector<uint64_t> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stoull(item));
        if (parts.size() < 2) throw parse_error("--ambient needs at least p,M");
        uint64_t p = parts[0];
        uint32_t M = static_cast<uint32_t>(parts[1]);
        if (parts.size() == 2) return Field(p, M);
        std::vector<uint64_t> mod(parts.begin() + 2, parts.end());
        if (mod.size() != M + 1) throw parse_error("--ambient modulus needs M+1 coefficients");
        return Field(p, M, mod);
    }
};

std::vector<size_t> parse_index_set(const std::string& text, size_t n) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t v = std::stoull(item);
        if (v < 1 || v > n) throw parse_error("index " + item + " out of range 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return out;
}

// only plain integer literals survive a change of ambient field
void require_portable_literals(const json& j) {
    if (j.is_array()) {
        for (const auto& x : j) require_portable_literals(x);
        return;
    }
    const std::string s = j.get<std::string>();
    for (char c : s)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw parse_error("literal '" + s + "' is not portable to another ambient field; "
                              "re-encode the file in the target ambient");
}

LinearCode load_code(const std::string& path, const std::optional<Field>& ambient) {
    json j = io::read_json_file(path);
    if (!ambient) return io::code_from_json(j);
    Field file_field = j.contains("M") ? io::field_from_json(j)
                                       : Field(j["p"].get<uint64_t>(), j["m_sub"].get<uint32_t>());
    if (file_field == *ambient) return io::code_from_json(j);
    require_portable_literals(j["parity_check"]);
    if (ambient->characteristic() != j["p"].get<uint64_t>())
        throw domain_error("ambient characteristic differs from the code file");
    Matrix h = io::matrix_from_json(*ambient, j["parity_check"], j["n"].get<uint32_t>());
    return LinearCode::from_parity(*ambient, j["m_sub"].get<uint32_t>(), j["n"].get<size_t>(), h);
}

uint32_t prime_power_exponent(uint64_t q, uint64_t& p_out) {
    if (q < 2) throw domain_error("q must be a prime power");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t e = 0;
    uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) throw domain_error("q must be a prime power");
    p_out = p;
    return e;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::write_json_file(out_path, j);
}

json tangent_report(const AffineVariety& X, const std::vector<Element>& a) {
    TangentCode tc = tangent_code(X, a);
    json j;
    j["parity_check"] = io::matrix_to_json(tc.code.parity());
    j["k"] = tc.code.dim();
    j["delta"] = tc.delta;
    if (tc.code.dim() > 0)
        j["d"] = tc.code.min_distance();
    else
        j["d"] = nullptr;
    return j;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"tangent codes of affine varieties over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    AmbientSpec ambient;
    uint64_t seed = 1;
    unsigned jobs = 1;
    uint64_t budget_enum = 1ull << 24;
    size_t budget_groebner = 4096;
    app.add_option("--ambient", ambient.text, "ambient field p,M[,c0,...,cM]");
    app.add_option("--seed", seed, "seed for every randomized choice");
    app.add_option("--jobs", jobs, "worker threads for precompute");
    app.add_option("--budget-enum", budget_enum, "point enumeration cap");
    app.add_option("--budget-groebner", budget_groebner, "Groebner basis size cap");

    std::string out_path;

    // ---- tangent ----
    auto* cmd_tan = app.add_subcommand("tangent", "tangent code at a rational point");
    std::string tan_variety, tan_point;
    cmd_tan->add_option("--variety", tan_variety, "variety JSON file")->required();
    cmd_tan->add_option("--point", tan_point, "comma-separated element literals")->required();
    cmd_tan->add_option("--out", out_path, "write the report here instead of stdout");

    // ---- construct ----
    auto* cmd_con = app.add_subcommand("construct", "build a variety or morphism");
    cmd_con->require_subcommand(1);

    auto* con_ham = cmd_con->add_subcommand("hamming", "Hamming tangent-code variety");
    uint64_t ham_q = 2;
    uint32_t ham_r = 3;
    con_ham->add_option("--q", ham_q, "subfield size (prime power)")->required();
    con_ham->add_option("--r", ham_r, "parity rows")->required();
    con_ham->add_option("--out", out_path, "output variety file");

    auto* con_const = cmd_con->add_subcommand("constant", "constant-tangent variety from a code");
    std::string const_code;
    con_const->add_option("--code", const_code, "code JSON file")->required();
    con_const->add_option("--out", out_path, "output variety file");

    auto* con_from = cmd_con->add_subcommand("from-code", "stabilizing construction from a code");
    std::string from_code, from_sigma;
    bool from_linear = false;
    con_from->add_option("--code", from_code, "code JSON file")->required();
    con_from->add_option("--sigma", from_sigma, "support of a minimum-weight word, 1-based")->required();
    con_from->add_flag("--linear", from_linear, "drop the higher-order terms");
    con_from->add_option("--out", out_path, "output variety file");

    auto* con_fam = cmd_con->add_subcommand("family", "interpolate a parity-matrix family");
    std::string fam_file;
    con_fam->add_option("--family", fam_file, "family JSON file")->required();
    con_fam->add_option("--out", out_path, "output variety file");

    auto* con_cyc = cmd_con->add_subcommand("cyclic-assembly", "one component per divisor of t^n-1");
    uint64_t cyc_p = 2;
    size_t cyc_n = 3;
    con_cyc->add_option("--p", cyc_p, "characteristic")->required();
    con_cyc->add_option("--n", cyc_n, "code length, coprime to p")->required();
    con_cyc->add_option("--out", out_path, "output file");

    auto* con_cnc = cmd_con->add_subcommand("cyclic-noncyclic",
                                            "family with all cyclic [n,k] codes plus non-cyclic ones");
    uint64_t cnc_p = 2;
    size_t cnc_n = 3, cnc_k = 2, cnc_m = 1;
    con_cnc->add_option("--p", cnc_p, "characteristic")->required();
    con_cnc->add_option("--n", cnc_n, "code length")->required();
    con_cnc->add_option("--k", cnc_k, "code dimension")->required();
    con_cnc->add_option("--min-noncyclic", cnc_m, "minimum number of non-cyclic members");
    con_cnc->add_option("--out", out_path, "output file");

    auto* con_iso = cmd_con->add_subcommand("isometry", "morphism with monomial differentials");
    std::string iso_psi, iso_perm;
    uint32_t iso_n = 0;
    con_iso->add_option("--n", iso_n, "ambient dimension")->required();
    con_iso->add_option("--psi", iso_psi, "semicolon-separated psi_i polynomials")->required();
    con_iso->add_option("--perm", iso_perm, "permutation of 1..n")->required();
    con_iso->add_option("--out", out_path, "output morphism file");

    auto* con_ii = cmd_con->add_subcommand("interpolate-isometries",
                                           "morphism whose differentials match a matrix family");
    std::string ii_family;
    con_ii->add_option("--family", ii_family, "family JSON file")->required();
    con_ii->add_option("--out", out_path, "output morphism file");

    // ---- points ----
    auto* cmd_pts = app.add_subcommand("points", "enumerate X(GF(q^s))");
    std::string pts_variety;
    uint32_t pts_s = 1;
    cmd_pts->add_option("--variety", pts_variety, "variety JSON file")->required();
    cmd_pts->add_option("--s", pts_s, "extension degree over the base field");
    cmd_pts->add_option("--out", out_path, "write the report here instead of stdout");

    // ---- precompute / decode ----
    auto* cmd_pre = app.add_subcommand("precompute", "decoder tables for a variety");
    std::string pre_variety;
    size_t pre_t = 1;
    cmd_pre->add_option("--variety", pre_variety, "variety JSON file")->required();
    cmd_pre->add_option("--t", pre_t, "error budget")->required();
    cmd_pre->add_option("--out", out_path, "output tables file");

    auto* cmd_dec = app.add_subcommand("decode", "decode a received word");
    std::string dec_tables, dec_point, dec_word;
    cmd_dec->add_option("--tables", dec_tables, "tables JSON file")->required();
    cmd_dec->add_option("--point", dec_point, "base point literals")->required();
    cmd_dec->add_option("--word", dec_word, "received word literals")->required();
    cmd_dec->add_option("--out", out_path, "write the report here instead of stdout");

    // ---- verify ----
    auto* cmd_ver = app.add_subcommand("verify", "run a built-in verification suite");
    std::string suite;
    cmd_ver
        ->add_option("--suite", suite,
                     "duality | ops | weights | loci | decode-roundtrip | deform")
        ->required();
    cmd_ver->add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage message
        return code == 0 ? 0 : 1;
    }

    if (*cmd_tan) {
        AffineVariety X = io::variety_from_json(io::read_json_file(tan_variety));
        auto a = io::parse_point(X.field(), tan_point);
        emit(tangent_report(X, a), out_path);
        return 0;
    }

    if (*cmd_con) {
        json meta;
        meta["seed"] = seed;
        if (*con_ham) {
            uint64_t p = 0;
            uint32_t e = prime_power_exponent(ham_q, p);
            Field f = ambient.make().value_or(Field(p, e));
            if (f.characteristic() != p || f.degree() % e != 0)
                throw domain_error("ambient field does not contain GF(q)");
            HammingVariety hv = hamming_variety(f, e, ham_r);
            meta["construction"] = "hamming";
            meta["q"] = ham_q;
            meta["r"] = ham_r;
            meta["parity_check"] = io::matrix_to_json(hv.H);
            emit(io::variety_to_json(hv.X, meta), out_path);
            return 0;
        }
        if (*con_const) {
            LinearCode c = load_code(const_code, ambient.make());
            ConstantTangentVariety ctv = constant_tangent_variety(c, std::nullopt, seed);
            meta["construction"] = "constant";
            json gtext = json::array();
            for (const auto& g : ctv.g) gtext.push_back(g.str());
            meta["g"] = gtext;
            emit(io::variety_to_json(ctv.X, meta), out_path);
            return 0;
        }
        if (*con_from) {
            LinearCode c = load_code(from_code, ambient.make());
            auto sigma = parse_index_set(from_sigma, c.length());
            std::optional<HigherTerms> higher;
            if (from_linear) higher = HigherTerms{};
            StabilizedVariety sv = variety_from_code(c, sigma, higher);
            meta["construction"] = "from-code";
            json alpha = json::array();
            for (size_t v : sv.alpha) alpha.push_back(v + 1);
            meta["alpha"] = alpha;
            meta["sigma_nu"] = sv.sigma_nu + 1;
            meta["universal_word"] = io::format_point(sv.universal_word);
            emit(io::variety_to_json(sv.X, meta), out_path);
            return 0;
        }
        if (*con_fam) {
            CodeFamily fam = io::family_from_json(io::read_json_file(fam_file));
            auto gens = interpolate_code_family(fam);
            size_t n = fam.points.front().size();
            AffineVariety X(fam.field, fam.e, n, gens, n - fam.matrices.front().rows());
            meta["construction"] = "family";
            meta["points"] = fam.points.size();
            emit(io::variety_to_json(X, meta), out_path);
            return 0;
        }
        if (*con_cyc) {
            uint32_t m = splitting_degree(cyc_p, cyc_n);
            Field f = ambient.make().value_or(Field(cyc_p, m));
            CyclicAssembly ca = cyclic_assembly(f, cyc_n, seed);
            json out;
            out["construction"] = "cyclic-assembly";
            out["p"] = cyc_p;
            out["n"] = cyc_n;
            json comps = json::array();
            for (size_t i = 0; i < ca.components.size(); ++i) {
                json cj;
                cj["generator_degree"] = ca.specs[i].g.size() - 1;
                json gp = json::array();
                for (const auto& c : ca.specs[i].g) gp.push_back(c.str());
                cj["generator_poly"] = gp;
                cj["variety"] = io::variety_to_json(ca.components[i].X, json{{"seed", ca.components[i].seed}});
                comps.push_back(cj);
            }
            out["components"] = comps;
            emit(out, out_path);
            return 0;
        }
        if (*con_cnc) {
            uint32_t m = splitting_degree(cnc_p, cnc_n);
            Field fallback(cnc_p, m);
            // widen until the family is feasible when no ambient was forced
            std::optional<Field> forced = ambient.make();
            json out;
            for (uint32_t mult = 1; mult <= 8; ++mult) {
                Field f = forced.value_or(Field(cnc_p, m * mult));
                try {
                    CyclicPlusNoncyclic cp = cyclic_plus_noncyclic(f, cnc_n, cnc_k, cnc_m, seed);
                    out["construction"] = "cyclic-noncyclic";
                    out["s"] = cp.s;
                    out["cyclic_count"] = cp.cyclic_count;
                    out["family"] = io::family_to_json(cp.family);
                    size_t n = cnc_n;
                    AffineVariety X(f, cp.s, n, cp.generators, cnc_k);
                    out["variety"] = io::variety_to_json(X, json{{"seed", seed}});
                    emit(out, out_path);
                    return 0;
                } catch (const budget_error&) {
                    if (forced) throw;
                }
            }
            throw budget_error("no feasible ambient field within the widening limit");
        }
        if (*con_iso) {
            Field f = ambient.make().value_or(Field(2, 1));
            std::vector<MultiPoly> psis;
            std::stringstream ss(iso_psi);
            std::string part;
            while (std::getline(ss, part, ';')) psis.push_back(parse_poly(f, iso_n, part));
            auto perm = parse_index_set(iso_perm, iso_n);
            Morphism mor = isometry_morphism(psis, perm);
            emit(io::morphism_to_json(mor), out_path);
            return 0;
        }
        if (*con_ii) {
            CodeFamily fam = io::family_from_json(io::read_json_file(ii_family));
            Morphism mor = interpolate_isometries(fam);
            emit(io::morphism_to_json(mor), out_path);
            return 0;
        }
    }

    if (*cmd_pts) {
        AffineVariety X = io::variety_from_json(io::read_json_file(pts_variety));
        auto pts = X.rational_points(pts_s, EnumBudget{budget_enum});
        json j;
        j["count"] = pts.size();
        json arr = json::array();
        for (const auto& a : pts) arr.push_back(io::format_point(a));
        j["points"] = arr;
        emit(j, out_path);
        return 0;
    }

    if (*cmd_pre) {
        AffineVariety X = io::variety_from_json(io::read_json_file(pre_variety));
        GroebnerBudget budget{budget_groebner};
        DecoderTables tables = precompute(X, pre_t, budget, jobs, seed);
        emit(io::tables_to_json(tables), out_path);
        return 0;
    }

    if (*cmd_dec) {
        DecoderTables tables = io::tables_from_json(io::read_json_file(dec_tables));
        auto a = io::parse_point(tables.field, dec_point);
        auto w = io::parse_point(tables.field, dec_word);
        DecodeResult res = decode(tables, a, w);
        json j;
        j["codeword"] = io::format_point(res.codeword);
        j["error"] = io::format_point(res.error);
        json sup = json::array();
        for (size_t v : res.support) sup.push_back(v + 1);
        j["support"] = sup;
        emit(j, out_path);
        return 0;
    }

    if (*cmd_ver) {
        json rep;
        if (suite == "duality")
            rep = verify::duality(seed);
        else if (suite == "ops")
            rep = verify::ops(seed);
        else if (suite == "weights")
            rep = verify::weights(seed);
        else if (suite == "loci")
            rep = verify::loci();
        else if (suite == "decode-roundtrip")
            rep = verify::decode_roundtrip(seed);
        else if (suite == "deform")
            rep = verify::deform(seed == 1 ? 20240501 : seed);
        else
            throw parse_error("unknown suite: " + suite);
        emit(rep, out_path);
        return rep["pass"].get<bool>() ? 0 : 2;
    }

    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
