// mpair: exact intersection pairings on the moduli spaces N_g and M_g
// of rank-two stable bundles, through symmetric-function generating
// series.  Every value printed is an exact rational.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mpair/envelope.hpp"
#include "mpair/errors.hpp"
#include "mpair/mod2.hpp"
#include "mpair/pairings.hpp"
#include "mpair/schur.hpp"
#include "mpair/version.hpp"

namespace {

using mpair::Json;

struct OutputOptions {
    std::string format = "text";
    bool no_cache = false;
    std::string cache_dir;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--no-cache", out.no_cache, "Bypass the result cache");
    cmd->add_option("--cache-dir", out.cache_dir,
                    "Cache directory (default: $MPAIR_CACHE_DIR or ~/.cache/mpair)");
}

// Runs compute() through the cache and prints the envelope.
void emit(const std::string& command, const Json& params, const OutputOptions& out,
          const std::function<Json()>& compute) {
    auto t0 = std::chrono::steady_clock::now();
    Json result;
    if (out.no_cache) {
        result = compute();
    } else {
        mpair::ResultCache cache(out.cache_dir);
        std::string key = mpair::ResultCache::make_key(command, params);
        if (auto hit = cache.lookup(key)) {
            result = *hit;
        } else {
            result = compute();
            cache.store(key, result);
        }
    }
    auto t1 = std::chrono::steady_clock::now();

    mpair::ResultEnvelope env;
    env.command = command;
    env.params = params;
    env.result = result;
    env.version = mpair::kEngineVersion;
    env.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (out.format == "json") {
        std::cout << env.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << mpair::render_csv(command, result);
    } else {
        std::cout << mpair::render_text(command, result) << "\n";
    }
}

Json symfn_payload(const mpair::SymFn& f, const std::string& basis) {
    mpair::SymFn shown = f.to_basis(mpair::parse_basis(basis));
    Json payload;
    payload["polynomial"] = mpair::json_symfn(shown);
    payload["nonzero_terms"] = shown.term_count();
    payload["degree"] = shown.degree();
    return payload;
}

// ---- pair expression grammar ------------------------------------------
//
// Whitespace-separated product of tokens:
//   a^n        alpha power (a_1 on M)
//   d[i]^n     delta_i (d_i on M)
//   x[i]^n     xi_i (z_i on M)
//   ab[i,j,k]  alpha^i beta^j gamma^k (N only)
//   psi[p]     p psi-pair factors psi_j psi_(j+g) (N only)
//   b1[j]      j pairs b_1^i b_1^(i+g) (M only, needs --as-printed)

struct PairMonomial {
    int alpha_power = 0;
    std::vector<int> delta_indices;
    std::vector<int> xi_indices;
    int ab_i = 0, ab_j = 0, ab_k = 0;
    bool has_ab = false;
    int psi_pairs = 0;
    int b1_pairs = 0;
    bool has_b1 = false;
};

std::vector<int> parse_bracket_ints(const std::string& tok, size_t open) {
    size_t close = tok.find(']', open);
    if (close == std::string::npos || close != tok.find_last_of(']'))
        throw mpair::ParseError("bad token: '" + tok + "'");
    std::vector<int> vals;
    std::string inner = tok.substr(open + 1, close - open - 1);
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            vals.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw mpair::ParseError("bad integer in token: '" + tok + "'");
        }
    }
    return vals;
}

int parse_power_suffix(const std::string& tok, size_t from) {
    if (from >= tok.size()) return 1;
    if (tok[from] != '^') throw mpair::ParseError("bad token: '" + tok + "'");
    try {
        int n = std::stoi(tok.substr(from + 1));
        if (n < 0) throw mpair::ParseError("negative power in '" + tok + "'");
        return n;
    } catch (const mpair::ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw mpair::ParseError("bad power in token: '" + tok + "'");
    }
}

PairMonomial parse_pair_expression(const std::string& expr) {
    PairMonomial mono;
    std::istringstream is(expr);
    std::string tok;
    while (is >> tok) {
        if (tok.rfind("ab[", 0) == 0) {
            auto vals = parse_bracket_ints(tok, 2);
            if (vals.size() != 3) throw mpair::ParseError("ab token needs [i,j,k]: '" + tok + "'");
            if (mono.has_ab)
                throw mpair::ParseError("at most one ab[i,j,k] token per expression");
            mono.ab_i = vals[0];
            mono.ab_j = vals[1];
            mono.ab_k = vals[2];
            mono.has_ab = true;
        } else if (tok.rfind("d[", 0) == 0) {
            auto vals = parse_bracket_ints(tok, 1);
            if (vals.size() != 1) throw mpair::ParseError("d token needs one index: '" + tok + "'");
            int n = parse_power_suffix(tok, tok.find(']') + 1);
            for (int r = 0; r < n; ++r) mono.delta_indices.push_back(vals[0]);
        } else if (tok.rfind("x[", 0) == 0) {
            auto vals = parse_bracket_ints(tok, 1);
            if (vals.size() != 1) throw mpair::ParseError("x token needs one index: '" + tok + "'");
            int n = parse_power_suffix(tok, tok.find(']') + 1);
            for (int r = 0; r < n; ++r) mono.xi_indices.push_back(vals[0]);
        } else if (tok.rfind("psi[", 0) == 0) {
            auto vals = parse_bracket_ints(tok, 3);
            if (vals.size() != 1) throw mpair::ParseError("psi token needs a count: '" + tok + "'");
            mono.psi_pairs += vals[0];
        } else if (tok.rfind("b1[", 0) == 0) {
            auto vals = parse_bracket_ints(tok, 2);
            if (vals.size() != 1) throw mpair::ParseError("b1 token needs a count: '" + tok + "'");
            mono.b1_pairs += vals[0];
            mono.has_b1 = true;
        } else if (tok == "a" || tok.rfind("a^", 0) == 0) {
            mono.alpha_power += parse_power_suffix(tok, 1);
        } else if (tok == "1") {
            // unit factor
        } else {
            throw mpair::ParseError("unknown token: '" + tok + "'");
        }
    }
    return mono;
}

Json run_pair(const PairMonomial& mono, mpair::Space space, int g, int k, bool as_printed) {
    Json result;
    if (mono.has_b1) {
        if (space != mpair::Space::M)
            throw mpair::ParseError("b1 tokens live on M; pass --space M");
        if (!as_printed)
            throw mpair::ParseError(
                "the b1-pair closed form requires --as-printed (it is known to be "
                "internally inconsistent; see the pair command help)");
        if (mono.alpha_power || !mono.delta_indices.empty() || mono.has_ab || mono.psi_pairs)
            throw mpair::ParseError("the as-printed route takes only x[i] tokens with b1[j]");
        mpair::B1PairingReport rep = mpair::b1_pairing(
            g, k, mono.b1_pairs, mpair::Partition(mono.xi_indices), true);
        result["printed_degree_ok"] = rep.printed_degree_ok;
        result["dimension_degree_ok"] = rep.dimension_degree_ok;
        if (rep.as_printed) result["value"] = mpair::json_rational(*rep.as_printed);
        if (rep.via_cn_z) result["via_cn_z"] = mpair::json_rational(*rep.via_cn_z);
        if (rep.mrec_reference) result["mrec_reference"] = mpair::json_rational(*rep.mrec_reference);
        result["note"] = rep.note;
        if (!rep.as_printed)
            throw mpair::DegreeMismatch("closed form not evaluable here: " + rep.note);
        return result;
    }
    if (mono.has_ab) {
        if (space != mpair::Space::N)
            throw mpair::ParseError("ab tokens are Newstead classes on N");
        int k_eff = k - mono.psi_pairs;
        if (k_eff < 1) throw mpair::DegreeMismatch("psi pairs exceed restriction genus");
        mpair::AbcPoly poly = mpair::AbcPoly::monomial(mono.ab_i, mono.ab_j, mono.ab_k, 1);
        poly = poly * mpair::AbcPoly::alpha().pow(static_cast<unsigned>(mono.alpha_power));
        for (int d : mono.delta_indices)
            poly = poly * mpair::class_in_abc(g, d, mpair::GeneratorClass::Delta);
        for (int x : mono.xi_indices)
            poly = poly * mpair::class_in_abc(g, x, mpair::GeneratorClass::Xi);
        mpair::Rational v = mpair::abc_pairing(k_eff, poly);
        if (mono.psi_pairs % 2) v = -v;
        result["value"] = mpair::json_rational(v);
        result["route"] = "newstead";
        return result;
    }
    mpair::Rational v = mpair::mixed_pairing(space, g, k, mono.alpha_power, mono.delta_indices,
                                             mono.xi_indices, mono.psi_pairs);
    result["value"] = mpair::json_rational(v);
    result["route"] = "cn";
    return result;
}

void apply_env_limits() {
    mpair::ResourceLimits lim = mpair::resource_limits();
    if (const char* s = std::getenv("MPAIR_NG_MAX"); s && *s) lim.ng_max = std::atoi(s);
    if (const char* s = std::getenv("MPAIR_MG_MAX"); s && *s) lim.mg_max = std::atoi(s);
    mpair::set_resource_limits(lim);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cup-product pairings on moduli of rank-two stable bundles"};
    app.require_subcommand(1);
    apply_env_limits();

    // ---- cn ----
    std::string cn_space = "N";
    int cn_g = 0, cn_k = -1;
    std::string cn_basis = "m", cn_classes = "";
    OutputOptions cn_out;
    CLI::App* cn = app.add_subcommand("cn", "Chern number polynomial of a restriction");
    cn->add_option("space", cn_space, "N, M, or tangent")->required()
        ->check(CLI::IsMember({"N", "M", "tangent"}));
    cn->add_option("g", cn_g, "ambient genus")->required();
    cn->add_option("k", cn_k, "restricted genus (defaults to g)");
    cn->add_option("--basis", cn_basis, "display basis")->check(CLI::IsMember({"m", "e"}))
        ->capture_default_str();
    cn->add_option("--classes", cn_classes,
                   "xi (default) or delta on N; z (default) or d on M");
    add_output_flags(cn, cn_out);

    // ---- pair ----
    std::string pair_expr, pair_space = "N";
    int pair_g = 0, pair_k = -1;
    bool pair_as_printed = false;
    OutputOptions pair_out;
    CLI::App* pair = app.add_subcommand(
        "pair", "Exact pairing of a class monomial against a fundamental class");
    pair->add_option("expr", pair_expr,
                     "product of tokens: a^n d[i]^n x[i]^n ab[i,j,k] psi[p] b1[j]")
        ->required();
    pair->add_option("-g,--genus", pair_g, "ambient genus")->required();
    pair->add_option("-k,--restriction", pair_k, "restricted genus (defaults to g)");
    pair->add_option("--space", pair_space, "N or M")->check(CLI::IsMember({"N", "M"}))
        ->capture_default_str();
    pair->add_flag("--as-printed", pair_as_printed,
                   "evaluate the b1-pair closed form exactly as stated; required for b1 "
                   "tokens because that form is internally inconsistent at j = 0 and "
                   "fails the dimension count for j > 0");
    add_output_flags(pair, pair_out);

    // ---- table1 ----
    int t1_gmax = 6;
    OutputOptions t1_out;
    CLI::App* t1 = app.add_subcommand("table1", "Mod-2 odd-pairing table rows");
    t1->add_option("--gmax", t1_gmax, "largest genus (<= 8; 7 and 8 are slow)")
        ->capture_default_str();
    add_output_flags(t1, t1_out);

    // ---- nilpotency ----
    std::string nil_target;
    int nil_g = 0;
    OutputOptions nil_out;
    CLI::App* nil = app.add_subcommand("nilpotency", "Mod-2 nilpotency certificates");
    nil->add_option("target", nil_target, "alpha or a1")->required()
        ->check(CLI::IsMember({"alpha", "a1"}));
    nil->add_option("g", nil_g, "genus")->required();
    add_output_flags(nil, nil_out);

    // ---- schur ----
    std::string schur_outer, schur_inner = "[]", schur_basis = "m";
    OutputOptions schur_out;
    CLI::App* schur = app.add_subcommand("schur", "Skew Schur function of a shape");
    schur->add_option("outer", schur_outer, "outer partition, e.g. [2,2,2,1]")->required();
    schur->add_option("inner", schur_inner, "inner partition, e.g. [1]");
    schur->add_option("--basis", schur_basis, "display basis")
        ->check(CLI::IsMember({"m", "e"}))->capture_default_str();
    add_output_flags(schur, schur_out);

    // ---- kostka ----
    std::string kostka_outer, kostka_inner, kostka_type;
    OutputOptions kostka_out;
    CLI::App* kostka = app.add_subcommand("kostka", "Skew Kostka number by tableau count");
    kostka->add_option("outer", kostka_outer)->required();
    kostka->add_option("inner", kostka_inner)->required();
    kostka->add_option("type", kostka_type)->required();
    add_output_flags(kostka, kostka_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cn) {
            if (cn_k < 0) cn_k = cn_g;
            if (cn_classes.empty()) cn_classes = cn_space == "M" ? "z" : "xi";
            mpair::CNKind kind;
            if (cn_space == "tangent") {
                kind = mpair::CNKind::Tangent;
                cn_k = cn_g;
                cn_classes = "tangent";
            } else if (cn_space == "N") {
                if (cn_classes == "xi") kind = mpair::CNKind::XiRestriction;
                else if (cn_classes == "delta") kind = mpair::CNKind::DeltaRestriction;
                else throw mpair::ParseError("--classes on N must be xi or delta");
            } else {
                if (cn_classes == "z") kind = mpair::CNKind::ZRestriction;
                else if (cn_classes == "d") kind = mpair::CNKind::DRestriction;
                else throw mpair::ParseError("--classes on M must be z or d");
            }
            Json params;
            params["space"] = cn_space;
            params["g"] = cn_g;
            params["k"] = cn_k;
            params["classes"] = cn_classes;
            params["basis"] = cn_basis;
            emit("cn", params, cn_out, [&] {
                const mpair::CNPolynomial& cnp = mpair::cn_by_kind(kind, cn_g, cn_k);
                Json result = symfn_payload(cnp.data, cn_basis);
                result["space"] = cn_space;
                result["g"] = cn_g;
                result["k"] = cn_k;
                result["classes"] = cn_classes;
                return result;
            });
        } else if (*pair) {
            if (pair_k < 0) pair_k = pair_g;
            PairMonomial mono = parse_pair_expression(pair_expr);
            mpair::Space space = pair_space == "M" ? mpair::Space::M : mpair::Space::N;
            Json params;
            params["expr"] = pair_expr;
            params["space"] = pair_space;
            params["g"] = pair_g;
            params["k"] = pair_k;
            params["as_printed"] = pair_as_printed;
            if (mono.has_b1 && pair_as_printed)
                std::cerr << "warning: evaluating the b1-pair closed form exactly as stated; "
                             "it disagrees with the dimension count and the j = 0 route\n";
            emit("pair", params, pair_out,
                 [&] { return run_pair(mono, space, pair_g, pair_k, pair_as_printed); });
        } else if (*t1) {
            Json params;
            params["gmax"] = t1_gmax;
            emit("table1", params, t1_out, [&] {
                Json result;
                Json rows = Json::array();
                for (const auto& row : mpair::table1(t1_gmax))
                    rows.push_back(mpair::json_parity_row(row));
                result["rows"] = std::move(rows);
                return result;
            });
        } else if (*nil) {
            Json params;
            params["target"] = nil_target;
            params["g"] = nil_g;
            emit("nilpotency", params, nil_out, [&] {
                Json result;
                result["target"] = nil_target;
                result["g"] = nil_g;
                if (nil_target == "alpha") {
                    mpair::AlphaNilpotencyCertificate c = mpair::nilpotency_alpha(nil_g);
                    result["even_power_certified"] = c.power_g_even;
                    result["completions_checked"] = c.completions_checked;
                    result["odd_witness"] = c.odd_witness;
                    result["odd_witness_value"] = mpair::json_rational(c.odd_witness_value);
                    result["certified"] = c.certified();
                } else {
                    mpair::A1NilpotencyCertificate c = mpair::nilpotency_a1(nil_g);
                    result["even_power_certified"] = c.power_2g_even_on_covered;
                    result["completions_checked"] = c.completions_checked;
                    result["odd_witness"] = c.odd_witness;
                    result["odd_witness_value"] = mpair::json_rational(c.odd_witness_value);
                    Json window = Json::array();
                    for (int j : c.odd_window) window.push_back(j);
                    result["odd_window"] = std::move(window);
                    result["window_matches"] = c.window_matches;
                    result["coverage"] = c.coverage_note;
                    result["certified"] = c.certified();
                }
                return result;
            });
        } else if (*schur) {
            mpair::Partition outer = mpair::Partition::parse(schur_outer);
            mpair::Partition inner = mpair::Partition::parse(schur_inner);
            Json params;
            params["outer"] = mpair::json_partition(outer);
            params["inner"] = mpair::json_partition(inner);
            params["basis"] = schur_basis;
            emit("schur", params, schur_out, [&] {
                mpair::SymFn s = mpair::skew_schur(mpair::SkewShape(outer, inner));
                Json result = symfn_payload(s, schur_basis);
                result["outer"] = mpair::json_partition(outer);
                result["inner"] = mpair::json_partition(inner);
                return result;
            });
        } else if (*kostka) {
            mpair::Partition outer = mpair::Partition::parse(kostka_outer);
            mpair::Partition inner = mpair::Partition::parse(kostka_inner);
            mpair::Partition type = mpair::Partition::parse(kostka_type);
            Json params;
            params["outer"] = mpair::json_partition(outer);
            params["inner"] = mpair::json_partition(inner);
            params["type"] = mpair::json_partition(type);
            emit("kostka", params, kostka_out, [&] {
                mpair::Int count = mpair::kostka_ssyt(mpair::SkewShape(outer, inner), type);
                Json result;
                result["count"] = count.get_str();
                return result;
            });
        }
    } catch (const mpair::ResourceGuard& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const mpair::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
