#include "walkmom/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkmom/amatrix.hpp"
#include "walkmom/congruence.hpp"
#include "walkmom/denominators.hpp"
#include "walkmom/errors.hpp"
#include "walkmom/moments.hpp"
#include "walkmom/numtheory.hpp"
#include "walkmom/render.hpp"

namespace walkmom::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Human, Csv, Json };

struct Global {
    std::string format = "human";
    unsigned threads = 0;
    bool quiet = false;

    Format fmt() const {
        if (format == "human") return Format::Human;
        if (format == "csv") return Format::Csv;
        if (format == "json") return Format::Json;
        throw std::domain_error("unknown format: " + format + " (expected human, csv or json)");
    }
};

const char* status_name(RnuReport::Status s) {
    switch (s) {
        case RnuReport::Status::MatchesConjecture: return "MatchesConjecture";
        case RnuReport::Status::BelowConjecture: return "BelowConjecture";
        case RnuReport::Status::ExceedsConjecture: return "ExceedsConjecture";
        case RnuReport::Status::ExceedsUpperBound: return "ExceedsUpperBound";
    }
    return "?";
}

void emit_json(std::ostream& out, ordered_json j) {
    j["schema"] = 1;
    out << j.dump(2) << '\n';
}

// Denominator reports for nu = 0 are assembled by hand: the slab is all
// integers, the bounds degenerate to 1, and there are no witnesses.
RnuReport make_report(std::int64_t nu, std::int64_t K, unsigned threads) {
    if (nu >= 1) return verify_conjecture(nu, K, threads);
    RnuReport rep;
    rep.nu = nu;
    rep.K = K;
    rep.truncated_r = truncated_r(nu, K, threads);
    rep.conjectured = 1;
    rep.upper = 1;
    rep.status = rep.truncated_r.is_one() ? RnuReport::Status::MatchesConjecture
                                          : RnuReport::Status::ExceedsConjecture;
    return rep;
}

ordered_json witness_json(const WitnessResult& w) {
    return ordered_json{{"p", w.p},
                        {"alpha", w.alpha},
                        {"r", w.r},
                        {"entry_k", w.entry_k},
                        {"entry_j", w.entry_j},
                        {"denominator", w.denominator.str()},
                        {"verified", w.verified},
                        {"minimal_r_failed", w.minimal_r_failed}};
}

bool all_witnesses_ok(const RnuReport& rep) {
    for (const auto& w : rep.witnesses) {
        if (!w.verified) return false;
    }
    return true;
}

void print_witness_lines(std::ostream& out, const std::vector<WitnessResult>& ws) {
    for (const auto& w : ws) {
        out << "witness p=" << w.p << " alpha=" << w.alpha << " r=" << w.r << " entry=("
            << w.entry_k << "," << w.entry_j << ") denominator=" << w.denominator << " "
            << (w.verified ? "ok" : "FAILED");
        if (w.minimal_r_failed) out << " (minimal r failed; red flag)";
        out << '\n';
    }
}

int cmd_moment(const Global& g, std::ostream& out, std::int64_t nu, std::int64_t n,
               std::int64_t k, const std::string& method) {
    std::optional<Rational> direct, matrix;
    if (method == "direct" || method == "both") direct = moment_direct(nu, n, k);
    if (method == "matrix" || method == "both") {
        matrix = row_sums_of_power(nu, n - 1, k + 1).at(static_cast<std::size_t>(k));
    }
    if (method != "direct" && method != "matrix" && method != "both") {
        throw std::domain_error("moment: unknown method " + method);
    }
    const bool both = direct && matrix;
    const bool agree = !both || *direct == *matrix;

    switch (g.fmt()) {
        case Format::Human:
            if (both) {
                out << "direct: " << *direct << '\n'
                    << "matrix: " << *matrix << '\n'
                    << "agree: " << (agree ? "yes" : "NO") << '\n';
            } else {
                out << (direct ? *direct : *matrix) << '\n';
            }
            break;
        case Format::Csv:
            out << "method,value\n";
            if (direct) out << "direct," << *direct << '\n';
            if (matrix) out << "matrix," << *matrix << '\n';
            if (both) out << "agree," << (agree ? "true" : "false") << '\n';
            break;
        case Format::Json: {
            ordered_json j{{"command", "moment"}, {"nu", nu}, {"n", n}, {"k", k}};
            if (direct) j["direct"] = direct->str();
            if (matrix) j["matrix"] = matrix->str();
            if (both) j["agree"] = agree;
            emit_json(out, std::move(j));
            break;
        }
    }
    return agree ? kExitOk : kExitVerifyFailed;
}

int cmd_matrix(const Global& g, std::ostream& out, std::int64_t nu, std::int64_t K) {
    const AMatrix m = build_matrix(nu, K);
    switch (g.fmt()) {
        case Format::Human: {
            // column widths over the lower triangle
            std::vector<std::size_t> width(static_cast<std::size_t>(K), 0);
            for (std::int64_t k = 0; k < K; ++k) {
                for (std::int64_t j = 0; j <= k; ++j) {
                    width[static_cast<std::size_t>(j)] = std::max(
                        width[static_cast<std::size_t>(j)], m.at(k, j).str().size());
                }
            }
            for (std::int64_t k = 0; k < K; ++k) {
                for (std::int64_t j = 0; j <= k; ++j) {
                    if (j > 0) out << ' ';
                    out << std::setw(static_cast<int>(width[static_cast<std::size_t>(j)]))
                        << m.at(k, j).str();
                }
                out << '\n';
            }
            break;
        }
        case Format::Csv:
            out << "k,j,value\n";
            for (std::int64_t k = 0; k < K; ++k) {
                for (std::int64_t j = 0; j <= k; ++j) {
                    out << k << ',' << j << ',' << m.at(k, j) << '\n';
                }
            }
            break;
        case Format::Json: {
            ordered_json rows = ordered_json::array();
            for (std::int64_t k = 0; k < K; ++k) {
                ordered_json row = ordered_json::array();
                for (std::int64_t j = 0; j <= k; ++j) row.push_back(m.at(k, j).str());
                rows.push_back(std::move(row));
            }
            emit_json(out, ordered_json{{"command", "matrix"}, {"nu", nu}, {"K", K},
                                        {"rows", std::move(rows)}});
            break;
        }
    }
    return kExitOk;
}

int emit_report(const Global& g, std::ostream& out, const RnuReport& rep, bool gate_on_match) {
    switch (g.fmt()) {
        case Format::Human:
            out << "nu=" << rep.nu << " K=" << rep.K << '\n'
                << "truncated_r: " << rep.truncated_r << '\n'
                << "conjectured: " << rep.conjectured << '\n'
                << "upper_bound: " << rep.upper << '\n'
                << "tightened_bound: " << rep.tightened.value() << " (" << rep.tightened.str()
                << ")\n"
                << "status: " << status_name(rep.status) << '\n';
            if (rep.violation) {
                out << "violating entry: (k=" << rep.violation->k << ", j=" << rep.violation->j
                    << ") denominator=" << rep.violation->denominator << '\n';
            }
            print_witness_lines(out, rep.witnesses);
            break;
        case Format::Csv: {
            std::size_t ok = 0;
            for (const auto& w : rep.witnesses) ok += w.verified ? 1 : 0;
            out << "nu,K,truncated_r,conjectured,upper,tightened,status,witnesses_verified,"
                   "witnesses_total\n"
                << rep.nu << ',' << rep.K << ',' << rep.truncated_r << ',' << rep.conjectured
                << ',' << rep.upper << ',' << rep.tightened.str() << ','
                << status_name(rep.status) << ',' << ok << ',' << rep.witnesses.size() << '\n';
            break;
        }
        case Format::Json: {
            ordered_json j{{"command", "rnu"},
                           {"nu", rep.nu},
                           {"K", rep.K},
                           {"truncated_r", rep.truncated_r.str()},
                           {"conjectured", rep.conjectured.str()},
                           {"upper", rep.upper.str()},
                           {"tightened", rep.tightened.str()},
                           {"tightened_value", rep.tightened.value().str()},
                           {"status", status_name(rep.status)}};
            if (rep.violation) {
                j["violation"] = ordered_json{{"k", rep.violation->k},
                                              {"j", rep.violation->j},
                                              {"denominator", rep.violation->denominator.str()}};
            }
            ordered_json ws = ordered_json::array();
            for (const auto& w : rep.witnesses) ws.push_back(witness_json(w));
            j["witnesses"] = std::move(ws);
            emit_json(out, std::move(j));
            break;
        }
    }
    const bool matched = rep.status == RnuReport::Status::MatchesConjecture;
    const bool sound = rep.status != RnuReport::Status::ExceedsConjecture &&
                       rep.status != RnuReport::Status::ExceedsUpperBound;
    const bool ok = all_witnesses_ok(rep) && (gate_on_match ? matched : sound);
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_witness(const Global& g, std::ostream& out, std::int64_t nu) {
    const auto ws = all_backwards_witnesses(nu);
    bool all_ok = true;
    for (const auto& w : ws) all_ok = all_ok && w.verified;
    switch (g.fmt()) {
        case Format::Human:
            out << "nu=" << nu << " central_binomial=" << binomial(2 * nu - 1, nu) << '\n';
            print_witness_lines(out, ws);
            out << (all_ok ? "all witnesses verified" : "WITNESS FAILURE") << '\n';
            break;
        case Format::Csv:
            out << "p,alpha,r,entry_k,entry_j,denominator,verified,minimal_r_failed\n";
            for (const auto& w : ws) {
                out << w.p << ',' << w.alpha << ',' << w.r << ',' << w.entry_k << ','
                    << w.entry_j << ',' << w.denominator << ',' << (w.verified ? "true" : "false")
                    << ',' << (w.minimal_r_failed ? "true" : "false") << '\n';
            }
            break;
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& w : ws) arr.push_back(witness_json(w));
            emit_json(out, ordered_json{{"command", "witness"},
                                        {"nu", nu},
                                        {"central_binomial", binomial(2 * nu - 1, nu).str()},
                                        {"witnesses", std::move(arr)},
                                        {"all_verified", all_ok}});
            break;
        }
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_table(const Global& g, std::ostream& out, std::int64_t nu_max,
              std::int64_t star_witness_bound) {
    const auto rows = table_compare(nu_max);

    auto attained = [&](std::int64_t nu) {
        std::string s;
        const Factorization star = star_bound(nu);
        for (const auto& e : star.entries()) {
            const auto j = star_equality_witness(nu, e.prime.to_int64(), star_witness_bound);
            if (!s.empty()) s += ';';
            s += e.prime.str();
            s += j ? ":j=" + std::to_string(*j) : ":none";
        }
        return s.empty() ? std::string("-") : s;
    };

    switch (g.fmt()) {
        case Format::Human: {
            out << std::left << std::setw(4) << "nu" << std::setw(34) << "run_gcd_bound"
                << "factorial\n";
            for (const auto& r : rows) {
                out << std::left << std::setw(4) << r.nu << std::setw(34) << r.star.str()
                    << r.factorial.str() << '\n';
            }
            if (star_witness_bound > 0) {
                for (const auto& r : rows) {
                    out << "equality witnesses nu=" << r.nu << ": " << attained(r.nu) << '\n';
                }
            }
            break;
        }
        case Format::Csv:
            out << "nu,run_gcd_bound,factorial";
            if (star_witness_bound > 0) out << ",equality_witnesses";
            out << '\n';
            for (const auto& r : rows) {
                out << r.nu << ',' << r.star.str() << ',' << r.factorial.str();
                if (star_witness_bound > 0) out << ',' << attained(r.nu);
                out << '\n';
            }
            break;
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row{{"nu", r.nu},
                                 {"run_gcd_bound", r.star.str()},
                                 {"factorial", r.factorial.str()}};
                if (star_witness_bound > 0) row["equality_witnesses"] = attained(r.nu);
                arr.push_back(std::move(row));
            }
            emit_json(out, ordered_json{{"command", "table"}, {"rows", std::move(arr)}});
            break;
        }
    }
    return kExitOk;
}

CongruenceCase make_case(const std::string& kind, std::int64_t nu, std::int64_t k,
                         std::int64_t p) {
    if (kind == "prime-k") return CongruenceCase::prime_k(nu, k);
    if (kind == "prime-k-plus-nu") return CongruenceCase::prime_k_plus_nu(nu, k);
    if (kind == "prime-square") return CongruenceCase::prime_square(p);
    if (kind == "crt-product") return CongruenceCase::crt_product(nu, k);
    throw std::domain_error("congruence: unknown kind " + kind);
}

int cmd_congruence(const Global& g, std::ostream& out, const CongruenceCase& c,
                   std::int64_t n_from, std::int64_t n_to) {
    if (n_from < 1 || n_to < n_from) {
        throw std::domain_error("congruence: need 1 <= n-from <= n-to");
    }
    std::vector<ResidueReport> reports;
    for (std::int64_t n = n_from; n <= n_to; ++n) reports.push_back(check_theorem_mod(c, n));
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    switch (g.fmt()) {
        case Format::Human:
            out << c.describe() << '\n';
            for (const auto& r : reports) {
                out << "n=" << r.n << " residue=" << r.residue << " expected=" << r.expected
                    << ' ' << (r.pass ? "pass" : "FAIL") << '\n';
            }
            out << (all_pass ? "all passed" : "FAILURE") << '\n';
            break;
        case Format::Csv:
            out << "kind,nu,k,modulus,n,residue,expected,pass\n";
            for (const auto& r : reports) {
                out << kind_name(c.kind()) << ',' << r.nu << ',' << r.k << ',' << r.modulus
                    << ',' << r.n << ',' << r.residue << ',' << r.expected << ','
                    << (r.pass ? "true" : "false") << '\n';
            }
            break;
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back(ordered_json{{"n", r.n},
                                           {"residue", r.residue.str()},
                                           {"expected", r.expected.str()},
                                           {"pass", r.pass}});
            }
            emit_json(out, ordered_json{{"command", "congruence"},
                                        {"kind", kind_name(c.kind())},
                                        {"nu", c.nu()},
                                        {"k", c.k()},
                                        {"modulus", c.modulus().str()},
                                        {"rows", std::move(arr)},
                                        {"all_pass", all_pass}});
            break;
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_scan(const Global& g, std::ostream& out, std::int64_t nu, std::int64_t k,
             std::int64_t modulus, std::int64_t n_max) {
    const ResidueScan scan = scan_residues(nu, k, Integer(modulus), n_max);
    const bool judged = scan.theorem_case.has_value();
    bool all_match = true;
    for (const auto& r : scan.rows) all_match = all_match && r.residue && r.matches_n;

    switch (g.fmt()) {
        case Format::Human:
            out << "nu=" << nu << " k=" << k << " modulus=" << modulus << " mode="
                << (judged ? kind_name(*scan.theorem_case) : "exploration") << '\n';
            for (const auto& r : scan.rows) {
                out << "n=" << r.n << " residue=";
                if (r.residue) {
                    out << *r.residue;
                } else {
                    out << "undefined(NonIntegralResidue)";
                }
                out << " n_mod_m=" << r.expected;
                if (judged) out << ' ' << (r.residue && r.matches_n ? "pass" : "FAIL");
                out << '\n';
            }
            break;
        case Format::Csv:
            out << "n,residue,n_mod_m,matches_n,defined\n";
            for (const auto& r : scan.rows) {
                out << r.n << ',' << (r.residue ? r.residue->str() : "") << ',' << r.expected
                    << ',' << (r.residue && r.matches_n ? "true" : "false") << ','
                    << (r.residue ? "true" : "false") << '\n';
            }
            break;
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : scan.rows) {
                ordered_json row{{"n", r.n}, {"n_mod_m", r.expected.str()}};
                if (r.residue) {
                    row["residue"] = r.residue->str();
                    row["matches_n"] = r.matches_n;
                } else {
                    row["residue"] = nullptr;
                }
                arr.push_back(std::move(row));
            }
            emit_json(out, ordered_json{{"command", "scan"},
                                        {"nu", nu},
                                        {"k", k},
                                        {"modulus", modulus},
                                        {"mode", judged ? kind_name(*scan.theorem_case)
                                                        : "exploration"},
                                        {"rows", std::move(arr)}});
            break;
        }
    }
    // Exploration never fails; a judged scan is a verification.
    return (!judged || all_match) ? kExitOk : kExitVerifyFailed;
}

int cmd_render(const Global& g, std::ostream& out, std::int64_t nu, std::int64_t rows,
               const std::string& out_path, const std::string& palette_path,
               const std::string& grid_csv_path) {
    Palette palette;
    if (!palette_path.empty()) {
        std::ifstream in(palette_path);
        if (!in) throw std::domain_error("render: cannot read palette file " + palette_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        palette = parse_palette(buf.str());
    } else {
        palette = default_palette(nu);
    }

    const DenominatorGrid grid = denominator_grid(nu, rows, g.threads);
    RenderStats stats;
    const auto bytes = render_image(grid, palette, &stats);

    std::ofstream img(out_path, std::ios::binary);
    if (!img) throw std::domain_error("render: cannot write " + out_path);
    img.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    img.close();

    if (!grid_csv_path.empty()) {
        std::ofstream csv(grid_csv_path);
        if (!csv) throw std::domain_error("render: cannot write " + grid_csv_path);
        csv << dump_grid_csv(grid);
    }

    Integer den_lcm = 1;
    for (const auto& c : grid.cells()) den_lcm = lcm(den_lcm, c.denominator);

    switch (g.fmt()) {
        case Format::Human:
            out << "nu=" << nu << " rows=" << rows << '\n'
                << "non_integer_entries: " << stats.cells << '\n'
                << "denominator_lcm: " << den_lcm << '\n'
                << "palette_hits: " << stats.palette_hits << '\n'
                << "known_fallback: " << stats.known_fallback << '\n'
                << "black_pixels: " << stats.unknown_fallback << '\n'
                << "image: " << out_path << '\n';
            break;
        case Format::Csv:
            out << "nu,rows,non_integer_entries,denominator_lcm,palette_hits,known_fallback,"
                   "black_pixels\n"
                << nu << ',' << rows << ',' << stats.cells << ',' << den_lcm << ','
                << stats.palette_hits << ',' << stats.known_fallback << ','
                << stats.unknown_fallback << '\n';
            break;
        case Format::Json:
            emit_json(out, ordered_json{{"command", "render"},
                                        {"nu", nu},
                                        {"rows", rows},
                                        {"non_integer_entries", stats.cells},
                                        {"denominator_lcm", den_lcm.str()},
                                        {"palette_hits", stats.palette_hits},
                                        {"known_fallback", stats.known_fallback},
                                        {"black_pixels", stats.unknown_fallback},
                                        {"image", out_path}});
            break;
    }
    return kExitOk;
}

unsigned env_default_threads() {
    if (const char* v = std::getenv("WALKMOM_THREADS")) {
        const long t = std::strtol(v, nullptr, 10);
        if (t > 0) return static_cast<unsigned>(t);
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();

    CLI::App app{"Exact even moments of uniform random walks: moment matrices, denominator "
                 "structure, congruences, and denominator-fractal renders"};
    app.require_subcommand(1);

    Global g;
    g.threads = env_default_threads();
    app.add_option("--format", g.format, "Output format: human, csv or json")
        ->capture_default_str();
    app.add_option("--threads", g.threads,
                   "Worker threads for slab scans (0 = hardware; env WALKMOM_THREADS)");
    app.add_flag("--quiet", g.quiet, "Suppress the timing line on stderr");

    int exit_code = kExitOk;

    // moment
    std::int64_t m_nu = 0, m_n = 1, m_k = 0;
    std::string m_method = "both";
    auto* moment = app.add_subcommand("moment", "One even moment, by one or both methods");
    moment->add_option("--nu", m_nu, "Dimension parameter (d = 2nu + 2)")->required();
    moment->add_option("--n", m_n, "Number of steps")->required();
    moment->add_option("--k", m_k, "Half the moment order (moment of order 2k)")->required();
    moment->add_option("--method", m_method, "direct, matrix or both")->capture_default_str();
    moment->callback([&] { exit_code = cmd_moment(g, out, m_nu, m_n, m_k, m_method); });

    // matrix
    std::int64_t x_nu = 0, x_K = 8;
    auto* matrix = app.add_subcommand("matrix", "Lower-triangular corner of the moment matrix");
    matrix->add_option("--nu", x_nu, "Dimension parameter")->required();
    matrix->add_option("--K", x_K, "Number of rows")->capture_default_str();
    matrix->callback([&] { exit_code = cmd_matrix(g, out, x_nu, x_K); });

    // rnu
    std::int64_t r_nu = 0, r_K = 200;
    auto* rnu = app.add_subcommand("rnu", "Denominator report for one nu (truncated LCM, "
                                          "bounds, witnesses)");
    rnu->add_option("--nu", r_nu, "Dimension parameter")->required();
    rnu->add_option("--K", r_K, "Scan rows 0..K")->capture_default_str();
    rnu->callback([&] {
        exit_code = emit_report(g, out, make_report(r_nu, r_K, g.threads),
                                /*gate_on_match=*/false);
    });

    // verify
    std::int64_t v_nu = 1, v_K = 200;
    auto* verify = app.add_subcommand("verify", "Assert the conjectured denominator LCM on a "
                                                "truncated slab");
    verify->add_option("--nu", v_nu, "Dimension parameter (>= 1)")->required();
    verify->add_option("--K", v_K, "Scan rows 0..K")->capture_default_str();
    verify->callback([&] {
        exit_code = emit_report(g, out, make_report(v_nu, v_K, g.threads),
                                /*gate_on_match=*/true);
    });

    // witness
    std::int64_t w_nu = 1;
    auto* witness = app.add_subcommand("witness", "Lower-bound witness entries for every "
                                                  "maximal prime power of C(2nu-1,nu)");
    witness->add_option("--nu", w_nu, "Dimension parameter (>= 1)")->required();
    witness->callback([&] { exit_code = cmd_witness(g, out, w_nu); });

    // table
    std::int64_t t_max = 10, t_star_bound = 0;
    auto* table = app.add_subcommand("table", "Per-prime run-gcd bound next to (2nu-1)! for "
                                              "nu = 1..max");
    table->add_option("--max", t_max, "Largest nu")->capture_default_str();
    table->add_option("--star-witness-bound", t_star_bound,
                      "Also search j <= bound for per-prime equality witnesses");
    table->callback([&] { exit_code = cmd_table(g, out, t_max, t_star_bound); });

    // congruence
    std::string c_kind;
    std::int64_t c_nu = 0, c_k = 0, c_p = 0, c_from = 1, c_to = 6;
    auto* congruence = app.add_subcommand("congruence", "Check the moment congruence for a "
                                                        "range of step counts");
    congruence->add_option("--kind", c_kind,
                           "prime-k, prime-k-plus-nu, prime-square or crt-product")
        ->required();
    congruence->add_option("--nu", c_nu, "Dimension parameter");
    congruence->add_option("--k", c_k, "Half the moment order");
    congruence->add_option("--p", c_p, "Prime (prime-square only; k = p^2)");
    congruence->add_option("--n-from", c_from, "First step count")->capture_default_str();
    congruence->add_option("--n-to", c_to, "Last step count")->capture_default_str();
    congruence->callback([&] {
        exit_code = cmd_congruence(g, out, make_case(c_kind, c_nu, c_k, c_p), c_from, c_to);
    });

    // scan
    std::int64_t s_nu = 0, s_k = 0, s_mod = 2, s_nmax = 10;
    auto* scan = app.add_subcommand("scan", "Residues of moments modulo an arbitrary modulus "
                                            "(exploration)");
    scan->add_option("--nu", s_nu, "Dimension parameter")->required();
    scan->add_option("--k", s_k, "Half the moment order")->required();
    scan->add_option("--modulus", s_mod, "Modulus (>= 2)")->required();
    scan->add_option("--n-max", s_nmax, "Step counts 1..n-max")->capture_default_str();
    scan->callback([&] { exit_code = cmd_scan(g, out, s_nu, s_k, s_mod, s_nmax); });

    // render
    std::int64_t d_nu = 5, d_rows = 1000;
    std::string d_out, d_palette, d_grid_csv;
    auto* render = app.add_subcommand("render", "Denominator-fractal pixmap of the "
                                                "non-integer entries");
    render->add_option("--nu", d_nu, "Dimension parameter")->required();
    render->add_option("--rows", d_rows, "Rows (image is rows x rows)")->capture_default_str();
    render->add_option("--out", d_out, "Output pixmap path (binary P6)")->required();
    render->add_option("--palette", d_palette, "Palette file (see README)");
    render->add_option("--grid-csv", d_grid_csv, "Also dump the grid as CSV to this path");
    render->callback([&] {
        exit_code = cmd_render(g, out, d_nu, d_rows, d_out, d_palette, d_grid_csv);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("walkmom");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const arithmetic_integrity_error& e) {
        err << "ARITHMETIC INTEGRITY: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const non_integral_residue& e) {
        err << "NonIntegralResidue: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!g.quiet) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        err << "elapsed: " << elapsed.count() << " ms\n";
    }
    return exit_code;
}

} // namespace walkmom::cli
