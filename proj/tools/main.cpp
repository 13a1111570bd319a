// z2r command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2r/claims.hpp"
#include "z2r/code.hpp"
#include "z2r/constructions.hpp"
#include "z2r/errors.hpp"
#include "z2r/io.hpp"
#include "z2r/lcd.hpp"
#include "z2r/report.hpp"
#include "z2r/search.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kCap = 3 };

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 1;
    unsigned cap = 24;
    unsigned jobs = 1;

    [[nodiscard]] bool record() const { return format == "record"; }
    [[nodiscard]] z2r::EnumLimits limits() const { return {cap, jobs}; }
};

void add_globals(CLI::App* cmd, Globals& g) {
    cmd->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "record"}));
    cmd->add_option("--seed", g.seed, "Random seed");
    cmd->add_option("--cap", g.cap, "Enumeration cap exponent (2^cap elements)");
    cmd->add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void emit_matrix(const z2r::MixedMatrix& m, const std::string& out_path) {
    if (out_path.empty())
        std::cout << z2r::serialize_matrix(m);
    else
        z2r::write_matrix_file(out_path, m);
}

void print_kv(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

std::string verdict(bool b) { return b ? "yes" : "no"; }

std::string distance(const std::optional<z2r::MinDistance>& d) {
    return d ? z2r::format_distance(*d) : "not computed";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over Z2^alpha x (Z2+uZ2)^beta: LCD tests, Gray images, constructions"};
    app.require_subcommand(1);
    Globals g;

    std::string file;
    auto* params = app.add_subcommand("params", "Type, size, Gray-image parameters and LCD flags");
    params->add_option("matrix", file, "Generator matrix file")->required();
    add_globals(params, g);

    auto* check = app.add_subcommand("check-lcd", "All LCD criteria for a code");
    check->add_option("matrix", file, "Generator matrix file")->required();
    add_globals(check, g);

    std::string out_path;
    auto* gray_cmd = app.add_subcommand("gray", "Generator of the Gray image (written as a beta=0 matrix)");
    gray_cmd->add_option("matrix", file, "Generator matrix file")->required();
    gray_cmd->add_option("-o,--output", out_path, "Output file");
    add_globals(gray_cmd, g);

    std::string strategy = "gray";
    auto* dual_cmd = app.add_subcommand("dual", "Generator matrix of the dual code");
    dual_cmd->add_option("matrix", file, "Generator matrix file")->required();
    dual_cmd->add_option("-o,--output", out_path, "Output file");
    dual_cmd->add_option("--strategy", strategy, "gray or structural")
        ->check(CLI::IsMember({"gray", "structural"}));
    add_globals(dual_cmd, g);

    auto* dist_cmd = app.add_subcommand("min-distance", "Minimum Lee distance by enumeration of the Gray image");
    dist_cmd->add_option("matrix", file, "Generator matrix file")->required();
    add_globals(dist_cmd, g);

    auto* indep_cmd = app.add_subcommand("r-independent", "Exhaustive R-independence test of the generator rows");
    indep_cmd->add_option("matrix", file, "Generator matrix file")->required();
    add_globals(indep_cmd, g);

    auto* construct = app.add_subcommand("construct", "LCD constructions");
    construct->require_subcommand(1);
    std::string g1_path, g2_path, a_path, b_path;
    std::size_t zero_width = 0;
    auto* concat_cmd = construct->add_subcommand("concat", "(G1 | G2), G1 binary LCD, G2 self-orthogonal");
    concat_cmd->add_option("--g1", g1_path, "Binary generator (beta=0 file)")->required();
    concat_cmd->add_option("--g2", g2_path, "Self-orthogonal generator")->required();
    concat_cmd->add_option("-o,--output", out_path, "Output matrix file");
    add_globals(concat_cmd, g);
    auto* kron_cmd = construct->add_subcommand("kron", "Kronecker product G1 (x) G2");
    kron_cmd->add_option("--g1", g1_path, "First generator")->required();
    kron_cmd->add_option("--g2", g2_path, "Second generator")->required();
    kron_cmd->add_option("-o,--output", out_path, "Output matrix file");
    add_globals(kron_cmd, g);
    auto* tmpl_cmd = construct->add_subcommand("template", "(I_k, A | 0, uB)");
    tmpl_cmd->add_option("--a", a_path, "Binary matrix A (beta=0 file)")->required();
    tmpl_cmd->add_option("--b", b_path, "R matrix B (alpha=0 file)")->required();
    tmpl_cmd->add_option("--zero-width", zero_width, "Width of the zero block in the R part");
    tmpl_cmd->add_option("-o,--output", out_path, "Output matrix file");
    add_globals(tmpl_cmd, g);

    z2r::SearchConfig sc;
    std::string filters = "gram,lcd", inject_path, log_path, table_path;
    auto* search_cmd = app.add_subcommand("search", "Seeded random search for LCD codes");
    search_cmd->add_option("--alpha", sc.shape.alpha, "Binary coordinates")->required();
    search_cmd->add_option("--beta", sc.shape.beta, "R coordinates")->required();
    search_cmd->add_option("--k", sc.k, "Generator rows")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--trials", sc.trials, "Number of trials")->check(CLI::PositiveNumber);
    search_cmd->add_option("--filters", filters, "Comma-separated filter order (gram,lcd,row-unit,gram-strict)");
    search_cmd->add_option("--inject", inject_path, "Matrix evaluated as trial 0");
    search_cmd->add_option("--log", log_path, "Append the event log to this file");
    search_cmd->add_option("--table", table_path, "Write the compacted table to this file");
    add_globals(search_cmd, g);

    std::string fixtures = Z2R_FIXTURE_DIR;
    std::size_t random_codes = 200;
    auto* claims_cmd = app.add_subcommand("paper-claims", "Re-run the published worked examples and laws");
    claims_cmd->add_option("--fixtures", fixtures, "Fixture directory");
    claims_cmd->add_option("--random", random_codes, "Random codes for the randomized laws");
    add_globals(claims_cmd, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*params) {
            const z2r::Code c(z2r::read_matrix_file(file));
            const auto r = z2r::make_report(c, g.limits());
            if (g.record())
                print_kv(z2r::to_record(r));
            else
                std::cout << z2r::to_text(r);
            return r.gray_d ? kOk : kCap;
        }
        if (*check) {
            const z2r::Code c(z2r::read_matrix_file(file));
            const auto r = z2r::analyze_lcd(c);
            if (g.record()) {
                nlohmann::json j;
                j["lcd"] = r.is_lcd;
                j["gram_invertible"] = r.gram_invertible;
                j["row_unit"] = r.row_unit_condition;
                j["r_independent"] = r.r_independent ? nlohmann::json(*r.r_independent) : nlohmann::json(nullptr);
                j["separable_sufficient"] = z2r::to_string(r.separable_sufficient);
                j["lcd_method"] = r.method_used;
                j["size"] = z2r::pow2_decimal(c.log2_size());
                j["dual_size"] = z2r::pow2_decimal(c.dual().log2_size());
                print_kv(j);
            } else {
                std::cout << "lcd (ground truth)       " << verdict(r.is_lcd) << "  (" << r.method_used << ")\n"
                          << "gram invertible         " << verdict(r.gram_invertible) << "\n"
                          << "row-unit condition      " << verdict(r.row_unit_condition) << "\n"
                          << "r-independent rows      "
                          << (r.r_independent ? verdict(*r.r_independent) : "unverified") << "\n"
                          << "separable sufficient    " << z2r::to_string(r.separable_sufficient) << "\n"
                          << "|C| = 2^" << c.log2_size() << ", |C-dual| = 2^" << c.dual().log2_size() << "\n";
            }
            return kOk;
        }
        if (*gray_cmd) {
            const z2r::Code c(z2r::read_matrix_file(file));
            emit_matrix(z2r::from_binary(c.gray_image().generator()), out_path);
            return kOk;
        }
        if (*dual_cmd) {
            const z2r::Code c(z2r::read_matrix_file(file));
            const auto s = strategy == "structural" ? z2r::DualStrategy::kStructural : z2r::DualStrategy::kGray;
            emit_matrix(c.dual(s).generator(), out_path);
            return kOk;
        }
        if (*dist_cmd) {
            const z2r::Code c(z2r::read_matrix_file(file));
            const auto d = c.min_lee_distance(g.limits());
            if (g.record())
                print_kv({{"gray_d", d ? nlohmann::json(*d) : nlohmann::json(nullptr)}});
            else
                std::cout << "d_L = " << z2r::format_distance(d) << "\n";
            return kOk;
        }
        if (*indep_cmd) {
            const auto m = z2r::read_matrix_file(file);
            const auto r = z2r::r_independent(m.row_list());
            if (g.record())
                print_kv({{"r_independent", r.independent},
                          {"coefficients_in_maximal_ideal", r.coefficients_in_maximal_ideal}});
            else
                std::cout << "r-independent " << verdict(r.independent) << "\n";
            return kOk;
        }
        if (*concat_cmd) {
            const auto r = z2r::concat_lcd(
                {z2r::to_binary(z2r::read_matrix_file(g1_path)), z2r::read_matrix_file(g2_path)}, g.limits());
            emit_matrix(r.code.generator(), out_path);
            nlohmann::json j{{"binary_gram_invertible", r.binary_gram_invertible},
                             {"gram_invertible", r.gram_invertible},
                             {"gram_identity", r.gram_identity},
                             {"lcd", r.is_lcd},
                             {"discrepancies", r.discrepancies}};
            if (r.distance) {
                j["d_code"] = z2r::format_distance(r.distance->code);
                j["d_first"] = z2r::format_distance(r.distance->first);
                j["d_second"] = z2r::format_distance(r.distance->second);
                j["distance_bound_holds"] = r.distance->holds;
            }
            if (g.record())
                std::cerr << j.dump() << "\n";
            else
                std::cerr << j.dump(2) << "\n";
            return kOk;
        }
        if (*kron_cmd) {
            const auto r = z2r::kronecker_lcd(z2r::Code(z2r::read_matrix_file(g1_path)),
                                              z2r::Code(z2r::read_matrix_file(g2_path)), g.limits());
            emit_matrix(r.code.generator(), out_path);
            nlohmann::json j{{"inputs_lcd", r.inputs_lcd},
                             {"extension_beyond_paper", r.extension_beyond_paper},
                             {"gram_factorization", r.gram_factorization},
                             {"lcd", r.is_lcd},
                             {"d_code", distance(r.distance)},
                             {"d_product", distance(r.expected_distance)},
                             {"discrepancies", r.discrepancies}};
            std::cerr << (g.record() ? j.dump() : j.dump(2)) << "\n";
            return kOk;
        }
        if (*tmpl_cmd) {
            const auto r = z2r::build_template(
                {z2r::to_binary(z2r::read_matrix_file(a_path)), zero_width, z2r::read_matrix_file(b_path)});
            emit_matrix(r.code.generator(), out_path);
            nlohmann::json j{{"condition_holds", r.condition_holds},
                             {"gram_invertible", r.gram_invertible},
                             {"lcd", r.is_lcd}};
            std::cerr << (g.record() ? j.dump() : j.dump(2)) << "\n";
            return kOk;
        }
        if (*search_cmd) {
            sc.seed = g.seed;
            sc.jobs = g.jobs;
            sc.distance_cap = g.cap;
            sc.filter_order.clear();
            std::stringstream ss(filters);
            for (std::string f; std::getline(ss, f, ',');)
                if (!f.empty()) sc.filter_order.push_back(f);
            if (!inject_path.empty()) sc.inject = z2r::read_matrix_file(inject_path);
            const auto res = z2r::run_search(sc);
            if (!log_path.empty()) {
                std::ofstream(log_path, std::ios::app | std::ios::binary) << res.log;
            }
            if (!table_path.empty()) {
                std::ofstream(table_path, std::ios::binary) << res.record.to_table();
            }
            const auto& c = res.counters;
            if (g.record()) {
                std::cout << res.record.to_table();
            } else {
                std::cout << "trials " << c.trials << ", recorded " << c.recorded << ", not LCD " << c.not_lcd
                          << ", filtered " << c.filtered << ", zero " << c.zero_code << ", cap " << c.cap_exceeded
                          << ", gram-accepted " << c.accepted_by_gram << "\n";
                for (const auto& [key, e] : res.record.entries())
                    std::cout << "[" << e.n << "," << e.k << "," << e.d << "]  trial " << e.trial << "  "
                              << z2r::compact_matrix(e.generator) << "\n";
            }
            return kOk;
        }
        if (*claims_cmd) {
            z2r::ClaimsConfig cfg{fixtures, g.seed, g.jobs, random_codes};
            const auto claims = z2r::run_paper_claims(cfg);
            if (g.record())
                for (const auto& c : claims) print_kv(z2r::claim_to_record(c));
            else
                std::cout << z2r::claims_to_text(claims);
            return kOk;
        }
    } catch (const z2r::CapExceeded& e) {
        std::cerr << "error: " << e.what();
        if (e.upper_bound()) std::cerr << " (best found: " << *e.upper_bound() << ")";
        std::cerr << "\n";
        return kCap;
    } catch (const z2r::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const z2r::ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const z2r::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
