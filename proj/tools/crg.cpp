#include "crg/bounds.hpp"
#include "crg/errors.hpp"
#include "crg/fielddata.hpp"
#include "crg/forms.hpp"
#include "crg/sieve.hpp"
#include "crg/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    unsigned precision = crg::Context::kDefaultPrecision;
    std::string delta = "proven";
    std::string fields_path;
    std::string format = "text";
};

crg::FieldTable load_table(const RunConfig& cfg)
{
    return cfg.fields_path.empty() ? crg::FieldTable::embedded() : crg::FieldTable::load_file(cfg.fields_path);
}

nlohmann::ordered_json interval(const crg::BoundedReal& x)
{
    return {{"mid", x.mid_string(30)}, {"rad", x.rad_string(6)}};
}

int cmd_table1(const RunConfig& cfg)
{
    const crg::Context ctx(cfg.precision);
    const auto report = crg::table1(ctx, 29, crg::parse_delta_mode(cfg.delta));
    if (cfg.format == "csv") {
        std::cout << report.to_csv();
    } else if (cfg.format == "json") {
        std::cout << report.to_json();
    } else {
        std::cout << report.to_text();
    }
    for (const auto& row : report.rows) {
        if (!row.decided_c || !row.decided_nc) {
            std::cerr << "undecided comparison with 1 at n = " << row.n << "\n";
            return kExitUndecided;
        }
    }
    return kExitOk;
}

int cmd_bounds(const RunConfig& cfg, int n, bool noncocompact)
{
    const crg::Context ctx(cfg.precision);
    const auto mode = crg::parse_delta_mode(cfg.delta);
    const bool cocompact = !noncocompact;
    const auto vb = crg::omega(ctx, n, cocompact);
    const auto ratios = crg::r_ratios(ctx, n, mode);
    const auto& r = cocompact ? ratios.rc : ratios.rnc;
    const auto m = crg::m_bound(ctx, n, mode);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["cocompact"] = cocompact;
        j["branch"] = crg::to_string(vb.branch);
        j["delta_mode"] = cfg.delta;
        j["omega"] = interval(vb.value);
        j["M"] = interval(m);
        j["R"] = interval(r);
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "n,cocompact,branch,omega,M,R\n"
                  << n << "," << (cocompact ? 1 : 0) << "," << crg::to_string(vb.branch) << ","
                  << vb.value.mid_string(20) << "," << m.mid_string(20) << "," << r.mid_string(20) << "\n";
    } else {
        std::cout << "n = " << n << (cocompact ? " (cocompact)" : " (non-cocompact)") << "\n"
                  << "branch  " << crg::to_string(vb.branch) << "\n"
                  << "omega   " << crg::format_table_value(vb.value) << "\n"
                  << "M       " << crg::format_table_value(m) << "\n"
                  << (cocompact ? "R_c     " : "R_nc    ") << crg::format_table_value(r) << "\n";
    }
    return kExitOk;
}

std::pair<int, int> parse_range(const std::string& text)
{
    static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw CLI::ValidationError("--range", "expected a..b, got '" + text + "'");
    }
    const int a = std::stoi(m[1]);
    const int b = std::stoi(m[2]);
    if (a > b) {
        throw CLI::ValidationError("--range", "empty range '" + text + "'");
    }
    return {a, b};
}

int cmd_sieve(const RunConfig& cfg, std::optional<int> n, const std::string& range, bool text)
{
    const crg::Context ctx(cfg.precision);
    const auto table = load_table(cfg);
    std::vector<crg::SieveReport> reports;
    if (n) {
        reports.push_back(crg::sieve_dimension(ctx, *n, table));
    } else {
        const auto [a, b] = parse_range(range);
        reports = crg::sieve_all(ctx, a, b, table);
    }
    if (text) {
        for (const auto& r : reports) {
            std::cout << r.to_text();
        }
    } else if (reports.size() == 1 && n) {
        std::cout << reports.front().to_json();
    } else {
        std::cout << crg::sieve_reports_json(reports);
    }
    return kExitOk;
}

crg::Rational parse_decimal(const std::string& text)
{
    static const std::regex re(R"(^(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw CLI::ValidationError("--budget", "expected a non-negative decimal, got '" + text + "'");
    }
    const std::string frac = m[2];
    crg::Integer num(m[1].str() + frac);
    long exponent = (m[3].matched ? std::stol(m[3]) : 0) - static_cast<long>(frac.size());
    crg::Rational q(num);
    const crg::Integer scale = crg::ipow(10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        q /= scale;
    } else {
        q *= scale;
    }
    q.canonicalize();
    return q;
}

int cmd_forms(const RunConfig& cfg, int n, const std::string& budget, const std::string& named)
{
    const crg::Context ctx(cfg.precision);
    std::vector<std::string> labels;
    if (named.empty()) {
        labels = {"f1", "f2", "f3"};
    } else {
        labels = {named};
    }
    nlohmann::ordered_json out;
    out["n"] = n;
    out["profiles"] = nlohmann::ordered_json::array();
    for (const auto& label : labels) {
        const auto prof = crg::named_form_invariants(ctx, label, n);
        const auto check = crg::local_global_check(prof);
        out["profiles"].push_back(nlohmann::ordered_json::parse(crg::profile_json(prof, check)));
    }
    if (!budget.empty()) {
        const crg::Rational b = parse_decimal(budget);
        const auto sets = crg::enumerate_T_sets(ctx, n, [&](const crg::Context& c) { return c.exact(b); });
        out["budget"] = budget;
        out["T_sets"] = sets;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_fields_validate(const RunConfig& cfg)
{
    const auto table = load_table(cfg);
    std::cout << "source: " << (cfg.fields_path.empty() ? std::string("<embedded>") : cfg.fields_path) << "\n"
              << "records: " << table.records().size() << "\n"
              << "directives: " << table.directives().size() << "\n";
    for (const auto& d : table.directives()) {
        std::cout << "  degree " << d.degree << " complete up to " << d.up_to
                  << (d.any_signature ? " (all signatures)" : " (totally real)") << "\n";
    }
    for (const auto& f : table.flags()) {
        std::cout << "flag: " << f << "\n";
    }
    std::cout << "ok\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified bounds for congruence hyperbolic reflection groups"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--precision", cfg.precision, "working precision in bits")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("--delta", cfg.delta, "spectral gap mode")->check(CLI::IsMember({"proven", "conjectural"}));
    app.add_option("--fields", cfg.fields_path, "field table CSV (default: embedded table)")
        ->check(CLI::ExistingFile);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* t1 = app.add_subcommand("table1", "print M(n), R_c(n), R_nc(n) for n = 2..29");

    int bounds_n = 0;
    bool noncocompact = false;
    auto* bounds = app.add_subcommand("bounds", "covolume bound and R ratio for one dimension");
    bounds->add_option("--n", bounds_n, "dimension")->required()->check(CLI::Range(2, 4096));
    bounds->add_flag("--noncocompact", noncocompact, "use the non-cocompact bound");

    std::optional<int> sieve_n;
    std::string sieve_range;
    bool sieve_json = false;
    bool sieve_text = false;
    auto* sieve = app.add_subcommand("sieve", "admissible fields of definition");
    auto* opt_n = sieve->add_option("--n", sieve_n, "dimension");
    auto* opt_range = sieve->add_option("--range", sieve_range, "dimension range a..b");
    opt_n->excludes(opt_range);
    sieve->add_flag("--json", sieve_json, "JSON output (default)");
    sieve->add_flag("--text", sieve_text, "text output")->excludes("--json");

    int forms_n = 0;
    std::string forms_budget;
    std::string forms_named;
    auto* forms = app.add_subcommand("forms", "local invariants of the named forms and T-set enumeration");
    forms->add_option("--n", forms_n, "dimension")->required()->check(CLI::Range(2, 4096));
    forms->add_option("--budget", forms_budget, "λ-product budget for T-set enumeration");
    forms->add_option("--named", forms_named, "named form")->check(CLI::IsMember({"f1", "f2", "f3"}));

    auto* fields = app.add_subcommand("fields", "field table utilities");
    fields->require_subcommand(1);
    auto* validate = fields->add_subcommand("validate", "parse and check a field table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*t1) {
            return cmd_table1(cfg);
        }
        if (*bounds) {
            return cmd_bounds(cfg, bounds_n, noncocompact);
        }
        if (*sieve) {
            if (!sieve_n && sieve_range.empty()) {
                std::cerr << "sieve: one of --n or --range is required\n";
                return kExitUsage;
            }
            const bool text = sieve_text || (!sieve_json && app.count("--format") > 0 && cfg.format == "text");
            return cmd_sieve(cfg, sieve_n, sieve_range, text);
        }
        if (*forms) {
            return cmd_forms(cfg, forms_n, forms_budget, forms_named);
        }
        if (*validate) {
            return cmd_fields_validate(cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const crg::UndecidedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const crg::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const crg::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
