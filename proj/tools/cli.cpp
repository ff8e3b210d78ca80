#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/arith.hpp"
#include "fano/report.hpp"
#include "fano/rr.hpp"
#include "fano/sieve.hpp"
#include "fano/wps.hpp"

namespace fano::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "table";
    std::string path;  // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions* out,
                        const std::string& formats = "table,json,csv") {
    std::vector<std::string> allowed;
    std::stringstream ss(formats);
    std::string tok;
    while (std::getline(ss, tok, ',')) allowed.push_back(tok);
    cmd->add_option("--format", out->format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    cmd->add_option("--output,-o", out->path, "write the report to a file instead of stdout");
}

// Content must already end in exactly one newline.
void emit(const OutputOptions& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + out.path + "'");
    file << content;
}

json rat_to_json(const Rat& r) {
    return r.is_integer() ? json(r.num()) : json(r.str());
}

std::string render_sieve(const SieveReport& report, const std::string& format) {
    if (format == "json") return to_json_string(report);
    if (format == "csv") return to_csv(report);
    return to_table(report);
}

int sieve_exit_code(const SieveReport& report) {
    return report.discrepancies.empty() ? kExitOk : kExitDiscrepancy;
}

// --- subcommand payloads ---------------------------------------------------

std::string render_wps(const std::string& format) {
    auto spaces = enumerate_gorenstein_wps3();
    if (format == "json") {
        json j;
        j["count"] = spaces.size();
        json rows = json::array();
        for (const auto& w : spaces) {
            json row;
            row["weights"] = w.w;
            row["index"] = fano_index(w);
            row["degree"] = rat_to_json(degree(w));
            rows.push_back(std::move(row));
        }
        j["spaces"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "weights,index,degree\n";
        for (const auto& w : spaces)
            out << '"' << w.str() << "\"," << fano_index(w) << ',' << degree(w).str() << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "weights        index  degree\n";
    for (const auto& w : spaces) {
        std::string ws = w.str();
        out << ws << std::string(ws.size() < 15 ? 15 - ws.size() : 1, ' ');
        std::string idx = std::to_string(fano_index(w));
        out << idx << std::string(idx.size() < 7 ? 7 - idx.size() : 1, ' ') << degree(w).str()
            << '\n';
    }
    out << spaces.size() << " spaces\n";
    return out.str();
}

std::string render_phi_set(std::int64_t bound, const std::vector<std::int64_t>& exclusions,
                           const std::string& format) {
    auto values = phi_index_set(bound, exclusions);
    if (format == "json") {
        json j;
        j["bound"] = bound;
        j["exclusions"] = exclusions;
        j["values"] = values;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "m\n";
        for (auto m : values) out << m << '\n';
        return out.str();
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    out << '\n';
    return out.str();
}

std::string render_baskets(std::int64_t J, const Rat& budget, const std::string& format) {
    auto baskets = enumerate_baskets(J, budget);
    if (format == "json") {
        json j;
        j["j"] = J;
        j["budget"] = rat_to_json(budget);
        j["count"] = baskets.size();
        json rows = json::array();
        for (const auto& b : baskets) rows.push_back(format_basket(b));
        j["baskets"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "basket,cost,lcm\n";
        for (const auto& b : baskets)
            out << '"' << format_basket(b) << "\"," << basket_cost(b).str() << ','
                << lcm_index(b) << '\n';
        return out.str();
    }
    std::ostringstream out;
    for (const auto& b : baskets)
        out << format_basket(b) << "  cost=" << basket_cost(b).str() << " lcm=" << lcm_index(b)
            << '\n';
    out << baskets.size() << " basket(s)\n";
    return out.str();
}

std::string render_rr_check(std::int64_t q, std::int64_t deg, const Basket& basket,
                            std::optional<std::int64_t> trace_s, const std::string& format) {
    RrVerdict verdict = rr_admissible(q, Rat(deg), basket);

    // Exact lhs values per assignment at the traced s.
    std::vector<std::pair<std::vector<std::int64_t>, Rat>> trace;
    if (trace_s) {
        std::vector<std::int64_t> x(basket.records.size(), 0);
        Basket assigned = basket;
        for (;;) {
            for (std::size_t i = 0; i < x.size(); ++i) assigned.records[i].x = x[i];
            trace.emplace_back(x, rr_lhs(q, Rat(deg), assigned, *trace_s));
            std::size_t i = x.size();
            bool done = x.empty();
            while (i > 0) {
                --i;
                if (++x[i] < basket.records[i].r) break;
                x[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }

    if (format == "json") {
        json j;
        j["q"] = q;
        j["c1_cubed"] = deg;
        j["basket"] = format_basket(basket);
        j["admissible"] = verdict.admissible;
        j["assignments"] = verdict.assignment_count;
        if (verdict.admissible) {
            j["assignment"] = verdict.assignment;
        } else {
            j["uniform_failing_s"] = verdict.uniform_failing_s;
            json failures = json::array();
            for (const auto& f : verdict.failures)
                failures.push_back(json{{"x", f.assignment}, {"s", f.failing_s}});
            j["failures"] = std::move(failures);
        }
        if (trace_s) {
            json rows = json::array();
            for (const auto& [x, lhs] : trace)
                rows.push_back(json{{"x", x}, {"lhs", rat_to_json(lhs)}});
            j["trace"] = json{{"s", *trace_s}, {"values", std::move(rows)}};
        }
        return j.dump(2) + "\n";
    }

    auto join = [](const std::vector<std::int64_t>& v) {
        std::string s;
        for (auto e : v) {
            if (!s.empty()) s += ' ';
            s += std::to_string(e);
        }
        return s;
    };
    std::ostringstream out;
    out << "q=" << q << " c1^3=" << deg << " basket=" << format_basket(basket) << '\n';
    out << "verdict: " << (verdict.admissible ? "admissible" : "inadmissible") << '\n';
    out << "assignments: " << verdict.assignment_count << '\n';
    if (verdict.admissible) {
        out << "assignment: [" << join(verdict.assignment) << "]\n";
    } else {
        out << "uniform failing s: "
            << (verdict.uniform_failing_s.empty() ? "none" : join(verdict.uniform_failing_s))
            << '\n';
        out << "per-assignment minimal failing s:\n";
        for (const auto& f : verdict.failures)
            out << "  x=[" << join(f.assignment) << "] s=" << f.failing_s << '\n';
    }
    if (trace_s) {
        out << "trace s=" << *trace_s << ":\n";
        for (const auto& [x, lhs] : trace)
            out << "  x=[" << join(x) << "] lhs=" << lhs.str() << '\n';
    }
    return out.str();
}

}  // namespace

int run(std::vector<std::string> args) {
    CLI::App app{"arithmetic sieve for Q-Fano indices of Gorenstein canonical Fano 3-folds"};
    app.require_subcommand(1);

    // sieve threefold / sieve surface
    auto* sieve_cmd = app.add_subcommand("sieve", "candidate elimination pipelines");
    sieve_cmd->require_subcommand(1);

    std::int64_t q_min = 3, q_max = 66;
    std::string stages_text = "all";
    OutputOptions sieve_out;
    auto* threefold = sieve_cmd->add_subcommand("threefold", "Gorenstein canonical Fano 3-folds");
    threefold->add_option("--q-min", q_min, "smallest index")->required();
    threefold->add_option("--q-max", q_max, "largest index")->required();
    threefold->add_option("--stages", stages_text,
                          "comma list of all,budget,basket,rr (invariant stages are always on)")
        ->capture_default_str();
    add_output_options(threefold, &sieve_out);

    std::int64_t sq_min = 3, sq_max = 9;
    OutputOptions surface_out;
    auto* surface = sieve_cmd->add_subcommand("surface", "du Val del Pezzo surfaces");
    surface->add_option("--q-min", sq_min, "smallest index")->required();
    surface->add_option("--q-max", sq_max, "largest index")->required();
    add_output_options(surface, &surface_out);

    // wps enumerate
    auto* wps_cmd = app.add_subcommand("wps", "weighted projective space witnesses");
    wps_cmd->require_subcommand(1);
    bool gorenstein = false;
    OutputOptions wps_out;
    auto* wps_enum = wps_cmd->add_subcommand("enumerate", "list weighted projective 3-spaces");
    wps_enum->add_flag("--gorenstein", gorenstein, "restrict to Gorenstein spaces");
    add_output_options(wps_enum, &wps_out);

    // rr check
    auto* rr_cmd = app.add_subcommand("rr", "Riemann-Roch integrality checks");
    rr_cmd->require_subcommand(1);
    std::int64_t rr_q = 0, rr_deg = 0;
    std::string rr_basket_text;
    std::int64_t rr_trace = -1;
    OutputOptions rr_out;
    auto* rr_check = rr_cmd->add_subcommand("check", "residue-assignment admissibility");
    rr_check->add_option("--q", rr_q, "Q-Fano index")->required();
    rr_check->add_option("--deg", rr_deg, "anticanonical degree c1^3")->required();
    rr_check->add_option("--basket", rr_basket_text, "basket, e.g. 5:1,8:1")->required();
    rr_check->add_option("--trace", rr_trace, "print exact lhs values at this s");
    add_output_options(rr_check, &rr_out, "table,json");

    // arith phi-set
    auto* arith_cmd = app.add_subcommand("arith", "number-theoretic helpers");
    arith_cmd->require_subcommand(1);
    std::int64_t phi_bound = 0;
    std::vector<std::int64_t> phi_exclude;
    OutputOptions phi_out;
    auto* phi_set = arith_cmd->add_subcommand("phi-set", "all m with phi(m) <= bound");
    phi_set->add_option("--bound", phi_bound, "totient bound")->required();
    phi_set->add_option("--exclude", phi_exclude, "values to drop from the set")
        ->delimiter(',');
    add_output_options(phi_set, &phi_out);

    // basket enumerate
    auto* basket_cmd = app.add_subcommand("basket", "singularity baskets");
    basket_cmd->require_subcommand(1);
    std::int64_t basket_J = 1;
    std::string basket_budget_text;
    OutputOptions basket_out;
    auto* basket_enum = basket_cmd->add_subcommand("enumerate", "baskets within a budget");
    basket_enum->add_option("--j", basket_J, "required divisor of the basket lcm")->required();
    basket_enum->add_option("--budget", basket_budget_text, "exact budget, e.g. 14 or 35/2")
        ->required();
    add_output_options(basket_enum, &basket_out);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes args back-to-front
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const unsigned workers = worker_count_from_env();
        if (threefold->parsed()) {
            auto report =
                threefold_sieve(q_min, q_max, StageSet::parse(stages_text), workers);
            emit(sieve_out, render_sieve(report, sieve_out.format));
            return sieve_exit_code(report);
        }
        if (surface->parsed()) {
            auto report = surface_sieve(sq_min, sq_max, workers);
            emit(surface_out, render_sieve(report, surface_out.format));
            return sieve_exit_code(report);
        }
        if (wps_enum->parsed()) {
            if (!gorenstein) {
                std::cerr << "wps enumerate: only --gorenstein enumeration is supported\n";
                return kExitUsage;
            }
            emit(wps_out, render_wps(wps_out.format));
            return kExitOk;
        }
        if (rr_check->parsed()) {
            std::optional<std::int64_t> trace;
            if (rr_check->count("--trace") > 0) trace = rr_trace;
            emit(rr_out, render_rr_check(rr_q, rr_deg, parse_basket(rr_basket_text), trace,
                                         rr_out.format));
            return kExitOk;
        }
        if (phi_set->parsed()) {
            emit(phi_out, render_phi_set(phi_bound, phi_exclude, phi_out.format));
            return kExitOk;
        }
        if (basket_enum->parsed()) {
            emit(basket_out,
                 render_baskets(basket_J, Rat::parse(basket_budget_text), basket_out.format));
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fano::cli
