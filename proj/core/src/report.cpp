#include "fano/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fano {

namespace {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r) {
    if (r.is_integer()) return json(r.num());
    return json(r.str());
}

const char* degree_key(const SieveReport& report) {
    return report.kind == "surface-sieve" ? "c1_squared" : "c1_cubed";
}

json witness_to_json(const Witness& witness) {
    json w = json::object();
    if (const auto* db = std::get_if<DegreeBoundWitness>(&witness)) {
        w["reason"] = db->reason;
    } else if (const auto* bu = std::get_if<BudgetWitness>(&witness)) {
        w["j_budget"] = rat_to_json(bu->j_term);
        w["budget"] = rat_to_json(bu->budget);
    } else if (const auto* be = std::get_if<BasketEmptyWitness>(&witness)) {
        w["budget"] = rat_to_json(be->budget);
    } else if (const auto* bs = std::get_if<BasketSurvivalWitness>(&witness)) {
        w["baskets"] = bs->basket_count;
        w["first"] = format_basket(bs->first);
    } else if (const auto* rs = std::get_if<RrSurvivalWitness>(&witness)) {
        w["basket"] = format_basket(rs->basket);
        w["assignment"] = rs->assignment;
    } else if (const auto* re = std::get_if<RrEliminationWitness>(&witness)) {
        json baskets = json::array();
        for (const auto& outcome : re->baskets) {
            json b;
            b["basket"] = format_basket(outcome.basket);
            b["assignments"] = outcome.verdict.assignment_count;
            b["uniform_failing_s"] = outcome.verdict.uniform_failing_s;
            json failures = json::array();
            for (const auto& f : outcome.verdict.failures)
                failures.push_back(json{{"x", f.assignment}, {"s", f.failing_s}});
            b["failures"] = std::move(failures);
            baskets.push_back(std::move(b));
        }
        w["baskets"] = std::move(baskets);
    }
    return w;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string join_i64(const std::vector<std::int64_t>& values, const char* sep) {
    std::string s;
    for (std::int64_t v : values) {
        if (!s.empty()) s += sep;
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

std::string witness_summary(const Verdict& v) {
    std::ostringstream out;
    if (const auto* db = std::get_if<DegreeBoundWitness>(&v.witness)) {
        out << "reason=" << db->reason;
    } else if (const auto* bu = std::get_if<BudgetWitness>(&v.witness)) {
        out << "j_budget=" << bu->j_term.str() << (v.survived ? " <= " : " > ")
            << "budget=" << bu->budget.str();
    } else if (const auto* be = std::get_if<BasketEmptyWitness>(&v.witness)) {
        out << "no basket within budget=" << be->budget.str();
    } else if (const auto* bs = std::get_if<BasketSurvivalWitness>(&v.witness)) {
        out << "baskets=" << bs->basket_count << " first=" << format_basket(bs->first);
    } else if (const auto* rs = std::get_if<RrSurvivalWitness>(&v.witness)) {
        out << "basket=" << format_basket(rs->basket) << " assignment=["
            << join_i64(rs->assignment, " ") << "]";
    } else if (const auto* re = std::get_if<RrEliminationWitness>(&v.witness)) {
        out << "all " << re->baskets.size() << " basket(s) inadmissible";
        for (const auto& outcome : re->baskets) {
            out << "; " << format_basket(outcome.basket);
            if (!outcome.verdict.uniform_failing_s.empty())
                out << " uniform_failing_s=[" << join_i64(outcome.verdict.uniform_failing_s, " ")
                    << "]";
        }
    }
    return out.str();
}

std::string to_json_string(const SieveReport& report) {
    json j;
    j["kind"] = report.kind;
    j["range"] = json{{"q_min", report.q_min}, {"q_max", report.q_max}};
    j["stages"] = report.stages;
    json verdicts = json::array();
    for (const Verdict& v : report.verdicts) {
        json entry;
        entry["q"] = v.candidate.q;
        entry["J"] = v.candidate.J;
        entry[degree_key(report)] = v.candidate.degree;
        entry["k"] = v.candidate.k;
        entry["status"] = v.survived ? "survived" : "eliminated";
        entry["stage"] = stage_name(v.stage);
        entry["witness"] = witness_to_json(v.witness);
        verdicts.push_back(std::move(entry));
    }
    j["verdicts"] = std::move(verdicts);
    j["survivors"] = report.survivors;
    j["discrepancies"] = report.discrepancies;
    return j.dump(2) + "\n";
}

std::string to_csv(const SieveReport& report) {
    std::ostringstream out;
    out << "q,J," << degree_key(report) << ",k,status,stage,witness\n";
    for (const Verdict& v : report.verdicts) {
        out << v.candidate.q << ',' << v.candidate.J << ',' << v.candidate.degree << ','
            << v.candidate.k << ',' << (v.survived ? "survived" : "eliminated") << ','
            << stage_name(v.stage) << ',' << csv_escape(witness_summary(v)) << '\n';
    }
    return out.str();
}

std::string to_table(const SieveReport& report) {
    std::ostringstream out;
    const bool surface = report.kind == "surface-sieve";
    out << (surface ? "surface" : "threefold") << " sieve, q in [" << report.q_min << ", "
        << report.q_max << "], stages:";
    for (const auto& s : report.stages) out << ' ' << s;
    out << '\n';
    out << "   q    J  " << (surface ? "c1^2" : "c1^3") << "   k  status      stage         witness\n";
    for (const Verdict& v : report.verdicts) {
        std::string q = std::to_string(v.candidate.q);
        std::string J = std::to_string(v.candidate.J);
        std::string deg = std::to_string(v.candidate.degree);
        std::string k = std::to_string(v.candidate.k);
        std::string status = v.survived ? "survived" : "eliminated";
        std::string stage = stage_name(v.stage);
        out << std::string(4 - std::min<std::size_t>(4, q.size()), ' ') << q
            << std::string(5 - std::min<std::size_t>(5, J.size()), ' ') << J
            << std::string(6 - std::min<std::size_t>(6, deg.size()), ' ') << deg
            << std::string(4 - std::min<std::size_t>(4, k.size()), ' ') << k << "  " << status
            << std::string(status.size() < 12 ? 12 - status.size() : 1, ' ') << stage
            << std::string(stage.size() < 14 ? 14 - stage.size() : 1, ' ') << witness_summary(v)
            << '\n';
    }
    out << "survivors:" << (report.survivors.empty() ? " none" : "");
    for (std::int64_t q : report.survivors) out << ' ' << q;
    out << '\n';
    if (!report.discrepancies.empty()) {
        out << "DISCREPANCY with the expected index list:";
        for (std::int64_t q : report.discrepancies) out << ' ' << q;
        out << '\n';
    }
    return out.str();
}

}  // namespace fano
