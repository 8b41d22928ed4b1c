#include "w2p/profiles.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace w2p {

std::string run_record::to_json() const {
    nlohmann::json j{{"instance", instance},
                     {"config", config},
                     {"solver", solver},
                     {"seed", seed},
                     {"weight", weight},
                     {"time_to_best", time_to_best},
                     {"total_seconds", total_seconds},
                     {"peak_memory_bytes", peak_memory_bytes},
                     {"n_kernel", n_kernel},
                     {"m_kernel", m_kernel},
                     {"offset", offset},
                     {"fully_reduced", fully_reduced},
                     {"feasible_verified", feasible_verified},
                     {"proven_optimal", proven_optimal}};
    return j.dump();
}

run_record run_record::from_json(const std::string &line) {
    nlohmann::json j = nlohmann::json::parse(line);
    run_record r;
    r.instance = j.at("instance").get<std::string>();
    r.config = j.at("config").get<std::string>();
    r.solver = j.at("solver").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.weight = j.at("weight").get<NodeWeight>();
    r.time_to_best = j.at("time_to_best").get<double>();
    r.total_seconds = j.at("total_seconds").get<double>();
    r.peak_memory_bytes = j.at("peak_memory_bytes").get<std::size_t>();
    r.n_kernel = j.at("n_kernel").get<NodeID>();
    r.m_kernel = j.at("m_kernel").get<EdgeID>();
    r.offset = j.at("offset").get<NodeWeight>();
    r.fully_reduced = j.at("fully_reduced").get<bool>();
    r.feasible_verified = j.at("feasible_verified").get<bool>();
    r.proven_optimal = j.value("proven_optimal", false);
    return r;
}

namespace {

std::string fmt_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

constexpr double RATIO_CAP = 1e9;

double capped_ratio(double value, double reference) {
    if (reference <= 0.0) return value <= 0.0 ? 1.0 : RATIO_CAP;
    return std::min(value / reference, RATIO_CAP);
}

void emit_metric(std::string &out, const std::string &metric, bool maximize,
                 const std::map<std::string, std::vector<double>> &ratios, std::size_t n_instances) {
    for (const auto &[solver, rs] : ratios) {
        std::vector<double> sorted = rs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<double> taus = sorted;
        taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
        if (maximize) {
            // tau <= 1, descending from 1: foi = fraction with ratio >= tau
            if (taus.empty() || taus.back() != 1.0) taus.push_back(1.0);
            std::reverse(taus.begin(), taus.end());
            for (double tau : taus) {
                std::size_t cnt = sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), tau);
                out += metric + "\t" + solver + "\t" + fmt_num(tau) + "\t" +
                       fmt_num(static_cast<double>(cnt) / n_instances) + "\n";
            }
        } else {
            // tau >= 1, ascending: foi = fraction with ratio <= tau
            if (taus.empty() || taus.front() != 1.0) taus.insert(taus.begin(), 1.0);
            for (double tau : taus) {
                std::size_t cnt = std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin();
                out += metric + "\t" + solver + "\t" + fmt_num(tau) + "\t" +
                       fmt_num(static_cast<double>(cnt) / n_instances) + "\n";
            }
        }
    }
}

} // namespace

std::string emit_performance_profiles(const std::vector<run_record> &records) {
    // instance -> solver -> record
    std::map<std::string, std::map<std::string, const run_record *>> by_instance;
    std::set<std::string> solvers;
    for (const auto &r : records) {
        auto [it, fresh] = by_instance[r.instance].emplace(r.solver, &r);
        if (!fresh) throw std::invalid_argument("duplicate record for instance '" + r.instance +
                                                "' and solver '" + r.solver + "'");
        solvers.insert(r.solver);
    }
    if (solvers.size() < 2) throw std::invalid_argument("need at least two solvers for a profile");
    for (const auto &[inst, per_solver] : by_instance)
        if (per_solver.size() != solvers.size())
            throw std::invalid_argument("instance '" + inst + "' is missing some solvers");

    std::map<std::string, std::vector<double>> quality, time_best, memory;
    for (const auto &[inst, per_solver] : by_instance) {
        NodeWeight best_w = 0;
        double fastest = -1, smallest = -1;
        for (const auto &[s, r] : per_solver) {
            best_w = std::max(best_w, r->weight);
            fastest = fastest < 0 ? r->time_to_best : std::min(fastest, r->time_to_best);
            smallest = smallest < 0 ? static_cast<double>(r->peak_memory_bytes)
                                    : std::min(smallest, static_cast<double>(r->peak_memory_bytes));
        }
        for (const auto &[s, r] : per_solver) {
            quality[s].push_back(best_w == 0 ? 1.0
                                             : static_cast<double>(r->weight) / static_cast<double>(best_w));
            time_best[s].push_back(capped_ratio(r->time_to_best, fastest));
            memory[s].push_back(capped_ratio(static_cast<double>(r->peak_memory_bytes), smallest));
        }
    }

    std::string out = "# metric\tsolver\ttau\tfoi\n";
    emit_metric(out, "quality", true, quality, by_instance.size());
    emit_metric(out, "time_to_best", false, time_best, by_instance.size());
    emit_metric(out, "memory", false, memory, by_instance.size());
    return out;
}

} // namespace w2p
