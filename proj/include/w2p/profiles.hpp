#pragma once

#include <string>
#include <vector>

#include "w2p/defs.hpp"

namespace w2p {

struct run_record {
    std::string instance;
    std::string config;
    std::string solver;
    std::uint64_t seed = 0;
    NodeWeight weight = 0;
    double time_to_best = 0.0;
    double total_seconds = 0.0;
    std::size_t peak_memory_bytes = 0;
    NodeID n_kernel = 0;
    EdgeID m_kernel = 0;
    NodeWeight offset = 0;
    bool fully_reduced = false;
    bool feasible_verified = false;
    bool proven_optimal = false;

    std::string to_json() const;
    static run_record from_json(const std::string &line);
};

// Step-point tables for solution quality, time to best, and memory peak.
// Quality uses tau <= 1 (fraction of instances within factor tau of the best
// weight); time and memory use tau >= 1 against the fastest/smallest run.
// Requires >= 2 solvers over identical instance sets; one record per
// (instance, solver).
std::string emit_performance_profiles(const std::vector<run_record> &records);

} // namespace w2p
