#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equisum/core.hpp"

// Independent reference solver: plain backtracking over descending elements
// with first-fit slot choice. Deliberately simple so its verdicts can be
// trusted when cross-checking the constructive solver and the feasibility
// predicate at desk scale.

namespace equisum {

struct OracleLimits {
    u64 max_n = 30;            ///< hard refusal above 40; search explodes past desk scale
    u64 max_nodes = 10'000'000; ///< search-node budget
};

enum class OracleStatus {
    found,          ///< a valid partitioning was constructed
    no_solution,    ///< the search space is exhausted; none exists
    budget_exceeded ///< verdictless: ran out of nodes, NOT a nonexistence witness
};

struct OracleResult {
    OracleStatus status = OracleStatus::no_solution;
    std::optional<Partitioning> partitioning;
    u64 nodes = 0;
};

namespace detail {

struct OracleSearch {
    u64 k = 0;
    u64 max_nodes = 0;
    u64 nodes = 0;
    bool exhausted = false;
    std::vector<u64> remaining; ///< open capacity per container
    std::vector<Container> containers;

    // Place elements e, e-1, ..., 1, trying containers first-fit and skipping
    // any container whose remaining capacity repeats an earlier attempt at
    // this level (equal-capacity containers are interchangeable).
    bool place(u64 e)
    {
        if (++nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        if (e == 0)
            return true;
        std::vector<u64> tried;
        tried.reserve(k);
        for (u64 j = 0; j < k; ++j) {
            if (remaining[j] < e)
                continue;
            if (std::find(tried.begin(), tried.end(), remaining[j]) != tried.end())
                continue;
            tried.push_back(remaining[j]);
            remaining[j] -= e;
            containers[j].push_back(e);
            if (place(e - 1))
                return true;
            containers[j].pop_back();
            remaining[j] += e;
            if (exhausted)
                return false;
        }
        return false;
    }
};

} // namespace detail

/// Exhaustive search for a (k,t)-partitioning of {1,...,n}. Deterministic:
/// the same limits always yield the same result.
inline OracleResult brute_force_solve(u64 n, u64 k, u64 t, const OracleLimits& limits = {})
{
    if (limits.max_n > 40)
        throw PreconditionError("oracle max_n is hard-capped at 40");
    if (n > limits.max_n)
        throw PreconditionError("oracle refuses n = " + std::to_string(n) + " > max_n = "
                                + std::to_string(limits.max_n));
    if (n == 0 || k == 0 || t == 0)
        return {};

    OracleResult result;
    if (checked_mul(k, t) != delta(n))
        return result; // mass mismatch, provably no partitioning

    detail::OracleSearch search;
    search.k = k;
    search.max_nodes = limits.max_nodes;
    search.remaining.assign(k, t);
    search.containers.assign(k, {});

    const bool found = search.place(n);
    result.nodes = search.nodes;
    if (found) {
        result.status = OracleStatus::found;
        Partitioning p;
        p.instance = Instance{n, k, t}; // feasibility is what the search just proved
        p.containers = std::move(search.containers);
        for (Container& c : p.containers)
            std::sort(c.begin(), c.end());
        result.partitioning = std::move(p);
    } else {
        result.status = search.exhausted ? OracleStatus::budget_exceeded : OracleStatus::no_solution;
    }
    return result;
}

struct SweepEntry {
    u64 n = 0;
    u64 k = 0;
    u64 t = 0;
    bool solvable = false;
};

/// Oracle verdict for every divisor pair (k, t) of delta(n), n <= n_max,
/// including the targets t < n. Expected picture: solvable iff t >= n.
inline std::vector<SweepEntry> existence_sweep(u64 n_max, const OracleLimits& limits = {})
{
    if (n_max > 14)
        throw PreconditionError("existence sweep is capped at n_max = 14");
    std::vector<SweepEntry> entries;
    for (u64 n = 1; n <= n_max; ++n) {
        const u64 mass = delta(n);
        std::vector<std::pair<u64, u64>> pairs; // (k, t), every divisor
        for (u64 d = 1; d * d <= mass; ++d) {
            if (mass % d != 0)
                continue;
            pairs.emplace_back(d, mass / d);
            if (d != mass / d)
                pairs.emplace_back(mass / d, d);
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto [k, t] : pairs) {
            OracleResult r = brute_force_solve(n, k, t, limits);
            if (r.status == OracleStatus::budget_exceeded)
                throw BudgetExceededError("sweep instance (" + std::to_string(n) + ","
                                          + std::to_string(k) + "," + std::to_string(t)
                                          + ") exceeded the node budget");
            entries.push_back({n, k, t, r.status == OracleStatus::found});
        }
    }
    return entries;
}

} // namespace equisum
