#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "equisum/errors.hpp"

// Domain model for equal-sum partitioning of {1,...,n}:
// an instance (n,k,t) with k*t = n(n+1)/2 asks for k disjoint containers
// covering {1,...,n} whose elements each add up to t.

namespace equisum {

using u64 = std::uint64_t;

/// One container: elements of {1,...,n}, kept in ascending order.
/// Malformed data (duplicates, out-of-range values) is representable on
/// purpose so that verify() can diagnose it.
using Container = std::vector<u64>;

inline u64 checked_add(u64 a, u64 b)
{
    u64 r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("addition overflows 64 bits");
    return r;
}

inline u64 checked_mul(u64 a, u64 b)
{
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("multiplication overflows 64 bits");
    return r;
}

/// Triangular number n(n+1)/2, the total mass of {1,...,n}.
inline u64 delta(u64 n)
{
    // Divide the even factor first so the intermediate product cannot wrap.
    if (n % 2 == 0)
        return checked_mul(n / 2, n + 1);
    return checked_mul(n, (n + 1) / 2);
}

/// A feasible problem instance. Construct through make_instance(), which
/// enforces k*t = delta(n) and t >= n.
struct Instance {
    u64 n = 0; ///< element count; the set to split is {1,...,n}
    u64 k = 0; ///< number of containers
    u64 t = 0; ///< target sum per container

    friend bool operator==(const Instance&, const Instance&) = default;
};

inline Instance make_instance(u64 n, u64 k, u64 t)
{
    if (n == 0 || k == 0 || t == 0)
        throw InfeasibleSumError("n, k and t must be positive");
    const u64 mass = delta(n);
    if (checked_mul(k, t) != mass)
        throw InfeasibleSumError("k*t = " + std::to_string(k) + "*" + std::to_string(t)
                                 + " does not equal delta(n) = " + std::to_string(mass));
    if (t < n)
        throw InfeasibleTargetError("target sum t = " + std::to_string(t)
                                    + " cannot hold element n = " + std::to_string(n));
    return Instance{n, k, t};
}

/// All (k, t) with k*t = delta(n) and t >= n, ascending in k.
/// Trial division up to sqrt(delta(n)); no factorization machinery needed.
inline std::vector<std::pair<u64, u64>> enumerate_feasible(u64 n)
{
    const u64 mass = delta(n);
    std::vector<std::pair<u64, u64>> result; // (k, t)
    for (u64 d = 1; d * d <= mass; ++d) {
        if (mass % d != 0)
            continue;
        const u64 q = mass / d;
        // d and q are a divisor pair; either may serve as the target sum.
        if (d >= n)
            result.emplace_back(q, d);
        if (q >= n && q != d)
            result.emplace_back(d, q);
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// An ordered family of containers claimed to partition {1,...,instance.n}.
struct Partitioning {
    Instance instance;
    std::vector<Container> containers; ///< indexed by container 1..k (0-based here)

    friend bool operator==(const Partitioning&, const Partitioning&) = default;
};

/// Outcome of verify(): valid iff every diagnostic list is empty.
struct VerificationReport {
    bool valid = false;
    std::vector<std::pair<u64, u64>> sum_failures; ///< (1-based container index, actual sum)
    std::vector<u64> duplicate_elements;           ///< values used more than once
    std::vector<u64> missing_elements;             ///< values of {1,...,n} never used
    std::vector<u64> foreign_elements;             ///< values outside {1,...,n}
};

/// Check the three partitioning conditions (per-container sums, disjointness,
/// exact cover of {1,...,n}) against the claimed (n, k, t).
///
/// Total over malformed input: every defect becomes report data, never an
/// exception. Containers beyond index k, or fewer than k of them, surface as
/// sum failures (an absent container sums to 0, and t >= 1 for any claim
/// worth checking).
inline VerificationReport verify(const Partitioning& p)
{
    const u64 n = p.instance.n;
    const u64 t = p.instance.t;
    const u64 k = p.instance.k;

    VerificationReport report;

    const u64 slots = std::max<u64>(k, p.containers.size());
    for (u64 j = 0; j < slots; ++j) {
        unsigned __int128 sum = 0; // element values are arbitrary u64 when fuzzed
        if (j < p.containers.size())
            for (u64 e : p.containers[j])
                sum += e;
        if (sum != t) {
            const u64 reported = sum > std::numeric_limits<u64>::max()
                                     ? std::numeric_limits<u64>::max()
                                     : static_cast<u64>(sum);
            report.sum_failures.emplace_back(j + 1, reported);
        }
    }

    std::vector<std::uint8_t> count(n + 1, 0); // count[e] for in-range elements
    std::vector<u64> foreign;
    for (const Container& c : p.containers)
        for (u64 e : c) {
            if (e >= 1 && e <= n) {
                if (count[e] != 255)
                    ++count[e];
            } else {
                foreign.push_back(e);
            }
        }
    for (u64 e = 1; e <= n; ++e) {
        if (count[e] == 0)
            report.missing_elements.push_back(e);
        else if (count[e] > 1)
            report.duplicate_elements.push_back(e);
    }
    std::sort(foreign.begin(), foreign.end());
    foreign.erase(std::unique(foreign.begin(), foreign.end()), foreign.end());
    report.foreign_elements = std::move(foreign);

    report.valid = report.sum_failures.empty() && report.duplicate_elements.empty()
        && report.missing_elements.empty() && report.foreign_elements.empty();
    return report;
}

/// Cut positions for k sticks of length t: stick j cut at the prefix sums of
/// container j's elements, so the pieces are exactly that container.
struct CutPlan {
    u64 stick_length = 0;                ///< t
    std::vector<std::vector<u64>> sticks; ///< per stick: strictly increasing offsets in (0, t)
};

inline CutPlan cut_plan(const Partitioning& p)
{
    if (!verify(p).valid)
        throw InvalidPartitioningError("cut plan requires a valid partitioning");
    CutPlan plan;
    plan.stick_length = p.instance.t;
    plan.sticks.reserve(p.containers.size());
    for (const Container& c : p.containers) {
        std::vector<u64> offsets;
        u64 acc = 0;
        for (u64 e : c) {
            acc += e;
            if (acc < p.instance.t)
                offsets.push_back(acc);
        }
        plan.sticks.push_back(std::move(offsets));
    }
    return plan;
}

} // namespace equisum
