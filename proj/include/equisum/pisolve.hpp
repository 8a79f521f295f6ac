#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equisum/core.hpp"
#include "equisum/meander.hpp"

// The recursive solver. Each step works on a frame of equally sized open
// slots, fills some of them outright and hands the tail of the element set
// to a strictly smaller frame, so the whole recursion is a chain that a
// plain loop can drive. Which filling rule applies is decided by comparing
// 2n against t and, in the low regime, by the parity of t.

namespace equisum {

/// Open slots of one recursion level. All slots share the same capacity and
/// each remembers which root container it belongs to, so finished pieces can
/// be reassembled at the end. Elements 1..n_remaining are still unplaced,
/// and slot_count * capacity always equals delta(n_remaining).
struct SlotFrame {
    std::vector<u64> roots; ///< per slot: 1-based root container index
    u64 n_remaining = 0;
    u64 capacity = 0;

    u64 slot_count() const { return roots.size(); }
};

enum class CaseTag { base_empty, base_k1, meander_stop, low_even, low_odd, high };

inline const char* to_string(CaseTag tag)
{
    switch (tag) {
    case CaseTag::base_empty: return "BASE_EMPTY";
    case CaseTag::base_k1: return "BASE_K1";
    case CaseTag::meander_stop: return "MEANDER_STOP";
    case CaseTag::low_even: return "LOW_EVEN";
    case CaseTag::low_odd: return "LOW_ODD";
    case CaseTag::high: return "HIGH";
    }
    return "?";
}

/// Elements fixed into one root container by a single step.
struct Placement {
    u64 root = 0; ///< 1-based root container index
    Container elements;
};

/// Result of dispatching one frame: what was placed, and the frame that
/// remains (absent when the step finished the job).
struct CaseStep {
    CaseTag tag = CaseTag::base_empty;
    std::vector<Placement> placements;
    std::optional<SlotFrame> next;
    std::optional<MeanderMatrix> matrix; ///< grid used by a meander stop
};

namespace detail {

inline void require(bool condition, const char* what)
{
    if (!condition)
        throw InternalInvariantError(std::string("solver invariant violated: ") + what);
}

// Every emitted frame must itself be a well-posed subproblem: its slots hold
// exactly the remaining mass and its capacity admits the largest element.
inline void check_subproblem(const SlotFrame& f)
{
    require(delta(f.n_remaining) == checked_mul(f.slot_count(), f.capacity),
            "delta(n') != k' * t'");
    require(f.n_remaining == 0 || f.capacity >= f.n_remaining, "t' < n'");
}

} // namespace detail

/// Low regime, even target: pairs {t-n+i-1, n-i+1} close (2n-t)/2 slots, the
/// rest split in half; the first half-slot takes the lone element t/2 and the
/// other half-slots, capacity t/2 each, form the next frame for 1..t-n-1.
inline CaseStep case_low_even(const SlotFrame& f)
{
    const u64 n = f.n_remaining;
    const u64 t = f.capacity;
    const u64 k = f.slot_count();
    detail::require(t % 2 == 0 && 2 * n > t, "low/even case entered outside its regime");

    const u64 pairs = (2 * n - t) / 2;
    detail::require(pairs < k, "pair fillings must leave a slot for t/2");

    CaseStep step;
    step.tag = CaseTag::low_even;
    for (u64 i = 1; i <= pairs; ++i)
        step.placements.push_back({f.roots[i - 1], {t - n + (i - 1), n - (i - 1)}});
    step.placements.push_back({f.roots[pairs], {t / 2}});

    SlotFrame next;
    next.capacity = t / 2;
    next.n_remaining = t - n - 1;
    next.roots.reserve(2 * (k - pairs) - 1);
    next.roots.push_back(f.roots[pairs]); // second half of the slot t/2 went into
    for (u64 s = pairs + 1; s < k; ++s) {
        next.roots.push_back(f.roots[s]);
        next.roots.push_back(f.roots[s]);
    }
    detail::check_subproblem(next);
    step.next = std::move(next);
    return step;
}

/// Low regime, odd target: pairs {t-n+i-1, n-i+1} close (2n-t+1)/2 slots.
/// When t = n the first pair degenerates to {0, n}; the zero is a phantom
/// that contributes nothing and is dropped. The untouched slots keep their
/// capacity t and receive 1..t-n-1 in the next frame.
inline CaseStep case_low_odd(const SlotFrame& f)
{
    const u64 n = f.n_remaining;
    const u64 t = f.capacity;
    const u64 k = f.slot_count();
    detail::require(t % 2 == 1 && 2 * n > t, "low/odd case entered outside its regime");

    const u64 pairs = (2 * n - t + 1) / 2;
    detail::require(pairs <= k, "more pair fillings than open slots");

    CaseStep step;
    step.tag = CaseTag::low_odd;
    for (u64 i = 1; i <= pairs; ++i) {
        const u64 low = t - n + (i - 1);
        const u64 high = n - (i - 1);
        if (low == 0)
            step.placements.push_back({f.roots[i - 1], {high}});
        else
            step.placements.push_back({f.roots[i - 1], {low, high}});
    }

    SlotFrame next;
    next.capacity = t;
    next.n_remaining = t == n ? 0 : t - n - 1; // t = n consumes everything
    next.roots.assign(f.roots.begin() + static_cast<std::ptrdiff_t>(pairs), f.roots.end());
    detail::check_subproblem(next);
    step.next = std::move(next);
    return step;
}

/// High regime (2n <= t): every slot splits in two; the first halves take the
/// pairs {n-2k+i, n-i+1}, each of mass 2(n-k)+1, and the second halves carry
/// capacity t-2(n-k)-1 into the next frame for 1..n-2k.
inline CaseStep case_high(const SlotFrame& f)
{
    const u64 n = f.n_remaining;
    const u64 t = f.capacity;
    const u64 k = f.slot_count();
    detail::require(2 * n <= t, "high case entered outside its regime");
    detail::require(n >= 2 * k, "high case needs n >= 2k");

    CaseStep step;
    step.tag = CaseTag::high;
    for (u64 i = 1; i <= k; ++i)
        step.placements.push_back({f.roots[i - 1], {n - 2 * k + i, n - (i - 1)}});

    SlotFrame next;
    next.capacity = t - 2 * (n - k) - 1;
    next.n_remaining = n - 2 * k;
    next.roots = f.roots; // second halves, one per slot, same order
    detail::check_subproblem(next);
    step.next = std::move(next);
    return step;
}

/// Decide and execute one step for a frame. Order of the decision:
/// empty frame, then single slot, then (when enabled) the meander stop,
/// then the 2n-1 >= t / 2n <= t regimes, which are exhaustive and disjoint.
inline CaseStep dispatch(const SlotFrame& f, bool use_meander_stop)
{
    detail::check_subproblem(f);
    const u64 n = f.n_remaining;
    const u64 k = f.slot_count();

    if (k == 0)
        return CaseStep{CaseTag::base_empty, {}, std::nullopt, std::nullopt};

    if (k == 1) {
        CaseStep step;
        step.tag = CaseTag::base_k1;
        Container all(n);
        for (u64 e = 1; e <= n; ++e)
            all[e - 1] = e;
        step.placements.push_back({f.roots[0], std::move(all)});
        return step;
    }

    if (use_meander_stop && meander_applicable(n, k)) {
        MeanderResult meander = meander_partitioning(n, k);
        CaseStep step;
        step.tag = CaseTag::meander_stop;
        step.placements.reserve(k);
        for (u64 j = 0; j < k; ++j)
            step.placements.push_back({f.roots[j], std::move(meander.partitioning.containers[j])});
        step.matrix = std::move(meander.matrix);
        return step;
    }

    if (2 * n > f.capacity) // 2n - 1 >= t
        return f.capacity % 2 == 0 ? case_low_even(f) : case_low_odd(f);
    return case_high(f); // 2n <= t
}

/// One line of solver progress, emitted per step.
struct TraceRecord {
    CaseTag tag = CaseTag::base_empty;
    u64 n_remaining = 0; ///< of the frame the step consumed
    u64 slots = 0;
    u64 capacity = 0;
    u64 placed = 0; ///< elements fixed by this step
};

struct SolveOptions {
    bool meander_stop = true;
    std::function<void(const TraceRecord&)> trace; ///< optional step sink
};

struct SolveResult {
    Partitioning partitioning;
    u64 steps = 0;
    u64 max_slots = 0;                   ///< widest frame seen (memory high-water)
    std::optional<MeanderMatrix> meander; ///< set when a meander stop fired
};

/// Run the chain of steps to completion and assemble the containers.
inline SolveResult solve_detailed(const Instance& inst, const SolveOptions& options = {})
{
    SolveResult result;
    result.partitioning.instance = inst;
    result.partitioning.containers.assign(inst.k, {});

    SlotFrame frame;
    frame.roots.resize(inst.k);
    for (u64 j = 0; j < inst.k; ++j)
        frame.roots[j] = j + 1;
    frame.n_remaining = inst.n;
    frame.capacity = inst.t;

    // a single placement is already ascending; only containers assembled
    // from several placements need the final sort
    std::vector<std::uint8_t> placements_seen(inst.k, 0);

    u64 placed_total = 0;
    for (;;) {
        result.max_slots = std::max(result.max_slots, frame.slot_count());
        CaseStep step = dispatch(frame, options.meander_stop);
        ++result.steps;

        u64 placed = 0;
        for (Placement& placement : step.placements) {
            placed += placement.elements.size();
            Container& target = result.partitioning.containers[placement.root - 1];
            if (target.empty())
                target = std::move(placement.elements);
            else
                target.insert(target.end(), placement.elements.begin(), placement.elements.end());
            if (placements_seen[placement.root - 1] < 2)
                ++placements_seen[placement.root - 1];
        }
        placed_total += placed;

        if (options.trace)
            options.trace(TraceRecord{step.tag, frame.n_remaining, frame.slot_count(),
                                      frame.capacity, placed});
        if (step.matrix)
            result.meander = std::move(step.matrix);
        if (!step.next)
            break;
        detail::require(step.next->n_remaining < frame.n_remaining,
                        "n_remaining must strictly decrease");
        frame = std::move(*step.next);
    }

    detail::require(placed_total == inst.n, "placed element count != n");
    for (u64 j = 0; j < inst.k; ++j)
        if (placements_seen[j] > 1)
            std::sort(result.partitioning.containers[j].begin(),
                      result.partitioning.containers[j].end());
    return result;
}

/// The solver's plain entry point: a valid (k,t)-partitioning of {1,...,n}.
inline Partitioning solve(const Instance& inst, bool use_meander_stop = true)
{
    SolveOptions options;
    options.meander_stop = use_meander_stop;
    return solve_detailed(inst, options).partitioning;
}

} // namespace equisum
