#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "random.hpp"

namespace aptmc {

/// Monotone simulated clock. "Pausing for h units" is plain arithmetic.
struct VirtualClock {
    double now = 0.0;
    double next_deadline = 0.0;

    void advance(double h) {
        if (h < 0.0) throw std::invalid_argument("VirtualClock: cannot advance backwards");
        now += h;
    }
};

/// State of the continuous-time process driving one set of serially
/// scheduled chains: the chain values, the lag since the last completed
/// move, the working position, and per-chain sample counters.
///
/// `cycle` lists the chains that take local moves (all of them normally;
/// the cold chain is omitted in worst-case runs). `pending_hold` is the
/// total duration of the in-flight move, 0 when none has been started.
template <class State>
struct JumpProcessState {
    std::vector<State> states;
    std::vector<std::uint64_t> counters;
    std::vector<std::size_t> cycle;
    std::size_t cycle_pos = 0;
    double lag = 0.0;
    double pending_hold = 0.0;

    std::size_t working() const { return cycle[cycle_pos]; }
    bool move_in_flight() const { return pending_hold > 0.0; }

    static JumpProcessState initial(std::vector<State> init,
                                    std::vector<std::size_t> move_cycle = {}) {
        JumpProcessState s;
        s.counters.assign(init.size(), 0);
        s.states = std::move(init);
        if (move_cycle.empty()) {
            s.cycle.resize(s.states.size());
            std::iota(s.cycle.begin(), s.cycle.end(), std::size_t{0});
        } else {
            for (std::size_t c : move_cycle)
                if (c >= s.states.size())
                    throw std::invalid_argument("JumpProcessState: cycle index out of range");
            s.cycle = std::move(move_cycle);
        }
        if (s.cycle.empty())
            throw std::invalid_argument("JumpProcessState: empty move cycle");
        return s;
    }
};

/// Advance the jump process until the given time.
///
/// For the working chain: a hold is drawn at move start; the move commits
/// (kernel applied, counter bumped, working index cycled) only if its
/// completion time is at or before `until`. Otherwise the chain is left
/// working with lag = until - last arrival. An interrupted move is not an
/// error; it resumes later with exactly its remaining hold.
///
/// Kernel:      State(std::size_t chain, const State&, RngStream&)
/// HoldSampler: double(std::size_t chain, const State&, RngStream&)
/// OnCommit:    void(std::size_t chain, const State&, double arrival_time)
template <class State, class Kernel, class HoldSampler, class OnCommit>
void advance_jump_process(JumpProcessState<State>& jp, VirtualClock& clock, Kernel&& kernel,
                          HoldSampler&& hold, double until, std::span<RngStream> rngs,
                          OnCommit&& on_commit) {
    if (until < clock.now)
        throw std::invalid_argument("advance_jump_process: until precedes the clock");
    if (rngs.size() < jp.states.size())
        throw std::invalid_argument("advance_jump_process: one rng stream per chain required");
    for (;;) {
        std::size_t j = jp.working();
        if (!jp.move_in_flight()) {
            jp.pending_hold = hold(j, jp.states[j], rngs[j]);
            jp.lag = 0.0;
        }
        double remaining = jp.pending_hold - jp.lag;
        if (clock.now + remaining > until) {
            jp.lag += until - clock.now;
            clock.now = until;
            return;
        }
        clock.advance(remaining);
        jp.states[j] = kernel(j, jp.states[j], rngs[j]);
        ++jp.counters[j];
        on_commit(j, jp.states[j], clock.now);
        jp.lag = 0.0;
        jp.pending_hold = 0.0;
        jp.cycle_pos = (jp.cycle_pos + 1) % jp.cycle.size();
    }
}

} // namespace aptmc
