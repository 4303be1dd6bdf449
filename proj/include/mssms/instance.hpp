#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mssms/config.hpp"
#include "mssms/metric.hpp"

namespace mssms {

// An offline/online problem instance: k servers, requests of size <= l.
struct Instance {
    MetricSpace space;
    int k = 0;
    int l = 0;
    Configuration initial;
    std::vector<Request> requests;

    int m() const { return static_cast<int>(requests.size()); }

    void validate() const {
        if (k <= 0) throw std::invalid_argument("instance needs k >= 1");
        if (l <= 0) throw std::invalid_argument("instance needs l >= 1");
        if (initial.size() != k) throw std::invalid_argument("initial configuration size differs from k");
        for (int p : initial)
            if (p >= space.size()) throw std::invalid_argument("server position out of range");
        for (const auto& r : requests) {
            if (r.size() > l) throw std::invalid_argument("request larger than width l");
            for (int p : r)
                if (p >= space.size()) throw std::invalid_argument("request point out of range");
        }
    }

    bool operator==(const Instance& other) const {
        return space == other.space && k == other.k && l == other.l && initial == other.initial &&
               requests == other.requests;
    }
};

struct Move {
    int server;  // slot in the per-server position vector
    int from;
    int to;
    auto operator<=>(const Move&) const = default;
};

// A lazy solution: per request, at most one move. `servers` may exceed the
// instance's k (the rounding pipeline produces kl-server schedules).
struct Schedule {
    Configuration initial;
    int servers = 0;
    std::vector<std::optional<Move>> steps;
    Rat cost;
};

// Independent feasibility check: replays the moves and recomputes the cost.
// Returns an error description, or nullopt when the schedule is valid.
inline std::optional<std::string> verify_schedule(const Instance& inst, const Schedule& sched) {
    if (sched.initial.size() != sched.servers) return "initial configuration size differs from server count";
    if (static_cast<int>(sched.steps.size()) != inst.m()) return "step count differs from request count";
    std::vector<int> pos(sched.initial.points());
    Rat total = 0;
    for (int i = 0; i < inst.m(); ++i) {
        const auto& step = sched.steps[i];
        if (step) {
            if (step->server < 0 || step->server >= sched.servers) return "move names a bad server slot";
            if (pos[step->server] != step->from) return "move 'from' does not match server position";
            total += inst.space.dist(step->from, step->to);
            pos[step->server] = step->to;
        }
        bool served = false;
        for (int p : pos)
            if (inst.requests[i].contains(p)) served = true;
        if (!served) return "request " + std::to_string(i + 1) + " left unserved";
    }
    if (total != sched.cost) return "recomputed cost differs from recorded cost";
    return std::nullopt;
}

}  // namespace mssms
