#include "tverwind/hunt.hpp"

#include "tverwind/errors.hpp"
#include "tverwind/winding.hpp"

#include <algorithm>
#include <cmath>

namespace tverwind {

std::size_t winding_count(const Drawing& dr, int q, int jobs) {
    return enumerate_winding_subgraph(dr, q, jobs).size();
}

HuntResult hunt_from(const Drawing& start, const HuntOptions& opt) {
    const int n = start.graph().n();
    if (opt.steps < 0) throw InvalidArgument("steps must be non-negative");
    if (opt.max_move < 1) throw InvalidArgument("max_move must be positive");
    if (!(opt.cooling > 0) || opt.cooling > 1) throw InvalidArgument("cooling must be in (0, 1]");
    for (int v : opt.pinned)
        if (v < 0 || v >= n) throw InvalidArgument("pinned vertex " + std::to_string(v) + " out of range");
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (std::find(opt.pinned.begin(), opt.pinned.end(), v) == opt.pinned.end()) movable.push_back(v);

    Rng rng(opt.seed);
    HuntResult r;
    r.current = start;
    r.current_count = winding_count(start, opt.q, opt.jobs);
    r.best = start;
    r.best_count = r.current_count;
    double temp = opt.temperature;

    for (int step = 1; step <= opt.steps; ++step) {
        HuntStep s;
        s.step = step;
        if (!movable.empty()) {
            const int v = movable[rng.uniform(0, static_cast<std::int64_t>(movable.size()) - 1)];
            auto pos = r.current.positions();
            pos[v].x += frac(rng.uniform(-opt.max_move, opt.max_move), 8);
            pos[v].y += frac(rng.uniform(-opt.max_move, opt.max_move), 8);
            const double u = rng.unit();
            Drawing proposal(r.current.graph(), std::move(pos), r.current.bends());
            s.general_position = general_position_check(proposal).empty();
            if (s.general_position) {
                s.proposed = winding_count(proposal, opt.q, opt.jobs);
                const double delta = static_cast<double>(s.proposed) - static_cast<double>(r.current_count);
                s.accepted = delta <= 0 || (temp > 0 && u < std::exp(-delta / temp));
                if (s.accepted) {
                    r.current = std::move(proposal);
                    r.current_count = s.proposed;
                    if (r.current_count < r.best_count) {
                        r.best = r.current;
                        r.best_count = r.current_count;
                    }
                }
            }
        }
        s.current = r.current_count;
        s.best = r.best_count;
        s.temperature = temp;
        r.trace.push_back(s);
        temp *= opt.cooling;
    }
    r.temperature = temp;
    return r;
}

HuntResult hunt(const Graph& graph, int q, std::uint64_t seed, int budget, int jobs) {
    HuntOptions opt;
    opt.q = q;
    opt.seed = seed;
    opt.steps = budget;
    opt.jobs = jobs;
    return hunt_from(random_drawing(graph, seed), opt);
}

nlohmann::json hunt_step_to_json(const HuntStep& s) {
    return {{"step", s.step},
            {"proposed", s.proposed},
            {"current", s.current},
            {"best", s.best},
            {"general_position", s.general_position},
            {"accepted", s.accepted},
            {"temperature", s.temperature}};
}

std::string hunt_log_line(const HuntStep& s) { return hunt_step_to_json(s).dump() + "\n"; }

}  // namespace tverwind
