#pragma once

#include "tverwind/drawings.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace tverwind {

struct HuntOptions {
    int q = 2;
    std::uint64_t seed = 0;
    int steps = 100;
    double temperature = 1.0;  // initial temperature
    double cooling = 0.98;     // multiplied into the temperature after each step
    int max_move = 8;          // moves are k/8 per axis with |k| <= max_move
    std::vector<int> pinned;   // vertices that never move
    int jobs = 1;
};

struct HuntStep {
    int step = 0;
    std::size_t proposed = 0;  // count of the proposal (0 when rejected for GP)
    std::size_t current = 0;
    std::size_t best = 0;
    bool general_position = true;
    bool accepted = false;
    double temperature = 0;
};

struct HuntResult {
    Drawing best;
    std::size_t best_count = 0;
    Drawing current;
    std::size_t current_count = 0;
    double temperature = 0;
    std::vector<HuntStep> trace;
};

/// Number of winding partitions of a drawing on 3q-2 vertices (missing edges
/// allowed). Throws WrongGraph for other vertex counts.
std::size_t winding_count(const Drawing& dr, int q, int jobs = 1);

/// Simulated annealing from `start`, minimizing the winding count. Each step
/// moves one unpinned vertex by a random grid offset; proposals that leave
/// general position are rejected. Bends are kept. Deterministic given the
/// options.
HuntResult hunt_from(const Drawing& start, const HuntOptions& opt);

/// Starts from random_drawing(graph, seed) and runs `budget` steps.
HuntResult hunt(const Graph& graph, int q, std::uint64_t seed, int budget, int jobs = 1);

/// One JSON object per trace entry, newline terminated.
std::string hunt_log_line(const HuntStep& s);
nlohmann::json hunt_step_to_json(const HuntStep& s);

}  // namespace tverwind
