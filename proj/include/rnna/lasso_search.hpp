#pragma once

// Accepting-cycle search over the product of a lasso with a state space
// given by a successor function. Positions wrap from the last cycle letter
// back to the start of the cycle, so every cycle of the product lies in
// the cycle region.

#include "rnna/nominal.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace rnna::detail {

struct ProductGraph {
    std::vector<std::vector<std::size_t>> edges;
    std::vector<bool> accepting;
};

// Iterative Tarjan; true iff some non-trivial SCC holds an accepting node.
inline bool has_accepting_cycle(const ProductGraph& g)
{
    std::size_t n = g.edges.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    struct Frame {
        std::size_t node;
        std::size_t next_edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_edge < g.edges[f.node].size()) {
                std::size_t m = g.edges[f.node][f.next_edge++];
                if (index[m] == unvisited) {
                    index[m] = low[m] = counter++;
                    stack.push_back(m);
                    on_stack[m] = true;
                    call.push_back({m, 0});
                } else if (on_stack[m]) {
                    low[f.node] = std::min(low[f.node], index[m]);
                }
                continue;
            }
            std::size_t v = f.node;
            call.pop_back();
            if (!call.empty())
                low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] != index[v])
                continue;
            std::vector<std::size_t> component;
            std::size_t m;
            do {
                m = stack.back();
                stack.pop_back();
                on_stack[m] = false;
                component.push_back(m);
            } while (m != v);
            bool nontrivial = component.size() > 1 ||
                std::find(g.edges[v].begin(), g.edges[v].end(), v) != g.edges[v].end();
            if (!nontrivial)
                continue;
            for (std::size_t c : component)
                if (g.accepting[c])
                    return true;
        }
    }
    return false;
}

// Builds the reachable product of positions of w with states. `step(state,
// position)` returns the successor states on the letter(s) at that position;
// `final(state)` marks accepting states.
template <class State, class Step, class Final>
ProductGraph build_lasso_product(const LassoWord& w, const State& init, Step step, Final final)
{
    ProductGraph g;
    std::map<std::pair<std::size_t, State>, std::size_t> ids;
    std::vector<std::pair<std::size_t, State>> nodes;
    auto id_of = [&](std::size_t pos, const State& s) {
        auto [it, inserted] = ids.emplace(std::make_pair(pos, s), nodes.size());
        if (inserted) {
            nodes.emplace_back(pos, s);
            g.edges.emplace_back();
            g.accepting.push_back(final(s));
        }
        return it->second;
    };
    id_of(0, init);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [pos, state] = nodes[i];
        std::size_t next = w.next(pos);
        for (const State& s : step(state, pos)) {
            std::size_t j = id_of(next, s);
            g.edges[i].push_back(j);
        }
    }
    return g;
}

} // namespace rnna::detail
