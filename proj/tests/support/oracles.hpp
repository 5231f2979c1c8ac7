#pragma once

// Slow, direct reference implementations used only by the tests. None of
// them calls the code paths they are used to check.

#include "rnna/automaton.hpp"
#include "rnna/finite_buchi.hpp"
#include "rnna/name_dropping.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace rnna;

// Renames each bound occurrence to the index of its binder and leaves free
// names alone. Two bar strings are α-equivalent iff the keys agree.
std::vector<long> canonical_key(const BarString& w);

// Union-find over every bar string of length n on `pool`, joined by the
// single-step rewrite  x|av ~ x|bw  when b does not occur in v and
// w = (a b)v. Class ids are returned for strings over the first `base`
// names of the pool, indexed by the base-`base` encoding of the string.
std::vector<std::size_t> rewrite_classes(std::size_t n, std::size_t base, std::size_t pool);
BarString decode(std::size_t code, std::size_t n, std::size_t base);

// Accepting-run search on a lasso without a product graph: collect states
// at each visit of the cycle start, then look for a cycle-start state that
// returns to itself through a final state.
template <class State>
bool accepts_lasso(const LassoWord& w, const std::set<State>& init,
                   const std::function<std::set<State>(const State&, const Letter&)>& step,
                   const std::function<bool(const State&)>& final)
{
    std::set<State> cur = init;
    for (auto& l : w.spine()) {
        std::set<State> next;
        for (auto& s : cur)
            for (auto& t : step(s, l))
                next.insert(t);
        cur = std::move(next);
    }
    // Edges between cycle-start states, flagged when a final state is seen.
    std::map<State, std::set<std::pair<State, bool>>> edges;
    std::vector<State> todo(cur.begin(), cur.end());
    std::set<State> known = cur;
    while (!todo.empty()) {
        State s = todo.back();
        todo.pop_back();
        std::set<std::pair<State, bool>> layer{{s, false}};
        for (auto& l : w.cycle()) {
            std::set<std::pair<State, bool>> next;
            for (auto& [q, seen] : layer)
                for (auto& t : step(q, l))
                    next.insert({t, seen || final(t)});
            layer = std::move(next);
        }
        edges[s] = layer;
        for (auto& [t, _] : layer)
            if (known.insert(t).second)
                todo.push_back(t);
    }
    auto reaches = [&](const State& from, const State& to) {
        std::set<State> seen{from};
        std::vector<State> stack{from};
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            if (s == to)
                return true;
            for (auto& [t, _] : edges[s])
                if (seen.insert(t).second)
                    stack.push_back(t);
        }
        return false;
    };
    for (auto& [s, out] : edges)
        for (auto& [t, flagged] : out)
            if (flagged && reaches(t, s))
                return true;
    return false;
}

bool literal_accepts(const RegisterAutomaton& a, const LassoWord& w);
bool buchi_accepts(const FiniteBuchi& b, const LassoWord& w);

// Membership in the down-closure semantics: at a plain position the run may
// also take an edge labelled with the barred letter.
bool accepts_with_bars_added(const FiniteBuchi& b, const LassoWord& w);

// Name-dropping successors by enumerating total extensions of the source
// registers over a finite pool and restricting concrete successors.
std::set<DroppedState> nd_successors_by_extension(const RegisterAutomaton& a, const DroppedState& q,
                                                  const Letter& sigma);

// Muller acceptance of a lasso: some run whose set of controls seen
// infinitely often is exactly one member of the family.
bool muller_accepts(const MullerRegisterAutomaton& m, const LassoWord& w);

// Every lasso with spine length s, cycle length c, s + c <= max_total,
// over the given letters.
std::vector<LassoWord> all_lassos(const std::vector<Letter>& letters, std::size_t max_total);

// Random valid automaton: up to `controls` controls, up to `regs`
// registers each, initial names drawn from `names`.
RegisterAutomaton random_automaton(std::mt19937& rng, std::size_t controls, std::size_t regs,
                                   const std::vector<Name>& names);

FiniteBuchi random_buchi(std::mt19937& rng, std::size_t states, const std::vector<Letter>& alphabet,
                         double edge_probability);

LassoWord random_lasso(std::mt19937& rng, const std::vector<Letter>& letters, std::size_t max_spine,
                       std::size_t max_cycle);

std::vector<Name> names(std::initializer_list<std::uint32_t> ids);

} // namespace oracle
