#pragma once

#include "rnna/automaton.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rnna {

// Control state with a partial injective register assignment.
struct DroppedState {
    ControlId control = 0;
    std::vector<std::optional<Name>> regs; // index y-1 holds register y

    auto operator<=>(const DroppedState&) const = default;
};

DroppedState dropped_initial_state(const RegisterAutomaton& a);
DroppedState drop_nothing(const ConcreteState& q);
NameSet support(const DroppedState& q);
DroppedState apply_perm(const Permutation& p, const DroppedState& q);
// All restrictions of q (including q itself).
std::vector<DroppedState> restrictions(const DroppedState& q);
// `(<control>, {reg:name,...})`
std::string format_state(const RegisterAutomaton& a, const DroppedState& q, const NameTable& names);

bool nd_final(const RegisterAutomaton& a, const DroppedState& q);

// Successors in the name-dropping modification. For a bar letter the
// fresh witness is the least name outside supp(q) and the letter.
std::set<DroppedState> nd_successors(const RegisterAutomaton& a, const DroppedState& q,
                                     const Letter& sigma);
// Same, with an explicit witness b; b must avoid supp(q) and the letter.
std::set<DroppedState> nd_successors(const RegisterAutomaton& a, const DroppedState& q,
                                     const Letter& sigma, Name fresh);

bool nd_accepts_literal_lasso(const RegisterAutomaton& a, const LassoWord& w);

} // namespace rnna
