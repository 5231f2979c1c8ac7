#pragma once

#include "rnna/nominal.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rnna {

using ControlId = std::size_t;
// Registers are 1-based, as in the text format.
using Reg = std::size_t;

struct ControlState {
    std::string label;
    std::size_t register_count = 0;
    bool final = false;
    bool operator==(const ControlState&) const = default;
};

enum class TransitionKind : std::uint8_t { Read, BarFresh, BarStore };

struct CopyPair {
    Reg dst;
    Reg src;
    auto operator<=>(const CopyPair&) const = default;
};

struct SymbolicTransition {
    ControlId src = 0;
    ControlId dst = 0;
    TransitionKind kind = TransitionKind::BarFresh;
    Reg reg = 0; // read register for Read, store target for BarStore
    std::vector<CopyPair> copy;
    std::size_t line = 0; // source line, 0 if built in code

    // Source register feeding dst register y, if any.
    std::optional<Reg> copy_source(Reg y) const;
    // Ignores the source line.
    bool operator==(const SymbolicTransition& o) const;
};

struct RegisterAutomaton {
    std::vector<ControlState> controls;
    std::vector<SymbolicTransition> transitions;
    ControlId initial_control = 0;
    std::vector<Name> initial_assignment; // index y-1 holds register y

    std::optional<ControlId> find_control(std::string_view label) const;
    NameSet initial_support() const;
    std::size_t total_registers() const;
    bool operator==(const RegisterAutomaton&) const = default;
};

struct ConcreteState {
    ControlId control = 0;
    std::vector<Name> regs; // index y-1 holds register y
    auto operator<=>(const ConcreteState&) const = default;
};

ConcreteState initial_state(const RegisterAutomaton& a);
NameSet support(const ConcreteState& q);
ConcreteState apply_perm(const Permutation& p, const ConcreteState& q);

struct MullerRegisterAutomaton {
    RegisterAutomaton automaton; // final flags are ignored
    std::vector<std::vector<ControlId>> acceptance_family;
};

struct Diagnostic {
    std::size_t line = 0; // 0 when unknown
    std::string location;
    std::string rule;

    std::string str() const;
};

std::vector<Diagnostic> validate(const RegisterAutomaton& a);
std::vector<Diagnostic> validate(const MullerRegisterAutomaton& m);
// Throws Error listing the diagnostics when validate(a) is non-empty.
void require_valid(const RegisterAutomaton& a);

std::size_t degree(const RegisterAutomaton& a);

std::set<ConcreteState> concrete_successors(const RegisterAutomaton& a, const ConcreteState& q,
                                            const Letter& sigma);

bool accepts_literal_lasso(const RegisterAutomaton& a, const LassoWord& w);

RegisterAutomaton muller_to_buchi(const MullerRegisterAutomaton& m);
// |Q| + sum over the family of |F_i| * 2^|F_i|, after normalising the family.
std::size_t muller_to_buchi_control_count(const MullerRegisterAutomaton& m);
// Sorted, duplicate-free members; duplicate members dropped.
std::vector<std::vector<ControlId>> normalized_family(const MullerRegisterAutomaton& m);

} // namespace rnna
