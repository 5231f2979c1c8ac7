#pragma once

#include "rnna/automaton.hpp"
#include "rnna/finite_buchi.hpp"
#include "rnna/name_dropping.hpp"
#include "rnna/restriction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rnna {

enum class WitnessKind { BarWord, DataWord };

struct InclusionVerdict {
    bool holds = true;
    // Accepted literally by the left automaton; for bar inclusion its
    // α-class is missing on the right, for data inclusion some data word
    // obtained from it by erasing bars is missing on the right.
    std::optional<LassoWord> counterexample;
    WitnessKind kind = WitnessKind::BarWord;
    // Set when an equivalence check failed right-to-left.
    bool reversed = false;

    std::vector<Name> name_set;
    std::size_t left_states = 0;   // restriction of the left automaton
    std::size_t right_states = 0;  // name-dropped restriction of the right one
    std::size_t complement_states = 0;
    std::size_t product_states = 0;
    double left_bound = 0;
    double right_bound = 0;
};

// choose_name_set(a) plus any initial names of b outside it.
std::vector<Name> inclusion_name_set(const RegisterAutomaton& a, const RegisterAutomaton& b);

InclusionVerdict bar_inclusion(const RegisterAutomaton& a, const RegisterAutomaton& b,
                               Complementation how = Complementation::Slices);
InclusionVerdict data_inclusion(const RegisterAutomaton& a, const RegisterAutomaton& b,
                                Complementation how = Complementation::Slices);
InclusionVerdict bar_equivalence(const RegisterAutomaton& a, const RegisterAutomaton& b,
                                 Complementation how = Complementation::Slices);

bool bar_member(const RegisterAutomaton& a, const LassoWord& w);
// Data lasso (no bar letters) under local freshness: some placement of bars
// yields a bar word whose α-class is accepted.
bool data_member_local(const RegisterAutomaton& a, const LassoWord& u);
// Same, restricted to clean placements.
bool data_member_global(const RegisterAutomaton& a, const LassoWord& u);

std::string format_report(const InclusionVerdict& v, const NameTable& names,
                          const std::string& semantics);

} // namespace rnna
