#pragma once

#include "rnna/automaton.hpp"
#include "rnna/finite_buchi.hpp"
#include "rnna/name_dropping.hpp"

#include <vector>

namespace rnna {

// supp(q0) padded with the least other names up to degree(a)+1, ascending.
std::vector<Name> choose_name_set(const RegisterAutomaton& a);

// Letters over S: each name plain and barred.
std::vector<Letter> letters_over(const std::vector<Name>& s);

// Reachable part of the automaton restricted to states and letters over S.
// Throws Error if supp(q0) is not contained in S.
FiniteBuchi restrict_literal(const RegisterAutomaton& a, const std::vector<Name>& s,
                             const NameTable* names = nullptr);
// Same for the name-dropping modification.
FiniteBuchi restrict_name_dropped(const RegisterAutomaton& a, const std::vector<Name>& s,
                                  const NameTable* names = nullptr);

// Adds a plain-letter copy of every bar edge.
FiniteBuchi down_closure(const FiniteBuchi& b);

// k * |S|! for controls k; equals k_A * (m_A+1)! when |S| = degree + 1.
double literal_state_bound(const RegisterAutomaton& a, std::size_t name_count);
// k * 2^m * |S|! with m = degree(a).
double name_dropped_state_bound(const RegisterAutomaton& a, std::size_t name_count);

} // namespace rnna
