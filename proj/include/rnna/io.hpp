#pragma once

#include "rnna/automaton.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace rnna {

// Line-oriented automaton text:
//   control <id> regs=<n> [final]
//   initial <id> [<reg>=<name> ...]
//   read <src> reg=<x> -> <dst> copy <y:x,...>
//   bar <src> -> <dst> copy <y:x,...> [store=<y>]
//   accept { {c1,c2} {c3} }        (Muller automata only)
// `#` starts a comment. An empty copy map is written `copy` or `copy -`.
struct ParsedAutomaton {
    RegisterAutomaton automaton;
    std::optional<std::vector<std::vector<ControlId>>> acceptance_family;

    bool is_muller() const { return acceptance_family.has_value(); }
    MullerRegisterAutomaton muller() const;
};

// Structural errors raise ParseError; rule violations that validate()
// reports are left for the caller.
ParsedAutomaton parse_automaton(std::string_view text, NameTable& names);
std::string format_automaton(const RegisterAutomaton& a, const NameTable& names);
std::string format_automaton(const MullerRegisterAutomaton& m, const NameTable& names);

std::string read_file(const std::string& path);

} // namespace rnna
