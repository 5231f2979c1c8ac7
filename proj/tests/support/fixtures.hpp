#pragma once

#include "rnna/decision.hpp"
#include "rnna/io.hpp"

#include <string>

#ifndef RNNA_CORPUS_DIR
#error "RNNA_CORPUS_DIR must point at the corpus directory"
#endif

namespace fixture {

// One table per test binary, so spellings agree across helpers.
inline rnna::NameTable& table()
{
    static rnna::NameTable names;
    return names;
}

inline rnna::ParsedAutomaton load_parsed(const std::string& file)
{
    return rnna::parse_automaton(rnna::read_file(std::string(RNNA_CORPUS_DIR) + "/" + file), table());
}

inline rnna::RegisterAutomaton load(const std::string& file)
{
    return load_parsed(file).automaton;
}

inline rnna::LassoWord lasso(const std::string& text)
{
    return rnna::parse_lasso(text, table());
}

inline rnna::BarString word(const std::string& text)
{
    return rnna::parse_string(text, table());
}

inline rnna::Name name(const std::string& spelling)
{
    return table().intern(spelling);
}

inline std::string show(const rnna::LassoWord& w)
{
    return rnna::format_lasso(w, table());
}

} // namespace fixture
