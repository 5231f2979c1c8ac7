#pragma once

#include "rnna/nominal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rnna {

using StateId = std::size_t;
using LetterId = std::size_t;

// Explicit Büchi automaton over a finite alphabet of letters. States are
// 0..size()-1; edges are kept sorted by (letter, target).
class FiniteBuchi {
public:
    FiniteBuchi() = default;
    explicit FiniteBuchi(std::vector<Letter> alphabet);

    StateId add_state(bool final = false, std::string label = {});
    void add_edge(StateId src, LetterId letter, StateId dst);
    void set_initial(StateId s);
    void set_final(StateId s, bool final);

    const std::vector<Letter>& alphabet() const { return alphabet_; }
    std::optional<LetterId> letter_id(const Letter& l) const;
    std::size_t size() const { return final_.size(); }
    std::size_t edge_count() const;
    StateId initial() const { return initial_; }
    bool is_final(StateId s) const { return final_[s]; }
    const std::string& label(StateId s) const { return labels_[s]; }
    const std::vector<std::pair<LetterId, StateId>>& edges(StateId s) const { return edges_[s]; }
    // Targets of s on one letter.
    std::vector<StateId> successors(StateId s, LetterId letter) const;

private:
    std::vector<Letter> alphabet_;
    std::vector<std::vector<std::pair<LetterId, StateId>>> edges_;
    std::vector<bool> final_;
    std::vector<std::string> labels_;
    StateId initial_ = 0;
};

// u v^ω over alphabet indices; cycle non-empty.
struct LassoWitness {
    std::vector<LetterId> spine;
    std::vector<LetterId> cycle;
    bool operator==(const LassoWitness&) const = default;
};

LassoWord to_lasso(const FiniteBuchi& b, const LassoWitness& w);
// Throws Error if a letter is missing from the alphabet.
LassoWitness to_witness(const FiniteBuchi& b, const LassoWord& w);

bool lasso_member(const FiniteBuchi& b, const LassoWitness& w);
// False for words with letters outside the alphabet.
bool lasso_member(const FiniteBuchi& b, const LassoWord& w);

struct EmptinessResult {
    bool empty = true;
    std::optional<LassoWitness> witness;
};

// Nested depth-first search; the witness cycle passes through a final state.
EmptinessResult is_empty(const FiniteBuchi& b);

FiniteBuchi intersect(const FiniteBuchi& b1, const FiniteBuchi& b2);

// Rank-based complement: level rankings up to 2n with an obligation set.
FiniteBuchi complement(const FiniteBuchi& b);
// Slice-based complement over reduced split trees; far smaller on the
// automata produced by the name-dropping restriction.
FiniteBuchi complement_slices(const FiniteBuchi& b);

enum class Complementation { Slices, Ranks };

struct InclusionResult {
    bool holds = true;
    std::optional<LassoWitness> counterexample; // in L(b1) \ L(b2)
    std::size_t complement_states = 0;
    std::size_t product_states = 0;
};

InclusionResult includes(const FiniteBuchi& b1, const FiniteBuchi& b2,
                         Complementation how = Complementation::Slices);

// `fba` text format.
std::string format_fba(const FiniteBuchi& b, const NameTable& names);
FiniteBuchi parse_fba(std::string_view text, NameTable& names);

} // namespace rnna
