#include "rnna/restriction.hpp"

#include <cmath>
#include <deque>
#include <map>

namespace rnna {

std::vector<Name> choose_name_set(const RegisterAutomaton& a)
{
    NameSet s = a.initial_support();
    std::size_t want = degree(a) + 1;
    if (s.size() < want)
        for (Name n : least_fresh(s, want - s.size()))
            s.insert(n);
    return {s.begin(), s.end()};
}

std::vector<Letter> letters_over(const std::vector<Name>& s)
{
    std::vector<Letter> out;
    for (Name n : s) {
        out.push_back(Letter::plain(n));
        out.push_back(Letter::bar(n));
    }
    return out;
}

namespace {

template <class State, class Successors, class Label>
FiniteBuchi restrict_states(const RegisterAutomaton& a, const std::vector<Name>& s, State init,
                            Successors successors, Label label)
{
    require_valid(a);
    NameSet allowed(s.begin(), s.end());
    for (Name n : a.initial_support())
        if (!allowed.count(n))
            throw Error("initial support is not contained in the chosen name set");
    FiniteBuchi out(letters_over(s));
    std::map<State, StateId> ids;
    std::deque<State> queue;
    auto id_of = [&](const State& q) {
        auto it = ids.find(q);
        if (it != ids.end())
            return it->second;
        StateId id = out.add_state(a.controls[q.control].final, label(q));
        ids.emplace(q, id);
        queue.push_back(q);
        return id;
    };
    out.set_initial(id_of(init));
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        StateId src = ids.at(q);
        for (LetterId l = 0; l < out.alphabet().size(); ++l) {
            for (const State& t : successors(q, out.alphabet()[l])) {
                bool inside = true;
                for (Name n : support(t))
                    inside = inside && allowed.count(n);
                if (inside)
                    out.add_edge(src, l, id_of(t));
            }
        }
    }
    return out;
}

} // namespace

FiniteBuchi restrict_literal(const RegisterAutomaton& a, const std::vector<Name>& s,
                             const NameTable* names)
{
    return restrict_states(
        a, s, initial_state(a),
        [&](const ConcreteState& q, const Letter& l) { return concrete_successors(a, q, l); },
        [&](const ConcreteState& q) {
            return names ? format_state(a, drop_nothing(q), *names) : std::string();
        });
}

FiniteBuchi restrict_name_dropped(const RegisterAutomaton& a, const std::vector<Name>& s,
                                  const NameTable* names)
{
    return restrict_states(
        a, s, dropped_initial_state(a),
        [&](const DroppedState& q, const Letter& l) { return nd_successors(a, q, l); },
        [&](const DroppedState& q) { return names ? format_state(a, q, *names) : std::string(); });
}

FiniteBuchi down_closure(const FiniteBuchi& b)
{
    FiniteBuchi out(b.alphabet());
    for (StateId s = 0; s < b.size(); ++s)
        out.add_state(b.is_final(s), b.label(s));
    if (b.size())
        out.set_initial(b.initial());
    for (StateId s = 0; s < b.size(); ++s) {
        for (auto [l, t] : b.edges(s)) {
            out.add_edge(s, l, t);
            const Letter& letter = b.alphabet()[l];
            if (!letter.is_bar())
                continue;
            auto plain = out.letter_id(Letter::plain(letter.name));
            if (!plain)
                throw Error("alphabet lacks the plain form of a bar letter");
            out.add_edge(s, *plain, t);
        }
    }
    return out;
}

double literal_state_bound(const RegisterAutomaton& a, std::size_t name_count)
{
    double factorial = 1;
    for (std::size_t i = 2; i <= name_count; ++i)
        factorial *= static_cast<double>(i);
    return static_cast<double>(a.controls.size()) * factorial;
}

double name_dropped_state_bound(const RegisterAutomaton& a, std::size_t name_count)
{
    return literal_state_bound(a, name_count) * std::pow(2.0, static_cast<double>(degree(a)));
}

} // namespace rnna
