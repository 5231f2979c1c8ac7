#include "rnna/decision.hpp"

#include "rnna/lasso_search.hpp"

#include <algorithm>
#include <sstream>

namespace rnna {

std::vector<Name> inclusion_name_set(const RegisterAutomaton& a, const RegisterAutomaton& b)
{
    auto s = choose_name_set(a);
    NameSet all(s.begin(), s.end());
    for (Name n : b.initial_support())
        all.insert(n);
    return {all.begin(), all.end()};
}

namespace {

InclusionVerdict decide(const RegisterAutomaton& a, const RegisterAutomaton& b, bool closure,
                        Complementation how)
{
    require_valid(a);
    require_valid(b);
    InclusionVerdict v;
    v.kind = closure ? WitnessKind::DataWord : WitnessKind::BarWord;
    v.name_set = inclusion_name_set(a, b);
    FiniteBuchi left = restrict_literal(a, v.name_set);
    FiniteBuchi right = restrict_name_dropped(b, v.name_set);
    v.left_states = left.size();
    v.right_states = right.size();
    v.left_bound = literal_state_bound(a, v.name_set.size());
    v.right_bound = name_dropped_state_bound(b, v.name_set.size());
    auto r = includes(left, closure ? down_closure(right) : right, how);
    v.holds = r.holds;
    v.complement_states = r.complement_states;
    v.product_states = r.product_states;
    if (r.counterexample)
        v.counterexample = normalize(to_lasso(left, *r.counterexample));
    return v;
}

} // namespace

InclusionVerdict bar_inclusion(const RegisterAutomaton& a, const RegisterAutomaton& b,
                               Complementation how)
{
    return decide(a, b, false, how);
}

InclusionVerdict data_inclusion(const RegisterAutomaton& a, const RegisterAutomaton& b,
                                Complementation how)
{
    return decide(a, b, true, how);
}

InclusionVerdict bar_equivalence(const RegisterAutomaton& a, const RegisterAutomaton& b,
                                 Complementation how)
{
    auto forward = bar_inclusion(a, b, how);
    if (!forward.holds)
        return forward;
    auto backward = bar_inclusion(b, a, how);
    if (!backward.holds) {
        backward.reversed = true;
        return backward;
    }
    return forward;
}

bool bar_member(const RegisterAutomaton& a, const LassoWord& w)
{
    return nd_accepts_literal_lasso(a, w);
}

namespace {

void require_data_word(const LassoWord& u)
{
    for (auto* part : {&u.spine(), &u.cycle()})
        for (auto& l : *part)
            if (l.is_bar())
                throw Error("data word must not contain bar letters");
}

} // namespace

bool data_member_local(const RegisterAutomaton& a, const LassoWord& u)
{
    require_data_word(u);
    require_valid(a);
    auto g = detail::build_lasso_product(
        u, dropped_initial_state(a),
        [&](const DroppedState& q, std::size_t pos) {
            Name n = u.at(pos).name;
            auto out = nd_successors(a, q, Letter::plain(n));
            out.merge(nd_successors(a, q, Letter::bar(n)));
            return out;
        },
        [&](const DroppedState& q) { return nd_final(a, q); });
    return detail::has_accepting_cycle(g);
}

bool data_member_global(const RegisterAutomaton& a, const LassoWord& u)
{
    require_data_word(u);
    require_valid(a);
    // After one unrolled cycle every name has had its first occurrence.
    LassoWord unrolled = reshape(u, u.total(), 1);
    std::vector<Name> names;
    for (Name n : names_of(u))
        names.push_back(n);
    if (names.size() > 20)
        throw Error("too many names for clean bar placement");
    for (std::size_t mask = 0; mask < (std::size_t{1} << names.size()); ++mask) {
        BarString spine = unrolled.spine();
        NameSet seen;
        for (auto& l : spine) {
            if (!seen.insert(l.name).second)
                continue;
            auto it = std::find(names.begin(), names.end(), l.name);
            if (mask >> (it - names.begin()) & 1)
                l.kind = LetterKind::Bar;
        }
        if (bar_member(a, LassoWord(std::move(spine), unrolled.cycle())))
            return true;
    }
    return false;
}

std::string format_report(const InclusionVerdict& v, const NameTable& names,
                          const std::string& semantics)
{
    std::ostringstream os;
    os << "verdict: " << (v.holds ? "holds" : "fails") << '\n';
    os << "semantics: " << semantics << '\n';
    if (v.counterexample) {
        os << "witness: " << format_lasso(*v.counterexample, names) << '\n';
        os << "witness kind: "
           << (v.kind == WitnessKind::BarWord
                   ? "bar word accepted on the left whose alpha-class is not accepted on the right"
                   : "bar word accepted on the left; some data word obtained by erasing bars is "
                     "not accepted on the right")
           << '\n';
        if (v.reversed)
            os << "direction: right automaton accepts what the left one does not\n";
    }
    os << "name set:";
    for (Name n : v.name_set)
        os << ' ' << names.spell(n);
    os << '\n';
    os << "legend:";
    for (Name n : v.name_set)
        os << ' ' << names.spell(n) << '=' << (names.known(n) ? "input" : "fresh");
    os << '\n';
    os << "sizes: left=" << v.left_states << " right=" << v.right_states
       << " complement=" << v.complement_states << " product=" << v.product_states << '\n';
    os << "bounds: left<=" << v.left_bound << " right<=" << v.right_bound << '\n';
    if (v.kind == WitnessKind::DataWord)
        os << "note: data verdicts range over all infinite data words; inclusion restricted to "
              "finitely supported data words is not decided\n";
    return os.str();
}

} // namespace rnna
