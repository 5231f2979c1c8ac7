#include "rnna/name_dropping.hpp"

#include "rnna/lasso_search.hpp"

#include <algorithm>

namespace rnna {

DroppedState drop_nothing(const ConcreteState& q)
{
    DroppedState out{q.control, {}};
    for (Name n : q.regs)
        out.regs.emplace_back(n);
    return out;
}

DroppedState dropped_initial_state(const RegisterAutomaton& a)
{
    return drop_nothing(initial_state(a));
}

NameSet support(const DroppedState& q)
{
    NameSet out;
    for (auto& n : q.regs)
        if (n)
            out.insert(*n);
    return out;
}

DroppedState apply_perm(const Permutation& p, const DroppedState& q)
{
    DroppedState out{q.control, q.regs};
    for (auto& n : out.regs)
        if (n)
            n = p(*n);
    return out;
}

std::vector<DroppedState> restrictions(const DroppedState& q)
{
    std::vector<std::size_t> defined;
    for (std::size_t i = 0; i < q.regs.size(); ++i)
        if (q.regs[i])
            defined.push_back(i);
    std::vector<DroppedState> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << defined.size()); ++mask) {
        DroppedState s = q;
        for (std::size_t k = 0; k < defined.size(); ++k)
            if (mask >> k & 1)
                s.regs[defined[k]].reset();
        out.push_back(std::move(s));
    }
    return out;
}

std::string format_state(const RegisterAutomaton& a, const DroppedState& q, const NameTable& names)
{
    std::string s = "(" + a.controls[q.control].label + ", {";
    bool first = true;
    for (std::size_t i = 0; i < q.regs.size(); ++i) {
        if (!q.regs[i])
            continue;
        s += (first ? "" : ",") + std::to_string(i + 1) + ":" + names.spell(*q.regs[i]);
        first = false;
    }
    return s + "})";
}

bool nd_final(const RegisterAutomaton& a, const DroppedState& q)
{
    return a.controls[q.control].final;
}

namespace {

// Largest successor target of one transition; every other target of that
// transition is a restriction of it. Values of the extension r̄ are pinned
// only where r is defined (plus the read register); unpinned registers of
// r̄ hold names outside supp(r) and the letter, so any target register fed
// from them would leave supp(r) ∪ {a} and must be dropped.
std::optional<DroppedState> largest_target(const RegisterAutomaton& a, const DroppedState& q,
                                           const SymbolicTransition& t, const Letter& sigma,
                                           Name fresh)
{
    const auto& r = q.regs;
    DroppedState s{t.dst, std::vector<std::optional<Name>>(a.controls[t.dst].register_count)};
    if (t.kind == TransitionKind::Read) {
        // r̄(x) = a: consistent with r only if r(x) is a, since a must lie
        // in supp(r) and r̄ is injective.
        if (r[t.reg - 1] != sigma.name)
            return std::nullopt;
        for (Reg y = 1; y <= s.regs.size(); ++y)
            s.regs[y - 1] = r[*t.copy_source(y) - 1];
        return s;
    }
    // Bar: the original reads |b with b = fresh and must reach s̄ extending
    // (a b)·s. Work on s' = (a b)·s and swap back at the end.
    auto swap = Permutation::transposition(sigma.name, fresh);
    for (Reg y = 1; y <= s.regs.size(); ++y) {
        std::optional<Name> pinned;
        if (t.kind == TransitionKind::BarStore && y == t.reg) {
            pinned = fresh;
        } else {
            pinned = r[*t.copy_source(y) - 1];
            // The letter may not be among the copied names.
            if (pinned == fresh)
                return std::nullopt;
        }
        if (!pinned)
            continue;
        Name back = swap(*pinned);
        // supp(s) ⊆ supp(r) ∪ {a}
        if (back != sigma.name && !std::count(r.begin(), r.end(), std::optional<Name>(back)))
            continue;
        s.regs[y - 1] = back;
    }
    return s;
}

} // namespace

std::set<DroppedState> nd_successors(const RegisterAutomaton& a, const DroppedState& q,
                                     const Letter& sigma, Name fresh)
{
    NameSet supp = support(q);
    if (sigma.is_bar() && (fresh == sigma.name || supp.count(fresh)))
        throw Error("fresh witness must avoid the state and the letter");
    std::set<DroppedState> out;
    if (!sigma.is_bar() && !supp.count(sigma.name))
        return out;
    for (auto& t : a.transitions) {
        if (t.src != q.control || (t.kind == TransitionKind::Read) == sigma.is_bar())
            continue;
        auto s = largest_target(a, q, t, sigma, fresh);
        if (!s)
            continue;
        for (auto& sub : restrictions(*s))
            out.insert(std::move(sub));
    }
    return out;
}

std::set<DroppedState> nd_successors(const RegisterAutomaton& a, const DroppedState& q,
                                     const Letter& sigma)
{
    NameSet used = support(q);
    used.insert(sigma.name);
    return nd_successors(a, q, sigma, least_fresh(used));
}

bool nd_accepts_literal_lasso(const RegisterAutomaton& a, const LassoWord& w)
{
    require_valid(a);
    auto g = detail::build_lasso_product(
        w, dropped_initial_state(a),
        [&](const DroppedState& q, std::size_t pos) { return nd_successors(a, q, w.at(pos)); },
        [&](const DroppedState& q) { return nd_final(a, q); });
    return detail::has_accepting_cycle(g);
}

} // namespace rnna
