#include "rnna/automaton.hpp"

#include "rnna/lasso_search.hpp"

#include <algorithm>
#include <map>

namespace rnna {

std::optional<Reg> SymbolicTransition::copy_source(Reg y) const
{
    for (auto& c : copy)
        if (c.dst == y)
            return c.src;
    return std::nullopt;
}

bool SymbolicTransition::operator==(const SymbolicTransition& o) const
{
    auto sorted = [](std::vector<CopyPair> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    return src == o.src && dst == o.dst && kind == o.kind && reg == o.reg &&
        sorted(copy) == sorted(o.copy);
}

std::optional<ControlId> RegisterAutomaton::find_control(std::string_view label) const
{
    for (ControlId i = 0; i < controls.size(); ++i)
        if (controls[i].label == label)
            return i;
    return std::nullopt;
}

NameSet RegisterAutomaton::initial_support() const
{
    return NameSet(initial_assignment.begin(), initial_assignment.end());
}

std::size_t RegisterAutomaton::total_registers() const
{
    std::size_t n = 0;
    for (auto& c : controls)
        n += c.register_count;
    return n;
}

ConcreteState initial_state(const RegisterAutomaton& a)
{
    return {a.initial_control, a.initial_assignment};
}

NameSet support(const ConcreteState& q)
{
    return NameSet(q.regs.begin(), q.regs.end());
}

ConcreteState apply_perm(const Permutation& p, const ConcreteState& q)
{
    ConcreteState out{q.control, {}};
    for (Name n : q.regs)
        out.regs.push_back(p(n));
    return out;
}

std::string Diagnostic::str() const
{
    std::string s;
    if (line)
        s = "line " + std::to_string(line) + ": ";
    return s + location + ": " + rule;
}

namespace {

std::string transition_location(const RegisterAutomaton& a, std::size_t index)
{
    const auto& t = a.transitions[index];
    std::string kind = t.kind == TransitionKind::Read ? "read" : "bar";
    std::string src = t.src < a.controls.size() ? a.controls[t.src].label : "?";
    std::string dst = t.dst < a.controls.size() ? a.controls[t.dst].label : "?";
    return "transition " + kind + " " + src + " -> " + dst;
}

void check_transition(const RegisterAutomaton& a, std::size_t index, std::vector<Diagnostic>& out)
{
    const auto& t = a.transitions[index];
    auto report = [&](std::string rule) {
        out.push_back({t.line, transition_location(a, index), std::move(rule)});
    };
    if (t.src >= a.controls.size() || t.dst >= a.controls.size()) {
        report("unknown control state");
        return;
    }
    std::size_t src_regs = a.controls[t.src].register_count;
    std::size_t dst_regs = a.controls[t.dst].register_count;

    std::set<Reg> dsts, srcs;
    bool in_range = true;
    for (auto& c : t.copy) {
        if (c.dst < 1 || c.dst > dst_regs) {
            report("copy target register " + std::to_string(c.dst) + " out of range 1.." +
                   std::to_string(dst_regs));
            in_range = false;
        }
        if (c.src < 1 || c.src > src_regs) {
            report("copy source register " + std::to_string(c.src) + " out of range 1.." +
                   std::to_string(src_regs));
            in_range = false;
        }
        if (!dsts.insert(c.dst).second)
            report("copy assigns target register " + std::to_string(c.dst) + " twice");
        if (!srcs.insert(c.src).second)
            report("copy is not injective: source register " + std::to_string(c.src) +
                   " used twice");
    }

    std::optional<Reg> exempt;
    if (t.kind == TransitionKind::Read) {
        if (t.reg < 1 || t.reg > src_regs)
            report("read register " + std::to_string(t.reg) + " out of range 1.." +
                   std::to_string(src_regs));
    } else if (t.kind == TransitionKind::BarStore) {
        if (t.reg < 1 || t.reg > dst_regs) {
            report("store register " + std::to_string(t.reg) + " out of range 1.." +
                   std::to_string(dst_regs));
        } else {
            exempt = t.reg;
            if (dsts.count(t.reg))
                report("store register " + std::to_string(t.reg) + " is also a copy target");
        }
    }
    if (!in_range)
        return;
    for (Reg y = 1; y <= dst_regs; ++y)
        if (y != exempt && !dsts.count(y))
            report("copy leaves target register " + std::to_string(y) + " unassigned");
}

} // namespace

std::vector<Diagnostic> validate(const RegisterAutomaton& a)
{
    std::vector<Diagnostic> out;
    if (a.controls.empty()) {
        out.push_back({0, "automaton", "no control states"});
        return out;
    }
    if (a.initial_control >= a.controls.size()) {
        out.push_back({0, "initial", "unknown initial control state"});
    } else {
        const auto& c = a.controls[a.initial_control];
        if (a.initial_assignment.size() != c.register_count)
            out.push_back({0, "initial " + c.label,
                           "initial assignment must fill all " +
                               std::to_string(c.register_count) + " registers"});
        if (a.initial_support().size() != a.initial_assignment.size())
            out.push_back({0, "initial " + c.label, "initial assignment is not injective"});
    }
    for (std::size_t i = 0; i < a.transitions.size(); ++i)
        check_transition(a, i, out);
    return out;
}

std::vector<Diagnostic> validate(const MullerRegisterAutomaton& m)
{
    auto out = validate(m.automaton);
    for (std::size_t i = 0; i < m.acceptance_family.size(); ++i)
        for (ControlId c : m.acceptance_family[i])
            if (c >= m.automaton.controls.size())
                out.push_back({0, "accept set " + std::to_string(i + 1),
                               "unknown control state"});
    return out;
}

void require_valid(const RegisterAutomaton& a)
{
    auto diags = validate(a);
    if (diags.empty())
        return;
    std::string msg = "invalid automaton:";
    for (auto& d : diags)
        msg += "\n  " + d.str();
    throw Error(msg);
}

std::size_t degree(const RegisterAutomaton& a)
{
    std::size_t m = 0;
    for (auto& c : a.controls)
        m = std::max(m, c.register_count);
    return m;
}

std::set<ConcreteState> concrete_successors(const RegisterAutomaton& a, const ConcreteState& q,
                                            const Letter& sigma)
{
    std::set<ConcreteState> out;
    for (auto& t : a.transitions) {
        if (t.src != q.control)
            continue;
        if ((t.kind == TransitionKind::Read) == sigma.is_bar())
            continue;
        if (t.kind == TransitionKind::Read && q.regs[t.reg - 1] != sigma.name)
            continue;
        ConcreteState s{t.dst, std::vector<Name>(a.controls[t.dst].register_count)};
        bool fires = true;
        for (Reg y = 1; y <= s.regs.size(); ++y) {
            if (t.kind == TransitionKind::BarStore && y == t.reg) {
                s.regs[y - 1] = sigma.name;
                continue;
            }
            auto x = t.copy_source(y);
            if (!x)
                throw Error("transition leaves a register unassigned; validate first");
            s.regs[y - 1] = q.regs[*x - 1];
            if (sigma.is_bar() && s.regs[y - 1] == sigma.name)
                fires = false;
        }
        if (fires)
            out.insert(std::move(s));
    }
    return out;
}

bool accepts_literal_lasso(const RegisterAutomaton& a, const LassoWord& w)
{
    require_valid(a);
    auto g = detail::build_lasso_product(
        w, initial_state(a),
        [&](const ConcreteState& q, std::size_t pos) { return concrete_successors(a, q, w.at(pos)); },
        [&](const ConcreteState& q) { return a.controls[q.control].final; });
    return detail::has_accepting_cycle(g);
}

std::vector<std::vector<ControlId>> normalized_family(const MullerRegisterAutomaton& m)
{
    std::vector<std::vector<ControlId>> out;
    for (auto member : m.acceptance_family) {
        std::sort(member.begin(), member.end());
        member.erase(std::unique(member.begin(), member.end()), member.end());
        if (std::find(out.begin(), out.end(), member) == out.end())
            out.push_back(std::move(member));
    }
    return out;
}

std::size_t muller_to_buchi_control_count(const MullerRegisterAutomaton& m)
{
    std::size_t n = m.automaton.controls.size();
    for (auto& f : normalized_family(m))
        n += f.size() << f.size();
    return n;
}

RegisterAutomaton muller_to_buchi(const MullerRegisterAutomaton& m)
{
    auto diags = validate(m);
    if (!diags.empty()) {
        std::string msg = "invalid Muller automaton:";
        for (auto& d : diags)
            msg += "\n  " + d.str();
        throw Error(msg);
    }
    const RegisterAutomaton& a = m.automaton;
    auto family = normalized_family(m);
    if (family.size() > 64)
        throw Error("acceptance family too large");
    for (auto& f : family)
        if (f.size() > 20)
            throw Error("acceptance set too large to expand");

    RegisterAutomaton out;
    out.initial_control = a.initial_control;
    out.initial_assignment = a.initial_assignment;
    std::set<std::string> labels;
    for (auto c : a.controls) {
        c.final = false;
        labels.insert(c.label);
        out.controls.push_back(std::move(c));
    }

    // tracked[i][(position of c in F_i) << |F_i| | R]
    std::vector<std::vector<ControlId>> tracked(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = family[i];
        std::size_t full = (std::size_t{1} << f.size()) - 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            for (std::size_t r = 0; r <= full; ++r) {
                std::string label = a.controls[f[k]].label + "." + std::to_string(i + 1) + ".";
                std::string seen;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (r >> j & 1)
                        seen += (seen.empty() ? "" : "+") + a.controls[f[j]].label;
                label += seen.empty() ? "-" : seen;
                while (labels.count(label))
                    label += "_";
                labels.insert(label);
                tracked[i].push_back(out.controls.size());
                out.controls.push_back({label, a.controls[f[k]].register_count, r == full});
            }
        }
    }

    auto position = [&](std::size_t i, ControlId c) -> std::optional<std::size_t> {
        auto it = std::find(family[i].begin(), family[i].end(), c);
        if (it == family[i].end())
            return std::nullopt;
        return static_cast<std::size_t>(it - family[i].begin());
    };
    for (auto& t : a.transitions) {
        out.transitions.push_back(t);
        for (std::size_t i = 0; i < family.size(); ++i) {
            std::size_t width = family[i].size();
            std::size_t full = (std::size_t{1} << width) - 1;
            auto to = position(i, t.dst);
            if (!to)
                continue;
            auto edge = [&](ControlId src, ControlId dst) {
                SymbolicTransition copy = t;
                copy.src = src;
                copy.dst = dst;
                out.transitions.push_back(std::move(copy));
            };
            edge(t.src, tracked[i][(*to << width) | 0]);
            auto from = position(i, t.src);
            if (!from)
                continue;
            for (std::size_t r = 0; r < full; ++r)
                edge(tracked[i][(*from << width) | r],
                     tracked[i][(*to << width) | (r | std::size_t{1} << *to)]);
            edge(tracked[i][(*from << width) | full], tracked[i][(*to << width) | 0]);
        }
    }
    return out;
}

} // namespace rnna
