#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<long> canonical_key(const BarString& w)
{
    // Free names map to -1 - id, bound ones to the binder position.
    std::map<Name, long> bound;
    std::vector<long> key;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_bar()) {
            bound[w[i].name] = static_cast<long>(i);
            key.push_back(static_cast<long>(w.size()) + 1000);
        } else if (auto it = bound.find(w[i].name); it != bound.end()) {
            key.push_back(it->second);
        } else {
            key.push_back(-1 - static_cast<long>(w[i].name.id));
        }
    }
    return key;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Letters are coded 2*name + bar.
std::size_t encode(const BarString& w, std::size_t names)
{
    std::size_t code = 0;
    for (auto& l : w)
        code = code * 2 * names + 2 * l.name.id + (l.is_bar() ? 1 : 0);
    return code;
}

} // namespace

BarString decode(std::size_t code, std::size_t n, std::size_t base)
{
    BarString w(n);
    for (std::size_t i = n; i-- > 0;) {
        std::size_t c = code % (2 * base);
        code /= 2 * base;
        w[i] = {Name{static_cast<std::uint32_t>(c / 2)}, c % 2 ? LetterKind::Bar : LetterKind::Plain};
    }
    return w;
}

std::vector<std::size_t> rewrite_classes(std::size_t n, std::size_t base, std::size_t pool)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 2 * pool;
    UnionFind uf(total);
    for (std::size_t code = 0; code < total; ++code) {
        BarString w = decode(code, n, pool);
        for (std::size_t i = 0; i < n; ++i) {
            if (!w[i].is_bar())
                continue;
            Name a = w[i].name;
            std::set<Name> rest;
            for (std::size_t j = i + 1; j < n; ++j)
                rest.insert(w[j].name);
            for (std::uint32_t id = 0; id < pool; ++id) {
                Name b{id};
                if (b == a || rest.count(b))
                    continue;
                BarString v = w;
                v[i].name = b;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (v[j].name == a)
                        v[j].name = b;
                uf.join(code, encode(v, pool));
            }
        }
    }
    std::size_t base_total = 1;
    for (std::size_t i = 0; i < n; ++i)
        base_total *= 2 * base;
    std::vector<std::size_t> out(base_total);
    for (std::size_t code = 0; code < base_total; ++code)
        out[code] = uf.find(encode(decode(code, n, base), pool));
    return out;
}

namespace {

std::optional<Reg> source_of(const SymbolicTransition& t, Reg y)
{
    for (auto& p : t.copy)
        if (p.dst == y)
            return p.src;
    return std::nullopt;
}

// Concrete steps straight from the transition rules.
std::set<ConcreteState> step(const RegisterAutomaton& a, const ConcreteState& q, const Letter& l)
{
    std::set<ConcreteState> out;
    for (auto& t : a.transitions) {
        if (t.src != q.control)
            continue;
        std::size_t k = a.controls[t.dst].register_count;
        if (t.kind == TransitionKind::Read) {
            if (l.is_bar() || q.regs[t.reg - 1] != l.name)
                continue;
        } else if (!l.is_bar()) {
            continue;
        }
        std::vector<Name> regs(k);
        bool blocked = false;
        for (Reg y = 1; y <= k; ++y) {
            if (t.kind == TransitionKind::BarStore && y == t.reg) {
                regs[y - 1] = l.name;
                continue;
            }
            regs[y - 1] = q.regs[*source_of(t, y) - 1];
            if (t.kind != TransitionKind::Read && regs[y - 1] == l.name)
                blocked = true;
        }
        if (!blocked)
            out.insert({t.dst, regs});
    }
    return out;
}

} // namespace

bool literal_accepts(const RegisterAutomaton& a, const LassoWord& w)
{
    ConcreteState init{a.initial_control, a.initial_assignment};
    return accepts_lasso<ConcreteState>(
        w, {init}, [&](const ConcreteState& q, const Letter& l) { return step(a, q, l); },
        [&](const ConcreteState& q) { return a.controls[q.control].final; });
}

bool buchi_accepts(const FiniteBuchi& b, const LassoWord& w)
{
    auto step = [&](const StateId& s, const Letter& l) {
        std::set<StateId> out;
        for (auto [letter, t] : b.edges(s))
            if (b.alphabet()[letter] == l)
                out.insert(t);
        return out;
    };
    return accepts_lasso<StateId>(w, {b.initial()}, step,
                                  [&](const StateId& s) { return b.is_final(s); });
}

bool accepts_with_bars_added(const FiniteBuchi& b, const LassoWord& w)
{
    auto step = [&](const StateId& s, const Letter& l) {
        std::set<StateId> out;
        for (auto [letter, t] : b.edges(s)) {
            const Letter& e = b.alphabet()[letter];
            if (e == l || (!l.is_bar() && e == Letter::bar(l.name)))
                out.insert(t);
        }
        return out;
    };
    return accepts_lasso<StateId>(w, {b.initial()}, step,
                                  [&](const StateId& s) { return b.is_final(s); });
}

namespace {

// All total injective assignments of k registers that extend `partial`,
// taking new values from `pool`.
void extensions(const std::vector<std::optional<Name>>& partial, const std::vector<Name>& pool,
                std::vector<Name>& cur, std::vector<std::vector<Name>>& out)
{
    std::size_t i = cur.size();
    if (i == partial.size()) {
        out.push_back(cur);
        return;
    }
    auto used = [&](Name n) {
        if (std::find(cur.begin(), cur.end(), n) != cur.end())
            return true;
        for (std::size_t j = i + 1; j < partial.size(); ++j)
            if (partial[j] == n)
                return true;
        return false;
    };
    if (partial[i]) {
        cur.push_back(*partial[i]);
        extensions(partial, pool, cur, out);
        cur.pop_back();
        return;
    }
    for (Name n : pool) {
        if (used(n))
            continue;
        cur.push_back(n);
        extensions(partial, pool, cur, out);
        cur.pop_back();
    }
}

void sub_assignments(const std::vector<Name>& full, const std::set<Name>& allowed, ControlId c,
                     std::set<DroppedState>& out)
{
    std::size_t k = full.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        DroppedState s{c, std::vector<std::optional<Name>>(k)};
        bool ok = true;
        for (std::size_t y = 0; y < k; ++y) {
            if (!(mask >> y & 1))
                continue;
            if (!allowed.count(full[y]))
                ok = false;
            s.regs[y] = full[y];
        }
        if (ok)
            out.insert(s);
    }
}

} // namespace

std::set<DroppedState> nd_successors_by_extension(const RegisterAutomaton& a, const DroppedState& q,
                                                  const Letter& sigma)
{
    std::set<Name> supp;
    for (auto& v : q.regs)
        if (v)
            supp.insert(*v);
    std::set<Name> around = supp;
    around.insert(sigma.name);
    // b: fresh for the source and the letter.
    Name b{0};
    while (around.count(b))
        ++b.id;
    around.insert(b);
    // Enough further names to fill every register of either side.
    std::vector<Name> pool(around.begin(), around.end());
    std::size_t spare = a.total_registers() + 2;
    for (std::uint32_t id = 0; spare > 0; ++id)
        if (!around.count(Name{id})) {
            pool.push_back(Name{id});
            --spare;
        }

    std::vector<std::vector<Name>> fills;
    std::vector<Name> cur;
    extensions(q.regs, pool, cur, fills);

    std::set<DroppedState> out;
    for (auto& full : fills) {
        ConcreteState src{q.control, full};
        if (!sigma.is_bar()) {
            if (!supp.count(sigma.name))
                continue;
            for (auto& t : step(a, src, sigma))
                sub_assignments(t.regs, supp, t.control, out);
            continue;
        }
        std::set<Name> allowed = supp;
        allowed.insert(sigma.name);
        auto swap = Permutation::transposition(sigma.name, b);
        for (auto& t : step(a, src, Letter::bar(b))) {
            std::vector<Name> swapped;
            for (Name n : t.regs)
                swapped.push_back(swap(n));
            sub_assignments(swapped, allowed, t.control, out);
        }
    }
    return out;
}

bool muller_accepts(const MullerRegisterAutomaton& m, const LassoWord& w)
{
    const RegisterAutomaton& a = m.automaton;
    using Node = std::pair<std::size_t, ConcreteState>;
    std::map<Node, std::set<Node>> graph;
    std::vector<Node> todo{{0, ConcreteState{a.initial_control, a.initial_assignment}}};
    graph[todo.back()];
    while (!todo.empty()) {
        Node n = todo.back();
        todo.pop_back();
        std::size_t next = w.next(n.first);
        for (auto& t : step(a, n.second, w.at(n.first))) {
            Node succ{next, t};
            graph[n].insert(succ);
            if (!graph.count(succ)) {
                graph[succ];
                todo.push_back(succ);
            }
        }
    }
    for (auto& family : m.acceptance_family) {
        std::set<ControlId> want(family.begin(), family.end());
        if (want.empty())
            continue;
        auto inside = [&](const Node& n) { return want.count(n.second.control) > 0; };
        // Mutual reachability inside the subgraph, by plain closure.
        std::vector<Node> nodes;
        for (auto& [n, _] : graph)
            if (inside(n))
                nodes.push_back(n);
        auto reach_from = [&](const Node& s) {
            std::set<Node> seen;
            std::vector<Node> stack;
            for (auto& t : graph[s])
                if (inside(t) && seen.insert(t).second)
                    stack.push_back(t);
            while (!stack.empty()) {
                Node x = stack.back();
                stack.pop_back();
                for (auto& t : graph[x])
                    if (inside(t) && seen.insert(t).second)
                        stack.push_back(t);
            }
            return seen;
        };
        std::map<Node, std::set<Node>> reach;
        for (auto& n : nodes)
            reach[n] = reach_from(n);
        for (auto& n : nodes) {
            if (!reach[n].count(n))
                continue;
            std::set<ControlId> seen;
            for (auto& x : reach[n])
                if (reach[x].count(n))
                    seen.insert(x.second.control);
            if (seen == want)
                return true;
        }
    }
    return false;
}

std::vector<LassoWord> all_lassos(const std::vector<Letter>& letters, std::size_t max_total)
{
    std::vector<BarString> words{{}};
    std::vector<std::vector<BarString>> by_length{{{}}};
    for (std::size_t n = 1; n <= max_total; ++n) {
        std::vector<BarString> next;
        for (auto& w : by_length.back())
            for (auto& l : letters) {
                BarString v = w;
                v.push_back(l);
                next.push_back(v);
            }
        by_length.push_back(next);
    }
    std::vector<LassoWord> out;
    for (std::size_t c = 1; c <= max_total; ++c)
        for (std::size_t s = 0; s + c <= max_total; ++s)
            for (auto& u : by_length[s])
                for (auto& v : by_length[c])
                    out.emplace_back(u, v);
    return out;
}

RegisterAutomaton random_automaton(std::mt19937& rng, std::size_t controls, std::size_t regs,
                                   const std::vector<Name>& names)
{
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    RegisterAutomaton a;
    std::size_t k = pick(1, controls);
    for (std::size_t c = 0; c < k; ++c)
        a.controls.push_back({"c" + std::to_string(c), pick(0, regs), pick(0, 2) == 0});
    std::vector<Name> shuffled = names;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::size_t r0 = std::min(a.controls[0].register_count, shuffled.size());
    a.controls[0].register_count = r0;
    a.initial_assignment.assign(shuffled.begin(), shuffled.begin() + static_cast<long>(r0));

    std::size_t edges = pick(1, 2 * k + 1);
    for (std::size_t e = 0; e < edges; ++e) {
        SymbolicTransition t;
        t.src = pick(0, k - 1);
        t.dst = pick(0, k - 1);
        std::size_t from = a.controls[t.src].register_count;
        std::size_t to = a.controls[t.dst].register_count;
        int kind = static_cast<int>(pick(0, 2));
        if (kind == 0 && from == 0)
            kind = 1;
        if (kind == 2 && to == 0)
            kind = 1;
        t.kind = static_cast<TransitionKind>(kind);
        if (t.kind == TransitionKind::Read)
            t.reg = pick(1, from);
        if (t.kind == TransitionKind::BarStore)
            t.reg = pick(1, to);
        std::vector<Reg> sources(from);
        std::iota(sources.begin(), sources.end(), 1);
        std::shuffle(sources.begin(), sources.end(), rng);
        std::size_t next = 0;
        bool ok = true;
        for (Reg y = 1; y <= to; ++y) {
            if (t.kind == TransitionKind::BarStore && y == t.reg)
                continue;
            if (next == sources.size()) {
                ok = false;
                break;
            }
            t.copy.push_back({y, sources[next++]});
        }
        if (ok)
            a.transitions.push_back(t);
    }
    return a;
}

FiniteBuchi random_buchi(std::mt19937& rng, std::size_t states, const std::vector<Letter>& alphabet,
                         double edge_probability)
{
    FiniteBuchi b(alphabet);
    std::bernoulli_distribution coin(0.5), edge(edge_probability);
    for (std::size_t s = 0; s < states; ++s)
        b.add_state(coin(rng));
    b.set_initial(0);
    for (StateId s = 0; s < states; ++s)
        for (LetterId l = 0; l < b.alphabet().size(); ++l)
            for (StateId t = 0; t < states; ++t)
                if (edge(rng))
                    b.add_edge(s, l, t);
    return b;
}

LassoWord random_lasso(std::mt19937& rng, const std::vector<Letter>& letters, std::size_t max_spine,
                       std::size_t max_cycle)
{
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::size_t s = std::uniform_int_distribution<std::size_t>(0, max_spine)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(1, max_cycle)(rng);
    BarString u, v;
    for (std::size_t i = 0; i < s; ++i)
        u.push_back(letters[pick(rng)]);
    for (std::size_t i = 0; i < c; ++i)
        v.push_back(letters[pick(rng)]);
    return {u, v};
}

std::vector<Name> names(std::initializer_list<std::uint32_t> ids)
{
    std::vector<Name> out;
    for (auto id : ids)
        out.push_back(Name{id});
    return out;
}

} // namespace oracle
