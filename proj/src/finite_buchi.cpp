#include "rnna/finite_buchi.hpp"

#include "rnna/lasso_search.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace rnna {

FiniteBuchi::FiniteBuchi(std::vector<Letter> alphabet) : alphabet_(std::move(alphabet))
{
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

StateId FiniteBuchi::add_state(bool final, std::string label)
{
    edges_.emplace_back();
    final_.push_back(final);
    labels_.push_back(std::move(label));
    return final_.size() - 1;
}

void FiniteBuchi::add_edge(StateId src, LetterId letter, StateId dst)
{
    if (src >= size() || dst >= size() || letter >= alphabet_.size())
        throw Error("edge refers to an unknown state or letter");
    auto& out = edges_[src];
    std::pair<LetterId, StateId> e{letter, dst};
    auto it = std::lower_bound(out.begin(), out.end(), e);
    if (it == out.end() || *it != e)
        out.insert(it, e);
}

void FiniteBuchi::set_initial(StateId s)
{
    if (s >= size())
        throw Error("initial state out of range");
    initial_ = s;
}

void FiniteBuchi::set_final(StateId s, bool final)
{
    final_.at(s) = final;
}

std::optional<LetterId> FiniteBuchi::letter_id(const Letter& l) const
{
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
    if (it == alphabet_.end() || *it != l)
        return std::nullopt;
    return static_cast<LetterId>(it - alphabet_.begin());
}

std::size_t FiniteBuchi::edge_count() const
{
    std::size_t n = 0;
    for (auto& e : edges_)
        n += e.size();
    return n;
}

std::vector<StateId> FiniteBuchi::successors(StateId s, LetterId letter) const
{
    std::vector<StateId> out;
    const auto& es = edges_[s];
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(letter, StateId{0}));
    for (; it != es.end() && it->first == letter; ++it)
        out.push_back(it->second);
    return out;
}

LassoWord to_lasso(const FiniteBuchi& b, const LassoWitness& w)
{
    BarString spine, cycle;
    for (auto l : w.spine)
        spine.push_back(b.alphabet().at(l));
    for (auto l : w.cycle)
        cycle.push_back(b.alphabet().at(l));
    return {std::move(spine), std::move(cycle)};
}

LassoWitness to_witness(const FiniteBuchi& b, const LassoWord& w)
{
    auto convert = [&](const BarString& s) {
        std::vector<LetterId> out;
        for (auto& l : s) {
            auto id = b.letter_id(l);
            if (!id)
                throw Error("letter outside the automaton's alphabet");
            out.push_back(*id);
        }
        return out;
    };
    return {convert(w.spine()), convert(w.cycle())};
}

bool lasso_member(const FiniteBuchi& b, const LassoWitness& w)
{
    if (w.cycle.empty())
        throw Error("lasso cycle must not be empty");
    for (auto l : w.spine)
        if (l >= b.alphabet().size())
            throw Error("letter outside the automaton's alphabet");
    for (auto l : w.cycle)
        if (l >= b.alphabet().size())
            throw Error("letter outside the automaton's alphabet");
    if (b.size() == 0)
        return false;
    LassoWord shape = to_lasso(b, w);
    auto letter_at = [&](std::size_t pos) {
        return pos < w.spine.size() ? w.spine[pos] : w.cycle[(pos - w.spine.size()) % w.cycle.size()];
    };
    auto g = detail::build_lasso_product(
        shape, b.initial(),
        [&](StateId s, std::size_t pos) { return b.successors(s, letter_at(pos)); },
        [&](StateId s) { return b.is_final(s); });
    return detail::has_accepting_cycle(g);
}

bool lasso_member(const FiniteBuchi& b, const LassoWord& w)
{
    // A word using some other letter has no run at all.
    for (auto* part : {&w.spine(), &w.cycle()})
        for (auto& l : *part)
            if (!b.letter_id(l))
                return false;
    return lasso_member(b, to_witness(b, w));
}

namespace {

// Letters of a shortest path from `from` to `to` with at least one edge
// when `nonempty`; the target is known to be reachable.
std::vector<LetterId> shortest_path(const FiniteBuchi& b, StateId from, StateId to, bool nonempty)
{
    if (!nonempty && from == to)
        return {};
    constexpr auto none = static_cast<StateId>(-1);
    std::vector<std::pair<StateId, LetterId>> parent(b.size(), {none, 0});
    std::vector<bool> seen(b.size(), false);
    std::deque<StateId> queue{from};
    if (!nonempty)
        seen[from] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (auto [letter, t] : b.edges(s)) {
            if (seen[t])
                continue;
            seen[t] = true;
            parent[t] = {s, letter};
            if (t == to) {
                std::vector<LetterId> path;
                StateId cur = to;
                do {
                    path.push_back(parent[cur].second);
                    cur = parent[cur].first;
                } while (cur != from);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(t);
        }
    }
    throw Error("internal: path target unreachable");
}

} // namespace

EmptinessResult is_empty(const FiniteBuchi& b)
{
    EmptinessResult result;
    if (b.size() == 0)
        return result;
    struct Frame {
        StateId state;
        std::size_t next_edge;
        LetterId via;
    };
    std::vector<bool> outer_seen(b.size(), false), inner_seen(b.size(), false);
    std::vector<Frame> outer{{b.initial(), 0, 0}};
    outer_seen[b.initial()] = true;
    while (!outer.empty()) {
        Frame& f = outer.back();
        const auto& es = b.edges(f.state);
        if (f.next_edge < es.size()) {
            auto [letter, t] = es[f.next_edge++];
            if (!outer_seen[t]) {
                outer_seen[t] = true;
                outer.push_back({t, 0, letter});
            }
            continue;
        }
        StateId seed = f.state;
        if (b.is_final(seed)) {
            // Inner search for a cycle back to the seed; marks persist
            // across seeds.
            std::vector<Frame> inner{{seed, 0, 0}};
            while (!inner.empty()) {
                Frame& g = inner.back();
                const auto& ges = b.edges(g.state);
                if (g.next_edge == ges.size()) {
                    inner.pop_back();
                    continue;
                }
                auto [letter, t] = ges[g.next_edge++];
                if (t == seed) {
                    // The search stacks give some lasso; breadth-first
                    // paths through the same seed give a shortest one.
                    result.empty = false;
                    result.witness = LassoWitness{shortest_path(b, b.initial(), seed, false),
                                                  shortest_path(b, seed, seed, true)};
                    return result;
                }
                if (!inner_seen[t]) {
                    inner_seen[t] = true;
                    inner.push_back({t, 0, letter});
                }
            }
        }
        outer.pop_back();
    }
    return result;
}

namespace {

template <class Key>
class Explorer {
public:
    explicit Explorer(FiniteBuchi& out, std::size_t limit = 4'000'000) : out_(out), limit_(limit) {}

    // Returns the id of `key`, creating the state and queueing it if new.
    StateId id(const Key& key, bool final, std::string label = {})
    {
        auto it = ids_.find(key);
        if (it != ids_.end())
            return it->second;
        if (ids_.size() >= limit_)
            throw Error("state space exceeds " + std::to_string(limit_) + " states");
        StateId s = out_.add_state(final, std::move(label));
        ids_.emplace(key, s);
        queue_.push_back({s, key});
        return s;
    }

    bool pending() const { return !queue_.empty(); }
    std::pair<StateId, Key> pop()
    {
        auto front = std::move(queue_.front());
        queue_.pop_front();
        return front;
    }

private:
    FiniteBuchi& out_;
    std::size_t limit_;
    std::map<Key, StateId> ids_;
    std::deque<std::pair<StateId, Key>> queue_;
};

} // namespace

FiniteBuchi intersect(const FiniteBuchi& b1, const FiniteBuchi& b2)
{
    if (b1.alphabet() != b2.alphabet())
        throw Error("intersection needs identical alphabets");
    FiniteBuchi out(b1.alphabet());
    if (b1.size() == 0 || b2.size() == 0) {
        out.add_state();
        return out;
    }
    // Phase 0 waits for a final state of b1, phase 1 for one of b2.
    using Key = std::tuple<StateId, StateId, int>;
    Explorer<Key> ex(out);
    auto accepting = [&](const Key& k) { return std::get<2>(k) == 0 && b1.is_final(std::get<0>(k)); };
    Key init{b1.initial(), b2.initial(), 0};
    out.set_initial(ex.id(init, accepting(init)));
    while (ex.pending()) {
        auto [s, key] = ex.pop();
        auto [q1, q2, phase] = key;
        int next_phase = phase;
        if (phase == 0 && b1.is_final(q1))
            next_phase = 1;
        else if (phase == 1 && b2.is_final(q2))
            next_phase = 0;
        const auto& e1 = b1.edges(q1);
        const auto& e2 = b2.edges(q2);
        std::size_t j = 0;
        for (std::size_t i = 0; i < e1.size(); ++i) {
            while (j < e2.size() && e2[j].first < e1[i].first)
                ++j;
            for (std::size_t k = j; k < e2.size() && e2[k].first == e1[i].first; ++k) {
                Key t{e1[i].second, e2[k].second, next_phase};
                out.add_edge(s, e1[i].first, ex.id(t, accepting(t)));
            }
        }
    }
    return out;
}

FiniteBuchi complement(const FiniteBuchi& b)
{
    FiniteBuchi out(b.alphabet());
    int n = static_cast<int>(b.size());
    // ranks[q] == -1 means q is not currently reachable.
    using Key = std::pair<std::vector<int>, std::vector<bool>>;
    Explorer<Key> ex(out);
    if (n == 0) {
        StateId s = out.add_state(true);
        for (LetterId l = 0; l < b.alphabet().size(); ++l)
            out.add_edge(s, l, s);
        return out;
    }
    auto accepting = [](const Key& k) {
        return std::find(k.second.begin(), k.second.end(), true) == k.second.end();
    };
    Key init{std::vector<int>(n, -1), std::vector<bool>(n, false)};
    init.first[b.initial()] = 2 * n;
    out.set_initial(ex.id(init, accepting(init)));
    while (ex.pending()) {
        auto [s, key] = ex.pop();
        const auto& [f, obligations] = key;
        bool fresh_round = accepting(key);
        for (LetterId l = 0; l < b.alphabet().size(); ++l) {
            std::vector<int> bound(n, -1);
            std::vector<bool> from_obligation(n, false);
            for (int q = 0; q < n; ++q) {
                if (f[q] < 0)
                    continue;
                for (StateId t : b.successors(q, l)) {
                    bound[t] = bound[t] < 0 ? f[q] : std::min(bound[t], f[q]);
                    if (obligations[q])
                        from_obligation[t] = true;
                }
            }
            std::vector<int> targets;
            for (int q = 0; q < n; ++q)
                if (bound[q] >= 0)
                    targets.push_back(q);
            // Enumerate every ranking below the bound, even on final states.
            std::vector<int> g(n, -1);
            auto emit = [&](auto& self, std::size_t i) -> void {
                if (i == targets.size()) {
                    Key next{g, std::vector<bool>(n, false)};
                    for (int q : targets)
                        if (g[q] % 2 == 0 && (fresh_round || from_obligation[q]))
                            next.second[q] = true;
                    out.add_edge(s, l, ex.id(next, accepting(next)));
                    return;
                }
                int q = targets[i];
                for (int r = 0; r <= bound[q]; ++r) {
                    if (b.is_final(q) && r % 2 == 1)
                        continue;
                    g[q] = r;
                    self(self, i + 1);
                }
                g[q] = -1;
            };
            emit(emit, 0);
        }
    }
    return out;
}

namespace {

enum class SliceLabel : std::uint32_t { Unlabeled, Inf, Die, New };

// A slice: ordered disjoint sets with labels. Encoded flat as
// [phase, (label, size, members...)...] for use as a map key.
struct Slice {
    std::vector<std::vector<StateId>> sets;
    std::vector<SliceLabel> labels;
};

std::vector<std::uint32_t> encode(int phase, const Slice& s)
{
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(phase)};
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        key.push_back(static_cast<std::uint32_t>(s.labels[i]));
        key.push_back(static_cast<std::uint32_t>(s.sets[i].size()));
        for (StateId q : s.sets[i])
            key.push_back(static_cast<std::uint32_t>(q));
    }
    return key;
}

Slice decode(const std::vector<std::uint32_t>& key)
{
    Slice s;
    for (std::size_t i = 1; i < key.size();) {
        s.labels.push_back(static_cast<SliceLabel>(key[i]));
        std::size_t n = key[i + 1];
        s.sets.emplace_back(key.begin() + i + 2, key.begin() + i + 2 + n);
        i += 2 + n;
    }
    return s;
}

struct Child {
    std::vector<StateId> states;
    std::size_t parent;
    bool final_child;
};

// Next level of the reduced split tree: each set splits into its final
// successors (left) and the rest (right); a state stays only in the
// leftmost set that reaches it.
std::vector<Child> split(const FiniteBuchi& b, const Slice& s, LetterId l)
{
    std::vector<Child> out;
    std::vector<bool> taken(b.size(), false);
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        std::vector<StateId> fin, rest;
        for (StateId q : s.sets[i])
            for (StateId t : b.successors(q, l)) {
                if (taken[t])
                    continue;
                taken[t] = true;
                (b.is_final(t) ? fin : rest).push_back(t);
            }
        for (auto* part : {&fin, &rest}) {
            if (part->empty())
                continue;
            std::sort(part->begin(), part->end());
            out.push_back({std::move(*part), i, part == &fin});
        }
    }
    return out;
}

bool has_die(const Slice& s)
{
    return std::find(s.labels.begin(), s.labels.end(), SliceLabel::Die) != s.labels.end();
}

} // namespace

// Phase 1 follows the unlabeled reduced split tree deterministically and
// may jump to phase 2 by labelling every set "inf". In phase 2 a final
// child of an "inf" set must have a finite subtree: it is labelled "new",
// and "new" sets become "die" at the next step out of a state without
// "die". A phase-2 state is accepting when it holds no "die" set.
FiniteBuchi complement_slices(const FiniteBuchi& b)
{
    FiniteBuchi out(b.alphabet());
    if (b.size() == 0) {
        StateId s = out.add_state(true);
        for (LetterId l = 0; l < b.alphabet().size(); ++l)
            out.add_edge(s, l, s);
        return out;
    }
    using Key = std::vector<std::uint32_t>;
    Explorer<Key> ex(out);
    Slice init{{{b.initial()}}, {SliceLabel::Unlabeled}};
    out.set_initial(ex.id(encode(1, init), false));
    while (ex.pending()) {
        auto [s, key] = ex.pop();
        int phase = static_cast<int>(key[0]);
        Slice cur = decode(key);
        bool breakpoint = phase == 2 && !has_die(cur);
        for (LetterId l = 0; l < b.alphabet().size(); ++l) {
            auto children = split(b, cur, l);
            Slice next;
            for (auto& c : children)
                next.sets.push_back(c.states);
            if (phase == 1) {
                next.labels.assign(children.size(), SliceLabel::Unlabeled);
                out.add_edge(s, l, ex.id(encode(1, next), false));
                next.labels.assign(children.size(), SliceLabel::Inf);
                out.add_edge(s, l, ex.id(encode(2, next), true));
                continue;
            }
            for (auto& c : children) {
                SliceLabel parent = cur.labels[c.parent];
                SliceLabel label;
                if (parent == SliceLabel::Inf)
                    label = !c.final_child ? SliceLabel::Inf
                                           : (breakpoint ? SliceLabel::Die : SliceLabel::New);
                else if (parent == SliceLabel::Die)
                    label = SliceLabel::Die;
                else
                    label = breakpoint ? SliceLabel::Die : SliceLabel::New;
                next.labels.push_back(label);
            }
            out.add_edge(s, l, ex.id(encode(2, next), !has_die(next)));
        }
    }
    return out;
}

InclusionResult includes(const FiniteBuchi& b1, const FiniteBuchi& b2, Complementation how)
{
    if (b1.alphabet() != b2.alphabet())
        throw Error("inclusion needs identical alphabets");
    FiniteBuchi comp = how == Complementation::Slices ? complement_slices(b2) : complement(b2);
    FiniteBuchi product = intersect(b1, comp);
    auto e = is_empty(product);
    InclusionResult r;
    r.holds = e.empty;
    r.counterexample = e.witness;
    r.complement_states = comp.size();
    r.product_states = product.size();
    return r;
}

std::string format_fba(const FiniteBuchi& b, const NameTable& names)
{
    std::ostringstream os;
    os << "fba\n";
    os << "alphabet";
    for (auto& l : b.alphabet())
        os << ' ' << format_letter(l, names);
    os << '\n';
    for (StateId s = 0; s < b.size(); ++s) {
        os << "state " << s;
        if (b.is_final(s))
            os << " final";
        if (s == b.initial())
            os << " initial";
        if (!b.label(s).empty())
            os << "  # " << b.label(s);
        os << '\n';
    }
    for (StateId s = 0; s < b.size(); ++s)
        for (auto [l, t] : b.edges(s))
            os << "edge " << s << ' ' << format_letter(b.alphabet()[l], names) << ' ' << t << '\n';
    return os.str();
}

FiniteBuchi parse_fba(std::string_view text, NameTable& names)
{
    struct StateLine {
        std::string id;
        bool final;
        bool initial;
    };
    struct EdgeLine {
        std::string src, dst;
        Letter letter;
        std::size_t line, column;
    };
    std::vector<StateLine> states;
    std::vector<EdgeLine> edges;
    std::optional<std::vector<Letter>> alphabet;
    bool header = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::vector<std::pair<std::string, std::size_t>> tok;
        for (std::size_t i = 0; i < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            tok.emplace_back(raw.substr(start, i - start), start + 1);
        }
        if (tok.empty())
            continue;
        auto letter = [&](const std::pair<std::string, std::size_t>& t) {
            try {
                BarString w = parse_string(t.first, names);
                if (w.size() != 1)
                    throw Error("");
                return w[0];
            } catch (const Error&) {
                throw ParseError(lineno, t.second, "invalid letter '" + t.first + "'");
            }
        };
        const std::string& kw = tok[0].first;
        if (!header) {
            if (kw != "fba" || tok.size() != 1)
                throw ParseError(lineno, tok[0].second, "expected 'fba' header");
            header = true;
        } else if (kw == "alphabet") {
            if (alphabet)
                throw ParseError(lineno, tok[0].second, "duplicate alphabet line");
            alphabet.emplace();
            for (std::size_t i = 1; i < tok.size(); ++i)
                alphabet->push_back(letter(tok[i]));
        } else if (kw == "state") {
            if (tok.size() < 2)
                throw ParseError(lineno, tok[0].second, "state needs an id");
            StateLine st{tok[1].first, false, false};
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (tok[i].first == "final")
                    st.final = true;
                else if (tok[i].first == "initial")
                    st.initial = true;
                else
                    throw ParseError(lineno, tok[i].second, "unknown state flag '" + tok[i].first + "'");
            }
            for (auto& other : states)
                if (other.id == st.id)
                    throw ParseError(lineno, tok[1].second, "duplicate state '" + st.id + "'");
            states.push_back(st);
        } else if (kw == "edge") {
            if (tok.size() != 4)
                throw ParseError(lineno, tok[0].second, "edge needs: edge <src> <letter> <dst>");
            edges.push_back({tok[1].first, tok[3].first, letter(tok[2]), lineno, tok[1].second});
        } else {
            throw ParseError(lineno, tok[0].second, "unknown keyword '" + kw + "'");
        }
    }
    if (!header)
        throw ParseError(lineno + 1, 1, "missing 'fba' header");
    if (!alphabet) {
        alphabet.emplace();
        for (auto& e : edges)
            alphabet->push_back(e.letter);
    }
    FiniteBuchi b(*alphabet);
    std::map<std::string, StateId> ids;
    std::optional<StateId> initial;
    for (auto& st : states) {
        StateId s = b.add_state(st.final, st.id);
        ids[st.id] = s;
        if (st.initial) {
            if (initial)
                throw ParseError(lineno, 1, "more than one initial state");
            initial = s;
        }
    }
    if (!initial)
        throw ParseError(lineno, 1, "no initial state");
    b.set_initial(*initial);
    for (auto& e : edges) {
        auto src = ids.find(e.src), dst = ids.find(e.dst);
        if (src == ids.end() || dst == ids.end())
            throw ParseError(e.line, e.column, "edge refers to an undeclared state");
        auto l = b.letter_id(e.letter);
        if (!l)
            throw ParseError(e.line, e.column, "edge letter is not in the alphabet");
        b.add_edge(src->second, *l, dst->second);
    }
    return b;
}

} // namespace rnna
