#include "rnna/nominal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rnna {

Name least_fresh(const NameSet& used)
{
    std::uint32_t id = 0;
    for (Name n : used) {
        if (n.id != id)
            break;
        ++id;
    }
    return Name{id};
}

std::vector<Name> least_fresh(const NameSet& used, std::size_t count)
{
    std::vector<Name> out;
    for (std::uint32_t id = 0; out.size() < count; ++id)
        if (!used.count(Name{id}))
            out.push_back(Name{id});
    return out;
}

Permutation Permutation::transposition(Name a, Name b)
{
    Permutation p;
    if (a != b) {
        p.moved_[a] = b;
        p.moved_[b] = a;
    }
    return p;
}

Permutation Permutation::from_pairs(const std::vector<std::pair<Name, Name>>& pairs)
{
    Permutation p;
    NameSet image;
    for (auto [from, to] : pairs) {
        auto [it, inserted] = p.moved_.emplace(from, to);
        if (!inserted && it->second != to)
            throw Error("permutation maps a name twice");
        image.insert(to);
    }
    NameSet domain;
    for (auto& [from, to] : p.moved_)
        domain.insert(from);
    if (domain != image || image.size() != p.moved_.size())
        throw Error("permutation is not a bijection on its domain");
    std::erase_if(p.moved_, [](const auto& kv) { return kv.first == kv.second; });
    return p;
}

Name Permutation::operator()(Name n) const
{
    auto it = moved_.find(n);
    return it == moved_.end() ? n : it->second;
}

Permutation Permutation::operator*(const Permutation& q) const
{
    Permutation r;
    for (auto& [n, _] : q.moved_)
        r.moved_[n] = (*this)(q(n));
    for (auto& [n, _] : moved_)
        if (!q.moved_.count(n))
            r.moved_[n] = (*this)(n);
    std::erase_if(r.moved_, [](const auto& kv) { return kv.first == kv.second; });
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    for (auto& [from, to] : moved_)
        r.moved_[to] = from;
    return r;
}

LassoWord::LassoWord(BarString spine, BarString cycle)
    : spine_(std::move(spine)), cycle_(std::move(cycle))
{
    if (cycle_.empty())
        throw Error("lasso cycle must not be empty");
}

const Letter& LassoWord::at(std::size_t i) const
{
    if (i < spine_.size())
        return spine_[i];
    return cycle_[(i - spine_.size()) % cycle_.size()];
}

BarString LassoWord::prefix(std::size_t n) const
{
    BarString out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(at(i));
    return out;
}

Letter apply_perm(const Permutation& p, const Letter& l)
{
    return {p(l.name), l.kind};
}

BarString apply_perm(const Permutation& p, const BarString& w)
{
    BarString out;
    out.reserve(w.size());
    for (auto& l : w)
        out.push_back(apply_perm(p, l));
    return out;
}

LassoWord apply_perm(const Permutation& p, const LassoWord& w)
{
    return {apply_perm(p, w.spine()), apply_perm(p, w.cycle())};
}

NameSet names_of(const BarString& w)
{
    NameSet out;
    for (auto& l : w)
        out.insert(l.name);
    return out;
}

NameSet names_of(const LassoWord& w)
{
    NameSet out = names_of(w.spine());
    for (auto& l : w.cycle())
        out.insert(l.name);
    return out;
}

NameSet free_names(const BarString& w)
{
    NameSet seen, out;
    for (auto& l : w) {
        if (seen.insert(l.name).second && !l.is_bar())
            out.insert(l.name);
    }
    return out;
}

// Every first occurrence lies within spine + one cycle.
NameSet free_names(const LassoWord& w)
{
    return free_names(w.prefix(w.total()));
}

BarString ub(const BarString& w)
{
    BarString out;
    out.reserve(w.size());
    for (auto& l : w)
        out.push_back(Letter::plain(l.name));
    return out;
}

LassoWord ub(const LassoWord& w)
{
    return {ub(w.spine()), ub(w.cycle())};
}

bool is_clean(const BarString& w)
{
    NameSet seen;
    for (auto& l : w)
        if (!seen.insert(l.name).second && l.is_bar())
            return false;
    return true;
}

bool is_clean(const LassoWord& w)
{
    for (auto& l : w.cycle())
        if (l.is_bar())
            return false;
    return is_clean(w.prefix(w.total()));
}

BarString cleanify(const BarString& w, const std::vector<Name>& pool)
{
    BarString out = w;
    NameSet present = names_of(w);
    NameSet seen;
    std::size_t next = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Name a = out[i].name;
        if (seen.insert(a).second || !out[i].is_bar())
            continue;
        while (next < pool.size() && present.count(pool[next]))
            ++next;
        if (next == pool.size())
            throw Error("fresh-name pool exhausted");
        Name b = pool[next++];
        present.insert(b);
        seen.insert(b);
        auto swap = Permutation::transposition(a, b);
        for (std::size_t j = i; j < out.size(); ++j)
            out[j] = apply_perm(swap, out[j]);
    }
    return out;
}

BarString cleanify(const BarString& w)
{
    std::size_t bars = 0;
    for (auto& l : w)
        bars += l.is_bar();
    return cleanify(w, least_fresh(names_of(w), bars));
}

bool Scope::operator==(const Scope& o) const
{
    if (kind != o.kind)
        return false;
    switch (kind) {
    case Kind::Free: return name == o.name;
    case Kind::Bound: return binder == o.binder;
    case Kind::Binder: return true;
    }
    return false;
}

std::vector<Scope> annotate(const BarString& w)
{
    std::map<Name, std::size_t> binder;
    std::vector<Scope> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_bar()) {
            binder[w[i].name] = i;
            out.push_back(Scope::binding());
        } else if (auto it = binder.find(w[i].name); it != binder.end()) {
            out.push_back(Scope::bound(it->second));
        } else {
            out.push_back(Scope::free(w[i].name));
        }
    }
    return out;
}

bool alpha_equiv(const BarString& v, const BarString& w)
{
    return v.size() == w.size() && annotate(v) == annotate(w);
}

// With common spine length P and period Q, a plain letter at position
// i >= P+Q whose binder lies in the cycle region refers Q positions past
// the binder of position i-Q, and any other reference or free status
// repeats unchanged. So agreement on the first P+2Q positions propagates
// to the whole infinite annotation.
bool alpha_equiv(const LassoWord& v, const LassoWord& w)
{
    std::size_t p = std::max(v.spine().size(), w.spine().size());
    std::size_t q = std::lcm(v.cycle().size(), w.cycle().size());
    return alpha_equiv(v.prefix(p + 2 * q), w.prefix(p + 2 * q));
}

LassoWord reshape(const LassoWord& w, std::size_t spine_len, std::size_t reps)
{
    if (spine_len < w.spine().size() || reps == 0)
        throw Error("reshape cannot shorten a lasso");
    BarString spine = w.prefix(spine_len);
    BarString cycle;
    for (std::size_t i = 0; i < reps * w.cycle().size(); ++i)
        cycle.push_back(w.at(spine_len + i));
    return {std::move(spine), std::move(cycle)};
}

LassoWord normalize(const LassoWord& w)
{
    BarString spine = w.spine();
    BarString cycle = w.cycle();
    std::size_t n = cycle.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i)
            periodic = cycle[i] == cycle[i - d];
        if (periodic) {
            cycle.resize(d);
            break;
        }
    }
    while (!spine.empty() && spine.back() == cycle.back()) {
        std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
        spine.pop_back();
    }
    return {std::move(spine), std::move(cycle)};
}

Name NameTable::intern(std::string_view spelling)
{
    std::string s(spelling);
    if (auto it = ids_.find(s); it != ids_.end())
        return it->second;
    Name n{static_cast<std::uint32_t>(spellings_.size())};
    spellings_.push_back(s);
    ids_.emplace(std::move(s), n);
    return n;
}

std::optional<Name> NameTable::find(std::string_view spelling) const
{
    auto it = ids_.find(std::string(spelling));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

std::string NameTable::spell(Name n) const
{
    if (known(n))
        return spellings_[n.id];
    std::string s = "n" + std::to_string(n.id);
    while (ids_.count(s))
        s += '\'';
    return s;
}

bool valid_identifier(std::string_view s)
{
    if (s.empty() || s == "_")
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
            return false;
    return s.front() != '\'';
}

std::string format_letter(const Letter& l, const NameTable& names)
{
    return (l.is_bar() ? "|" : "") + names.spell(l.name);
}

std::string format_string(const BarString& w, const NameTable& names)
{
    std::string out;
    for (auto& l : w) {
        if (!out.empty())
            out += ' ';
        out += format_letter(l, names);
    }
    return out;
}

std::string format_lasso(const LassoWord& w, const NameTable& names)
{
    std::string spine = w.spine().empty() ? "_" : format_string(w.spine(), names);
    return spine + " ; " + format_string(w.cycle(), names);
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> word_tokens(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (text[i] == ';') {
            ++i;
        } else {
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
                   text[i] != ';')
                ++i;
        }
        out.push_back({std::string(text.substr(start, i - start)), start + 1});
    }
    return out;
}

Letter letter_from(const Token& t, NameTable& names)
{
    std::string_view s = t.text;
    bool bar = !s.empty() && s.front() == '|';
    if (bar)
        s.remove_prefix(1);
    if (!valid_identifier(s))
        throw ParseError(1, t.column, "invalid letter '" + t.text + "'");
    Name n = names.intern(s);
    return bar ? Letter::bar(n) : Letter::plain(n);
}

} // namespace

BarString parse_string(std::string_view text, NameTable& names)
{
    BarString out;
    for (auto& t : word_tokens(text)) {
        if (t.text == ";")
            throw ParseError(1, t.column, "unexpected ';' in a finite word");
        if (t.text == "_")
            continue;
        out.push_back(letter_from(t, names));
    }
    return out;
}

LassoWord parse_lasso(std::string_view text, NameTable& names)
{
    auto tokens = word_tokens(text);
    BarString spine, cycle;
    bool in_cycle = false;
    bool spine_placeholder = false;
    for (auto& t : tokens) {
        if (t.text == ";") {
            if (in_cycle)
                throw ParseError(1, t.column, "more than one ';' in a lasso");
            in_cycle = true;
            continue;
        }
        if (t.text == "_") {
            if (in_cycle || !spine.empty() || spine_placeholder)
                throw ParseError(1, t.column, "'_' only denotes an empty spine");
            spine_placeholder = true;
            continue;
        }
        if (spine_placeholder && !in_cycle)
            throw ParseError(1, t.column, "'_' only denotes an empty spine");
        (in_cycle ? cycle : spine).push_back(letter_from(t, names));
    }
    if (!in_cycle)
        throw ParseError(1, text.size() + 1, "lasso needs 'spine ; cycle'");
    if (cycle.empty())
        throw ParseError(1, text.size() + 1, "lasso cycle must not be empty");
    return {std::move(spine), std::move(cycle)};
}

} // namespace rnna
