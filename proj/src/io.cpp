#include "rnna/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace rnna {

MullerRegisterAutomaton ParsedAutomaton::muller() const
{
    if (!acceptance_family)
        throw Error("automaton has no accept section");
    return {automaton, *acceptance_family};
}

namespace {

struct Tok {
    std::string text;
    std::size_t column;
};

bool control_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' ||
        c == '-';
}

class LineParser {
public:
    LineParser(std::size_t line, const std::string& text) : line_(line)
    {
        for (std::size_t i = 0; i < text.size();) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            toks_.push_back({text.substr(start, i - start), start + 1});
        }
    }

    bool done() const { return pos_ == toks_.size(); }
    const Tok& peek() const { return toks_[pos_]; }
    std::size_t column() const { return done() ? (toks_.empty() ? 1 : toks_.back().column + toks_.back().text.size()) : peek().column; }

    [[noreturn]] void fail(const std::string& what, std::size_t column = 0) const
    {
        throw ParseError(line_, column ? column : this->column(), what);
    }

    const Tok& next(const std::string& expected)
    {
        if (done())
            fail("expected " + expected);
        return toks_[pos_++];
    }

    void expect(const std::string& word)
    {
        const Tok& t = next("'" + word + "'");
        if (t.text != word)
            fail("expected '" + word + "', found '" + t.text + "'", t.column);
    }

    std::string control_id()
    {
        const Tok& t = next("a control id");
        for (char c : t.text)
            if (!control_char(c))
                fail("invalid control id '" + t.text + "'", t.column);
        return t.text;
    }

    std::size_t number(std::string_view text, std::size_t column) const
    {
        if (text.empty() || text.size() > 9)
            fail("expected a number", column);
        std::size_t n = 0;
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("expected a number, found '" + std::string(text) + "'", column);
            n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        return n;
    }

    Reg reg(std::string_view text, std::size_t column) const
    {
        Reg r = number(text, column);
        if (r == 0)
            fail("registers are numbered from 1", column);
        return r;
    }

    // key=<value>
    std::optional<std::string> keyed(const std::string& key)
    {
        if (done() || peek().text.rfind(key + "=", 0) != 0)
            return std::nullopt;
        return toks_[pos_++].text.substr(key.size() + 1);
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

std::vector<CopyPair> parse_copy(LineParser& p)
{
    std::string joined;
    std::size_t column = p.column();
    while (!p.done() && p.peek().text.rfind("store=", 0) != 0)
        joined += p.next("copy map").text;
    std::vector<CopyPair> out;
    if (joined.empty() || joined == "-")
        return out;
    std::size_t start = 0;
    while (start <= joined.size()) {
        std::size_t comma = joined.find(',', start);
        std::string item = joined.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto colon = item.find(':');
        if (colon == std::string::npos)
            p.fail("copy entries are written target:source, found '" + item + "'", column);
        out.push_back({p.reg(item.substr(0, colon), column), p.reg(item.substr(colon + 1), column)});
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::vector<std::string>> parse_accept(LineParser& p)
{
    // Re-tokenise the rest of the line at brace/comma granularity.
    std::string rest;
    std::size_t column = p.column();
    while (!p.done())
        rest += " " + p.next("").text;
    std::vector<std::vector<std::string>> family;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i])))
            ++i;
    };
    auto want = [&](char c) {
        skip();
        if (i >= rest.size() || rest[i] != c)
            p.fail(std::string("expected '") + c + "' in accept section", column);
        ++i;
    };
    want('{');
    for (;;) {
        skip();
        if (i < rest.size() && rest[i] == '}') {
            ++i;
            break;
        }
        want('{');
        std::vector<std::string> member;
        skip();
        if (i < rest.size() && rest[i] == '}') {
            ++i;
            family.push_back(member);
            continue;
        }
        for (;;) {
            skip();
            std::size_t start = i;
            while (i < rest.size() && control_char(rest[i]))
                ++i;
            if (start == i)
                p.fail("expected a control id in accept section", column);
            member.push_back(rest.substr(start, i - start));
            skip();
            if (i < rest.size() && rest[i] == ',') {
                ++i;
                continue;
            }
            want('}');
            break;
        }
        family.push_back(member);
    }
    skip();
    if (i != rest.size())
        p.fail("trailing text after accept section", column);
    return family;
}

} // namespace

ParsedAutomaton parse_automaton(std::string_view text, NameTable& names)
{
    ParsedAutomaton out;
    RegisterAutomaton& a = out.automaton;
    struct PendingTransition {
        std::string src, dst;
        SymbolicTransition t;
        std::size_t src_col, dst_col;
    };
    std::vector<PendingTransition> pending;
    struct PendingInitial {
        std::string control;
        std::map<Reg, Name> regs;
        std::size_t line, column;
    };
    std::optional<PendingInitial> initial;
    struct PendingAccept {
        std::vector<std::vector<std::string>> family;
        std::size_t line;
    };
    std::optional<PendingAccept> accept;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        LineParser p(lineno, raw);
        if (p.done())
            continue;
        const Tok kw = p.next("keyword");
        if (kw.text == "control") {
            std::string id = p.control_id();
            if (a.find_control(id))
                p.fail("duplicate control '" + id + "'", kw.column);
            auto regs = p.keyed("regs");
            if (!regs)
                p.fail("expected regs=<n>");
            ControlState c{id, p.number(*regs, kw.column), false};
            if (!p.done()) {
                const Tok& f = p.next("");
                if (f.text != "final")
                    p.fail("unexpected '" + f.text + "'", f.column);
                c.final = true;
            }
            a.controls.push_back(std::move(c));
        } else if (kw.text == "initial") {
            if (initial)
                p.fail("duplicate initial line", kw.column);
            std::size_t col = p.column();
            initial = PendingInitial{p.control_id(), {}, lineno, col};
            while (!p.done()) {
                const Tok& t = p.next("");
                auto eq = t.text.find('=');
                if (eq == std::string::npos)
                    p.fail("initial registers are written <reg>=<name>", t.column);
                Reg r = p.reg(t.text.substr(0, eq), t.column);
                std::string name = t.text.substr(eq + 1);
                if (!valid_identifier(name))
                    p.fail("invalid name '" + name + "'", t.column);
                if (!initial->regs.emplace(r, names.intern(name)).second)
                    p.fail("register " + std::to_string(r) + " assigned twice", t.column);
            }
        } else if (kw.text == "read" || kw.text == "bar") {
            PendingTransition pt;
            pt.t.line = lineno;
            pt.src_col = p.column();
            pt.src = p.control_id();
            if (kw.text == "read") {
                std::size_t col = p.column();
                auto r = p.keyed("reg");
                if (!r)
                    p.fail("expected reg=<x>");
                pt.t.kind = TransitionKind::Read;
                pt.t.reg = p.reg(*r, col);
            }
            p.expect("->");
            pt.dst_col = p.column();
            pt.dst = p.control_id();
            p.expect("copy");
            pt.t.copy = parse_copy(p);
            if (kw.text == "bar") {
                std::size_t col = p.column();
                if (auto store = p.keyed("store")) {
                    pt.t.kind = TransitionKind::BarStore;
                    pt.t.reg = p.reg(*store, col);
                } else {
                    pt.t.kind = TransitionKind::BarFresh;
                }
            }
            if (!p.done())
                p.fail("unexpected '" + p.peek().text + "'");
            pending.push_back(std::move(pt));
        } else if (kw.text == "accept") {
            if (accept)
                p.fail("duplicate accept section", kw.column);
            accept = PendingAccept{parse_accept(p), lineno};
        } else {
            p.fail("unknown keyword '" + kw.text + "'", kw.column);
        }
    }

    if (a.controls.empty())
        throw ParseError(lineno + 1, 1, "no control states declared");
    if (!initial)
        throw ParseError(lineno + 1, 1, "missing initial line");
    auto ic = a.find_control(initial->control);
    if (!ic)
        throw ParseError(initial->line, initial->column, "unknown control '" + initial->control + "'");
    a.initial_control = *ic;
    std::size_t expected = 1;
    for (auto& [r, n] : initial->regs) {
        if (r != expected++ || r > a.controls[*ic].register_count)
            throw ParseError(initial->line, initial->column,
                             "initial line must assign exactly registers 1.." +
                                 std::to_string(a.controls[*ic].register_count));
        a.initial_assignment.push_back(n);
    }
    if (a.initial_assignment.size() != a.controls[*ic].register_count)
        throw ParseError(initial->line, initial->column,
                         "initial line must assign exactly registers 1.." +
                             std::to_string(a.controls[*ic].register_count));
    for (auto& pt : pending) {
        auto s = a.find_control(pt.src);
        if (!s)
            throw ParseError(pt.t.line, pt.src_col, "unknown control '" + pt.src + "'");
        auto d = a.find_control(pt.dst);
        if (!d)
            throw ParseError(pt.t.line, pt.dst_col, "unknown control '" + pt.dst + "'");
        pt.t.src = *s;
        pt.t.dst = *d;
        a.transitions.push_back(std::move(pt.t));
    }
    if (accept) {
        out.acceptance_family.emplace();
        for (auto& member : accept->family) {
            std::vector<ControlId> ids;
            for (auto& label : member) {
                auto c = a.find_control(label);
                if (!c)
                    throw ParseError(accept->line, 1, "unknown control '" + label + "' in accept section");
                ids.push_back(*c);
            }
            out.acceptance_family->push_back(std::move(ids));
        }
    }
    return out;
}

namespace {

void format_body(std::ostringstream& os, const RegisterAutomaton& a, const NameTable& names,
                 bool flags)
{
    for (auto& c : a.controls) {
        os << "control " << c.label << " regs=" << c.register_count;
        if (flags && c.final)
            os << " final";
        os << '\n';
    }
    os << "initial " << a.controls.at(a.initial_control).label;
    for (std::size_t i = 0; i < a.initial_assignment.size(); ++i)
        os << ' ' << i + 1 << '=' << names.spell(a.initial_assignment[i]);
    os << '\n';
    for (auto& t : a.transitions) {
        if (t.kind == TransitionKind::Read)
            os << "read " << a.controls[t.src].label << " reg=" << t.reg;
        else
            os << "bar " << a.controls[t.src].label;
        os << " -> " << a.controls[t.dst].label << " copy";
        std::string map;
        for (auto& c : t.copy)
            map += (map.empty() ? "" : ",") + std::to_string(c.dst) + ":" + std::to_string(c.src);
        os << ' ' << (map.empty() ? "-" : map);
        if (t.kind == TransitionKind::BarStore)
            os << " store=" << t.reg;
        os << '\n';
    }
}

} // namespace

std::string format_automaton(const RegisterAutomaton& a, const NameTable& names)
{
    std::ostringstream os;
    format_body(os, a, names, true);
    return os.str();
}

std::string format_automaton(const MullerRegisterAutomaton& m, const NameTable& names)
{
    std::ostringstream os;
    format_body(os, m.automaton, names, false);
    os << "accept {";
    for (auto& member : m.acceptance_family) {
        os << " {";
        for (std::size_t i = 0; i < member.size(); ++i)
            os << (i ? "," : "") << m.automaton.controls.at(member[i]).label;
        os << '}';
    }
    os << " }\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace rnna
