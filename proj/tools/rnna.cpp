// rnna: command-line driver for Büchi register automata over bar strings.
//
// Exit status: 0 when the property holds, 1 when it fails, 2 on usage,
// parse or validation errors.

#include "rnna/decision.hpp"
#include "rnna/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Loaded {
    std::string path;
    rnna::ParsedAutomaton parsed;
};

Loaded load(const std::string& path, rnna::NameTable& names)
{
    std::string text = rnna::read_file(path);
    try {
        return {path, rnna::parse_automaton(text, names)};
    } catch (const rnna::ParseError& e) {
        throw rnna::Error(path + ":" + e.what());
    }
}

// Commands other than validate/degree/muller2buchi take Büchi automata.
const rnna::RegisterAutomaton& buchi(const Loaded& l)
{
    if (l.parsed.is_muller())
        throw rnna::Error(l.path + ": has an accept section; convert it with muller2buchi first");
    rnna::require_valid(l.parsed.automaton);
    return l.parsed.automaton;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw rnna::Error("cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Büchi register automata over bar strings"};
    app.require_subcommand(1);

    std::string file, left, right, word, word_file, output;
    std::string semantics;

    auto* validate = app.add_subcommand("validate", "check the structural rules of an automaton");
    validate->add_option("file", file, "automaton file")->required();

    auto* degree = app.add_subcommand("degree", "print the maximum register count");
    degree->add_option("file", file, "automaton file")->required();

    auto* member = app.add_subcommand("member", "test a lasso word `u ; v`");
    member->add_option("--semantics", semantics, "literal | bar | data-local | data-global")
        ->required()
        ->check(CLI::IsMember({"literal", "bar", "data-local", "data-global"}));
    member->add_option("file", file, "automaton file")->required();
    auto* inline_word = member->add_option("word", word, "lasso word, e.g. \"|a b ; a\"");
    auto* file_word = member->add_option("--word-file", word_file, "read the word from a file");
    inline_word->excludes(file_word);

    auto* include = app.add_subcommand("include", "language inclusion of LEFT in RIGHT");
    include->add_option("--semantics", semantics, "bar | data")
        ->required()
        ->check(CLI::IsMember({"bar", "data"}));
    include->add_option("left", left, "automaton file")->required();
    include->add_option("right", right, "automaton file")->required();

    auto* equiv = app.add_subcommand("equiv", "bar language equivalence");
    equiv->add_option("left", left, "automaton file")->required();
    equiv->add_option("right", right, "automaton file")->required();

    auto* muller = app.add_subcommand("muller2buchi", "convert an automaton with an accept section");
    muller->add_option("file", file, "automaton file")->required();
    muller->add_option("-o,--output", output, "output file (default stdout)");

    auto* emit = app.add_subcommand("emit-finite", "write the finite Büchi restriction in fba format");
    emit->add_option("--semantics", semantics, "literal | bar")
        ->required()
        ->check(CLI::IsMember({"literal", "bar"}));
    emit->add_option("file", file, "automaton file")->required();
    emit->add_option("-o,--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    rnna::NameTable names;
    try {
        if (*validate) {
            auto l = load(file, names);
            auto diags = l.parsed.is_muller() ? rnna::validate(l.parsed.muller())
                                              : rnna::validate(l.parsed.automaton);
            for (auto& d : diags)
                std::cout << file << ": " << d.str() << '\n';
            if (!diags.empty())
                return kUsage;
            std::cout << "ok\n";
            return kHolds;
        }
        if (*degree) {
            auto l = load(file, names);
            rnna::require_valid(l.parsed.automaton);
            std::cout << rnna::degree(l.parsed.automaton) << '\n';
            return kHolds;
        }
        if (*member) {
            auto l = load(file, names);
            const auto& a = buchi(l);
            if (word_file.empty() && word.empty())
                throw rnna::Error("member needs a word or --word-file");
            std::string text = word_file.empty() ? word : rnna::read_file(word_file);
            rnna::LassoWord w = rnna::parse_lasso(text, names);
            bool accepted = false;
            if (semantics == "literal")
                accepted = rnna::accepts_literal_lasso(a, w);
            else if (semantics == "bar")
                accepted = rnna::bar_member(a, w);
            else if (semantics == "data-local")
                accepted = rnna::data_member_local(a, w);
            else
                accepted = rnna::data_member_global(a, w);
            std::cout << (accepted ? "accepted" : "rejected") << " (" << semantics << "): "
                      << rnna::format_lasso(w, names) << '\n';
            return accepted ? kHolds : kFails;
        }
        if (*include || *equiv) {
            auto la = load(left, names);
            auto lb = load(right, names);
            const auto& a = buchi(la);
            const auto& b = buchi(lb);
            rnna::InclusionVerdict v;
            if (*equiv) {
                semantics = "bar equivalence";
                v = rnna::bar_equivalence(a, b);
            } else if (semantics == "bar") {
                v = rnna::bar_inclusion(a, b);
            } else {
                v = rnna::data_inclusion(a, b);
            }
            std::cout << rnna::format_report(v, names, semantics);
            return v.holds ? kHolds : kFails;
        }
        if (*muller) {
            auto l = load(file, names);
            if (!l.parsed.is_muller())
                throw rnna::Error(file + ": no accept section to convert");
            auto converted = rnna::muller_to_buchi(l.parsed.muller());
            write_output(output, rnna::format_automaton(converted, names));
            return kHolds;
        }
        if (*emit) {
            auto l = load(file, names);
            const auto& a = buchi(l);
            auto s = rnna::choose_name_set(a);
            auto b = semantics == "literal" ? rnna::restrict_literal(a, s, &names)
                                            : rnna::restrict_name_dropped(a, s, &names);
            write_output(output, rnna::format_fba(b, names));
            return kHolds;
        }
    } catch (const rnna::Error& e) {
        std::cerr << "rnna: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
