#include "rnna/decision.hpp"
#include "rnna/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

// One spelling table for the whole interpreter, so names written the same
// way in different automata and words are the same name.
rnna::NameTable& table()
{
    static rnna::NameTable names;
    return names;
}

struct PyAutomaton {
    rnna::ParsedAutomaton parsed;

    const rnna::RegisterAutomaton& buchi() const
    {
        if (parsed.is_muller())
            throw rnna::Error("automaton has an accept section; call muller_to_buchi() first");
        rnna::require_valid(parsed.automaton);
        return parsed.automaton;
    }
};

struct PyVerdict {
    bool holds;
    std::optional<std::string> counterexample;
    std::string report;
    std::size_t left_states, right_states, complement_states, product_states;
};

PyVerdict wrap(const rnna::InclusionVerdict& v, const std::string& semantics)
{
    std::optional<std::string> cex;
    if (v.counterexample)
        cex = rnna::format_lasso(*v.counterexample, table());
    return {v.holds, cex, rnna::format_report(v, table(), semantics), v.left_states,
            v.right_states, v.complement_states, v.product_states};
}

rnna::LassoWord lasso(const std::string& text)
{
    return rnna::parse_lasso(text, table());
}

rnna::BarString word(const std::string& text)
{
    return rnna::parse_string(text, table());
}

std::vector<std::string> spell(const rnna::NameSet& s)
{
    std::vector<std::string> out;
    for (auto n : s)
        out.push_back(table().spell(n));
    return out;
}

} // namespace

PYBIND11_MODULE(_rnna, m)
{
    m.doc() = "Büchi register automata over bar strings";

    static py::exception<rnna::Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const rnna::Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<PyAutomaton>(m, "Automaton")
        .def_static("parse", [](const std::string& text) {
            return PyAutomaton{rnna::parse_automaton(text, table())};
        }, py::arg("text"))
        .def_static("from_file", [](const std::string& path) {
            return PyAutomaton{rnna::parse_automaton(rnna::read_file(path), table())};
        }, py::arg("path"))
        .def_property_readonly("is_muller", [](const PyAutomaton& a) { return a.parsed.is_muller(); })
        .def_property_readonly("control_count", [](const PyAutomaton& a) {
            return a.parsed.automaton.controls.size();
        })
        .def("degree", [](const PyAutomaton& a) { return rnna::degree(a.parsed.automaton); })
        .def("validate", [](const PyAutomaton& a) {
            auto diags = a.parsed.is_muller() ? rnna::validate(a.parsed.muller())
                                              : rnna::validate(a.parsed.automaton);
            std::vector<std::string> out;
            for (auto& d : diags)
                out.push_back(d.str());
            return out;
        })
        .def("accepts_literal", [](const PyAutomaton& a, const std::string& w) {
            return rnna::accepts_literal_lasso(a.buchi(), lasso(w));
        }, py::arg("word"))
        .def("bar_member", [](const PyAutomaton& a, const std::string& w) {
            return rnna::bar_member(a.buchi(), lasso(w));
        }, py::arg("word"))
        .def("data_member_local", [](const PyAutomaton& a, const std::string& w) {
            return rnna::data_member_local(a.buchi(), lasso(w));
        }, py::arg("word"))
        .def("data_member_global", [](const PyAutomaton& a, const std::string& w) {
            return rnna::data_member_global(a.buchi(), lasso(w));
        }, py::arg("word"))
        .def("muller_to_buchi", [](const PyAutomaton& a) {
            return PyAutomaton{{rnna::muller_to_buchi(a.parsed.muller()), std::nullopt}};
        })
        .def("emit_finite", [](const PyAutomaton& a, const std::string& semantics) {
            const auto& b = a.buchi();
            auto s = rnna::choose_name_set(b);
            if (semantics == "literal")
                return rnna::format_fba(rnna::restrict_literal(b, s, &table()), table());
            if (semantics == "bar")
                return rnna::format_fba(rnna::restrict_name_dropped(b, s, &table()), table());
            throw rnna::Error("semantics must be 'literal' or 'bar'");
        }, py::arg("semantics") = "literal")
        .def("to_text", [](const PyAutomaton& a) {
            return a.parsed.is_muller() ? rnna::format_automaton(a.parsed.muller(), table())
                                        : rnna::format_automaton(a.parsed.automaton, table());
        });

    py::class_<PyVerdict>(m, "Verdict")
        .def_readonly("holds", &PyVerdict::holds)
        .def_readonly("counterexample", &PyVerdict::counterexample)
        .def_readonly("report", &PyVerdict::report)
        .def_readonly("left_states", &PyVerdict::left_states)
        .def_readonly("right_states", &PyVerdict::right_states)
        .def_readonly("complement_states", &PyVerdict::complement_states)
        .def_readonly("product_states", &PyVerdict::product_states)
        .def("__bool__", [](const PyVerdict& v) { return v.holds; });

    m.def("bar_inclusion", [](const PyAutomaton& a, const PyAutomaton& b) {
        return wrap(rnna::bar_inclusion(a.buchi(), b.buchi()), "bar");
    });
    m.def("data_inclusion", [](const PyAutomaton& a, const PyAutomaton& b) {
        return wrap(rnna::data_inclusion(a.buchi(), b.buchi()), "data");
    });
    m.def("bar_equivalence", [](const PyAutomaton& a, const PyAutomaton& b) {
        return wrap(rnna::bar_equivalence(a.buchi(), b.buchi()), "bar equivalence");
    });

    m.def("alpha_equiv", [](const std::string& v, const std::string& w) {
        return rnna::alpha_equiv(word(v), word(w));
    });
    m.def("alpha_equiv_lasso", [](const std::string& v, const std::string& w) {
        return rnna::alpha_equiv(lasso(v), lasso(w));
    });
    m.def("free_names", [](const std::string& w) { return spell(rnna::free_names(word(w))); });
    m.def("is_clean", [](const std::string& w) { return rnna::is_clean(word(w)); });
    m.def("cleanify", [](const std::string& w) {
        return rnna::format_string(rnna::cleanify(word(w)), table());
    });
    m.def("ub", [](const std::string& w) { return rnna::format_string(rnna::ub(word(w)), table()); });
}
