#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rnna {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Names are plain ids; the universe is ordered by id and never runs out.
struct Name {
    std::uint32_t id = 0;
    auto operator<=>(const Name&) const = default;
};

using NameSet = std::set<Name>;

// Least name not in `used`.
Name least_fresh(const NameSet& used);
// The `count` least names not in `used`, ascending.
std::vector<Name> least_fresh(const NameSet& used, std::size_t count);

// Finite permutation, stored as its moved points only.
class Permutation {
public:
    Permutation() = default;
    static Permutation transposition(Name a, Name b);
    // Throws Error unless `pairs` is a bijection of its domain onto itself.
    static Permutation from_pairs(const std::vector<std::pair<Name, Name>>& pairs);

    Name operator()(Name n) const;
    // (p * q)(n) == p(q(n))
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const { return moved_.empty(); }
    const std::map<Name, Name>& moved() const { return moved_; }

    bool operator==(const Permutation&) const = default;

private:
    std::map<Name, Name> moved_;
};

enum class LetterKind : std::uint8_t { Plain, Bar };

struct Letter {
    Name name;
    LetterKind kind = LetterKind::Plain;

    static Letter plain(Name n) { return {n, LetterKind::Plain}; }
    static Letter bar(Name n) { return {n, LetterKind::Bar}; }
    bool is_bar() const { return kind == LetterKind::Bar; }

    auto operator<=>(const Letter&) const = default;
};

using BarString = std::vector<Letter>;

// u v v v ...; the cycle is never empty.
class LassoWord {
public:
    LassoWord(BarString spine, BarString cycle);

    const BarString& spine() const { return spine_; }
    const BarString& cycle() const { return cycle_; }
    std::size_t period_start() const { return spine_.size(); }
    std::size_t total() const { return spine_.size() + cycle_.size(); }
    const Letter& at(std::size_t i) const;
    // First n letters of the infinite word.
    BarString prefix(std::size_t n) const;
    // Position reached after position p (wraps into the cycle).
    std::size_t next(std::size_t p) const { return p + 1 < total() ? p + 1 : spine_.size(); }

    bool operator==(const LassoWord&) const = default;
    auto operator<=>(const LassoWord&) const = default;

private:
    BarString spine_;
    BarString cycle_;
};

Letter apply_perm(const Permutation& p, const Letter& l);
BarString apply_perm(const Permutation& p, const BarString& w);
LassoWord apply_perm(const Permutation& p, const LassoWord& w);

NameSet names_of(const BarString& w);
NameSet names_of(const LassoWord& w);
NameSet free_names(const BarString& w);
NameSet free_names(const LassoWord& w);

BarString ub(const BarString& w);
LassoWord ub(const LassoWord& w);

bool is_clean(const BarString& w);
bool is_clean(const LassoWord& w);

// Renames repeated binders left to right using names drawn from `pool`
// (skipping names that occur in w). Throws Error if the pool runs out.
BarString cleanify(const BarString& w, const std::vector<Name>& pool);
// Same, with the least names outside names(w) as the pool.
BarString cleanify(const BarString& w);

struct Scope {
    enum class Kind : std::uint8_t { Free, Bound, Binder };
    Kind kind = Kind::Binder;
    Name name;              // Free only
    std::size_t binder = 0; // Bound only: position of the binding bar

    static Scope free(Name n) { return {Kind::Free, n, 0}; }
    static Scope bound(std::size_t pos) { return {Kind::Bound, {}, pos}; }
    static Scope binding() { return {Kind::Binder, {}, 0}; }

    bool operator==(const Scope& o) const;
};

std::vector<Scope> annotate(const BarString& w);

bool alpha_equiv(const BarString& v, const BarString& w);
bool alpha_equiv(const LassoWord& v, const LassoWord& w);

// Same infinite word, with spine length `spine_len` >= current and cycle
// repeated `reps` times.
LassoWord reshape(const LassoWord& w, std::size_t spine_len, std::size_t reps);

// Shortest (spine, cycle) presentation of the same infinite word.
LassoWord normalize(const LassoWord& w);

// Spellings for names in text formats. Unknown ids print as n<id>,
// primed until they do not clash with an interned spelling.
class NameTable {
public:
    Name intern(std::string_view spelling);
    std::optional<Name> find(std::string_view spelling) const;
    std::string spell(Name n) const;
    bool known(Name n) const { return n.id < spellings_.size(); }
    std::size_t size() const { return spellings_.size(); }

private:
    std::vector<std::string> spellings_;
    std::unordered_map<std::string, Name> ids_;
};

bool valid_identifier(std::string_view s);

std::string format_letter(const Letter& l, const NameTable& names);
std::string format_string(const BarString& w, const NameTable& names);
// `u ; v`, with `_` for an empty spine.
std::string format_lasso(const LassoWord& w, const NameTable& names);

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

BarString parse_string(std::string_view text, NameTable& names);
LassoWord parse_lasso(std::string_view text, NameTable& names);

} // namespace rnna
