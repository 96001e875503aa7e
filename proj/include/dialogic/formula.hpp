#pragma once

// Propositional formulas: atoms combined with ~, &, |, ->.
//
// Formulas are immutable trees shared through FormulaPtr.  Every node
// caches its canonical rendering, node count and hash at construction,
// so structural equality is a string compare and formulas are safe to
// share across threads.
//
// Concrete syntax (ASCII, whitespace insignificant):
//
//   formula := imp
//   imp     := or ("->" imp)?          right associative
//   or      := and ("|" and)*          left associative
//   and     := neg ("&" neg)*          left associative
//   neg     := "~" neg | atom | "(" formula ")"
//   atom    := [a-z][a-zA-Z0-9_]*
//
// The parser also accepts the Unicode aliases ¬ ∧ ∨ →.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dialogic {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Conn : std::uint8_t { Atom, Neg, And, Or, Imp };

// Atom names follow the grammar: [a-z][a-zA-Z0-9_]*.
struct Atom {
    std::string name;

    explicit Atom(std::string n);

    bool operator==(const Atom& o) const noexcept { return name == o.name; }
    bool operator<(const Atom& o) const noexcept { return name < o.name; }
};

class Formula {
public:
    static FormulaPtr atom(const std::string& name);
    static FormulaPtr atom(const Atom& a) { return atom(a.name); }
    static FormulaPtr neg(FormulaPtr a);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr imp(FormulaPtr a, FormulaPtr b);

    Conn kind() const noexcept { return kind_; }
    bool isAtomic() const noexcept { return kind_ == Conn::Atom; }

    // Atom name; only valid for atomic formulas.
    const std::string& atomName() const;

    // Subterms: left() is the sole child of a negation.
    const FormulaPtr& left() const;
    const FormulaPtr& right() const;

    // Node count (atoms and connectives each count 1).
    int size() const noexcept { return size_; }

    // Canonical minimal-parenthesis rendering.
    const std::string& text() const noexcept { return text_; }

    std::size_t hash() const noexcept { return hash_; }

    bool equals(const Formula& o) const noexcept {
        return hash_ == o.hash_ && text_ == o.text_;
    }

private:
    Formula(Conn k, std::string name, FormulaPtr l, FormulaPtr r);

    Conn kind_;
    std::string name_;  // atoms only
    FormulaPtr left_, right_;
    int size_ = 1;
    std::string text_;
    std::size_t hash_ = 0;
};

inline bool operator==(const Formula& a, const Formula& b) noexcept { return a.equals(b); }
inline bool operator!=(const Formula& a, const Formula& b) noexcept { return !a.equals(b); }

// Structural equality through pointers (null-safe).
bool sameFormula(const FormulaPtr& a, const FormulaPtr& b) noexcept;

inline std::string print(const FormulaPtr& f) { return f->text(); }

// Thrown on malformed input; offset is the byte position of the error.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Parses the grammar above; throws ParseError on malformed input.
FormulaPtr parse(std::string_view text);

// Uniformly replaces every occurrence of `target` in `f` by `replacement`.
FormulaPtr substitute(const FormulaPtr& f, const Atom& target, const FormulaPtr& replacement);

// Number of occurrences of `target` in `f`.
int occurrences(const FormulaPtr& f, const Atom& target);

// Distinct atoms of `f`, sorted by name.
std::vector<Atom> atomsOf(const FormulaPtr& f);

// Streams every formula of size <= maxSize over the given atoms exactly
// once, ordered by size and then lexicographically by canonical text.
// Single consumer; create one enumerator per worker.
class FormulaEnumerator {
public:
    FormulaEnumerator(int maxSize, std::vector<Atom> atoms);

    // Next formula, or nullptr when exhausted.
    FormulaPtr next();

private:
    void buildSizeClass(int n);

    int maxSize_;
    std::vector<Atom> atoms_;
    std::vector<std::vector<FormulaPtr>> bySize_;  // bySize_[n] = sorted size-(n+1) class
    int currentSize_ = 0;
    std::size_t cursor_ = 0;
};

// Convenience: the whole stream as a vector.
std::vector<FormulaPtr> enumerateFormulas(int maxSize, const std::vector<Atom>& atoms);

}  // namespace dialogic
