#include "dialogic/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace dialogic {

namespace {

bool isAtomStart(char c) { return c >= 'a' && c <= 'z'; }
bool isAtomChar(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

int precedenceOf(Conn k) {
    switch (k) {
        case Conn::Imp: return 1;
        case Conn::Or: return 2;
        case Conn::And: return 3;
        case Conn::Neg: return 4;
        case Conn::Atom: return 5;
    }
    return 5;
}

// Renders with minimal parentheses.  `minPrec` is the lowest precedence
// printable without parens in the current context.
void render(const Formula& f, int minPrec, std::string& out) {
    const int prec = precedenceOf(f.kind());
    const bool parens = prec < minPrec;
    if (parens) out += '(';
    switch (f.kind()) {
        case Conn::Atom:
            out += f.atomName();
            break;
        case Conn::Neg:
            out += '~';
            render(*f.left(), 4, out);
            break;
        case Conn::And:
            render(*f.left(), 3, out);
            out += " & ";
            render(*f.right(), 4, out);
            break;
        case Conn::Or:
            render(*f.left(), 2, out);
            out += " | ";
            render(*f.right(), 3, out);
            break;
        case Conn::Imp:
            render(*f.left(), 2, out);
            out += " -> ";
            render(*f.right(), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Atom::Atom(std::string n) : name(std::move(n)) {
    if (name.empty() || !isAtomStart(name[0]))
        throw std::invalid_argument("bad atom name: '" + name + "'");
    for (char c : name)
        if (!isAtomChar(c)) throw std::invalid_argument("bad atom name: '" + name + "'");
}

Formula::Formula(Conn k, std::string name, FormulaPtr l, FormulaPtr r)
    : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {
    if (left_) size_ += left_->size();
    if (right_) size_ += right_->size();
    render(*this, 1, text_);
    hash_ = std::hash<std::string>{}(text_);
}

FormulaPtr Formula::atom(const std::string& name) {
    Atom checked(name);  // validates the grammar pattern
    return FormulaPtr(new Formula(Conn::Atom, checked.name, nullptr, nullptr));
}

FormulaPtr Formula::neg(FormulaPtr a) {
    assert(a);
    return FormulaPtr(new Formula(Conn::Neg, {}, std::move(a), nullptr));
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
    assert(a && b);
    return FormulaPtr(new Formula(Conn::And, {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
    assert(a && b);
    return FormulaPtr(new Formula(Conn::Or, {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::imp(FormulaPtr a, FormulaPtr b) {
    assert(a && b);
    return FormulaPtr(new Formula(Conn::Imp, {}, std::move(a), std::move(b)));
}

const std::string& Formula::atomName() const {
    if (kind_ != Conn::Atom) throw std::logic_error("atomName() on non-atomic formula");
    return name_;
}

const FormulaPtr& Formula::left() const {
    if (!left_) throw std::logic_error("left() on atomic formula");
    return left_;
}

const FormulaPtr& Formula::right() const {
    if (!right_) throw std::logic_error("right() on formula without right subterm");
    return right_;
}

bool sameFormula(const FormulaPtr& a, const FormulaPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->equals(*b);
}

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr run() {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError("empty input", 0);
        FormulaPtr f = parseImp();
        skipSpace();
        if (pos_ < text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    // Multi-byte operator aliases: ¬ (C2 AC), ∧ (E2 88 A7), ∨ (E2 88 A8),
    // → (E2 86 92).  eat() consumes a literal byte sequence.
    bool eat(std::string_view tok) {
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void skipSpace() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    FormulaPtr parseImp() {
        FormulaPtr lhs = parseOr();
        skipSpace();
        if (eat("->") || eat("\xE2\x86\x92"))
            return Formula::imp(std::move(lhs), parseImp());
        return lhs;
    }

    FormulaPtr parseOr() {
        FormulaPtr f = parseAnd();
        for (;;) {
            skipSpace();
            // '|' must not be the first byte of '->'; no ambiguity there.
            if (eat("|") || eat("\xE2\x88\xA8"))
                f = Formula::disj(std::move(f), parseAnd());
            else
                return f;
        }
    }

    FormulaPtr parseAnd() {
        FormulaPtr f = parseNeg();
        for (;;) {
            skipSpace();
            if (eat("&") || eat("\xE2\x88\xA7"))
                f = Formula::conj(std::move(f), parseNeg());
            else
                return f;
        }
    }

    FormulaPtr parseNeg() {
        skipSpace();
        if (eat("~") || eat("\xC2\xAC")) return Formula::neg(parseNeg());
        if (eat("(")) {
            FormulaPtr f = parseImp();
            skipSpace();
            if (!eat(")")) throw ParseError("expected ')'", pos_);
            return f;
        }
        return parseAtom();
    }

    FormulaPtr parseAtom() {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError("expected formula", pos_);
        if (!isAtomStart(text_[pos_]))
            throw ParseError(std::string("expected atom, '~' or '(' but found '") +
                                 text_[pos_] + "'",
                             pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && isAtomChar(text_[pos_])) ++pos_;
        return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).run(); }

// ── Substitution ────────────────────────────────────────────────────────────

FormulaPtr substitute(const FormulaPtr& f, const Atom& target, const FormulaPtr& replacement) {
    switch (f->kind()) {
        case Conn::Atom:
            return f->atomName() == target.name ? replacement : f;
        case Conn::Neg:
            return Formula::neg(substitute(f->left(), target, replacement));
        case Conn::And:
            return Formula::conj(substitute(f->left(), target, replacement),
                                 substitute(f->right(), target, replacement));
        case Conn::Or:
            return Formula::disj(substitute(f->left(), target, replacement),
                                 substitute(f->right(), target, replacement));
        case Conn::Imp:
            return Formula::imp(substitute(f->left(), target, replacement),
                                substitute(f->right(), target, replacement));
    }
    throw std::logic_error("unreachable");
}

int occurrences(const FormulaPtr& f, const Atom& target) {
    switch (f->kind()) {
        case Conn::Atom:
            return f->atomName() == target.name ? 1 : 0;
        case Conn::Neg:
            return occurrences(f->left(), target);
        default:
            return occurrences(f->left(), target) + occurrences(f->right(), target);
    }
}

namespace {
void collectAtoms(const FormulaPtr& f, std::map<std::string, bool>& seen) {
    if (f->kind() == Conn::Atom) {
        seen[f->atomName()] = true;
        return;
    }
    collectAtoms(f->left(), seen);
    if (f->kind() != Conn::Neg) collectAtoms(f->right(), seen);
}
}  // namespace

std::vector<Atom> atomsOf(const FormulaPtr& f) {
    std::map<std::string, bool> seen;
    collectAtoms(f, seen);
    std::vector<Atom> out;
    out.reserve(seen.size());
    for (const auto& [name, _] : seen) out.emplace_back(name);
    return out;
}

// ── Enumeration ─────────────────────────────────────────────────────────────

FormulaEnumerator::FormulaEnumerator(int maxSize, std::vector<Atom> atoms)
    : maxSize_(maxSize), atoms_(std::move(atoms)) {
    if (maxSize_ < 1) throw std::invalid_argument("maxSize must be >= 1");
    if (atoms_.empty()) throw std::invalid_argument("atom list must be nonempty");
    bySize_.resize(static_cast<std::size_t>(maxSize_));
}

void FormulaEnumerator::buildSizeClass(int n) {
    auto& out = bySize_[static_cast<std::size_t>(n - 1)];
    if (n == 1) {
        for (const Atom& a : atoms_) out.push_back(Formula::atom(a));
    } else {
        for (const FormulaPtr& f : bySize_[static_cast<std::size_t>(n - 2)])
            out.push_back(Formula::neg(f));
        for (int i = 1; i <= n - 2; ++i) {
            const auto& ls = bySize_[static_cast<std::size_t>(i - 1)];
            const auto& rs = bySize_[static_cast<std::size_t>(n - i - 2)];
            for (const FormulaPtr& l : ls)
                for (const FormulaPtr& r : rs) {
                    out.push_back(Formula::conj(l, r));
                    out.push_back(Formula::disj(l, r));
                    out.push_back(Formula::imp(l, r));
                }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FormulaPtr& a, const FormulaPtr& b) { return a->text() < b->text(); });
}

FormulaPtr FormulaEnumerator::next() {
    for (;;) {
        if (currentSize_ == 0 || cursor_ >= bySize_[static_cast<std::size_t>(currentSize_ - 1)].size()) {
            if (currentSize_ >= maxSize_) return nullptr;
            ++currentSize_;
            cursor_ = 0;
            if (bySize_[static_cast<std::size_t>(currentSize_ - 1)].empty())
                buildSizeClass(currentSize_);
            if (bySize_[static_cast<std::size_t>(currentSize_ - 1)].empty()) continue;
        }
        return bySize_[static_cast<std::size_t>(currentSize_ - 1)][cursor_++];
    }
}

std::vector<FormulaPtr> enumerateFormulas(int maxSize, const std::vector<Atom>& atoms) {
    FormulaEnumerator en(maxSize, atoms);
    std::vector<FormulaPtr> out;
    while (FormulaPtr f = en.next()) out.push_back(std::move(f));
    return out;
}

}  // namespace dialogic
