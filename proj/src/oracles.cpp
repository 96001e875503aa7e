#include "dialogic/oracles.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

namespace dialogic {

bool evaluate(const FormulaPtr& f, const Valuation& v) {
    switch (f->kind()) {
        case Conn::Atom: {
            auto it = v.find(f->atomName());
            if (it == v.end())
                throw std::invalid_argument("valuation misses atom '" + f->atomName() + "'");
            return it->second;
        }
        case Conn::Neg: return !evaluate(f->left(), v);
        case Conn::And: return evaluate(f->left(), v) && evaluate(f->right(), v);
        case Conn::Or: return evaluate(f->left(), v) || evaluate(f->right(), v);
        case Conn::Imp: return !evaluate(f->left(), v) || evaluate(f->right(), v);
    }
    return false;
}

bool classicalValid(const FormulaPtr& f) {
    const auto atoms = atomsOf(f);
    if (atoms.size() > 20)
        throw std::invalid_argument("classicalValid: more than 20 distinct atoms");
    const std::size_t k = atoms.size();
    Valuation v;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        for (std::size_t i = 0; i < k; ++i) v[atoms[i].name] = (mask >> i) & 1u;
        if (!evaluate(f, v)) return false;
    }
    return true;
}

// ── G4ip ────────────────────────────────────────────────────────────────────

namespace {

// Internal syntax with falsum; ~A is translated to A -> Bot.
struct IForm;
using IPtr = std::shared_ptr<const IForm>;

enum class IKind : std::uint8_t { Bot, Var, And, Or, Imp };

struct IForm {
    IKind kind;
    std::string var;
    IPtr a, b;
    std::string text;  // canonical key
};

IPtr mk(IKind k, std::string var, IPtr a, IPtr b) {
    auto f = std::make_shared<IForm>();
    f->kind = k;
    f->var = std::move(var);
    f->a = std::move(a);
    f->b = std::move(b);
    switch (f->kind) {
        case IKind::Bot: f->text = "#"; break;
        case IKind::Var: f->text = f->var; break;
        case IKind::And: f->text = "(" + f->a->text + "&" + f->b->text + ")"; break;
        case IKind::Or: f->text = "(" + f->a->text + "|" + f->b->text + ")"; break;
        case IKind::Imp: f->text = "(" + f->a->text + ">" + f->b->text + ")"; break;
    }
    return f;
}

IPtr bot() {
    static const IPtr b = mk(IKind::Bot, {}, nullptr, nullptr);
    return b;
}

IPtr translate(const FormulaPtr& f) {
    switch (f->kind()) {
        case Conn::Atom: return mk(IKind::Var, f->atomName(), nullptr, nullptr);
        case Conn::Neg: return mk(IKind::Imp, {}, translate(f->left()), bot());
        case Conn::And: return mk(IKind::And, {}, translate(f->left()), translate(f->right()));
        case Conn::Or: return mk(IKind::Or, {}, translate(f->left()), translate(f->right()));
        case Conn::Imp: return mk(IKind::Imp, {}, translate(f->left()), translate(f->right()));
    }
    throw std::logic_error("unreachable");
}

struct TextLess {
    bool operator()(const IPtr& x, const IPtr& y) const { return x->text < y->text; }
};

using Context = std::set<IPtr, TextLess>;

std::string sequentKey(const Context& ctx, const IPtr& goal) {
    std::string key;
    for (const auto& f : ctx) {
        key += f->text;
        key += ',';
    }
    key += "=>";
    key += goal->text;
    return key;
}

class Prover {
public:
    bool prove(Context ctx, IPtr goal) {
        const std::string key = sequentKey(ctx, goal);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const bool result = proveUncached(std::move(ctx), std::move(goal));
        memo_.emplace(key, result);
        return result;
    }

private:
    static bool contains(const Context& ctx, const IPtr& f) { return ctx.count(f) > 0; }

    bool proveUncached(Context ctx, IPtr goal) {
        // Axioms.
        for (const auto& f : ctx)
            if (f->kind == IKind::Bot) return true;
        if (goal->kind == IKind::Var && contains(ctx, goal)) return true;

        // Invertible left rules, applied one at a time.
        for (const auto& f : ctx) {
            if (f->kind == IKind::And) {
                Context next = ctx;
                next.erase(f);
                next.insert(f->a);
                next.insert(f->b);
                return prove(std::move(next), std::move(goal));
            }
            if (f->kind == IKind::Or) {
                Context left = ctx, right = ctx;
                left.erase(f);
                right.erase(f);
                left.insert(f->a);
                right.insert(f->b);
                return prove(std::move(left), goal) && prove(std::move(right), std::move(goal));
            }
            if (f->kind == IKind::Imp) {
                const IPtr& ant = f->a;
                if (ant->kind == IKind::Bot) {  // _|_ -> C is vacuous
                    Context next = ctx;
                    next.erase(f);
                    return prove(std::move(next), std::move(goal));
                }
                if (ant->kind == IKind::Var && contains(ctx, ant)) {
                    Context next = ctx;
                    next.erase(f);
                    next.insert(f->b);
                    return prove(std::move(next), std::move(goal));
                }
                if (ant->kind == IKind::And) {  // (A&B)->C  ~>  A->(B->C)
                    Context next = ctx;
                    next.erase(f);
                    next.insert(mk(IKind::Imp, {}, ant->a, mk(IKind::Imp, {}, ant->b, f->b)));
                    return prove(std::move(next), std::move(goal));
                }
                if (ant->kind == IKind::Or) {  // (A|B)->C  ~>  A->C, B->C
                    Context next = ctx;
                    next.erase(f);
                    next.insert(mk(IKind::Imp, {}, ant->a, f->b));
                    next.insert(mk(IKind::Imp, {}, ant->b, f->b));
                    return prove(std::move(next), std::move(goal));
                }
            }
        }

        // Invertible right rules.
        if (goal->kind == IKind::And)
            return prove(ctx, goal->a) && prove(std::move(ctx), goal->b);
        if (goal->kind == IKind::Imp) {
            Context next = ctx;
            next.insert(goal->a);
            return prove(std::move(next), goal->b);
        }

        // Choice points: right disjunction and nested implications.
        if (goal->kind == IKind::Or) {
            if (prove(ctx, goal->a) || prove(ctx, goal->b)) return true;
        }
        for (const auto& f : ctx) {
            if (f->kind != IKind::Imp || f->a->kind != IKind::Imp) continue;
            // (A->B)->C: prove A->B keeping B->C, then continue with C.
            const IPtr& nested = f->a;
            Context first = ctx;
            first.erase(f);
            first.insert(mk(IKind::Imp, {}, nested->b, f->b));
            first.insert(nested->a);
            Context second = ctx;
            second.erase(f);
            second.insert(f->b);
            if (prove(std::move(first), nested->b) && prove(std::move(second), goal)) return true;
        }
        return false;
    }

    std::map<std::string, bool> memo_;
};

}  // namespace

bool intuitionisticValid(const FormulaPtr& f) {
    Prover prover;
    return prover.prove(Context{}, translate(f));
}

}  // namespace dialogic
