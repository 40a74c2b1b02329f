#include "smmp/notation.hpp"

#include "smmp/error.hpp"
#include "smmp/tsing.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace smmp {

namespace {

constexpr std::string_view kOverline = "\xE2\x80\xBE";

struct Term {
    std::size_t position = 0;
    bool is_chain = false;
    std::vector<Integer> entries;  // chain entries
    std::vector<std::size_t> bars;  // 1-based
    Integer number;                 // bare integer
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Term> terms() {
        std::vector<Term> out;
        skip();
        if (done()) throw ParseError("empty notation", pos_);
        out.push_back(term());
        while (!done()) {
            if (text_[pos_] != '-') throw ParseError("expected '-' between terms", pos_);
            ++pos_;
            skip();
            out.push_back(term());
        }
        return out;
    }

private:
    bool done() {
        skip();
        return pos_ >= text_.size();
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    Integer number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }
    bool accept_bar() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            return true;
        }
        if (text_.substr(pos_, kOverline.size()) == kOverline) {
            pos_ += kOverline.size();
            return true;
        }
        return false;
    }
    Term term() {
        skip();
        Term t;
        t.position = pos_;
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            t.is_chain = true;
            skip();
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                return t;
            }
            for (;;) {
                std::size_t at = pos_;
                Integer b = number();
                if (b < 1) throw ParseError("chain entries must be >= 1", at);
                t.entries.push_back(std::move(b));
                if (accept_bar()) t.bars.push_back(t.entries.size());
                skip();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ']') {
                    ++pos_;
                    break;
                }
                throw ParseError("expected ',' or ']'", pos_);
            }
            return t;
        }
        t.number = number();
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

WahlData side_from_chain(const Chain& displayed, bool reversed, std::size_t position) {
    if (displayed.empty()) return WahlData();
    Chain oriented = reversed ? displayed.reversed() : displayed;
    auto w = as_wahl(oriented);
    if (!w)
        throw SemanticError(format_chain(displayed) + " at position " + std::to_string(position) +
                            " is not a Wahl chain");
    return *w;
}

void require_unbarred(const Term& t) {
    if (!t.bars.empty())
        throw SemanticError("bar at position " + std::to_string(t.position) + " is only allowed on a lone mk1A chain");
}

template <typename F>
auto semantic(F&& build) {
    try {
        return build();
    } catch (const InvalidArgument& e) {
        throw SemanticError(e.what());
    }
}

}  // namespace

Notation parse(std::string_view text) {
    std::vector<Term> terms = Lexer(text).terms();
    const std::size_t k = terms.size();

    if (k == 1) {
        Term& t = terms[0];
        if (!t.is_chain) {
            return semantic([&] { return Notation(EPRes(WahlData(), t.number, WahlData())); });
        }
        if (t.entries.empty()) throw ParseError("empty chain", t.position);
        Chain chain(t.entries);
        if (t.bars.empty()) return chain;
        if (t.bars.size() > 1) throw ParseError("more than one bar in a chain", t.position);
        WahlData w = side_from_chain(chain, false, t.position);
        return semantic([&] { return Notation(MK1A(w, t.bars.front())); });
    }

    for (const auto& t : terms) require_unbarred(t);

    if (k == 2) {
        const Term& l = terms[0];
        const Term& r = terms[1];
        if (l.is_chain && r.is_chain) {
            WahlData f = side_from_chain(Chain(l.entries), true, l.position);
            WahlData e = side_from_chain(Chain(r.entries), false, r.position);
            return semantic([&] { return Notation(MK2A(f, e)); });
        }
        if (l.is_chain && !r.is_chain) {
            WahlData f = side_from_chain(Chain(l.entries), true, l.position);
            return semantic([&] { return Notation(EPRes(f, r.number, WahlData())); });
        }
        if (!l.is_chain && r.is_chain) {
            WahlData e = side_from_chain(Chain(r.entries), false, r.position);
            return semantic([&] { return Notation(EPRes(WahlData(), l.number, e)); });
        }
        throw ParseError("two bare integers", r.position);
    }

    if (k == 3) {
        const Term& l = terms[0];
        const Term& c = terms[1];
        const Term& r = terms[2];
        if (!l.is_chain || c.is_chain || !r.is_chain)
            throw ParseError("expected [chain]-c-[chain]", l.position);
        WahlData f = side_from_chain(Chain(l.entries), true, l.position);
        WahlData e = side_from_chain(Chain(r.entries), false, r.position);
        return semantic([&] { return Notation(EPRes(f, c.number, e)); });
    }

    throw ParseError("too many '-'-separated terms", terms[3].position);
}

Subject parse_subject(std::string_view text) {
    Notation x = parse(text);
    if (std::holds_alternative<Chain>(x))
        throw SemanticError("expected an mk1A, mk2A or P-resolution, got the plain chain " +
                            format_chain(std::get<Chain>(x)));
    return std::visit(
        [](const auto& v) -> Subject {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Chain>)
                throw InternalError("unreachable");
            else
                return v;
        },
        x);
}

Neighborhood parse_neighborhood(std::string_view text) {
    Subject s = parse_subject(text);
    if (std::holds_alternative<EPRes>(s))
        throw SemanticError("expected an extremal neighborhood, got a P-resolution");
    if (std::holds_alternative<MK1A>(s)) return std::get<MK1A>(s);
    return std::get<MK2A>(s);
}

std::string format(const MK1A& n) {
    std::string out = "[";
    const Chain& ch = n.chain();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) out += ',';
        out += ch[i].get_str();
        if (i + 1 == n.bar()) out += '*';
    }
    return out + "]";
}

std::string format(const MK2A& n) {
    return format_chain(wahl_chain(n.f()).reversed()) + "-" + format_chain(wahl_chain(n.e()));
}

std::string format(const EPRes& p) {
    std::string out;
    if (!p.f().smooth()) out += format_chain(wahl_chain(p.f()).reversed()) + "-";
    out += p.c().get_str();
    if (!p.e().smooth()) out += "-" + format_chain(wahl_chain(p.e()));
    return out;
}

std::string format(const Subject& s) {
    return std::visit([](const auto& v) { return format(v); }, s);
}

std::string format(const Neighborhood& n) {
    return std::visit([](const auto& v) { return format(v); }, n);
}

std::string format(const Notation& x) {
    return std::visit(
        [](const auto& v) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Chain>)
                return format_chain(v);
            else
                return format(v);
        },
        x);
}

std::string kind_name(const Subject& s) {
    switch (s.index()) {
        case 0: return "mk1A";
        case 1: return "mk2A";
        default: return "EPRes";
    }
}

}  // namespace smmp
