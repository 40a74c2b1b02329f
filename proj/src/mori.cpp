#include "smmp/mori.hpp"

#include "smmp/error.hpp"

#include <algorithm>

namespace smmp {

namespace {

struct Descent {
    MK2A form;
    ZetaTrace trace;
};

Descent descend(const Neighborhood& n) {
    bool swapped = false;
    MK2A form = mori_form(n, &swapped);
    const Integer& m = form.e().n;
    const Integer& b = form.e().a;
    const Integer& big_n = form.f().n;
    const Integer& a = form.f().a;

    ZetaTrace t;
    t.swapped = swapped;
    t.delta = mk2a_delta(form.f(), form.e());
    t.zetas = {0, 1};
    t.pairs.emplace_back(m, b);
    for (;;) {
        const Integer& zi = t.zetas.back();
        Integer next = t.delta * zi - t.zetas[t.zetas.size() - 2];
        std::pair<Integer, Integer> p(next * m - zi * big_n, next * b - zi * (big_n - a));
        t.zetas.push_back(next);
        if (p.first <= 0) {
            t.stop_value = p.first;
            break;
        }
        if (p.second <= 0 || p.first >= t.pairs.back().first)
            throw InternalError("Mori descent left the positive range at pair (" + to_string(p.first) + "," +
                                to_string(p.second) + ")");
        t.pairs.push_back(std::move(p));
    }
    return {std::move(form), std::move(t)};
}

// Initial neighborhood in Mori form.
MK2A initial_form(const Descent& dsc) {
    const auto& pairs = dsc.trace.pairs;
    if (pairs.size() == 1) return dsc.form;
    const auto& small = pairs[pairs.size() - 1];
    const auto& big = pairs[pairs.size() - 2];
    return MK2A(WahlData(big.first, big.first - big.second), WahlData(small.first, small.second));
}

NeighborhoodType type_of(const ZetaTrace& t) {
    return t.stop_value == 0 ? NeighborhoodType::Divisorial : NeighborhoodType::Flipping;
}

EPRes flip_initial(const MK2A& init, const Integer& delta) {
    const Integer& m1 = init.e().n;
    const Integer& a1 = init.e().a;
    const Integer& m2 = init.f().n;
    const Integer& a2 = init.f().a;

    Integer mp2 = m1;
    Integer ap2 = m1 == 1 ? Integer(1) : Integer(m1 - a1);
    Integer mp1 = m2 - delta * m1;
    Integer ap1 = mp1 == 1 ? Integer(1) : mod_floor((m2 - a2) - delta * a1, mp1);
    Integer num = delta + mp1 * ap2 + mp2 * ap1;
    Integer den = mp1 * mp2;
    if (!divides(den, num))
        throw InternalError("self-intersection of C+ is not integral for flip of " + to_string(m1) + "," +
                            to_string(m2));
    return EPRes(WahlData(mp2, ap2), num / den, WahlData(mp1, ap1));
}

}  // namespace

std::string to_string(NeighborhoodType t) {
    return t == NeighborhoodType::Flipping ? "Flipping" : "Divisorial";
}

MK2A to_mk2a(const MK1A& n) {
    if (n.bar() == n.length()) return MK2A(n.wahl().reversed(), WahlData());
    if (n.bar() == 1) return MK2A(n.wahl(), WahlData());
    return *degenerate_mk1a(n).left;
}

MK2A mori_form(const Neighborhood& n, bool* swapped) {
    MK2A x = std::holds_alternative<MK1A>(n) ? to_mk2a(std::get<MK1A>(n)) : std::get<MK2A>(n);
    bool swap = x.e().n > x.f().n;
    if (swapped) *swapped = swap;
    return swap ? x.swapped() : x;
}

NeighborhoodClass classify_neighborhood(const Neighborhood& n) {
    Descent d = descend(n);
    NeighborhoodType type = type_of(d.trace);
    return {type, std::move(d.trace)};
}

Neighborhood initial_neighborhood(const Neighborhood& n) {
    MK2A init = initial_form(descend(n));
    if (init.e().smooth()) {
        WahlData w = init.f().reversed();
        return MK1A(w, wahl_chain(w).size());
    }
    return init;
}

EPRes flip(const Neighborhood& n) {
    Descent d = descend(n);
    if (type_of(d.trace) != NeighborhoodType::Flipping)
        throw ContractViolation("cannot flip a divisorial neighborhood");
    return flip_initial(initial_form(d), d.trace.delta);
}

WahlData divisorial_data(const Neighborhood& n) {
    Descent d = descend(n);
    if (type_of(d.trace) != NeighborhoodType::Divisorial)
        throw ContractViolation("neighborhood is of flipping type; there is no divisorial contraction");
    MK2A init = initial_form(d);
    if (init.e().n != d.trace.delta || init.f().n != d.trace.delta * d.trace.delta)
        throw InternalError("divisorial initial neighborhood does not have m1 = delta, m2 = delta^2");
    return init.e();
}

MoriStep mori_step(const Neighborhood& n) {
    NeighborhoodClass k = classify_neighborhood(n);
    if (k.type == NeighborhoodType::Flipping) return {flip(n), 0};
    return {divisorial_data(n), 1};
}

MoriSequenceGenerator::MoriSequenceGenerator(const Neighborhood& initial) {
    MK2A form = mori_form(initial);
    delta_ = mk2a_delta(form.f(), form.e());
    if (delta_ * form.e().n - form.f().n > 0)
        throw ContractViolation("Mori sequences start from an initial neighborhood");
    type_ = classify_neighborhood(initial).type;
    d_ = {form.e().n, form.f().n};
    c_ = {form.e().a, form.f().n - form.f().a};
}

bool MoriSequenceGenerator::exhausted() const { return delta_ == 1 && produced_ >= 2; }

void MoriSequenceGenerator::extend() {
    const std::size_t k = d_.size();
    d_.push_back(delta_ * d_[k - 1] - d_[k - 2]);
    c_.push_back(delta_ * c_[k - 1] - c_[k - 2]);
}

MK2A MoriSequenceGenerator::next() {
    if (exhausted()) throw ContractViolation("a delta = 1 Mori sequence has only two neighborhoods");
    const std::size_t i = produced_;  // 0-based: neighborhood number i+1
    while (d_.size() < i + 2) extend();
    ++produced_;
    return MK2A(WahlData(d_[i + 1], d_[i + 1] - c_[i + 1]), WahlData(d_[i], c_[i]));
}

MoriSequence mori_sequence(const Neighborhood& initial, std::size_t count) {
    if (count < 1) throw InvalidArgument("a Mori sequence needs at least one neighborhood");
    MoriSequenceGenerator gen(initial);
    if (gen.delta() == 1 && count > 2)
        throw InvalidArgument("a delta = 1 Mori sequence has only two neighborhoods");
    MoriSequence seq;
    seq.delta = gen.delta();
    seq.type = gen.type();
    for (std::size_t i = 0; i < count; ++i) seq.items.push_back(gen.next());
    seq.d_seq.assign(gen.d_seq().begin(), gen.d_seq().begin() + static_cast<std::ptrdiff_t>(count + 1));
    seq.c_seq.assign(gen.c_seq().begin(), gen.c_seq().begin() + static_cast<std::ptrdiff_t>(count + 1));
    return seq;
}

MoriSequenceGenerator divisorial_family(const WahlData& w) {
    if (w.smooth()) throw InvalidArgument("divisorial families need a singular Wahl point");
    const Integer& delta = w.n;
    Integer sq = delta * delta;
    return MoriSequenceGenerator(MK2A(WahlData(sq, sq - (delta * w.a - 1)), w));
}

std::vector<MK2A> antiflip_seeds(const EPRes& p) {
    std::vector<MK2A> seeds;
    for (const EPRes& x : {p, p.reversed()}) {
        Integer delta = epres_delta(x.f(), x.c(), x.e());
        const Integer& m1 = x.f().n;
        Integer a1 = x.f().smooth() ? Integer(1) : Integer(m1 - x.f().a);
        Integer m2 = x.e().n + delta * m1;
        Integer num = delta - m2 * a1 + m1 * m2;
        if (!divides(m1, num)) continue;
        Integer a2 = num / m1;
        if (a2 <= 0 || a2 >= m2 || gcd(a2, m2) != 1) continue;
        MK2A seed(WahlData(m2, a2), WahlData(m1, a1));
        if (!flip(seed).equivalent(p)) continue;
        if (std::find(seeds.begin(), seeds.end(), seed) == seeds.end()) seeds.push_back(seed);
    }
    return seeds;
}

std::optional<MK1A> SequenceChain::mk1a() const {
    if (!bar) return std::nullopt;
    return MK1A(wahl, *bar);
}

std::vector<SequenceChain> sequence_chains(const MoriSequence& seq) {
    std::vector<SequenceChain> out;
    for (std::size_t i = 0; i < seq.d_seq.size(); ++i) {
        const Integer& d = seq.d_seq[i];
        const Integer& c = seq.c_seq[i];
        if (d == 1) continue;
        SequenceChain sc{WahlData(d, d - c), std::nullopt};
        if (i > 0) {
            const Integer& dp = seq.d_seq[i - 1];
            const Integer& cp = seq.c_seq[i - 1];
            std::size_t prefix = dp == 1 ? 0 : expand(dp, dp - cp).size();
            sc.bar = prefix + 1;
        }
        out.push_back(std::move(sc));
    }
    return out;
}

std::string format_sequence_chain(const SequenceChain& c) {
    Chain ch = c.chain();
    std::string out = "[";
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) out += ',';
        out += ch[i].get_str();
        if (c.bar && *c.bar == i + 1) out += '*';
    }
    return out + "]";
}

std::string format_family(const MoriSequence& seq) {
    std::string out;
    for (const auto& c : sequence_chains(seq)) {
        if (!out.empty()) out += '-';
        out += format_sequence_chain(c);
    }
    return out;
}

Degenerations degenerate_mk1a(const MK1A& n) {
    Degenerations out;
    const Chain& ch = n.chain();
    const std::size_t i = n.bar();
    const std::size_t s = ch.size();
    const auto& entries = ch.entries();
    if (i > 1) {
        Chain prefix(std::vector<Integer>(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(i - 1)));
        ProjectiveValue v = evaluate(prefix);
        out.left = MK2A(WahlData(v.p, v.p - v.q), n.wahl());
    }
    if (i < s) {
        Chain suffix(std::vector<Integer>(entries.rbegin(), entries.rbegin() + static_cast<std::ptrdiff_t>(s - i)));
        ProjectiveValue v = evaluate(suffix);
        out.right = MK2A(n.wahl().reversed(), WahlData(v.p, v.p - v.q));
    }
    return out;
}

EPRes special_flip(const MK1A& n) {
    if (n.bar() != n.length())
        throw ContractViolation("the special flip needs the (-1)-curve on the last curve of the chain");
    std::vector<Integer> entries = n.chain().entries();
    std::size_t i = entries.size();
    while (i > 0 && entries[i - 1] < 3) --i;
    if (i == 0) throw InternalError("Wahl chain without an entry >= 3");
    entries.resize(i);
    entries.back() -= 1;
    Integer c = entries.front();
    std::vector<Integer> rest(entries.begin() + 1, entries.end());
    WahlData side;
    if (!rest.empty()) {
        auto w = as_wahl(Chain(rest));
        if (!w) throw InternalError("special flip produced a non-Wahl chain " + format_chain(Chain(rest)));
        side = *w;
    }
    return EPRes(WahlData(), c, side);
}

}  // namespace smmp
