#include "smmp/neighborhoods.hpp"

#include "smmp/error.hpp"

namespace smmp {

namespace {

Integer reduce_omega(const Integer& omega, const Integer& Delta) {
    if (Delta == 1) return 0;
    return mod_floor(omega, Delta);
}

struct Mk1aNumbers {
    Integer delta, Delta, Omega;
};

Mk1aNumbers mk1a_numbers(const WahlData& w, std::size_t bar) {
    const Integer& m = w.n;
    HJSequences h = sequences(m * m, m * w.a - 1);
    const Integer& beta = h.beta[bar];
    const Integer& alpha = h.alpha[bar];
    const Integer& gamma = h.gamma[bar];
    if (!divides(m, beta + alpha))
        throw InternalError("beta_i + alpha_i not divisible by m for Wahl chain " + format_chain(h.chain));
    Mk1aNumbers out;
    out.delta = (beta + alpha) / m;
    out.Delta = m * m - beta * alpha;
    out.Omega = m * w.a - 1 - gamma * beta;
    return out;
}

Integer mk2a_Delta(const WahlData& f, const WahlData& e, const Integer& delta) {
    return e.n * e.n + f.n * f.n - delta * e.n * f.n;
}

}  // namespace

bool Invariants::equivalent(const Invariants& other) const {
    return delta == other.delta && same_class(Delta, Omega, other.Delta, other.Omega);
}

MK1A::MK1A(WahlData wahl, std::size_t bar) : wahl_(std::move(wahl)), bar_(bar) {
    if (wahl_.smooth()) throw InvalidArgument("an mk1A needs a singular Wahl point");
    chain_ = wahl_chain(wahl_);
    if (bar_ < 1 || bar_ > chain_.size())
        throw InvalidArgument("bar " + std::to_string(bar_) + " outside chain " + format_chain(chain_));
    if (mk1a_numbers(wahl_, bar_).Delta <= 0)
        throw InvalidArgument("(-1)-curve at position " + std::to_string(bar_) + " of " + format_chain(chain_) +
                              " gives C.C >= 0; not an extremal neighborhood");
}

MK1A MK1A::reversed() const { return MK1A(wahl_.reversed(), chain_.size() + 1 - bar_); }

Integer mk2a_delta(const WahlData& f, const WahlData& e) { return e.n * f.a + f.n * e.a - e.n * f.n; }

Integer epres_delta(const WahlData& f, const Integer& c, const WahlData& e) {
    return c * e.n * f.n - e.n * f.a - f.n * e.a;
}

MK2A::MK2A(WahlData f, WahlData e) : f_(std::move(f)), e_(std::move(e)) {
    if (f_.n == e_.n)
        throw InvalidArgument("the two Wahl points of an mk2A have equal index " + to_string(f_.n));
    Integer delta = mk2a_delta(f_, e_);
    if (delta <= 0) throw InvalidArgument("delta = " + to_string(delta) + " <= 0; K.C is not negative");
    if (mk2a_Delta(f_, e_, delta) <= 0) throw InvalidArgument("C.C >= 0; not an extremal neighborhood");
}

EPRes::EPRes(WahlData f, Integer c, WahlData e) : f_(std::move(f)), c_(std::move(c)), e_(std::move(e)) {
    if (c_ < 1) throw InvalidArgument("central curve needs c >= 1");
    Integer delta = epres_delta(f_, c_, e_);
    if (delta <= 0) throw InvalidArgument("delta = " + to_string(delta) + " <= 0; K.C+ is not positive");
}

Invariants mk1a_invariants(const MK1A& n) {
    Mk1aNumbers x = mk1a_numbers(n.wahl(), n.bar());
    const Integer& m = n.wahl().n;
    Invariants inv;
    inv.delta = x.delta;
    inv.Delta = x.Delta;
    inv.Omega = reduce_omega(x.Omega, x.Delta);
    inv.KC = -make_rational(x.delta, m);
    inv.C2 = -make_rational(x.Delta, m * m);
    return inv;
}

Invariants mk2a_invariants(const MK2A& n) {
    const Integer& m1 = n.e().n;
    const Integer& a1 = n.e().a;
    const Integer& m2 = n.f().n;
    const Integer& a2 = n.f().a;
    Invariants inv;
    inv.delta = mk2a_delta(n.f(), n.e());
    inv.Delta = mk2a_Delta(n.f(), n.e(), inv.delta);
    inv.Omega = reduce_omega((m2 - inv.delta * m1) * (m2 - a2) + m1 * a1 - 1, inv.Delta);
    inv.KC = -make_rational(inv.delta, m1 * m2);
    inv.C2 = -make_rational(inv.Delta, m1 * m1 * m2 * m2);
    return inv;
}

Invariants epres_invariants(const EPRes& p) {
    const Integer& m1 = p.e().n;
    const Integer& a1 = p.e().a;
    const Integer& m2 = p.f().n;
    const Integer& a2 = p.f().a;
    Invariants inv;
    inv.delta = epres_delta(p.f(), p.c(), p.e());
    inv.Delta = m1 * m1 + m2 * m2 + inv.delta * m1 * m2;
    if (!p.e().smooth() && !p.f().smooth()) {
        Integer omega = -(m1 * m1) * (p.c() - 1) + (m2 + inv.delta * m1) * (m2 - a2) + m1 * a1 - 1;
        inv.Omega = reduce_omega(omega, inv.Delta);
    } else {
        CQS q = oracle_invariants(Subject(p));
        if (q.delta() != inv.Delta)
            throw InternalError("P-resolution chain disagrees with Delta for c = " + to_string(p.c()));
        inv.Omega = q.omega();
    }
    inv.KC = make_rational(inv.delta, m1 * m2);
    inv.C2 = -make_rational(inv.Delta, m1 * m1 * m2 * m2);
    return inv;
}

Invariants invariants(const Subject& s) {
    struct Visitor {
        Invariants operator()(const MK1A& n) const { return mk1a_invariants(n); }
        Invariants operator()(const MK2A& n) const { return mk2a_invariants(n); }
        Invariants operator()(const EPRes& p) const { return epres_invariants(p); }
    };
    return std::visit(Visitor{}, s);
}

Invariants invariants(const Neighborhood& n) {
    return std::visit([](const auto& x) { return invariants(Subject(x)); }, n);
}

Chain composite_chain(const Subject& s) {
    struct Visitor {
        Chain operator()(const MK1A& n) const {
            std::vector<Integer> entries = n.chain().entries();
            entries[n.bar() - 1] -= 1;
            return Chain(std::move(entries));
        }
        Chain operator()(const MK2A& n) const {
            return wahl_chain(n.f()).reversed().concat(Chain{1}).concat(wahl_chain(n.e()));
        }
        Chain operator()(const EPRes& p) const {
            return wahl_chain(p.f()).reversed().concat(Chain(std::vector<Integer>{p.c()})).concat(wahl_chain(p.e()));
        }
    };
    return std::visit(Visitor{}, s);
}

CQS oracle_invariants(const Subject& s) {
    Chain reduced = contract_ones(composite_chain(s));
    if (reduced.empty()) return CQS(1, 0);
    return to_cqs(reduced);
}

}  // namespace smmp
