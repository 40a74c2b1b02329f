#pragma once

// Extremal neighborhoods with one (mk1A) or two (mk2A) Wahl points and
// extremal P-resolutions, together with their numerical invariants.
//
// Orientation follows the bracket notation [f_s2..f_1]-[e_1..e_s1]: the
// (-1)-curve meets F_1 and E_1, e = (m1,a1) names the right chain and
// f = (m2,a2) the left one, displayed reversed.

#include "smmp/hjcf.hpp"
#include "smmp/integer.hpp"
#include "smmp/tsing.hpp"

#include <cstddef>
#include <variant>

namespace smmp {

struct Invariants {
    Integer delta;  // small delta
    Integer Delta;
    Integer Omega;  // in (0, Delta), or 0 when Delta = 1
    Rational KC;
    Rational C2;

    CQS singularity() const { return CQS(Delta, Omega); }
    /// Same (delta, Delta, Omega) up to duality of Omega. K.C and C.C depend on the model and are not compared.
    bool equivalent(const Invariants& other) const;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

class MK1A {
public:
    /// bar is 1-based. Throws InvalidArgument when the data is not an extremal
    /// neighborhood (smooth Wahl point, bar out of range, or C.C >= 0).
    MK1A(WahlData wahl, std::size_t bar);

    const WahlData& wahl() const noexcept { return wahl_; }
    std::size_t bar() const noexcept { return bar_; }
    const Chain& chain() const noexcept { return chain_; }
    std::size_t length() const noexcept { return chain_.size(); }

    /// Same neighborhood written from the other end.
    MK1A reversed() const;

    friend bool operator==(const MK1A& x, const MK1A& y) { return x.wahl_ == y.wahl_ && x.bar_ == y.bar_; }

private:
    WahlData wahl_;
    std::size_t bar_;
    Chain chain_;
};

class MK2A {
public:
    /// Throws InvalidArgument unless m1 != m2, delta > 0 and Delta > 0.
    MK2A(WahlData f, WahlData e);

    static MK2A from_pairs(const WahlData& m1a1, const WahlData& m2a2) { return MK2A(m2a2, m1a1); }

    const WahlData& f() const noexcept { return f_; }
    const WahlData& e() const noexcept { return e_; }

    /// Swaps the two sides; the singularity becomes its dual.
    MK2A swapped() const { return MK2A(e_, f_); }

    friend bool operator==(const MK2A&, const MK2A&) = default;

private:
    WahlData f_;  // (m2, a2)
    WahlData e_;  // (m1, a1)
};

/// Extremal P-resolution [f_s2..f_1]-c-[e_1..e_s1]. Absent sides are (1,1).
class EPRes {
public:
    /// Throws InvalidArgument unless c >= 1 and delta > 0.
    EPRes(WahlData f, Integer c, WahlData e);

    const WahlData& f() const noexcept { return f_; }
    const WahlData& e() const noexcept { return e_; }
    const Integer& c() const noexcept { return c_; }

    EPRes reversed() const { return EPRes(e_, c_, f_); }
    /// Equal as written or after reading the chain backwards.
    bool equivalent(const EPRes& other) const { return *this == other || *this == other.reversed(); }

    friend bool operator==(const EPRes&, const EPRes&) = default;

private:
    WahlData f_;  // (m'2, a'2)
    Integer c_;
    WahlData e_;  // (m'1, a'1)
};

using Neighborhood = std::variant<MK1A, MK2A>;
using Subject = std::variant<MK1A, MK2A, EPRes>;

/// small delta of an mk2A: m1 a2 + m2 a1 - m1 m2.
Integer mk2a_delta(const WahlData& f, const WahlData& e);
/// small delta of a P-resolution: c m'1 m'2 - m'1 a'2 - m'2 a'1.
Integer epres_delta(const WahlData& f, const Integer& c, const WahlData& e);

Invariants mk1a_invariants(const MK1A& n);
Invariants mk2a_invariants(const MK2A& n);
Invariants epres_invariants(const EPRes& p);
Invariants invariants(const Subject& s);
Invariants invariants(const Neighborhood& n);

/// Chain whose blow-down evaluates to Delta/Omega: the resolution chain with the
/// (-1)-curve or the C^+ curve spliced in.
Chain composite_chain(const Subject& s);

/// (Delta, Omega) by blowing down the composite chain and evaluating it.
CQS oracle_invariants(const Subject& s);

}  // namespace smmp
