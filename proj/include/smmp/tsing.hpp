#pragma once

// T-singularities 1/(dn^2)(1, dna-1), Wahl singularities (d = 1), and the
// T-blow-up of an I_d elliptic fiber that produces their resolution chains.

#include "smmp/hjcf.hpp"
#include "smmp/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smmp {

/// Wahl singularity 1/n^2(1, na-1). The pair (1,1) is accepted as the smooth point.
struct WahlData {
    Integer n;
    Integer a;

    WahlData() : n(1), a(1) {}
    WahlData(Integer n_, Integer a_);

    bool smooth() const { return n == 1; }
    CQS singularity() const;
    /// The same germ seen from the other end of its chain: (n, n-a).
    WahlData reversed() const;

    friend bool operator==(const WahlData&, const WahlData&) = default;
};

struct TData {
    Integer d;
    Integer n;
    Integer a;

    TData(Integer d_, Integer n_, Integer a_);

    CQS singularity() const;

    friend bool operator==(const TData&, const TData&) = default;
};

/// Resolution chain of a Wahl singularity; empty for the smooth point.
Chain wahl_chain(const WahlData& w);
Chain t_chain(const TData& t);

/// Reads a chain as a Wahl chain in the given orientation: value n^2/(na-1).
std::optional<WahlData> as_wahl(const Chain& chain);

struct Classification {
    enum class Kind { DuValA, Wahl, T, PlainCQS };

    Kind kind = Kind::PlainCQS;
    /// Set for Wahl (d = 1) and T.
    std::optional<TData> t;
    /// Every T-decomposition found, largest n first. More than one entry is rare.
    std::vector<TData> alternatives;

    std::optional<WahlData> wahl() const;
};

std::string to_string(Classification::Kind kind);

Classification classify(const CQS& cqs);

/// One component of the total transform of I_d.
struct FiberComponent {
    Integer selfint;
    Integer mult;
};

/// Cyclic chain of fiber components. components[i] meets components[i+1 mod size];
/// a cycle of length 1 is the nodal I_1 curve and one of length 2 has its two
/// components meeting twice.
struct FiberState {
    std::vector<FiberComponent> components;
    std::optional<std::size_t> marker;  // index of the latest (-1)-curve

    static FiberState initial(const Integer& d);

    /// Checks that every component has zero intersection with the total fiber.
    bool is_fiber_pullback() const;

    std::string to_json() const;
};

/// First step: node between components[node] and components[node+1 mod d].
/// Later steps: 'L' blows up the node between the (-1)-curve and its predecessor,
/// 'R' the node with its successor.
struct BlowupScript {
    std::size_t node = 0;
    std::string steps;

    static BlowupScript parse(std::string_view text);
};

struct TBlowupResult {
    Integer d;
    Chain chain;            // E_1..E_s, oriented so nu_1 = a and nu_s = n - a
    std::vector<Integer> nu;  // nu_1..nu_{s+1}; the last entry belongs to the (-1)-curve
    Integer n;              // nu_{s+1}
    Integer a;              // nu_{s+1} - nu_s
    FiberState state;
    std::size_t blowups = 0;

    TData t_data() const { return TData(d, n, a); }
};

TBlowupResult t_blowup(const Integer& d, const BlowupScript& script);

enum class KodairaCase { MinusInfinity, Zero, One };

std::string to_string(KodairaCase c);

struct KodairaResult {
    KodairaCase kodaira;
    Rational coefficient;  // K_W is numerically coefficient * (general fiber)
};

KodairaResult kodaira_case(const std::vector<TBlowupResult>& fibers);

/// Multiplicities (n1, n2) of the multiple fibers when the case-one pair is coprime.
std::optional<std::pair<Integer, Integer>> dolgachev_type(const std::vector<TBlowupResult>& fibers);

}  // namespace smmp
