#pragma once

// Mori's algorithm for mk2A neighborhoods and everything built on it: the
// flipping/divisorial criterion, descent to the initial neighborhood, flips,
// divisorial contractions, Mori sequences, mk1A degenerations and the
// special flip of an mk1A whose (-1)-curve meets the last curve of the chain.
//
// Internally every neighborhood is brought to "Mori form": an MK2A whose
// e-side (m1,a1) has the smaller index, with (1,1) standing for a missing
// Wahl point.

#include "smmp/integer.hpp"
#include "smmp/neighborhoods.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace smmp {

enum class NeighborhoodType { Flipping, Divisorial };

std::string to_string(NeighborhoodType t);

struct ZetaTrace {
    Integer delta;
    std::vector<Integer> zetas;                        // zeta_1 = 0, zeta_2 = 1, ...
    std::vector<std::pair<Integer, Integer>> pairs;    // (m1,a1) first, then the descent
    Integer stop_value;                                // first non-positive first coordinate
    bool swapped = false;                              // input sides were exchanged to get m1 < m2
};

struct NeighborhoodClass {
    NeighborhoodType type;
    ZetaTrace trace;
};

/// mk1A as an mk2A: bar at an end gives the (1,1) embedding, an interior bar
/// uses the first degeneration. Same (delta, Delta, Omega-class) and type.
MK2A to_mk2a(const MK1A& n);

/// MK2A with m1 < m2. Sets *swapped when the sides had to be exchanged.
MK2A mori_form(const Neighborhood& n, bool* swapped = nullptr);

NeighborhoodClass classify_neighborhood(const Neighborhood& n);

/// Returns an MK1A (bar at the end of its chain) when the smaller Wahl point is smooth.
Neighborhood initial_neighborhood(const Neighborhood& n);

EPRes flip(const Neighborhood& n);

/// Wahl singularity (Q in Y) that a divisorial neighborhood contracts to.
WahlData divisorial_data(const Neighborhood& n);

struct MoriStep {
    std::variant<EPRes, WahlData> outcome;
    int k2_delta = 0;  // K^2 change of the central fiber

    bool is_flip() const { return std::holds_alternative<EPRes>(outcome); }
};

MoriStep mori_step(const Neighborhood& n);

/// Successive neighborhoods of a Mori sequence, produced on demand.
class MoriSequenceGenerator {
public:
    /// `initial` must be an initial neighborhood.
    explicit MoriSequenceGenerator(const Neighborhood& initial);

    const Integer& delta() const noexcept { return delta_; }
    NeighborhoodType type() const noexcept { return type_; }
    /// delta = 1 sequences end after the second neighborhood.
    bool exhausted() const;
    MK2A next();

    const std::vector<Integer>& d_seq() const noexcept { return d_; }
    const std::vector<Integer>& c_seq() const noexcept { return c_; }

private:
    void extend();

    Integer delta_;
    NeighborhoodType type_;
    std::vector<Integer> d_;
    std::vector<Integer> c_;
    std::size_t produced_ = 0;
};

struct MoriSequence {
    Integer delta;
    NeighborhoodType type;
    std::vector<MK2A> items;
    std::vector<Integer> d_seq;  // d(1)..d(k+1)
    std::vector<Integer> c_seq;
};

MoriSequence mori_sequence(const Neighborhood& initial, std::size_t count);

/// Generator for the divisorial family contracting to 1/n^2(1, na-1).
MoriSequenceGenerator divisorial_family(const WahlData& w);

/// Initial neighborhoods whose flip is `p`, one per Wahl side of `p` (deduplicated).
std::vector<MK2A> antiflip_seeds(const EPRes& p);

/// One Wahl chain of a Mori sequence as printed in a family listing,
/// with the bar marking the mk1A it belongs to.
struct SequenceChain {
    WahlData wahl;
    std::optional<std::size_t> bar;

    Chain chain() const { return wahl_chain(wahl); }
    std::optional<MK1A> mk1a() const;
};

/// Chains for d(1)..d(k+1); a smooth first point is left out.
std::vector<SequenceChain> sequence_chains(const MoriSequence& seq);
std::string format_sequence_chain(const SequenceChain& c);
/// `[4]-[2,2*,6]-[2,2,2,2*,8]`
std::string format_family(const MoriSequence& seq);

struct Degenerations {
    std::optional<MK2A> left;   // bar > 1
    std::optional<MK2A> right;  // bar < s
};

Degenerations degenerate_mk1a(const MK1A& n);

/// Flip of an mk1A whose (-1)-curve meets the last curve, read off the chain.
EPRes special_flip(const MK1A& n);

}  // namespace smmp
