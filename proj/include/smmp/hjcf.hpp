#pragma once

// Hirzebruch-Jung continued fractions.
//
// A chain [b_1,...,b_s] stands for the value b_1 - 1/(b_2 - 1/(... - 1/b_s)) and,
// geometrically, for a string of rational curves with self-intersections -b_i.
// Chains with entries equal to 1 are allowed everywhere except where a reduced
// expansion is required; evaluation is projective so they never divide by zero.

#include "smmp/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace smmp {

class Chain {
public:
    Chain() = default;
    Chain(std::initializer_list<long> entries);
    explicit Chain(std::vector<Integer> entries);

    const std::vector<Integer>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    /// Nonempty with every entry >= 2.
    bool is_reduced() const;

    Chain reversed() const;
    Chain concat(const Chain& other) const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Integer> entries_;
};

/// Numerator/denominator pair read off the matrix product. Always coprime.
struct ProjectiveValue {
    Integer p;
    Integer q;

    friend bool operator==(const ProjectiveValue&, const ProjectiveValue&) = default;
};

/// Cyclic quotient singularity 1/Delta(1,Omega).
class CQS {
public:
    CQS(Integer delta, Integer omega);

    const Integer& delta() const noexcept { return delta_; }
    const Integer& omega() const noexcept { return omega_; }

    /// 1/Delta(1,Omega^{-1}); the same germ with coordinates swapped.
    CQS dual() const;

    /// Isomorphic as germs: equal Delta and Omega' in {Omega, Omega^{-1}}.
    bool equivalent(const CQS& other) const;

    friend bool operator==(const CQS&, const CQS&) = default;

private:
    Integer delta_;
    Integer omega_;
};

/// True when (d, o) and (d', o') name the same germ up to duality. Omegas are
/// reduced modulo d first.
bool same_class(const Integer& d, const Integer& o, const Integer& d2, const Integer& o2);

struct HJSequences {
    Integer m;
    Integer q;
    Chain chain;
    // indexed 0..s+1
    std::vector<Integer> alpha;
    std::vector<Integer> beta;
    std::vector<Integer> gamma;
};

Chain expand(const Integer& m, const Integer& q);
ProjectiveValue evaluate(const Chain& chain);

/// CQS class of a chain: Delta = numerator, Omega = denominator mod Delta.
/// Throws DegenerateChain unless the numerator is positive.
CQS to_cqs(const Chain& chain);

/// Blows down every 1-entry: [..,x,1,y,..] -> [..,x-1,y-1,..].
Chain contract_ones(const Chain& chain);

HJSequences sequences(const Integer& m, const Integer& q);
std::vector<Rational> discrepancies(const Integer& m, const Integer& q);

inline Chain reverse(const Chain& chain) { return chain.reversed(); }

std::string format_chain(const Chain& chain);
std::string format_cqs(const CQS& cqs);

/// `[b1,...,bs]`, whitespace ignored. Entries must be >= 1.
Chain parse_chain(std::string_view text);
/// `1/D(1,O)`
CQS parse_cqs(std::string_view text);

}  // namespace smmp
