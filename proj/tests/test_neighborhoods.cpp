#include "oracles.hpp"

#include "smmp/error.hpp"
#include "smmp/neighborhoods.hpp"

#include <doctest.h>

using namespace smmp;

namespace {

std::vector<WahlData> wahl_points(long max_n, bool with_smooth) {
    std::vector<WahlData> out;
    if (with_smooth) out.emplace_back();
    for (long n = 2; n <= max_n; ++n)
        for (long a = 1; a < n; ++a)
            if (gcd(Integer(n), Integer(a)) == 1) out.emplace_back(n, a);
    return out;
}

bool omega_class(const Invariants& inv, long o) { return same_class(inv.Delta, inv.Omega, inv.Delta, o); }

oracle::CurveNumbers oracle_numbers(const MK1A& n) {
    return oracle::curve_numbers({n.chain().entries()}, 1, {n.bar() - 1});
}

oracle::CurveNumbers oracle_numbers(const WahlData& f, const Integer& self, const WahlData& e) {
    oracle::Entries left = wahl_chain(f).reversed().entries();
    oracle::Entries right = wahl_chain(e).entries();
    std::vector<oracle::Entries> chains;
    std::vector<std::size_t> meets;
    if (!left.empty()) {
        chains.push_back(left);
        meets.push_back(left.size() - 1);
    }
    if (!right.empty()) {
        chains.push_back(right);
        meets.push_back(left.size());
    }
    return oracle::curve_numbers(chains, self, meets);
}

}  // namespace

TEST_CASE("mk1A invariants: worked values") {
    Invariants a = mk1a_invariants(MK1A(WahlData(5, 2), 3));
    CHECK(a.delta == 3);
    CHECK(a.Delta == 11);
    CHECK(omega_class(a, 3));
    CHECK(omega_class(a, 4));

    Invariants b = mk1a_invariants(MK1A(WahlData(2, 1), 1));
    CHECK(b.delta == 1);
    CHECK(b.Delta == 3);
    CHECK(b.Omega == 1);
    CHECK(b.KC == make_rational(-1, 2));
    CHECK(b.C2 == make_rational(-3, 4));

    Invariants c = mk1a_invariants(MK1A(WahlData(4, 3), 2));
    CHECK(c.delta == 2);
    CHECK(c.Delta == 4);
    CHECK(c.Omega == 1);
}

TEST_CASE("mk2A invariants: worked values") {
    Invariants a = mk2a_invariants(MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4)));
    CHECK(a.delta == 1);
    CHECK(a.Delta == 39);
    CHECK(a.Omega == 16);

    Invariants b = mk2a_invariants(MK2A::from_pairs(WahlData(14, 5), WahlData(37, 24)));
    CHECK(b.delta == 3);
    CHECK(b.Delta == 11);
    CHECK(omega_class(b, 3));

    Invariants c = mk2a_invariants(MK2A::from_pairs(WahlData(2, 1), WahlData(4, 3)));
    CHECK(c.delta == 2);
    CHECK(c.Delta == 4);
    CHECK(c.Omega == 1);
}

TEST_CASE("P-resolution invariants: worked values") {
    Invariants a = epres_invariants(EPRes(WahlData(2, 1), 3, WahlData()));
    CHECK(a.delta == 3);
    CHECK(a.Delta == 11);
    CHECK(omega_class(a, 3));
    CHECK(a.KC > 0);

    Invariants b = epres_invariants(EPRes(WahlData(2, 1), 1, WahlData(5, 2)));
    CHECK(b.delta == 1);
    CHECK(b.Delta == 39);
    CHECK(b.Omega == 16);

    Invariants c = epres_invariants(EPRes(WahlData(), 5, WahlData()));
    CHECK(c.delta == 3);
    CHECK(c.Delta == 5);
    CHECK(c.Omega == 1);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(MK1A(WahlData(), 1), InvalidArgument);
    CHECK_THROWS_AS(MK1A(WahlData(5, 2), 0), InvalidArgument);
    CHECK_THROWS_AS(MK1A(WahlData(5, 2), 4), InvalidArgument);
    CHECK_THROWS_AS(MK2A(WahlData(2, 1), WahlData(2, 1)), InvalidArgument);
    // delta = 3*1 + 2*1 - 6 < 0
    CHECK_THROWS_AS(MK2A(WahlData(3, 1), WahlData(2, 1)), InvalidArgument);
    CHECK_THROWS_AS(EPRes(WahlData(), 0, WahlData()), InvalidArgument);
    CHECK_THROWS_AS(EPRes(WahlData(), 1, WahlData()), InvalidArgument);
    CHECK_THROWS_AS(EPRes(WahlData(2, 1), 1, WahlData()), InvalidArgument);
}

TEST_CASE("composite chains and the evaluation oracle") {
    CHECK(composite_chain(MK1A(WahlData(5, 3), 1)) == Chain{1, 5, 3});
    CHECK(oracle_invariants(MK1A(WahlData(5, 3), 1)) == CQS(11, 3));
    MK2A sec5 = MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4));
    CHECK(composite_chain(sec5) == Chain{3, 2, 6, 2, 1, 4});
    CQS o = oracle_invariants(sec5);
    CHECK(o.delta() == 39);
    CHECK(o.equivalent(CQS(39, 16)));
    CHECK(oracle_invariants(EPRes(WahlData(2, 1), 3, WahlData())) == CQS(11, 3));
}

TEST_CASE("mk1A: closed forms against the intersection matrix, all bars, n <= 20") {
    std::size_t valid = 0, rejected = 0;
    for (const auto& w : wahl_points(20, false)) {
        const std::size_t s = wahl_chain(w).size();
        for (std::size_t bar = 1; bar <= s; ++bar) {
            MK1A* p = nullptr;
            std::optional<MK1A> n;
            try {
                n.emplace(w, bar);
                p = &*n;
            } catch (const InvalidArgument&) {
            }
            oracle::Entries e = wahl_chain(w).entries();
            if (!p) {
                ++rejected;
                CHECK(oracle::curve_numbers({e}, 1, {bar - 1}).C2 >= 0);
                continue;
            }
            ++valid;
            Invariants inv = mk1a_invariants(*p);
            auto num = oracle_numbers(*p);
            CHECK(inv.KC == num.KC);
            CHECK(inv.C2 == num.C2);
            CHECK(inv.KC < 0);
            CHECK(inv.C2 < 0);
            CHECK(gcd(inv.Omega, inv.Delta) == 1);
            auto [d, o] = oracle::chain_class(composite_chain(*p).entries());
            CHECK(d == inv.Delta);
            CHECK(oracle::same_germ(d, o, inv.Delta, inv.Omega));
            CHECK(mk1a_invariants(p->reversed()).equivalent(inv));
        }
    }
    MESSAGE("mk1A valid " << valid << ", rejected " << rejected);
    CHECK(valid > 0);
}

TEST_CASE("mk2A: closed forms against the intersection matrix, m1, m2 <= 14") {
    std::size_t valid = 0;
    auto points = wahl_points(14, true);
    for (const auto& f : points) {
        for (const auto& e : points) {
            if (f.n == e.n) continue;
            std::optional<MK2A> n;
            try {
                n.emplace(f, e);
            } catch (const InvalidArgument&) {
                if (mk2a_delta(f, e) > 0) CHECK(oracle_numbers(f, 1, e).C2 >= 0);
                continue;
            }
            ++valid;
            Invariants inv = mk2a_invariants(*n);
            auto num = oracle_numbers(f, 1, e);
            CHECK(inv.KC == num.KC);
            CHECK(inv.C2 == num.C2);
            CHECK(inv.KC < 0);
            auto [d, o] = oracle::chain_class(composite_chain(*n).entries());
            CHECK(d == inv.Delta);
            CHECK(oracle::same_germ(d, o, inv.Delta, inv.Omega));
            Invariants sw = mk2a_invariants(n->swapped());
            CHECK(sw.equivalent(inv));
            CHECK(mod_floor(sw.Omega * inv.Omega, inv.Delta) == mod_floor(1, inv.Delta));
        }
    }
    MESSAGE("mk2A valid " << valid);
}

TEST_CASE("P-resolutions: closed forms against the intersection matrix") {
    auto points = wahl_points(9, true);
    for (const auto& f : points) {
        for (const auto& e : points) {
            for (long c = 1; c <= 6; ++c) {
                std::optional<EPRes> p;
                try {
                    p.emplace(f, c, e);
                } catch (const InvalidArgument&) {
                    continue;
                }
                Invariants inv = epres_invariants(*p);
                auto num = oracle_numbers(f, c, e);
                CHECK(inv.KC == num.KC);
                CHECK(inv.C2 == num.C2);
                CHECK(inv.KC > 0);
                CHECK(inv.C2 < 0);
                auto [d, o] = oracle::chain_class(composite_chain(*p).entries());
                CHECK(d == inv.Delta);
                CHECK(oracle::same_germ(d, o, inv.Delta, inv.Omega));
                CHECK(epres_invariants(p->reversed()).equivalent(inv));
            }
        }
    }
}
