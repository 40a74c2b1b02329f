#include "oracles.hpp"

#include "smmp/error.hpp"
#include "smmp/mori.hpp"
#include "smmp/notation.hpp"

#include <doctest.h>

#include <random>
#include <set>

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

std::vector<MK2A> all_mk2a(long max_n) {
    std::vector<MK2A> out;
    auto pts = wahl_points(max_n, true);
    for (const auto& f : pts)
        for (const auto& e : pts) {
            if (f.n == e.n || mk2a_delta(f, e) <= 0) continue;
            try {
                out.emplace_back(f, e);
            } catch (const InvalidArgument&) {
            }
        }
    return out;
}

// (delta, Delta, Omega) of a P-resolution computed from its resolution graph only.
struct Numbers {
    Integer delta, Delta, Omega;
};

Numbers oracle_numbers(const EPRes& p) {
    oracle::Entries left = wahl_chain(p.f()).reversed().entries();
    oracle::Entries right = wahl_chain(p.e()).entries();
    oracle::Entries all = left;
    all.push_back(p.c());
    all.insert(all.end(), right.begin(), right.end());
    auto [d, o] = oracle::chain_class(all);
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
    Rational kc = oracle::curve_numbers(chains, p.c(), meets).KC * Rational(p.f().n * p.e().n);
    kc.canonicalize();
    REQUIRE(kc.get_den() == 1);
    return {kc.get_num(), d, o};
}

bool same_numbers(const Invariants& inv, const Numbers& x) {
    return inv.delta == x.delta && inv.Delta == x.Delta && oracle::same_germ(inv.Delta, inv.Omega, x.Delta, x.Omega);
}

}  // namespace

TEST_CASE("classify_neighborhood: worked values") {
    MK2A ex21 = MK2A::from_pairs(WahlData(14, 5), WahlData(37, 24));
    NeighborhoodClass k = classify_neighborhood(ex21);
    CHECK(k.type == NeighborhoodType::Flipping);
    CHECK(k.trace.delta == 3);
    using P = std::pair<Integer, Integer>;
    CHECK(k.trace.pairs == std::vector<P>{P(14, 5), P(5, 2), P(1, 1)});
    CHECK(k.trace.stop_value == -2);
    CHECK_FALSE(k.trace.swapped);

    NeighborhoodClass div = classify_neighborhood(MK2A::from_pairs(WahlData(2, 1), WahlData(4, 3)));
    CHECK(div.type == NeighborhoodType::Divisorial);
    CHECK(div.trace.stop_value == 0);

    CHECK(classify_neighborhood(MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4))).type == NeighborhoodType::Flipping);

    // the same neighborhood written with its sides exchanged
    NeighborhoodClass sw = classify_neighborhood(MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4)).swapped());
    CHECK(sw.trace.swapped);
    CHECK(sw.type == NeighborhoodType::Flipping);
}

TEST_CASE("initial_neighborhood") {
    MK2A ex21 = MK2A::from_pairs(WahlData(14, 5), WahlData(37, 24));
    Neighborhood init = initial_neighborhood(ex21);
    REQUIRE(std::holds_alternative<MK1A>(init));
    CHECK(std::get<MK1A>(init).wahl().singularity().equivalent(CQS(25, 9)));
    CHECK(format(init) == "[3,5,2*]");
    CHECK(invariants(init).equivalent(mk2a_invariants(ex21)));

    MK2A sec5 = MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4));
    CHECK(std::get<MK2A>(initial_neighborhood(sec5)) == sec5);
    CHECK(format(initial_neighborhood(init)) == format(init));
}

TEST_CASE("flip: worked values") {
    EPRes p = flip(MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4)));
    CHECK(p == EPRes(WahlData(2, 1), 1, WahlData(5, 2)));
    Invariants inv = epres_invariants(p);
    CHECK(inv.delta == 1);
    CHECK(inv.Delta == 39);
    CHECK(inv.Omega == 16);

    EPRes q = flip(MK1A(WahlData(5, 2), 3));
    CHECK(q.equivalent(EPRes(WahlData(2, 1), 3, WahlData())));

    CHECK(flip(MK2A::from_pairs(WahlData(14, 5), WahlData(37, 24))) == q);

    CHECK_THROWS_AS(flip(MK2A::from_pairs(WahlData(2, 1), WahlData(4, 3))), ContractViolation);
}

TEST_CASE("divisorial_data") {
    MK2A head = MK2A::from_pairs(WahlData(2, 1), WahlData(4, 3));
    CHECK(divisorial_data(head) == WahlData(2, 1));
    Invariants inv = mk2a_invariants(head);
    CHECK(inv.Omega == 2 * 1 - 1);
    CHECK(Integer(4) - inv.Omega == 3);
    CHECK(divisorial_data(MK1A(WahlData(4, 3), 2)) == WahlData(2, 1));
    CHECK_THROWS_AS(divisorial_data(MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4))), ContractViolation);

    MoriStep s = mori_step(head);
    CHECK_FALSE(s.is_flip());
    CHECK(s.k2_delta == 1);
    CHECK(mori_step(MK1A(WahlData(5, 2), 3)).k2_delta == 0);
}

TEST_CASE("Mori's criterion never terminates positively and flips transport invariants") {
    std::size_t flips = 0, divisorial = 0;
    for (const MK2A& n : all_mk2a(24)) {
        NeighborhoodClass k = classify_neighborhood(n);
        CHECK(k.trace.stop_value <= 0);
        for (std::size_t i = 1; i < k.trace.pairs.size(); ++i) {
            CHECK(k.trace.pairs[i].first > 0);
            CHECK(k.trace.pairs[i].second > 0);
            CHECK(k.trace.pairs[i].first < k.trace.pairs[i - 1].first);
        }
        Invariants inv = mk2a_invariants(n);
        if (inv.delta == 1) CHECK(k.type == NeighborhoodType::Flipping);

        Neighborhood init = initial_neighborhood(n);
        CHECK(invariants(init).equivalent(inv));
        CHECK(classify_neighborhood(init).type == k.type);

        if (k.type == NeighborhoodType::Flipping) {
            ++flips;
            EPRes p = flip(n);
            CHECK(same_numbers(inv, oracle_numbers(p)));
            CHECK(epres_invariants(p).equivalent(inv));
            CHECK(flip(init) == p);
        } else {
            ++divisorial;
            WahlData w = divisorial_data(n);
            CHECK(w.n == inv.delta);
            CHECK(inv.Delta == inv.delta * inv.delta);
            CHECK(same_class(inv.Delta, inv.Omega, inv.Delta, w.n * w.a - 1));
        }
    }
    MESSAGE("flipping " << flips << ", divisorial " << divisorial);
}

TEST_CASE("Mori's criterion on random neighborhoods up to 200") {
    std::mt19937_64 rng(20240611);
    auto pts = wahl_points(200, false);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    std::size_t tried = 0;
    while (tried < 3000) {
        const WahlData& f = pts[pick(rng)];
        const WahlData& e = pts[pick(rng)];
        if (f.n == e.n || mk2a_delta(f, e) <= 0) continue;
        std::optional<MK2A> n;
        try {
            n.emplace(f, e);
        } catch (const InvalidArgument&) {
            continue;
        }
        ++tried;
        NeighborhoodClass k = classify_neighborhood(*n);
        CHECK(k.trace.stop_value <= 0);
        if (k.type == NeighborhoodType::Flipping)
            CHECK(same_numbers(mk2a_invariants(*n), oracle_numbers(flip(*n))));
    }
}

TEST_CASE("Mori sequences: the divisorial family of [4]") {
    MoriSequenceGenerator gen = divisorial_family(WahlData(2, 1));
    MoriSequence seq;
    seq.delta = gen.delta();
    seq.type = gen.type();
    for (int i = 0; i < 3; ++i) seq.items.push_back(gen.next());
    seq.d_seq.assign(gen.d_seq().begin(), gen.d_seq().begin() + 4);
    seq.c_seq.assign(gen.c_seq().begin(), gen.c_seq().begin() + 4);
    CHECK(format_family(seq) == "[4]-[2,2*,6]-[2,2,2,2*,8]-[2,2,2,2,2,2*,10]");
    CHECK(seq.d_seq == std::vector<Integer>{2, 4, 6, 8});

    MoriSequence same = mori_sequence(MK2A::from_pairs(WahlData(2, 1), WahlData(4, 3)), 3);
    CHECK(same.items == seq.items);
    for (const auto& item : same.items) {
        CHECK(classify_neighborhood(item).type == NeighborhoodType::Divisorial);
        CHECK(divisorial_data(item) == WahlData(2, 1));
    }
}

TEST_CASE("Mori sequences: the two antiflip families of [4]-3") {
    EPRes p(WahlData(2, 1), 3, WahlData());
    std::vector<MK2A> seeds = antiflip_seeds(p);
    REQUIRE(seeds.size() == 2);
    std::set<std::string> families;
    for (const auto& seed : seeds) {
        MoriSequence seq = mori_sequence(seed, 3);
        families.insert(format_family(seq));
        for (const auto& item : seq.items) CHECK(flip(item).equivalent(p));
    }
    CHECK(families == std::set<std::string>{"[2*,5,3]-[2,3,2*,2,7,3]-[2,3,2,2,2,2*,5,7,3]",
                                            "[4]-[2,2*,5,4]-[2,2,3,2*,2,7,4]-[2,2,3,2,2,2,2*,5,7,4]"});
}

TEST_CASE("Mori sequences: uniformity") {
    for (const MK2A& n : all_mk2a(16)) {
        Neighborhood init = initial_neighborhood(n);
        Invariants inv = invariants(init);
        MoriSequenceGenerator gen(init);
        std::size_t count = gen.delta() == 1 ? 2 : 5;
        MoriSequence seq = mori_sequence(init, count);
        NeighborhoodType type = classify_neighborhood(init).type;
        CHECK(seq.type == type);
        for (std::size_t i = 0; i < seq.items.size(); ++i) {
            const MK2A& item = seq.items[i];
            CHECK(mk2a_invariants(item).equivalent(inv));
            CHECK(classify_neighborhood(item).type == type);
            CHECK(invariants(initial_neighborhood(item)).equivalent(inv));
            if (type == NeighborhoodType::Flipping) {
                EPRes p = flip(item);
                CHECK(p.equivalent(flip(init)));
            }
        }
        for (std::size_t i = 1; i + 1 < seq.d_seq.size(); ++i) {
            CHECK(seq.d_seq[i - 1] + seq.d_seq[i + 1] == seq.delta * seq.d_seq[i]);
            if (seq.delta > 1) CHECK(seq.d_seq[i] < seq.d_seq[i + 1]);
        }
        if (seq.delta == 1) continue;
        Integer last = 0;
        for (const auto& c : sequence_chains(seq)) {
            CHECK(as_wahl(c.chain()) == c.wahl);
            CHECK(c.wahl.n > last);
            last = c.wahl.n;
            if (c.bar) CHECK_NOTHROW(c.mk1a());
        }
    }
}

TEST_CASE("Mori sequences: delta = 1 and bad seeds") {
    MK2A sec5 = MK2A::from_pairs(WahlData(2, 1), WahlData(7, 4));
    MoriSequence two = mori_sequence(sec5, 2);
    CHECK(two.items.size() == 2);
    CHECK(two.d_seq == std::vector<Integer>{2, 7, 5});
    CHECK_THROWS_AS(mori_sequence(sec5, 3), InvalidArgument);
    CHECK_THROWS_AS(mori_sequence(sec5, 0), InvalidArgument);
    MoriSequenceGenerator gen(sec5);
    gen.next();
    gen.next();
    CHECK(gen.exhausted());
    CHECK_THROWS_AS(gen.next(), ContractViolation);

    MK2A ex21 = MK2A::from_pairs(WahlData(14, 5), WahlData(37, 24));
    CHECK_THROWS_AS(mori_sequence(ex21, 2), ContractViolation);
}

TEST_CASE("divisorial families") {
    MoriSequenceGenerator gen = divisorial_family(WahlData(3, 1));
    CHECK(gen.delta() == 3);
    for (int i = 0; i < 5; ++i) {
        MK2A item = gen.next();
        Invariants inv = mk2a_invariants(item);
        CHECK(inv.Delta == 9);
        CHECK(same_class(inv.Delta, inv.Omega, 9, 2));
        CHECK(classify_neighborhood(item).type == NeighborhoodType::Divisorial);
        CHECK(divisorial_data(item) == WahlData(3, 1));
    }
    for (const auto& w : wahl_points(12, false)) {
        MoriSequenceGenerator g = divisorial_family(w);
        for (int i = 0; i < 3; ++i) CHECK(divisorial_data(g.next()) == w);
    }
    CHECK_THROWS_AS(divisorial_family(WahlData()), InvalidArgument);
}

TEST_CASE("antiflip seeds invert flips") {
    std::size_t seen = 0;
    for (const MK2A& n : all_mk2a(16)) {
        if (classify_neighborhood(n).type != NeighborhoodType::Flipping) continue;
        EPRes p = flip(n);
        auto seeds = antiflip_seeds(p);
        REQUIRE_FALSE(seeds.empty());
        bool found = false;
        Neighborhood init = initial_neighborhood(n);
        for (const auto& s : seeds) {
            CHECK(flip(s).equivalent(p));
            if (mori_form(s) == mori_form(init)) found = true;
        }
        CHECK(found);
        ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("mk1A degenerations") {
    MK1A ex(WahlData(5, 2), 3);
    Degenerations d = degenerate_mk1a(ex);
    REQUIRE(d.left.has_value());
    CHECK_FALSE(d.right.has_value());
    CHECK(d.left->f() == WahlData(14, 9));
    CHECK(d.left->e() == WahlData(5, 2));

    Degenerations none = degenerate_mk1a(MK1A(WahlData(2, 1), 1));
    CHECK_FALSE(none.left.has_value());
    CHECK_FALSE(none.right.has_value());

    for (const auto& w : wahl_points(30, false)) {
        const std::size_t s = wahl_chain(w).size();
        for (std::size_t bar = 1; bar <= s; ++bar) {
            std::optional<MK1A> n;
            try {
                n.emplace(w, bar);
            } catch (const InvalidArgument&) {
                continue;
            }
            Invariants inv = mk1a_invariants(*n);
            NeighborhoodType type = classify_neighborhood(*n).type;
            Degenerations g = degenerate_mk1a(*n);
            CHECK(g.left.has_value() == (bar > 1));
            CHECK(g.right.has_value() == (bar < s));
            for (const auto& m : {g.left, g.right}) {
                if (!m) continue;
                Invariants x = mk2a_invariants(*m);
                CHECK(x.delta == inv.delta);
                CHECK(x.Delta == inv.Delta);
                CHECK(x.Omega == inv.Omega);
                CHECK(classify_neighborhood(*m).type == type);
            }
            CHECK(mk2a_invariants(to_mk2a(*n)).equivalent(inv));
        }
    }
}

TEST_CASE("special flip") {
    EPRes p = special_flip(MK1A(WahlData(5, 2), 3));
    CHECK(p == EPRes(WahlData(), 3, WahlData(2, 1)));
    Invariants inv = epres_invariants(p);
    CHECK(inv.Delta == 11);
    CHECK(same_class(11, inv.Omega, 11, 4));

    EPRes bare = special_flip(MK1A(WahlData(2, 1), 1));
    CHECK(bare == EPRes(WahlData(), 3, WahlData()));
    CHECK(bare.equivalent(flip(MK2A::from_pairs(WahlData(), WahlData(2, 1)))));

    CHECK_THROWS_AS(special_flip(MK1A(WahlData(4, 3), 2)), ContractViolation);

    for (const auto& w : wahl_points(50, false)) {
        MK1A n(w, wahl_chain(w).size());
        EPRes s = special_flip(n);
        CHECK(s.equivalent(flip(n)));
        Invariants x = epres_invariants(s);
        CHECK(x.delta == w.n - w.a);
        CHECK(x.Delta == w.n * w.a + 1);
        CHECK(same_class(x.Delta, x.Omega, x.Delta, w.a * w.a));
    }
}
