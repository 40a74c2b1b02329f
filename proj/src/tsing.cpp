#include "smmp/tsing.hpp"

#include "smmp/error.hpp"

#include <algorithm>
#include <cctype>

namespace smmp {

WahlData::WahlData(Integer n_, Integer a_) : n(std::move(n_)), a(std::move(a_)) {
    if (n == 1 && a == 1) return;
    if (n < 2 || a <= 0 || a >= n || gcd(n, a) != 1)
        throw InvalidArgument("Wahl data needs n >= 2, 0 < a < n, gcd(n,a) = 1; got (" + to_string(n) + "," +
                              to_string(a) + ")");
}

CQS WahlData::singularity() const {
    if (smooth()) return CQS(1, 0);
    return CQS(n * n, n * a - 1);
}

WahlData WahlData::reversed() const {
    if (smooth()) return *this;
    return WahlData(n, n - a);
}

TData::TData(Integer d_, Integer n_, Integer a_) : d(std::move(d_)), n(std::move(n_)), a(std::move(a_)) {
    if (d < 1) throw InvalidArgument("T data needs d >= 1");
    if (n == 1 && a == 1) {
        if (d < 2) throw InvalidArgument("T data (1,1,1) is a smooth point");
        return;
    }
    if (n < 2 || a <= 0 || a >= n || gcd(n, a) != 1)
        throw InvalidArgument("T data needs n >= 2, 0 < a < n, gcd(n,a) = 1; got (" + to_string(d) + "," +
                              to_string(n) + "," + to_string(a) + ")");
}

CQS TData::singularity() const { return CQS(d * n * n, d * n * a - 1); }

Chain wahl_chain(const WahlData& w) {
    if (w.smooth()) return Chain();
    return expand(w.n * w.n, w.n * w.a - 1);
}

Chain t_chain(const TData& t) { return expand(t.d * t.n * t.n, t.d * t.n * t.a - 1); }

std::optional<WahlData> as_wahl(const Chain& chain) {
    if (!chain.is_reduced()) return std::nullopt;
    ProjectiveValue v = evaluate(chain);
    Integer n = exact_sqrt(v.p);
    if (n < 2 || !divides(n, v.q + 1)) return std::nullopt;
    Integer a = (v.q + 1) / n;
    if (a <= 0 || a >= n || gcd(n, a) != 1) return std::nullopt;
    return WahlData(n, a);
}

std::optional<WahlData> Classification::wahl() const {
    if (kind != Kind::Wahl || !t) return std::nullopt;
    return WahlData(t->n, t->a);
}

std::string to_string(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::DuValA: return "DuValA";
        case Classification::Kind::Wahl: return "Wahl";
        case Classification::Kind::T: return "T";
        case Classification::Kind::PlainCQS: return "PlainCQS";
    }
    return "?";
}

Classification classify(const CQS& cqs) {
    Classification out;
    const Integer& delta = cqs.delta();
    if (delta < 2) return out;
    if (cqs.omega() == delta - 1) {
        out.kind = Classification::Kind::DuValA;
        return out;
    }
    const Integer omegas[2] = {cqs.omega(), mod_inverse(cqs.omega(), delta)};
    for (Integer n = 2; n * n <= delta; ++n) {
        Integer nn = n * n;
        if (!divides(nn, delta)) continue;
        Integer d = delta / nn;
        for (const auto& w : omegas) {
            // w = dna - 1 with 0 < a < n
            Integer dn = d * n;
            if (!divides(dn, w + 1)) continue;
            Integer a = (w + 1) / dn;
            if (a <= 0 || a >= n || gcd(n, a) != 1) continue;
            out.alternatives.emplace_back(d, n, a);
            break;
        }
    }
    if (out.alternatives.empty()) return out;
    std::reverse(out.alternatives.begin(), out.alternatives.end());
    out.t = out.alternatives.front();
    out.kind = out.t->d == 1 ? Classification::Kind::Wahl : Classification::Kind::T;
    return out;
}

FiberState FiberState::initial(const Integer& d) {
    if (d < 1) throw InvalidArgument("I_d needs d >= 1");
    FiberState s;
    if (d == 1) {
        s.components.push_back({0, 1});
        return s;
    }
    if (!d.fits_ulong_p() || d > 100000) throw InvalidArgument("I_d with d = " + to_string(d) + " is too long");
    s.components.assign(d.get_ui(), FiberComponent{-2, 1});
    return s;
}

bool FiberState::is_fiber_pullback() const {
    const std::size_t k = components.size();
    if (k == 1) return components[0].selfint == 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& prev = components[(i + k - 1) % k];
        const auto& next = components[(i + 1) % k];
        if (components[i].selfint * components[i].mult + prev.mult + next.mult != 0) return false;
    }
    return true;
}

std::string FiberState::to_json() const {
    std::string out = "{\"components\":[";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ',';
        out += "{\"selfint\":\"" + components[i].selfint.get_str() + "\",\"mult\":\"" +
               components[i].mult.get_str() + "\"}";
    }
    out += "],\"marker\":";
    out += marker ? std::to_string(*marker) : std::string("null");
    out += '}';
    return out;
}

BlowupScript BlowupScript::parse(std::string_view text) {
    BlowupScript s;
    std::size_t i = 0;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) s.node = std::stoul(std::string(text.substr(start, i - start)));
    for (; i < text.size(); ++i) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (c != 'L' && c != 'R') throw ParseError("blow-up script expects L or R", i);
        s.steps.push_back(c);
    }
    return s;
}

namespace {

// Inserts a (-1)-curve between positions i and i+1 (cyclic) and returns its index.
std::size_t blow_up_node(FiberState& st, std::size_t i) {
    auto& comps = st.components;
    const std::size_t k = comps.size();
    const std::size_t j = (i + 1) % k;
    Integer mult = comps[i].mult + comps[j].mult;
    comps[i].selfint -= 1;
    comps[j].selfint -= 1;
    auto pos = comps.begin() + static_cast<std::ptrdiff_t>(i + 1);
    comps.insert(pos, FiberComponent{-1, mult});
    return i + 1;
}

}  // namespace

TBlowupResult t_blowup(const Integer& d, const BlowupScript& script) {
    TBlowupResult r;
    r.d = d;
    r.state = FiberState::initial(d);
    FiberState& st = r.state;

    if (d == 1) {
        if (script.node != 0) throw InvalidArgument("I_1 has a single node; node index must be 0");
        // the node is an ordinary double point of the only component
        st.components[0].selfint -= 4;
        st.components.push_back({-1, 2});
        st.marker = 1;
    } else {
        if (script.node >= st.components.size())
            throw InvalidArgument("node index " + std::to_string(script.node) + " out of range for I_" + to_string(d));
        st.marker = blow_up_node(st, script.node);
    }
    r.blowups = 1;

    for (char step : script.steps) {
        const std::size_t k = st.components.size();
        const std::size_t m = *st.marker;
        if (step == 'L') {
            std::size_t prev = (m + k - 1) % k;
            std::size_t idx = blow_up_node(st, prev);
            st.marker = idx;
        } else if (step == 'R') {
            st.marker = blow_up_node(st, m);
        } else {
            throw InvalidArgument(std::string("unknown blow-up step '") + step + "'");
        }
        ++r.blowups;
    }

    if (!st.is_fiber_pullback()) throw InternalError("T-blow-up left a non-fiber configuration");

    const auto& comps = st.components;
    const std::size_t k = comps.size();
    const std::size_t m = *st.marker;
    std::vector<Integer> entries;
    for (std::size_t step = 1; step < k; ++step) {
        const auto& c = comps[(m + step) % k];
        entries.push_back(-c.selfint);
        r.nu.push_back(c.mult);
    }
    r.nu.push_back(comps[m].mult);
    r.chain = Chain(std::move(entries));
    r.n = comps[m].mult;
    r.a = r.n - r.nu[r.nu.size() - 2];
    return r;
}

std::string to_string(KodairaCase c) {
    switch (c) {
        case KodairaCase::MinusInfinity: return "minus_infinity";
        case KodairaCase::Zero: return "zero";
        case KodairaCase::One: return "one";
    }
    return "?";
}

KodairaResult kodaira_case(const std::vector<TBlowupResult>& fibers) {
    if (fibers.empty() || fibers.size() > 2)
        throw InvalidArgument("Kodaira case needs one or two T-blown-up fibers, got " + std::to_string(fibers.size()));
    if (fibers.size() == 1) return {KodairaCase::MinusInfinity, make_rational(-1, fibers[0].n)};
    const auto& f1 = fibers[0];
    const auto& f2 = fibers[1];
    Rational coeff = Rational(1) - make_rational(1, f1.n) - make_rational(1, f2.n);
    coeff.canonicalize();
    if (f1.blowups == 1 && f2.blowups == 1) return {KodairaCase::Zero, coeff};
    return {KodairaCase::One, coeff};
}

std::optional<std::pair<Integer, Integer>> dolgachev_type(const std::vector<TBlowupResult>& fibers) {
    if (kodaira_case(fibers).kodaira != KodairaCase::One) return std::nullopt;
    if (gcd(fibers[0].n, fibers[1].n) != 1) return std::nullopt;
    return std::make_pair(fibers[0].n, fibers[1].n);
}

}  // namespace smmp
