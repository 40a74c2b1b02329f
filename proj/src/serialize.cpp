#include "smmp/serialize.hpp"

#include "smmp/notation.hpp"

namespace smmp::json {

json of(const Integer& x) { return x.get_str(); }

json of(const Rational& x) { return x.get_str(); }

json of(const std::vector<Integer>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(of(x));
    return out;
}

json of(const Chain& c) { return of(c.entries()); }

json of(const CQS& c) {
    return {{"Delta", of(c.delta())}, {"Omega", of(c.omega())}, {"text", format_cqs(c)}};
}

json of(const WahlData& w) {
    return {{"n", of(w.n)}, {"a", of(w.a)}, {"singularity", format_cqs(w.singularity())}};
}

json of(const TData& t) {
    return {{"d", of(t.d)}, {"n", of(t.n)}, {"a", of(t.a)}, {"chain", format_chain(t_chain(t))}};
}

json of(const Invariants& inv) {
    return {{"delta", of(inv.delta)}, {"Delta", of(inv.Delta)}, {"Omega", of(inv.Omega)},
            {"KC", of(inv.KC)},       {"C2", of(inv.C2)}};
}

json of(const ZetaTrace& t) {
    json pairs = json::array();
    for (const auto& [m, a] : t.pairs) pairs.push_back({of(m), of(a)});
    return {{"delta", of(t.delta)},
            {"zetas", of(t.zetas)},
            {"pairs", pairs},
            {"stop_value", of(t.stop_value)},
            {"swapped", t.swapped}};
}

json of(const NeighborhoodClass& k) { return {{"type", to_string(k.type)}, {"trace", of(k.trace)}}; }

json of(const Subject& s) { return {{"kind", kind_name(s)}, {"notation", format(s)}}; }

json of(const MoriStep& step) {
    json out;
    if (step.is_flip()) {
        const EPRes& p = std::get<EPRes>(step.outcome);
        out = {{"kind", "flip"}, {"result", of(Subject(p))}, {"result_invariants", of(epres_invariants(p))}};
    } else {
        out = {{"kind", "divisorial"}, {"target", of(std::get<WahlData>(step.outcome))}};
    }
    out["k2_delta"] = std::to_string(step.k2_delta);
    return out;
}

json of(const MoriSequence& seq) {
    json items = json::array();
    for (const auto& it : seq.items) items.push_back(format(it));
    json chains = json::array();
    for (const auto& c : sequence_chains(seq)) chains.push_back(format_sequence_chain(c));
    return {{"delta", of(seq.delta)}, {"type", to_string(seq.type)}, {"items", items},
            {"chains", chains},       {"family", format_family(seq)}, {"d", of(seq.d_seq)},
            {"c", of(seq.c_seq)}};
}

json of(const Classification& c) {
    json alts = json::array();
    for (const auto& t : c.alternatives) alts.push_back(of(t));
    json out = {{"kind", to_string(c.kind)}, {"alternatives", alts}};
    out["t"] = c.t ? of(*c.t) : json(nullptr);
    return out;
}

}  // namespace smmp::json
