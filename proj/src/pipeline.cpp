#include "smmp/pipeline.hpp"

#include "smmp/notation.hpp"
#include "smmp/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smmp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

struct Statement {
    std::size_t line;
    std::string_view text;
};

std::vector<Statement> split(std::string_view script) {
    std::vector<Statement> out;
    std::size_t line = 1;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view piece = script.substr(start, end - start);
        if (auto hash = piece.find('#'); hash != std::string_view::npos) piece = piece.substr(0, hash);
        piece = trim(piece);
        if (!piece.empty()) out.push_back({line, piece});
    };
    for (std::size_t i = 0; i < script.size(); ++i) {
        if (script[i] == ';' || script[i] == '\n') {
            flush(i);
            start = i + 1;
            if (script[i] == '\n') ++line;
        }
    }
    flush(script.size());
    return out;
}

Neighborhood as_neighborhood(const Subject& s, const std::string& name) {
    if (std::holds_alternative<MK1A>(s)) return std::get<MK1A>(s);
    if (std::holds_alternative<MK2A>(s)) return std::get<MK2A>(s);
    throw ContractViolation(name + " is a P-resolution, not an extremal neighborhood");
}

std::string invariant_triple(const Invariants& inv) {
    return "(delta,Delta,Omega)=(" + to_string(inv.delta) + "," + to_string(inv.Delta) + "," +
           to_string(inv.Omega) + ")";
}

std::string pairs_text(const ZetaTrace& t) {
    std::string out;
    for (const auto& [m, a] : t.pairs) {
        if (!out.empty()) out += ',';
        out += "(" + to_string(m) + "," + to_string(a) + ")";
    }
    return out;
}

}  // namespace

const Subject* PipelineState::find(std::string_view name) const {
    for (const auto& [n, s] : neighborhoods)
        if (n == name) return &s;
    return nullptr;
}

PipelineError::PipelineError(Cause cause, std::size_t step, std::size_t line, const std::string& what)
    : Error((step ? "step " + std::to_string(step) + " (line " + std::to_string(line) + "): "
                  : "line " + std::to_string(line) + ": ") +
            what),
      cause_(cause),
      step_(step),
      line_(line) {}

Invariants subject_invariants(const Subject& s) {
    if (std::holds_alternative<EPRes>(s)) return epres_invariants(std::get<EPRes>(s));
    Neighborhood n = std::holds_alternative<MK1A>(s) ? Neighborhood(std::get<MK1A>(s)) : Neighborhood(std::get<MK2A>(s));
    return mk2a_invariants(mori_form(n));
}

PipelineState run_pipeline(std::string_view script) {
    PipelineState st;
    std::size_t step = 0;
    for (const Statement& stmt : split(script)) {
        if (auto eq = stmt.text.find('='); eq != std::string_view::npos) {
            std::string name(trim(stmt.text.substr(0, eq)));
            try {
                if (!valid_name(name)) throw SemanticError("invalid name '" + name + "'");
                Subject value = parse_subject(stmt.text.substr(eq + 1));
                auto it = std::find_if(st.neighborhoods.begin(), st.neighborhoods.end(),
                                       [&](const auto& p) { return p.first == name; });
                if (it != st.neighborhoods.end())
                    it->second = value;
                else
                    st.neighborhoods.emplace_back(name, value);
            } catch (const ParseError& e) {
                throw PipelineError(PipelineError::Cause::Parse, 0, stmt.line, e.what());
            } catch (const SemanticError& e) {
                throw PipelineError(PipelineError::Cause::Parse, 0, stmt.line, e.what());
            }
            continue;
        }

        ++step;
        std::vector<std::string_view> w = words(stmt.text);
        const std::string op(w[0]);
        auto parse_fail = [&](const std::string& what) {
            return PipelineError(PipelineError::Cause::Parse, step, stmt.line, what);
        };
        const bool known = op == "flip" || op == "contract" || op == "classify" || op == "mori-seq";
        if (!known) throw parse_fail("unknown operation '" + op + "'");
        const std::size_t arity = op == "mori-seq" ? 3 : 2;
        if (w.size() != arity) throw parse_fail(op + " expects " + std::to_string(arity - 1) + " argument(s)");

        LogEntry entry;
        entry.step = step;
        entry.op = op;
        entry.name = std::string(w[1]);
        auto slot = std::find_if(st.neighborhoods.begin(), st.neighborhoods.end(),
                                 [&](const auto& p) { return p.first == entry.name; });
        if (slot == st.neighborhoods.end()) throw parse_fail("unknown name '" + entry.name + "'");

        std::size_t count = 0;
        if (op == "mori-seq") {
            const std::string k(w[2]);
            if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
                k.size() > 6 || std::stoul(k) == 0)
                throw parse_fail("mori-seq expects a positive item count, got '" + k + "'");
            count = std::stoul(k);
        }

        const Subject subject = slot->second;
        entry.input = format(subject);
        entry.invariants = subject_invariants(subject);
        try {
            if (op == "mori-seq") {
                if (std::holds_alternative<EPRes>(subject)) {
                    auto seeds = antiflip_seeds(std::get<EPRes>(subject));
                    if (seeds.empty()) throw ContractViolation("no antiflip seed found for " + entry.input);
                    for (const auto& seed : seeds) entry.sequences.push_back(mori_sequence(seed, count));
                } else {
                    entry.sequences.push_back(mori_sequence(as_neighborhood(subject, entry.name), count));
                }
            } else {
                Neighborhood n = as_neighborhood(subject, entry.name);
                entry.classification = classify_neighborhood(n);
                if (op == "flip") {
                    entry.outcome = MoriStep{flip(n), 0};
                    slot->second = std::get<EPRes>(entry.outcome->outcome);
                } else if (op == "contract") {
                    entry.outcome = MoriStep{divisorial_data(n), 1};
                    st.neighborhoods.erase(slot);
                }
            }
        } catch (const ContractViolation& e) {
            throw PipelineError(PipelineError::Cause::Contract, step, stmt.line, e.what());
        } catch (const InvalidArgument& e) {
            throw PipelineError(PipelineError::Cause::Contract, step, stmt.line, e.what());
        } catch (const DegenerateChain& e) {
            throw PipelineError(PipelineError::Cause::Contract, step, stmt.line, e.what());
        }
        if (entry.outcome) entry.k2_delta = entry.outcome->k2_delta;
        st.k2 += entry.k2_delta;
        st.log.push_back(std::move(entry));
    }
    return st;
}

namespace {

std::string render_text(const PipelineState& st) {
    std::ostringstream out;
    out << "neighborhoods:\n";
    for (const auto& [name, s] : st.neighborhoods)
        out << "  " << name << " = " << format(s) << "  " << kind_name(s) << "  "
            << invariant_triple(subject_invariants(s)) << "\n";
    out << "log:\n";
    for (const auto& e : st.log) {
        out << "  " << e.step << ". " << e.op << " " << e.name << ": " << e.input;
        if (e.outcome) {
            if (e.outcome->is_flip())
                out << " -> " << format(std::get<EPRes>(e.outcome->outcome));
            else {
                const WahlData& w = std::get<WahlData>(e.outcome->outcome);
                out << " -> " << format_cqs(w.singularity()) << " Wahl(" << w.n << "," << w.a << ")";
            }
        }
        out << "  " << invariant_triple(e.invariants);
        if (e.op == "classify" && e.classification)
            out << "  " << to_string(e.classification->type) << " pairs " << pairs_text(e.classification->trace)
                << " stop " << e.classification->trace.stop_value;
        out << "  k2 " << (e.k2_delta >= 0 ? "+" : "") << e.k2_delta << "\n";
        for (const auto& seq : e.sequences) out << "     " << format_family(seq) << "\n";
    }
    out << "k2: " << st.k2 << "\n";
    return out.str();
}

std::string render_json(const PipelineState& st) {
    namespace sj = smmp::json;
    using nlohmann::json;
    json hoods = json::array();
    for (const auto& [name, s] : st.neighborhoods) {
        json h = sj::of(s);
        h["name"] = name;
        h["invariants"] = sj::of(subject_invariants(s));
        hoods.push_back(h);
    }
    json log = json::array();
    for (const auto& e : st.log) {
        json r = {{"step", e.step},
                  {"op", e.op},
                  {"name", e.name},
                  {"input", e.input},
                  {"invariants", sj::of(e.invariants)},
                  {"k2_delta", sj::of(e.k2_delta)}};
        if (e.classification) r["classification"] = sj::of(*e.classification);
        if (e.outcome) r["outcome"] = sj::of(*e.outcome);
        if (!e.sequences.empty()) {
            json seqs = json::array();
            for (const auto& seq : e.sequences) seqs.push_back(sj::of(seq));
            r["sequences"] = seqs;
        }
        log.push_back(r);
    }
    json doc = {{"neighborhoods", hoods}, {"k2", sj::of(st.k2)}, {"log", log}};
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const PipelineState& state, RenderFormat format) {
    return format == RenderFormat::Json ? render_json(state) : render_text(state);
}

}  // namespace smmp
