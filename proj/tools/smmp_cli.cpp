#include "smmp/error.hpp"
#include "smmp/hjcf.hpp"
#include "smmp/mori.hpp"
#include "smmp/neighborhoods.hpp"
#include "smmp/notation.hpp"
#include "smmp/pipeline.hpp"
#include "smmp/serialize.hpp"
#include "smmp/tsing.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace smmp;
namespace sj = smmp::json;
using Json = nlohmann::json;

namespace {

constexpr int kParseExit = 2;
constexpr int kContractExit = 3;

struct Options {
    bool json = false;
    std::size_t max_items = 3;
    std::string seed_file;
    std::vector<std::string> args;
};

Integer integer_arg(const std::string& s) {
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) throw InvalidArgument("expected an integer, got '" + s + "'");
    return x;
}

std::string triple(const Invariants& inv) {
    return "delta=" + to_string(inv.delta) + " Delta=" + to_string(inv.Delta) + " Omega=" + to_string(inv.Omega);
}

void emit(const Options& o, const Json& doc, const std::string& text) {
    if (o.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

void need(const Options& o, std::size_t lo, std::size_t hi, const char* usage) {
    if (o.args.size() < lo || o.args.size() > hi) throw InvalidArgument(std::string("usage: ") + usage);
}

void cmd_hj(const Options& o) {
    need(o, 1, 2, "hj M Q | hj [b1,...,bs]");
    Integer m, q;
    if (o.args.size() == 1) {
        ProjectiveValue v = evaluate(parse_chain(o.args[0]));
        m = v.p;
        q = v.q;
    } else {
        m = integer_arg(o.args[0]);
        q = integer_arg(o.args[1]);
    }
    HJSequences s = sequences(m, q);
    std::vector<Rational> disc = discrepancies(m, q);
    Chain rev = s.chain.reversed();
    Integer qinv = evaluate(rev).q;
    Json d = Json::array();
    for (const auto& x : disc) d.push_back(sj::of(x));
    Json doc = {{"m", sj::of(m)},           {"q", sj::of(q)},           {"chain", format_chain(s.chain)},
                {"reversed", format_chain(rev)}, {"q_inverse", sj::of(qinv)}, {"alpha", sj::of(s.alpha)},
                {"beta", sj::of(s.beta)},   {"gamma", sj::of(s.gamma)}, {"discrepancies", d}};
    std::ostringstream t;
    auto list = [](const auto& xs) {
        std::string out;
        for (const auto& x : xs) out += (out.empty() ? "" : ",") + x.get_str();
        return "(" + out + ")";
    };
    t << m << "/" << q << " = " << format_chain(s.chain) << "\n"
      << "reversed " << format_chain(rev) << " = " << m << "/" << qinv << "\n"
      << "alpha " << list(s.alpha) << "\nbeta  " << list(s.beta) << "\ngamma " << list(s.gamma) << "\n"
      << "discrepancies " << list(disc) << "\n";
    emit(o, doc, t.str());
}

void cmd_classify(const Options& o) {
    need(o, 1, 2, "classify 1/D(1,O) | classify D O | classify [b1,...,bs]");
    CQS c = o.args.size() == 2 ? CQS(integer_arg(o.args[0]), integer_arg(o.args[1]))
            : o.args[0].rfind('[', 0) == 0 ? to_cqs(parse_chain(o.args[0]))
                                           : parse_cqs(o.args[0]);
    Classification k = classify(c);
    Json doc = {{"singularity", sj::of(c)}, {"classification", sj::of(k)}};
    std::ostringstream t;
    t << format_cqs(c) << " " << format_chain(expand(c.delta(), c.omega())) << ": " << to_string(k.kind);
    if (k.t) t << "(d=" << k.t->d << ",n=" << k.t->n << ",a=" << k.t->a << ")";
    t << "\n";
    for (std::size_t i = 1; i < k.alternatives.size(); ++i)
        t << "  also T(d=" << k.alternatives[i].d << ",n=" << k.alternatives[i].n << ",a=" << k.alternatives[i].a
          << ")\n";
    emit(o, doc, t.str());
}

void cmd_wahl(const Options& o) {
    need(o, 2, 2, "wahl N A");
    WahlData w(integer_arg(o.args[0]), integer_arg(o.args[1]));
    Chain c = wahl_chain(w);
    Json doc = sj::of(w);
    doc["chain"] = format_chain(c);
    doc["reversed"] = format_chain(wahl_chain(w.reversed()));
    emit(o, doc, format_cqs(w.singularity()) + " " + format_chain(c) + "\n");
}

void cmd_tchain(const Options& o) {
    need(o, 3, 3, "tchain D N A");
    TData t(integer_arg(o.args[0]), integer_arg(o.args[1]), integer_arg(o.args[2]));
    Json doc = sj::of(t);
    doc["singularity"] = sj::of(t.singularity());
    emit(o, doc, format_cqs(t.singularity()) + " " + format_chain(t_chain(t)) + "\n");
}

void cmd_tblowup(const Options& o) {
    if (o.args.empty() || o.args.size() % 2 != 0 || o.args.size() > 4)
        throw InvalidArgument("usage: tblowup D SCRIPT [D2 SCRIPT2]  (SCRIPT = node index then L/R steps, e.g. 0LR)");
    std::vector<TBlowupResult> fibers;
    for (std::size_t i = 0; i < o.args.size(); i += 2)
        fibers.push_back(t_blowup(integer_arg(o.args[i]), BlowupScript::parse(o.args[i + 1])));
    Json out = Json::array();
    std::ostringstream t;
    for (const auto& f : fibers) {
        TData td = f.t_data();
        out.push_back({{"d", sj::of(f.d)},
                       {"chain", format_chain(f.chain)},
                       {"nu", sj::of(f.nu)},
                       {"n", sj::of(f.n)},
                       {"a", sj::of(f.a)},
                       {"blowups", f.blowups},
                       {"t", sj::of(td)},
                       {"state", Json::parse(f.state.to_json())}});
        t << "I_" << f.d << ": " << format_chain(f.chain) << " = " << format_cqs(td.singularity()) << "  n=" << f.n
          << " a=" << f.a << "  nu=";
        for (std::size_t j = 0; j < f.nu.size(); ++j) t << (j ? "," : "") << f.nu[j];
        t << "\n";
    }
    Json doc = {{"fibers", out}};
    KodairaResult kr = kodaira_case(fibers);
    doc["kodaira"] = {{"case", to_string(kr.kodaira)}, {"coefficient", sj::of(kr.coefficient)}};
    t << "kodaira " << to_string(kr.kodaira) << " coefficient " << kr.coefficient;
    auto dt = dolgachev_type(fibers);
    if (dt) {
        doc["dolgachev_type"] = {sj::of(dt->first), sj::of(dt->second)};
        t << "  dolgachev type " << dt->first << "," << dt->second;
    }
    t << "\n";
    emit(o, doc, t.str());
}

void cmd_invariants(const Options& o) {
    need(o, 1, 1, "invariants NOTATION");
    Subject s = parse_subject(o.args[0]);
    Invariants inv = invariants(s);
    CQS oracle = oracle_invariants(s);
    Json doc = sj::of(s);
    doc["invariants"] = sj::of(inv);
    doc["oracle"] = sj::of(oracle);
    doc["composite_chain"] = format_chain(composite_chain(s));
    std::ostringstream t;
    t << format(s) << "  " << kind_name(s) << "  " << triple(inv) << "  KC=" << inv.KC << " C2=" << inv.C2 << "\n";
    if (!std::holds_alternative<EPRes>(s)) {
        Neighborhood n = std::holds_alternative<MK1A>(s) ? Neighborhood(std::get<MK1A>(s)) : Neighborhood(std::get<MK2A>(s));
        NeighborhoodClass k = classify_neighborhood(n);
        doc["classification"] = sj::of(k);
        doc["initial"] = format(initial_neighborhood(n));
        t << to_string(k.type) << "  initial " << format(initial_neighborhood(n)) << "\n";
    }
    emit(o, doc, t.str());
}

void cmd_flip(const Options& o) {
    need(o, 1, 1, "flip NEIGHBORHOOD");
    Neighborhood n = parse_neighborhood(o.args[0]);
    NeighborhoodClass k = classify_neighborhood(n);
    EPRes p = flip(n);
    Json doc = {{"input", format(n)},
                {"invariants", sj::of(invariants(n))},
                {"classification", sj::of(k)},
                {"initial", format(initial_neighborhood(n))},
                {"result", sj::of(Subject(p))},
                {"result_invariants", sj::of(epres_invariants(p))},
                {"k2_delta", "0"}};
    std::string text = format(n) + " -> " + format(p) + "  " + triple(epres_invariants(p)) + "\n";
    if (std::holds_alternative<MK1A>(n) && std::get<MK1A>(n).bar() == std::get<MK1A>(n).length()) {
        EPRes sp = special_flip(std::get<MK1A>(n));
        doc["special_flip"] = format(sp);
        text += "special flip " + format(sp) + "\n";
    }
    emit(o, doc, text);
}

void cmd_contract(const Options& o) {
    need(o, 1, 1, "contract NEIGHBORHOOD");
    Neighborhood n = parse_neighborhood(o.args[0]);
    WahlData w = divisorial_data(n);
    Json doc = {{"input", format(n)},
                {"invariants", sj::of(invariants(n))},
                {"classification", sj::of(classify_neighborhood(n))},
                {"target", sj::of(w)},
                {"k2_delta", "1"}};
    emit(o, doc,
         format(n) + " -> " + format_cqs(w.singularity()) + " Wahl(" + to_string(w.n) + "," + to_string(w.a) +
             ")  K^2 +1\n");
}

Json sequence_report(const MoriSequence& seq, std::ostringstream& t) {
    t << "delta=" << seq.delta << " " << to_string(seq.type) << "\n  " << format_family(seq) << "\n";
    for (const auto& it : seq.items) t << "  " << format(it) << "\n";
    return sj::of(seq);
}

void cmd_mori_seq(const Options& o) {
    need(o, 1, 1, "mori-seq INITIAL-NEIGHBORHOOD|P-RESOLUTION [--max-items K]");
    Subject s = parse_subject(o.args[0]);
    std::ostringstream t;
    Json seqs = Json::array();
    if (std::holds_alternative<EPRes>(s)) {
        auto seeds = antiflip_seeds(std::get<EPRes>(s));
        if (seeds.empty()) throw ContractViolation("no antiflip seed found for " + format(s));
        for (const auto& seed : seeds) seqs.push_back(sequence_report(mori_sequence(seed, o.max_items), t));
    } else {
        Neighborhood n = std::holds_alternative<MK1A>(s) ? Neighborhood(std::get<MK1A>(s)) : Neighborhood(std::get<MK2A>(s));
        seqs.push_back(sequence_report(mori_sequence(n, o.max_items), t));
    }
    emit(o, {{"input", format(s)}, {"sequences", seqs}}, t.str());
}

void cmd_div_family(const Options& o) {
    need(o, 2, 2, "div-family N A [--max-items K]");
    WahlData w(integer_arg(o.args[0]), integer_arg(o.args[1]));
    MoriSequenceGenerator gen = divisorial_family(w);
    MoriSequence seq;
    seq.delta = gen.delta();
    seq.type = gen.type();
    for (std::size_t i = 0; i < o.max_items && !gen.exhausted(); ++i) seq.items.push_back(gen.next());
    seq.d_seq.assign(gen.d_seq().begin(), gen.d_seq().begin() + static_cast<std::ptrdiff_t>(seq.items.size() + 1));
    seq.c_seq.assign(gen.c_seq().begin(), gen.c_seq().begin() + static_cast<std::ptrdiff_t>(seq.items.size() + 1));
    std::ostringstream t;
    Json doc = sequence_report(seq, t);
    doc["target"] = sj::of(w);
    emit(o, doc, t.str());
}

void cmd_degenerate(const Options& o) {
    need(o, 1, 1, "degenerate MK1A");
    Notation x = parse(o.args[0]);
    if (!std::holds_alternative<MK1A>(x)) throw SemanticError("degenerate expects an mk1A such as [2,2*,6]");
    const MK1A& n = std::get<MK1A>(x);
    Degenerations d = degenerate_mk1a(n);
    Json doc = {{"input", format(n)}, {"invariants", sj::of(mk1a_invariants(n))}};
    std::string text = format(n) + "  " + triple(mk1a_invariants(n)) + "\n";
    auto side = [&](const char* key, const std::optional<MK2A>& m) {
        if (!m) {
            doc[key] = nullptr;
            return;
        }
        doc[key] = {{"notation", format(*m)}, {"invariants", sj::of(mk2a_invariants(*m))}};
        text += std::string(key) + "  " + format(*m) + "  " + triple(mk2a_invariants(*m)) + "\n";
    };
    side("left", d.left);
    side("right", d.right);
    emit(o, doc, text);
}

void cmd_pipeline(const Options& o) {
    std::string script;
    std::string path = o.seed_file;
    if (path.empty() && !o.args.empty()) path = o.args[0];
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot read script file '" + path + "'");
        script.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        script.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    PipelineState st = run_pipeline(script);
    std::cout << render(st, o.json ? RenderFormat::Json : RenderFormat::Text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for Wahl singularities, extremal neighborhoods, flips and Mori sequences"};
    app.require_subcommand(1);
    // Flags may follow the subcommand.
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Print JSON instead of text");
    app.add_option("--max-items", o.max_items, "Number of Mori-sequence items")->check(CLI::PositiveNumber);
    app.add_option("--seed-file", o.seed_file, "Pipeline script file, one statement per line");

    struct Entry {
        const char* name;
        const char* help;
        void (*run)(const Options&);
    };
    const Entry entries[] = {
        {"hj", "Continued fraction m/q, alpha/beta/gamma sequences and discrepancies", cmd_hj},
        {"classify", "Classify a cyclic quotient singularity as du Val, Wahl, T or plain", cmd_classify},
        {"wahl", "Resolution chain of 1/n^2(1,na-1)", cmd_wahl},
        {"tchain", "Resolution chain of 1/(dn^2)(1,dna-1)", cmd_tchain},
        {"tblowup", "T-blow-up of one or two I_d fibers", cmd_tblowup},
        {"invariants", "delta, Delta, Omega, K.C, C^2 of a neighborhood or P-resolution", cmd_invariants},
        {"flip", "Flip of a neighborhood of flipping type", cmd_flip},
        {"contract", "Divisorial contraction of a neighborhood of divisorial type", cmd_contract},
        {"mori-seq", "Mori sequence from an initial neighborhood, or both families over a P-resolution", cmd_mori_seq},
        {"div-family", "Divisorial family contracting to a Wahl singularity", cmd_div_family},
        {"degenerate", "mk2A degenerations of an mk1A", cmd_degenerate},
        {"pipeline", "Run a script of flips and contractions", cmd_pipeline},
    };
    void (*selected)(const Options&) = nullptr;
    std::array<std::string, 6> raw;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        // One scalar option per position: a vector option would split "[a,b]" into a list.
        for (std::size_t i = 0; i < raw.size(); ++i) sub->add_option("arg" + std::to_string(i + 1), raw[i]);
        sub->callback([&selected, &o, &raw, run = e.run] {
            for (auto& a : raw)
                if (!a.empty()) o.args.push_back(a);
            selected = run;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseExit;
    }

    try {
        selected(o);
    } catch (const PipelineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.cause() == PipelineError::Cause::Contract ? kContractExit : kParseExit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseExit;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseExit;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseExit;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kContractExit;
    } catch (const DegenerateChain& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kContractExit;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
