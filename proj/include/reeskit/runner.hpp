#pragma once

#include <chrono>
#include <sstream>

#include "detclosure.hpp"
#include "report.hpp"
#include "session.hpp"

namespace reeskit {

// Options shared by the CLI and the suite runner. Unset numeric fields are
// negative; string fields empty.
struct RunFlags {
    std::string ideal;   // --ideal
    std::string J;       // --J
    std::string I;       // --I
    std::string sub;     // --sub (vv)
    std::string poly;    // --poly
    std::string by;      // --by (quotient)
    std::string drop;    // --drop, comma-separated variables
    std::string order;   // --order for gb
    int n = -1;          // --n single degree
    int p_deg = -1;      // --p degree for thmB / obstructions
    int cap = 8;         // --cap
    int rounds = 10;     // --rounds
    int y_index = 0;     // --y-index, 1-based; 0 = use session/default
    int64_t field = 0;   // --field override
};

namespace detail {

inline std::vector<std::string> poly_strings(const std::vector<Polynomial>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.to_string());
    return out;
}

inline IdealSpec spec_with_flags(const SessionFile& sf, const std::string& name,
                                 const RunFlags& flags) {
    IdealSpec spec = sf.ideal(name);
    if (flags.y_index > 0) {
        if (flags.y_index > static_cast<int>(spec.gens.size()))
            throw std::invalid_argument("--y-index out of range for ideal '" + name + "'");
        spec.y_index = flags.y_index - 1;
    }
    return spec;
}

// xs = the reduction generators: J when given, otherwise I minus its y-role
inline std::vector<Polynomial> xs_of(const SessionFile& sf, const RunFlags& flags,
                                     const IdealSpec& I) {
    if (!flags.J.empty()) return sf.ideal(flags.J).gens;
    IdealSpec perm = I.with_y_last();
    return std::vector<Polynomial>(perm.gens.begin(), perm.gens.end() - 1);
}

} // namespace detail

inline Report run_command(const std::string& cmd, const SessionFile& sf_in,
                          const RunFlags& flags, const std::string& input_text) {
    auto t0 = std::chrono::steady_clock::now();
    SessionFile sf = sf_in;
    if (flags.field > 0 && flags.field != sf.p) sf = reparse_with_field(sf_in, flags.field);

    Report rep;
    rep.command = cmd;
    rep.input_hash = fnv1a_hex(input_text + "|field=" + std::to_string(sf.p));
    PresentedRing ring = sf.ring();

    auto need = [&](const std::string& v, const char* what) -> const std::string& {
        if (v.empty()) throw std::invalid_argument(std::string("missing required flag ") + what);
        return v;
    };

    if (cmd == "gb") {
        IdealSpec I = sf.ideal(need(flags.ideal, "--ideal"));
        MonomialOrder ord = flags.order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
        IdealHandle H(ring.reg, ring.p, I.gens, ord);
        rep.payload["ideal"] = flags.ideal;
        rep.payload["order"] = flags.order.empty() ? "degrevlex" : flags.order;
        rep.payload["basis"] = detail::poly_strings(H.groebner());
    } else if (cmd == "member") {
        IdealSpec I = sf.ideal(need(flags.ideal, "--ideal"));
        Polynomial f = parse_polynomial(ring.reg, ring.p, need(flags.poly, "--poly"));
        rep.payload["ideal"] = flags.ideal;
        rep.payload["poly"] = f.to_string();
        rep.payload["member"] = member(f, ring.ambient(I.gens));
    } else if (cmd == "elim") {
        IdealSpec I = sf.ideal(need(flags.ideal, "--ideal"));
        std::vector<int> drop;
        std::stringstream ss(need(flags.drop, "--drop"));
        std::string name;
        while (std::getline(ss, name, ',')) drop.push_back(ring.reg->index_of(name));
        std::vector<int> rest;
        for (int i = 0; i < ring.reg->size(); ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) rest.push_back(i);
        MonomialOrder ord = MonomialOrder::block(
            {MonomialOrder::degrevlex(), MonomialOrder::degrevlex()}, {drop, rest});
        std::vector<Polynomial> gens = I.gens;
        for (const auto& r : ring.relations) gens.push_back(r);
        IdealHandle H(ring.reg, ring.p, gens, ord);
        rep.payload["ideal"] = flags.ideal;
        rep.payload["drop"] = flags.drop;
        rep.payload["generators"] = detail::poly_strings(elimination_ideal(H, drop).generators());
    } else if (cmd == "rees") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ReesPresentation P = rees_ideal(ring, I);
        rep.payload["ideal"] = flags.ideal;
        Json tv = Json::array();
        for (int i = 0; i < P.n_gens(); ++i) tv.push_back(P.t_name(i));
        rep.payload["t_vars"] = tv;
        Json gens = Json::array();
        std::map<int, int> counts;
        for (const auto& g : P.q_gens) {
            Json e;
            e["degree"] = g.t_degree();
            e["poly"] = g.to_string();
            gens.push_back(e);
            counts[static_cast<int>(g.t_degree())]++;
        }
        rep.payload["q_generators"] = gens;
        Json cj = Json::object();
        for (auto& [d, c] : counts) cj[std::to_string(d)] = c;
        rep.payload["component_degree_counts"] = cj;
    } else if (cmd == "reltype" || cmd == "fresh") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ReesPresentation P = rees_ideal(ring, I);
        FreshReport F = fresh_generators(P, flags.cap);
        rep.warnings = F.warnings;
        rep.payload["ideal"] = flags.ideal;
        rep.payload["cap"] = flags.cap;
        rep.payload["relation_type"] = F.relation_type;
        if (cmd == "fresh") {
            Json cj = Json::object();
            for (auto& [d, c] : F.counts) cj[std::to_string(d)] = c;
            rep.payload["counts"] = cj;
            Json rj = Json::object();
            for (auto& [d, reps] : F.reps) rj[std::to_string(d)] = detail::poly_strings(reps);
            rep.payload["representatives"] = rj;
        }
    } else if (cmd == "rednum") {
        IdealSpec J = sf.ideal(need(flags.J, "--J"));
        IdealSpec I = sf.ideal(need(flags.I, "--I"));
        rep.payload["J"] = flags.J;
        rep.payload["I"] = flags.I;
        rep.payload["cap"] = flags.cap;
        rep.payload["reduction_number"] = reduction_number(J, I, flags.cap);
    } else if (cmd == "chain") {
        IdealSpec J = sf.ideal(need(flags.J, "--J"));
        IdealSpec I = detail::spec_with_flags(sf, need(flags.I, "--I"), flags);
        int y = I.y_pos();
        ChainReport C = colon_chain(J, I, y, flags.cap);
        rep.warnings = C.warnings;
        rep.payload["J"] = flags.J;
        rep.payload["I"] = flags.I;
        rep.payload["y_index"] = y + 1;
        rep.payload["max"] = flags.cap;
        Json ents = Json::array();
        for (const auto& e : C.entries) {
            Json je;
            je["n"] = e.n;
            je["generators"] = detail::poly_strings(e.gens);
            je["is_unit"] = e.is_unit;
            je["step_nonzero"] = e.step_nonzero;
            ents.push_back(je);
        }
        rep.payload["entries"] = ents;
        rep.payload["reduction_number"] = C.reduction_number;
    } else if (cmd == "tn") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.I.empty() ? flags.ideal : flags.I,
                                                       "--I"), flags);
        std::vector<Polynomial> xs = detail::xs_of(sf, flags, I);
        rep.payload["I"] = flags.I.empty() ? flags.ideal : flags.I;
        Json all = Json::object();
        int lo = flags.n > 0 ? flags.n : 2;
        int hi = flags.n > 0 ? flags.n : flags.cap;
        bool every = true;
        for (int n = lo; n <= hi; ++n) {
            auto v = check_Tn(xs, I, n);
            Json row = Json::array();
            for (bool b : v) { row.push_back(b); every = every && b; }
            all[std::to_string(n)] = row;
        }
        rep.payload["tn"] = all;
        rep.payload["all_hold"] = every;
    } else if (cmd == "vv") {
        IdealSpec S = sf.ideal(need(flags.sub, "--sub"));
        IdealSpec I = sf.ideal(need(flags.I, "--I"));
        rep.payload["sub"] = flags.sub;
        rep.payload["I"] = flags.I;
        Json vals = Json::object();
        int lo = flags.n > 0 ? flags.n : 1;
        int hi = flags.n > 0 ? flags.n : flags.cap;
        bool every = true;
        for (int n = lo; n <= hi; ++n) {
            bool z = vv_module_zero(S, I, n);
            vals[std::to_string(n)] = z;
            every = every && z;
        }
        rep.payload["vanishes"] = vals;
        rep.payload["all_vanish"] = every;
    } else if (cmd == "keralpha" || cmd == "kerbeta") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ReesPresentation P = rees_ideal(ring, I);
        rep.payload["ideal"] = flags.ideal;
        Json vals = Json::object();
        int lo = flags.n > 0 ? flags.n : 2;
        int hi = flags.n > 0 ? flags.n : flags.cap;
        for (int n = lo; n <= hi; ++n)
            vals[std::to_string(n)] =
                cmd == "keralpha" ? ker_alpha_zero(P, n) : ker_beta_zero(P, n);
        rep.payload[cmd == "keralpha" ? "ker_alpha_zero" : "ker_beta_zero"] = vals;
    } else if (cmd == "fiber") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ReesPresentation P = rees_ideal(ring, I);
        IdealHandle F = fiber_ideal(P);
        FreshReport FF = fiber_fresh(P, flags.cap);
        rep.payload["ideal"] = flags.ideal;
        rep.payload["generators"] = detail::poly_strings(F.groebner());
        rep.payload["principal"] = static_cast<int>(F.groebner().size()) == 1;
        rep.payload["relation_type"] = FF.relation_type;
    } else if (cmd == "graded") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ReesPresentation P = rees_ideal(ring, I);
        FreshReport G = graded_fresh(P, flags.cap);
        rep.warnings = G.warnings;
        rep.payload["ideal"] = flags.ideal;
        rep.payload["cap"] = flags.cap;
        rep.payload["relation_type"] = G.relation_type;
        Json cj = Json::object();
        for (auto& [d, c] : G.counts) cj[std::to_string(d)] = c;
        rep.payload["counts"] = cj;
    } else if (cmd == "obstructions") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        int p = flags.p_deg > 0 ? flags.p_deg : 2;
        rep.payload["ideal"] = flags.ideal;
        rep.payload["p"] = p;
        Json o1 = Json::array();
        for (int i = 0; i < static_cast<int>(I.gens.size()); ++i)
            o1.push_back(obstruction_O1(I, i, p));
        rep.payload["O1"] = o1;
        rep.payload["O2"] = obstruction_O2(I, p);
    } else if (cmd == "thmA") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        TheoremAReport A = theorem_a_report(I, flags.cap);
        rep.warnings = A.warnings;
        rep.payload["ideal"] = flags.ideal;
        rep.payload["cap"] = A.cap;
        rep.payload["reduction_number"] = A.reduction_number;
        rep.payload["relation_type"] = A.relation_type;
        Json fc = Json::object(), cc = Json::object();
        for (auto& [n, c] : A.fresh_counts) fc[std::to_string(n)] = c;
        for (auto& [n, c] : A.colon_counts) cc[std::to_string(n)] = c;
        rep.payload["fresh_counts"] = fc;
        rep.payload["colon_counts"] = cc;
        rep.payload["counts_agree"] = A.counts_agree;
        rep.payload["rt_equals_rn_plus_1"] = A.rt_equals_rn_plus_1;
        rep.payload["top_monic_shape_ok"] = A.top_monic_shape_ok;
        rep.payload["top_form"] = A.top_form;
        if (!A.counts_agree || !A.rt_equals_rn_plus_1) rep.exit_code = 2;
    } else if (cmd == "thmB") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        int p = flags.p_deg > 0 ? flags.p_deg : flags.cap;
        TheoremBReport B = theorem_b_report(I, p);
        rep.payload["ideal"] = flags.ideal;
        rep.payload["p"] = p;
        Json ja = Json::object(), ia = Json::object();
        for (auto& [n, v] : B.j_alpha_zero) ja[std::to_string(n)] = v;
        for (auto& [n, v] : B.i_alpha_zero) ia[std::to_string(n)] = v;
        rep.payload["j_ker_alpha_zero"] = ja;
        rep.payload["i_ker_alpha_zero"] = ia;
        rep.payload["alpha_p_zero"] = B.alpha_p_zero;
        rep.payload["propagation_ok"] = B.propagation_ok;
        if (!B.propagation_ok) rep.exit_code = 2;
    } else if (cmd == "detclosure") {
        IdealSpec I = detail::spec_with_flags(sf, need(flags.ideal, "--ideal"), flags);
        ClosureResult C = det_closure(ring, I, flags.rounds);
        rep.payload["ideal"] = flags.ideal;
        rep.payload["rounds"] = C.rounds;
        rep.payload["hit_round_cap"] = C.hit_round_cap;
        rep.payload["forms"] = detail::poly_strings(C.forms);
        rep.payload["equals_rees_ideal"] = C.equals_rees_ideal;
        Json tr = Json::array();
        for (const auto& t : C.trace) {
            Json jt;
            jt["round"] = t.round;
            jt["minors_considered"] = t.minors_considered;
            jt["minors_in_P"] = t.minors_in_P;
            jt["admitted"] = t.admitted;
            jt["new_columns"] = t.new_columns;
            jt["halted_columns"] = t.halted_columns;
            jt["rejected_phi"] = t.rejected_phi;
            jt["notes"] = t.notes;
            tr.push_back(jt);
        }
        rep.payload["trace"] = tr;
        if (C.hit_round_cap) rep.exit_code = 2;
    } else if (cmd == "quotient") {
        Polynomial by = parse_polynomial(ring.reg, ring.p, need(flags.by, "--by"));
        PresentedRing R2 = quotient_by_element(ring, by);
        rep.payload["by"] = by.to_string();
        rep.payload["relations"] = detail::poly_strings(R2.relations);
        if (!flags.ideal.empty()) {
            IdealSpec I = detail::spec_with_flags(sf, flags.ideal, flags);
            IdealSpec I2 = image_ideal(R2, I);
            rep.payload["ideal"] = flags.ideal;
            rep.payload["image_generators"] = detail::poly_strings(I2.gens);
            ReesPresentation P = rees_ideal(R2, I2);
            FreshReport F = fresh_generators(P, flags.cap);
            for (const auto& w : F.warnings) rep.warnings.push_back(w);
            rep.payload["relation_type"] = F.relation_type;
        }
    } else {
        throw std::invalid_argument("unknown command '" + cmd + "'");
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// suite expectations:  #@ check <command> [k=v ...] expect <field>=<value> ...
// ---------------------------------------------------------------------------

struct SuiteCheck {
    std::string command;
    RunFlags flags;
    std::vector<std::pair<std::string, std::string>> expects; // field path -> value
};

inline std::vector<SuiteCheck> parse_suite_checks(const SessionFile& sf) {
    std::vector<SuiteCheck> out;
    for (const auto& raw : sf.expectations) {
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw) || kw != "check") continue;
        SuiteCheck ck;
        if (!(ls >> ck.command)) throw std::invalid_argument("suite check: missing command");
        std::string tok;
        bool expecting = false;
        while (ls >> tok) {
            if (tok == "expect") { expecting = true; continue; }
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("suite check: bad token '" + tok + "'");
            std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            if (expecting) {
                ck.expects.emplace_back(k, v);
            } else if (k == "ideal") ck.flags.ideal = v;
            else if (k == "J") ck.flags.J = v;
            else if (k == "I") ck.flags.I = v;
            else if (k == "sub") ck.flags.sub = v;
            else if (k == "poly") ck.flags.poly = v;
            else if (k == "by") ck.flags.by = v;
            else if (k == "drop") ck.flags.drop = v;
            else if (k == "n") ck.flags.n = std::stoi(v);
            else if (k == "p") ck.flags.p_deg = std::stoi(v);
            else if (k == "cap") ck.flags.cap = std::stoi(v);
            else if (k == "rounds") ck.flags.rounds = std::stoi(v);
            else if (k == "y") ck.flags.y_index = std::stoi(v);
            else throw std::invalid_argument("suite check: unknown argument '" + k + "'");
        }
        if (ck.expects.empty())
            throw std::invalid_argument("suite check: no expectations given");
        out.push_back(std::move(ck));
    }
    return out;
}

// navigate payload by dotted path, e.g. counts.3 or entries.0.is_unit
inline const Json* json_path(const Json& j, const std::string& path) {
    const Json* cur = &j;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t dot = path.find('.', start);
        std::string key = dot == std::string::npos ? path.substr(start)
                                                   : path.substr(start, dot - start);
        if (cur->is_array()) {
            std::size_t idx = std::stoul(key);
            if (idx >= cur->size()) return nullptr;
            cur = &(*cur)[idx];
        } else if (cur->is_object()) {
            auto it = cur->find(key);
            if (it == cur->end()) return nullptr;
            cur = &it.value();
        } else {
            return nullptr;
        }
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return cur;
}

struct SuiteResult {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> lines;
};

inline SuiteResult run_suite_file(const std::string& text, const std::string& label) {
    SuiteResult res;
    SessionFile sf = parse_session(text);
    for (const auto& ck : parse_suite_checks(sf)) {
        Report rep = run_command(ck.command, sf, ck.flags, text);
        for (const auto& [field, want] : ck.expects) {
            ++res.checks;
            const Json* got = json_path(rep.payload, field);
            std::string gots = got ? (got->is_string() ? got->get<std::string>() : got->dump())
                                   : "<missing>";
            bool ok = got && gots == want;
            if (!ok) ++res.failures;
            res.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + label + ": " + ck.command +
                                " " + field + " = " + gots + (ok ? "" : " (expected " + want + ")"));
        }
    }
    return res;
}

} // namespace reeskit
