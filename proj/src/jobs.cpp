#include "jobs.hpp"

#include <json.hpp>

#include "../include/eqmirror.h"
#include "acceptance.hpp"
#include "closedform.hpp"
#include "euler.hpp"
#include "localize.hpp"
#include "pf.hpp"
#include "pipeline.hpp"
#include "specparse.hpp"

using json = nlohmann::json;

namespace em {
namespace {

// ---- rendering -----------------------------------------------------------

bool composite(const std::string& s) {
    // a lone rational like -7/4 reads fine unparenthesized; sums/products don't
    if (s.find_first_of("+ *^") != std::string::npos) return true;
    return s.find('-', 1) != std::string::npos;
}

std::string wrap(const std::string& s) {
    return composite(s) ? "(" + s + ")" : s;
}

std::string k_text(const Rat& r, const std::vector<std::string>&) { return r.get_str(); }

template <class K>
std::string k_text(const RatFunc<K>& f, const std::vector<std::string>& names);

template <class K>
std::string poly_text(const Poly<K>& p, const std::string& var,
                      const std::vector<std::string>& inner) {
    if (p.zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        if (is_zero(p.coeff(i))) continue;
        std::string c = k_text(p.coeff(i), inner);
        std::string sign = " + ";
        if (!composite(c) && c.size() && c[0] == '-') {
            sign = " - ";
            c = c.substr(1);
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string body;
        if (mono.empty()) body = c;
        else if (c == "1") body = mono;
        else body = wrap(c) + "*" + mono;
        if (out.empty()) out = (sign == " - " ? "-" : "") + body;
        else out += sign + body;
    }
    return out;
}

template <class K>
std::string k_text(const RatFunc<K>& f, const std::vector<std::string>& names) {
    std::string var = names.empty() ? "s" : names.back();
    std::vector<std::string> inner(names.begin(), names.empty() ? names.end() : names.end() - 1);
    std::string n = poly_text(f.num, var, inner);
    if (f.den.deg() == 0 && f.den.coeff(0) == K(1)) return n;
    return wrap(n) + "/" + wrap(poly_text(f.den, var, inner));
}

json kjson(const Rat& r) { return r.get_str(); }

template <class K>
json kjson(const RatFunc<K>& f) {
    json num = json::array(), den = json::array();
    for (int i = 0; i <= f.num.deg(); ++i) num.push_back(kjson(f.num.coeff(i)));
    for (int i = 0; i <= f.den.deg(); ++i) den.push_back(kjson(f.den.coeff(i)));
    return {{"num", num}, {"den", den}};
}

template <class K>
json series_json(const Series<K>& s) {
    json a = json::array();
    for (int i = 0; i <= s.order(); ++i) a.push_back(kjson(s.coeff(i)));
    return {{"coeffs", a}};
}

template <class K>
std::string series_text(const Series<K>& s, const std::string& var,
                        const std::vector<std::string>& names) {
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        if (is_zero(s.coeff(i))) continue;
        std::string c = k_text(s.coeff(i), names);
        std::string sign = " + ";
        if (!composite(c) && c.size() && c[0] == '-') {
            sign = " - ";
            c = c.substr(1);
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string body;
        if (mono.empty()) body = c;
        else if (c == "1") body = mono;
        else body = (composite(c) ? wrap(c) : c) + " " + mono;
        if (out.empty()) out = (sign == " - " ? "-" : "") + body;
        else out += sign + body;
    }
    return out.empty() ? "0" : out;
}

template <class K>
json hrat_json(const HRat<K>& h) {
    json num = json::array(), den = json::array();
    for (int i = 0; i <= h.num.deg(); ++i) num.push_back(kjson(h.num.coeff(i)));
    for (auto& f : h.den)
        den.push_back({{"c", kjson(f.c)}, {"mult", f.mult}, {"inner", f.inner}});
    return {{"num", num}, {"den", den}};
}

template <class K>
std::string hrat_text(const HRat<K>& h, const std::vector<std::string>& names) {
    std::string out = wrap(poly_text(h.num, "hbar", names));
    for (auto& f : h.den) {
        out += " / (hbar + " + k_text(f.c, names) + ")";
        if (f.mult > 1) out += "^" + std::to_string(f.mult);
    }
    return out;
}

// ---- request plumbing ----------------------------------------------------

struct JobError : std::runtime_error {
    int status;
    JobError(int st, const std::string& m) : std::runtime_error(m), status(st) {}
};

ParsedSpec load_spec(const json& req, const char* key = "spec") {
    if (!req.contains(key) || !req[key].is_string())
        throw JobError(EQM_USAGE, std::string("missing field '") + key + "' (spec text)");
    std::map<std::string, Rat> bind;
    if (req.contains("bind"))
        for (auto& [k, v] : req["bind"].items())
            bind[k] = rat_from_string(v.get<std::string>());
    try {
        return parse_spec(req[key].get<std::string>(), bind);
    } catch (const std::invalid_argument& e) {
        throw JobError(EQM_USAGE, e.what());
    }
}

int get_order(const json& req, int dflt = 6) {
    int n = req.value("order", dflt);
    if (n < 1) throw JobError(EQM_USAGE, "order must be >= 1");
    return n;
}

template <class F>
json dispatch(const ParsedSpec& ps, F&& f) {
    switch (ps.symbols.size()) {
        case 0: return f.template operator()<Rat>();
        case 1: return f.template operator()<QF1>();
        default: return f.template operator()<QF2>();
    }
}

template <class K>
std::pair<SolutionBasis, K> basis_of(const ParsedSpec& ps, const std::map<std::string, K>& sym) {
    QuotientRing<K> ring = make_ring(ps, sym);
    if (ring.roots.size() == 1 && ring.mults[0] == 2)
        return {SolutionBasis::Wronskian, K(0)};
    if (ring.roots.size() == 2 && ring.mults[0] == 1 && ring.mults[1] == 1) {
        K mu = K(0) - (is_zero(ring.roots[0]) ? ring.roots[1] : ring.roots[0]);
        return {SolutionBasis::Restriction, mu};
    }
    throw JobError(EQM_USAGE, "relation: pipeline supports p^2 or p*(p+mu) only");
}

// ---- commands ------------------------------------------------------------

json cmd_ifunc(const json& req) {
    ParsedSpec ps = load_spec(req);
    int order = get_order(req);
    return dispatch(ps, [&]<class K>() {
        auto sym = symbol_table<K>(ps.symbols);
        ToricSpec<K> spec = make_spec(ps, sym);
        QuotientRing<K> ring = make_ring(ps, sym);
        json roots = json::array(), coeffs = json::array();
        std::string text;
        for (auto& r : ring.roots) roots.push_back(kjson(r));
        for (int d = 0; d <= order; ++d) {
            json row = json::array();
            for (size_t k = 0; k < ring.roots.size(); ++k) {
                ICoeff<K> c = icoeff(spec, d, ring.roots[k], ring.mults[k] > 1);
                json e = {{"value", hrat_json(c.value)}};
                if (ring.mults[k] > 1) e["dvalue"] = hrat_json(c.dvalue);
                row.push_back(e);
                text += "q^" + std::to_string(d) + " @ p=" +
                        k_text(ring.roots[k], ps.symbols) + ": " +
                        hrat_text(c.value, ps.symbols) + "\n";
            }
            coeffs.push_back(row);
        }
        return json{{"roots", roots}, {"coeffs", coeffs}, {"text", text}};
    });
}

json cmd_pf_check(const json& req, int& status) {
    ParsedSpec ps = load_spec(req);
    int order = get_order(req);
    return dispatch(ps, [&]<class K>() {
        auto sym = symbol_table<K>(ps.symbols);
        ToricSpec<K> spec = make_spec(ps, sym);
        QuotientRing<K> ring = make_ring(ps, sym);
        int first = -1;
        for (int d = 0; d <= order; ++d)
            if (!pf_residual(spec, ring, d).zero()) { first = d; break; }
        bool ok = first < 0;
        if (!ok) status = EQM_MISMATCH;
        std::string text = ok
            ? "operator annihilates the I-function to order " + std::to_string(order)
            : "nonzero residual first appears at q^" + std::to_string(first);
        return json{{"annihilates", ok}, {"first_nonzero_degree", first}, {"text", text}};
    });
}

json cmd_birkhoff(const json& req) {
    ParsedSpec ps = load_spec(req);
    int order = get_order(req);
    return dispatch(ps, [&]<class K>() {
        auto sym = symbol_table<K>(ps.symbols);
        ToricSpec<K> spec = make_spec(ps, sym);
        auto [basis, mu] = basis_of(ps, sym);
        auto res = run_pipeline(spec, order, basis, mu);
        json Q = json::array(), R = json::array();
        std::string text;
        for (int k = 0; k <= order; ++k) {
            json qm = json::array(), rm = json::array();
            for (int i = 0; i < 2; ++i) {
                json qr = json::array(), rr = json::array();
                for (int j = 0; j < 2; ++j) {
                    qr.push_back(hrat_json(res.qr.Q[k][i][j]));
                    rr.push_back(hrat_json(res.qr.R[k][i][j]));
                }
                qm.push_back(qr);
                rm.push_back(rr);
            }
            Q.push_back(qm);
            R.push_back(rm);
            text += "Q[" + std::to_string(k) + "][0][0] = " +
                    hrat_text(res.qr.Q[k][0][0], ps.symbols) + "\n";
            text += "R[" + std::to_string(k) + "][0][0] = " +
                    hrat_text(res.qr.R[k][0][0], ps.symbols) + "\n";
        }
        return json{{"Q", Q}, {"R", R}, {"text", text}};
    });
}

json cmd_jfunc(const json& req) {
    ParsedSpec ps = load_spec(req);
    int order = get_order(req);
    return dispatch(ps, [&]<class K>() {
        auto sym = symbol_table<K>(ps.symbols);
        ToricSpec<K> spec = make_spec(ps, sym);
        auto [basis, mu] = basis_of(ps, sym);
        auto res = run_pipeline(spec, order, basis, mu);
        std::string text =
            "t0      = " + series_text(res.t0, "q", ps.symbols) + "\n" +
            "t       = log q + " + series_text(res.tail, "q", ps.symbols) + "\n" +
            "W_raw   = " + series_text(res.wscalar_q, "q", ps.symbols) + "\n" +
            "W_raw_p = " + series_text(res.wp_q, "q", ps.symbols) + "\n";
        return json{{"t0", series_json(res.t0)},
                    {"tail", series_json(res.tail)},
                    {"wscalar_q", series_json(res.wscalar_q)},
                    {"wp_q", series_json(res.wp_q)},
                    {"text", text}};
    });
}

json cmd_potential(const json& req) {
    ParsedSpec ps = load_spec(req);
    int order = get_order(req);
    return dispatch(ps, [&]<class K>() {
        auto sym = symbol_table<K>(ps.symbols);
        ToricSpec<K> spec = make_spec(ps, sym);
        auto [basis, mu] = basis_of(ps, sym);
        auto res = run_pipeline(spec, order, basis, mu);
        Series<K> Ws = to_potential(res.wscalar_q, res.tail);
        Series<K> Wp = to_potential(res.wp_q, res.tail);
        std::string text =
            "W_scalar(x) = " + series_text(Ws, "x", ps.symbols) + "\n" +
            "W_p(x)      = " + series_text(Wp, "x", ps.symbols) + "\n";
        return json{{"series", series_json(Ws)},
                    {"p_series", series_json(Wp)},
                    {"text", text}};
    });
}

json cmd_closed_form(const json& req) {
    std::string kind = req.value("kind", "");
    int order = get_order(req);
    Series<Rat> s;
    if (kind == "xi1") s = closed_local_p2<Rat>(order);
    else if (kind == "xi2") s = closed_local_p2_mu<Rat>(order);
    else if (kind == "twist") s = closed_twist<Rat>(req.value("k", 1L), order);
    else if (kind == "curve") {
        if (!req.contains("n1") || !req.contains("n2"))
            throw JobError(EQM_USAGE, "closed-form curve: need n1 and n2");
        s = closed_curve(rat_from_string(req["n1"].get<std::string>()),
                         rat_from_string(req["n2"].get<std::string>()), order);
    } else
        throw JobError(EQM_USAGE, "closed-form: kind must be xi1|xi2|twist|curve");
    return json{{"series", series_json(s)},
                {"text", series_text(s, "x", {})}};
}

Series<Rat> series_from_json(const json& doc) {
    const json* src = &doc;
    if (doc.contains("series")) src = &doc["series"];
    if (!src->contains("coeffs"))
        throw JobError(EQM_USAGE, "compare: no 'coeffs' found in series document");
    const json& cs = (*src)["coeffs"];
    Series<Rat> s((int)cs.size() - 1);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_string())
            throw JobError(EQM_USAGE, "compare: only rational series are supported");
        s.at((int)i) = rat_from_string(cs[i].get<std::string>());
    }
    return s;
}

json cmd_compare(const json& req, int& status) {
    if (!req.contains("a") || !req.contains("b"))
        throw JobError(EQM_USAGE, "compare: need series documents 'a' and 'b'");
    Series<Rat> a = series_from_json(req["a"]), b = series_from_json(req["b"]);
    bool uts = req.value("up_to_scalar", false);
    int n = std::max(a.order(), b.order());
    Rat c;
    bool have = false, ok = true;
    for (int i = 0; i <= n && ok; ++i) {
        if (!have) {
            if (is_zero(a.coeff(i)) != is_zero(b.coeff(i))) ok = false;
            else if (!is_zero(a.coeff(i))) { c = a.coeff(i) / b.coeff(i); have = true; }
        } else if (!(a.coeff(i) == c * b.coeff(i)))
            ok = false;
    }
    bool proportional = ok && have;
    bool equal = proportional && c == 1;
    bool pass = uts ? proportional : equal;
    if (!pass) status = EQM_MISMATCH;
    json out = {{"equal", equal}, {"proportional", proportional}};
    std::string text;
    if (proportional) {
        out["scalar"] = c.get_str();
        text = equal ? "equal" : ("proportional, scalar " + c.get_str());
    } else
        text = "different";
    out["text"] = text;
    return out;
}

json cmd_localize(const json& req, int&) {
    int dmax = req.value("dmax", 6);
    if (dmax < 1) throw JobError(EQM_USAGE, "localize: dmax must be >= 1");
    auto gf = refined_gf(dmax);
    json terms = json::array();
    for (auto& [d, c] : gf.coeff)
        terms.push_back({{"exps", {d[0], d[1], d[2]}}, {"coeff", c.get_str()}});
    json out = {{"dmax", dmax}, {"terms", terms}};
    if (req.contains("specialize")) {
        std::array<Rat, 3> x{Rat(0), Rat(0), Rat(0)};
        const json& sp = req["specialize"];
        const char* keys[3] = {"x1", "x2", "x3"};
        for (int i = 0; i < 3; ++i)
            if (sp.contains(keys[i])) x[i] = rat_from_string(sp[keys[i]].get<std::string>());
        Series<Rat> w(dmax);
        for (int d = 1; d <= dmax; ++d) w.at(d) = gf.specialize(x, d);
        out["specialized"] = series_json(w);
        out["text"] = series_text(w, "w", {});
        return out;
    }
    // polynomial rendering, one parenthesized block per total degree
    std::string text;
    for (int deg = 1; deg <= dmax; ++deg) {
        std::string block;
        for (auto it = gf.coeff.rbegin(); it != gf.coeff.rend(); ++it) {
            auto& [d, c] = *it;
            if (d[0] + d[1] + d[2] != deg) continue;
            std::string cs = c.get_str(), sign = " + ";
            if (cs[0] == '-') { sign = " - "; cs = cs.substr(1); }
            std::string mono;
            for (int i = 0; i < 3; ++i) {
                if (d[i] == 0) continue;
                if (!mono.empty()) mono += " ";
                mono += "x" + std::to_string(i + 1);
                if (d[i] > 1) mono += "^" + std::to_string(d[i]);
            }
            std::string body = (cs == "1" && !mono.empty()) ? mono
                               : mono.empty() ? cs : cs + " " + mono;
            if (block.empty()) block = (sign == " - " ? "-" : "") + body;
            else block += sign + body;
        }
        if (block.empty()) continue;
        if (!text.empty()) text += " + ";
        text += "(" + block + ") w";
        if (deg > 1) text += "^" + std::to_string(deg);
    }
    out["text"] = text;
    return out;
}

json cmd_euler(const json& req, int& status) {
    ParsedSpec pa = load_spec(req, "spec_a");
    ParsedSpec pb = load_spec(req, "spec_b");
    std::vector<std::string> symbols = pa.symbols;
    for (auto& s : pb.symbols)
        if (std::find(symbols.begin(), symbols.end(), s) == symbols.end())
            symbols.push_back(s);
    ParsedSpec joint = pa;
    joint.symbols = symbols;
    return dispatch(joint, [&]<class K>() {
        auto sym = symbol_table<K>(symbols);
        auto fa = bundle_forms(make_spec<K>(pa, sym));
        auto fb = bundle_forms(make_spec<K>(pb, sym));
        auto c = euler_scalar(fa, fb);
        json out = {{"proportional", (bool)c}};
        if (c) {
            out["scalar"] = kjson(*c);
            out["text"] = "Euler classes proportional mod p^2, scalar " +
                          k_text(*c, symbols);
        } else {
            out["text"] = "Euler classes are not proportional mod p^2";
            status = EQM_MISMATCH;
        }
        return out;
    });
}

json cmd_verify_all(const json&, int& status) {
    json rows = json::array();
    std::string text;
    bool all = true;
    for (auto& r : run_acceptance()) {
        rows.push_back({{"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        text += "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") +
                " - " + r.detail + "\n";
        all = all && r.pass;
    }
    if (!all) status = EQM_MISMATCH;
    return json{{"results", rows}, {"text", text}};
}

} // namespace

std::string run_job(const std::string& request, int& status) {
    status = EQM_OK;
    json req;
    try {
        req = json::parse(request);
    } catch (const json::exception& e) {
        status = EQM_USAGE;
        return json{{"error", std::string("bad request JSON: ") + e.what()}}.dump(2);
    }
    json out;
    try {
        std::string cmd = req.value("cmd", "");
        if (cmd == "ifunc") out = cmd_ifunc(req);
        else if (cmd == "pf-check") out = cmd_pf_check(req, status);
        else if (cmd == "birkhoff") out = cmd_birkhoff(req);
        else if (cmd == "jfunc") out = cmd_jfunc(req);
        else if (cmd == "potential") out = cmd_potential(req);
        else if (cmd == "closed-form") out = cmd_closed_form(req);
        else if (cmd == "compare") out = cmd_compare(req, status);
        else if (cmd == "localize") out = cmd_localize(req, status);
        else if (cmd == "euler-equiv") out = cmd_euler(req, status);
        else if (cmd == "verify-all") out = cmd_verify_all(req, status);
        else throw JobError(EQM_USAGE, "unknown cmd '" + cmd + "'");
    } catch (const JobError& e) {
        status = e.status;
        return json{{"error", e.what()}}.dump(2);
    } catch (const json::exception& e) {
        status = EQM_USAGE;
        return json{{"error", e.what()}}.dump(2);
    } catch (const std::invalid_argument& e) {
        status = EQM_USAGE;
        return json{{"error", e.what()}}.dump(2);
    } catch (const std::domain_error& e) {
        status = EQM_DOMAIN;
        return json{{"error", e.what()}}.dump(2);
    }
    out["command"] = req.value("cmd", "");
    out["inputs"] = req;
    return out.dump(2);
}

} // namespace em
