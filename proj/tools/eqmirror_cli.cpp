#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqmirror.h"

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json bindings_json(const std::vector<std::string>& sets) {
    json b = json::object();
    for (auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--set expects name=value, got '" + s + "'");
        b[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return b;
}

// run a request and print the response; returns the process exit code
int run_and_print(const json& req, bool as_json) {
    eqm_session* s = eqm_session_new();
    const char* resp = nullptr;
    int rc = eqm_run(s, req.dump().c_str(), &resp);
    int exit_code = rc == EQM_OK ? 0 : rc == EQM_MISMATCH ? 1 : 2;
    if (!resp) {
        std::cerr << "error: " << eqm_last_error(s) << "\n";
        eqm_session_free(s);
        return 2;
    }
    json doc = json::parse(resp);
    if (doc.contains("error")) {
        std::cerr << "error: " << doc["error"].get<std::string>() << "\n";
        eqm_session_free(s);
        return exit_code;
    }
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else if (doc.contains("text"))
        std::cout << doc["text"].get<std::string>()
                  << (doc["text"].get<std::string>().ends_with("\n") ? "" : "\n");
    else
        std::cout << doc.dump(2) << "\n";
    eqm_session_free(s);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant mirror symmetry computations (local P^2, local curves)"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the full structured response");
    std::string config_path;
    app.add_option("--config", config_path, "run a whole job request from a JSON file");

    std::string spec_path, spec_text;
    std::vector<std::string> sets;
    int order = 6;

    auto add_spec_opts = [&](CLI::App* sub) {
        sub->add_option("--spec", spec_path, "toric spec file");
        sub->add_option("--spec-text", spec_text, "toric spec given inline");
        sub->add_option("--set", sets, "bind a symbol, e.g. --set nu=1");
        sub->add_option("--order", order, "truncation order (q-degree)");
    };

    auto* c_ifunc = app.add_subcommand("ifunc", "I-function coefficients at the relation roots");
    add_spec_opts(c_ifunc);
    auto* c_pf = app.add_subcommand("pf-check", "Picard-Fuchs annihilation residual");
    add_spec_opts(c_pf);
    auto* c_bk = app.add_subcommand("birkhoff", "Birkhoff factorization Q, R");
    add_spec_opts(c_bk);
    auto* c_jf = app.add_subcommand("jfunc", "J-function data: t0, mirror map, raw potential");
    add_spec_opts(c_jf);
    auto* c_pot = app.add_subcommand("potential", "potential W(x) through the mirror map");
    add_spec_opts(c_pot);

    auto* c_cf = app.add_subcommand("closed-form", "closed-form potential series");
    std::string kind;
    long twist_k = 1;
    std::string n1, n2;
    c_cf->add_option("--kind", kind, "xi1 | xi2 | twist | curve")->required();
    c_cf->add_option("--k", twist_k, "twist parameter (kind=twist)");
    c_cf->add_option("--n1", n1, "first weight (kind=curve)");
    c_cf->add_option("--n2", n2, "second weight (kind=curve)");
    c_cf->add_option("--order", order, "truncation order");

    auto* c_cmp = app.add_subcommand("compare", "compare two rational series documents");
    std::string file_a, file_b;
    bool uts = false;
    c_cmp->add_option("a", file_a, "first series JSON file")->required();
    c_cmp->add_option("b", file_b, "second series JSON file")->required();
    c_cmp->add_flag("--up-to-scalar", uts, "allow a constant scalar, reported");

    auto* c_loc = app.add_subcommand("localize", "refined localization generating function");
    int dmax = 6;
    std::string specialize;
    c_loc->add_option("--dmax", dmax, "maximal total degree");
    c_loc->add_option("--specialize", specialize, "e.g. x1=1,x2=1,x3=0");

    auto* c_eu = app.add_subcommand("euler-equiv", "compare bundle Euler classes mod p^2");
    std::string spec_a, spec_b;
    c_eu->add_option("--spec-a", spec_a, "first toric spec file")->required();
    c_eu->add_option("--spec-b", spec_b, "second toric spec file")->required();

    app.add_subcommand("verify-all", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto subs = app.get_subcommands();
        if (subs.empty()) {
            if (config_path.empty()) {
                std::cerr << "error: need a subcommand or --config FILE\n";
                return 2;
            }
            return run_and_print(json::parse(read_file(config_path)), as_json);
        }
        auto* sub = subs.front();
        std::string cmd = sub->get_name();
        json req = config_path.empty() ? json::object() : json::parse(read_file(config_path));
        req["cmd"] = cmd;
        req["order"] = order;
        if (!spec_text.empty()) req["spec"] = spec_text;
        else if (!spec_path.empty()) req["spec"] = read_file(spec_path);
        if (!sets.empty()) req["bind"] = bindings_json(sets);
        if (cmd == "closed-form") {
            req["kind"] = kind;
            req["k"] = twist_k;
            if (!n1.empty()) req["n1"] = n1;
            if (!n2.empty()) req["n2"] = n2;
        } else if (cmd == "compare") {
            req["a"] = json::parse(read_file(file_a));
            req["b"] = json::parse(read_file(file_b));
            req["up_to_scalar"] = uts;
        } else if (cmd == "localize") {
            req["dmax"] = dmax;
            if (!specialize.empty()) {
                json sp = json::object();
                std::istringstream ss(specialize);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw CLI::ValidationError("--specialize expects x1=..,x2=..,x3=..");
                    sp[item.substr(0, eq)] = item.substr(eq + 1);
                }
                req["specialize"] = sp;
            }
        } else if (cmd == "euler-equiv") {
            req["spec_a"] = read_file(spec_a);
            req["spec_b"] = read_file(spec_b);
        }
        return run_and_print(req, as_json);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
