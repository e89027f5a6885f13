// Command-line surface over the library: every subcommand reads and writes
// JSON so runs can be scripted and golden-tested.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "qwitt/bridges.hpp"
#include "qwitt/errors.hpp"
#include "qwitt/jsonio.hpp"
#include "qwitt/lambda.hpp"
#include "qwitt/necklace.hpp"
#include "qwitt/symfun.hpp"
#include "qwitt/textio.hpp"
#include "qwitt/witt.hpp"

using namespace qwitt;

namespace {

struct Options {
    std::string ring;
    std::string g;
    std::string m;
    int trunc = 0;
    std::string in;
    std::string in2;
    int r = 0;
    int h = -1;
    int n = 0;
    int i = 0;
    int j = 0;
    int vars = 0;
    std::string x;
};

Json load_json(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
        return Json::parse(arg);
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open input file \"" + arg + "\"");
    Json j;
    f >> j;
    return j;
}

// Vector inputs are self-describing documents; bare coordinate arrays are
// completed from the command-line flags.
Json effective_document(const Options& opt, const std::string& arg) {
    Json j = load_json(arg);
    if (j.is_array()) {
        Json doc;
        doc["coords"] = j;
        j = doc;
    }
    if (!j.contains("ring") && !opt.ring.empty()) j["ring"] = opt.ring;
    if (!j.contains("g") && !j.contains("m")) {
        if (!opt.g.empty()) j["g"] = opt.g;
        if (!opt.m.empty()) j["m"] = opt.m;
    }
    if (!j.contains("trunc")) {
        if (opt.trunc > 0)
            j["trunc"] = opt.trunc;
        else if (j.contains("coords"))
            j["trunc"] = j.at("coords").size();
        else if (j.contains("series"))
            j["trunc"] = j.at("series").size() - 1;
    }
    return j;
}

WittContext context_from_flags(const Options& opt) {
    if (opt.ring.empty()) throw ParseError("--ring is required");
    if (opt.trunc < 1) throw ParseError("--trunc is required");
    RingPtr ring = Ring::make(opt.ring);
    if (!opt.g.empty())
        return WittContext(deformation_poly(parse_qpoly(opt.g)), opt.trunc, ring);
    if (!opt.m.empty())
        return WittContext(deformation_int(Int(opt.m)), opt.trunc, ring);
    throw ParseError("a deformation --g or --m is required");
}

Deformation deformation_from_flags(const Options& opt) {
    if (!opt.g.empty()) return deformation_poly(parse_qpoly(opt.g));
    if (!opt.m.empty()) return deformation_int(Int(opt.m));
    throw ParseError("a deformation --g or --m is required");
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int run_witt(const std::string& action, const Options& opt) {
    if (action == "gen-polys") {
        if (opt.n < 1) throw ParseError("--n is required");
        if (!opt.g.empty()) {
            emit(defining_polys_to_json(opt.n,
                                        gen_defining_polys(opt.n, parse_qpoly(opt.g))));
        } else {
            emit(defining_polys_to_json(opt.n, defining_polys(opt.n)));
        }
        return 0;
    }
    if (action == "unity") {
        emit(witt_to_json(witt_unity(context_from_flags(opt))));
        return 0;
    }
    if (action == "unghost") {
        if (opt.in.empty()) throw ParseError("--in is required");
        GhostVector w = ghost_from_json(effective_document(opt, opt.in));
        emit(witt_to_json(unghost(w)));
        return 0;
    }
    if (opt.in.empty()) throw ParseError("--in is required");
    WittVector a = witt_from_json(effective_document(opt, opt.in));
    if (action == "add" || action == "mul") {
        if (opt.in2.empty()) throw ParseError("--in2 is required");
        WittVector b = witt_from_json(effective_document(opt, opt.in2));
        emit(witt_to_json(action == "add" ? witt_add(a, b) : witt_mul(a, b)));
    } else if (action == "neg") {
        emit(witt_to_json(witt_neg(a)));
    } else if (action == "ghost") {
        emit(ghost_to_json(ghost(a)));
    } else if (action == "transport") {
        emit(witt_to_json(opt.h >= 0 ? transport_to_h(a, opt.h)
                                     : transport_two_minus_g(a)));
    } else if (action == "induce") {
        if (opt.r < 1) throw ParseError("--r is required");
        emit(witt_to_json(induce(opt.r, a)));
    } else if (action == "restrict") {
        if (opt.r < 1) throw ParseError("--r is required");
        emit(witt_to_json(witt_restrict(opt.r, a)));
    } else {
        throw ParseError("unknown witt action \"" + action + "\"");
    }
    return 0;
}

int run_neck(const std::string& action, const Options& opt) {
    if (action == "mobius") {
        if (opt.n < 1) throw ParseError("--n is required");
        Json arr = Json::array();
        if (!opt.g.empty()) {
            QPoly g = parse_qpoly(opt.g);
            for (int k = 1; k <= opt.n; ++k)
                arr.push_back(mobius_hat(g, k).to_string());
        } else if (!opt.m.empty()) {
            Int m(opt.m);
            for (int k = 1; k <= opt.n; ++k) {
                Int v = mobius_m(m, k);
                if (mpz_fits_slong_p(v.get_mpz_t()))
                    arr.push_back(v.get_si());
                else
                    arr.push_back(v.get_str());
            }
        } else {
            throw ParseError("a deformation --g or --m is required");
        }
        emit(arr);
        return 0;
    }
    if (action == "coeff") {
        if (opt.n < 1 || opt.i < 1 || opt.j < 1)
            throw ParseError("--n, --i and --j are required");
        QRat v = struct_const_qrat(deformation_from_flags(opt), opt.n, opt.i, opt.j);
        emit(Json(v.to_string()));
        return 0;
    }
    if (action == "unity") {
        emit(necklace_to_json(neck_unity(context_from_flags(opt))));
        return 0;
    }
    if (action == "eta") {
        if (opt.in.empty()) throw ParseError("--in is required");
        GhostVector w = ghost_from_json(effective_document(opt, opt.in));
        emit(necklace_to_json(eta_inverse(w)));
        return 0;
    }
    if (opt.in.empty()) throw ParseError("--in is required");
    NecklaceVector a = necklace_from_json(effective_document(opt, opt.in));
    if (action == "mul") {
        if (opt.in2.empty()) throw ParseError("--in2 is required");
        NecklaceVector b = necklace_from_json(effective_document(opt, opt.in2));
        emit(necklace_to_json(neck_mul(a, b)));
    } else if (action == "ghost") {
        emit(ghost_to_json(neck_ghost(a)));
    } else if (action == "transport") {
        emit(necklace_to_json(neck_transport_two_minus(a)));
    } else if (action == "induce") {
        if (opt.r < 1) throw ParseError("--r is required");
        emit(necklace_to_json(neck_induce(opt.r, a)));
    } else if (action == "restrict") {
        if (opt.r < 1) throw ParseError("--r is required");
        emit(necklace_to_json(neck_restrict(opt.r, a)));
    } else {
        throw ParseError("unknown neck action \"" + action + "\"");
    }
    return 0;
}

int run_series(const std::string& action, const Options& opt) {
    if (action == "kimlee") {
        if (opt.in.empty()) throw ParseError("--in is required");
        Json j = load_json(opt.in);
        if (!j.is_array()) throw ParseError("kimlee input is a JSON integer array");
        std::vector<long> a;
        for (const auto& item : j) a.push_back(item.get<long>());
        int trunc = opt.trunc > 0 ? opt.trunc : static_cast<int>(a.size());
        Json out = Json::array();
        for (const QPoly& b : kimlee_expand(a, trunc))
            out.push_back(b.to_string());
        emit(out);
        return 0;
    }
    if (opt.in.empty()) throw ParseError("--in is required");
    if (action == "theta") {
        WittVector a = witt_from_json(effective_document(opt, opt.in));
        emit(lambda_to_json(theta(a)));
    } else if (action == "theta-inv") {
        LambdaElement s = lambda_from_json(effective_document(opt, opt.in));
        emit(witt_to_json(theta_inv(s)));
    } else if (action == "upsilon") {
        LambdaElement s = lambda_from_json(effective_document(opt, opt.in));
        emit(ghost_to_json(upsilon(s)));
    } else {
        throw ParseError("unknown series action \"" + action + "\"");
    }
    return 0;
}

int run_bridge(const std::string& action, const Options& opt) {
    if (action == "teich") {
        if (opt.n < 1) throw ParseError("--n is required");
        if (opt.ring.empty()) throw ParseError("--ring is required");
        RingPtr ring = Ring::make(opt.ring);
        RElem x = ring->parse(opt.x.empty() ? "0" : opt.x);
        RElem v;
        if (!opt.g.empty())
            v = teich_g(*ring, x, opt.n, parse_qpoly(opt.g));
        else if (!opt.m.empty())
            v = teich_m(*ring, x, opt.n, Int(opt.m));
        else
            v = teich_classical(*ring, x, opt.n);
        emit(Json(ring->to_string(v)));
        return 0;
    }
    if (opt.in.empty()) throw ParseError("--in is required");
    if (action == "tau") {
        WittVector a = witt_from_json(effective_document(opt, opt.in));
        emit(necklace_to_json(tau(a)));
    } else if (action == "tau-inv") {
        NecklaceVector b = necklace_from_json(effective_document(opt, opt.in));
        emit(witt_to_json(tau_inv(b)));
    } else {
        throw ParseError("unknown bridge action \"" + action + "\"");
    }
    return 0;
}

int run_symfun(const std::string& action, const Options& opt) {
    if (opt.vars < 1) throw ParseError("--vars is required");
    if (opt.n < 1) throw ParseError("--n is required");
    SymPoly p(opt.vars);
    if (action == "u")
        p = u_q(opt.vars, opt.n);
    else if (action == "v")
        p = v_q(opt.vars, opt.n);
    else if (action == "hq")
        p = hq(opt.vars, opt.n);
    else if (action == "gq")
        p = gq(opt.vars, opt.n);
    else if (action == "qn")
        p = qn_basis(opt.vars, opt.n);
    else
        throw ParseError("unknown symfun action \"" + action + "\"");
    Json out;
    out["vars"] = opt.vars;
    out["n"] = opt.n;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["m"] = e;
        term["c"] = c.to_string();
        terms.push_back(term);
    }
    out["terms"] = terms;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for deformed Witt and necklace rings"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    Options opt;
    std::string action;
    std::vector<CLI::App*> groups;
    for (const char* name : {"witt", "neck", "series", "bridge", "symfun"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->set_help_flag("--help", "print usage");
        sub->add_option("action", action)->required();
        sub->add_option("--ring", opt.ring, "ring selector: Z, Q, Zq, Qq, Zmod:<k>");
        sub->add_option("--g", opt.g, "deformation polynomial g(q)");
        sub->add_option("--m", opt.m, "integer deformation m");
        sub->add_option("--trunc", opt.trunc, "truncation level N");
        sub->add_option("--in", opt.in, "input JSON (inline or file path)");
        sub->add_option("--in2", opt.in2, "second input JSON");
        sub->add_option("--r", opt.r, "induction/restriction index");
        sub->add_option("--h", opt.h, "transport target (0 or 2)");
        sub->add_option("--n", opt.n, "index n");
        sub->add_option("--i", opt.i, "divisor i");
        sub->add_option("--j", opt.j, "divisor j");
        sub->add_option("--vars", opt.vars, "alphabet size");
        sub->add_option("--x", opt.x, "element argument");
        groups.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        for (CLI::App* sub : groups) {
            if (!sub->parsed()) continue;
            const std::string& group = sub->get_name();
            if (group == "witt") return run_witt(action, opt);
            if (group == "neck") return run_neck(action, opt);
            if (group == "series") return run_series(action, opt);
            if (group == "bridge") return run_bridge(action, opt);
            if (group == "symfun") return run_symfun(action, opt);
        }
        return 2;
    } catch (const Error& e) {
        Json err;
        err["error"] = e.code();
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        if (e.code() == "ParseError") return 2;
        if (e.code() == "IntegralityViolation") return 4;
        return 3;
    } catch (const Json::exception& e) {
        Json err;
        err["error"] = "ParseError";
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "InternalError";
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        return 3;
    }
}
