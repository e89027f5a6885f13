// Python bindings over the string-based surface: coordinates travel as
// exact coefficient strings so no precision is lost crossing the boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwitt/bridges.hpp"
#include "qwitt/errors.hpp"
#include "qwitt/lambda.hpp"
#include "qwitt/necklace.hpp"
#include "qwitt/symfun.hpp"
#include "qwitt/textio.hpp"
#include "qwitt/witt.hpp"

namespace py = pybind11;
using namespace qwitt;

namespace {

WittContext build_ctx(const std::string& ring, const std::string& g,
                      const std::string& m, int trunc) {
    RingPtr r = Ring::make(ring);
    if (!g.empty())
        return WittContext(deformation_poly(parse_qpoly(g)), trunc, r);
    if (!m.empty())
        return WittContext(deformation_int(Int(m)), trunc, r);
    throw ParseError("a deformation g or m is required");
}

WittVector to_witt(const WittContext& c, const std::vector<std::string>& coords) {
    std::vector<RElem> v;
    for (const auto& s : coords) v.push_back(c.ring->parse(s));
    return make_witt(c, std::move(v));
}

NecklaceVector to_neck(const WittContext& c,
                       const std::vector<std::string>& coords) {
    std::vector<RElem> v;
    for (const auto& s : coords) v.push_back(c.ring->parse(s));
    return make_necklace(c, std::move(v));
}

std::vector<std::string> from_coords(const WittContext& c,
                                     const std::vector<RElem>& coords) {
    std::vector<std::string> out;
    for (const RElem& e : coords) out.push_back(c.ring->to_string(e));
    return out;
}

} // namespace

PYBIND11_MODULE(_qwitt, mod) {
    mod.doc() = "exact arithmetic for deformed Witt and necklace rings";

    py::register_exception<Error>(mod, "QwittError");

    mod.def(
        "witt_add",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            WittContext c = build_ctx(ring, g, m, trunc);
            WittVector r = witt_add(to_witt(c, a), to_witt(c, b));
            return from_coords(c, r.coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"), py::arg("b"));

    mod.def(
        "witt_mul",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            WittContext c = build_ctx(ring, g, m, trunc);
            WittVector r = witt_mul(to_witt(c, a), to_witt(c, b));
            return from_coords(c, r.coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"), py::arg("b"));

    mod.def(
        "witt_neg",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, witt_neg(to_witt(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def(
        "ghost",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, ghost(to_witt(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def(
        "unghost",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& w) {
            WittContext c = build_ctx(ring, g, m, trunc);
            std::vector<RElem> v;
            for (const auto& s : w) v.push_back(c.ring->parse(s));
            return from_coords(c, unghost(GhostVector{c, std::move(v)}).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("w"));

    mod.def(
        "witt_unity",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, witt_unity(c).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"));

    mod.def(
        "transport",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a, int h) {
            WittContext c = build_ctx(ring, g, m, trunc);
            WittVector v = to_witt(c, a);
            WittVector r = h >= 0 ? transport_to_h(v, h)
                                  : transport_two_minus_g(v);
            return from_coords(r.ctx, r.coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"), py::arg("h") = -1);

    mod.def(
        "induce",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, int r, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, induce(r, to_witt(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("r"), py::arg("a"));

    mod.def(
        "witt_restrict",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, int r, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            WittVector out = witt_restrict(r, to_witt(c, a));
            return from_coords(out.ctx, out.coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("r"), py::arg("a"));

    mod.def("gen_polys", [](int n) {
        const DefiningPolys& dp = defining_polys(n);
        auto dump = [](const MPoly& p) {
            std::vector<py::dict> terms;
            for (const auto& [mono, coef] : p.terms()) {
                py::dict t;
                t["c"] = coef.to_string();
                std::vector<std::pair<std::string, unsigned>> vars;
                for (const auto& [v, e] : mono) vars.emplace_back(v.to_string(), e);
                t["vars"] = vars;
                terms.push_back(t);
            }
            return terms;
        };
        py::dict out;
        out["n"] = n;
        out["S"] = dump(dp.S);
        out["P"] = dump(dp.P);
        out["I"] = dump(dp.I);
        return out;
    });

    mod.def(
        "neck_mul",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            WittContext c = build_ctx(ring, g, m, trunc);
            NecklaceVector r = neck_mul(to_neck(c, a), to_neck(c, b));
            return from_coords(c, r.coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"), py::arg("b"));

    mod.def(
        "neck_ghost",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, neck_ghost(to_neck(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def("mobius", [](const std::string& m, int n) {
        Int v = mobius_m(Int(m), n);
        return v.get_str();
    });

    mod.def("mobius_hat", [](const std::string& g, int n) {
        return mobius_hat(parse_qpoly(g), n).to_string();
    });

    mod.def(
        "neck_coeff",
        [](const std::string& g, const std::string& m, int n, int i, int j) {
            Deformation def = g.empty() ? deformation_int(Int(m))
                                        : deformation_poly(parse_qpoly(g));
            return struct_const_qrat(def, n, i, j).to_string();
        },
        py::arg("g") = "", py::arg("m") = "", py::arg("n"), py::arg("i"),
        py::arg("j"));

    mod.def(
        "neck_unity",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, neck_unity(c).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"));

    mod.def(
        "tau",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, tau(to_witt(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def(
        "tau_inv",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            return from_coords(c, tau_inv(to_neck(c, a)).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def(
        "teich",
        [](const std::string& ring, const std::string& g, const std::string& m,
           const std::string& x, int n) {
            RingPtr r = Ring::make(ring);
            RElem xe = r->parse(x);
            RElem v;
            if (!g.empty())
                v = teich_g(*r, xe, n, parse_qpoly(g));
            else if (!m.empty())
                v = teich_m(*r, xe, n, Int(m));
            else
                v = teich_classical(*r, xe, n);
            return r->to_string(v);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("x"),
        py::arg("n"));

    mod.def(
        "theta",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& a) {
            WittContext c = build_ctx(ring, g, m, trunc);
            LambdaElement s = theta(to_witt(c, a));
            std::vector<std::string> out;
            for (int k = 0; k <= s.series.order(); ++k)
                out.push_back(c.ring->to_string(s.series.coeff(k)));
            return out;
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("a"));

    mod.def(
        "theta_inv",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& series) {
            WittContext c = build_ctx(ring, g, m, trunc);
            std::vector<RElem> coeffs;
            for (const auto& s : series) coeffs.push_back(c.ring->parse(s));
            LambdaElement e =
                make_lambda(c, Series(c.ring, trunc, std::move(coeffs)));
            return from_coords(c, theta_inv(e).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("series"));

    mod.def(
        "upsilon",
        [](const std::string& ring, const std::string& g, const std::string& m,
           int trunc, const std::vector<std::string>& series) {
            WittContext c = build_ctx(ring, g, m, trunc);
            std::vector<RElem> coeffs;
            for (const auto& s : series) coeffs.push_back(c.ring->parse(s));
            LambdaElement e =
                make_lambda(c, Series(c.ring, trunc, std::move(coeffs)));
            return from_coords(c, upsilon(e).coords);
        },
        py::arg("ring"), py::arg("g") = "", py::arg("m") = "", py::arg("trunc"),
        py::arg("series"));

    mod.def("kimlee", [](const std::vector<long>& a, int trunc) {
        std::vector<std::string> out;
        for (const QPoly& b : kimlee_expand(a, trunc))
            out.push_back(b.to_string());
        return out;
    });

    mod.def("symfun", [](const std::string& basis, int vars, int n) {
        SymPoly p(vars);
        if (basis == "u")
            p = u_q(vars, n);
        else if (basis == "v")
            p = v_q(vars, n);
        else if (basis == "hq")
            p = hq(vars, n);
        else if (basis == "gq")
            p = gq(vars, n);
        else if (basis == "qn")
            p = qn_basis(vars, n);
        else
            throw ParseError("unknown basis \"" + basis + "\"");
        std::vector<std::pair<std::vector<unsigned>, std::string>> out;
        for (const auto& [e, c] : p.terms()) {
            std::vector<unsigned> exps(e.begin(), e.end());
            out.emplace_back(exps, c.to_string());
        }
        return out;
    });

    mod.def("ring_self_check", [](const std::string& ring, unsigned seed,
                                  int iterations) {
        return Ring::make(ring)->self_check(seed, iterations);
    }, py::arg("ring"), py::arg("seed") = 1, py::arg("iterations") = 64);
}
