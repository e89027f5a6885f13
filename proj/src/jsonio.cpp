#include "qwitt/jsonio.hpp"

#include <nlohmann/json.hpp>

#include "qwitt/errors.hpp"
#include "qwitt/textio.hpp"

namespace qwitt {

namespace {

std::vector<RElem> coords_from_json(const WittContext& ctx, const Json& j,
                                    const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("document needs an array field \"") + key +
                         "\"");
    std::vector<RElem> coords;
    for (const auto& item : j.at(key))
        coords.push_back(ctx.ring->parse(item.get<std::string>()));
    return coords;
}

Json coords_to_json(const WittContext& ctx, const std::vector<RElem>& coords) {
    Json arr = Json::array();
    for (const RElem& c : coords) arr.push_back(ctx.ring->to_string(c));
    return arr;
}

} // namespace

WittContext context_from_json(const Json& j) {
    if (!j.contains("ring")) throw ParseError("document needs a \"ring\" field");
    RingPtr ring = Ring::make(j.at("ring").get<std::string>());
    if (!j.contains("trunc")) throw ParseError("document needs a \"trunc\" field");
    int trunc = j.at("trunc").get<int>();
    if (j.contains("g") && j.contains("m"))
        throw ParseError("specify either \"g\" or \"m\", not both");
    if (j.contains("g")) {
        QPoly g = parse_qpoly(j.at("g").get<std::string>());
        if (!g.has_integer_coeffs())
            throw ParseError("deformation polynomial must have integer coefficients");
        return WittContext(deformation_poly(g), trunc, ring);
    }
    if (j.contains("m")) {
        Int m;
        if (j.at("m").is_number_integer()) {
            m = Int(j.at("m").get<long>());
        } else {
            m = Int(j.at("m").get<std::string>());
        }
        return WittContext(deformation_int(m), trunc, ring);
    }
    throw ParseError("document needs a deformation field \"g\" or \"m\"");
}

Json context_to_json(const WittContext& ctx) {
    Json j;
    j["ring"] = ctx.ring->name();
    if (ctx.is_polynomial()) {
        j["g"] = ctx.g().to_string();
    } else {
        if (mpz_fits_slong_p(ctx.m().get_mpz_t()))
            j["m"] = ctx.m().get_si();
        else
            j["m"] = ctx.m().get_str();
    }
    j["trunc"] = ctx.trunc;
    return j;
}

WittVector witt_from_json(const Json& j) {
    WittContext ctx = context_from_json(j);
    return make_witt(ctx, coords_from_json(ctx, j, "coords"));
}

Json witt_to_json(const WittVector& a) {
    Json j = context_to_json(a.ctx);
    j["coords"] = coords_to_json(a.ctx, a.coords);
    return j;
}

NecklaceVector necklace_from_json(const Json& j) {
    WittContext ctx = context_from_json(j);
    return make_necklace(ctx, coords_from_json(ctx, j, "coords"));
}

Json necklace_to_json(const NecklaceVector& a) {
    Json j = context_to_json(a.ctx);
    j["coords"] = coords_to_json(a.ctx, a.coords);
    return j;
}

GhostVector ghost_from_json(const Json& j) {
    WittContext ctx = context_from_json(j);
    std::vector<RElem> coords = coords_from_json(ctx, j, "coords");
    if (static_cast<int>(coords.size()) != ctx.trunc)
        throw ParseError("coordinate count != truncation");
    return GhostVector{ctx, std::move(coords)};
}

Json ghost_to_json(const GhostVector& a) {
    Json j = context_to_json(a.ctx);
    j["coords"] = coords_to_json(a.ctx, a.coords);
    return j;
}

LambdaElement lambda_from_json(const Json& j) {
    WittContext ctx = context_from_json(j);
    std::vector<RElem> coeffs = coords_from_json(ctx, j, "series");
    if (static_cast<int>(coeffs.size()) != ctx.trunc + 1)
        throw ParseError("series documents carry trunc+1 coefficients (t^0..t^N)");
    return make_lambda(ctx, Series(ctx.ring, ctx.trunc, std::move(coeffs)));
}

Json lambda_to_json(const LambdaElement& s) {
    Json j = context_to_json(s.ctx);
    Json arr = Json::array();
    for (int k = 0; k <= s.series.order(); ++k)
        arr.push_back(s.ctx.ring->to_string(s.series.coeff(k)));
    j["series"] = arr;
    return j;
}

namespace {

Json mpoly_to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["c"] = c.to_string();
        Json xs = Json::array(), ys = Json::array();
        for (const auto& [v, e] : m) {
            Json pair = Json::array({v.index, e});
            if (v.family == 0)
                xs.push_back(pair);
            else
                ys.push_back(pair);
        }
        term["x"] = xs;
        term["y"] = ys;
        arr.push_back(term);
    }
    return arr;
}

} // namespace

Json defining_polys_to_json(int n, const DefiningPolys& dp) {
    Json j;
    j["n"] = n;
    j["S"] = mpoly_to_json(dp.S);
    j["P"] = mpoly_to_json(dp.P);
    j["I"] = mpoly_to_json(dp.I);
    return j;
}

} // namespace qwitt
