#ifndef QWITT_TEST_HELPERS_HPP
#define QWITT_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "qwitt/necklace.hpp"
#include "qwitt/textio.hpp"
#include "qwitt/witt.hpp"

namespace qwitt::testutil {

inline QPoly P(const std::string& s) { return parse_qpoly(s); }
inline QRat R(const std::string& s) { return parse_qrat(s); }

inline WittContext ctx_g(const std::string& g, int n,
                         const std::string& ring = "Zq") {
    return WittContext(deformation_poly(P(g)), n, Ring::make(ring));
}

inline WittContext ctx_m(long m, int n, const std::string& ring = "Z") {
    return WittContext(deformation_int(Int(m)), n, Ring::make(ring));
}

inline std::vector<RElem> parse_coords(const WittContext& c,
                                       std::vector<std::string> texts) {
    std::vector<RElem> v;
    for (const auto& t : texts) v.push_back(c.ring->parse(t));
    while (static_cast<int>(v.size()) < c.trunc) v.push_back(c.ring->zero());
    return v;
}

inline WittVector wv(const WittContext& c, std::vector<std::string> texts) {
    return make_witt(c, parse_coords(c, std::move(texts)));
}

inline NecklaceVector nv(const WittContext& c, std::vector<std::string> texts) {
    return make_necklace(c, parse_coords(c, std::move(texts)));
}

inline WittVector random_witt(const WittContext& c, std::mt19937_64& rng) {
    std::vector<RElem> v;
    for (int i = 0; i < c.trunc; ++i) v.push_back(c.ring->sample(rng));
    return make_witt(c, std::move(v));
}

inline NecklaceVector random_necklace(const WittContext& c,
                                      std::mt19937_64& rng) {
    std::vector<RElem> v;
    for (int i = 0; i < c.trunc; ++i) v.push_back(c.ring->sample(rng));
    return make_necklace(c, std::move(v));
}

} // namespace qwitt::testutil

#endif
