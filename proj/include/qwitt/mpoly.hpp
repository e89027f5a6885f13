#ifndef QWITT_MPOLY_HPP
#define QWITT_MPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qwitt/ring.hpp"

namespace qwitt {

// Indexed variable for universal polynomials: x_d or y_d.
struct MVar {
    uint8_t family = 0; // 0 = x, 1 = y
    uint32_t index = 1; // d >= 1

    friend bool operator==(const MVar& a, const MVar& b) {
        return a.family == b.family && a.index == b.index;
    }
    friend bool operator<(const MVar& a, const MVar& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.family < b.family;
    }
    std::string to_string() const {
        return (family == 0 ? "x" : "y") + std::to_string(index);
    }
};

inline MVar xvar(uint32_t d) { return MVar{0, d}; }
inline MVar yvar(uint32_t d) { return MVar{1, d}; }

// Sparse multivariate polynomial in the variables {x_d, y_d : d >= 1} with
// QPoly coefficients (polynomials in the deformation parameter). Terms are
// kept in a canonical graded-lexicographic order; zero coefficients are
// never stored.
class MPoly {
public:
    // monomial: sorted (variable, exponent > 0) pairs
    using Monomial = std::vector<std::pair<MVar, uint32_t>>;

    struct MonomialLess {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    using TermMap = std::map<Monomial, QPoly, MonomialLess>;

    MPoly() = default;
    explicit MPoly(const QPoly& c);
    static MPoly variable(const MVar& v);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o) { return *this += -o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly scaled(const QPoly& c) const;
    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned long e) const;

    // every QPoly coefficient lies in Z[g]
    bool coefficients_integer_in(const QPoly& g) const;

    // Exact evaluation in `ring`. `bind(v)` supplies the value of each
    // occurring variable (UnboundVariable when it has none) and `g_image`
    // is the ring element substituted for the deformation parameter of the
    // coefficients.
    RElem evaluate(const Ring& ring,
                   const std::function<std::optional<RElem>(const MVar&)>& bind,
                   const RElem& g_image) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const QPoly& c);
    TermMap terms_;
};

// Evaluation with an explicit binding table (spec operation mpoly_substitute).
RElem mpoly_substitute(const MPoly& p, const Ring& ring,
                       const std::map<MVar, RElem>& bindings,
                       const RElem& g_image);

} // namespace qwitt

#endif
