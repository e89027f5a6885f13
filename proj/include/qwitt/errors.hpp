#ifndef QWITT_ERRORS_HPP
#define QWITT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwitt {

// Base for all library errors. `code()` is a stable machine-readable name
// used by the CLI for error JSON and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define QWITT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                        \
        explicit Name(const std::string& detail = "")              \
            : Error(#Name, detail) {}                              \
    }

QWITT_DEFINE_ERROR(ParseError);
QWITT_DEFINE_ERROR(RingMismatch);
QWITT_DEFINE_ERROR(ContextMismatch);
QWITT_DEFINE_ERROR(NotDivisible);
QWITT_DEFINE_ERROR(NotInvertible);
QWITT_DEFINE_ERROR(NotUnital);
QWITT_DEFINE_ERROR(NoPsiStructure);
QWITT_DEFINE_ERROR(DegenerateDeformation);
QWITT_DEFINE_ERROR(ConstantTermNotOne);
QWITT_DEFINE_ERROR(ConstantTermNotZero);
QWITT_DEFINE_ERROR(RingLacksRationalDivision);
QWITT_DEFINE_ERROR(IntegralityViolation);
QWITT_DEFINE_ERROR(TruncationTooShort);
QWITT_DEFINE_ERROR(UnboundVariable);
QWITT_DEFINE_ERROR(DegreeExceedsAlphabet);

#undef QWITT_DEFINE_ERROR

} // namespace qwitt

#endif
