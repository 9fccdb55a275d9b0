#pragma once

#include <stdexcept>
#include <string>

namespace g2sub {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define G2SUB_ERROR(Name)                                   \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& what) : Error(what) {} \
    };

G2SUB_ERROR(ParseError)
G2SUB_ERROR(SingularMatrix)
G2SUB_ERROR(PoleAtPoint)
G2SUB_ERROR(SingularGroupElement)
G2SUB_ERROR(ZeroCubic)
G2SUB_ERROR(IrrationalSplitting)
G2SUB_ERROR(NotRegularConormal)
G2SUB_ERROR(WrongSide)
G2SUB_ERROR(NonPositive)
G2SUB_ERROR(InconsistentSystem)
G2SUB_ERROR(NEvsMismatch)
G2SUB_ERROR(NotInSpan)

#undef G2SUB_ERROR

}  // namespace g2sub
