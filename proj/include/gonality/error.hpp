#pragma once

#include <stdexcept>
#include <string>

namespace gonality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GONALITY_DEFINE_ERROR(Name)                    \
    class Name : public Error {                        \
    public:                                            \
        explicit Name(const std::string& what)         \
            : Error(#Name ": " + what) {}              \
    }

GONALITY_DEFINE_ERROR(MalformedInput);
GONALITY_DEFINE_ERROR(LoopEdge);
GONALITY_DEFINE_ERROR(Disconnected);
GONALITY_DEFINE_ERROR(NotSimple);
GONALITY_DEFINE_ERROR(LengthMismatch);
GONALITY_DEFINE_ERROR(InvalidArgument);
GONALITY_DEFINE_ERROR(NotEffective);
GONALITY_DEFINE_ERROR(InvalidFiring);
GONALITY_DEFINE_ERROR(NotEquivalent);
GONALITY_DEFINE_ERROR(DegreeMismatch);
GONALITY_DEFINE_ERROR(ChipOverflow);
GONALITY_DEFINE_ERROR(NegativeChips);
GONALITY_DEFINE_ERROR(NotStrongSeparator);
GONALITY_DEFINE_ERROR(InternalBound);
GONALITY_DEFINE_ERROR(InvalidSpec);
GONALITY_DEFINE_ERROR(NotATricycle);

#undef GONALITY_DEFINE_ERROR

} // namespace gonality
