// Exception types shared by the finmem library.

#pragma once

#include <stdexcept>
#include <string>

namespace finmem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FINMEM_ERROR(name) \
    class name : public Error { \
    public: \
        using Error::Error; \
    }

FINMEM_ERROR(ParseError);
FINMEM_ERROR(InvalidAutomaton);
FINMEM_ERROR(InvalidPermutation);
FINMEM_ERROR(InvalidInjection);
FINMEM_ERROR(MalformedLetter);
FINMEM_ERROR(PreconditionViolated);
FINMEM_ERROR(NotAccepted);
FINMEM_ERROR(NotARun);
FINMEM_ERROR(WindowTooShort);
FINMEM_ERROR(WordTooShort);
FINMEM_ERROR(EmptyQ);
FINMEM_ERROR(BudgetExceeded);
FINMEM_ERROR(UnknownName);
FINMEM_ERROR(UnsupportedSetShape);

#undef FINMEM_ERROR

} // namespace finmem
