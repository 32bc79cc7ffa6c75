/**
 * Error types shared across the toolkit.
 *
 * Every error carries a stable name that the CLI prints verbatim, so that
 * failures can be matched by scripts without parsing the message text.
 */

#ifndef CTK_ERRORS_HPP
#define CTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctk {

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name))
    {
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CTK_DEFINE_ERROR(NAME)                                      \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& message)                   \
            : Error(#NAME, message)                                 \
        {                                                           \
        }                                                           \
    }

CTK_DEFINE_ERROR(EmptyInput);
CTK_DEFINE_ERROR(MalformedSimplex);
CTK_DEFINE_ERROR(UnknownVertex);
CTK_DEFINE_ERROR(DimensionMismatch);
CTK_DEFINE_ERROR(NotPrime);
CTK_DEFINE_ERROR(BudgetUnachievable);
CTK_DEFINE_ERROR(BudgetExceeded);
CTK_DEFINE_ERROR(ConstructionFailed);
CTK_DEFINE_ERROR(FieldMismatch);
CTK_DEFINE_ERROR(InvalidCover);
CTK_DEFINE_ERROR(UnknownName);
CTK_DEFINE_ERROR(OrderViolation);
CTK_DEFINE_ERROR(DomainError);
CTK_DEFINE_ERROR(MissingField);
CTK_DEFINE_ERROR(InvalidArgument);
CTK_DEFINE_ERROR(ParseError);

#undef CTK_DEFINE_ERROR

}  // namespace ctk

#endif  // CTK_ERRORS_HPP
