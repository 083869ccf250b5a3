#ifndef QBETA_ERRORS_HPP
#define QBETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg = "element is not invertible") : Error(msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg = "denominator vanishes at evaluation point") : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct InvalidFamily : Error {
    explicit InvalidFamily(const std::string& msg) : Error(msg) {}
};

struct UnknownCase : Error {
    explicit UnknownCase(const std::string& msg) : Error(msg) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct CharacterNotEmbeddable : Error {
    explicit CharacterNotEmbeddable(const std::string& msg) : Error(msg) {}
};

struct DivergentSpec : Error {
    explicit DivergentSpec(const std::string& msg) : Error(msg) {}
};

} // namespace qbeta

#endif
