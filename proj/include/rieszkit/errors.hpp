#ifndef RIESZKIT_ERRORS_HPP
#define RIESZKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rieszkit {

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : std::runtime_error {
    explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};

struct WrongAlgebra : std::invalid_argument {
    explicit WrongAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainViolation : std::domain_error {
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

struct DegreeTooLarge : std::domain_error {
    explicit DegreeTooLarge(const std::string& what) : std::domain_error(what) {}
};

struct PochhammerZero : std::domain_error {
    explicit PochhammerZero(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedVariant : std::invalid_argument {
    explicit UnsupportedVariant(const std::string& what) : std::invalid_argument(what) {}
};

struct TooFewSamples : std::invalid_argument {
    explicit TooFewSamples(const std::string& what) : std::invalid_argument(what) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter validation failure carrying every violated condition.
struct InvalidParams : std::invalid_argument {
    std::vector<std::string> violations;

    explicit InvalidParams(std::vector<std::string> v)
        : std::invalid_argument(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid parameters:";
        for (const auto& s : v) {
            out += "\n  - ";
            out += s;
        }
        return out;
    }
};

} // namespace rieszkit

#endif
