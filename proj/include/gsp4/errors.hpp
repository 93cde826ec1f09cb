#pragma once

#include <stdexcept>
#include <string>

namespace gsp4 {

struct NotSymplectic : std::runtime_error {
    explicit NotSymplectic(const std::string& what) : std::runtime_error(what) {}
};

struct NotInU : std::runtime_error {
    explicit NotInU(const std::string& what) : std::runtime_error(what) {}
};

struct NotInLongCell : std::runtime_error {
    explicit NotInLongCell(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedScale : std::runtime_error {
    explicit UnsupportedScale(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionsNotMet : std::runtime_error {
    explicit ConditionsNotMet(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct GammaPole : std::runtime_error {
    explicit GammaPole(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gsp4
