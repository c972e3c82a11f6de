#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcert {

struct IncompatibleField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedHopfAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maschke obstruction: the spanning left integral has counit zero, so it
// cannot be normalized.
struct NotSemisimple : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SplittingFieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModuleSearchFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReplayFailed : std::runtime_error {
    ReplayFailed(int step_, const std::string& what_)
        : std::runtime_error("replay step " + std::to_string(step_) + ": " + what_), step(step_) {}
    int step;
};

}  // namespace hopfcert
