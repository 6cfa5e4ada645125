#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace thickset {

// Domain errors carry a stable name; the CLI prints it and exits with code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define THICKSET_ERROR(E)                                                  \
    struct E : Error {                                                     \
        explicit E(const std::string& message) : Error(#E, message) {}     \
    }

THICKSET_ERROR(DimensionMismatch);
THICKSET_ERROR(NotAComplex);
THICKSET_ERROR(NotChainMap);
THICKSET_ERROR(CycleDetected);
THICKSET_ERROR(UnknownElement);
THICKSET_ERROR(PosetTooLarge);
THICKSET_ERROR(ModelMismatch);
THICKSET_ERROR(EmptySupport);
THICKSET_ERROR(NotDisjoint);
THICKSET_ERROR(NotUpClosed);
THICKSET_ERROR(ZeroComplex);
THICKSET_ERROR(SupportNotContained);
THICKSET_ERROR(AmbientMismatch);
THICKSET_ERROR(UnknownCatalogEntry);
THICKSET_ERROR(InvalidArgument);

#undef THICKSET_ERROR

}  // namespace thickset
