#pragma once

#include <stdexcept>
#include <string>

namespace coho {

enum class Errc {
    FieldMismatch,
    NotContained,
    NotWellDefined,
    MalformedInput,
    MixedCoalgebras,
    CatalogMismatch,
    NotAComplex,
    NotABicomplex,
    RestrictionFailed,
    PivotFailure,
    ZigZagFailure,
    DanglingReference,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotContained: return "NotContained";
        case Errc::NotWellDefined: return "NotWellDefined";
        case Errc::MalformedInput: return "MalformedInput";
        case Errc::MixedCoalgebras: return "MixedCoalgebras";
        case Errc::CatalogMismatch: return "CatalogMismatch";
        case Errc::NotAComplex: return "NotAComplex";
        case Errc::NotABicomplex: return "NotABicomplex";
        case Errc::RestrictionFailed: return "RestrictionFailed";
        case Errc::PivotFailure: return "PivotFailure";
        case Errc::ZigZagFailure: return "ZigZagFailure";
        case Errc::DanglingReference: return "DanglingReference";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace coho
