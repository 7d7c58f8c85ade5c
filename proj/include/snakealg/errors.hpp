#pragma once

#include <stdexcept>
#include <string>

namespace snakealg {

// Every failure the library can signal. The CLI maps parse-class codes to
// exit code 1 and everything else to exit code 2.
enum class Errc {
    CompositeModulus,
    ModulusTooLarge,
    InvalidExtension,
    DivisionByZero,
    MixedFields,
    EvenOrCompositeModulus,
    BudgetExceeded,
    WordTooLong,
    InvalidHeadTag,
    MixedHeadCounts,
    NotSingular,
    UnsupportedHeadCount,
    InfiniteField,
    NotAugmentationZero,
    HeadIndexOutOfRange,
    SyntaxError,
    ScalarParseError,
    BadFieldSpec,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::InvalidExtension: return "InvalidExtension";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::EvenOrCompositeModulus: return "EvenOrCompositeModulus";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::WordTooLong: return "WordTooLong";
    case Errc::InvalidHeadTag: return "InvalidHeadTag";
    case Errc::MixedHeadCounts: return "MixedHeadCounts";
    case Errc::NotSingular: return "NotSingular";
    case Errc::UnsupportedHeadCount: return "UnsupportedHeadCount";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::NotAugmentationZero: return "NotAugmentationZero";
    case Errc::HeadIndexOutOfRange: return "HeadIndexOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ScalarParseError: return "ScalarParseError";
    case Errc::BadFieldSpec: return "BadFieldSpec";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    Errc code() const noexcept { return code_; }

    // True for errors caused by malformed input text rather than by the
    // mathematical content of a request.
    bool parse_class() const noexcept {
        return code_ == Errc::SyntaxError || code_ == Errc::ScalarParseError ||
               code_ == Errc::BadFieldSpec;
    }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace snakealg
