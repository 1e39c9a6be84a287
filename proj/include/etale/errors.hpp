#ifndef ETALE_ERRORS_HPP
#define ETALE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etale {

// Error categories. "Mathematical" rejections (no_cover, not_admissible)
// are distinguished from malformed input so callers can branch on them.
enum class errc {
    syntax_error,
    wrong_variable,
    no_antiderivative,
    not_squarefree,
    even_degree,
    not_monic,
    char_two,
    zero_function,
    pole_bound_violated,
    no_cover,
    not_admissible,
    bad_lambda,
    unknown_family,
    not_normalized,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax_error: return "syntax_error";
        case errc::wrong_variable: return "wrong_variable";
        case errc::no_antiderivative: return "no_antiderivative";
        case errc::not_squarefree: return "not_squarefree";
        case errc::even_degree: return "even_degree";
        case errc::not_monic: return "not_monic";
        case errc::char_two: return "char_two";
        case errc::zero_function: return "zero_function";
        case errc::pole_bound_violated: return "pole_bound_violated";
        case errc::no_cover: return "no_cover";
        case errc::not_admissible: return "not_admissible";
        case errc::bad_lambda: return "bad_lambda";
        case errc::unknown_family: return "unknown_family";
        case errc::not_normalized: return "not_normalized";
        case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

    Error(errc code, std::string message, std::size_t offset = no_offset)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

    errc code() const noexcept { return code_; }

    // Byte offset into the offending input, for parse errors.
    std::size_t offset() const noexcept { return offset_; }
    bool has_offset() const noexcept { return offset_ != no_offset; }

    // Rejections that state a mathematical fact about valid input.
    bool is_mathematical() const noexcept {
        return code_ == errc::no_cover || code_ == errc::not_admissible;
    }

  private:
    errc code_;
    std::size_t offset_;
};

}  // namespace etale

#endif
