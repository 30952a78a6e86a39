#ifndef ROOMMATES_ERROR_HPP
#define ROOMMATES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace roommates {

enum class Errc {
    TooSmall,        // instance size below the supported minimum (n < 3)
    BadSize,         // row/column counts disagree with n
    NotPermutation,  // a preference row is not a permutation of 1..n
    NotInvolution,   // partner[partner[i]] != i
    OutOfRange,      // id outside 1..n
    TooLarge,        // exhaustive operation beyond its size guard
    SelfLoopPresent, // decomposition input contains a self-loop
    UnknownVertex,   // vertex id not present in the graph
    InvalidCycle,    // cycle fails alternation or membership checks
    NoCycleFound,    // exhaustive extraction failed; signals a bug
    NotADominator,   // claimed dominating matching does not dominate
    ParseError,      // malformed instance text
    BadArgs,         // bad command-line arguments
    IoError,         // file could not be read or written
};

const char* errc_name(Errc c);

/// Library error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace roommates

#endif
