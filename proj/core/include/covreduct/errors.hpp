#pragma once

#include <stdexcept>
#include <string>

namespace covreduct {

/// Machine-readable failure categories surfaced by the library.
/// CLI mapping: io_error and unreadable input exit 2, everything else exits 1.
enum class errc {
    invalid_argument,         // malformed parameter (m = 0, epsilon < 0, ...)
    empty_block,              // a covering block or neighborhood came out empty
    not_a_covering,           // blocks do not cover the universe
    not_a_partition,          // decision classes overlap, leave a gap, or are empty
    universe_mismatch,        // a member id is outside [0, n)
    empty_restriction,        // restrict() called with an empty keep-set
    restriction_breaks_covering, // kept objects uncovered after restriction (defensive)
    not_a_refinement,         // proposed covering has a block inside no old block
    not_a_coarsening,         // some old block fits inside no proposed block
    stale_state,              // incremental state fails its consistency fingerprint
    parse_error,              // structurally malformed input file (with line number)
    non_numeric_conditional,  // conditional CSV cell failed numeric conversion
    empty_file,               // input had no data rows
    timeout,                  // a benchmark cell exceeded its wall-clock cap
    io_error,                 // file could not be opened / written
};

const char* errc_name(errc code) noexcept;

/// Single exception type carrying an errc; message always includes the code name.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace covreduct
