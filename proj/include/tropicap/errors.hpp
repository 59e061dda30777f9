#ifndef TROPICAP_ERRORS_HPP
#define TROPICAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropicap {

enum class Errc {
    non_symmetric,
    bad_corank,
    dimension_mismatch,
    not_a_circuit,
    polygon_not_planar,
    not_full_dimensional,
    not_transversal,
    not_pure,
    not_balanced,
    not_simplicial,
    not_zero_dimensional,
    bad_partition,
    retries_exhausted,
    parse_error,
    invalid_config,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Internal invariant check; these fire only on implementation bugs.
inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::internal, what);
}

}  // namespace tropicap

#endif
