#pragma once

#include <stdexcept>
#include <string>

namespace modcat {

/// Machine-readable error codes surfaced by the CLI as {"error":{code,...}}.
enum class errc {
    cap_exceeded,
    not_prime,
    overflow,
    not_a_subgroup,
    not_a_cocycle,
    not_isotropic,
    not_even,
    not_bilinear,
    degenerate,
    degenerate_model,
    empty_fiber,
    lift_invalid,
    section_invalid,
    singular_s,
    bad_input,
};

const char* errc_name(errc c);

/// Domain error. Everything thrown by the library derives from this.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace modcat
