#pragma once

#include <stdexcept>
#include <string>

namespace elma {

enum class Errc {
    out_of_range,
    not_reduced,
    constraint,
    excluded,
    precondition,
    not_mersenne_form,
    not_even_residue,
    template_inapplicable,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace elma
