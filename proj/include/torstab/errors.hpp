#pragma once

#include <stdexcept>
#include <string>

namespace torstab {

// Every precondition violation in the library throws TorstabError with one of
// these codes. Codes are stable API; message text is for humans only.
enum class errc {
    zero_vector,
    rank_mismatch,
    empty_family,
    not_unimodular,
    too_few_rays,
    parallel_rays,
    not_complete,
    singular_cone,
    not_smooth,
    bad_normalization,
    too_many_weights,
    empty_index_set,
    bad_index,
    invalid_splitting,
    bad_parameter,
    too_few_blowups,
    not_a_refinement,
    internal,
};

const char* errc_name(errc c);

struct TorstabError : std::runtime_error {
    errc code;
    TorstabError(errc c, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what_arg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw TorstabError(c, msg); }

} // namespace torstab
