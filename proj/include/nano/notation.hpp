#pragma once

#include <string>
#include <string_view>

#include "nano/alphabet.hpp"
#include "nano/canonical.hpp"
#include "nano/nanophrase.hpp"

namespace nano {

/// Reads the textual notation
///
///     phrase     := component ("|" component)*
///     component  := occurrence*
///     occurrence := NAME ":" SYMBOL "*"?
///
/// e.g. "A:+ B:- A:+ | B:-". Whitespace separates occurrences; empty
/// components are allowed, so "|" is the trivial 2-component phrase.
/// Both occurrences of a letter must carry the same projection.
Nanophrase parse_phrase(std::string_view text, const Alphabet& alphabet);

std::string format_phrase(const Nanophrase& p);

/// Formats the representative with generated names.
std::string format_form(const CanonicalForm& form, const Alphabet& alphabet);

}  // namespace nano
