#ifndef ROOMMATES_IO_HPP
#define ROOMMATES_IO_HPP

#include <iosfwd>
#include <string>

#include "roommates/model.hpp"

namespace roommates {

/// Instance text format (whitespace-separated integers, '#' starts a
/// comment running to end of line):
///
///   line 1:         n
///   lines 2..n+1:   agent i's full ranking, most preferred first,
///                   a permutation of 1..n including i itself
///   line n+2:       matching line; j at position i means mu(i) = j,
///                   and mu(i) = i marks agent i as unmatched
///
/// Token layout is free-form: only the order matters.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

std::string render_instance(const Instance& instance);

} // namespace roommates

#endif
