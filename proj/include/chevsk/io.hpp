#pragma once

// Text formats.
//   matrix:     "p N dim" then dim rows of dim decimal entries
//   generators: m, then m matrices

#include <iosfwd>
#include <string>

#include "chevsk/group.hpp"

namespace chevsk {

ModMatrix read_matrix(std::istream& is);
void write_matrix(std::ostream& os, const ModMatrix& m);

// Throws InvalidElement if det != 1.
GroupElement read_element(std::istream& is);
GenSet read_generators(std::istream& is);
void write_generators(std::ostream& os, const GenSet& s);

GroupElement read_element_file(const std::string& path);
GenSet read_generators_file(const std::string& path);

}  // namespace chevsk
