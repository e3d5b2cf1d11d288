#ifndef QEXTREMAL_FAMILY_IO_HPP
#define QEXTREMAL_FAMILY_IO_HPP

#include "qextremal/family.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qx {

// Family file format:
//
//   q n m
//   k
//   <k rows of n space-separated codes, in RREF>
//
//   k
//   ...
//
// Blocks are separated by a blank line. Lines whose first non-blank
// character is '#' are comments. Files are certificates: a block that is not
// already in reduced row echelon form is rejected, never canonicalized.

std::string format_family(const Family &f);
void write_family(const Family &f, std::ostream &out);
/// Throws std::runtime_error naming the path on I/O failure.
void write_family_file(const Family &f, const std::filesystem::path &path);

/// Throws ParseError, NotCanonical, DuplicateMember, NotPrimePower.
Family parse_family(std::istream &in, int max_order = kDefaultMaxOrder);
Family read_family_file(const std::filesystem::path &path,
                        int max_order = kDefaultMaxOrder);

} // namespace qx

#endif // QEXTREMAL_FAMILY_IO_HPP
