#ifndef QEXTREMAL_ERRORS_HPP
#define QEXTREMAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qx {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
public:
  explicit NotPrimePower(long long q)
      : Error("not a prime power: " + std::to_string(q)) {}
};

class UnsupportedField : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("inverse of zero field element") {}
};

class OutOfRange : public Error {
public:
  using Error::Error;
};

class AmbientMismatch : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class ParityMismatch : public Error {
public:
  using Error::Error;
};

/// Raised when a proven bound is requested where none is known (q even).
class EvenQUnproven : public Error {
public:
  using Error::Error;
};

class TooLarge : public Error {
public:
  TooLarge(std::size_t count, std::size_t limit)
      : Error("candidate count " + std::to_string(count) +
              " exceeds limit " + std::to_string(limit)),
        count_(count) {}
  std::size_t count() const noexcept { return count_; }

private:
  std::size_t count_;
};

/// A search witness contradicts a proven theorem: an implementation bug.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

class DuplicateMember : public Error {
public:
  DuplicateMember(std::size_t first, std::size_t second)
      : Error("duplicate member: blocks " + std::to_string(first) + " and " +
              std::to_string(second)),
        first_(first), second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class NotCanonical : public Error {
public:
  NotCanonical(std::size_t block, std::size_t line)
      : Error("block " + std::to_string(block) + " (line " +
              std::to_string(line) + ") is not in reduced row echelon form"),
        block_(block) {}
  std::size_t block() const noexcept { return block_; }

private:
  std::size_t block_;
};

} // namespace qx

#endif // QEXTREMAL_ERRORS_HPP
