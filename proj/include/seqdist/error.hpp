#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqdist {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidAlphabet : public Error {
public:
  using Error::Error;
};

class SymbolNotInAlphabet : public Error {
public:
  SymbolNotInAlphabet(std::size_t position, char symbol)
      : Error("symbol '" + std::string(1, symbol) + "' at position " +
              std::to_string(position) + " is not in the alphabet"),
        position_(position), symbol_(symbol) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] char symbol() const noexcept { return symbol_; }

private:
  std::size_t position_;
  char symbol_;
};

class MalformedMatrix : public Error {
public:
  using Error::Error;
};

class MalformedFasta : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("sequence lengths differ: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class EmptySequence : public Error {
public:
  EmptySequence() : Error("operation requires a non-empty sequence") {}
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
  AlphabetMismatch() : Error("sequences use different alphabets") {}
};

class DoubleGapColumn : public Error {
public:
  explicit DoubleGapColumn(std::size_t column)
      : Error("alignment column " + std::to_string(column) +
              " has a gap in both rows") {}
};

class InvalidCode : public Error {
public:
  using Error::Error;
};

class NotPrime : public Error {
public:
  explicit NotPrime(unsigned long long n)
      : Error(std::to_string(n) + " is not prime") {}
};

class BaseSharesFactor : public Error {
public:
  BaseSharesFactor(unsigned long long p, unsigned long long base)
      : Error("prime " + std::to_string(p) + " divides base " +
              std::to_string(base)) {}
};

class InvalidBase : public Error {
public:
  explicit InvalidBase(unsigned long long base)
      : Error("base must be at least 2, got " + std::to_string(base)) {}
};

class NotARepetition : public Error {
public:
  using Error::Error;
};

} // namespace seqdist
