#pragma once

#include <stdexcept>
#include <string>

namespace muposet {

enum class ErrorKind {
  invalid_word,    // malformed permutation text or non-permutation letters
  out_of_range,    // index, length or parameter outside its documented range
  out_of_class,    // permutation outside the class an operation is defined on
  not_contained,   // required pattern containment does not hold
  too_large,       // computation refused because it would not stay bounded
  overflow,        // exact integer result exceeds the widest native integer
  domain,          // argument outside a formula's domain
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace muposet
