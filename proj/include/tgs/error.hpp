#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tgs {

/// Base of every error raised by the library.  `kind()` is the short class
/// name used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TGS_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

TGS_DEFINE_ERROR(DivisionByZero)
TGS_DEFINE_ERROR(TowerMismatch)
TGS_DEFINE_ERROR(NotFiniteOverPrefix)
TGS_DEFINE_ERROR(NotZeroDimensional)
TGS_DEFINE_ERROR(SeparatingFormNotFound)
TGS_DEFINE_ERROR(Unsupported)
TGS_DEFINE_ERROR(InvalidArgument)
TGS_DEFINE_ERROR(NotAUnit)
TGS_DEFINE_ERROR(InvalidComponent)
TGS_DEFINE_ERROR(NonIntegralComponent)
TGS_DEFINE_ERROR(NonFlatFiber)
TGS_DEFINE_ERROR(NotInvertibleAtPoint)
TGS_DEFINE_ERROR(NotRegularizable)
TGS_DEFINE_ERROR(NotInSubfield)
TGS_DEFINE_ERROR(CrossCheckFailed)

TGS_DEFINE_ERROR(TypeError)

#undef TGS_DEFINE_ERROR

/// Errors tied to a position in some source text.  `offset` is a byte
/// offset; front ends translate it to line and column.
class SourceError : public Error {
 public:
  SourceError(std::string kind, const std::string& what, std::size_t offset)
      : Error(std::move(kind), what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public SourceError {
 public:
  SyntaxError(const std::string& what, std::size_t offset, std::vector<std::string> expected = {})
      : SourceError("SyntaxError", what, offset), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class NameError : public SourceError {
 public:
  NameError(const std::string& what, std::size_t offset) : SourceError("NameError", what, offset) {}
};

}  // namespace tgs
