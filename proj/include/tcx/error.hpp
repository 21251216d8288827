#ifndef TCX_ERROR_HPP_
#define TCX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcx {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidWord : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Raised when the coset table fills up before closing. This says nothing
  // about the index being infinite.
  class CosetLimitExceeded : public Error {
   public:
    explicit CosetLimitExceeded(std::size_t limit)
        : Error("coset limit of " + std::to_string(limit)
                + " exceeded before the table closed"),
          _limit(limit) {}

    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
  };

  class TableNotClosed : public Error {
   public:
    TableNotClosed() : Error("coset table is not closed") {}
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class UnrecognizedType : public Error {
   public:
    using Error::Error;
  };

}  // namespace tcx

#endif  // TCX_ERROR_HPP_
