#ifndef TORELLI_ERROR_HPP_
#define TORELLI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torelli {

  // A violated precondition of a mathematical operation (wrong rank, word
  // outside the commutator subgroup, invalid configuration, ...).
  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text input. `position` is the 0-based index of the offending
  // whitespace-separated token.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : std::runtime_error(what + " (token " + std::to_string(position) + ")"),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace torelli

#endif  // TORELLI_ERROR_HPP_
