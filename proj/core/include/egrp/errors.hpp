#ifndef EGRP_ERRORS_HPP
#define EGRP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace egrp
{

class GroupError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// The input is too large for full enumeration (element count, Aut search
// cap, oracle cap or coset index).
class OrderBoundExceeded : public GroupError
{
public:
  OrderBoundExceeded(std::string const &what, std::size_t bound)
  : GroupError(what + " (bound " + std::to_string(bound) + ")"),
    _bound(bound)
  {}

  std::size_t bound() const { return _bound; }

private:
  std::size_t _bound;
};

class InvalidParameter : public GroupError
{
public:
  using GroupError::GroupError;
};

class DegreeMismatch : public GroupError
{
public:
  using GroupError::GroupError;
};

class NotNormal : public GroupError
{
public:
  using GroupError::GroupError;
};

class NotAHomomorphism : public GroupError
{
public:
  using GroupError::GroupError;
};

class NotMonomorphism : public GroupError
{
public:
  using GroupError::GroupError;
};

class NotAbelian : public GroupError
{
public:
  using GroupError::GroupError;
};

class TrivialGroup : public GroupError
{
public:
  using GroupError::GroupError;
};

class InvalidAction : public GroupError
{
public:
  using GroupError::GroupError;
};

class PreconditionFailed : public GroupError
{
public:
  using GroupError::GroupError;
};

class UnknownSuite : public GroupError
{
public:
  using GroupError::GroupError;
};

// Parse failure at a byte offset of the input text.
class SyntaxError : public GroupError
{
public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              std::string const &found);

  std::size_t offset() const { return _offset; }
  std::vector<std::string> const &expected() const { return _expected; }

private:
  std::size_t _offset;
  std::vector<std::string> _expected;
};

class SemanticError : public GroupError
{
public:
  SemanticError(std::size_t offset, std::string const &what)
  : GroupError(what + " at offset " + std::to_string(offset)),
    _offset(offset)
  {}

  std::size_t offset() const { return _offset; }

private:
  std::size_t _offset;
};

} // namespace egrp

#endif // EGRP_ERRORS_HPP
