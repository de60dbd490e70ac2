#pragma once

#include <stdexcept>
#include <string>

namespace hochhom {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
  public:
    DivisionByZero() : Error("division by zero") {}
};

/** Operands come from different scalar models (rational vs cyclotomic, or two orders). */
class ModelMismatch : public Error
{
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error
{
  public:
    using Error::Error;
};

/** An algebra specification or configuration violates its invariants. */
class InvalidSpec : public Error
{
  public:
    using Error::Error;
};

class NotInSmallComplex : public Error
{
  public:
    using Error::Error;
};

class NotSemiClassical : public Error
{
  public:
    using Error::Error;
};

class WordTooLong : public Error
{
  public:
    using Error::Error;
};

class NotASubspace : public Error
{
  public:
    using Error::Error;
};

class ComplexBroken : public Error
{
  public:
    using Error::Error;
};

class RhoInC : public Error
{
  public:
    using Error::Error;
};

class UnsupportedDegree : public Error
{
  public:
    using Error::Error;
};

}   // namespace hochhom
