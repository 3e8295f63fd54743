#pragma once

#include <stdexcept>
#include <string>

namespace windrisk {

// Base class for every error the library raises on bad data or bad
// parameters. CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- ingest ---------------------------------------------------------------

class CsvFormatError : public Error {
 public:
  using Error::Error;
};

class MissingColumnError : public Error {
 public:
  using Error::Error;
};

class GapInSeriesError : public Error {
 public:
  GapInSeriesError(const std::string& msg, std::string first_missing)
      : Error(msg), first_missing_(std::move(first_missing)) {}
  const std::string& first_missing() const { return first_missing_; }

 private:
  std::string first_missing_;
};

class NegativeOrNonFiniteValueError : public Error {
 public:
  using Error::Error;
};

class DuplicateTimestampError : public Error {
 public:
  using Error::Error;
};

class WrongRowCountError : public Error {
 public:
  using Error::Error;
};

// --- power model ----------------------------------------------------------

class NoAdmissibleWindError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class AllZeroWeightsError : public Error {
 public:
  using Error::Error;
};

// --- scenario / statistics ------------------------------------------------

class InsufficientDaysError : public Error {
 public:
  using Error::Error;
};

class NoDeficitAtReferenceError : public Error {
 public:
  using Error::Error;
};

// --- autocorrelation ------------------------------------------------------

class ZeroVarianceError : public Error {
 public:
  using Error::Error;
};

class AllDaysDegenerateError : public Error {
 public:
  using Error::Error;
};

class EmptyDistributionError : public Error {
 public:
  using Error::Error;
};

// --- growth fit -----------------------------------------------------------

class YearMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroTotalError : public Error {
 public:
  using Error::Error;
};

class NonPositiveValueError : public Error {
 public:
  using Error::Error;
};

class SingularFitError : public Error {
 public:
  using Error::Error;
};

class NoCrossingError : public Error {
 public:
  using Error::Error;
};

// --- IO -------------------------------------------------------------------

class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid domain-type parameter (penetration out of range, bad cut speeds...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace windrisk
