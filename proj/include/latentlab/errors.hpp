#pragma once

#include <stdexcept>
#include <string>

namespace latentlab {

// Every failure raised by the library derives from Error; the category drives
// the CLI exit code.
enum class ErrorKind {
  kDimension,
  kDomain,
  kState,
  kFormat,
  kConfig,
  kStructure,
  kNumeric,
  kData,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define LATENTLAB_DEFINE_ERROR(Name, Kind)                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

LATENTLAB_DEFINE_ERROR(DimensionError, kDimension)
LATENTLAB_DEFINE_ERROR(DomainError, kDomain)
LATENTLAB_DEFINE_ERROR(StateError, kState)
LATENTLAB_DEFINE_ERROR(FormatError, kFormat)
LATENTLAB_DEFINE_ERROR(ConfigError, kConfig)
LATENTLAB_DEFINE_ERROR(StructureError, kStructure)
LATENTLAB_DEFINE_ERROR(NumericError, kNumeric)
LATENTLAB_DEFINE_ERROR(DataError, kData)

#undef LATENTLAB_DEFINE_ERROR

}  // namespace latentlab
