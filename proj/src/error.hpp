#ifndef LTRM_ERROR_HPP
#define LTRM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltrm {

// Every failure the engine can signal. The C API maps these 1:1 onto
// status codes, so the set is append-only.
enum class ErrorKind {
  InvalidDate,
  GranularityMismatch,
  DuplicateRelation,
  KeyMissingActivationStart,
  EmptyEntityKey,
  UnknownForeignTarget,
  ReservedAttributeName,
  SchemaRule,
  UnknownRelation,
  NotTemporal,
  TypeMismatch,
  ConstraintViolation,
  NoOpenTuple,
  EffectiveBeforeStart,
  LexError,
  ParseError,
  UnknownAttribute,
  TemporalClauseOnSnapshotRelation,
  CatalogSyntaxError,
  CsvFormatError,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, std::string message, std::size_t position = kNoPosition)
      : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }

  // Byte offset into the offending source text, or kNoPosition.
  std::size_t position() const { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

}  // namespace ltrm

#endif  // LTRM_ERROR_HPP
