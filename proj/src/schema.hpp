#ifndef LTRM_SCHEMA_HPP
#define LTRM_SCHEMA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "value.hpp"

namespace ltrm {

inline constexpr const char* kActivationStart = "activation_start";
inline constexpr const char* kActivationEnd = "activation_end";
inline constexpr const char* kUpdateTime = "updatetime";

inline bool is_timestamp_attribute(const std::string& name) {
  return name == kActivationStart || name == kActivationEnd || name == kUpdateTime;
}

struct AttributeDef {
  std::string name;
  ValueType type = ValueType::Integer;
  bool nullable = false;
};

struct ForeignKey {
  std::vector<std::string> local_attributes;
  std::string target_relation;
  std::vector<std::string> target_attributes;
};

// How the relation participates in time. Semi-temporal is a catalog label
// only; the engine treats it as non-temporal.
enum class TemporalClass : std::uint8_t { NonTemporal, Temporal, SemiTemporal };

// Declared shape of a relation. For temporal relations the stored layout is
// the user attributes followed by activation_start, activation_end and
// updatetime; the key must include activation_start and the entity key names
// the attributes that identify one real-world entity across its history.
struct RelationSchema {
  std::string name;
  std::vector<AttributeDef> attributes;  // user attributes only
  TemporalClass classification = TemporalClass::NonTemporal;
  std::vector<std::string> key;
  std::vector<std::string> entity_key;
  Granularity granularity = Granularity::Minute;
  std::vector<ForeignKey> foreign_keys;

  bool temporal() const { return classification == TemporalClass::Temporal; }

  const AttributeDef* find_attribute(const std::string& attr) const;
  std::size_t attribute_index(const std::string& attr) const;  // throws UnknownAttribute
  bool has_attribute(const std::string& attr) const { return find_attribute(attr) != nullptr; }
};

// (activation_start, activation_end, updatetime), all at the schema
// granularity. updatetime may precede activation_start: recording a fact
// before it takes effect is legal.
struct ActivationStamp {
  TimePoint activation_start;
  EndPoint activation_end;
  TimePoint updatetime;

  bool open() const { return activation_end.is_now; }
  Interval interval() const { return {activation_start, activation_end}; }

  friend bool operator==(const ActivationStamp&, const ActivationStamp&) = default;
};

struct Tuple {
  std::int64_t tuple_id = 0;
  std::vector<Value> values;  // aligned with RelationSchema::attributes
  std::optional<ActivationStamp> stamp;

  const Value& value_at(std::size_t i) const { return values[i]; }
};

}  // namespace ltrm

#endif  // LTRM_SCHEMA_HPP
