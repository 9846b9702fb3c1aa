#ifndef LTRM_VALUE_HPP
#define LTRM_VALUE_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "time.hpp"

namespace ltrm {

enum class ValueType : std::uint8_t { Integer, Text, Money, Date };

const char* value_type_name(ValueType t);

// Integer amount plus currency tag; amounts compare only within one currency.
struct Money {
  std::int64_t amount = 0;
  std::string currency = "Rs";

  friend bool operator==(const Money&, const Money&) = default;
};

// An atomic attribute value. Date values are day granules.
class Value {
 public:
  Value() : v_(std::monostate{}) {}
  static Value null() { return Value(); }
  static Value integer(std::int64_t i) { return Value(i); }
  static Value text(std::string s) { return Value(std::move(s)); }
  static Value money(std::int64_t amount, std::string currency = "Rs") {
    return Value(Money{amount, std::move(currency)});
  }
  static Value date(TimePoint tp) { return Value(tp); }

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
  bool is(ValueType t) const;

  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }
  const Money& as_money() const { return std::get<Money>(v_); }
  const TimePoint& as_date() const { return std::get<TimePoint>(v_); }

  friend bool operator==(const Value&, const Value&) = default;

  // Three-way ordering for predicate evaluation. Throws TypeMismatch when the
  // operands are of different kinds, different currencies, or Null.
  int compare(const Value& other) const;

 private:
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  explicit Value(Money m) : v_(std::move(m)) {}
  explicit Value(TimePoint tp) : v_(tp) {}

  std::variant<std::monostate, std::int64_t, std::string, Money, TimePoint> v_;
};

// Plain text form: 103, abc, Rs.900, 13-05-1995. Null renders empty.
std::string value_to_string(const Value& v);

// Table-format form differs only for money, which renders "Rs. 900".
std::string value_to_display(const Value& v);

// Parses per declared type; dates are parsed at Granularity::Day.
// Money accepts an optional space after the currency dot ("Rs. 900").
Value parse_value(const std::string& text, ValueType type);

}  // namespace ltrm

#endif  // LTRM_VALUE_HPP
