#include "value.hpp"

#include <cctype>
#include <cstdlib>

namespace ltrm {

const char* value_type_name(ValueType t) {
  switch (t) {
    case ValueType::Integer: return "INT";
    case ValueType::Text: return "TEXT";
    case ValueType::Money: return "MONEY";
    case ValueType::Date: return "DATE";
  }
  return "?";
}

bool Value::is(ValueType t) const {
  switch (t) {
    case ValueType::Integer: return std::holds_alternative<std::int64_t>(v_);
    case ValueType::Text: return std::holds_alternative<std::string>(v_);
    case ValueType::Money: return std::holds_alternative<Money>(v_);
    case ValueType::Date: return std::holds_alternative<TimePoint>(v_);
  }
  return false;
}

int Value::compare(const Value& other) const {
  if (is_null() || other.is_null()) {
    throw Error(ErrorKind::TypeMismatch, "cannot order NULL values");
  }
  if (v_.index() != other.v_.index()) {
    throw Error(ErrorKind::TypeMismatch, "cannot compare " + value_to_string(*this) +
                                             " with " + value_to_string(other));
  }
  auto cmp = [](auto a, auto b) { return a < b ? -1 : (b < a ? 1 : 0); };
  if (auto* i = std::get_if<std::int64_t>(&v_)) return cmp(*i, other.as_integer());
  if (auto* s = std::get_if<std::string>(&v_)) {
    int c = s->compare(other.as_text());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (auto* m = std::get_if<Money>(&v_)) {
    if (m->currency != other.as_money().currency) {
      throw Error(ErrorKind::TypeMismatch, "cannot compare currencies " + m->currency + " and " +
                                               other.as_money().currency);
    }
    return cmp(m->amount, other.as_money().amount);
  }
  const TimePoint& tp = std::get<TimePoint>(v_);
  return compare_timepoints(tp, other.as_date());
}

std::string value_to_string(const Value& v) {
  if (v.is_null()) return "";
  if (v.is(ValueType::Integer)) return std::to_string(v.as_integer());
  if (v.is(ValueType::Text)) return v.as_text();
  if (v.is(ValueType::Money)) {
    return v.as_money().currency + "." + std::to_string(v.as_money().amount);
  }
  return format_timepoint(v.as_date());
}

std::string value_to_display(const Value& v) {
  if (v.is(ValueType::Money)) {
    return v.as_money().currency + ". " + std::to_string(v.as_money().amount);
  }
  return value_to_string(v);
}

Value parse_value(const std::string& text, ValueType type) {
  switch (type) {
    case ValueType::Integer: {
      if (text.empty()) throw Error(ErrorKind::TypeMismatch, "empty INT value");
      std::size_t i = text[0] == '-' ? 1 : 0;
      if (i == text.size()) throw Error(ErrorKind::TypeMismatch, "bad INT value '" + text + "'");
      for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw Error(ErrorKind::TypeMismatch, "bad INT value '" + text + "'");
        }
      }
      return Value::integer(std::strtoll(text.c_str(), nullptr, 10));
    }
    case ValueType::Text:
      return Value::text(text);
    case ValueType::Money: {
      std::size_t dot = text.find('.');
      if (dot == std::string::npos || dot == 0) {
        throw Error(ErrorKind::TypeMismatch, "bad MONEY value '" + text + "'");
      }
      std::string currency = text.substr(0, dot);
      for (char c : currency) {
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw Error(ErrorKind::TypeMismatch, "bad MONEY value '" + text + "'");
        }
      }
      std::size_t i = dot + 1;
      while (i < text.size() && text[i] == ' ') ++i;
      if (i == text.size()) throw Error(ErrorKind::TypeMismatch, "bad MONEY value '" + text + "'");
      std::int64_t amount = 0;
      for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw Error(ErrorKind::TypeMismatch, "bad MONEY value '" + text + "'");
        }
        amount = amount * 10 + (text[i] - '0');
      }
      return Value::money(amount, currency);
    }
    case ValueType::Date: {
      try {
        return Value::date(timepoint_of_instant(parse_civil(text), Granularity::Day));
      } catch (const Error&) {
        throw Error(ErrorKind::TypeMismatch, "bad DATE value '" + text + "'");
      }
    }
  }
  throw Error(ErrorKind::TypeMismatch, "unknown value type");
}

}  // namespace ltrm
