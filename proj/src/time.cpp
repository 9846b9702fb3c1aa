#include "time.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>

namespace ltrm {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

// std::chrono's civil calendar is the calendar authority here; both
// directions go through sys_days (proleptic Gregorian).
std::int64_t days_from_civil(int y, int m, int d) {
  using namespace std::chrono;
  return sys_days{year{y} / m / d}.time_since_epoch().count();
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  using namespace std::chrono;
  year_month_day ymd{sys_days{days{z}}};
  y = static_cast<int>(ymd.year());
  m = static_cast<unsigned>(ymd.month());
  d = static_cast<unsigned>(ymd.day());
}

bool valid_civil_date(int y, int m, int d) {
  using namespace std::chrono;
  if (y < -32767 || y > 32767) return false;
  return (year{y} / m / d).ok();
}

std::int64_t seconds_of_fields(const CivilFields& f) {
  return days_from_civil(f.year, f.month, f.day) * kSecondsPerDay + f.hour * 3600 +
         f.minute * 60 + f.second;
}

// Index of the granule containing the given instant.
std::int64_t index_at(Granularity g, std::int64_t civil_seconds) {
  switch (g) {
    case Granularity::Second: return civil_seconds;
    case Granularity::Minute: return floor_div(civil_seconds, 60);
    case Granularity::Hour: return floor_div(civil_seconds, 3600);
    case Granularity::Day: return floor_div(civil_seconds, kSecondsPerDay);
    case Granularity::Week:
      // ISO weeks start Monday; 1970-01-01 is a Thursday, so the epoch week
      // starts at day -3.
      return floor_div(floor_div(civil_seconds, kSecondsPerDay) + 3, 7);
    case Granularity::Month: {
      int y, m, d;
      civil_from_days(floor_div(civil_seconds, kSecondsPerDay), y, m, d);
      return static_cast<std::int64_t>(y - 1970) * 12 + (m - 1);
    }
    case Granularity::Year: {
      int y, m, d;
      civil_from_days(floor_div(civil_seconds, kSecondsPerDay), y, m, d);
      return y - 1970;
    }
  }
  return 0;
}

std::int64_t start_seconds(Granularity g, std::int64_t index) {
  switch (g) {
    case Granularity::Second: return index;
    case Granularity::Minute: return index * 60;
    case Granularity::Hour: return index * 3600;
    case Granularity::Day: return index * kSecondsPerDay;
    case Granularity::Week: return (index * 7 - 3) * kSecondsPerDay;
    case Granularity::Month: {
      std::int64_t y = 1970 + floor_div(index, 12);
      int m = static_cast<int>(floor_mod(index, 12)) + 1;
      return days_from_civil(static_cast<int>(y), m, 1) * kSecondsPerDay;
    }
    case Granularity::Year:
      return days_from_civil(static_cast<int>(1970 + index), 1, 1) * kSecondsPerDay;
  }
  return 0;
}

void require_same_granularity(Granularity a, Granularity b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::GranularityMismatch,
                std::string(what) + ": got " + granularity_name(a) + " and " +
                    granularity_name(b));
  }
}

}  // namespace

const char* granularity_name(Granularity g) {
  switch (g) {
    case Granularity::Second: return "SECOND";
    case Granularity::Minute: return "MINUTE";
    case Granularity::Hour: return "HOUR";
    case Granularity::Day: return "DAY";
    case Granularity::Week: return "WEEK";
    case Granularity::Month: return "MONTH";
    case Granularity::Year: return "YEAR";
  }
  return "?";
}

std::optional<Granularity> granularity_from_name(const std::string& name) {
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  static constexpr std::array<Granularity, 7> all = {
      Granularity::Second, Granularity::Minute, Granularity::Hour,  Granularity::Day,
      Granularity::Week,   Granularity::Month,  Granularity::Year};
  for (Granularity g : all) {
    if (upper == granularity_name(g)) return g;
  }
  return std::nullopt;
}

int compare_timepoints(const TimePoint& a, const TimePoint& b) {
  require_same_granularity(a.granularity, b.granularity, "timepoint comparison");
  if (a.index < b.index) return -1;
  if (a.index > b.index) return 1;
  return 0;
}

const char* interval_relation_name(IntervalRelation r) {
  switch (r) {
    case IntervalRelation::Before: return "BEFORE";
    case IntervalRelation::Meets: return "MEETS";
    case IntervalRelation::Overlaps: return "OVERLAPS";
    case IntervalRelation::OverlapsFamily: return "OVERLAPS_FAMILY";
    case IntervalRelation::Contains: return "CONTAINS";
    case IntervalRelation::ContainedBy: return "CONTAINED_BY";
    case IntervalRelation::Equals: return "EQUALS";
    case IntervalRelation::MetBy: return "MET_BY";
    case IntervalRelation::After: return "AFTER";
  }
  return "?";
}

TimePoint timepoint_of_instant(const CivilFields& fields, Granularity g) {
  return {g, index_at(g, seconds_of_fields(fields))};
}

TimePoint make_timepoint(const CivilFields& f, Granularity g) {
  CivilFields n = f;
  if (n.month == 0) n.month = 1;
  if (n.day == 0) n.day = 1;
  if (!valid_civil_date(n.year, n.month, n.day) || n.hour < 0 || n.hour > 23 ||
      n.minute < 0 || n.minute > 59 || n.second < 0 || n.second > 59) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "invalid date %02d-%02d-%04d %02d:%02d:%02d", f.day,
                  f.month, f.year, f.hour, f.minute, f.second);
    throw Error(ErrorKind::InvalidDate, buf);
  }

  auto finer_field_set = [&](Granularity field_g, int value, int start_value) {
    if (finer_than(field_g, g) && value != 0 && value != start_value) {
      throw Error(ErrorKind::GranularityMismatch,
                  std::string(granularity_name(field_g)) +
                      " field given for a " + granularity_name(g) + " timepoint");
    }
  };
  // Week granules are located by a full date, so month/day stay exempt there.
  if (g != Granularity::Week) {
    finer_field_set(Granularity::Month, f.month, 1);
    finer_field_set(Granularity::Day, f.day, 1);
  }
  finer_field_set(Granularity::Hour, f.hour, 0);
  finer_field_set(Granularity::Minute, f.minute, 0);
  finer_field_set(Granularity::Second, f.second, 0);

  return timepoint_of_instant(n, g);
}

TimePoint convert(const TimePoint& tp, Granularity target) {
  if (target == tp.granularity) return tp;
  std::int64_t s = start_seconds(tp.granularity, tp.index);
  std::int64_t idx = index_at(target, s);
  if (finer_than(target, tp.granularity) && start_seconds(target, idx) < s) {
    // Only reachable for week targets, whose granules straddle month and
    // year boundaries: take the first week starting inside tp.
    ++idx;
  }
  return {target, idx};
}

CivilFields civil_of(const TimePoint& tp) {
  std::int64_t s = start_seconds(tp.granularity, tp.index);
  std::int64_t day = floor_div(s, kSecondsPerDay);
  std::int64_t rem = floor_mod(s, kSecondsPerDay);
  CivilFields f;
  civil_from_days(day, f.year, f.month, f.day);
  f.hour = static_cast<int>(rem / 3600);
  f.minute = static_cast<int>((rem % 3600) / 60);
  f.second = static_cast<int>(rem % 60);
  return f;
}

std::int64_t granule_start_seconds(const TimePoint& tp) {
  return start_seconds(tp.granularity, tp.index);
}

FixedClock FixedClock::from_system_time() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  CivilFields f{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec};
  return FixedClock(seconds_of_fields(f));
}

FixedClock FixedClock::at(const CivilFields& fields) {
  return FixedClock(seconds_of_fields(fields));
}

TimePoint FixedClock::now_at(Granularity g) const {
  return {g, index_at(g, civil_seconds_)};
}

TimePoint resolve_end(const EndPoint& e, Granularity g, const Clock& clock) {
  if (e.is_now) return clock.now_at(g);
  require_same_granularity(e.point.granularity, g, "endpoint resolution");
  return e.point;
}

ResolvedInterval resolve_interval(const Interval& i, const Clock& clock) {
  TimePoint end = resolve_end(i.end, i.start.granularity, clock);
  return {i.start.index, end.index};
}

IntervalRelation interval_relate(const Interval& a, const Interval& b, const Clock& clock) {
  require_same_granularity(a.start.granularity, b.start.granularity, "interval relation");
  ResolvedInterval ra = resolve_interval(a, clock);
  ResolvedInterval rb = resolve_interval(b, clock);

  if (ra.end + 1 == rb.start) return IntervalRelation::Meets;
  if (ra.end < rb.start) return IntervalRelation::Before;
  if (rb.end + 1 == ra.start) return IntervalRelation::MetBy;
  if (rb.end < ra.start) return IntervalRelation::After;
  if (ra.start == rb.start && ra.end == rb.end) return IntervalRelation::Equals;
  if (ra.start < rb.start && rb.end < ra.end) return IntervalRelation::Contains;
  if (rb.start < ra.start && ra.end < rb.end) return IntervalRelation::ContainedBy;
  if (ra.start < rb.start && ra.end < rb.end) return IntervalRelation::Overlaps;
  return IntervalRelation::OverlapsFamily;
}

bool interval_contains_point(const Interval& i, const TimePoint& t, const Clock& clock) {
  require_same_granularity(i.start.granularity, t.granularity, "interval containment");
  ResolvedInterval r = resolve_interval(i, clock);
  return r.start <= t.index && t.index <= r.end;
}

bool intervals_intersect(const Interval& a, const Interval& b, const Clock& clock) {
  require_same_granularity(a.start.granularity, b.start.granularity, "interval intersection");
  ResolvedInterval ra = resolve_interval(a, clock);
  ResolvedInterval rb = resolve_interval(b, clock);
  return std::max(ra.start, rb.start) <= std::min(ra.end, rb.end);
}

namespace {

bool read_int(const std::string& s, std::size_t pos, int width, int& out) {
  if (pos + width > s.size()) return false;
  int v = 0;
  for (int i = 0; i < width; ++i) {
    char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

CivilFields parse_civil(const std::string& text, bool with_seconds) {
  CivilFields f;
  auto fail = [&](std::size_t pos) -> CivilFields {
    throw Error(ErrorKind::InvalidDate, "invalid date literal '" + text + "'", pos);
  };
  if (!read_int(text, 0, 2, f.day) || text.size() < 10 || text[2] != '-' || text[5] != '-') {
    return fail(0);
  }
  if (!read_int(text, 3, 2, f.month) || !read_int(text, 6, 4, f.year)) return fail(0);
  std::size_t pos = 10;
  if (pos < text.size()) {
    if (text[pos] != ' ' || pos + 6 > text.size()) return fail(pos);
    ++pos;
    if (!read_int(text, pos, 2, f.hour) || text[pos + 2] != ':' ||
        !read_int(text, pos + 3, 2, f.minute)) {
      return fail(pos);
    }
    pos += 5;
    if (pos < text.size()) {
      if (!with_seconds || text[pos] != ':' || !read_int(text, pos + 1, 2, f.second)) {
        return fail(pos);
      }
      pos += 3;
    }
    if (pos != text.size()) return fail(pos);
  }
  if (!valid_civil_date(f.year, f.month, f.day) || f.hour > 23 || f.minute > 59 || f.second > 59) {
    return fail(0);
  }
  return f;
}

Granularity literal_granularity(const std::string& text) {
  if (text.size() <= 10) return Granularity::Day;
  if (text.size() <= 16) return Granularity::Minute;
  return Granularity::Second;
}

std::string format_timepoint(const TimePoint& tp) {
  CivilFields f = civil_of(tp);
  char buf[32];
  switch (tp.granularity) {
    case Granularity::Second:
      std::snprintf(buf, sizeof buf, "%02d-%02d-%04d %02d:%02d:%02d", f.day, f.month, f.year,
                    f.hour, f.minute, f.second);
      break;
    case Granularity::Minute:
    case Granularity::Hour:
      std::snprintf(buf, sizeof buf, "%02d-%02d-%04d %02d:%02d", f.day, f.month, f.year, f.hour,
                    f.minute);
      break;
    default:
      std::snprintf(buf, sizeof buf, "%02d-%02d-%04d", f.day, f.month, f.year);
      break;
  }
  return buf;
}

std::string format_endpoint(const EndPoint& e) {
  if (e.is_now) return "Current time";
  return format_timepoint(e.point);
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDate: return "InvalidDate";
    case ErrorKind::GranularityMismatch: return "GranularityMismatch";
    case ErrorKind::DuplicateRelation: return "DuplicateRelation";
    case ErrorKind::KeyMissingActivationStart: return "KeyMissingActivationStart";
    case ErrorKind::EmptyEntityKey: return "EmptyEntityKey";
    case ErrorKind::UnknownForeignTarget: return "UnknownForeignTarget";
    case ErrorKind::ReservedAttributeName: return "ReservedAttributeName";
    case ErrorKind::SchemaRule: return "SchemaRule";
    case ErrorKind::UnknownRelation: return "UnknownRelation";
    case ErrorKind::NotTemporal: return "NotTemporal";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::NoOpenTuple: return "NoOpenTuple";
    case ErrorKind::EffectiveBeforeStart: return "EffectiveBeforeStart";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::TemporalClauseOnSnapshotRelation: return "TemporalClauseOnSnapshotRelation";
    case ErrorKind::CatalogSyntaxError: return "CatalogSyntaxError";
    case ErrorKind::CsvFormatError: return "CsvFormatError";
    case ErrorKind::IoError: return "IoError";
  }
  return "?";
}

}  // namespace ltrm
