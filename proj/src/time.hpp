#ifndef LTRM_TIME_HPP
#define LTRM_TIME_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"

namespace ltrm {

// Discrete time: an instant is a whole granule counted from the granule
// containing 1970-01-01 00:00:00 (proleptic Gregorian, granule index 0).
// Ordered from finest to coarsest so the enum value doubles as a fineness
// rank: a < b means a is finer than b.
enum class Granularity : std::uint8_t {
  Second = 0,
  Minute,
  Hour,
  Day,
  Week,
  Month,
  Year,
};

const char* granularity_name(Granularity g);
std::optional<Granularity> granularity_from_name(const std::string& name);

inline bool finer_than(Granularity a, Granularity b) {
  return static_cast<int>(a) < static_cast<int>(b);
}

struct TimePoint {
  Granularity granularity = Granularity::Minute;
  std::int64_t index = 0;

  TimePoint successor() const { return {granularity, index + 1}; }
  TimePoint predecessor() const { return {granularity, index - 1}; }

  friend bool operator==(const TimePoint&, const TimePoint&) = default;
};

// Comparison helpers throw GranularityMismatch on mixed granularities;
// TimePoints at different granularities are not comparable.
int compare_timepoints(const TimePoint& a, const TimePoint& b);
inline bool before(const TimePoint& a, const TimePoint& b) { return compare_timepoints(a, b) < 0; }

// Calendar fields of a granule start. Fields finer than the granularity are
// their start values (month/day 1, time 0).
struct CivilFields {
  int year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

// Upper bound of an activation interval: either a fixed instant or the
// symbolic current time ("Current time" in rendered form).
struct EndPoint {
  bool is_now = false;
  TimePoint point;  // meaningful only when !is_now

  static EndPoint now() { return {true, {}}; }
  static EndPoint fixed(TimePoint tp) { return {false, tp}; }

  friend bool operator==(const EndPoint&, const EndPoint&) = default;
};

class Clock {
 public:
  virtual ~Clock() = default;
  virtual TimePoint now_at(Granularity g) const = 0;
};

// Clock frozen at one civil instant. Used for --now and, one instance per
// evaluation, to give stable reads when tracking the system clock.
class FixedClock : public Clock {
 public:
  explicit FixedClock(std::int64_t civil_seconds) : civil_seconds_(civil_seconds) {}
  static FixedClock from_system_time();
  static FixedClock at(const CivilFields& fields);

  TimePoint now_at(Granularity g) const override;
  std::int64_t civil_seconds() const { return civil_seconds_; }

 private:
  std::int64_t civil_seconds_;  // seconds since epoch, no zone, no leap seconds
};

// Closed interval [start, end] at one granularity; end may be NOW.
struct Interval {
  TimePoint start;
  EndPoint end;

  static Interval closed(TimePoint s, TimePoint e) { return {s, EndPoint::fixed(e)}; }
  static Interval open_ended(TimePoint s) { return {s, EndPoint::now()}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class IntervalRelation {
  Before,
  Meets,
  Overlaps,
  OverlapsFamily,  // starts/started-by/finishes/finished-by/overlapped-by
  Contains,
  ContainedBy,
  Equals,
  MetBy,
  After,
};

const char* interval_relation_name(IntervalRelation r);

// --- construction and conversion -------------------------------------------

// Granule containing the given civil date-time. Fields finer than g must be
// zero or their start value (1 for month/day); anything else is a
// GranularityMismatch. Week granules have no aligned civil fields, so
// Granularity::Week takes the full date and yields the ISO week (Monday
// start) containing it.
TimePoint make_timepoint(const CivilFields& fields, Granularity g);

// Floor construction without the finer-fields precondition; used by parsers.
TimePoint timepoint_of_instant(const CivilFields& fields, Granularity g);

// Equal granularity: identity. Finer target: first target granule starting
// inside tp (start-of-granule). Coarser target: the granule containing tp's
// start instant. Total; the refine-then-coarsen round trip is an identity.
TimePoint convert(const TimePoint& tp, Granularity target);

// Civil fields of the granule's start instant.
CivilFields civil_of(const TimePoint& tp);

// Seconds since epoch of the granule's start instant.
std::int64_t granule_start_seconds(const TimePoint& tp);

TimePoint resolve_end(const EndPoint& e, Granularity g, const Clock& clock);

// Resolved bounds; empty() when a proactive open interval has not activated
// yet (resolved end precedes start). Empty intervals contain no points and
// intersect nothing.
struct ResolvedInterval {
  std::int64_t start = 0;
  std::int64_t end = 0;
  bool empty() const { return end < start; }
};

ResolvedInterval resolve_interval(const Interval& i, const Clock& clock);

// Unique Allen-style relation between two non-empty intervals at the same
// granularity. MEETS holds exactly when a.end + 1 == b.start.
IntervalRelation interval_relate(const Interval& a, const Interval& b, const Clock& clock);

bool interval_contains_point(const Interval& i, const TimePoint& t, const Clock& clock);

bool intervals_intersect(const Interval& a, const Interval& b, const Clock& clock);

// --- calendar text ----------------------------------------------------------

// "DD-MM-YYYY", optionally " HH:MM" (and " HH:MM:SS" when with_seconds).
// Throws InvalidDate; position is relative to text start.
CivilFields parse_civil(const std::string& text, bool with_seconds = false);

// Granularity implied by a literal's precision: Day, Minute, or Second.
Granularity literal_granularity(const std::string& text);

std::string format_timepoint(const TimePoint& tp);
std::string format_endpoint(const EndPoint& e);  // NOW renders as "Current time"

// --- integer helpers --------------------------------------------------------

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

}  // namespace ltrm

#endif  // LTRM_TIME_HPP
