#ifndef LTRM_ENGINE_HPP
#define LTRM_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "database.hpp"

namespace ltrm {

// Result of the derived operators. snapshot() strips the timestamp
// attributes (schema.temporal() false); timeslice/coalesce keep them.
struct DerivedRelation {
  RelationSchema schema;
  std::vector<Tuple> tuples;
};

using EntityRef = std::map<std::string, Value>;  // entity_key attribute -> value

// Appends one tuple with the given activation interval after running the
// relation-scoped constraint checks (key uniqueness, per-entity non-overlap,
// referential integrity). Nothing is written when a check rejects.
std::int64_t insert(Database& db, const std::string& rel, std::vector<Value> values,
                    TimePoint start, EndPoint end, TimePoint updatetime, const Clock& clock);

// Append path for non-temporal relations; checks key uniqueness and
// referential integrity.
std::int64_t insert_plain(Database& db, const std::string& rel, std::vector<Value> values,
                          const Clock& clock);

// Closes the entity's single open tuple at predecessor(effective) and appends
// a new tuple carrying new_values (attributes absent from new_values keep the
// open tuple's values). The close is the engine's only in-place write.
std::int64_t change(Database& db, const std::string& rel, const EntityRef& entity,
                    const std::map<std::string, Value>& new_values, TimePoint effective,
                    TimePoint updatetime, const Clock& clock);

// Closes the entity's open tuple at effective. No tuple is added or removed.
void logical_delete(Database& db, const std::string& rel, const EntityRef& entity,
                    TimePoint effective);

// Facts valid at t, timestamp attributes projected away. Non-temporal
// relations come back unchanged. Row order is tuple_id order.
DerivedRelation snapshot(const Database& db, const std::string& rel, TimePoint t,
                         const Clock& clock);

// The entity's full record, ascending activation_start (ties by tuple_id).
std::vector<Tuple> history(const Database& db, const std::string& rel, const EntityRef& entity);

// Tuples whose activation intervals intersect the window, intervals clipped
// to it. Open ends stay symbolic when the window still covers them.
DerivedRelation timeslice(const Database& db, const std::string& rel, const Interval& window,
                          const Clock& clock);

// Merges tuples equal on all user attributes whose intervals overlap or
// meet; merged updatetime is the maximum. A view: the store is untouched.
// Output is sorted by entity key then activation_start.
DerivedRelation coalesce(const Database& db, const std::string& rel, const Clock& clock);

// Shared helpers.
std::vector<std::size_t> entity_indices(const RelationSchema& schema);
bool tuple_matches_entity(const RelationSchema& schema, const Tuple& t, const EntityRef& entity);
void check_values_against_schema(const RelationSchema& schema, const std::vector<Value>& values);

}  // namespace ltrm

#endif  // LTRM_ENGINE_HPP
