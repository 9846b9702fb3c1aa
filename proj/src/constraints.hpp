#ifndef LTRM_CONSTRAINTS_HPP
#define LTRM_CONSTRAINTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "database.hpp"

namespace ltrm {

enum class ViolationKind { KeyUniqueness, NonOverlap, ReferentialIntegrity, SchemaRule };

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string relation;
  std::vector<std::int64_t> tuple_ids;
  std::string detail;
};

// One violation per pair of tuples agreeing on every key attribute.
std::vector<Violation> check_key_uniqueness(const RelationSchema& schema,
                                            const std::vector<Tuple>& tuples);

// One violation per pair of same-entity tuples whose resolved activation
// intervals intersect. Temporal relations only.
std::vector<Violation> check_non_overlap(const RelationSchema& schema,
                                         const std::vector<Tuple>& tuples, const Clock& clock);

// One violation per tuple whose foreign-key values are absent from the
// referenced relation. Value inclusion only; Null locals are exempt.
std::vector<Violation> check_referential_integrity(const Database& db, const Clock& clock);

// All checks over all relations, ordered by relation name then tuple_id.
std::vector<Violation> validate_database(const Database& db, const Clock& clock);

std::string render_violation(const Violation& v);
std::string render_report(const std::vector<Violation>& violations);

}  // namespace ltrm

#endif  // LTRM_CONSTRAINTS_HPP
