#include "constraints.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ltrm {

namespace {

bool values_equal_on(const Tuple& a, const Tuple& b, const std::vector<std::size_t>& idx) {
  for (std::size_t i : idx) {
    if (!(a.values[i] == b.values[i])) return false;
  }
  return true;
}

std::vector<std::size_t> attribute_indices(const RelationSchema& schema,
                                           const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const std::string& n : names) {
    if (n == kActivationStart) continue;  // handled as a stamp field
    idx.push_back(schema.attribute_index(n));
  }
  return idx;
}

std::string describe_tuple_pair(const Tuple& a, const Tuple& b) {
  return "tuples " + std::to_string(a.tuple_id) + " and " + std::to_string(b.tuple_id);
}

// Schema-shape audit of stored tuples: value kinds, nullability, stamp
// presence and granularity.
void check_schema_rules(const RelationSchema& schema, const std::vector<Tuple>& tuples,
                        std::vector<Violation>& out) {
  for (const Tuple& t : tuples) {
    std::string problem;
    if (t.values.size() != schema.attributes.size()) {
      problem = "tuple arity does not match schema";
    } else {
      for (std::size_t i = 0; i < t.values.size() && problem.empty(); ++i) {
        const AttributeDef& a = schema.attributes[i];
        if (t.values[i].is_null()) {
          if (!a.nullable) problem = "null in non-nullable attribute '" + a.name + "'";
        } else if (!t.values[i].is(a.type)) {
          problem = "value kind does not match attribute '" + a.name + "'";
        }
      }
    }
    if (problem.empty()) {
      if (schema.temporal() != t.stamp.has_value()) {
        problem = schema.temporal() ? "missing activation stamp" : "unexpected activation stamp";
      } else if (t.stamp &&
                 (t.stamp->activation_start.granularity != schema.granularity ||
                  t.stamp->updatetime.granularity != schema.granularity ||
                  (!t.stamp->activation_end.is_now &&
                   t.stamp->activation_end.point.granularity != schema.granularity))) {
        problem = "stamp granularity does not match schema";
      }
    }
    if (!problem.empty()) {
      out.push_back({ViolationKind::SchemaRule, schema.name, {t.tuple_id}, problem});
    }
  }
}

}  // namespace

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::KeyUniqueness: return "KeyUniqueness";
    case ViolationKind::NonOverlap: return "NonOverlap";
    case ViolationKind::ReferentialIntegrity: return "ReferentialIntegrity";
    case ViolationKind::SchemaRule: return "SchemaRule";
  }
  return "?";
}

std::vector<Violation> check_key_uniqueness(const RelationSchema& schema,
                                            const std::vector<Tuple>& tuples) {
  std::vector<Violation> out;
  std::vector<std::size_t> idx = attribute_indices(schema, schema.key);
  bool key_has_start = schema.temporal() &&
                       std::find(schema.key.begin(), schema.key.end(), kActivationStart) !=
                           schema.key.end();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
      const Tuple& a = tuples[i];
      const Tuple& b = tuples[j];
      if (!values_equal_on(a, b, idx)) continue;
      if (key_has_start && a.stamp && b.stamp &&
          !(a.stamp->activation_start == b.stamp->activation_start)) {
        continue;
      }
      out.push_back({ViolationKind::KeyUniqueness,
                     schema.name,
                     {a.tuple_id, b.tuple_id},
                     "duplicate key in " + describe_tuple_pair(a, b)});
    }
  }
  return out;
}

std::vector<Violation> check_non_overlap(const RelationSchema& schema,
                                         const std::vector<Tuple>& tuples, const Clock& clock) {
  std::vector<Violation> out;
  if (!schema.temporal()) return out;
  std::vector<std::size_t> idx = attribute_indices(schema, schema.entity_key);

  // Group by entity, then test every pair within a group.
  std::map<std::vector<std::string>, std::vector<const Tuple*>> groups;
  for (const Tuple& t : tuples) {
    std::vector<std::string> entity;
    for (std::size_t i : idx) entity.push_back(value_to_string(t.values[i]));
    groups[entity].push_back(&t);
  }
  for (const auto& [entity, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Tuple& a = *members[i];
        const Tuple& b = *members[j];
        if (!a.stamp || !b.stamp) continue;
        if (intervals_intersect(a.stamp->interval(), b.stamp->interval(), clock)) {
          out.push_back({ViolationKind::NonOverlap,
                         schema.name,
                         {std::min(a.tuple_id, b.tuple_id), std::max(a.tuple_id, b.tuple_id)},
                         "overlapping activation intervals in " + describe_tuple_pair(a, b)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.tuple_ids < b.tuple_ids;
  });
  return out;
}

std::vector<Violation> check_referential_integrity(const Database& db, const Clock&) {
  std::vector<Violation> out;
  for (const std::string& name : db.relation_names()) {
    const RelationSchema& schema = db.schema(name);
    for (const ForeignKey& fk : schema.foreign_keys) {
      const RelationSchema& target = db.schema(fk.target_relation);
      std::vector<std::size_t> local_idx;
      for (const std::string& l : fk.local_attributes) local_idx.push_back(schema.attribute_index(l));
      std::vector<std::size_t> target_idx;
      for (const std::string& r : fk.target_attributes) target_idx.push_back(target.attribute_index(r));

      for (const Tuple& t : db.tuples(name)) {
        bool any_null = false;
        for (std::size_t i : local_idx) any_null = any_null || t.values[i].is_null();
        if (any_null) continue;

        bool found = false;
        for (const Tuple& candidate : db.tuples(fk.target_relation)) {
          bool match = true;
          for (std::size_t k = 0; k < local_idx.size() && match; ++k) {
            match = t.values[local_idx[k]] == candidate.values[target_idx[k]];
          }
          if (match) {
            found = true;
            break;
          }
        }
        if (!found) {
          std::string vals;
          for (std::size_t k = 0; k < local_idx.size(); ++k) {
            if (k > 0) vals += ", ";
            vals += value_to_string(t.values[local_idx[k]]);
          }
          out.push_back({ViolationKind::ReferentialIntegrity,
                         name,
                         {t.tuple_id},
                         name + " -> " + fk.target_relation + ": no match for (" + vals + ")"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_database(const Database& db, const Clock& clock) {
  std::vector<Violation> out;
  std::vector<std::string> names = db.relation_names();
  std::sort(names.begin(), names.end());
  for (const std::string& name : names) {
    const RelationSchema& schema = db.schema(name);
    const std::vector<Tuple>& tuples = db.tuples(name);
    std::vector<Violation> local;
    check_schema_rules(schema, tuples, local);
    for (auto& v : check_key_uniqueness(schema, tuples)) local.push_back(std::move(v));
    for (auto& v : check_non_overlap(schema, tuples, clock)) local.push_back(std::move(v));
    std::stable_sort(local.begin(), local.end(), [](const Violation& a, const Violation& b) {
      return a.tuple_ids < b.tuple_ids;
    });
    for (auto& v : local) out.push_back(std::move(v));
  }
  std::vector<Violation> ri = check_referential_integrity(db, clock);
  std::stable_sort(ri.begin(), ri.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.relation, a.tuple_ids) < std::tie(b.relation, b.tuple_ids);
  });
  for (auto& v : ri) out.push_back(std::move(v));
  return out;
}

std::string render_violation(const Violation& v) {
  std::ostringstream os;
  os << violation_kind_name(v.kind) << " " << v.relation << " [";
  for (std::size_t i = 0; i < v.tuple_ids.size(); ++i) {
    if (i > 0) os << ", ";
    os << v.tuple_ids[i];
  }
  os << "]: " << v.detail;
  return os.str();
}

std::string render_report(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (const Violation& v : violations) os << render_violation(v) << "\n";
  os << violations.size() << " violation" << (violations.size() == 1 ? "" : "s");
  return os.str();
}

}  // namespace ltrm
