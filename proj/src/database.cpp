#include "database.hpp"

#include <algorithm>
#include <set>

namespace ltrm {

namespace {

void validate_schema(const RelationSchema& decl, const std::map<std::string, RelationSchema>& catalog) {
  if (decl.name.empty()) {
    throw Error(ErrorKind::SchemaRule, "relation name must not be empty");
  }
  std::set<std::string> seen;
  for (const AttributeDef& a : decl.attributes) {
    if (is_timestamp_attribute(a.name)) {
      throw Error(ErrorKind::ReservedAttributeName,
                  decl.name + ": attribute name '" + a.name + "' is reserved");
    }
    if (!seen.insert(a.name).second) {
      throw Error(ErrorKind::SchemaRule, decl.name + ": duplicate attribute '" + a.name + "'");
    }
  }
  auto is_user_attr = [&](const std::string& n) { return seen.count(n) != 0; };

  if (decl.key.empty()) {
    throw Error(ErrorKind::SchemaRule, decl.name + ": key must not be empty");
  }
  for (const std::string& k : decl.key) {
    if (decl.temporal() && k == kActivationStart) continue;
    if (is_timestamp_attribute(k)) {
      throw Error(ErrorKind::SchemaRule,
                  decl.name + ": key may not contain timestamp attribute '" + k + "'");
    }
    if (!is_user_attr(k)) {
      throw Error(ErrorKind::SchemaRule, decl.name + ": unknown key attribute '" + k + "'");
    }
  }

  if (decl.temporal()) {
    if (std::find(decl.key.begin(), decl.key.end(), kActivationStart) == decl.key.end()) {
      throw Error(ErrorKind::KeyMissingActivationStart,
                  decl.name + ": temporal key must contain activation_start");
    }
    if (decl.entity_key.empty()) {
      throw Error(ErrorKind::EmptyEntityKey, decl.name + ": temporal relation needs an entity key");
    }
    for (const std::string& e : decl.entity_key) {
      if (e == kActivationStart ||
          std::find(decl.key.begin(), decl.key.end(), e) == decl.key.end()) {
        throw Error(ErrorKind::SchemaRule,
                    decl.name + ": entity key attribute '" + e +
                        "' must be a key attribute other than activation_start");
      }
    }
  } else {
    if (!decl.entity_key.empty()) {
      throw Error(ErrorKind::SchemaRule,
                  decl.name + ": entity key is only valid for temporal relations");
    }
  }

  for (const ForeignKey& fk : decl.foreign_keys) {
    if (fk.local_attributes.empty() || fk.local_attributes.size() != fk.target_attributes.size()) {
      throw Error(ErrorKind::SchemaRule, decl.name + ": malformed foreign key");
    }
    for (const std::string& l : fk.local_attributes) {
      if (!is_user_attr(l)) {
        throw Error(ErrorKind::SchemaRule,
                    decl.name + ": unknown foreign key attribute '" + l + "'");
      }
    }
    auto it = catalog.find(fk.target_relation);
    if (it == catalog.end()) {
      throw Error(ErrorKind::UnknownForeignTarget,
                  decl.name + ": foreign key references unknown relation '" +
                      fk.target_relation + "'");
    }
    const RelationSchema& target = it->second;
    std::set<std::string> target_key(target.key.begin(), target.key.end());
    target_key.erase(kActivationStart);
    std::set<std::string> referenced(fk.target_attributes.begin(), fk.target_attributes.end());
    if (referenced != target_key) {
      throw Error(ErrorKind::UnknownForeignTarget,
                  decl.name + ": foreign key must reference the key of '" + fk.target_relation +
                      "'");
    }
    for (std::size_t i = 0; i < fk.local_attributes.size(); ++i) {
      const AttributeDef* local = nullptr;
      for (const AttributeDef& a : decl.attributes) {
        if (a.name == fk.local_attributes[i]) local = &a;
      }
      const AttributeDef* remote = target.find_attribute(fk.target_attributes[i]);
      if (local == nullptr || remote == nullptr || local->type != remote->type) {
        throw Error(ErrorKind::SchemaRule,
                    decl.name + ": foreign key attribute types do not match '" +
                        fk.target_relation + "'");
      }
    }
  }
}

}  // namespace

const AttributeDef* RelationSchema::find_attribute(const std::string& attr) const {
  for (const AttributeDef& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

std::size_t RelationSchema::attribute_index(const std::string& attr) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attr) return i;
  }
  throw Error(ErrorKind::UnknownAttribute, name + " has no attribute '" + attr + "'");
}

void Database::define_relation(RelationSchema decl) {
  if (catalog_.count(decl.name) != 0) {
    throw Error(ErrorKind::DuplicateRelation, "relation '" + decl.name + "' already defined");
  }
  validate_schema(decl, catalog_);
  order_.push_back(decl.name);
  store_[decl.name] = {};
  next_id_[decl.name] = 0;
  catalog_[decl.name] = std::move(decl);
}

const RelationSchema& Database::schema(const std::string& name) const {
  auto it = catalog_.find(name);
  if (it == catalog_.end()) {
    throw Error(ErrorKind::UnknownRelation, "unknown relation '" + name + "'");
  }
  return it->second;
}

const std::vector<Tuple>& Database::tuples(const std::string& name) const {
  auto it = store_.find(name);
  if (it == store_.end()) {
    throw Error(ErrorKind::UnknownRelation, "unknown relation '" + name + "'");
  }
  return it->second;
}

std::vector<Tuple>& Database::tuples_mutable(const std::string& name) {
  auto it = store_.find(name);
  if (it == store_.end()) {
    throw Error(ErrorKind::UnknownRelation, "unknown relation '" + name + "'");
  }
  return it->second;
}

std::int64_t Database::append_tuple(const std::string& name, std::vector<Value> values,
                                    std::optional<ActivationStamp> stamp) {
  std::vector<Tuple>& seq = tuples_mutable(name);
  std::int64_t id = next_id_[name]++;
  seq.push_back(Tuple{id, std::move(values), std::move(stamp)});
  return id;
}

void Database::close_tuple(const std::string& name, std::int64_t tuple_id, TimePoint end) {
  for (Tuple& t : tuples_mutable(name)) {
    if (t.tuple_id != tuple_id) continue;
    if (!t.stamp || !t.stamp->activation_end.is_now) {
      throw Error(ErrorKind::NoOpenTuple,
                  name + ": tuple " + std::to_string(tuple_id) + " has no open activation_end");
    }
    t.stamp->activation_end = EndPoint::fixed(end);
    return;
  }
  throw Error(ErrorKind::NoOpenTuple, name + ": no tuple " + std::to_string(tuple_id));
}

}  // namespace ltrm
