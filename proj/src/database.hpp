#ifndef LTRM_DATABASE_HPP
#define LTRM_DATABASE_HPP

#include <map>
#include <string>
#include <vector>

#include "schema.hpp"

namespace ltrm {

// Catalog plus append-only tuple store. One writer at a time; readers work
// on a const reference between writes. The two sanctioned mutations are
// appending a tuple and closing an open activation_end, both via engine
// operations.
class Database {
 public:
  static constexpr Granularity kDefaultGranularity = Granularity::Minute;

  // Validates all schema rules and registers the relation.
  void define_relation(RelationSchema decl);

  bool has_relation(const std::string& name) const { return catalog_.count(name) != 0; }
  const RelationSchema& schema(const std::string& name) const;       // throws UnknownRelation
  const std::vector<Tuple>& tuples(const std::string& name) const;   // throws UnknownRelation

  // Declaration order, for listings and persistence.
  const std::vector<std::string>& relation_names() const { return order_; }

  // Raw append: assigns the next tuple_id and stores the tuple. Constraint
  // checking is the caller's job (engine ops and loaders check first).
  std::int64_t append_tuple(const std::string& name, std::vector<Value> values,
                            std::optional<ActivationStamp> stamp);

  // The single permitted in-place write: closing an open activation_end.
  void close_tuple(const std::string& name, std::int64_t tuple_id, TimePoint end);

  std::size_t relation_count() const { return order_.size(); }

 private:
  std::vector<Tuple>& tuples_mutable(const std::string& name);

  std::map<std::string, RelationSchema> catalog_;
  std::map<std::string, std::vector<Tuple>> store_;
  std::map<std::string, std::int64_t> next_id_;
  std::vector<std::string> order_;
};

}  // namespace ltrm

#endif  // LTRM_DATABASE_HPP
