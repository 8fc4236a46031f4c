#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vcache {

/// Hierarchical content name such as /traffic/geolocation/timestamp/datatype.
class ContentName {
 public:
  /// Parses the canonical text form. Throws MalformedName on an empty
  /// string, a missing leading '/', or an empty segment.
  static ContentName parse(std::string_view text);

  /// Throws MalformedName if `segments` is empty or any segment is empty or
  /// contains '/'.
  explicit ContentName(std::vector<std::string> segments);

  const std::vector<std::string>& segments() const { return segments_; }
  const std::string& str() const { return text_; }

  auto operator<=>(const ContentName& o) const { return text_ <=> o.text_; }
  bool operator==(const ContentName& o) const { return text_ == o.text_; }

 private:
  std::vector<std::string> segments_;
  std::string text_;
};

struct ContentNameHash {
  std::size_t operator()(const ContentName& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};

struct ContentItem {
  ContentName name;
  std::uint64_t payload_bits = 2000;

  bool operator==(const ContentItem&) const = default;
};

/// Name-keyed store with least-recently-used replacement and hit/miss
/// counters.
class LruStore {
 public:
  /// Bounded store holding at most `capacity` entries; capacity must be >= 1.
  explicit LruStore(std::size_t capacity);
  static LruStore unbounded();

  /// Counted lookup. A hit refreshes recency.
  std::optional<ContentItem> get(const std::string& name);
  std::optional<ContentItem> get(const ContentName& name) { return get(name.str()); }

  /// Inserts or refreshes `item` as most recent. Returns the evicted name
  /// when the insert pushed a bounded store over capacity.
  std::optional<ContentName> put(ContentItem item);

  /// Uncounted membership test; does not touch recency.
  bool contains(const ContentName& name) const;

  std::size_t size() const { return order_.size(); }
  bool bounded() const { return capacity_.has_value(); }
  std::optional<std::size_t> capacity() const { return capacity_; }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

  /// Names ordered from least to most recently used.
  std::vector<ContentName> recency_order() const;

 private:
  LruStore() = default;

  std::optional<std::size_t> capacity_;
  std::list<ContentItem> order_;  // front = most recent
  std::unordered_map<std::string, std::list<ContentItem>::iterator> index_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

/// hits / (hits + misses), or nullopt when no lookups were made.
std::optional<double> chr(std::uint64_t hits, std::uint64_t misses);
inline std::optional<double> chr(const LruStore& store) { return chr(store.hits(), store.misses()); }

/// Content held by the edge server.
class Catalog {
 public:
  /// Throws ValidationError on duplicate names.
  explicit Catalog(std::vector<ContentItem> items);

  /// /traffic/1 ... /traffic/<size>, each `payload_bits` long.
  static Catalog traffic(std::size_t size = 10, std::uint64_t payload_bits = 2000);

  /// Throws UnknownContent.
  const ContentItem& lookup(const ContentName& name) const;

  const std::vector<ContentItem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<ContentItem> items_;
};

}  // namespace vcache
