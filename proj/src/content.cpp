#include "vcache/content.hpp"

#include <set>

#include "vcache/errors.hpp"

namespace vcache {

ContentName ContentName::parse(std::string_view text) {
  if (text.empty()) throw MalformedName("empty content name");
  if (text.front() != '/') {
    throw MalformedName("content name must start with '/': " + std::string(text));
  }
  std::vector<std::string> segments;
  std::size_t start = 1;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::size_t end = slash == std::string_view::npos ? text.size() : slash;
    if (end == start) throw MalformedName("empty segment in content name: " + std::string(text));
    segments.emplace_back(text.substr(start, end - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return ContentName(std::move(segments));
}

ContentName::ContentName(std::vector<std::string> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw MalformedName("content name needs at least one segment");
  for (const auto& s : segments_) {
    if (s.empty()) throw MalformedName("empty segment in content name");
    if (s.find('/') != std::string::npos) throw MalformedName("segment contains '/': " + s);
    text_ += '/';
    text_ += s;
  }
}

LruStore::LruStore(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw ValidationError("bounded LRU store needs capacity >= 1");
}

LruStore LruStore::unbounded() { return LruStore(); }

std::optional<ContentItem> LruStore::get(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  order_.splice(order_.begin(), order_, it->second);
  return *it->second;
}

std::optional<ContentName> LruStore::put(ContentItem item) {
  auto it = index_.find(item.name.str());
  if (it != index_.end()) {
    *it->second = std::move(item);
    order_.splice(order_.begin(), order_, it->second);
    return std::nullopt;
  }
  const std::string key = item.name.str();
  order_.push_front(std::move(item));
  index_.emplace(key, order_.begin());
  if (capacity_ && order_.size() > *capacity_) {
    ContentName victim = order_.back().name;
    index_.erase(victim.str());
    order_.pop_back();
    return victim;
  }
  return std::nullopt;
}

bool LruStore::contains(const ContentName& name) const { return index_.contains(name.str()); }

std::vector<ContentName> LruStore::recency_order() const {
  std::vector<ContentName> out;
  out.reserve(order_.size());
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) out.push_back(it->name);
  return out;
}

std::optional<double> chr(std::uint64_t hits, std::uint64_t misses) {
  const std::uint64_t total = hits + misses;
  if (total == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(total);
}

Catalog::Catalog(std::vector<ContentItem> items) : items_(std::move(items)) {
  std::set<std::string> seen;
  for (const auto& item : items_) {
    if (!seen.insert(item.name.str()).second) {
      throw ValidationError("duplicate catalog name " + item.name.str());
    }
    if (item.payload_bits == 0) {
      throw ValidationError("content payload must be positive: " + item.name.str());
    }
  }
}

Catalog Catalog::traffic(std::size_t size, std::uint64_t payload_bits) {
  std::vector<ContentItem> items;
  items.reserve(size);
  for (std::size_t i = 1; i <= size; ++i) {
    items.push_back({ContentName({"traffic", std::to_string(i)}), payload_bits});
  }
  return Catalog(std::move(items));
}

const ContentItem& Catalog::lookup(const ContentName& name) const {
  for (const auto& item : items_) {
    if (item.name == name) return item;
  }
  throw UnknownContent("content not in catalog: " + name.str());
}

}  // namespace vcache
