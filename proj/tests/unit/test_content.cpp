#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "vcache/content.hpp"
#include "vcache/errors.hpp"

using namespace vcache;

namespace {

ContentItem item(const std::string& name, std::uint64_t bits = 2000) {
  return {ContentName::parse(name), bits};
}

std::vector<std::string> names(const LruStore& s) {
  std::vector<std::string> out;
  for (const auto& n : s.recency_order()) out.push_back(n.str());
  return out;
}

}  // namespace

TEST(ContentName, ParseRoundTrip) {
  const auto n = ContentName::parse("/traffic/geo/1700000000/speed");
  EXPECT_EQ(n.segments(), (std::vector<std::string>{"traffic", "geo", "1700000000", "speed"}));
  EXPECT_EQ(n.str(), "/traffic/geo/1700000000/speed");
  EXPECT_EQ(ContentName({"a", "b"}), ContentName::parse("/a/b"));
}

TEST(ContentName, Malformed) {
  EXPECT_THROW(ContentName::parse(""), MalformedName);
  EXPECT_THROW(ContentName::parse("traffic/1"), MalformedName);
  EXPECT_THROW(ContentName::parse("/traffic//1"), MalformedName);
  EXPECT_THROW(ContentName::parse("/traffic/"), MalformedName);
  EXPECT_THROW(ContentName::parse("/"), MalformedName);
  EXPECT_THROW(ContentName(std::vector<std::string>{}), MalformedName);
  EXPECT_THROW(ContentName({"a/b"}), MalformedName);
}

TEST(LruStore, HitAndMissCounting) {
  LruStore s(2);
  EXPECT_FALSE(s.get("/a").has_value());
  s.put(item("/a"));
  EXPECT_TRUE(s.get("/a").has_value());
  EXPECT_EQ(s.hits(), 1u);
  EXPECT_EQ(s.misses(), 1u);
  EXPECT_TRUE(s.contains(ContentName::parse("/a")));
  EXPECT_EQ(s.hits(), 1u);
}

TEST(LruStore, EvictsLeastRecent) {
  LruStore s(2);
  EXPECT_FALSE(s.put(item("/a")).has_value());
  EXPECT_FALSE(s.put(item("/b")).has_value());
  s.get("/a");
  const auto evicted = s.put(item("/c"));
  ASSERT_TRUE(evicted.has_value());
  EXPECT_EQ(evicted->str(), "/b");
  EXPECT_EQ(names(s), (std::vector<std::string>{"/a", "/c"}));
}

TEST(LruStore, PutExistingRefreshes) {
  LruStore s(2);
  s.put(item("/a"));
  s.put(item("/b"));
  EXPECT_FALSE(s.put(item("/a", 10)).has_value());
  EXPECT_EQ(names(s), (std::vector<std::string>{"/b", "/a"}));
  EXPECT_EQ(s.get("/a")->payload_bits, 10u);
  EXPECT_EQ(s.size(), 2u);
}

TEST(LruStore, CapacityOne) {
  LruStore s(1);
  s.put(item("/a"));
  EXPECT_EQ(s.put(item("/b"))->str(), "/a");
  EXPECT_EQ(names(s), (std::vector<std::string>{"/b"}));
}

TEST(LruStore, ZeroCapacityRejected) { EXPECT_THROW(LruStore(0), ValidationError); }

TEST(LruStore, UnboundedNeverEvicts) {
  auto s = LruStore::unbounded();
  EXPECT_FALSE(s.bounded());
  for (int i = 0; i < 500; ++i) EXPECT_FALSE(s.put(item("/n/" + std::to_string(i))).has_value());
  EXPECT_EQ(s.size(), 500u);
}

// Brute-force oracle: a vector ordered least to most recent.
TEST(LruStore, PropertyMatchesReferenceModel) {
  std::mt19937_64 gen(777);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t capacity = 1 + gen() % 8;
    const int universe = 1 + static_cast<int>(gen() % 20);
    LruStore store(capacity);
    std::vector<std::string> model;
    std::vector<std::string> model_evictions;
    std::vector<std::string> store_evictions;
    for (int op = 0; op < 300; ++op) {
      const std::string n = "/k/" + std::to_string(gen() % universe);
      auto found = std::find(model.begin(), model.end(), n);
      if (gen() % 3 == 0) {
        const bool hit = store.get(n).has_value();
        ASSERT_EQ(hit, found != model.end());
        if (found != model.end()) {
          model.erase(found);
          model.push_back(n);
        }
      } else {
        if (const auto e = store.put(item(n))) store_evictions.push_back(e->str());
        if (found != model.end()) model.erase(found);
        model.push_back(n);
        if (model.size() > capacity) {
          model_evictions.push_back(model.front());
          model.erase(model.begin());
        }
      }
      ASSERT_EQ(names(store), model);
    }
    ASSERT_EQ(store_evictions, model_evictions);
  }
}

TEST(Chr, Ratio) {
  EXPECT_FALSE(chr(0, 0).has_value());
  EXPECT_DOUBLE_EQ(*chr(7, 3), 0.7);
  EXPECT_DOUBLE_EQ(*chr(0, 5), 0.0);
  LruStore s(1);
  EXPECT_FALSE(chr(s).has_value());
}

TEST(Catalog, TrafficCatalog) {
  const auto c = Catalog::traffic();
  ASSERT_EQ(c.size(), 10u);
  EXPECT_EQ(c.items().front().name.str(), "/traffic/1");
  EXPECT_EQ(c.items().back().name.str(), "/traffic/10");
  EXPECT_EQ(c.lookup(ContentName::parse("/traffic/4")).payload_bits, 2000u);
  EXPECT_THROW(c.lookup(ContentName::parse("/traffic/11")), UnknownContent);
}

TEST(Catalog, RejectsDuplicatesAndEmptyPayload) {
  EXPECT_THROW(Catalog({item("/a"), item("/a")}), ValidationError);
  EXPECT_THROW(Catalog({item("/a", 0)}), ValidationError);
}
