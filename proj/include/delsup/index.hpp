/**
 * @file index.hpp
 * Candidate retrieval for superposition partners.
 *
 * TopSymbolIndex is a plain hash map keyed by top symbol and literal
 * polarity; it is all the delayed calculus needs, since a Sup inference
 * only requires equal top symbols. FingerprintIndex samples seven positions
 * of a term and acts as an imperfect unifiability filter: it never rejects
 * a unifiable pair.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "delsup/term.hpp"

namespace delsup {

// ---------------------------------------------------------------------------
// Fingerprints

/// Feature values: a symbol id, or one of the markers below.
inline constexpr std::int32_t kBelowVar = -1;    // A: a proper prefix is a variable
inline constexpr std::int32_t kAtVar = -2;       // B: a variable sits exactly here
inline constexpr std::int32_t kNonexistent = -3; // N: cannot exist in any instance

inline constexpr std::size_t kFingerprintSize = 7;
using Fingerprint = std::array<std::int32_t, kFingerprintSize>;

/// Sampled positions: root, 1, 2, 1.1, 1.2, 2.1, 2.2.
const std::array<Position, kFingerprintSize>& fingerprint_positions();

std::int32_t feature(const Term& t, const Position& p);
Fingerprint fingerprint(const Term& t);
/// Whether two features may coincide in some common instance.
bool features_compatible(std::int32_t a, std::int32_t b);
bool unification_compatible(const Fingerprint& a, const Fingerprint& b);

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const {
    std::size_t h = 0;
    for (std::int32_t v : f) h = h * 1000003u ^ static_cast<std::uint32_t>(v);
    return h;
  }
};

// ---------------------------------------------------------------------------

/// Vector of buckets with O(1) removal through stable handles.
template <class Entry>
class HandleStore {
 public:
  using Handle = std::uint64_t;

  Handle insert(std::uint32_t bucket, Entry e) {
    if (bucket >= buckets_.size()) buckets_.resize(bucket + 1);
    Handle h = next_++;
    auto& vec = buckets_[bucket];
    slots_[h] = Slot{bucket, static_cast<std::uint32_t>(vec.size())};
    vec.push_back(Item{h, std::move(e)});
    ++size_;
    return h;
  }

  bool remove(Handle h) {
    auto it = slots_.find(h);
    if (it == slots_.end()) return false;
    auto [bucket, index] = it->second;
    auto& vec = buckets_[bucket];
    if (index + 1 != vec.size()) {
      vec[index] = std::move(vec.back());
      slots_[vec[index].handle].index = index;
    }
    vec.pop_back();
    slots_.erase(it);
    --size_;
    return true;
  }

  template <class Fn>
  void for_each(std::uint32_t bucket, Fn&& fn) const {
    if (bucket >= buckets_.size()) return;
    for (const Item& item : buckets_[bucket]) fn(item.entry);
  }

  std::size_t bucket_size(std::uint32_t bucket) const {
    return bucket < buckets_.size() ? buckets_[bucket].size() : 0;
  }
  std::size_t size() const { return size_; }

 private:
  struct Item {
    Handle handle;
    Entry entry;
  };
  struct Slot {
    std::uint32_t bucket;
    std::uint32_t index;
  };
  std::vector<std::vector<Item>> buckets_;
  std::unordered_map<Handle, Slot> slots_;
  Handle next_ = 1;
  std::size_t size_ = 0;
};

/// Entries keyed by (top symbol, literal polarity).
template <class Entry>
class TopSymbolIndex {
 public:
  using Handle = typename HandleStore<Entry>::Handle;

  Handle insert(SymbolId symbol, bool positive, Entry e) {
    return store_.insert(bucket(symbol, positive), std::move(e));
  }
  bool remove(Handle h) { return store_.remove(h); }

  template <class Fn>
  void retrieve(SymbolId symbol, bool positive, Fn&& fn) const {
    store_.for_each(bucket(symbol, positive), fn);
  }
  /// Both polarities.
  template <class Fn>
  void retrieve(SymbolId symbol, Fn&& fn) const {
    store_.for_each(bucket(symbol, false), fn);
    store_.for_each(bucket(symbol, true), fn);
  }
  std::size_t size() const { return store_.size(); }

 private:
  static std::uint32_t bucket(SymbolId s, bool positive) { return s * 2 + (positive ? 1 : 0); }
  HandleStore<Entry> store_;
};

/// Entries bucketed by fingerprint; retrieval visits every bucket whose
/// fingerprint is unification-compatible with the query's.
template <class Entry>
class FingerprintIndex {
 public:
  using Handle = typename HandleStore<Entry>::Handle;

  Handle insert(const Term& key, Entry e) { return insert(fingerprint(key), std::move(e)); }

  Handle insert(const Fingerprint& fp, Entry e) {
    auto [it, fresh] = bucket_of_.try_emplace(fp, static_cast<std::uint32_t>(fingerprints_.size()));
    if (fresh) {
      fingerprints_.push_back(fp);
      by_top_[fp[0]].push_back(it->second);
    }
    return store_.insert(it->second, std::move(e));
  }
  bool remove(Handle h) { return store_.remove(h); }

  template <class Fn>
  void retrieve(const Term& query, Fn&& fn) const {
    retrieve(fingerprint(query), fn);
  }

  template <class Fn>
  void retrieve(const Fingerprint& q, Fn&& fn) const {
    auto visit = [&](std::uint32_t b) {
      if (unification_compatible(q, fingerprints_[b])) store_.for_each(b, fn);
    };
    if (q[0] >= 0) {
      for (std::int32_t top : {q[0], kAtVar}) {
        auto it = by_top_.find(top);
        if (it == by_top_.end()) continue;
        for (std::uint32_t b : it->second) visit(b);
      }
    } else {
      for (std::uint32_t b = 0; b < fingerprints_.size(); ++b) visit(b);
    }
  }

  std::size_t size() const { return store_.size(); }
  std::size_t bucket_count() const { return fingerprints_.size(); }

 private:
  HandleStore<Entry> store_;
  std::unordered_map<Fingerprint, std::uint32_t, FingerprintHash> bucket_of_;
  std::vector<Fingerprint> fingerprints_;
  std::unordered_map<std::int32_t, std::vector<std::uint32_t>> by_top_;
};

}  // namespace delsup
