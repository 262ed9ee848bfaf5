#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emu/error.hpp"

namespace emu {

class OutcomeSpace;
using SpacePtr = std::shared_ptr<const OutcomeSpace>;

/// A finite, ordered outcome set. Canonical order is the order of the labels
/// as given; every dense vector in the library is aligned with it.
class OutcomeSpace {
 public:
  static SpacePtr create(std::vector<std::string> labels) {
    if (labels.empty()) {
      throw Error(ErrorKind::schema, "outcome set must be nonempty");
    }
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) {
        throw Error(ErrorKind::schema, "outcome labels must be nonempty");
      }
      if (!index.emplace(labels[i], i).second) {
        throw Error(ErrorKind::schema, "duplicate outcome label '" + labels[i] + "'");
      }
    }
    return SpacePtr(new OutcomeSpace(std::move(labels), std::move(index)));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
      throw Error(ErrorKind::unknown_outcome,
                  "unknown outcome '" + std::string(label) + "'");
    }
    return it->second;
  }

  bool contains(std::string_view label) const {
    return index_.count(std::string(label)) != 0;
  }

  bool operator==(const OutcomeSpace& other) const {
    return labels_ == other.labels_;
  }

 private:
  OutcomeSpace(std::vector<std::string> labels,
               std::unordered_map<std::string, std::size_t> index)
      : labels_(std::move(labels)), index_(std::move(index)) {}

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) {
    throw Error(ErrorKind::space_mismatch, "operands live on different outcome spaces");
  }
}

}  // namespace emu
