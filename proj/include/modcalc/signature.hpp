#pragma once

#include <compare>
#include <string>
#include <vector>

namespace modcalc {

// A marking label.  Labels are arbitrary identifiers, not forced to be 1..n,
// so that forgetful maps can drop interior markings without relabeling.
// Ordering: all-digit labels sort numerically and before everything else;
// the rest sort lexicographically.
class Label {
 public:
  Label() = default;
  Label(std::string text);       // NOLINT: implicit by design
  Label(const char* text) : Label(std::string(text)) {}  // NOLINT
  explicit Label(long number) : Label(std::to_string(number)) {}

  const std::string& text() const { return text_; }
  bool numeric() const { return numeric_; }

  std::strong_ordering operator<=>(const Label& o) const;
  bool operator==(const Label& o) const { return text_ == o.text_; }

 private:
  std::string text_;
  bool numeric_ = false;
};

// Sorted, duplicate-free label set with value semantics.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);
  explicit LabelSet(std::vector<Label> labels);  // sorts and rejects duplicates

  bool contains(const Label& l) const;
  bool contains_all(const LabelSet& other) const;
  bool disjoint_from(const LabelSet& other) const;
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  LabelSet set_union(const LabelSet& other) const;
  LabelSet set_minus(const LabelSet& other) const;
  LabelSet with(const Label& l) const;
  LabelSet without(const Label& l) const;

  const std::vector<Label>& items() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  std::strong_ordering operator<=>(const LabelSet& o) const;
  bool operator==(const LabelSet& o) const { return labels_ == o.labels_; }

  std::string str() const;  // "{1,2,10}"

 private:
  std::vector<Label> labels_;
};

// The pair (g, marking set) identifying a moduli space of stable pointed
// curves.  The library's Picard conventions require g >= 2.
class ModuliSignature {
 public:
  ModuliSignature(int genus, LabelSet markings);
  ModuliSignature(int genus, std::initializer_list<Label> markings)
      : ModuliSignature(genus, LabelSet(markings)) {}

  int genus() const { return genus_; }
  const LabelSet& markings() const { return markings_; }
  std::size_t n() const { return markings_.size(); }

  LabelSet complement(const LabelSet& s) const { return markings_.set_minus(s); }

  bool operator==(const ModuliSignature& o) const {
    return genus_ == o.genus_ && markings_ == o.markings_;
  }
  bool operator!=(const ModuliSignature& o) const { return !(*this == o); }

  std::string str() const;  // "(10, {1,...})"

 private:
  int genus_;
  LabelSet markings_;
};

// Signature for markings {1, ..., n}.
ModuliSignature standard_signature(int genus, int n);

}  // namespace modcalc
