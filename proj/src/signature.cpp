#include "modcalc/signature.hpp"

#include "modcalc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace modcalc {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool allowed_label_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '.' || c == '-';
}

}  // namespace

Label::Label(std::string text) : text_(std::move(text)) {
  if (text_.empty()) fail(ErrorCode::InvalidSpec, "empty marking label");
  for (unsigned char c : text_) {
    if (!allowed_label_char(c)) {
      fail(ErrorCode::InvalidSpec, "label '" + text_ + "' contains forbidden character");
    }
  }
  numeric_ = all_digits(text_);
}

std::strong_ordering Label::operator<=>(const Label& o) const {
  if (numeric_ != o.numeric_) {
    return numeric_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (numeric_) {
    // No leading zeros in practice, so (length, text) is numeric order.
    if (auto c = text_.size() <=> o.text_.size(); c != 0) return c;
  }
  return text_ <=> o.text_;
}

LabelSet::LabelSet(std::initializer_list<Label> labels)
    : LabelSet(std::vector<Label>(labels)) {}

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    fail(ErrorCode::InvalidSpec, "duplicate marking label '" + dup->text() + "'");
  }
}

bool LabelSet::contains(const Label& l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

bool LabelSet::contains_all(const LabelSet& other) const {
  return std::includes(labels_.begin(), labels_.end(),
                       other.labels_.begin(), other.labels_.end());
}

bool LabelSet::disjoint_from(const LabelSet& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  while (a != labels_.end() && b != other.labels_.end()) {
    auto c = *a <=> *b;
    if (c == 0) return false;
    if (c < 0) ++a; else ++b;
  }
  return true;
}

LabelSet LabelSet::set_union(const LabelSet& other) const {
  std::vector<Label> out;
  out.reserve(labels_.size() + other.labels_.size());
  std::set_union(labels_.begin(), labels_.end(),
                 other.labels_.begin(), other.labels_.end(), std::back_inserter(out));
  LabelSet r;
  r.labels_ = std::move(out);
  return r;
}

LabelSet LabelSet::set_minus(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_difference(labels_.begin(), labels_.end(),
                      other.labels_.begin(), other.labels_.end(), std::back_inserter(out));
  LabelSet r;
  r.labels_ = std::move(out);
  return r;
}

LabelSet LabelSet::with(const Label& l) const {
  if (contains(l)) return *this;
  LabelSet r = *this;
  r.labels_.insert(std::upper_bound(r.labels_.begin(), r.labels_.end(), l), l);
  return r;
}

LabelSet LabelSet::without(const Label& l) const {
  LabelSet r = *this;
  auto it = std::lower_bound(r.labels_.begin(), r.labels_.end(), l);
  if (it != r.labels_.end() && *it == l) r.labels_.erase(it);
  return r;
}

std::strong_ordering LabelSet::operator<=>(const LabelSet& o) const {
  return std::lexicographical_compare_three_way(
      labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end());
}

std::string LabelSet::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k) out += ',';
    out += labels_[k].text();
  }
  out += '}';
  return out;
}

ModuliSignature::ModuliSignature(int genus, LabelSet markings)
    : genus_(genus), markings_(std::move(markings)) {
  if (genus_ < 2) {
    fail(ErrorCode::InvalidSpec, "genus must be >= 2, got " + std::to_string(genus_));
  }
}

std::string ModuliSignature::str() const {
  return "(" + std::to_string(genus_) + ", " + markings_.str() + ")";
}

ModuliSignature standard_signature(int genus, int n) {
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) labels.emplace_back(static_cast<long>(k));
  return ModuliSignature(genus, LabelSet(std::move(labels)));
}

}  // namespace modcalc
