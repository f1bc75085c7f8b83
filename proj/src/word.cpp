#include "schutz/word.hpp"

#include "schutz/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace schutz {

Alphabet::Alphabet(std::size_t size) {
  if (size == 0) throw PreconditionError("alphabet must have at least one letter");
  names_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) names_.push_back(std::to_string(i));
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("alphabet must have at least one letter");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("letter names must be non-empty");
    if (!seen.insert(n).second) throw PreconditionError("duplicate letter name '" + n + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Letter>(it - names_.begin());
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  validate();
}

Substitution::Substitution(std::vector<Word> images) : alphabet_(images.size()), images_(std::move(images)) {
  validate();
}

void Substitution::validate() const {
  if (images_.size() != alphabet_.size())
    throw PreconditionError("substitution needs exactly one image per letter");
  for (const Word& w : images_) {
    if (w.empty()) throw PreconditionError("substitution images must be non-empty");
    for (Letter a : w)
      if (!alphabet_.contains(a)) throw PreconditionError("image uses a letter outside the alphabet");
  }
}

std::size_t Substitution::max_image_length() const {
  std::size_t m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

Word Substitution::apply(std::span<const Letter> w) const {
  std::size_t len = 0;
  for (Letter a : w) len += images_[a].size();
  Word out;
  out.reserve(len);
  for (Letter a : w) out.insert(out.end(), images_[a].begin(), images_[a].end());
  return out;
}

Word apply_substitution(const Substitution& s, std::span<const Letter> w, unsigned n) {
  Word cur(w.begin(), w.end());
  for (unsigned i = 0; i < n; ++i) cur = s.apply(cur);
  return cur;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (outer.size() != inner.size()) throw PreconditionError("compose: alphabet sizes differ");
  std::vector<Word> images;
  images.reserve(inner.size());
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Substitution(inner.alphabet(), std::move(images));
}

Substitution power(const Substitution& s, unsigned k) {
  if (k == 0) throw PreconditionError("power: exponent must be positive");
  std::vector<Word> images;
  images.reserve(s.size());
  for (Letter a = 0; a < s.size(); ++a) images.push_back(apply_substitution(s, s.image(a), k - 1));
  return Substitution(s.alphabet(), std::move(images));
}

std::vector<std::size_t> occurrences(std::span<const Letter> w, std::span<const Letter> z) {
  if (z.empty()) throw PreconditionError("occurrence pattern must be non-empty");
  std::vector<std::size_t> hits;
  if (z.size() > w.size()) return hits;
  // KMP failure function.
  std::vector<std::size_t> fail(z.size(), 0);
  for (std::size_t i = 1, k = 0; i < z.size(); ++i) {
    while (k > 0 && z[i] != z[k]) k = fail[k - 1];
    if (z[i] == z[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != z[k]) k = fail[k - 1];
    if (w[i] == z[k]) ++k;
    if (k == z.size()) {
      hits.push_back(i + 1 - z.size());
      k = fail[k - 1];
    }
  }
  return hits;
}

std::size_t count_occurrences(std::span<const Letter> w, std::span<const Letter> z) {
  return occurrences(w, z).size();
}

bool starts_with(std::span<const Letter> w, std::span<const Letter> prefix) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool ends_with(std::span<const Letter> w, std::span<const Letter> suffix) {
  return suffix.size() <= w.size() && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

GroupWord reduce_group_word(std::span<const SignedLetter> raw) {
  return GroupWord(raw);
}

GroupWord::GroupWord(std::span<const SignedLetter> raw) {
  letters_.reserve(raw.size());
  for (const SignedLetter& x : raw) {
    if (x.exponent != 1 && x.exponent != -1) throw PreconditionError("exponents must be +1 or -1");
    if (!letters_.empty() && letters_.back() == x.inverse())
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

GroupWord GroupWord::positive(std::span<const Letter> w) {
  GroupWord g;
  g.letters_.reserve(w.size());
  for (Letter a : w) g.letters_.push_back({a, 1});
  return g;
}

GroupWord GroupWord::inverse() const {
  GroupWord g;
  g.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) g.letters_.push_back(it->inverse());
  return g;
}

GroupWord& GroupWord::operator*=(const GroupWord& rhs) {
  std::size_t i = 0;
  while (i < rhs.letters_.size() && !letters_.empty() && letters_.back() == rhs.letters_[i].inverse()) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(i), rhs.letters_.end());
  return *this;
}

long long exponent_sum(const GroupWord& w, Letter a) {
  long long sum = 0;
  for (const SignedLetter& x : w.letters())
    if (x.letter == a) sum += x.exponent;
  return sum;
}

FreeGroupEndo::FreeGroupEndo(Alphabet alphabet, std::vector<GroupWord> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  validate();
}

FreeGroupEndo::FreeGroupEndo(std::vector<GroupWord> images)
    : alphabet_(images.size()), images_(std::move(images)) {
  validate();
}

void FreeGroupEndo::validate() const {
  if (images_.size() != alphabet_.size())
    throw PreconditionError("endomorphism needs exactly one image per letter");
  for (const GroupWord& w : images_)
    for (const SignedLetter& x : w.letters())
      if (!alphabet_.contains(x.letter)) throw PreconditionError("image uses a letter outside the alphabet");
}

FreeGroupEndo::FreeGroupEndo(const Substitution& s) : alphabet_(s.alphabet()) {
  images_.reserve(s.size());
  for (const Word& w : s.images()) images_.push_back(GroupWord::positive(w));
}

GroupWord FreeGroupEndo::apply(const GroupWord& w) const {
  std::vector<SignedLetter> raw;
  for (const SignedLetter& x : w.letters()) {
    const GroupWord& img = images_.at(x.letter);
    if (x.exponent > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return GroupWord(raw);
}

GroupWord apply_endomorphism(const FreeGroupEndo& e, const GroupWord& w, unsigned n) {
  GroupWord cur = w;
  for (unsigned i = 0; i < n; ++i) cur = e.apply(cur);
  return cur;
}

FreeGroupEndo compose(const FreeGroupEndo& outer, const FreeGroupEndo& inner) {
  if (outer.size() != inner.size()) throw PreconditionError("compose: alphabet sizes differ");
  std::vector<GroupWord> images;
  images.reserve(inner.size());
  for (const GroupWord& w : inner.images()) images.push_back(outer.apply(w));
  return FreeGroupEndo(inner.alphabet(), std::move(images));
}

}  // namespace schutz
