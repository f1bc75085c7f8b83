#include "schutz/returns.hpp"

#include "schutz/error.hpp"
#include "schutz/language.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

namespace schutz {

namespace {

// Length of the cycle through `start` of the map w ↦ step(w), or nothing if
// the orbit of start enters a cycle avoiding it.
template <typename Step>
std::optional<unsigned> cycle_length_through(const Word& start, Step step) {
  std::map<Word, unsigned> seen;
  Word w = start;
  for (unsigned k = 0;; ++k) {
    if (!seen.emplace(w, k).second) return std::nullopt;
    w = step(w);
    if (w == start) return k + 1;
  }
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) h = (h ^ a) * 1099511628211ull;
    return h;
  }
};

// Cut points of u·w·v relative to the start of w, ends included when present.
std::vector<std::size_t> cuts_in_context(const Word& u, const Word& v, std::span<const Letter> w) {
  Word y;
  y.reserve(u.size() + w.size() + v.size());
  y.insert(y.end(), u.begin(), u.end());
  y.insert(y.end(), w.begin(), w.end());
  y.insert(y.end(), v.begin(), v.end());
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  std::vector<std::size_t> cuts;
  for (std::size_t q : occurrences(y, uv)) cuts.push_back(q);
  return cuts;
}

// Pieces of w between consecutive cuts; nothing unless both ends are cuts.
std::optional<std::vector<Word>> split_at_cuts(const Word& u, const Word& v, std::span<const Letter> w) {
  const std::vector<std::size_t> cuts = cuts_in_context(u, v, w);
  if (cuts.empty() || cuts.front() != 0 || cuts.back() != w.size()) return std::nullopt;
  std::vector<Word> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    pieces.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[i]),
                        w.begin() + static_cast<std::ptrdiff_t>(cuts[i + 1]));
  return pieces;
}

}  // namespace

std::optional<unsigned> connection_order(const Substitution& s, std::span<const Letter> u_in,
                                         std::span<const Letter> v_in) {
  if (u_in.empty() || v_in.empty()) throw PreconditionError("connection words must be non-empty");
  const Word u(u_in.begin(), u_in.end()), v(v_in.begin(), v_in.end());
  // Prefixes of length |v| of φᵏ(v) iterate w ↦ prefix of φ(w) because
  // images are non-empty; suffixes likewise.
  const auto prefix_step = [&](const Word& w) {
    Word img = s.apply(w);
    img.resize(v.size());
    return img;
  };
  const auto suffix_step = [&](const Word& w) {
    Word img = s.apply(w);
    return Word(img.end() - static_cast<std::ptrdiff_t>(u.size()), img.end());
  };
  const auto a = cycle_length_through(v, prefix_step);
  if (!a) return std::nullopt;
  const auto b = cycle_length_through(u, suffix_step);
  if (!b) return std::nullopt;
  return std::lcm(*a, *b);
}

std::vector<Connection> find_connections(const Substitution& s, std::size_t max_word_len) {
  if (max_word_len == 0) throw PreconditionError("find_connections: max_word_len must be positive");
  const FactorSet fs = factors_up_to(s, 2 * max_word_len);
  std::vector<Connection> found;
  for (std::size_t len = 2; len <= 2 * max_word_len; ++len) {
    for (const Word& w : fs.of_length(len)) {
      for (std::size_t cut = 1; cut < len; ++cut) {
        if (cut > max_word_len || len - cut > max_word_len) continue;
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        if (auto n = connection_order(s, u, v)) found.push_back({std::move(u), std::move(v), *n});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Connection& x, const Connection& y) {
    const std::size_t lx = x.u.size() + x.v.size(), ly = y.u.size() + y.v.size();
    if (lx != ly) return lx < ly;
    if (x.u != y.u) return x.u < y.u;
    return x.v < y.v;
  });
  return found;
}

void validate_connection(const Substitution& s, const Connection& c) {
  if (c.u.empty() || c.v.empty()) throw PreconditionError("connection words must be non-empty");
  for (const Word* w : {&c.u, &c.v})
    for (Letter a : *w)
      if (!s.alphabet().contains(a)) throw PreconditionError("connection uses a letter outside the alphabet");
  Word uv = c.u;
  uv.insert(uv.end(), c.v.begin(), c.v.end());
  if (!in_language(s, uv)) throw PreconditionError("connection: uv is not a factor of the language");
  const auto n = connection_order(s, c.u, c.v);
  if (!n) throw PreconditionError("not a connection: no power fixes the suffix u and the prefix v");
  if (c.order != *n)
    throw PreconditionError("connection order " + std::to_string(c.order) + " differs from the least order " +
                            std::to_string(*n));
}

RayStream::RayStream(Substitution psi, Word v) : psi_(std::move(psi)), v_(std::move(v)) {
  if (v_.empty()) throw PreconditionError("RayStream: seed must be non-empty");
  Word img = psi_.apply(v_);
  if (!starts_with(img, v_)) throw PreconditionError("RayStream: image of the seed must start with the seed");
  tail_.assign(img.begin() + static_cast<std::ptrdiff_t>(v_.size()), img.end());
  if (tail_.empty()) throw PreconditionError("RayStream: seed is fixed, the ray is finite");
}

void RayStream::start_block() {
  stack_.clear();
  stack_.push_back({&tail_, 0, block_depth_});
}

Letter RayStream::next() {
  ++emitted_;
  if (v_index_ < v_.size()) {
    if (++v_index_ == v_.size()) start_block();
    return v_[v_index_ - 1];
  }
  // Depth-first walk of ψ^depth(tail); blocks of increasing depth follow
  // each other because ψᵏ⁺¹(v) = ψᵏ(v)·ψᵏ(tail).
  while (true) {
    if (stack_.empty()) {
      ++block_depth_;
      start_block();
    }
    Frame& f = stack_.back();
    if (f.index == f.word->size()) {
      stack_.pop_back();
      continue;
    }
    const Letter a = (*f.word)[f.index++];
    if (f.depth == 0) return a;
    const unsigned d = f.depth - 1;
    stack_.push_back({&psi_.image(a), 0, d});
  }
}

std::uint64_t ray_stream_limit() {
  if (const char* env = std::getenv("SCHUTZ_RAY_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return std::uint64_t{1} << 28;
}

namespace {

// First return word: piece of u·x between the cuts at |u| and the next one.
Word first_return(const Connection& c, RayStream ray) {
  Word uv = c.u;
  uv.insert(uv.end(), c.v.begin(), c.v.end());
  Word prefix = c.u;
  const std::uint64_t limit = ray_stream_limit();
  while (ray.emitted() < limit) {
    prefix.push_back(ray.next());
    if (prefix.size() > uv.size() && ends_with(prefix, uv))
      return Word(prefix.begin() + static_cast<std::ptrdiff_t>(c.u.size()),
                  prefix.end() - static_cast<std::ptrdiff_t>(c.v.size()));
  }
  throw InvariantError("first return word not found within the ray stream limit");
}

// Streams u·x until every return word has occurred; first occurrences must
// come in index order. Returns the letters consumed, or nothing at the limit.
std::optional<std::uint64_t> confirm_order(const Connection& c, const std::vector<Word>& returns,
                                           RayStream ray) {
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < returns.size(); ++i) index.emplace(returns[i], i);
  Word uv = c.u;
  uv.insert(uv.end(), c.v.begin(), c.v.end());
  std::vector<std::size_t> fail(uv.size(), 0);
  for (std::size_t i = 1, k = 0; i < uv.size(); ++i) {
    while (k > 0 && uv[i] != uv[k]) k = fail[k - 1];
    if (uv[i] == uv[k]) ++k;
    fail[i] = k;
  }
  // window holds u·x from the previous cut minus |u| onward.
  Word window = c.u;
  std::size_t state = 0, next_new = 0;
  for (Letter a : c.u) {
    while (state > 0 && a != uv[state]) state = fail[state - 1];
    if (a == uv[state]) ++state;
  }
  bool have_cut = false;
  const std::uint64_t limit = ray_stream_limit();
  while (ray.emitted() < limit) {
    const Letter a = ray.next();
    window.push_back(a);
    while (state > 0 && a != uv[state]) state = fail[state - 1];
    if (a == uv[state]) ++state;
    if (state != uv.size()) continue;
    state = fail[state - 1];
    // Occurrence of uv ends here: the cut sits |v| letters back.
    const std::size_t cut = window.size() - c.v.size();
    if (have_cut) {
      Word piece(window.begin() + static_cast<std::ptrdiff_t>(c.u.size()),
                 window.begin() + static_cast<std::ptrdiff_t>(cut));
      auto it = index.find(piece);
      if (it == index.end()) throw InvariantError("streamed ray contains a return word missing from the closure");
      if (it->second > next_new) throw InvariantError("return words do not first occur in index order");
      if (it->second == next_new && ++next_new == returns.size()) return ray.emitted();
    }
    have_cut = true;
    window.erase(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(cut - c.u.size()));
  }
  return std::nullopt;
}

}  // namespace

ReturnData return_words(const Substitution& s, const Connection& c) {
  validate_connection(s, c);
  const Substitution psi = power(s, c.order);
  const Word r0 = first_return(c, RayStream(psi, c.v));

  // Closure in index order: new pieces of ψ(r) get the next free index, which
  // reproduces leftmost-occurrence order along u·x.
  std::vector<Word> returns{r0};
  std::unordered_map<Word, std::size_t, WordHash> index{{r0, 0}};
  std::vector<Word> images;
  for (std::size_t i = 0; i < returns.size(); ++i) {
    const Word img = psi.apply(returns[i]);
    const auto pieces = split_at_cuts(c.u, c.v, img);
    if (!pieces) throw InvariantError("image of a return word does not split at occurrences of uv");
    Word coded;
    coded.reserve(pieces->size());
    for (const Word& p : *pieces) {
      auto [it, added] = index.emplace(p, returns.size());
      if (added) returns.push_back(p);
      coded.push_back(static_cast<Letter>(it->second));
    }
    images.push_back(std::move(coded));
  }

  ReturnData rd{c, std::move(returns), Substitution(std::move(images)), 0, false};

  // The derived fixed point must meet its letters in order 0, 1, 2, ...
  {
    if (rd.derived.image(0).front() != 0) throw InvariantError("derived image of 0 must start with 0");
    std::vector<bool> seen(rd.returns.size(), false);
    std::size_t next_new = 0, expanded = 1;
    Word z = rd.derived.image(0);
    for (std::size_t pos = 0; next_new < rd.returns.size(); ++pos) {
      while (z.size() <= pos) {
        if (expanded >= z.size()) throw InvariantError("derived fixed point stalls before meeting every letter");
        const Word& img = rd.derived.image(z[expanded++]);
        z.insert(z.end(), img.begin(), img.end());
      }
      const Letter a = z[pos];
      if (seen[a]) continue;
      if (a != next_new) throw InvariantError("derived letters do not first occur in index order");
      seen[a] = true;
      ++next_new;
    }
  }

  if (auto consumed = confirm_order(c, rd.returns, RayStream(psi, c.v))) {
    rd.streamed_letters = *consumed;
    rd.stream_confirmed = true;
  }
  return rd;
}

ReturnData return_substitution(const Substitution& s, const Connection& c) {
  ReturnData rd = return_words(s, c);
  const Substitution psi = power(s, c.order);
  for (Letter i = 0; i < rd.derived.size(); ++i)
    if (psi.apply(rd.returns[i]) != theta_apply(rd, rd.derived.image(i)))
      throw InvariantError("conjugacy identity fails on a derived letter");
  if (!is_primitive_substitution(rd.derived)) throw InvariantError("derived substitution is not primitive");
  return rd;
}

Word theta_apply(const ReturnData& rd, std::span<const Letter> w) {
  Word out;
  for (Letter i : w) {
    const Word& r = rd.returns.at(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

IntMatrix theta_incidence(const ReturnData& rd, std::size_t alphabet_size) {
  return incidence_matrix(std::span<const Word>(rd.returns), alphabet_size);
}

std::optional<Word> decompose_over_returns(const ReturnData& rd, std::span<const Letter> w) {
  const auto pieces = split_at_cuts(rd.connection.u, rd.connection.v, w);
  if (!pieces) return std::nullopt;
  Word coded;
  for (const Word& p : *pieces) {
    auto it = std::find(rd.returns.begin(), rd.returns.end(), p);
    if (it == rd.returns.end()) return std::nullopt;
    coded.push_back(static_cast<Letter>(it - rd.returns.begin()));
  }
  return coded;
}

}  // namespace schutz
