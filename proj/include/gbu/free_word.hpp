#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gbu {

template <class Gen>
struct Letter {
  Gen gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word over the alphabet `Gen`.
///
/// Every mutating operation keeps the word reduced, so two words are equal
/// as group elements of the free group iff they compare equal.
template <class Gen>
class Word {
 public:
  using letter_type = Letter<Gen>;

  Word() = default;
  Word(std::initializer_list<letter_type> letters) {
    for (const auto& l : letters) push_back(l);
  }
  explicit Word(const std::vector<letter_type>& letters) {
    for (const auto& l : letters) push_back(l);
  }

  static Word generator(Gen g, int exp = 1) {
    Word w;
    w.push_back({std::move(g), exp});
    return w;
  }

  void push_back(const letter_type& l) {
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  Word& operator*=(const Word& rhs) {
    for (const auto& l : rhs.letters_) push_back(l);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word pow(int n) const {
    Word base = n < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) out *= base;
    return out;
  }

  /// Extends `image: Gen -> Word<Out>` to a homomorphism and applies it.
  template <class F>
  auto map(F&& image) const {
    using Out = std::decay_t<decltype(image(std::declval<const Gen&>()))>;
    Out out;
    for (const auto& l : letters_) {
      Out g = image(l.gen);
      out *= (l.exp > 0 ? g : g.inverse());
    }
    return out;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<letter_type>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Sum of exponents of `g`.
  int exponent_sum(const Gen& g) const {
    int s = 0;
    for (const auto& l : letters_)
      if (l.gen == g) s += l.exp;
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<letter_type> letters_;
};

/// Renders `w` as `g1*g2^-1*...`, with `1` for the identity.
template <class Gen, class Name>
std::string format_word(const Word<Gen>& w, Name&& name) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += '*';
    s += name(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace gbu
