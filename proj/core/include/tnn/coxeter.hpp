#pragma once

// Finite Coxeter/Weyl group arithmetic. A CoxeterSystem enumerates its whole
// group once at construction; elements are then small handles into the
// system's tables, ordered ShortLex by their normal forms.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tnn {

/// A word in the Coxeter generators, using 1-based generator indices.
using Word = std::vector<int>;

std::string format_word(std::span<const int> word);

struct CoxeterType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  [[nodiscard]] std::string label() const;
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Parses labels such as "A3", "B2", "E6", "G2".
CoxeterType parse_type(std::string_view label);
CoxeterType make_type(char family, int rank);

/// Order of the finite Weyl group of the given type (saturating at UINT64_MAX).
std::uint64_t weyl_group_order(const CoxeterType& type);

class CoxeterSystem;

class Element {
 public:
  Element() = default;

  [[nodiscard]] std::uint32_t index() const noexcept { return index_; }
  [[nodiscard]] std::uint32_t system_tag() const noexcept { return tag_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  friend class CoxeterSystem;
  Element(std::uint32_t index, std::uint32_t tag) : index_(index), tag_(tag) {}

  std::uint32_t index_ = 0;
  std::uint32_t tag_ = 0;
};

struct Reflection {
  Element element;
  Word as_word;  // palindromic reduced word u s u^-1
};

struct BuildOptions {
  std::uint64_t max_order = 40320;
};

class CoxeterSystem {
 public:
  static CoxeterSystem build(const CoxeterType& type, const BuildOptions& options = {});
  static CoxeterSystem build(std::string_view label, const BuildOptions& options = {});

  [[nodiscard]] const CoxeterType& type() const noexcept { return type_; }
  [[nodiscard]] std::string label() const { return type_.label(); }
  [[nodiscard]] int rank() const noexcept { return type_.rank; }
  [[nodiscard]] std::size_t order() const noexcept { return words_.size(); }
  [[nodiscard]] std::size_t num_reflections() const noexcept { return reflections_.size(); }

  /// m(i,j), 0-based indices into an n x n matrix.
  [[nodiscard]] const std::vector<std::vector<int>>& coxeter_matrix() const noexcept {
    return coxeter_matrix_;
  }
  [[nodiscard]] const std::vector<std::vector<int>>& cartan_matrix() const noexcept {
    return cartan_matrix_;
  }

  [[nodiscard]] Element identity() const { return Element(0, tag_); }
  [[nodiscard]] Element generator(int s) const;
  [[nodiscard]] Element longest() const { return Element(longest_, tag_); }
  [[nodiscard]] Element element(std::size_t index) const;
  [[nodiscard]] std::vector<Element> elements() const;

  [[nodiscard]] Element multiply(Element a, Element b) const;
  [[nodiscard]] Element inverse(Element a) const;
  [[nodiscard]] int length(Element a) const;
  /// ShortLex-least reduced word.
  [[nodiscard]] const Word& normal_form(Element a) const;

  [[nodiscard]] Element right_multiply(Element a, int s) const;
  [[nodiscard]] Element left_multiply(int s, Element a) const;
  [[nodiscard]] bool is_right_descent(Element a, int s) const;
  [[nodiscard]] bool is_left_descent(int s, Element a) const;

  /// Product of an arbitrary (not necessarily reduced) word.
  [[nodiscard]] Element evaluate(std::span<const int> word) const;
  [[nodiscard]] bool is_reduced(std::span<const int> word) const;

  /// All reflections, ordered by element index (ShortLex).
  [[nodiscard]] const std::vector<Reflection>& reflections() const noexcept { return reflections_; }
  [[nodiscard]] bool is_reflection(Element a) const;

  /// {"type":"A3","order":24,"longest_word":[...]}
  [[nodiscard]] std::string to_json() const;

  /// Throws SystemMismatch if `a` was not produced by this system.
  void check(Element a) const;
  void check_generator(int s) const;

 private:
  CoxeterSystem() = default;

  CoxeterType type_;
  std::uint32_t tag_ = 0;
  std::vector<std::vector<int>> coxeter_matrix_;
  std::vector<std::vector<int>> cartan_matrix_;
  std::vector<Word> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> right_;  // right_[i * rank + s - 1]
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> inverse_;
  std::vector<char> is_reflection_;
  std::vector<Reflection> reflections_;
  std::uint32_t longest_ = 0;
};

/// Every reduced word for `w`, sorted lexicographically.
std::vector<Word> all_reduced_words(const CoxeterSystem& system, Element w,
                                    std::size_t max_length = 12);

}  // namespace tnn
